use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad category of a failure, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The caller supplied invalid data.
    InvalidInput,
    /// A configured size bound was exceeded.
    ResourceBound,
    /// The input is well formed but the requested construction does not apply.
    DomainPrecondition,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero vector has no primitive")]
    ZeroVector,
    #[error("degenerate diagram: points are collinear")]
    DegenerateDiagram,
    #[error("multiplicity defined for full-dimensional cones only")]
    NotFullDimensional,
    #[error("lattice vector {0} is not primitive")]
    NotPrimitive(String),
    #[error("lattice vector {0} lies outside the support of the fan")]
    OutsideSupport(String),
    #[error("fan is not crepant-compatible: {0}")]
    NotCrepantCompatible(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("group order must be positive, got {0}")]
    InvalidOrder(i64),
    #[error("k must be relatively prime to n (n = {n}, k = {k})")]
    NotCoprime { n: u64, k: u64 },
    #[error("invalid hyperconifold parameters (n = {n}, k = {k}): {reason}")]
    InvalidClass { n: u64, k: u64, reason: String },
    #[error("matrix has no finite order up to bound {bound}")]
    InfiniteOrder { bound: u64 },
    #[error("infinite family / trivial action: {0}")]
    TrivialAction(String),
    #[error("eigenvalues are not roots of unity: {0}")]
    NotRootOfUnity(String),
    #[error("action is not a hyperconifold action: {0}")]
    InvalidAction(String),

    #[error("invalid subdivision order: {0}")]
    InvalidPermutation(String),
    #[error("no interior points; use enumerate for small resolutions")]
    NoInteriorPoints,
    #[error("enumeration bound exceeded: n = {n} is larger than the bound {bound}")]
    EnumerationBound { n: u64, bound: u64 },

    #[error("curve is non-compact; no pairing table")]
    NonCompactWall,
    #[error("fan is not smooth: {0}")]
    NotSmooth(String),

    #[error("no modulus available to form the singularity (h21 = 0)")]
    NoModulus,
    #[error("invalid group element {0}")]
    InvalidElement(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("coset enumeration exceeded {limit} cosets")]
    CosetLimit { limit: usize },
    #[error("group order {order} exceeds the table limit {limit}")]
    GroupTooLarge { order: usize, limit: usize },
    #[error("malformed word: {0}")]
    MalformedWord(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::EnumerationBound { .. } | Error::CosetLimit { .. } | Error::GroupTooLarge { .. } => {
                ErrorKind::ResourceBound
            }
            Error::NoModulus | Error::NoInteriorPoints => ErrorKind::DomainPrecondition,
            _ => ErrorKind::InvalidInput,
        }
    }
}
