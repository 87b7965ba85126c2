//! Serializable report types. Every payload round-trips through JSON.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{de::DeserializeOwned, Deserialize, Serialize};
use serde_json::Value;

use hyperconifold::classify::HyperconifoldClass;
use hyperconifold::intersect::{
    adjunction_check, exceptional_surfaces, local_ample_cone, triple_intersections, ConeDescription,
};
use hyperconifold::lattice::{Int, LatticeVector, Point2};
use hyperconifold::resolve::Resolution;
use hyperconifold::transition::{FiniteGroup, GroupIdentity, HodgeData};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope<P> {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub schema_version: u32,
    pub payload: P,
    pub warnings: Vec<String>,
}

impl<P: Serialize + DeserializeOwned> Envelope<P> {
    pub fn new(command: &str, inputs: BTreeMap<String, Value>, payload: P) -> Self {
        Envelope { command: command.into(), inputs, schema_version: SCHEMA_VERSION, payload, warnings: Vec::new() }
    }

    /// Pretty JSON with object keys sorted.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// A rational number as `"p/q"` in lowest terms.
pub fn rational(numer: i64, denom: i64) -> String {
    let r = num_rational::Ratio::new(numer, denom);
    format!("{}/{}", r.numer(), r.denom())
}

fn small(x: &Int) -> i64 {
    x.to_i64().expect("coordinate fits in i64")
}

pub fn point(p: &Point2) -> [i64; 2] {
    [small(&p.x), small(&p.y)]
}

pub fn vector(v: &LatticeVector) -> [i64; 3] {
    let c = v.coords();
    [small(&c[0]), small(&c[1]), small(&c[2])]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPair {
    pub n: u64,
    pub k: u64,
}

impl From<&HyperconifoldClass> for ClassPair {
    fn from(c: &HyperconifoldClass) -> Self {
        ClassPair { n: c.n(), k: c.k() }
    }
}

pub fn class_label(c: &HyperconifoldClass) -> String {
    if c.is_conifold() {
        "conifold".into()
    } else {
        c.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyPayload {
    pub input: ClassPair,
    pub canonical: ClassPair,
    pub label: String,
    pub orbit: Vec<u64>,
    pub lens_space: String,
    pub conifold: bool,
    pub diagram_vertices: Vec<[i64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramPointDto {
    pub x: i64,
    pub y: i64,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramPayload {
    pub class: ClassPair,
    pub vertices: Vec<[i64; 2]>,
    pub points: Vec<DiagramPointDto>,
    pub edges: Vec<[[i64; 2]; 2]>,
    pub triangles: Option<Vec<[[i64; 2]; 3]>>,
    pub resolution: Option<String>,
    pub twice_area: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityDto {
    /// `Σ coefficients[α] t_α > 0`.
    pub coefficients: Vec<i64>,
    pub wall: [[i64; 3]; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmpleConeDto {
    pub variables: Vec<String>,
    pub inequalities: Vec<InequalityDto>,
    pub empty: bool,
    pub no_local_divisors: bool,
    pub witness: Option<Vec<i64>>,
    pub extreme_rays: Option<Vec<Vec<i64>>>,
}

impl From<&ConeDescription> for AmpleConeDto {
    fn from(c: &ConeDescription) -> Self {
        AmpleConeDto {
            variables: c.variables.clone(),
            inequalities: c
                .inequalities
                .iter()
                .map(|i| InequalityDto {
                    coefficients: i.coefficients.clone(),
                    wall: [vector(&i.wall[0]), vector(&i.wall[1])],
                })
                .collect(),
            empty: c.is_empty(),
            no_local_divisors: c.has_no_local_divisors(),
            witness: c.witness.as_ref().map(|w| w.iter().map(small).collect()),
            extreme_rays: if c.is_empty() {
                None
            } else {
                c.extreme_rays().map(|rs| rs.iter().map(|r| r.iter().map(small).collect()).collect())
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDto {
    pub divisor: String,
    pub generator: [i64; 3],
    pub label: String,
    /// Self-intersections of the boundary curves in cyclic order.
    pub self_intersections: Vec<i64>,
    pub glued_to: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorEntry {
    /// 1-based divisor indices, ascending.
    pub divisors: [usize; 3],
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionDto {
    pub index: usize,
    pub verdict: String,
    pub projective: bool,
    pub built_by_star_sequence: bool,
    pub subdivision_history: Vec<[i64; 3]>,
    pub rays: Vec<[i64; 3]>,
    pub cones: Vec<[[i64; 3]; 3]>,
    pub cone_count: usize,
    pub smooth: bool,
    pub multiplicities: Vec<i64>,
    pub exceptional_divisors: Vec<[i64; 3]>,
    pub ample_cone: AmpleConeDto,
    pub surfaces: Vec<SurfaceDto>,
    pub triple_intersections: Vec<TensorEntry>,
    pub adjunction_holds: bool,
}

pub fn resolution_dto(index: usize, r: &Resolution) -> ResolutionDto {
    let fan = r.fan();
    let interior = r.interior_ray_indices();
    let divisor_name = |ray: usize| {
        let pos = interior.iter().position(|&i| i == ray).expect("exceptional ray");
        format!("t{}", pos + 1)
    };
    let cone = local_ample_cone(r);
    let verdict = if cone.has_no_local_divisors() {
        "no local ample divisors"
    } else if cone.is_empty() {
        "non-projective"
    } else {
        "projective"
    };
    let tensor = triple_intersections(r);
    ResolutionDto {
        index,
        verdict: verdict.into(),
        projective: !cone.is_empty(),
        built_by_star_sequence: r.built_by_star_sequence(),
        subdivision_history: r.history().iter().map(vector).collect(),
        rays: fan.rays().iter().map(vector).collect(),
        cones: fan
            .cones()
            .iter()
            .map(|c| [vector(&fan.rays()[c[0]]), vector(&fan.rays()[c[1]]), vector(&fan.rays()[c[2]])])
            .collect(),
        cone_count: fan.maximal_cone_count(),
        smooth: fan.is_smooth(),
        multiplicities: fan.multiplicities().iter().map(|m| m.as_ref().map_or(0, small)).collect(),
        exceptional_divisors: interior.iter().map(|&i| vector(&fan.rays()[i])).collect(),
        ample_cone: AmpleConeDto::from(&cone),
        surfaces: exceptional_surfaces(r)
            .iter()
            .map(|s| SurfaceDto {
                divisor: divisor_name(s.ray),
                generator: vector(&s.generator),
                label: s.label.to_string(),
                self_intersections: s.self_intersections(),
                glued_to: s.glued_to.iter().map(|&i| divisor_name(i)).collect(),
            })
            .collect(),
        triple_intersections: tensor
            .nonzero()
            .map(|(idx, value)| TensorEntry { divisors: [idx[0] + 1, idx[1] + 1, idx[2] + 1], value })
            .collect(),
        adjunction_holds: adjunction_check(r),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvePayload {
    pub class: ClassPair,
    pub enumerated: bool,
    pub enum_bound: Option<u64>,
    pub resolution_count: usize,
    pub projective_count: usize,
    pub resolutions: Vec<ResolutionDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDto {
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub coefficient: i64,
    pub x: u64,
    pub y: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDto {
    pub index: u64,
    /// `y = exp(2πi · y_phase)`.
    pub y_phase: String,
    pub u: i64,
    pub v: i64,
    pub x: i64,
    pub y: ComplexDto,
    pub factors_vanish_exactly: bool,
    pub hessian_det: ComplexDto,
    pub hessian_abs: String,
    pub nondegenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSearchDto {
    pub grid: usize,
    pub starts: usize,
    pub converged: usize,
    pub clusters: usize,
    pub matches_certificates: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorPayload {
    pub class: ClassPair,
    pub polynomial: String,
    pub terms: Vec<TermDto>,
    pub factors: [String; 2],
    pub newton_polygon: Vec<[i64; 2]>,
    pub factor_singularities_excluded: bool,
    pub node_count: usize,
    pub nodes: Vec<NodeDto>,
    pub independent_search: NodeSearchDto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDto {
    pub h11: u64,
    pub h21: u64,
    pub euler: i64,
}

impl From<HodgeData> for HodgeDto {
    fn from(h: HodgeData) -> Self {
        HodgeDto { h11: h.h11, h21: h.h21, euler: h.euler() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDto {
    pub order: usize,
    pub label: String,
    pub abelian_invariants: Option<Vec<usize>>,
    /// `[element order, count]` pairs.
    pub order_histogram: Vec<[usize; 2]>,
}

impl From<&GroupIdentity> for GroupDto {
    fn from(g: &GroupIdentity) -> Self {
        GroupDto {
            order: g.order,
            label: g.label.clone(),
            abelian_invariants: g.abelian_invariants.clone(),
            order_histogram: g.histogram.iter().map(|&(o, c)| [o, c]).collect(),
        }
    }
}

/// 1-based Cayley table.
pub fn cayley_one_based(g: &FiniteGroup) -> Vec<Vec<usize>> {
    g.cayley().iter().map(|row| row.iter().map(|x| x + 1).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionPayload {
    pub class: ClassPair,
    pub before: HodgeDto,
    pub after: HodgeDto,
    pub euler_change: i64,
    pub group_before: GroupDto,
    pub seeds: Vec<String>,
    pub normal_closure: Vec<String>,
    pub fundamental_group_after: GroupDto,
    pub quotient_cayley: Vec<Vec<usize>>,
    pub resolution: ResolutionDto,
    pub mixed_intersections: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifyPayload {
    pub matrix: [[i64; 4]; 4],
    pub order: u64,
    pub exponents: [u64; 4],
    pub weights: [u64; 4],
    /// `[d, multiplicity]` for each cyclotomic factor Φ_d of the characteristic polynomial.
    pub cyclotomic_factors: Vec<[u64; 2]>,
    pub class: ClassPair,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalClassDto {
    pub representative: [u64; 2],
    pub members: Vec<[u64; 2]>,
    pub action: String,
    pub order: u64,
    pub p_phase: String,
    pub omega_phase: String,
    pub p_sign: i64,
    pub omega_sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanPayload {
    pub n_max: u64,
    pub candidates: usize,
    pub survivors: Vec<[u64; 2]>,
    pub classes: Vec<ExceptionalClassDto>,
}
