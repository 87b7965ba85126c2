//! Classification of cyclic hyperconifold singularities.
//!
//! A class `C_{n,k}` is the quotient of the conifold `y1 y4 - y2 y3 = 0` by
//! `(y1, y2, y3, y4) -> (ζ y1, ζ^k y2, ζ^-k y3, ζ^-1 y4)`. Classes are stored
//! in normal form: `k` is the smallest element of the orbit `{±k^±1 mod n}`.
//! The conifold itself is the class `(1, 0)`.

mod exceptional;
mod matrix;

pub use exceptional::{exceptional_scan, ExceptionalClass, ExceptionalScan, ExchangeAction};
pub use matrix::{
    identify_from_matrix, identify_from_matrix_with_bound, matrix_for_weights, verify_matrix_action, IntMatrix4,
    MatrixIdentification, DEFAULT_ORDER_BOUND,
};

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::fan::{Fan, ToricDiagram};
use crate::lattice::LatticeVector;

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(n as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(n as i128) as u64)
}

fn reduce(v: i64, n: u64) -> u64 {
    v.rem_euclid(n as i64) as u64
}

fn check_order(n: i64) -> Result<u64> {
    if n <= 0 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(n as u64)
}

/// The isomorphism class `C_{n,k}` of a cyclic hyperconifold.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperconifoldClass {
    n: u64,
    k: u64,
    orbit: Vec<u64>,
}

impl HyperconifoldClass {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The canonical representative: the smallest residue in the orbit.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// The residues `{k, n-k, k^-1, n-k^-1}`, sorted and deduplicated.
    pub fn orbit(&self) -> &[u64] {
        &self.orbit
    }

    pub fn is_conifold(&self) -> bool {
        self.n == 1
    }

    pub fn lens_label(&self) -> String {
        format!("L({},{})", self.n, self.k)
    }

    /// Generators of the parallelogram cone in cyclic order
    /// `(1,0,0), (1,1,0), (1,k+1,n), (1,k,n)`.
    pub fn cone_generators(&self) -> [LatticeVector; 4] {
        let (n, k) = (self.n as i64, self.k as i64);
        [
            LatticeVector::new(1, 0, 0),
            LatticeVector::new(1, 1, 0),
            LatticeVector::new(1, k + 1, n),
            LatticeVector::new(1, k, n),
        ]
    }

    /// The fan of the singularity: one four-generator cone and its faces.
    pub fn fan(&self) -> Fan {
        Fan::single_cone(self.cone_generators().to_vec()).expect("parallelogram cone is valid")
    }

    pub fn diagram(&self) -> ToricDiagram {
        self.fan().height_one_slice().expect("parallelogram cone has height one")
    }
}

impl std::fmt::Display for HyperconifoldClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "C_{{{},{}}}", self.n, self.k)
    }
}

/// The orbit `{±k^±1 mod n}` of a residue coprime to `n`.
fn orbit_of(n: u64, k: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    let inv = mod_inverse(k, n).expect("coprime residue");
    let set: BTreeSet<u64> = [k, (n - k) % n, inv, (n - inv) % n].into_iter().collect();
    set.into_iter().collect()
}

/// The normal form of `C_{n,k}`.
pub fn canonical_form(n: i64, k: i64) -> Result<HyperconifoldClass> {
    let n = check_order(n)?;
    let r = reduce(k, n);
    if r.gcd(&n) != 1 {
        return Err(Error::NotCoprime { n, k: r });
    }
    let orbit = orbit_of(n, r);
    Ok(HyperconifoldClass { n, k: orbit[0], orbit })
}

/// Whether `C_{n,k} ≅ C_{n,k2}`, equivalently `L(n,k) ≅ L(n,k2)`.
pub fn lens_equivalent(n: i64, k: i64, k2: i64) -> Result<bool> {
    Ok(canonical_form(n, k)? == canonical_form(n, k2)?)
}

/// The toric diagram of `C_{n,k}` for a parameter pair already in range.
pub fn diagram_of(n: i64, k: i64) -> Result<ToricDiagram> {
    let nn = check_order(n)?;
    let valid_range = if nn == 1 { k == 0 } else { 0 < k && (k as u64) < nn };
    if !valid_range {
        return Err(Error::InvalidClass {
            n: nn,
            k: k.unsigned_abs(),
            reason: "k must satisfy 0 <= k < n (k = 0 only for n = 1)".into(),
        });
    }
    canonical_form(n, k)?;
    let fan = Fan::single_cone(vec![
        LatticeVector::new(1, 0, 0),
        LatticeVector::new(1, 1, 0),
        LatticeVector::new(1, k + 1, n),
        LatticeVector::new(1, k, n),
    ])?;
    fan.height_one_slice()
}

/// A diagonal `Z_n` action on `(y1, y2, y3, y4)` by phases `ζ^{a_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalAction {
    n: u64,
    weights: [u64; 4],
}

impl DiagonalAction {
    pub fn new(n: i64, weights: [i64; 4]) -> Result<Self> {
        let n = check_order(n)?;
        Ok(DiagonalAction { n, weights: weights.map(|w| reduce(w, n)) })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn weights(&self) -> [u64; 4] {
        self.weights
    }

    /// Both monomials of `y1 y4 - y2 y3` transform trivially.
    pub fn preserves_polynomial(&self) -> bool {
        let [a1, a2, a3, a4] = self.weights;
        (a1 + a4) % self.n == 0 && (a2 + a3) % self.n == 0
    }

    /// Every coordinate axis is moved by a primitive root of unity.
    pub fn is_isolated(&self) -> bool {
        self.weights.iter().all(|a| a.gcd(&self.n) == 1)
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().sum::<u64>() % self.n
    }

    /// The class of the action, if it defines a hyperconifold.
    pub fn class(&self) -> Option<HyperconifoldClass> {
        if !self.preserves_polynomial() || !self.is_isolated() {
            return None;
        }
        let n = self.n;
        // Pass to the generator power acting on y1 by ζ.
        let inv = mod_inverse(self.weights[0], n)?;
        let k = (self.weights[1] * inv) % n;
        canonical_form(n as i64, k as i64).ok()
    }
}

/// The class of the action `ζ^{a_i}` on `y_i`, or `None` when it fails to
/// preserve the conifold equation or to act with isolated fixed point.
pub fn validate_weights(n: i64, weights: [i64; 4]) -> Result<Option<HyperconifoldClass>> {
    Ok(DiagonalAction::new(n, weights)?.class())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::PointKind;
    use crate::lattice::Point2;
    use proptest::prelude::*;

    fn coprime_pairs(max_n: u64) -> impl Iterator<Item = (u64, u64)> {
        (2..=max_n).flat_map(|n| (1..n).filter(move |k| k.gcd(&n) == 1).map(move |k| (n, k)))
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_form(5, 3).unwrap();
        assert_eq!((c.n(), c.k(), c.orbit()), (5, 2, &[2, 3][..]));
        let c = canonical_form(8, 5).unwrap();
        assert_eq!((c.k(), c.orbit()), (3, &[3, 5][..]));
        assert_eq!(canonical_form(8, 1).unwrap().orbit(), &[1, 7]);
        assert_ne!(canonical_form(8, 1).unwrap(), canonical_form(8, 3).unwrap());
        assert_ne!(canonical_form(5, 1).unwrap(), canonical_form(5, 2).unwrap());
        let c = canonical_form(1, 0).unwrap();
        assert_eq!((c.n(), c.k(), c.orbit()), (1, 0, &[0][..]));
        assert!(c.is_conifold());
        assert_eq!(canonical_form(6, 2), Err(Error::NotCoprime { n: 6, k: 2 }));
        assert_eq!(canonical_form(0, 1), Err(Error::InvalidOrder(0)));
        assert_eq!(canonical_form(7, -2).unwrap(), canonical_form(7, 2).unwrap());
    }

    #[test]
    fn lens_examples() {
        assert!(lens_equivalent(7, 2, 3).unwrap());
        assert!(!lens_equivalent(7, 1, 2).unwrap());
        assert!(lens_equivalent(9, 4, 4).unwrap());
        assert!(lens_equivalent(6, 2, 1).is_err());
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        for (n, k) in coprime_pairs(50) {
            let c = canonical_form(n as i64, k as i64).unwrap();
            let inv = mod_inverse(k, n).unwrap();
            assert_eq!(c, canonical_form(n as i64, (n - k) as i64).unwrap());
            assert_eq!(c, canonical_form(n as i64, inv as i64).unwrap());
            assert_eq!(c.k(), *c.orbit().iter().min().unwrap());
            for &r in c.orbit() {
                assert!(c.orbit().contains(&((n - r) % n)));
                assert!(c.orbit().contains(&mod_inverse(r, n).unwrap()));
            }
        }
    }

    #[test]
    fn lens_equivalence_is_an_equivalence_relation() {
        for n in 2..=30u64 {
            let ks: Vec<i64> = (1..n).filter(|k| k.gcd(&n) == 1).map(|k| k as i64).collect();
            let eq = |a: i64, b: i64| lens_equivalent(n as i64, a, b).unwrap();
            for &a in &ks {
                assert!(eq(a, a));
                for &b in &ks {
                    assert_eq!(eq(a, b), eq(b, a));
                    if !eq(a, b) {
                        continue;
                    }
                    for &c in &ks {
                        if eq(b, c) {
                            assert!(eq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weight_validation() {
        assert_eq!(validate_weights(5, [1, 2, 3, 4]).unwrap(), Some(canonical_form(5, 2).unwrap()));
        assert_eq!(validate_weights(4, [1, 2, 2, 3]).unwrap(), None);
        assert_eq!(validate_weights(6, [1, 2, 3, 5]).unwrap(), None);
        assert!(validate_weights(0, [1, 1, 1, 1]).is_err());
        // A non-normalised generator: the cube of the C_{7,2} generator.
        assert_eq!(validate_weights(7, [3, 6, 1, 4]).unwrap(), Some(canonical_form(7, 2).unwrap()));
    }

    #[test]
    fn normal_form_weights_round_trip() {
        for (n, k) in coprime_pairs(40) {
            let (ni, ki) = (n as i64, k as i64);
            let action = DiagonalAction::new(ni, [1, ki, ni - ki, ni - 1]).unwrap();
            assert_eq!(action.weight_sum(), 0);
            assert_eq!(action.class(), Some(canonical_form(ni, ki).unwrap()));
        }
    }

    proptest! {
        #[test]
        fn valid_actions_are_gorenstein(n in 1i64..40, a in prop::array::uniform4(0i64..40)) {
            let action = DiagonalAction::new(n, a).unwrap();
            if action.class().is_some() {
                prop_assert_eq!(action.weight_sum(), 0);
            }
        }
    }

    #[test]
    fn diagrams() {
        let d = diagram_of(1, 0).unwrap();
        assert_eq!(d.vertices().len(), 4);
        assert!(d.interior_points().is_empty());

        let d = diagram_of(5, 2).unwrap();
        assert_eq!(d.vertices(), &[Point2::new(0, 0), Point2::new(1, 0), Point2::new(3, 5), Point2::new(2, 5)]);
        assert_eq!(d.interior_points().len(), 4);
        assert_eq!(d.twice_area(), 10.into());

        let d = diagram_of(3, 1).unwrap();
        assert_eq!(d.points_of_kind(PointKind::Interior).len(), 2);
        assert!(diagram_of(6, 2).is_err());
        assert!(diagram_of(5, 7).is_err());
        assert!(diagram_of(2, 0).is_err());
    }

    #[test]
    fn diagrams_are_parallelograms_of_area_n() {
        for (n, k) in coprime_pairs(20) {
            let d = canonical_form(n as i64, k as i64).unwrap().diagram();
            assert_eq!(d.vertices().len(), 4);
            assert_eq!(d.twice_area(), (2 * n).into());
            assert_eq!(d.interior_points().len() as u64, n - 1);
        }
    }
}
