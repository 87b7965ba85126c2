//! Toric intersection theory on crepant resolutions: walls and their
//! relations, the local ample cone, exceptional surfaces and triple
//! intersection numbers of exceptional divisors.

pub mod cone;
mod surfaces;
mod tensor;

pub use surfaces::{exceptional_surfaces, BoundaryCurve, ExceptionalSurface, SurfaceLabel};
pub use tensor::{triple_intersections, IntersectionTensor};

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::classify::HyperconifoldClass;
use crate::error::{Error, Result};
use crate::lattice::{det3, Int, LatticeVector};
use crate::resolve::{enumerate_crepant_resolutions, Resolution};

/// A two-dimensional cone of a resolution fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    /// Ray indices, ascending.
    pub generators: [usize; 2],
    /// Maximal cones containing the wall.
    pub adjacent: Vec<usize>,
    /// The rays of the adjacent cones opposite the wall (compact walls only).
    pub opposite: Option<[usize; 2]>,
    /// Whether the torus-invariant curve of the wall is compact.
    pub compact: bool,
}

/// All walls of the resolution fan, sorted by generator indices.
pub fn walls(r: &Resolution) -> Vec<Wall> {
    let fan = r.fan();
    let mut map: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for (c, cone) in fan.cones().iter().enumerate() {
        for i in 0..cone.len() {
            for j in i + 1..cone.len() {
                let (a, b) = (cone[i].min(cone[j]), cone[i].max(cone[j]));
                map.entry([a, b]).or_default().push(c);
            }
        }
    }
    map.into_iter()
        .map(|(generators, adjacent)| {
            let compact = adjacent.len() == 2;
            let opposite = compact.then(|| {
                let other =
                    |c: usize| *fan.cones()[c].iter().find(|x| !generators.contains(x)).expect("simplicial cone");
                [other(adjacent[0]), other(adjacent[1])]
            });
            Wall { generators, adjacent, opposite, compact }
        })
        .collect()
}

/// The relation `u + u' + a w1 + b w2 = 0` of a compact wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallRelation {
    pub generators: [usize; 2],
    pub opposite: [usize; 2],
    pub a: i64,
    pub b: i64,
}

impl WallRelation {
    /// Intersection number of the divisor of ray `rho` with the wall's curve.
    pub fn pairing(&self, rho: usize) -> i64 {
        let mut v = 0;
        if self.opposite.contains(&rho) {
            v += if self.opposite[0] == self.opposite[1] { 2 } else { 1 };
        }
        if rho == self.generators[0] {
            v += self.a;
        }
        if rho == self.generators[1] {
            v += self.b;
        }
        v
    }
}

/// Solves the wall relation by Cramer's rule in the basis `(w1, w2, u)`.
pub fn wall_relation(r: &Resolution, w: &Wall) -> Result<WallRelation> {
    let opposite = match (w.compact, w.opposite) {
        (true, Some(o)) => o,
        _ => return Err(Error::NonCompactWall),
    };
    let rays = r.fan().rays();
    let (w1, w2) = (&rays[w.generators[0]], &rays[w.generators[1]]);
    let (u, u2) = (&rays[opposite[0]], &rays[opposite[1]]);
    let d = det3(w1, w2, u);
    if d.abs() != Int::from(1) {
        return Err(Error::NotSmooth(format!("cone over wall {:?} is not unimodular", w.generators)));
    }
    let s = -&(u + u2);
    let a = det3(&s, w2, u) / &d;
    let b = det3(w1, &s, u) / &d;
    let c = det3(w1, w2, &s) / &d;
    if !c.is_zero() {
        return Err(Error::NotCrepantCompatible(format!(
            "wall {:?} has no relation of the form u + u' + a w1 + b w2 = 0",
            w.generators
        )));
    }
    let rel = WallRelation {
        generators: w.generators,
        opposite,
        a: a.to_i64().expect("small coefficient"),
        b: b.to_i64().expect("small coefficient"),
    };
    debug_assert!({
        let lhs = &(&(u + u2) + &w1.scale(&Int::from(rel.a))) + &w2.scale(&Int::from(rel.b));
        lhs.is_zero()
    });
    Ok(rel)
}

/// Relations of all compact walls.
pub fn compact_wall_relations(r: &Resolution) -> Vec<WallRelation> {
    walls(r).iter().filter(|w| w.compact).map(|w| wall_relation(r, w).expect("resolution fans are smooth")).collect()
}

/// One strict inequality `Σ coefficients[α] t_α > 0` from a compact wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub coefficients: Vec<i64>,
    pub wall: [LatticeVector; 2],
}

/// The local ample cone of a resolution in the coordinates `t_α` of the
/// exceptional divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDescription {
    pub variables: Vec<String>,
    pub inequalities: Vec<Inequality>,
    /// An integer point of the cone, if the cone is nonempty.
    pub witness: Option<Vec<Int>>,
}

impl ConeDescription {
    pub fn is_empty(&self) -> bool {
        self.witness.is_none()
    }

    /// No exceptional divisors at all, so nothing can be locally ample.
    pub fn has_no_local_divisors(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.inequalities.iter().map(|i| i.coefficients.clone()).collect()
    }

    /// Distinct rows, in first-occurrence order.
    pub fn distinct_rows(&self) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        for r in self.rows() {
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    /// Extreme rays of the closure, when the closure is pointed.
    pub fn extreme_rays(&self) -> Option<Vec<Vec<Int>>> {
        cone::closure_extreme_rays(&self.distinct_rows(), self.variables.len())
    }

    /// Whether two nonempty pointed cones coincide, checked by mutual
    /// containment of extreme rays.
    pub fn same_cone_as(&self, rows: &[Vec<i64>]) -> bool {
        let dim = self.variables.len();
        let (Some(mine), Some(theirs)) = (self.extreme_rays(), cone::closure_extreme_rays(rows, dim)) else {
            return false;
        };
        mine.iter().all(|r| cone::closure_contains(rows, r))
            && theirs.iter().all(|r| cone::closure_contains(&self.distinct_rows(), r))
    }
}

/// `H_L · C_w > 0` for every compact wall `w`, with `H_L = Σ t_α E_α`.
pub fn local_ample_cone(r: &Resolution) -> ConeDescription {
    let interior = r.interior_ray_indices();
    let rays = r.fan().rays();
    let variables: Vec<String> = (1..=interior.len()).map(|i| format!("t{i}")).collect();
    let inequalities: Vec<Inequality> = compact_wall_relations(r)
        .iter()
        .map(|rel| Inequality {
            coefficients: interior.iter().map(|&alpha| rel.pairing(alpha)).collect(),
            wall: [rays[rel.generators[0]].clone(), rays[rel.generators[1]].clone()],
        })
        .collect();
    let rows: Vec<Vec<i64>> = inequalities.iter().map(|i| i.coefficients.clone()).collect();
    let witness = if variables.is_empty() { None } else { cone::interior_witness(&rows, variables.len()) };
    ConeDescription { variables, inequalities, witness }
}

/// The crepant resolutions of `c` that have a nonempty local ample cone.
pub fn projective_resolutions(c: &HyperconifoldClass, bound: u64) -> Result<Vec<Resolution>> {
    Ok(enumerate_crepant_resolutions(c, bound)?.into_iter().filter(|r| !local_ample_cone(r).is_empty()).collect())
}

/// Checks `E_α · C = -2 - C²` for every boundary curve `C` of every
/// exceptional surface `E_α`, with the left side from the three-dimensional
/// wall relation and `C²` from the two-dimensional star fan.
pub fn adjunction_check(r: &Resolution) -> bool {
    exceptional_surfaces(r).iter().all(|s| s.boundary.iter().all(|c| c.center_pairing == -2 - c.self_intersection))
}
