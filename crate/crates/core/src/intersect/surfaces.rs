//! Compact toric surfaces over the exceptional rays of a resolution.

use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::fan::cones_by_ray;
use crate::lattice::{LatticeVector, Point2};
use crate::resolve::Resolution;

use super::{compact_wall_relations, WallRelation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceLabel {
    ProjectivePlane,
    /// Hirzebruch surface `F_a`.
    Hirzebruch(u64),
    /// Any other smooth toric surface, given by its self-intersection cycle.
    Other(Vec<i64>),
}

impl fmt::Display for SurfaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceLabel::ProjectivePlane => write!(f, "P²"),
            SurfaceLabel::Hirzebruch(a) => write!(f, "F_{a}"),
            SurfaceLabel::Other(cycle) => {
                let parts: Vec<String> = cycle.iter().map(|b| b.to_string()).collect();
                write!(f, "smooth toric surface, cycle ({})", parts.join(","))
            }
        }
    }
}

/// A torus-invariant curve on an exceptional surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCurve {
    /// Ray index of the neighbouring ray cutting out the curve.
    pub neighbor: usize,
    /// Self-intersection of the curve inside the surface.
    pub self_intersection: i64,
    /// Intersection of the surface's own divisor with the curve.
    pub center_pairing: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalSurface {
    /// Ray index of the exceptional divisor.
    pub ray: usize,
    pub generator: LatticeVector,
    pub label: SurfaceLabel,
    /// Boundary curves in counter-clockwise order, starting at the smallest neighbour index.
    pub boundary: Vec<BoundaryCurve>,
    /// Ray indices of exceptional surfaces meeting this one along a curve.
    pub glued_to: Vec<usize>,
}

impl ExceptionalSurface {
    pub fn self_intersections(&self) -> Vec<i64> {
        self.boundary.iter().map(|c| c.self_intersection).collect()
    }

    /// Self-intersection of the curve shared with the divisor of ray `other`.
    pub fn curve_self_intersection(&self, other: usize) -> Option<i64> {
        self.boundary.iter().find(|c| c.neighbor == other).map(|c| c.self_intersection)
    }

    /// Number of torus-fixed points, equal to the number of boundary curves.
    pub fn euler_number(&self) -> usize {
        self.boundary.len()
    }
}

fn label_of(cycle: &[i64]) -> SurfaceLabel {
    if cycle == [1, 1, 1] {
        return SurfaceLabel::ProjectivePlane;
    }
    if cycle.len() == 4 {
        for shift in 0..4 {
            let c: Vec<i64> = (0..4).map(|i| cycle[(i + shift) % 4]).collect();
            if c[0] == 0 && c[2] == 0 && c[1] == -c[3] {
                return SurfaceLabel::Hirzebruch(c[1].unsigned_abs());
            }
        }
    }
    SurfaceLabel::Other(cycle.to_vec())
}

fn cross(a: &Point2, b: &Point2) -> num_bigint::BigInt {
    &a.x * &b.y - &a.y * &b.x
}

/// Neighbouring rays of `center` in counter-clockwise cyclic order around it.
fn link_cycle(r: &Resolution, center: usize, cones: &[usize]) -> Vec<usize> {
    let fan = r.fan();
    let edges: Vec<[usize; 2]> = cones
        .iter()
        .map(|&c| {
            let others: Vec<usize> = fan.cones()[c].iter().copied().filter(|&x| x != center).collect();
            [others[0], others[1]]
        })
        .collect();
    let origin = fan.rays()[center].slice();
    let rel = |i: usize| &fan.rays()[i].slice() - &origin;
    let start = *edges.iter().flatten().min().expect("interior ray has a link");
    let mut cycle = vec![start];
    let mut used = vec![false; edges.len()];
    loop {
        let last = *cycle.last().unwrap();
        // the next neighbour is counter-clockwise from the last one
        let next = edges.iter().enumerate().find_map(|(e, pair)| {
            if used[e] || !pair.contains(&last) {
                return None;
            }
            let other = if pair[0] == last { pair[1] } else { pair[0] };
            (cross(&rel(last), &rel(other)) > num_bigint::BigInt::zero()).then_some((e, other))
        });
        match next {
            Some((e, other)) => {
                used[e] = true;
                if other == start {
                    break;
                }
                cycle.push(other);
            }
            None => break,
        }
    }
    debug_assert!(used.iter().all(|&u| u), "link of an interior ray is a closed cycle");
    cycle
}

/// `u_{j-1} + u_{j+1} + b_j u_j = 0` in the quotient lattice.
fn self_intersection(prev: &Point2, cur: &Point2, next: &Point2) -> i64 {
    let s = prev + next;
    let b = if !cur.x.is_zero() { -&s.x / &cur.x } else { -&s.y / &cur.y };
    debug_assert!(&s.x + &b * &cur.x == num_bigint::BigInt::zero());
    debug_assert!(&s.y + &b * &cur.y == num_bigint::BigInt::zero());
    b.to_i64().expect("small self-intersection")
}

/// The exceptional surfaces of `r`, in the order of `interior_ray_indices`.
pub fn exceptional_surfaces(r: &Resolution) -> Vec<ExceptionalSurface> {
    let fan = r.fan();
    let by_ray = cones_by_ray(fan);
    let interior = r.interior_ray_indices();
    let relations: Vec<WallRelation> = compact_wall_relations(r);
    interior
        .iter()
        .map(|&center| {
            let cycle = link_cycle(r, center, &by_ray[&center]);
            let origin = fan.rays()[center].slice();
            let rel: Vec<Point2> = cycle.iter().map(|&i| &fan.rays()[i].slice() - &origin).collect();
            let len = cycle.len();
            let boundary: Vec<BoundaryCurve> = (0..len)
                .map(|j| {
                    let b = self_intersection(&rel[(j + len - 1) % len], &rel[j], &rel[(j + 1) % len]);
                    let gens = [center.min(cycle[j]), center.max(cycle[j])];
                    let wall = relations.iter().find(|w| w.generators == gens).expect("interior edge is compact");
                    BoundaryCurve { neighbor: cycle[j], self_intersection: b, center_pairing: wall.pairing(center) }
                })
                .collect();
            let cycle_b: Vec<i64> = boundary.iter().map(|c| c.self_intersection).collect();
            debug_assert_eq!(cycle_b.iter().sum::<i64>(), 12 - 3 * len as i64);
            let mut glued_to: Vec<usize> = cycle.iter().copied().filter(|i| interior.contains(i)).collect();
            glued_to.sort();
            ExceptionalSurface {
                ray: center,
                generator: fan.rays()[center].clone(),
                label: label_of(&cycle_b),
                boundary,
                glued_to,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::canonical_form;
    use crate::resolve::{crepant_resolution, enumerate_crepant_resolutions, DEFAULT_ENUM_BOUND};

    #[test]
    fn c31_surfaces() {
        let rs = enumerate_crepant_resolutions(&canonical_form(3, 1).unwrap(), DEFAULT_ENUM_BOUND).unwrap();
        let first = exceptional_surfaces(&rs[0]);
        assert_eq!(first.len(), 2);
        for s in &first {
            assert_eq!(s.label, SurfaceLabel::Hirzebruch(1));
            assert_eq!(s.glued_to.len(), 1);
        }
        let second = exceptional_surfaces(&rs[1]);
        for s in &second {
            assert_eq!(s.label, SurfaceLabel::ProjectivePlane);
            assert!(s.glued_to.is_empty());
            assert_eq!(s.self_intersections(), vec![1, 1, 1]);
        }
    }

    #[test]
    fn noether_sum_rule() {
        for n in 2..=12i64 {
            for k in 1..n {
                let Ok(c) = canonical_form(n, k) else { continue };
                for r in enumerate_crepant_resolutions(&c, 7).unwrap_or_default() {
                    for s in exceptional_surfaces(&r) {
                        let len = s.euler_number() as i64;
                        assert_eq!(s.self_intersections().iter().sum::<i64>(), 12 - 3 * len);
                        assert!(len >= 3);
                    }
                }
            }
        }
    }

    #[test]
    fn boundary_starts_at_smallest_neighbour() {
        let r = crepant_resolution(&canonical_form(7, 3).unwrap(), None).unwrap();
        for s in exceptional_surfaces(&r) {
            let first = s.boundary[0].neighbor;
            assert!(s.boundary.iter().all(|c| c.neighbor >= first));
        }
    }

    #[test]
    fn labels() {
        assert_eq!(label_of(&[1, 1, 1]), SurfaceLabel::ProjectivePlane);
        assert_eq!(label_of(&[-2, 0, 2, 0]), SurfaceLabel::Hirzebruch(2));
        assert_eq!(label_of(&[0, 0, 0, 0]), SurfaceLabel::Hirzebruch(0));
        assert_eq!(label_of(&[-1, -1, 0, -1, 0]).to_string(), "smooth toric surface, cycle (-1,-1,0,-1,0)");
        assert_eq!(SurfaceLabel::Hirzebruch(1).to_string(), "F_1");
    }
}
