//! Crepant resolutions of `C_{n,k}`: the star-subdivision sequence through
//! the interior lattice points, and exhaustive enumeration of unimodular
//! triangulations of the diagram.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::classify::HyperconifoldClass;
use crate::error::{Error, Result};
use crate::fan::{polygons_meet_in_common_face, Fan};
use crate::lattice::{orient2, LatticeVector, Point2};

pub const DEFAULT_ENUM_BOUND: u64 = 6;

/// A triangle of the height-one slice, with its vertices sorted.
pub type Triangle = [Point2; 3];

/// A smooth crepant resolution of a hyperconifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    base: HyperconifoldClass,
    fan: Fan,
    history: Vec<LatticeVector>,
    built_by_star_sequence: bool,
}

impl Resolution {
    fn checked(base: HyperconifoldClass, fan: Fan, history: Vec<LatticeVector>, by_star: bool) -> Result<Self> {
        if let Err(reason) = fan.smoothness() {
            return Err(Error::NotSmooth(reason.to_string()));
        }
        if fan.rays().iter().any(|r| !r.coords()[0].is_one()) {
            return Err(Error::NotCrepantCompatible("a ray lies off the height-one hyperplane".into()));
        }
        if fan.maximal_cone_count() as u64 != 2 * base.n() {
            return Err(Error::InvalidFan(format!(
                "expected {} maximal cones, found {}",
                2 * base.n(),
                fan.maximal_cone_count()
            )));
        }
        Ok(Resolution { base, fan, history, built_by_star_sequence: by_star })
    }

    /// Lifts a unimodular triangulation of the diagram of `base` to a fan.
    pub fn from_triangulation(base: &HyperconifoldClass, triangles: &[Triangle]) -> Result<Self> {
        let mut rays: Vec<LatticeVector> = base.cone_generators().to_vec();
        let mut interior: Vec<Point2> = triangles.iter().flatten().cloned().collect();
        interior.sort_by(|a, b| (&a.y, &a.x).cmp(&(&b.y, &b.x)));
        interior.dedup();
        for p in interior {
            let v = LatticeVector::lift(&p);
            if !rays.contains(&v) {
                rays.push(v);
            }
        }
        let index = |p: &Point2| rays.iter().position(|r| r == &LatticeVector::lift(p)).expect("ray present");
        let cones = triangles
            .iter()
            .map(|t| {
                let (a, b, c) = (&t[0], &t[1], &t[2]);
                if orient2(a, b, c).is_negative() {
                    vec![index(a), index(c), index(b)]
                } else {
                    vec![index(a), index(b), index(c)]
                }
            })
            .collect();
        let fan = Fan::new(rays, cones)?;
        Resolution::checked(base.clone(), fan, Vec::new(), false)
    }

    pub fn base(&self) -> &HyperconifoldClass {
        &self.base
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    /// Star-subdivision centers in the order they were applied.
    pub fn history(&self) -> &[LatticeVector] {
        &self.history
    }

    pub fn built_by_star_sequence(&self) -> bool {
        self.built_by_star_sequence
    }

    /// The triangulation of the diagram, each triangle sorted, in sorted order.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out: Vec<Triangle> = self
            .fan
            .cones()
            .iter()
            .map(|c| {
                let mut t: Vec<Point2> = c.iter().map(|&r| self.fan.rays()[r].slice()).collect();
                t.sort();
                [t[0].clone(), t[1].clone(), t[2].clone()]
            })
            .collect();
        out.sort();
        out
    }

    /// Indices (into `fan().rays()`) of the exceptional rays, ordered by their
    /// last coordinate `m` as in `interior_points`.
    pub fn interior_ray_indices(&self) -> Vec<usize> {
        let points = interior_points(&self.base);
        points.iter().map(|p| self.fan.ray_index(p).expect("interior point is a ray")).collect()
    }

    pub fn euler_number(&self) -> usize {
        self.fan.maximal_cone_count()
    }
}

/// Euler number of a resolution: the number of maximal cones.
pub fn euler_number(r: &Resolution) -> usize {
    r.euler_number()
}

/// The `n - 1` lattice points `(1, l, m)`, `0 < m < n`, interior to the cone
/// of `C_{n,k}`, in ascending `m`.
pub fn interior_points(c: &HyperconifoldClass) -> Vec<LatticeVector> {
    let (n, k) = (c.n() as i64, c.k() as i64);
    (1..n).map(|m| LatticeVector::new(1, (k * m).div_euclid(n) + 1, m)).collect()
}

/// Resolves `C_{n,k}` by star subdivisions at the interior points.
///
/// `order` lists the 1-based positions of the interior points (ascending `m`)
/// in the order they are to be used; the default is ascending.
pub fn crepant_resolution(c: &HyperconifoldClass, order: Option<&[usize]>) -> Result<Resolution> {
    let points = interior_points(c);
    if points.is_empty() {
        return Err(Error::NoInteriorPoints);
    }
    let order: Vec<usize> = match order {
        None => (1..=points.len()).collect(),
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != (1..=points.len()).collect::<Vec<_>>() {
                return Err(Error::InvalidPermutation(format!("{o:?} is not a permutation of 1..={}", points.len())));
            }
            o.to_vec()
        }
    };
    let mut fan = c.fan();
    let mut history = Vec::with_capacity(order.len());
    for i in order {
        let v = &points[i - 1];
        fan = fan.star_subdivision(v)?;
        history.push(v.clone());
    }
    Resolution::checked(c.clone(), fan, history, true)
}

/// All unimodular triangulations of the lattice points of the diagram,
/// sorted lexicographically by triangle list.
pub fn enumerate_triangulations(c: &HyperconifoldClass) -> Vec<Vec<Triangle>> {
    let diagram = c.diagram();
    let points: Vec<Point2> = diagram.points().iter().map(|p| p.point.clone()).collect();
    let vertices = diagram.vertices();

    // Boundary edges between consecutive lattice points, oriented counter-clockwise.
    let mut open: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..vertices.len() {
        let (a, b) = (&vertices[i], &vertices[(i + 1) % vertices.len()]);
        let mut on_edge: Vec<usize> =
            (0..points.len()).filter(|&p| orient2(a, b, &points[p]).is_zero() && between(a, b, &points[p])).collect();
        on_edge.sort_by_key(|&p| {
            let d = &points[p] - a;
            let dir = b - a;
            d.x * &dir.x + d.y * &dir.y
        });
        for w in on_edge.windows(2) {
            open.insert((w[0], w[1]));
        }
    }

    let target = 2 * c.n() as usize;
    let mut found = BTreeSet::new();
    let mut placed: Vec<[usize; 3]> = Vec::new();
    advance(&points, &mut open, &mut placed, target, &mut found);
    found.into_iter().collect()
}

fn between(a: &Point2, b: &Point2, p: &Point2) -> bool {
    let in_range = |lo: &num_bigint::BigInt, hi: &num_bigint::BigInt, x: &num_bigint::BigInt| {
        (lo <= x && x <= hi) || (hi <= x && x <= lo)
    };
    in_range(&a.x, &b.x, &p.x) && in_range(&a.y, &b.y, &p.y)
}

fn sorted_triangle(points: &[Point2], t: &[usize; 3]) -> Triangle {
    let mut v = [points[t[0]].clone(), points[t[1]].clone(), points[t[2]].clone()];
    v.sort();
    v
}

/// Advancing-front search: the smallest open edge `(a, b)` has uncovered
/// area to its left, and every triangulation has exactly one triangle there.
fn advance(
    points: &[Point2],
    open: &mut BTreeSet<(usize, usize)>,
    placed: &mut Vec<[usize; 3]>,
    target: usize,
    found: &mut BTreeSet<Vec<Triangle>>,
) {
    let Some(&(a, b)) = open.iter().next() else {
        if placed.len() == target {
            let mut tris: Vec<Triangle> = placed.iter().map(|t| sorted_triangle(points, t)).collect();
            tris.sort();
            found.insert(tris);
        }
        return;
    };
    if placed.len() >= target {
        return;
    }
    for c in 0..points.len() {
        if !orient2(&points[a], &points[b], &points[c]).is_one() {
            continue;
        }
        let tri = [points[a].clone(), points[b].clone(), points[c].clone()];
        let fits = placed.iter().all(|t| {
            let other = [points[t[0]].clone(), points[t[1]].clone(), points[t[2]].clone()];
            polygons_meet_in_common_face(&tri, &other)
        });
        if !fits {
            continue;
        }
        let mut removed = vec![(a, b)];
        let mut added = Vec::new();
        for (x, y) in [(b, c), (c, a)] {
            if open.contains(&(x, y)) {
                removed.push((x, y));
            } else {
                added.push((y, x));
            }
        }
        for e in &removed {
            open.remove(e);
        }
        for e in &added {
            open.insert(*e);
        }
        placed.push([a, b, c]);
        advance(points, open, placed, target, found);
        placed.pop();
        for e in &added {
            open.remove(e);
        }
        for e in &removed {
            open.insert(*e);
        }
    }
}

/// Every crepant resolution of `C_{n,k}` for `n` up to `bound`.
pub fn enumerate_crepant_resolutions(c: &HyperconifoldClass, bound: u64) -> Result<Vec<Resolution>> {
    if c.n() > bound {
        return Err(Error::EnumerationBound { n: c.n(), bound });
    }
    let star = if c.n() >= 2 { Some(crepant_resolution(c, None)?) } else { None };
    enumerate_triangulations(c)
        .into_iter()
        .map(|tris| {
            let r = Resolution::from_triangulation(c, &tris)?;
            match &star {
                Some(s) if s.triangles() == tris => Ok(s.clone()),
                _ => Ok(r),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::canonical_form;

    fn class(n: i64, k: i64) -> HyperconifoldClass {
        canonical_form(n, k).unwrap()
    }

    fn p(x: i64, y: i64) -> Point2 {
        Point2::new(x, y)
    }

    fn tri(a: Point2, b: Point2, c: Point2) -> Triangle {
        let mut v = [a, b, c];
        v.sort();
        v
    }

    #[test]
    fn interior_point_examples() {
        assert_eq!(interior_points(&class(3, 1)), vec![LatticeVector::new(1, 1, 1), LatticeVector::new(1, 1, 2)]);
        assert_eq!(interior_points(&class(5, 2)).len(), 4);
        assert!(interior_points(&class(1, 0)).is_empty());
    }

    #[test]
    fn interior_points_match_the_diagram() {
        for n in 2..=20i64 {
            for k in 1..n {
                let Ok(c) = canonical_form(n, k) else { continue };
                let from_diagram: BTreeSet<Point2> = c.diagram().interior_points().into_iter().collect();
                let computed: BTreeSet<Point2> = interior_points(&c).iter().map(LatticeVector::slice).collect();
                assert_eq!(from_diagram, computed);
            }
        }
    }

    #[test]
    fn star_resolution_of_c_3_1() {
        let r = crepant_resolution(&class(3, 1), None).unwrap();
        let (a, b, c, d, pp, q) = (p(0, 0), p(1, 0), p(1, 3), p(2, 3), p(1, 1), p(1, 2));
        let mut expected = vec![
            tri(pp.clone(), a.clone(), b.clone()),
            tri(pp.clone(), b, d.clone()),
            tri(pp.clone(), d.clone(), q.clone()),
            tri(q.clone(), d, c.clone()),
            tri(pp, q.clone(), a.clone()),
            tri(q, c, a),
        ];
        expected.sort();
        assert_eq!(r.triangles(), expected);
        assert!(r.built_by_star_sequence());
        assert_eq!(r.euler_number(), 6);
    }

    #[test]
    fn star_resolutions_have_2n_smooth_cones() {
        for n in 2..=20i64 {
            for k in 1..n {
                let Ok(c) = canonical_form(n, k) else { continue };
                let r = crepant_resolution(&c, None).unwrap();
                assert_eq!(r.fan().maximal_cone_count() as i64, 2 * n);
                assert!(r.fan().is_smooth());
                assert_eq!(r.fan().rays().len() as i64, 4 + n - 1);
                r.fan().check_face_intersections().unwrap();
            }
        }
    }

    #[test]
    fn resolution_errors() {
        assert_eq!(crepant_resolution(&class(1, 0), None), Err(Error::NoInteriorPoints));
        assert!(matches!(crepant_resolution(&class(3, 1), Some(&[1, 1])), Err(Error::InvalidPermutation(_))));
        assert!(matches!(crepant_resolution(&class(3, 1), Some(&[1, 3])), Err(Error::InvalidPermutation(_))));
        assert_eq!(
            enumerate_crepant_resolutions(&class(7, 2), DEFAULT_ENUM_BOUND),
            Err(Error::EnumerationBound { n: 7, bound: 6 })
        );
    }

    #[test]
    fn enumeration_counts() {
        let rs = enumerate_crepant_resolutions(&class(3, 1), DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(rs.len(), 2);
        assert!(rs[0].built_by_star_sequence());
        assert!(!rs[1].built_by_star_sequence());
        assert_eq!(enumerate_crepant_resolutions(&class(1, 0), DEFAULT_ENUM_BOUND).unwrap().len(), 2);
        assert_eq!(enumerate_crepant_resolutions(&class(2, 1), DEFAULT_ENUM_BOUND).unwrap().len(), 1);
    }

    #[test]
    fn enumerated_triangulations_are_unimodular_and_complete() {
        for n in 1..=6i64 {
            for k in 0..n.max(1) {
                let Ok(c) = canonical_form(n, k) else { continue };
                if c.k() as i64 != k {
                    continue;
                }
                let all: BTreeSet<Point2> = c.diagram().points().iter().map(|p| p.point.clone()).collect();
                for t in enumerate_triangulations(&c) {
                    assert_eq!(t.len() as i64, 2 * n);
                    assert!(t.iter().all(|x| orient2(&x[0], &x[1], &x[2]).abs().is_one()));
                    let used: BTreeSet<Point2> = t.iter().flatten().cloned().collect();
                    assert_eq!(used, all);
                }
            }
        }
    }

    #[test]
    fn every_subdivision_order_reaches_an_enumerated_triangulation() {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n);
                    out.push(q);
                }
            }
            out
        }
        for n in 2..=6i64 {
            for k in 1..n {
                let Ok(c) = canonical_form(n, k) else { continue };
                if c.k() as i64 != k {
                    continue;
                }
                let all = enumerate_triangulations(&c);
                for order in permutations((n - 1) as usize) {
                    let r = crepant_resolution(&c, Some(&order)).unwrap();
                    assert!(all.contains(&r.triangles()), "C_{{{n},{k}}} order {order:?}");
                }
            }
        }
    }
}
