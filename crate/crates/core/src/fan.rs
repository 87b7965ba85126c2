//! Cones, fans, toric diagrams and star subdivisions.
//!
//! A [`Fan`] stores its ray generators once and refers to them by index from
//! each maximal cone. Three-dimensional cones keep their generators in cyclic
//! order, so consecutive generators span the facets; this is what lets the
//! single four-generator cone of an unresolved hyperconifold live alongside
//! simplicial cones.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{det3, orient2, primitive_of, Int, LatticeVector, Point2, UnimodularMap};

/// A simplicial cone given by one to three primitive generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    generators: Vec<LatticeVector>,
}

impl SimplicialCone {
    pub fn new(generators: Vec<LatticeVector>) -> Result<Self> {
        if generators.is_empty() || generators.len() > 3 {
            return Err(Error::InvalidFan(format!(
                "a simplicial cone has 1 to 3 generators, got {}",
                generators.len()
            )));
        }
        for g in &generators {
            if !g.is_primitive() {
                return Err(Error::NotPrimitive(g.to_string()));
            }
        }
        let independent = match generators.len() {
            1 => true,
            2 => !generators[0].cross(&generators[1]).is_zero(),
            _ => !det3(&generators[0], &generators[1], &generators[2]).is_zero(),
        };
        if !independent {
            return Err(Error::InvalidFan("cone generators are linearly dependent".into()));
        }
        Ok(SimplicialCone { generators })
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn dimension(&self) -> usize {
        self.generators.len()
    }
}

/// `|det|` of the generator matrix; 1 exactly when the cone is smooth.
pub fn multiplicity(cone: &SimplicialCone) -> Result<Int> {
    match cone.generators() {
        [a, b, c] => Ok(det3(a, b, c).abs()),
        _ => Err(Error::NotFullDimensional),
    }
}

/// Why a fan fails to be smooth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotSmooth {
    NonSimplicial { cone: usize },
    Multiplicity { cone: usize, multiplicity: Int },
}

impl std::fmt::Display for NotSmooth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotSmooth::NonSimplicial { cone } => write!(f, "non-simplicial (cone {cone})"),
            NotSmooth::Multiplicity { cone, multiplicity } => {
                write!(f, "cone {cone} has multiplicity {multiplicity}")
            }
        }
    }
}

/// A complete-in-its-support fan of full-dimensional cones in N_R = R³.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rays: Vec<LatticeVector>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Builds a fan from ray generators and maximal cones given as cyclically
    /// ordered ray indices. Does not run the pairwise face-intersection check;
    /// see [`Fan::check_face_intersections`].
    pub fn new(rays: Vec<LatticeVector>, cones: Vec<Vec<usize>>) -> Result<Self> {
        for r in &rays {
            if !r.is_primitive() {
                return Err(Error::NotPrimitive(r.to_string()));
            }
        }
        let distinct: BTreeSet<&LatticeVector> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(Error::InvalidFan("repeated ray generator".into()));
        }
        let fan = Fan { rays, cones };
        for (i, cone) in fan.cones.iter().enumerate() {
            if cone.len() < 3 {
                return Err(Error::NotFullDimensional);
            }
            if cone.iter().any(|&r| r >= fan.rays.len()) {
                return Err(Error::InvalidFan(format!("cone {i} references a missing ray")));
            }
            fan.check_cone_order(i)?;
        }
        Ok(fan)
    }

    /// The fan consisting of one cone and its faces.
    pub fn single_cone(generators: Vec<LatticeVector>) -> Result<Self> {
        let idx = (0..generators.len()).collect();
        Fan::new(generators, vec![idx])
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn maximal_cone_count(&self) -> usize {
        self.cones.len()
    }

    pub fn ray_index(&self, v: &LatticeVector) -> Option<usize> {
        self.rays.iter().position(|r| r == v)
    }

    pub fn cone_generators(&self, cone: usize) -> Vec<&LatticeVector> {
        self.cones[cone].iter().map(|&r| &self.rays[r]).collect()
    }

    pub fn simplicial_cone(&self, cone: usize) -> Option<SimplicialCone> {
        if self.cones[cone].len() != 3 {
            return None;
        }
        SimplicialCone::new(self.cone_generators(cone).into_iter().cloned().collect()).ok()
    }

    /// Facets of a maximal cone as `(ray, ray, inward normal)`.
    fn facets(&self, cone: usize) -> Vec<(usize, usize, LatticeVector)> {
        let c = &self.cones[cone];
        let interior = c.iter().fold(LatticeVector::zero(), |acc, &r| &acc + &self.rays[r]);
        (0..c.len())
            .map(|i| {
                let (a, b) = (c[i], c[(i + 1) % c.len()]);
                let n = self.rays[a].cross(&self.rays[b]);
                let n = if n.dot(&interior).is_negative() { -&n } else { n };
                (a, b, n)
            })
            .collect()
    }

    fn check_cone_order(&self, cone: usize) -> Result<()> {
        let c = &self.cones[cone];
        for (a, b, n) in self.facets(cone) {
            if n.is_zero() {
                return Err(Error::InvalidFan(format!("cone {cone} has dependent consecutive generators")));
            }
            for &g in c {
                if g != a && g != b && !n.dot(&self.rays[g]).is_positive() {
                    return Err(Error::InvalidFan(format!("cone {cone} generators are not in convex cyclic position")));
                }
            }
        }
        Ok(())
    }

    pub fn cone_contains(&self, cone: usize, v: &LatticeVector) -> bool {
        self.facets(cone).iter().all(|(_, _, n)| !n.dot(v).is_negative())
    }

    pub fn support_contains(&self, v: &LatticeVector) -> bool {
        (0..self.cones.len()).any(|c| self.cone_contains(c, v))
    }

    /// The star subdivision of the fan at the primitive vector `v`.
    ///
    /// Cones not containing `v` are kept. A cone containing `v` is replaced by
    /// the joins of `v` with those of its facets that do not contain `v`.
    pub fn star_subdivision(&self, v: &LatticeVector) -> Result<Fan> {
        let v = {
            let p = primitive_of(v)?;
            if &p != v {
                return Err(Error::NotPrimitive(v.to_string()));
            }
            p
        };
        if self.ray_index(&v).is_some() {
            return Ok(self.clone());
        }
        if !self.support_contains(&v) {
            return Err(Error::OutsideSupport(v.to_string()));
        }
        let mut rays = self.rays.clone();
        let new_ray = rays.len();
        rays.push(v.clone());
        let mut cones = Vec::with_capacity(self.cones.len() + 3);
        for (i, cone) in self.cones.iter().enumerate() {
            if !self.cone_contains(i, &v) {
                cones.push(cone.clone());
                continue;
            }
            for (a, b, n) in self.facets(i) {
                if n.dot(&v).is_positive() {
                    cones.push(vec![new_ray, a, b]);
                }
            }
        }
        Fan::new(rays, cones)
    }

    pub fn smoothness(&self) -> std::result::Result<(), NotSmooth> {
        for (i, cone) in self.cones.iter().enumerate() {
            if cone.len() != 3 {
                return Err(NotSmooth::NonSimplicial { cone: i });
            }
            let g = self.cone_generators(i);
            let m = det3(g[0], g[1], g[2]).abs();
            if !m.is_one() {
                return Err(NotSmooth::Multiplicity { cone: i, multiplicity: m });
            }
        }
        Ok(())
    }

    pub fn is_smooth(&self) -> bool {
        self.smoothness().is_ok()
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| c.len() == 3)
    }

    /// Multiplicities of all maximal cones, `None` for non-simplicial ones.
    pub fn multiplicities(&self) -> Vec<Option<Int>> {
        (0..self.cones.len()).map(|i| self.simplicial_cone(i).and_then(|c| multiplicity(&c).ok())).collect()
    }

    /// The primitive functional `m` with `m · r = 1` for every ray, if the rays
    /// lie on a common lattice hyperplane at height one.
    pub fn height_functional(&self) -> Result<LatticeVector> {
        let off = || Error::NotCrepantCompatible("ray generators do not lie on a common height-one hyperplane".into());
        let n = self.rays.len();
        let mut basis = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !det3(&self.rays[i], &self.rays[j], &self.rays[k]).is_zero() {
                        basis = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        let (i, j, k) = basis.ok_or_else(off)?;
        let (a, b, c) = (&self.rays[i], &self.rays[j], &self.rays[k]);
        // Solve m·a = m·b = m·c = 1 by Cramer's rule: m = (b×c + c×a + a×b) / det.
        let d = det3(a, b, c);
        let num = &(&b.cross(c) + &c.cross(a)) + &a.cross(b);
        let coords = num.coords();
        if coords.iter().any(|x| !(x % &d).is_zero()) {
            return Err(off());
        }
        let m = LatticeVector::from_coords([&coords[0] / &d, &coords[1] / &d, &coords[2] / &d]);
        if self.rays.iter().any(|r| !m.dot(r).is_one()) {
            return Err(off());
        }
        Ok(m)
    }

    /// Re-expresses the fan in a basis where every ray has first coordinate 1.
    pub fn to_canonical_basis(&self) -> Result<Fan> {
        if self.rays.iter().all(|r| r.coords()[0].is_one()) {
            return Ok(self.clone());
        }
        let m = self.height_functional()?;
        let u = UnimodularMap::<3>::with_first_row(&m)?;
        let rays = self.rays.iter().map(|r| u.apply_vector(r)).collect();
        Fan::new(rays, self.cones.clone())
    }

    /// The cone of `cone` sliced at height one, as a counter-clockwise polygon.
    fn slice_polygon(&self, cone: usize) -> Vec<Point2> {
        let mut pts: Vec<Point2> = self.cones[cone].iter().map(|&r| self.rays[r].slice()).collect();
        if pts.len() >= 3 && orient2(&pts[0], &pts[1], &pts[2]).is_negative() {
            pts.reverse();
        }
        pts
    }

    /// Checks that every pair of maximal cones meets in a common face.
    pub fn check_face_intersections(&self) -> Result<()> {
        let fan = self.to_canonical_basis()?;
        let polys: Vec<Vec<Point2>> = (0..fan.cones.len()).map(|c| fan.slice_polygon(c)).collect();
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                if !polygons_meet_in_common_face(&polys[i], &polys[j]) {
                    return Err(Error::InvalidFan(format!("cones {i} and {j} do not meet in a common face")));
                }
            }
        }
        Ok(())
    }

    /// The toric diagram of the fan: its intersection with the height-one
    /// hyperplane, with the triangulation recorded when the fan is simplicial.
    pub fn height_one_slice(&self) -> Result<ToricDiagram> {
        let fan = self.to_canonical_basis()?;
        let pts: Vec<Point2> = fan.rays.iter().map(LatticeVector::slice).collect();
        let mut diagram = ToricDiagram::from_points(&pts)?;
        if fan.is_simplicial() {
            let triangles = (0..fan.cones.len())
                .map(|c| {
                    let mut t: Vec<Point2> = fan.cones[c].iter().map(|&r| fan.rays[r].slice()).collect();
                    t.sort();
                    [t[0].clone(), t[1].clone(), t[2].clone()]
                })
                .collect();
            diagram.set_triangles(triangles);
        }
        Ok(diagram)
    }
}

/// Whether two convex counter-clockwise polygons intersect in a common face
/// (possibly empty).
pub(crate) fn polygons_meet_in_common_face(p: &[Point2], q: &[Point2]) -> bool {
    let separating = |a: &[Point2], b: &[Point2]| -> Option<(Point2, Point2)> {
        (0..a.len()).find_map(|i| {
            let (s, t) = (&a[i], &a[(i + 1) % a.len()]);
            b.iter().all(|x| !orient2(s, t, x).is_positive()).then(|| (s.clone(), t.clone()))
        })
    };
    let Some((s, t)) = separating(p, q).or_else(|| separating(q, p)) else {
        return false;
    };
    let dir = &t - &s;
    let param = |x: &Point2| -> Int {
        let d = x - &s;
        &d.x * &dir.x + &d.y * &dir.y
    };
    let on_line = |poly: &[Point2]| -> Vec<Point2> {
        let mut v: Vec<Point2> = poly.iter().filter(|x| orient2(&s, &t, x).is_zero()).cloned().collect();
        v.sort_by_key(|x| param(x));
        v
    };
    let (pl, ql) = (on_line(p), on_line(q));
    if pl.is_empty() || ql.is_empty() {
        return true;
    }
    let lo = std::cmp::max(param(&pl[0]), param(&ql[0]));
    let hi = std::cmp::min(param(pl.last().unwrap()), param(ql.last().unwrap()));
    if lo > hi {
        return true;
    }
    if lo == hi {
        let is_vertex = |line: &[Point2]| line.iter().any(|x| param(x) == lo);
        return is_vertex(&pl) && is_vertex(&ql);
    }
    pl.len() == 2 && pl == ql
}

/// Where a lattice point sits in a toric diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointKind {
    Vertex,
    Boundary,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramPoint {
    pub point: Point2,
    pub kind: PointKind,
}

/// The height-one slice of a Calabi–Yau fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricDiagram {
    vertices: Vec<Point2>,
    points: Vec<DiagramPoint>,
    triangles: Option<Vec<[Point2; 3]>>,
}

impl ToricDiagram {
    /// The diagram whose polygon is the convex hull of `points`.
    pub fn from_points(points: &[Point2]) -> Result<Self> {
        let vertices = convex_hull(points);
        if vertices.len() < 3 {
            return Err(Error::DegenerateDiagram);
        }
        let min_x = vertices.iter().map(|p| p.x.clone()).min().unwrap();
        let max_x = vertices.iter().map(|p| p.x.clone()).max().unwrap();
        let min_y = vertices.iter().map(|p| p.y.clone()).min().unwrap();
        let max_y = vertices.iter().map(|p| p.y.clone()).max().unwrap();
        let mut lattice = Vec::new();
        let mut y = min_y;
        while y <= max_y {
            let mut x = min_x.clone();
            while x <= max_x {
                let p = Point2::from_coords(x.clone(), y.clone());
                if let Some(kind) = classify_point(&vertices, &p) {
                    lattice.push(DiagramPoint { point: p, kind });
                }
                x += 1;
            }
            y += 1;
        }
        lattice.sort_by(|a, b| a.point.cmp(&b.point));
        Ok(ToricDiagram { vertices, points: lattice, triangles: None })
    }

    /// Counter-clockwise polygon vertices, starting from the lowest-leftmost.
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn points(&self) -> &[DiagramPoint] {
        &self.points
    }

    pub fn points_of_kind(&self, kind: PointKind) -> Vec<Point2> {
        self.points.iter().filter(|p| p.kind == kind).map(|p| p.point.clone()).collect()
    }

    pub fn interior_points(&self) -> Vec<Point2> {
        self.points_of_kind(PointKind::Interior)
    }

    pub fn triangles(&self) -> Option<&[[Point2; 3]]> {
        self.triangles.as_deref()
    }

    pub fn set_triangles(&mut self, mut triangles: Vec<[Point2; 3]>) {
        triangles.sort();
        self.triangles = Some(triangles);
    }

    /// Distinct triangulation edges, each as a sorted pair.
    pub fn edges(&self) -> Vec<(Point2, Point2)> {
        let mut edges = BTreeSet::new();
        for t in self.triangles.iter().flatten() {
            for (i, j) in [(0, 1), (1, 2), (0, 2)] {
                let (a, b) = (t[i].clone(), t[j].clone());
                edges.insert(if a <= b { (a, b) } else { (b, a) });
            }
        }
        edges.into_iter().collect()
    }

    /// Twice the Euclidean area of the polygon (the normalised lattice area).
    pub fn twice_area(&self) -> Int {
        let v = &self.vertices;
        (1..v.len() - 1).fold(Int::zero(), |acc, i| acc + orient2(&v[0], &v[i], &v[i + 1]))
    }
}

fn classify_point(vertices: &[Point2], p: &Point2) -> Option<PointKind> {
    if vertices.contains(p) {
        return Some(PointKind::Vertex);
    }
    let mut on_edge = false;
    for i in 0..vertices.len() {
        let o = orient2(&vertices[i], &vertices[(i + 1) % vertices.len()], p);
        if o.is_negative() {
            return None;
        }
        if o.is_zero() {
            on_edge = true;
        }
    }
    Some(if on_edge { PointKind::Boundary } else { PointKind::Interior })
}

/// Convex hull, counter-clockwise without collinear points, starting from the
/// lexicographically smallest point.
pub fn convex_hull(points: &[Point2]) -> Vec<Point2> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !orient2(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !orient2(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Exponent-vector check of the two standard parametrisations of the conifold
/// `y1 y4 - y2 y3 = 0`, and of the invariance of the homogeneous one under the
/// rescaling `(λ z1, λ z2, λ⁻¹ z3, λ⁻¹ z4)`.
pub fn verify_parametrizations() -> bool {
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    // y_i in terms of (t1, t2, t3): t1/t3, t2, t1/t2, t3
    let toric: [[i64; 3]; 4] = [[1, 0, -1], [0, 1, 0], [1, -1, 0], [0, 0, 1]];
    // y_i in terms of (z1, z2, z3, z4): z1 z3, z1 z4, z2 z3, z2 z4
    let homogeneous: [[i64; 4]; 4] = [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]];
    let lambda_weights: [i64; 4] = [1, 1, -1, -1];

    let toric_ok = add(&toric[0], &toric[3]) == add(&toric[1], &toric[2]);
    let homogeneous_ok = add(&homogeneous[0], &homogeneous[3]) == add(&homogeneous[1], &homogeneous[2]);
    let rescaling_ok =
        homogeneous.iter().all(|y| y.iter().zip(lambda_weights.iter()).map(|(e, w)| e * w).sum::<i64>() == 0);
    toric_ok && homogeneous_ok && rescaling_ok
}

/// Maps each ray index to the set of maximal cones containing it.
pub(crate) fn cones_by_ray(fan: &Fan) -> BTreeMap<usize, Vec<usize>> {
    let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (c, cone) in fan.cones().iter().enumerate() {
        for &r in cone {
            map.entry(r).or_default().push(c);
        }
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::int;

    fn v(a: i64, b: i64, c: i64) -> LatticeVector {
        LatticeVector::new(a, b, c)
    }

    fn hyperconifold_fan(n: i64, k: i64) -> Fan {
        Fan::single_cone(vec![v(1, 0, 0), v(1, 1, 0), v(1, k + 1, n), v(1, k, n)]).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        let unit = SimplicialCone::new(vec![v(1, 0, 0), v(1, 1, 0), v(1, 0, 1)]).unwrap();
        assert_eq!(multiplicity(&unit).unwrap(), int(1));
        let c = SimplicialCone::new(vec![v(1, 0, 0), v(1, 1, 0), v(1, 2, 5)]).unwrap();
        assert_eq!(multiplicity(&c).unwrap(), int(5));
        let wall = SimplicialCone::new(vec![v(1, 0, 0), v(1, 1, 0)]).unwrap();
        assert_eq!(multiplicity(&wall), Err(Error::NotFullDimensional));
    }

    #[test]
    fn first_subdivision_of_parallelogram_gives_four_cones() {
        let fan = hyperconifold_fan(5, 2);
        let sub = fan.star_subdivision(&v(1, 1, 1)).unwrap();
        assert_eq!(sub.maximal_cone_count(), 4);
        assert!(sub.is_simplicial());
        sub.check_face_intersections().unwrap();
    }

    #[test]
    fn subdivision_in_cone_interior_and_on_wall() {
        // C_{3,1}: interior points (1,1,1) and (1,1,2).
        let fan = hyperconifold_fan(3, 1).star_subdivision(&v(1, 1, 1)).unwrap();
        // (1,1,2) lies in the relative interior of the wall spanned by (1,1,1) and (1,1,3).
        let on_wall = fan.star_subdivision(&v(1, 1, 2)).unwrap();
        assert_eq!(on_wall.maximal_cone_count(), 6);
        on_wall.check_face_intersections().unwrap();

        // C_{5,2}: after subdividing at (1,2,4), the point (1,1,1) is interior to a 3D cone.
        let fan = hyperconifold_fan(5, 2).star_subdivision(&v(1, 2, 4)).unwrap();
        let containing: Vec<usize> =
            (0..fan.maximal_cone_count()).filter(|&c| fan.cone_contains(c, &v(1, 1, 1))).collect();
        assert_eq!(containing.len(), 1);
        let inner = fan.star_subdivision(&v(1, 1, 1)).unwrap();
        assert_eq!(inner.maximal_cone_count(), fan.maximal_cone_count() + 2);
        inner.check_face_intersections().unwrap();
    }

    #[test]
    fn subdivision_errors_and_identity() {
        let fan = hyperconifold_fan(3, 1);
        assert!(matches!(fan.star_subdivision(&v(1, 5, 1)), Err(Error::OutsideSupport(_))));
        assert!(matches!(fan.star_subdivision(&v(2, 2, 2)), Err(Error::NotPrimitive(_))));
        assert_eq!(fan.star_subdivision(&v(1, 0, 0)).unwrap(), fan);
    }

    #[test]
    fn smoothness_examples() {
        let conifold = hyperconifold_fan(1, 0);
        assert_eq!(conifold.smoothness(), Err(NotSmooth::NonSimplicial { cone: 0 }));
        let simplex = Fan::single_cone(vec![v(1, 0, 0), v(1, 1, 0), v(1, 0, 1)]).unwrap();
        assert!(simplex.is_smooth());
        let mut fan = hyperconifold_fan(5, 2);
        for m in 1..5 {
            let l = (2 * m) / 5 + 1;
            fan = fan.star_subdivision(&v(1, l, m)).unwrap();
        }
        assert!(fan.is_smooth());
        assert_eq!(fan.maximal_cone_count(), 10);
    }

    #[test]
    fn slices() {
        let d = hyperconifold_fan(1, 0).height_one_slice().unwrap();
        assert_eq!(d.vertices(), &[Point2::new(0, 0), Point2::new(1, 0), Point2::new(1, 1), Point2::new(0, 1)]);
        assert!(d.interior_points().is_empty());

        let d = hyperconifold_fan(3, 1).height_one_slice().unwrap();
        assert_eq!(d.vertices(), &[Point2::new(0, 0), Point2::new(1, 0), Point2::new(2, 3), Point2::new(1, 3)]);
        assert_eq!(d.twice_area(), int(6));
        assert_eq!(d.interior_points(), vec![Point2::new(1, 1), Point2::new(1, 2)]);

        let resolved =
            hyperconifold_fan(3, 1).star_subdivision(&v(1, 1, 1)).unwrap().star_subdivision(&v(1, 1, 2)).unwrap();
        let d = resolved.height_one_slice().unwrap();
        let tris = d.triangles().unwrap();
        assert_eq!(tris.len(), 6);
        assert!(tris.iter().all(|t| orient2(&t[0], &t[1], &t[2]).abs().is_one()));
    }

    #[test]
    fn canonical_basis_normalisation() {
        // The conifold cone expressed in a sheared basis where rays sit on x + y = 1.
        let rays = vec![v(1, 0, 0), v(0, 1, 0), v(1, 0, 1), v(0, 1, 1)];
        let fan = Fan::new(rays, vec![vec![0, 1, 3, 2]]).unwrap();
        let canon = fan.to_canonical_basis().unwrap();
        assert!(canon.rays().iter().all(|r| r.coords()[0].is_one()));
        assert_eq!(canon.height_one_slice().unwrap().twice_area(), int(2));

        let off = Fan::single_cone(vec![v(1, 0, 0), v(0, 1, 0), v(0, 0, 1), v(1, 1, 1)]);
        assert!(off.is_err() || off.unwrap().height_one_slice().is_err());
        let off = Fan::single_cone(vec![v(1, 0, 0), v(0, 1, 0), v(1, 1, 2)]).unwrap();
        assert!(matches!(off.height_one_slice(), Err(Error::NotCrepantCompatible(_))));
    }

    #[test]
    fn overlapping_cones_are_detected() {
        let rays = vec![v(1, 0, 0), v(1, 2, 0), v(1, 0, 2), v(1, 1, 1), v(1, 2, 2)];
        let bad = Fan::new(rays, vec![vec![0, 1, 2], vec![3, 1, 4]]).unwrap();
        assert!(bad.check_face_intersections().is_err());
    }

    #[test]
    fn vertex_touching_in_an_edge_interior_is_rejected() {
        // Triangle B has a vertex in the middle of an edge of triangle A.
        let rays = vec![v(1, 0, 0), v(1, 2, 0), v(1, 0, 2), v(1, 1, 1), v(1, 2, 2), v(1, 0, 3)];
        let a = Fan::new(rays.clone(), vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(a.check_face_intersections().is_err());
        let ok = Fan::new(rays, vec![vec![0, 1, 2], vec![1, 4, 2]]).unwrap();
        ok.check_face_intersections().unwrap();
    }

    #[test]
    fn parametrizations_hold() {
        assert!(verify_parametrizations());
    }
}
