//! Exact integer linear algebra on Z² and Z³.
//!
//! Everything here works over arbitrary-precision integers. Determinants feed
//! directly into smoothness decisions, so a silent overflow would be fatal.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

/// A point of the lattice Z³.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector([Int; 3]);

impl LatticeVector {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        LatticeVector([int(a), int(b), int(c)])
    }

    pub fn from_coords(coords: [Int; 3]) -> Self {
        LatticeVector(coords)
    }

    pub fn coords(&self) -> &[Int; 3] {
        &self.0
    }

    pub fn zero() -> Self {
        LatticeVector::new(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &LatticeVector) -> Int {
        &self.0[0] * &other.0[0] + &self.0[1] * &other.0[1] + &self.0[2] * &other.0[2]
    }

    pub fn cross(&self, other: &LatticeVector) -> LatticeVector {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &other.0;
        LatticeVector([a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])
    }

    pub fn scale(&self, s: &Int) -> LatticeVector {
        LatticeVector([&self.0[0] * s, &self.0[1] * s, &self.0[2] * s])
    }

    /// gcd of the coordinates (0 for the zero vector).
    pub fn content(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Drops the first coordinate, giving the point in the height-one slice.
    pub fn slice(&self) -> Point2 {
        Point2::from_coords(self.0[1].clone(), self.0[2].clone())
    }

    /// The ray generator `(1, p)` over a slice point.
    pub fn lift(p: &Point2) -> LatticeVector {
        LatticeVector([Int::one(), p.x.clone(), p.y.clone()])
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector([&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1], &self.0[2] + &rhs.0[2]])
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector([&self.0[0] - &rhs.0[0], &self.0[1] - &rhs.0[1], &self.0[2] - &rhs.0[2]])
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

/// A point of Z², used for toric diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Int,
    pub y: Int,
}

impl Point2 {
    pub fn new(x: i64, y: i64) -> Self {
        Point2 { x: int(x), y: int(y) }
    }

    pub fn from_coords(x: Int, y: Int) -> Self {
        Point2 { x, y }
    }

    pub fn to_i64(&self) -> Option<(i64, i64)> {
        use num_traits::ToPrimitive;
        Some((self.x.to_i64()?, self.y.to_i64()?))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Sub for &Point2 {
    type Output = Point2;
    fn sub(self, rhs: &Point2) -> Point2 {
        Point2 { x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
}

impl Add for &Point2 {
    type Output = Point2;
    fn add(self, rhs: &Point2) -> Point2 {
        Point2 { x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

/// Twice the signed area of the triangle `a, b, c` (positive when counter-clockwise).
pub fn orient2(a: &Point2, b: &Point2, c: &Point2) -> Int {
    let u = b - a;
    let v = c - a;
    &u.x * &v.y - &u.y * &v.x
}

/// Exact determinant of the 3×3 matrix with rows `a`, `b`, `c`.
pub fn det3(a: &LatticeVector, b: &LatticeVector, c: &LatticeVector) -> Int {
    a.dot(&b.cross(c))
}

/// Divides `v` by the gcd of its coordinates.
pub fn primitive_of(v: &LatticeVector) -> Result<LatticeVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(LatticeVector([&v.0[0] / &g, &v.0[1] / &g, &v.0[2] / &g]))
}

/// Determinant of a small square integer matrix by fraction-free elimination.
pub fn det(matrix: &[Vec<Int>]) -> Int {
    let n = matrix.len();
    if n == 0 {
        return Int::one();
    }
    let mut m: Vec<Vec<Int>> = matrix.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// A D×D integer matrix with determinant ±1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMap<const D: usize> {
    matrix: [[Int; D]; D],
}

impl<const D: usize> UnimodularMap<D> {
    pub fn new(matrix: [[Int; D]; D]) -> Result<Self> {
        let rows: Vec<Vec<Int>> = matrix.iter().map(|r| r.to_vec()).collect();
        if !det(&rows).abs().is_one() {
            return Err(Error::InvalidFan("matrix is not unimodular".into()));
        }
        Ok(UnimodularMap { matrix })
    }

    pub fn identity() -> Self {
        UnimodularMap {
            matrix: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Int::one() } else { Int::zero() })),
        }
    }

    pub fn matrix(&self) -> &[[Int; D]; D] {
        &self.matrix
    }

    pub fn determinant(&self) -> Int {
        let rows: Vec<Vec<Int>> = self.matrix.iter().map(|r| r.to_vec()).collect();
        det(&rows)
    }

    pub fn apply(&self, v: &[Int; D]) -> [Int; D] {
        std::array::from_fn(|i| self.matrix[i].iter().zip(v.iter()).fold(Int::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl UnimodularMap<3> {
    pub fn apply_vector(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector(self.apply(&v.0))
    }

    /// A unimodular map whose first row is the primitive vector `m`, so that
    /// the first coordinate of `U v` is `m · v`.
    pub fn with_first_row(m: &LatticeVector) -> Result<Self> {
        if !m.is_primitive() {
            return Err(Error::NotPrimitive(m.to_string()));
        }
        // Row-reduce m to e1 while tracking the operations in `ops`, so that
        // ops · m = e1. Then (ops⁻¹)ᵀ has first row m.
        let mut a: Vec<Int> = m.0.to_vec();
        let mut ops: Vec<Vec<Int>> =
            (0..3).map(|i| (0..3).map(|j| if i == j { Int::one() } else { Int::zero() }).collect()).collect();
        loop {
            let nonzero: Vec<usize> = (0..3).filter(|&i| !a[i].is_zero()).collect();
            if nonzero.len() == 1 {
                break;
            }
            let pivot = *nonzero.iter().min_by_key(|&&i| a[i].abs()).unwrap();
            for &j in &nonzero {
                if j == pivot {
                    continue;
                }
                let q = a[j].div_floor(&a[pivot]);
                a[j] = &a[j] - &q * &a[pivot];
                let pivot_row = ops[pivot].clone();
                for (x, p) in ops[j].iter_mut().zip(&pivot_row) {
                    *x = &*x - &q * p;
                }
            }
        }
        let idx = (0..3).find(|&i| !a[i].is_zero()).unwrap();
        a.swap(0, idx);
        ops.swap(0, idx);
        if a[0].is_negative() {
            for x in ops[0].iter_mut() {
                *x = -&*x;
            }
        }
        let inv = adjugate_inverse3(&ops);
        let matrix = std::array::from_fn(|i| std::array::from_fn(|j| inv[j][i].clone()));
        UnimodularMap::new(matrix)
    }
}

fn adjugate_inverse3(m: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let d = det(m);
    let minor = |r: usize, c: usize| -> Int {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]
    };
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    let cof = if (i + j) % 2 == 0 { minor(j, i) } else { -minor(j, i) };
                    cof / &d
                })
                .collect()
        })
        .collect()
}

fn bounding_box(points: &[Point2]) -> (Int, Int) {
    let min_x = points.iter().map(|p| &p.x).min().unwrap();
    let max_x = points.iter().map(|p| &p.x).max().unwrap();
    let min_y = points.iter().map(|p| &p.y).min().unwrap();
    let max_y = points.iter().map(|p| &p.y).max().unwrap();
    (max_x - min_x, max_y - min_y)
}

/// A shear making a diagram look as square as possible.
///
/// Candidates are the horizontal shears `(x, y) -> (x + s y, y)` and the
/// vertical shears `(x, y) -> (x, y + s x)` with `|s|` at most the diagram
/// height. The winner minimises the bounding-box aspect ratio; ties go to the
/// smallest `|s|`, then to negative `s`, then to horizontal shears.
/// Presentation only: nothing downstream depends on which shear is chosen.
pub fn squaring_shear(points: &[Point2]) -> Result<UnimodularMap<2>> {
    let first = points.first().ok_or(Error::DegenerateDiagram)?;
    let non_collinear =
        points.iter().enumerate().any(|(i, b)| points[i + 1..].iter().any(|c| !orient2(first, b, c).is_zero()));
    if !non_collinear {
        return Err(Error::DegenerateDiagram);
    }
    let (_, height) = bounding_box(points);
    let bound = height.max(Int::one());
    let aspect = |m: &UnimodularMap<2>| -> BigRational {
        let moved: Vec<Point2> = points
            .iter()
            .map(|p| {
                let [x, y] = m.apply(&[p.x.clone(), p.y.clone()]);
                Point2 { x, y }
            })
            .collect();
        let (w, h) = bounding_box(&moved);
        let (lo, hi) = if w < h { (w, h) } else { (h, w) };
        BigRational::new(hi, lo)
    };
    let mut best = UnimodularMap::<2>::identity();
    let mut best_key = (aspect(&best), Int::zero(), Int::zero(), 0u8);
    let mut s = -bound.clone();
    while s <= bound {
        for (dir, matrix) in [
            (0u8, [[Int::one(), s.clone()], [Int::zero(), Int::one()]]),
            (1u8, [[Int::one(), Int::zero()], [s.clone(), Int::one()]]),
        ] {
            let m = UnimodularMap { matrix };
            let key = (aspect(&m), s.abs(), s.clone(), dir);
            if key < best_key {
                best_key = key;
                best = m;
            }
        }
        s += 1;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(a: i64, b: i64, c: i64) -> LatticeVector {
        LatticeVector::new(a, b, c)
    }

    #[test]
    fn det3_examples() {
        assert_eq!(det3(&v(1, 0, 0), &v(1, 1, 0), &v(1, 0, 1)), int(1));
        // rows (1,0,0),(1,1,0),(1,k,n): expanding along the first row gives 1·(1·n − 0·k) = n
        assert_eq!(det3(&v(1, 0, 0), &v(1, 1, 0), &v(1, 2, 5)), int(5));
        assert_eq!(det3(&v(1, 0, 0), &v(1, 0, 0), &v(1, 1, 1)), int(0));
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_of(&v(2, 4, 6)).unwrap(), v(1, 2, 3));
        assert_eq!(primitive_of(&v(1, 2, 5)).unwrap(), v(1, 2, 5));
        assert_eq!(primitive_of(&v(0, -3, 3)).unwrap(), v(0, -1, 1));
        assert_eq!(primitive_of(&v(0, 0, 0)), Err(Error::ZeroVector));
    }

    #[test]
    fn general_det_matches_det3() {
        let rows = vec![vec![int(2), int(-1), int(3)], vec![int(0), int(4), int(1)], vec![int(5), int(2), int(-2)]];
        let d = det3(&v(2, -1, 3), &v(0, 4, 1), &v(5, 2, -2));
        assert_eq!(det(&rows), d);
        let zero_pivot = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(det(&zero_pivot), int(-1));
    }

    #[test]
    fn unimodular_rejects_singular() {
        assert!(UnimodularMap::<2>::new([[int(2), int(0)], [int(0), int(1)]]).is_err());
        assert!(UnimodularMap::<2>::new([[int(0), int(1)], [int(1), int(0)]]).is_ok());
    }

    #[test]
    fn first_row_completion() {
        for m in [v(1, 0, 0), v(0, 0, 1), v(2, 3, 5), v(-4, 6, 9), v(3, -7, 0)] {
            let u = UnimodularMap::<3>::with_first_row(&m).unwrap();
            assert!(u.determinant().abs().is_one());
            let row: Vec<Int> = u.matrix()[0].to_vec();
            assert_eq!(row, m.coords().to_vec());
        }
        assert!(UnimodularMap::<3>::with_first_row(&v(2, 4, 0)).is_err());
    }

    #[test]
    fn shear_square_inputs_are_identity() {
        let square = [Point2::new(0, 0), Point2::new(1, 0), Point2::new(0, 1), Point2::new(1, 1)];
        assert!(squaring_shear(&square).unwrap().is_identity());
    }

    #[test]
    fn shear_squares_up_c52() {
        let pts = [Point2::new(0, 0), Point2::new(1, 0), Point2::new(2, 5), Point2::new(3, 5)];
        let m = squaring_shear(&pts).unwrap();
        let moved: Vec<Point2> = pts
            .iter()
            .map(|p| {
                let [x, y] = m.apply(&[p.x.clone(), p.y.clone()]);
                Point2 { x, y }
            })
            .collect();
        let (w, h) = bounding_box(&moved);
        // Brute force over the same shear family: the best bounding box is 3×3.
        assert_eq!((w, h), (int(3), int(3)));
    }

    #[test]
    fn shear_rejects_collinear() {
        let pts = [Point2::new(0, 0), Point2::new(1, 1), Point2::new(3, 3)];
        assert_eq!(squaring_shear(&pts), Err(Error::DegenerateDiagram));
    }

    fn small_vec() -> impl Strategy<Value = LatticeVector> {
        (-50i64..50, -50i64..50, -50i64..50).prop_map(|(a, b, c)| v(a, b, c))
    }

    proptest! {
        #[test]
        fn det3_is_alternating(a in small_vec(), b in small_vec(), c in small_vec()) {
            let d = det3(&a, &b, &c);
            prop_assert_eq!(det3(&b, &a, &c), -&d);
            prop_assert_eq!(det3(&a, &c, &b), -&d);
            prop_assert_eq!(det3(&c, &b, &a), -d);
        }

        #[test]
        fn primitive_is_idempotent(a in small_vec()) {
            prop_assume!(!a.is_zero());
            let p = primitive_of(&a).unwrap();
            prop_assert!(p.is_primitive());
            prop_assert_eq!(primitive_of(&p).unwrap(), p);
        }

        #[test]
        fn shear_is_unimodular(pts in proptest::collection::vec((-8i64..8, -8i64..8), 3..7)) {
            let pts: Vec<Point2> = pts.into_iter().map(|(x, y)| Point2::new(x, y)).collect();
            if let Ok(m) = squaring_shear(&pts) {
                prop_assert!(m.determinant().abs().is_one());
            }
        }
    }
}
