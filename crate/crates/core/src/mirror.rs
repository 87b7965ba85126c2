//! The local mirror `uv = f(x, y)` of a hyperconifold and its nodes.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::{Matrix4, Vector4};
pub use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::classify::HyperconifoldClass;
use crate::fan::convex_hull;
use crate::lattice::Point2;

/// Absolute tolerance on the normalized Hessian determinant of a node.
pub const HESSIAN_TOLERANCE: f64 = 1e-9;

/// A polynomial in `x, y` with integer coefficients and nonnegative exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<(u64, u64), i64>,
}

impl Polynomial {
    pub fn from_terms(terms: &[(i64, u64, u64)]) -> Self {
        let mut p = Polynomial::default();
        for &(c, a, b) in terms {
            p.add_term(c, a, b);
        }
        p
    }

    fn add_term(&mut self, c: i64, a: u64, b: u64) {
        let e = self.terms.entry((a, b)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(a, b));
        }
    }

    /// `(coefficient, x exponent, y exponent)` in ascending exponent order.
    pub fn terms(&self) -> Vec<(i64, u64, u64)> {
        self.terms.iter().map(|(&(a, b), &c)| (c, a, b)).collect()
    }

    pub fn exponents(&self) -> Vec<(u64, u64)> {
        self.terms.keys().copied().collect()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::default();
        for (&(a1, b1), &c1) in &self.terms {
            for (&(a2, b2), &c2) in &other.terms {
                p.add_term(c1 * c2, a1 + a2, b1 + b2);
            }
        }
        p
    }

    pub fn d_dx(&self) -> Polynomial {
        let mut p = Polynomial::default();
        for (&(a, b), &c) in &self.terms {
            if a > 0 {
                p.add_term(c * a as i64, a - 1, b);
            }
        }
        p
    }

    pub fn d_dy(&self) -> Polynomial {
        let mut p = Polynomial::default();
        for (&(a, b), &c) in &self.terms {
            if b > 0 {
                p.add_term(c * b as i64, a, b - 1);
            }
        }
        p
    }

    /// A single term with nonzero coefficient never vanishes on the torus.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms.iter().map(|(&(a, b), &c)| x.powu(a as u32) * y.powu(b as u32) * c as f64).sum()
    }

    /// Whether the polynomial vanishes at `x = e(px)`, `y = e(py)` with
    /// `e(t) = exp(2πi t)`, decided by cancelling equal roots of unity.
    /// A `true` answer is exact; `false` means no cancellation was found.
    pub fn vanishes_at_roots_of_unity(&self, px: Ratio<i64>, py: Ratio<i64>) -> bool {
        let half = Ratio::new(1, 2);
        let mut sums: BTreeMap<Ratio<i64>, i64> = BTreeMap::new();
        for (&(a, b), &c) in &self.terms {
            let t = px * a as i64 + py * b as i64;
            let mut t = t - t.floor();
            let mut sign = 1;
            if t >= half {
                t -= half;
                sign = -1;
            }
            *sums.entry(t).or_insert(0) += sign * c;
        }
        sums.values().all(|c| *c == 0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, a, b) in self.terms() {
            let mut mono = String::new();
            if a > 0 {
                mono.push('x');
                if a > 1 {
                    mono.push_str(&format!("^{a}"));
                }
            }
            if b > 0 {
                if !mono.is_empty() {
                    mono.push(' ');
                }
                mono.push('y');
                if b > 1 {
                    mono.push_str(&format!("^{b}"));
                }
            }
            let mag = c.abs();
            let body = match (mono.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => mono,
                (false, _) => format!("{mag} {mono}"),
            };
            match (first, c < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `F = uv - f(x, y)` with `f = f1 · f2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorGeometry {
    pub n: u64,
    pub k: u64,
    pub f: Polynomial,
    pub f1: Polynomial,
    pub f2: Polynomial,
}

impl MirrorGeometry {
    /// `F(u, v, x, y)`.
    pub fn full(&self, p: &[Complex64; 4]) -> Complex64 {
        p[0] * p[1] - self.f.eval(p[2], p[3])
    }

    /// `(∂_u F, ∂_v F, ∂_x F, ∂_y F)`.
    pub fn gradient(&self, p: &[Complex64; 4]) -> [Complex64; 4] {
        [p[1], p[0], -self.f.d_dx().eval(p[2], p[3]), -self.f.d_dy().eval(p[2], p[3])]
    }

    pub fn hessian(&self, p: &[Complex64; 4]) -> Matrix4<Complex64> {
        let (x, y) = (p[2], p[3]);
        let fx = self.f.d_dx();
        let fy = self.f.d_dy();
        let fxx = -fx.d_dx().eval(x, y);
        let fxy = -fx.d_dy().eval(x, y);
        let fyy = -fy.d_dy().eval(x, y);
        let (o, l) = (Complex64::zero(), Complex64::one());
        Matrix4::new(o, l, o, o, l, o, o, o, o, o, fxx, fxy, o, o, fxy, fyy)
    }

    /// Largest coefficient modulus of `F`, used to normalize the Hessian.
    fn coefficient_scale(&self) -> f64 {
        self.f.terms().iter().map(|t| t.0.abs()).max().unwrap_or(1).max(1) as f64
    }

    /// The Newton polygon of `f` as a counter-clockwise vertex list.
    pub fn newton_polygon(&self) -> Vec<Point2> {
        let pts: Vec<Point2> = self.f.exponents().iter().map(|&(a, b)| Point2::new(a as i64, b as i64)).collect();
        convex_hull(&pts)
    }
}

/// `f = 1 + x + x^k y^n + x^{k+1} y^n`, the sum of the vertex monomials of
/// the diagram, together with its factorization `(1 + x)(1 + x^k y^n)`.
pub fn mirror_polynomial(c: &HyperconifoldClass) -> MirrorGeometry {
    let (n, k) = (c.n(), c.k());
    let f = Polynomial::from_terms(&[(1, 0, 0), (1, 1, 0), (1, k, n), (1, k + 1, n)]);
    let f1 = Polynomial::from_terms(&[(1, 0, 0), (1, 1, 0)]);
    let f2 = Polynomial::from_terms(&[(1, 0, 0), (1, k, n)]);
    assert_eq!(f1.mul(&f2), f, "vertex polynomial factors");
    MirrorGeometry { n, k, f, f1, f2 }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NodeCertificate {
    /// `j` in `y = exp(2πi (k + 1 + 2j) / (2n))`.
    pub root_index: u64,
    /// `y = exp(2πi · y_phase)`, with `y^n = (-1)^{k+1}`.
    pub y_phase: Ratio<i64>,
    /// Numeric `(u, v, x, y)`.
    pub point: [Complex64; 4],
    pub factors_vanish_exactly: bool,
    pub hessian_det: Complex64,
    pub nondegenerate: bool,
}

/// Singular points of `F = 0`: `u = v = 0`, `x = -1` and `y^n = (-1)^{k+1}`.
///
/// Since `∇f = f1 ∇f2 + f2 ∇f1`, a singular point needs either both factors
/// to vanish or one factor to vanish with its own gradient. The second case is
/// excluded when each factor has a derivative that is a single monomial.
pub fn mirror_nodes(g: &MirrorGeometry) -> Vec<NodeCertificate> {
    assert!(factor_singularities_excluded(g));
    let n = g.n as i64;
    let scale = g.coefficient_scale();
    (0..g.n)
        .map(|j| {
            let y_phase = Ratio::new(g.k as i64 + 1 + 2 * j as i64, 2 * n);
            let y_phase = y_phase - y_phase.floor();
            let x_phase = Ratio::new(1, 2);
            let factors_vanish_exactly =
                g.f1.vanishes_at_roots_of_unity(x_phase, y_phase) && g.f2.vanishes_at_roots_of_unity(x_phase, y_phase);
            let theta = 2.0 * std::f64::consts::PI * (*y_phase.numer() as f64) / (*y_phase.denom() as f64);
            let point =
                [Complex64::zero(), Complex64::zero(), Complex64::new(-1.0, 0.0), Complex64::from_polar(1.0, theta)];
            let hessian_det = (g.hessian(&point) / Complex64::new(scale, 0.0)).determinant();
            NodeCertificate {
                root_index: j,
                y_phase,
                point,
                factors_vanish_exactly,
                nondegenerate: hessian_det.norm() > HESSIAN_TOLERANCE,
                hessian_det,
            }
        })
        .collect()
}

/// `∂_x f1` or `∂_y f1` is a nonzero monomial, and likewise for `f2`.
pub fn factor_singularities_excluded(g: &MirrorGeometry) -> bool {
    [&g.f1, &g.f2].iter().all(|p| p.d_dx().is_monomial() || p.d_dy().is_monomial())
}

/// Result of the multi-start Newton search for solutions of `F = dF = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSearch {
    pub clusters: Vec<[Complex64; 4]>,
    pub starts: usize,
    pub converged: usize,
}

const CLUSTER_RADIUS: f64 = 1e-6;

/// Newton's method on `∇F = 0` over `C² × (C*)²` from a `grid × grid` lattice
/// of angles on two tori, keeping solutions with `F = 0`.
pub fn independent_node_search(g: &MirrorGeometry, grid: usize) -> NodeSearch {
    let grid = grid.max(16);
    let mut clusters: Vec<[Complex64; 4]> = Vec::new();
    let mut starts = 0;
    let mut converged = 0;
    let tau = 2.0 * std::f64::consts::PI;
    for &radius in &[0.9, 1.1] {
        for i in 0..grid {
            for j in 0..grid {
                starts += 1;
                let x = Complex64::from_polar(radius, tau * (i as f64 + 0.37) / grid as f64);
                let y = Complex64::from_polar(1.0 / radius, tau * (j as f64 + 0.61) / grid as f64);
                let start = [Complex64::new(0.3, -0.2), Complex64::new(-0.1, 0.4), x, y];
                let Some(p) = newton(g, start) else { continue };
                if g.full(&p).norm() > 1e-8 {
                    continue;
                }
                converged += 1;
                if !clusters.iter().any(|q| distance(q, &p) < CLUSTER_RADIUS) {
                    clusters.push(p);
                }
            }
        }
    }
    clusters.sort_by(|a, b| a[3].arg().total_cmp(&b[3].arg()));
    NodeSearch { clusters, starts, converged }
}

fn distance(p: &[Complex64; 4], q: &[Complex64; 4]) -> f64 {
    p.iter().zip(q).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
}

fn newton(g: &MirrorGeometry, mut p: [Complex64; 4]) -> Option<[Complex64; 4]> {
    for _ in 0..80 {
        let grad = Vector4::from(g.gradient(&p));
        if grad.norm() < 1e-13 {
            return Some(p);
        }
        let step = g.hessian(&p).lu().solve(&grad)?;
        for (c, s) in p.iter_mut().zip(step.iter()) {
            *c -= s;
        }
        let (rx, ry) = (p[2].norm(), p[3].norm());
        if !(1e-6..1e6).contains(&rx) || !(1e-6..1e6).contains(&ry) {
            return None;
        }
    }
    (Vector4::from(g.gradient(&p)).norm() < 1e-10).then_some(p)
}

/// Formats a complex number with `digits` significant digits relative to its modulus.
pub fn format_complex(z: Complex64, digits: usize) -> (String, String) {
    let m = z.norm();
    let prec = if m == 0.0 { digits - 1 } else { (digits as i64 - 1 - m.log10().floor() as i64).max(0) as usize };
    let fmt = |v: f64| {
        let s = format!("{v:.prec$}");
        if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
            s[1..].to_string()
        } else {
            s
        }
    };
    (fmt(z.re), fmt(z.im))
}
