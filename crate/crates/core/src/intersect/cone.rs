//! Open polyhedral cones `{t : a_i · t > 0}` with integer rows, and exact
//! decision of their emptiness.
//!
//! Emptiness is decided by the linear programme
//! `max s  s.t.  a_i · t >= s,  -1 <= t_j <= 1,  s <= 1`; the cone is
//! nonempty exactly when the optimum is positive. A floating-point solve is
//! tried first and accepted only if a rounded integer witness passes an exact
//! check; otherwise the same programme is solved over the rationals.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lattice::{det, int, Int};

/// Arithmetic needed by the simplex tableau.
pub(crate) trait Field:
    Clone
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    fn zero() -> Self {
        Self::from_i64(0)
    }
    fn is_pos(&self) -> bool;
    fn is_neg(&self) -> bool;
}

impl Field for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn is_pos(&self) -> bool {
        *self > 1e-9
    }
    fn is_neg(&self) -> bool {
        *self < -1e-9
    }
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_pos(&self) -> bool {
        self.is_positive()
    }
    fn is_neg(&self) -> bool {
        self.is_negative()
    }
}

/// Maximises `c · x` subject to `A x <= b`, `x >= 0`, with `b >= 0`, by the
/// tableau simplex method with Bland's rule. Returns the optimal `x`.
pub(crate) fn simplex_max<F: Field>(a: &[Vec<F>], b: &[F], c: &[F]) -> Vec<F> {
    let (m, n) = (a.len(), c.len());
    let width = n + m + 1;
    let mut tab: Vec<Vec<F>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| F::from_i64((i == j) as i64)));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut obj: Vec<F> = c.iter().map(|x| -x.clone()).collect();
    obj.extend((0..=m).map(|_| F::zero()));
    let mut basis: Vec<usize> = (n..n + m).collect();

    let mut iterations = 0;
    while let Some(enter) = (0..width - 1).find(|&j| obj[j].is_neg()) {
        iterations += 1;
        if iterations > 50 * width {
            break;
        }
        let mut leave: Option<(usize, F)> = None;
        for i in 0..m {
            if !tab[i][enter].is_pos() {
                continue;
            }
            let ratio = tab[i][width - 1].clone() / tab[i][enter].clone();
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio <= *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            break;
        };
        let pivot = tab[row][enter].clone();
        for x in tab[row].iter_mut() {
            *x = x.clone() / pivot.clone();
        }
        let pivot_row = tab[row].clone();
        for (i, r) in tab.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let f = r[enter].clone();
            if f.is_pos() || f.is_neg() {
                for (x, p) in r.iter_mut().zip(pivot_row.iter()) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        let f = obj[enter].clone();
        for (x, p) in obj.iter_mut().zip(pivot_row.iter()) {
            *x = x.clone() - f.clone() * p.clone();
        }
        basis[row] = enter;
    }

    let mut x = vec![F::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = tab[i][width - 1].clone();
        }
    }
    x
}

/// Solves the margin programme; returns `(t, s)`.
fn margin_lp<F: Field>(rows: &[Vec<i64>], dim: usize) -> (Vec<F>, F) {
    // Substitute t = x - 1 and s = z - K so the origin is feasible.
    let k = rows.iter().map(|r| r.iter().map(|a| a.abs()).sum::<i64>()).max().unwrap_or(0) + 1;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for r in rows {
        // -a·x + z <= K - Σ a
        let mut row: Vec<F> = r.iter().map(|&v| F::from_i64(-v)).collect();
        row.push(F::from_i64(1));
        a.push(row);
        b.push(F::from_i64(k - r.iter().sum::<i64>()));
    }
    for j in 0..dim {
        let mut row = vec![F::zero(); dim + 1];
        row[j] = F::from_i64(1);
        a.push(row);
        b.push(F::from_i64(2));
    }
    let mut row = vec![F::zero(); dim + 1];
    row[dim] = F::from_i64(1);
    a.push(row);
    b.push(F::from_i64(k + 1));
    let mut c = vec![F::zero(); dim + 1];
    c[dim] = F::from_i64(1);
    let x = simplex_max(&a, &b, &c);
    let t = x[..dim].iter().map(|v| v.clone() - F::from_i64(1)).collect();
    let s = x[dim].clone() - F::from_i64(k);
    (t, s)
}

/// Whether the integer point `t` satisfies every row strictly.
pub fn strictly_satisfies(rows: &[Vec<i64>], t: &[Int]) -> bool {
    rows.iter().all(|r| r.iter().zip(t).map(|(&a, x)| int(a) * x).sum::<Int>().is_positive())
}

fn round_witness(rows: &[Vec<i64>], t: &[f64]) -> Option<Vec<Int>> {
    let scale = t.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return None;
    }
    for p in 3..=12 {
        let f = 10f64.powi(p) / scale;
        let cand: Vec<Int> = t.iter().map(|x| BigInt::from((x * f).round() as i64)).collect();
        if strictly_satisfies(rows, &cand) {
            return Some(reduce_content(cand));
        }
    }
    None
}

fn reduce_content(v: Vec<Int>) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// An integer point strictly inside the cone, or `None` if the cone is empty.
pub fn interior_witness(rows: &[Vec<i64>], dim: usize) -> Option<Vec<Int>> {
    if rows.is_empty() {
        return Some(vec![Int::zero(); dim]);
    }
    if dim == 0 {
        return None;
    }
    let (t, s) = margin_lp::<f64>(rows, dim);
    if s > 1e-7 {
        if let Some(w) = round_witness(rows, &t) {
            return Some(w);
        }
    }
    exact_witness(rows, dim)
}

/// The witness search carried out entirely over the rationals.
pub fn exact_witness(rows: &[Vec<i64>], dim: usize) -> Option<Vec<Int>> {
    if rows.is_empty() {
        return Some(vec![Int::zero(); dim]);
    }
    if dim == 0 {
        return None;
    }
    let (t, s) = margin_lp::<BigRational>(rows, dim);
    if !s.is_positive() {
        return None;
    }
    let lcm = t.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let w: Vec<Int> = t.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    debug_assert!(strictly_satisfies(rows, &w));
    Some(reduce_content(w))
}

/// Extreme rays of the closed cone `{a_i · t >= 0}`, primitive and sorted, for
/// a pointed full-dimensional cone. Returns `None` when the closure is not
/// pointed.
pub fn closure_extreme_rays(rows: &[Vec<i64>], dim: usize) -> Option<Vec<Vec<Int>>> {
    if dim == 0 {
        return Some(Vec::new());
    }
    let full_rank = {
        let big: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().map(|&a| int(a)).collect()).collect();
        rank(&big) == dim
    };
    if !full_rank {
        return None;
    }
    if dim == 1 {
        let mut rays = Vec::new();
        for sign in [1i64, -1] {
            if rows.iter().all(|r| r[0] * sign >= 0) {
                rays.push(vec![int(sign)]);
            }
        }
        rays.sort();
        return Some(rays);
    }
    let mut rays: Vec<Vec<Int>> = Vec::new();
    for subset in combinations(rows.len(), dim - 1) {
        let sub: Vec<&Vec<i64>> = subset.iter().map(|&i| &rows[i]).collect();
        let Some(null) = null_vector(&sub, dim) else { continue };
        for cand in [null.clone(), null.iter().map(|x| -x).collect::<Vec<Int>>()] {
            let ok = rows.iter().all(|r| !r.iter().zip(&cand).map(|(&a, x)| int(a) * x).sum::<Int>().is_negative());
            if ok && !rays.contains(&cand) {
                rays.push(cand);
            }
        }
    }
    rays.sort();
    Some(rays)
}

/// Whether `t` lies in the closed cone `{a_i · t >= 0}`.
pub fn closure_contains(rows: &[Vec<i64>], t: &[Int]) -> bool {
    rows.iter().all(|r| !r.iter().zip(t).map(|(&a, x)| int(a) * x).sum::<Int>().is_negative())
}

/// The primitive generator of the kernel of `dim - 1` independent rows.
fn null_vector(rows: &[&Vec<i64>], dim: usize) -> Option<Vec<Int>> {
    let v: Vec<Int> = (0..dim)
        .map(|j| {
            let minor: Vec<Vec<Int>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &a)| int(a)).collect())
                .collect();
            let d = det(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    Some(reduce_content(v))
}

fn rank(m: &[Vec<Int>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &rows[rank][c];
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Approximate value of an integer vector, for display.
pub fn to_f64(v: &[Int]) -> Vec<f64> {
    v.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
}
