//! Identification of hyperconifold classes from integer matrices, and the
//! phase bookkeeping of the action on the 2×2 matrix form of the conifold.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{canonical_form, mod_inverse, HyperconifoldClass};
use crate::error::{Error, Result};
use crate::lattice::{det, int, Int};

pub type IntMatrix4 = [[i64; 4]; 4];

pub const DEFAULT_ORDER_BOUND: u64 = 1000;

/// The outcome of identifying a linear action with a hyperconifold class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixIdentification {
    /// Multiplicative order of the matrix.
    pub order: u64,
    /// Eigenvalue exponents `e` (eigenvalue `exp(2πi e / order)`), ascending.
    pub exponents: [u64; 4],
    /// Exponents arranged as `(a1, a2, a3, a4)` with `a1 + a4 ≡ a2 + a3 ≡ 0`.
    pub weights: [u64; 4],
    /// Characteristic polynomial as a product of cyclotomic factors `(d, multiplicity)`.
    pub cyclotomic_factors: Vec<(u64, u32)>,
    pub class: HyperconifoldClass,
}

type Poly = Vec<Int>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Exact division by a monic polynomial; `None` if the remainder is nonzero.
fn poly_div_exact(a: &Poly, b: &Poly) -> Option<Poly> {
    let a = trim(a.clone());
    let b = trim(b.clone());
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a;
    let db = b.len() - 1;
    let mut quot = vec![Int::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(quot))
}

/// The cyclotomic polynomial `Φ_d`.
pub(crate) fn cyclotomic(d: u64) -> Poly {
    let mut p: Poly = vec![Int::zero(); d as usize + 1];
    p[0] = int(-1);
    p[d as usize] = Int::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = poly_div_exact(&p, &cyclotomic(e)).expect("cyclotomic divides x^d - 1");
        }
    }
    p
}

fn to_big(m: &IntMatrix4) -> Vec<Vec<Int>> {
    m.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect()
}

fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|l| &a[i][l] * &b[l][j]).sum()).collect()).collect()
}

fn is_identity(m: &[Vec<Int>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier recursion.
fn characteristic_polynomial(m: &[Vec<Int>]) -> Poly {
    let n = m.len();
    let mut coeffs = vec![Int::zero(); n + 1];
    coeffs[n] = Int::one();
    let mut mk: Vec<Vec<Int>> = vec![vec![Int::zero(); n]; n];
    for k in 1..=n {
        let prod = mat_mul(m, &mk);
        mk = prod;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let amk = mat_mul(m, &mk);
        let trace: Int = (0..n).map(|i| amk[i][i].clone()).sum();
        coeffs[n - k] = -(trace / int(k as i64));
    }
    coeffs
}

/// Identifies the class of the action given by an integer 4×4 matrix on
/// `(y1, y2, y3, y4)`, using the default order bound.
pub fn identify_from_matrix(m: &IntMatrix4) -> Result<MatrixIdentification> {
    identify_from_matrix_with_bound(m, DEFAULT_ORDER_BOUND)
}

pub fn identify_from_matrix_with_bound(m: &IntMatrix4, bound: u64) -> Result<MatrixIdentification> {
    let big = to_big(m);
    if is_identity(&big) {
        return Err(Error::TrivialAction("the identity matrix generates the trivial group".into()));
    }
    if !det(&big).abs().is_one() {
        return Err(Error::InfiniteOrder { bound });
    }
    let mut power = big.clone();
    let mut order = 1u64;
    while !is_identity(&power) {
        if order >= bound {
            return Err(Error::InfiniteOrder { bound });
        }
        power = mat_mul(&power, &big);
        order += 1;
    }

    // Factor the characteristic polynomial into Φ_d, d | order.
    let mut rest = characteristic_polynomial(&big);
    let mut factors = Vec::new();
    let mut exponents = Vec::new();
    for d in (1..=order).filter(|d| order.is_multiple_of(*d)) {
        let phi = cyclotomic(d);
        let mut mult = 0u32;
        while let Some(q) = poly_div_exact(&rest, &phi) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d, mult));
            for j in (1..=d).filter(|j| j.gcd(&d) == 1) {
                for _ in 0..mult {
                    exponents.push((j % d) * (order / d));
                }
            }
        }
    }
    if rest != vec![Int::one()] || exponents.len() != 4 {
        return Err(Error::NotRootOfUnity("characteristic polynomial is not a product of cyclotomic factors".into()));
    }
    exponents.sort_unstable();
    let exps: [u64; 4] = exponents.clone().try_into().expect("four eigenvalues");

    let weights = pair_exponents(order, &exps).ok_or_else(|| {
        Error::InvalidAction(format!("exponents {exps:?} mod {order} do not pair to preserve y1 y4 - y2 y3"))
    })?;
    if let Some(a) = weights.iter().find(|a| a.gcd(&order) != 1) {
        return Err(Error::InvalidAction(format!(
            "eigenvalue exponent {a} is not primitive mod {order}; the fixed locus is not isolated"
        )));
    }
    let inv = mod_inverse(weights[0], order).expect("primitive exponent");
    let class = canonical_form(order as i64, ((weights[1] * inv) % order) as i64)?;
    Ok(MatrixIdentification { order, exponents: exps, weights, cyclotomic_factors: factors, class })
}

/// Arranges four exponents as `(a1, a2, a3, a4)` with `a1 + a4 ≡ a2 + a3 ≡ 0 mod n`.
fn pair_exponents(n: u64, e: &[u64; 4]) -> Option<[u64; 4]> {
    let pairs = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];
    pairs.iter().find_map(|&[a, b, c, d]| {
        ((e[a] + e[b]).is_multiple_of(n) && (e[c] + e[d]).is_multiple_of(n)).then_some([e[a], e[c], e[d], e[b]])
    })
}

fn companion(poly: &Poly) -> Vec<Vec<i64>> {
    let m = poly.len() - 1;
    let mut c = vec![vec![0i64; m]; m];
    for i in 1..m {
        c[i][i - 1] = 1;
    }
    for (i, row) in c.iter_mut().enumerate() {
        row[m - 1] = -i64::try_from(&poly[i]).expect("small cyclotomic coefficient");
    }
    c
}

/// An integer matrix whose eigenvalues are `exp(2πi a_i / n)`.
///
/// Such a matrix exists exactly when the eigenvalue multiset is stable under
/// the Galois action, i.e. when it is a union of full sets of primitive
/// `d`-th roots. The result is block diagonal in companion matrices of
/// cyclotomic polynomials.
pub fn matrix_for_weights(n: u64, weights: [u64; 4]) -> Result<IntMatrix4> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let mut by_order: BTreeMap<u64, BTreeMap<u64, usize>> = BTreeMap::new();
    for &a in &weights {
        let a = a % n;
        let d = n / a.gcd(&n);
        *by_order.entry(d).or_default().entry((a / (n / d)) % d).or_default() += 1;
    }
    let mut blocks = Vec::new();
    for (d, residues) in &by_order {
        let units: Vec<u64> = (0..*d).filter(|j| j.gcd(d) == 1 || *d == 1).collect();
        let mult = residues.values().next().copied().unwrap_or(0);
        let complete = residues.len() == units.len() && residues.values().all(|&c| c == mult);
        if !complete {
            return Err(Error::InvalidAction(format!(
                "eigenvalues of order {d} are not Galois-stable; no integer matrix realises them"
            )));
        }
        for _ in 0..mult {
            blocks.push(companion(&cyclotomic(*d)));
        }
    }
    let mut out = [[0i64; 4]; 4];
    let mut offset = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                out[offset + i][offset + j] = x;
            }
        }
        offset += b.len();
    }
    Ok(out)
}

/// Checks, as exponent arithmetic mod `n`, that left multiplication by
/// `diag(ζ, ζ^-k)` and right multiplication by `diag(1, ζ^{k-1})` on
/// `W = [[y1, y2], [y3, y4]]` is the action `(ζ, ζ^k, ζ^-k, ζ^-1)`, and that
/// the split `X -> L X R`, `v -> diag(1, ζ^{1-k}) v` reproduces it on `W = r X v v†`.
pub fn verify_matrix_action(n: i64, k: i64) -> Result<bool> {
    let class_n = canonical_form(n, k)?.n();
    let m = class_n as i64;
    let r = |x: i64| x.rem_euclid(m);
    let left = [1, -k];
    let right = [0, k - 1];
    let expected = [[1, k], [-k, -1]];
    let entries_ok = (0..2).all(|i| (0..2).all(|j| r(left[i] + right[j]) == r(expected[i][j])));

    // v v† has entry (i, j) phase v_i - v_j; X -> L X R then gives L_i + R_l + v_l - v_j.
    let v = [0, 1 - k];
    let split_ok =
        (0..2).all(|i| (0..2).all(|j| (0..2).all(|l| r(left[i] + right[l] + v[l] - v[j]) == r(left[i] + right[j]))));
    let rotation_trivial_when_k_is_one = k != 1 || right.iter().all(|&x| r(x) == 0);
    Ok(entries_ok && split_ok && rotation_trivial_when_k_is_one)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: IntMatrix4 = [[0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1], [1, 1, 1, 1]];

    #[test]
    fn cyclotomic_polynomials() {
        let c = |d| cyclotomic(d).iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(c(1), vec![-1, 1]);
        assert_eq!(c(2), vec![1, 1]);
        assert_eq!(c(4), vec![1, 0, 1]);
        assert_eq!(c(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(c(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn example_matrix_is_c_10_3() {
        let id = identify_from_matrix(&EXAMPLE).unwrap();
        assert_eq!(id.order, 10);
        assert_eq!(id.exponents, [1, 3, 7, 9]);
        assert_eq!(id.cyclotomic_factors, vec![(10, 1)]);
        assert_eq!(id.class, canonical_form(10, 3).unwrap());
        assert_eq!(characteristic_polynomial(&to_big(&EXAMPLE)), cyclotomic(10));
    }

    #[test]
    fn identity_and_infinite_order_are_rejected() {
        let id: IntMatrix4 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert!(matches!(identify_from_matrix(&id), Err(Error::TrivialAction(_))));
        let shear: IntMatrix4 = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert_eq!(identify_from_matrix(&shear), Err(Error::InfiniteOrder { bound: DEFAULT_ORDER_BOUND }));
        let scale: IntMatrix4 = [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert!(matches!(identify_from_matrix(&scale), Err(Error::InfiniteOrder { .. })));
        assert_eq!(identify_from_matrix_with_bound(&EXAMPLE, 5), Err(Error::InfiniteOrder { bound: 5 }));
    }

    #[test]
    fn non_isolated_actions_are_rejected() {
        // diag(-1, -1, 1, 1) fixes the (y3, y4)-plane.
        let m: IntMatrix4 = [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        assert!(matches!(identify_from_matrix(&m), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn companion_for_c_5_2() {
        let m = matrix_for_weights(5, [1, 2, 3, 4]).unwrap();
        assert_eq!(identify_from_matrix(&m).unwrap().class, canonical_form(5, 2).unwrap());
        assert!(matrix_for_weights(5, [1, 1, 4, 4]).is_err());
    }

    #[test]
    fn companion_round_trip_for_rational_spectra() {
        let mut realised = Vec::new();
        for n in 2..=12u64 {
            for k in (1..n).filter(|k| k.gcd(&n) == 1) {
                let class = canonical_form(n as i64, k as i64).unwrap();
                let Ok(m) = matrix_for_weights(n, [1, k, n - k, n - 1]) else {
                    continue;
                };
                assert_eq!(identify_from_matrix(&m).unwrap().class, class);
                realised.push((class.n(), class.k()));
            }
        }
        realised.sort();
        realised.dedup();
        let expected = vec![(2, 1), (3, 1), (4, 1), (5, 2), (6, 1), (8, 3), (10, 3), (12, 5)];
        assert_eq!(realised, expected);
    }

    #[test]
    fn matrix_action_identity() {
        for n in 1..=20i64 {
            for k in 0..n.max(1) {
                if canonical_form(n, k).is_ok() {
                    assert!(verify_matrix_action(n, k).unwrap(), "n={n} k={k}");
                }
            }
        }
        assert!(verify_matrix_action(5, 2).unwrap());
        assert!(verify_matrix_action(2, 1).unwrap());
        assert!(verify_matrix_action(6, 3).is_err());
    }
}
