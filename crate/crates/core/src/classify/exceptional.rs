//! Actions combining a torus element with the exchange `y2 <-> y3`.
//!
//! Each candidate is a monomial map `y_i -> exp(2πi φ_i) y_{σ(i)}` with
//! `σ = (2 3)` and phases in `Q/Z`. The scan rejects every candidate some
//! nontrivial power of which fixes a point of the conifold away from the origin.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;

type Phase = Ratio<i64>;

fn frac(p: Phase) -> Phase {
    p - p.floor()
}

/// `g: (y1, y2, y3, y4) -> (η y1, η^k y3, η^{n-k} y2, η^{n-1} y4)` with `η = exp(πi/n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExchangeAction {
    pub n: u64,
    pub k: u64,
}

/// A monomial linear map on C⁴: `y_i -> exp(2πi phase_i) y_{perm_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct MonomialMap {
    perm: [usize; 4],
    phase: [Phase; 4],
}

impl MonomialMap {
    fn identity() -> Self {
        MonomialMap { perm: [0, 1, 2, 3], phase: [Phase::zero(); 4] }
    }

    /// `self` followed by `other`.
    fn then(&self, other: &MonomialMap) -> MonomialMap {
        // other(self(y))_i = e(ψ_i) self(y)_{τ(i)} = e(ψ_i + φ_{τ(i)}) y_{σ(τ(i))}
        let mut perm = [0; 4];
        let mut phase = [Phase::zero(); 4];
        for i in 0..4 {
            let t = other.perm[i];
            perm[i] = self.perm[t];
            phase[i] = frac(other.phase[i] + self.phase[t]);
        }
        MonomialMap { perm, phase }
    }

    fn is_identity(&self) -> bool {
        *self == MonomialMap::identity()
    }

    fn sign(&self) -> i64 {
        let mut sign = 1;
        let mut seen = [false; 4];
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Whether the fixed subspace meets `y1 y4 - y2 y3 = 0` only at the origin.
    ///
    /// Only `σ ∈ {id, (2 3)}` occurs here. A fixed coordinate line always lies
    /// on the conifold; the fixed line `y2 = a y3` of the 2-cycle meets it
    /// only at 0; a fixed space of dimension two or more always meets it.
    fn fixes_only_origin(&self) -> bool {
        let mut lines = Vec::new();
        let mut seen = [false; 4];
        for i in 0..4 {
            if seen[i] {
                continue;
            }
            seen[i] = true;
            let j = self.perm[i];
            if j == i {
                if self.phase[i].is_zero() {
                    lines.push(false);
                }
            } else {
                seen[j] = true;
                if frac(self.phase[i] + self.phase[j]).is_zero() {
                    lines.push((i, j) == (1, 2));
                }
            }
        }
        match lines.as_slice() {
            [] => true,
            [off_conifold] => *off_conifold,
            _ => false,
        }
    }
}

impl ExchangeAction {
    fn map(&self) -> MonomialMap {
        let (n, k) = (self.n as i64, self.k as i64);
        let eta = |e: i64| frac(Phase::new(e, 2 * n));
        MonomialMap { perm: [0, 2, 1, 3], phase: [eta(1), eta(k), eta(n - k), eta(n - 1)] }
    }

    /// Phases `φ_i` (as fractions of a full turn) of the images of `y1..y4`.
    pub fn phases(&self) -> [Phase; 4] {
        self.map().phase
    }

    pub fn order(&self) -> u64 {
        let g = self.map();
        let mut power = g.clone();
        let mut order = 1;
        while !power.is_identity() {
            power = power.then(&g);
            order += 1;
        }
        order
    }

    /// Phase by which `p = y1 y4 - y2 y3` is multiplied, if it is a multiple of `p`.
    pub fn p_phase(&self) -> Option<Phase> {
        let ph = self.phases();
        let a = frac(ph[0] + ph[3]);
        let b = frac(ph[1] + ph[2]);
        (a == b).then_some(a)
    }

    /// Phase of `Ω`: the determinant of the linear map divided by the phase of `p`.
    pub fn omega_phase(&self) -> Option<Phase> {
        let g = self.map();
        let p = self.p_phase()?;
        let sign = if g.sign() < 0 { Phase::new(1, 2) } else { Phase::zero() };
        let det = g.phase.iter().fold(sign, |acc, x| acc + x);
        Some(frac(det - p))
    }

    /// Every nontrivial power fixes only the origin of the conifold.
    pub fn acts_with_isolated_fixed_point(&self) -> bool {
        let g = self.map();
        let mut power = g.clone();
        while !power.is_identity() {
            if !power.fixes_only_origin() {
                return false;
            }
            power = power.then(&g);
        }
        true
    }

    /// Renders the action, e.g. `(i y1, y3, -y2, i y4)`.
    pub fn describe(&self) -> String {
        let g = self.map();
        let names = ["y1", "y2", "y3", "y4"];
        let terms: Vec<String> = (0..4)
            .map(|i| {
                let coeff = match (*g.phase[i].numer(), *g.phase[i].denom()) {
                    (0, _) => String::new(),
                    (1, 2) => "-".into(),
                    (1, 4) => "i ".into(),
                    (3, 4) => "-i ".into(),
                    (p, q) => format!("e^(2πi·{p}/{q}) "),
                };
                format!("{coeff}{}", names[g.perm[i]])
            })
            .collect();
        format!("({})", terms.join(", "))
    }

    /// Invariant of the action up to torus conjugation preserving `p` and the
    /// relabelling `y2 <-> y3`: the phases of `y1`, `y4` and the product of
    /// the off-diagonal phases.
    fn class_key(&self) -> (Phase, Phase, Phase) {
        let ph = self.phases();
        let (a, b) = if ph[0] <= ph[3] { (ph[0], ph[3]) } else { (ph[3], ph[0]) };
        (a, b, frac(ph[1] + ph[2]))
    }
}

/// One conjugacy class of surviving actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalClass {
    pub representative: ExchangeAction,
    pub members: Vec<ExchangeAction>,
    pub order: u64,
    pub p_phase: Phase,
    pub omega_phase: Phase,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalScan {
    pub n_max: u64,
    pub candidates: usize,
    pub survivors: Vec<ExchangeAction>,
    pub classes: Vec<ExceptionalClass>,
}

/// Scans all exchange-type generators with `n <= n_max` and `0 <= k <= n`.
pub fn exceptional_scan(n_max: u64) -> ExceptionalScan {
    let mut candidates = 0;
    let mut survivors = Vec::new();
    for n in 1..=n_max {
        for k in 0..=n {
            candidates += 1;
            let g = ExchangeAction { n, k };
            let p_odd = g.p_phase() == Some(Phase::new(1, 2));
            let omega_invariant = g.omega_phase() == Some(Phase::zero());
            if p_odd && omega_invariant && g.acts_with_isolated_fixed_point() {
                survivors.push(g);
            }
        }
    }
    let mut grouped: BTreeMap<(Phase, Phase, Phase), Vec<ExchangeAction>> = BTreeMap::new();
    for g in &survivors {
        grouped.entry(g.class_key()).or_default().push(*g);
    }
    let classes = grouped
        .into_values()
        .map(|members| {
            let rep = members[0];
            ExceptionalClass {
                representative: rep,
                order: rep.order(),
                p_phase: rep.p_phase().expect("survivor preserves p"),
                omega_phase: rep.omega_phase().expect("survivor preserves p"),
                description: rep.describe(),
                members,
            }
        })
        .collect();
    ExceptionalScan { n_max, candidates, survivors, classes }
}

impl ExceptionalClass {
    /// The phase of `p` as a complex sign, `-1` for a half turn.
    pub fn p_sign(&self) -> i64 {
        phase_sign(self.p_phase)
    }

    pub fn omega_sign(&self) -> i64 {
        phase_sign(self.omega_phase)
    }
}

fn phase_sign(p: Phase) -> i64 {
    if p.is_zero() {
        1
    } else if p == Phase::new(1, 2) {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_action() {
        let g = ExchangeAction { n: 2, k: 0 };
        assert_eq!(g.describe(), "(i y1, y3, -y2, i y4)");
        assert_eq!(g.order(), 4);
        assert_eq!(g.p_phase(), Some(Phase::new(1, 2)));
        assert_eq!(g.omega_phase(), Some(Phase::zero()));
        assert!(g.acts_with_isolated_fixed_point());
    }

    #[test]
    fn fourth_power_fixes_a_line_for_larger_n() {
        for n in 3..=8 {
            for k in 0..=n {
                let g = ExchangeAction { n, k };
                assert!(!g.acts_with_isolated_fixed_point(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn block_squares_to_minus_identity() {
        for n in 1..=10 {
            for k in 0..=n {
                let ph = ExchangeAction { n, k }.phases();
                assert_eq!(frac(ph[1] + ph[2]), Phase::new(1, 2));
            }
        }
    }

    #[test]
    fn scan_finds_one_class() {
        let scan = exceptional_scan(20);
        assert_eq!(scan.classes.len(), 1);
        let class = &scan.classes[0];
        assert_eq!(class.representative, ExchangeAction { n: 2, k: 0 });
        assert_eq!(class.description, "(i y1, y3, -y2, i y4)");
        assert_eq!(class.order, 4);
        assert_eq!(class.p_sign(), -1);
        assert_eq!(class.omega_sign(), 1);
        assert!(scan.survivors.iter().all(|g| g.n == 2));
        assert!(class.members.contains(&ExchangeAction { n: 2, k: 2 }));
    }
}
