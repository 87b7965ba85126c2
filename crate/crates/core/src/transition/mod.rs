//! Topology of a hyperconifold transition: Hodge numbers, Euler number and
//! the fundamental group of the resolved quotient.

mod group;
mod todd_coxeter;
mod word;

pub use group::{identify_group, FiniteGroup, GroupIdentity, ASSOCIATIVITY_CHECK_ORDER, MAX_GROUP_ORDER};
pub use todd_coxeter::{enumerate_cosets, CosetTable, DEFAULT_COSET_LIMIT};
pub use word::{format_word, parse_word};

use crate::classify::HyperconifoldClass;
use crate::error::{Error, Result};
use crate::intersect::{triple_intersections, IntersectionTensor};
use crate::resolve::Resolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HodgeData {
    pub h11: u64,
    pub h21: u64,
}

impl HodgeData {
    pub fn new(h11: u64, h21: u64) -> Self {
        HodgeData { h11, h21 }
    }

    pub fn euler(&self) -> i64 {
        2 * (self.h11 as i64 - self.h21 as i64)
    }
}

/// Hodge numbers after forming a `C_{n,k}` singularity and resolving it:
/// one complex structure modulus is spent and `n - 1` divisors appear.
pub fn hodge_after(before: HodgeData, n: u64) -> Result<HodgeData> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if before.h21 == 0 {
        return Err(Error::NoModulus);
    }
    Ok(HodgeData { h11: before.h11 + n - 1, h21: before.h21 - 1 })
}

/// Mixed intersection numbers with pulled-back ambient divisors `D_i`.
pub const MIXED_INTERSECTION_STATEMENTS: [&str; 2] =
    ["d̂_{ijk} = d_{ijk} (ambient divisors, unchanged by the transition)", "d̂_{ijα} = d̂_{iαβ} = 0"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionReport {
    pub class: HyperconifoldClass,
    pub before: HodgeData,
    pub after: HodgeData,
    pub euler_change: i64,
    pub group_before: GroupIdentity,
    /// Seeds, as element indices of the original group.
    pub seeds: Vec<usize>,
    /// Normal closure of the seeds, as element indices.
    pub normal_closure: Vec<usize>,
    pub group_after: GroupIdentity,
    pub quotient: FiniteGroup,
    pub resolution: Resolution,
    pub tensor: IntersectionTensor,
    pub mixed_statements: Vec<String>,
}

/// Assembles the transition data for a quotient `X = Y / G` where the
/// elements `seeds` of `G` fix the points that become the singularity.
pub fn transition_report(
    class: &HyperconifoldClass,
    before: HodgeData,
    group: &FiniteGroup,
    seeds: &[usize],
    resolution: &Resolution,
) -> Result<TransitionReport> {
    if resolution.base() != class {
        return Err(Error::InvalidClass {
            n: class.n(),
            k: class.k(),
            reason: format!("resolution is of {}, not {}", resolution.base(), class),
        });
    }
    let after = hodge_after(before, class.n())?;
    let closure = group.normal_closure(seeds)?;
    let quotient = group.quotient_group(&closure)?;
    Ok(TransitionReport {
        class: class.clone(),
        before,
        after,
        euler_change: after.euler() - before.euler(),
        group_before: identify_group(group),
        seeds: seeds.to_vec(),
        normal_closure: closure,
        group_after: identify_group(&quotient),
        quotient,
        resolution: resolution.clone(),
        tensor: triple_intersections(resolution),
        mixed_statements: MIXED_INTERSECTION_STATEMENTS.iter().map(|s| s.to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::canonical_form;
    use crate::resolve::crepant_resolution;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn hodge_shifts() {
        assert_eq!(hodge_after(HodgeData::new(1, 21), 5).unwrap(), HodgeData::new(5, 20));
        assert_eq!(hodge_after(HodgeData::new(1, 3), 10).unwrap(), HodgeData::new(10, 2));
        assert_eq!(hodge_after(HodgeData::new(1, 4), 4).unwrap(), HodgeData::new(4, 3));
        assert_eq!(hodge_after(HodgeData::new(3, 0), 2), Err(Error::NoModulus));
    }

    proptest::proptest! {
        #[test]
        fn euler_changes_by_twice_n(h11 in 0u64..500, h21 in 1u64..500, n in 1u64..100) {
            let before = HodgeData::new(h11, h21);
            let after = hodge_after(before, n).unwrap();
            proptest::prop_assert_eq!(after.euler() - before.euler(), 2 * n as i64);
            proptest::prop_assert_eq!((after.h11 - before.h11) + (before.h21 - after.h21), n);
        }
    }

    #[test]
    fn quintic_quotient() {
        let c = canonical_form(5, 2).unwrap();
        let g = FiniteGroup::from_presentation(&strings(&["g"]), &strings(&["g^5"])).unwrap();
        let seed = g.element_of_word("g").unwrap();
        let r = crepant_resolution(&c, None).unwrap();
        let report = transition_report(&c, HodgeData::new(1, 21), &g, &[seed], &r).unwrap();
        assert_eq!(report.after, HodgeData::new(5, 20));
        assert_eq!(report.group_after.label, "trivial");
        assert_eq!(report.euler_change, 10);
        assert_eq!(report.tensor.size(), 4);
    }

    #[test]
    fn wrong_resolution_is_rejected() {
        let g = FiniteGroup::from_presentation(&strings(&["g"]), &strings(&["g^5"])).unwrap();
        let r = crepant_resolution(&canonical_form(5, 1).unwrap(), None).unwrap();
        let c = canonical_form(5, 2).unwrap();
        assert!(transition_report(&c, HodgeData::new(1, 21), &g, &[1], &r).is_err());
    }
}
