use proptest::prelude::*;

use hyperconifold::classify::canonical_form;
use hyperconifold::intersect::{adjunction_check, exceptional_surfaces, local_ample_cone, triple_intersections};
use hyperconifold::mirror::{mirror_nodes, mirror_polynomial};
use hyperconifold::resolve::crepant_resolution;
use hyperconifold::transition::{hodge_after, HodgeData};

fn coprime_class() -> impl Strategy<Value = (i64, i64)> {
    (2i64..16).prop_flat_map(|n| (Just(n), 1..n)).prop_filter("coprime", |(n, k)| num_integer::gcd(*n, *k) == 1)
}

fn class_with_order() -> impl Strategy<Value = ((i64, i64), Vec<usize>)> {
    coprime_class().prop_flat_map(|(n, k)| {
        let c = canonical_form(n, k).unwrap();
        let order: Vec<usize> = (1..c.n() as usize).collect();
        (Just((n, k)), Just(order).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn any_star_order_is_projective_and_consistent(((n, k), order) in class_with_order()) {
        let c = canonical_form(n, k).unwrap();
        let r = crepant_resolution(&c, Some(&order)).unwrap();
        prop_assert_eq!(r.euler_number() as u64, 2 * c.n());
        prop_assert!(!local_ample_cone(&r).is_empty());
        prop_assert!(adjunction_check(&r));

        let t = triple_intersections(&r);
        let surfaces = exceptional_surfaces(&r);
        prop_assert_eq!(t.size(), surfaces.len());
        for (a, s) in surfaces.iter().enumerate() {
            // d_{aaa} = K² = 12 - χ for a smooth rational surface
            prop_assert_eq!(t.get(a, a, a), 12 - s.euler_number() as i64);
            for b in 0..t.size() {
                for d in 0..t.size() {
                    prop_assert_eq!(t.get(a, b, d), t.get(b, d, a));
                }
            }
        }
    }

    #[test]
    fn node_count_matches_hodge_jump((n, k) in coprime_class(), h11 in 1u64..50, h21 in 1u64..50) {
        let c = canonical_form(n, k).unwrap();
        let nodes = mirror_nodes(&mirror_polynomial(&c));
        let after = hodge_after(HodgeData::new(h11, h21), c.n()).unwrap();
        prop_assert_eq!(after.h11 - h11 + 1, nodes.len() as u64);
        prop_assert_eq!(after.euler() - HodgeData::new(h11, h21).euler(), 2 * c.n() as i64);
    }

    #[test]
    fn lens_label_is_orbit_invariant((n, k) in coprime_class()) {
        let a = canonical_form(n, k).unwrap();
        let b = canonical_form(n, n - k).unwrap();
        prop_assert_eq!(a.lens_label(), b.lens_label());
        prop_assert!(a.orbit().contains(&(k as u64)));
    }
}
