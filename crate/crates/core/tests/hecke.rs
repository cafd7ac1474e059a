use pathmodel::hecke_search::{dilation_sweep, enumerate_generalized_hecke, hecke_exists};
use pathmodel::predicates::satisfies_chain_condition;
use pathmodel::tensor::oracle_decompose;
use pathmodel::{RootSystem, Vector};

fn v(x: &[i64]) -> Vector {
    Vector::from_ints(x)
}

#[test]
fn straight_segment_when_sum_is_dominant() {
    let rs = RootSystem::parse("A2").unwrap();
    let r = hecke_exists(&rs, &v(&[1, 0]), &v(&[0, 2]), &v(&[1, 2]), None).unwrap();
    assert!(r.exists);
    assert_eq!(r.witness.unwrap().num_segments(), 1);
}

#[test]
fn a1_no_turn_at_half() {
    let rs = RootSystem::parse("A1").unwrap();
    for bound in [1, 2, 6, 24] {
        let r = hecke_exists(&rs, &v(&[0]), &v(&[1]), &v(&[0]), Some(bound)).unwrap();
        assert!(!r.exists);
    }
}

#[test]
fn a1_turn_at_integer_wall() {
    let rs = RootSystem::parse("A1").unwrap();
    let r = hecke_exists(&rs, &v(&[1]), &v(&[2]), &v(&[1]), None).unwrap();
    assert!(r.exists);
    assert_eq!(r.witness.unwrap().num_segments(), 2);
}

#[test]
fn tensor_support_has_hecke_witness() {
    for ty in ["A2", "B2"] {
        let rs = RootSystem::parse(ty).unwrap();
        for a in [[1, 0], [0, 1], [1, 1]] {
            for b in [[1, 0], [0, 1], [1, 1]] {
                let t = oracle_decompose(&rs, &v(&a), &v(&b)).unwrap();
                for g in t.entries.keys() {
                    let r = hecke_exists(&rs, &v(&a), &v(&b), &v(g), None).unwrap();
                    assert!(r.exists, "{ty} {a:?} {b:?} {g:?}");
                }
            }
        }
    }
}

#[test]
fn enumeration_satisfies_chain_condition() {
    let rs = RootSystem::parse("B2").unwrap();
    let ps = enumerate_generalized_hecke(&rs, &[v(&[1, 0]), v(&[0, 1])], 2, 100_000).unwrap();
    assert!(!ps.is_empty());
    for p in &ps {
        assert!(satisfies_chain_condition(&rs, p).unwrap().verdict);
    }
}

#[test]
fn dilation_sweeps_are_clean() {
    for ty in ["A2", "B2"] {
        let rs = RootSystem::parse(ty).unwrap();
        let r = dilation_sweep(&rs, &[v(&[1, 0]), v(&[0, 1])], 2, 100_000).unwrap();
        eprintln!("{ty}: {} paths, {} need dilation", r.paths_checked, r.need_dilation);
        assert!(r.counterexamples.is_empty());
    }
}

mod monotone {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn raising_the_bound_keeps_witnesses(
            t in prop_oneof![Just("A2"), Just("B2")],
            a in proptest::collection::vec(0i64..3, 2),
            b in proptest::collection::vec(0i64..3, 2),
            g in proptest::collection::vec(0i64..4, 2),
            bound in 1u64..8,
        ) {
            let rs = RootSystem::parse(t).unwrap();
            let lo = hecke_exists(&rs, &v(&a), &v(&b), &v(&g), Some(bound)).unwrap();
            let hi = hecke_exists(&rs, &v(&a), &v(&b), &v(&g), Some(bound * 4)).unwrap();
            prop_assert!(!lo.exists || hi.exists);
            prop_assert!(hi.pruned <= lo.pruned);
        }
    }
}

#[test]
fn rejects_non_coweight_length() {
    let rs = RootSystem::parse("A2").unwrap();
    let half =
        pathmodel::num::RationalVector(vec![num_rational::Ratio::new(1, 2), num_rational::Ratio::from_integer(0)]);
    assert!(hecke_exists(&rs, &v(&[0, 0]), &half, &v(&[0, 0]), None).is_err());
    assert!(hecke_exists(&rs, &v(&[0, 0]), &v(&[-1, 0]), &v(&[0, 0]), None).is_err());
}
