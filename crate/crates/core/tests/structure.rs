use num_rational::Ratio;
use pathmodel::chains::{chain_dist, ge, gtrsim, same_chamber};
use pathmodel::num::RationalVector;
use pathmodel::tensor::{weight_multiplicities, weyl_dim};
use pathmodel::weyl::{affine_stabilizer, alcove_vertices, is_special_vertex, length_of_orbit_element, orbit, RootSet};
use pathmodel::{Error, RootSystem, Vector};
use proptest::prelude::*;

fn v(x: &[i64]) -> Vector {
    Vector::from_ints(x)
}

fn sys(t: &str) -> RootSystem {
    RootSystem::parse(t).unwrap()
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

#[test]
fn saturation_factor_is_lcm_of_marks() {
    for t in ["A1", "A4", "B2", "B5", "C3", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2", "A2xB2", "G2xB3"] {
        let rs = sys(t);
        let k = rs.marks().into_iter().fold(1, lcm);
        assert_eq!(rs.saturation_factor() as i64, k, "{t}");
    }
    assert_eq!(sys("G2xB3").saturation_factor(), 6);
    assert_eq!(sys("E6xF4").saturation_factor(), 12);
}

#[test]
fn highest_roots_by_type() {
    assert_eq!(sys("G2").highest_root_coeffs()[0], vec![3, 2]);
    assert_eq!(sys("B3").highest_root_coeffs()[0], vec![1, 2, 2]);
    assert_eq!(sys("C3").highest_root_coeffs()[0], vec![2, 2, 1]);
    assert_eq!(sys("F4").highest_root_coeffs()[0], vec![2, 3, 4, 2]);
    assert_eq!(sys("E8").highest_root_coeffs()[0], vec![2, 3, 4, 6, 5, 4, 3, 2]);
}

#[test]
fn weyl_order_matches_orbit_of_regular_point() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "A1xA2"] {
        let rs = sys(t);
        let o = orbit(&rs, &v(&vec![1; rs.rank()])).unwrap();
        assert_eq!(o.len() as u128, rs.weyl_order(), "{t}");
    }
}

#[test]
fn orbit_refuses_above_bound() {
    assert_eq!(orbit(&sys("F4"), &v(&[0, 0, 0, 1])).unwrap().len(), 24);
    let e = orbit(&sys("E6"), &v(&[1, 0, 0, 0, 0, 0])).unwrap_err();
    assert!(matches!(e, Error::WeylOrderBound { order: 51840, bound: 1152 }));
    assert!(e.is_refusal());
    let rs = sys("E6").with_weyl_order_bound(60_000);
    assert_eq!(orbit(&rs, &v(&[1, 0, 0, 0, 0, 0])).unwrap().len(), 27);
}

#[test]
fn g2_fundamental_dimensions() {
    let rs = sys("G2");
    assert_eq!(weyl_dim(&rs, &[0, 1]), 7.into());
    assert_eq!(weyl_dim(&rs, &[1, 0]), 14.into());
}

#[test]
fn dominant_weights_match_box_enumeration() {
    for (t, lambdas) in
        [("A2", vec![vec![2, 1], vec![3, 0]]), ("B2", vec![vec![1, 2], vec![2, 0]]), ("G2", vec![vec![1, 1]])]
    {
        let rs = sys(t);
        for l in lambdas {
            let wt = weight_multiplicities(&rs, &l).unwrap();
            let mut got: Vec<Vec<i64>> = wt.dominant.iter().map(|(w, _)| w.clone()).collect();
            got.sort();
            let b = 3 * l.iter().sum::<i64>();
            let want: Vec<Vec<i64>> = (0..=b)
                .flat_map(|x| (0..=b).map(move |y| vec![x, y]))
                .filter(|mu| {
                    let q = rs.coroot_coordinates(&v(&l).sub(&v(mu)));
                    q.is_integral() && q.0.iter().all(|r| *r >= Ratio::from_integer(0))
                })
                .collect();
            assert_eq!(got, want, "{t} {l:?}");
            let total: num_bigint::BigInt = wt.all.iter().map(|(_, m)| m.clone()).sum();
            assert_eq!(total, weyl_dim(&rs, &l), "{t} {l:?}");
        }
    }
}

#[test]
fn alcove_vertices_become_special_after_dilation() {
    for t in ["A2", "B2", "C3", "G2", "A1xB2"] {
        let rs = sys(t);
        let k = Ratio::from_integer(rs.saturation_factor() as i64);
        let verts = alcove_vertices(&rs, 1);
        assert!(!verts.is_empty());
        for x in verts {
            assert!(is_special_vertex(&rs, &x.scale(&k)), "{t} {x}");
        }
    }
}

#[test]
fn closing_example_stabilizer() {
    let rs = sys("A2");
    let x: Vector = RationalVector(vec![Ratio::new(-1, 2), Ratio::new(-1, 2)]);
    let roots: Vec<Vec<i64>> =
        affine_stabilizer(&rs, &x).roots.iter().map(|r| rs.positive_roots()[r].coeffs.clone()).collect();
    assert_eq!(roots, vec![vec![1, 1]]);
}

#[test]
fn a2_chain_distance_across_orbit() {
    let rs = sys("A2");
    let full = RootSet::full(&rs);
    assert_eq!(chain_dist(&rs, &v(&[-1, -1]), &v(&[1, 1]), full).unwrap(), Some(3));
    assert!(ge(&rs, &v(&[-1, -1]), &v(&[1, 1]), full).unwrap());
    assert!(!ge(&rs, &v(&[1, 1]), &v(&[-1, -1]), full).unwrap());
    assert!(same_chamber(&rs, &v(&[1, 0]), &v(&[1, 1])));
}

fn orbit_strategy() -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    prop_oneof![
        (0i64..3, 0i64..3).prop_map(|(a, b)| ("A2", vec![a, b])),
        (0i64..3, 0i64..3).prop_map(|(a, b)| ("B2", vec![a, b])),
        (0i64..3, 0i64..3).prop_map(|(a, b)| ("G2", vec![a, b])),
        (0i64..2, 0i64..2, 0i64..2).prop_map(|(a, b, c)| ("A3", vec![a, b, c])),
    ]
    .prop_filter("nonzero", |(_, l)| l.iter().any(|&x| x != 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chain_distance_is_length_difference((t, l) in orbit_strategy(), i in 0usize..1000, j in 0usize..1000) {
        let rs = sys(t);
        let o = orbit(&rs, &v(&l)).unwrap();
        let (a, b) = (&o[i % o.len()], &o[j % o.len()]);
        if let Some(d) = chain_dist(&rs, a, b, RootSet::full(&rs)).unwrap() {
            let la = length_of_orbit_element(&rs, a).unwrap();
            let lb = length_of_orbit_element(&rs, b).unwrap();
            prop_assert_eq!(d as i64, la as i64 - lb as i64);
        }
    }

    #[test]
    fn gtrsim_duality((t, l) in orbit_strategy(), (t2, l2) in orbit_strategy(), i in 0usize..1000, j in 0usize..1000) {
        prop_assume!(t == t2);
        let rs = sys(t);
        let oa = orbit(&rs, &v(&l)).unwrap();
        let od = orbit(&rs, &v(&l2)).unwrap();
        let (a, d) = (&oa[i % oa.len()], &od[j % od.len()]);
        let full = RootSet::full(&rs);
        prop_assert_eq!(gtrsim(&rs, a, d, full).unwrap(), gtrsim(&rs, &d.neg(), &a.neg(), full).unwrap());
    }

    #[test]
    fn dominant_is_minimal((t, l) in orbit_strategy(), i in 0usize..1000) {
        let rs = sys(t);
        let o = orbit(&rs, &v(&l)).unwrap();
        let a = &o[i % o.len()];
        prop_assert!(ge(&rs, a, &v(&l), RootSet::full(&rs)).unwrap());
    }
}
