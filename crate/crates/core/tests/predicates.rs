use num_rational::Ratio;
use pathmodel::chains::{a_chain_exists, chain_dist, is_chain, is_maximal_chain, triangle_rel, Chain};
use pathmodel::num::RationalVector;
use pathmodel::operators::{f_alpha, generate_f_orbit};
use pathmodel::paths::{contained_in_delta, delta_length, in_p_z, in_p_z_loc, is_billiard, PLPath, PathFile};
use pathmodel::predicates::{
    check_dilation_theorem, is_generalized_hecke, is_generalized_ls1, is_hecke_path, is_ls_path,
    satisfies_chain_condition, satisfies_simple_chain_condition,
};
use pathmodel::tensor::generalized_seed;
use pathmodel::weyl::RootSet;
use pathmodel::{Path, RootSystem, Vector};

type Q = Ratio<i64>;

fn v(x: &[i64]) -> Vector {
    Vector::from_ints(x)
}

fn sys(t: &str) -> RootSystem {
    RootSystem::parse(t).unwrap()
}

fn closing_example() -> Path {
    PathFile::parse(include_str!("../../../fixtures/a2_hecke_not_ls.json")).unwrap().to_path(2).unwrap()
}

fn theta_index(rs: &RootSystem) -> usize {
    rs.positive_roots().iter().position(|r| r.coeffs == vec![1, 1]).unwrap()
}

#[test]
fn closing_example_predicates() {
    let rs = sys("A2");
    let p = closing_example();
    assert_eq!(p.vertices()[1], RationalVector(vec![Q::new(-1, 2), Q::new(-1, 2)]));
    assert_eq!(delta_length(&rs, &p), v(&[1, 1]));
    assert!(is_billiard(&rs, &p));
    assert!(satisfies_chain_condition(&rs, &p).unwrap().verdict);
    assert!(is_hecke_path(&rs, &p).unwrap().verdict);
    assert!(satisfies_simple_chain_condition(&rs, &p).unwrap().verdict);
    assert!(!is_ls_path(&rs, &p, &v(&[1, 1])).unwrap().verdict);
    assert!(!in_p_z(&rs, &p));
    assert!(!in_p_z_loc(&rs, &p));
    assert!(!is_generalized_hecke(&rs, &p).unwrap().verdict);
    assert!(!contained_in_delta(&v(&[0, 0]), &p));
    let h = is_hecke_path(&rs, &p).unwrap();
    let chain = h.breaks[0].chain.as_ref().unwrap();
    assert_eq!(chain.roots, vec![vec![1, 1]]);
}

#[test]
fn straight_paths() {
    let rs = sys("B2");
    let p = Path::pi(&v(&[2, 1]));
    assert!(is_hecke_path(&rs, &p).unwrap().verdict);
    assert!(is_ls_path(&rs, &p, &v(&[2, 1])).unwrap().verdict);
    assert!(satisfies_simple_chain_condition(&rs, &p).unwrap().verdict);
    assert!(is_generalized_hecke(&rs, &Path::pi(&v(&[3, 0]))).unwrap().verdict);
    assert_eq!(p.dilate(&Q::from_integer(2)).unwrap(), Path::pi(&v(&[4, 2])));
}

#[test]
fn a1_turn_at_non_wall_fails() {
    let rs = sys("A1");
    let p = Path::from_steps(1, vec![RationalVector(vec![Q::new(1, 2)]), RationalVector(vec![Q::new(-1, 2)])]).unwrap();
    assert!(!satisfies_chain_condition(&rs, &p).unwrap().verdict);
    assert!(!is_hecke_path(&rs, &p).unwrap().verdict);
}

#[test]
fn a1_lowered_path_is_ls() {
    let rs = sys("A1");
    let q = f_alpha(&rs, &Path::pi(&v(&[1])), 0).unwrap();
    assert_eq!(q, Path::pi(&v(&[-1])));
    assert!(is_ls_path(&rs, &q, &v(&[1])).unwrap().verdict);
    assert!(contained_in_delta(&v(&[1]), &q));
}

#[test]
fn concatenation_is_not_billiard() {
    let rs = sys("A2");
    let (p, blocks) = generalized_seed(&v(&[1, 1]), &[0, 1]);
    assert!(!is_billiard(&rs, &p));
    assert!(!is_hecke_path(&rs, &p).unwrap().verdict);
    assert!(is_generalized_ls1(&rs, &p, &blocks).unwrap().verdict);
    assert!(is_generalized_hecke(&rs, &p).unwrap().verdict);
    let q = f_alpha(&rs, &p, 0).unwrap();
    assert!(is_generalized_ls1(&rs, &q, &blocks).unwrap().verdict);
}

#[test]
fn generalized_ls_orbits() {
    for (t, beta) in [("A2", vec![1, 2]), ("B2", vec![1, 1]), ("G2", vec![1, 1])] {
        let rs = sys(t);
        let (seed, blocks) = generalized_seed(&v(&beta), &[0, 1]);
        for p in generate_f_orbit(&rs, &seed, 100_000).unwrap() {
            assert!(is_generalized_ls1(&rs, &p, &blocks).unwrap().verdict, "{t} {p}");
            assert!(in_p_z(&rs, &p), "{t} {p}");
        }
    }
}

#[test]
fn ls_orbit_members_pass_ls_predicate() {
    for (t, l) in [("A2", vec![2, 1]), ("B2", vec![1, 1]), ("G2", vec![0, 2])] {
        let rs = sys(t);
        for p in generate_f_orbit(&rs, &Path::pi(&v(&l)), 100_000).unwrap() {
            assert!(is_ls_path(&rs, &p, &v(&l)).unwrap().verdict, "{t} {p}");
        }
    }
}

#[test]
fn dilation_check_requires_generalized_hecke() {
    let rs = sys("A2");
    assert!(check_dilation_theorem(&rs, &closing_example()).is_err());
    assert!(check_dilation_theorem(&rs, &Path::pi(&v(&[1, 0]))).unwrap().verdict);
}

#[test]
fn chain_examples() {
    let rs = sys("A2");
    let th = theta_index(&rs);
    let full = RootSet::full(&rs);
    let down = Chain { vertices: vec![v(&[-1, -1]), v(&[1, 1])], roots: vec![th] };
    let up = Chain { vertices: vec![v(&[1, 1]), v(&[-1, -1])], roots: vec![th] };
    assert!(is_chain(&rs, &down, full).unwrap());
    assert!(!is_chain(&rs, &up, full).unwrap());
    let mut simple = RootSet::empty();
    simple.insert(0);
    assert!(!is_chain(&rs, &down, simple).unwrap());
    assert!(!is_maximal_chain(&rs, &down).unwrap());
    assert!(is_maximal_chain(&rs, &Chain::trivial(v(&[1, 0]))).unwrap());
    assert!(is_maximal_chain(&rs, &up).is_err());
    assert!(!triangle_rel(&rs, &v(&[-1, -1]), &v(&[1, 1])));
    assert!(triangle_rel(&rs, &v(&[1, 0]), &v(&[-1, 0])));
    let a1 = sys("A1");
    assert_eq!(chain_dist(&a1, &v(&[-1]), &v(&[1]), RootSet::full(&a1)).unwrap(), Some(1));
}

#[test]
fn a_chains_in_a1() {
    let rs = sys("A1");
    assert!(a_chain_exists(&rs, &v(&[-1]), &v(&[1]), &Q::new(1, 1)).unwrap());
    assert!(!a_chain_exists(&rs, &v(&[-1]), &v(&[1]), &Q::new(1, 2)).unwrap());
    assert!(!a_chain_exists(&rs, &v(&[1]), &v(&[-1]), &Q::new(1, 1)).unwrap());
    assert!(a_chain_exists(&rs, &v(&[1]), &v(&[1]), &Q::new(1, 3)).unwrap());
}

#[test]
fn path_json_round_trip() {
    let rs = sys("A2");
    let p = closing_example();
    let f = PathFile::from_path(&rs, &p);
    let back: Path = PathFile::parse(&f.to_json()).unwrap().to_path(2).unwrap();
    assert_eq!(back, p);
    assert!(PathFile::parse("{\"system\":\"A2\"}").is_err());
    let bad = r#"{"system":"A2","segments":[{"dir":["1","0"],"dur":"1/2"}]}"#;
    assert!(PathFile::parse(bad).unwrap().to_path::<i64>(2).is_err());
}

#[test]
fn big_integer_paths() {
    let rs = sys("A2");
    let p: PLPath<num_bigint::BigInt> = PLPath::pi(&RationalVector::from_ints(&[1, 1]));
    let orbit = generate_f_orbit(&rs, &p, 1000).unwrap();
    assert_eq!(orbit.len(), 8);
}

#[test]
fn ls_is_preserved_by_reversal() {
    use pathmodel::weyl::contragredient;
    for (t, l) in [("A2", vec![2, 1]), ("B2", vec![1, 1]), ("A3", vec![1, 0, 1])] {
        let rs = sys(t);
        let lam = v(&l);
        let dual = contragredient(&rs, &lam).unwrap();
        for p in generate_f_orbit(&rs, &Path::pi(&lam), 100_000).unwrap() {
            assert!(is_ls_path(&rs, &p.reverse(), &dual).unwrap().verdict, "{t} {p}");
        }
    }
}
