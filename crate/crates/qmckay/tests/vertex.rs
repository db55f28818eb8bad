use std::sync::Arc;

use qmckay::group::{parse_group_spec, CharacterTable};
use qmckay::mckay::mckay_weight;
use qmckay::vertex::{
    lattice_ball, spanning_set, verify_adjointness, CocycleBranch, Lattice, LatticeConvention, VertexSpace,
};
use qmckay::CycScalar;

fn table(spec: &str) -> Arc<CharacterTable> {
    Arc::new(parse_group_spec(spec).unwrap())
}

fn a3_tilde() -> Vec<Vec<i64>> {
    vec![
        vec![2, -1, 0, -1],
        vec![-1, 2, -1, 0],
        vec![0, -1, 2, -1],
        vec![-1, 0, -1, 2],
    ]
}

fn at_one(l: &Lattice, a: &[i32], b: &[i32]) -> CycScalar {
    let one = CycScalar::one();
    l.cocycle(a, b).eval(&one, &one, &one).unwrap()
}

#[test]
fn cocycle_is_bimultiplicative() {
    let l = Lattice::new(a3_tilde(), None).unwrap();
    let vs = lattice_ball(4, &[0, 1, 2, 3], 2);
    for a in &vs {
        for b in &vs {
            for c in vs.iter().take(9) {
                let bc: Vec<i32> = b.iter().zip(c).map(|(x, y)| x + y).collect();
                assert_eq!(l.cocycle(a, &bc), &l.cocycle(a, b) * &l.cocycle(a, c));
            }
        }
    }
}

#[test]
fn sign_branch_commutator_is_the_parity_of_the_pairing() {
    let l = Lattice::new(a3_tilde(), None).unwrap().with_convention(LatticeConvention::CORRECTED);
    assert_eq!(l.convention.branch, CocycleBranch::Sign);
    let vs = lattice_ball(4, &[0, 1, 2, 3], 2);
    for a in &vs {
        for b in &vs {
            let lhs = at_one(&l, a, b).mul(&at_one(&l, b, a).inv().unwrap());
            let expect = CycScalar::int(if l.pairing(a, b) % 2 == 0 { 1 } else { -1 });
            assert_eq!(lhs, expect, "{a:?} {b:?}");
        }
    }
}

#[test]
fn zeta_branch_uses_fourth_roots_on_odd_entries() {
    let l = Lattice::new(a3_tilde(), None).unwrap().with_convention(LatticeConvention::LITERAL);
    let e = |i: usize| {
        let mut v = vec![0; 4];
        v[i] = 1;
        v
    };
    assert_eq!(at_one(&l, &e(1), &e(0)), CycScalar::zeta(4, -1));
    assert_eq!(at_one(&l, &e(0), &e(1)), CycScalar::one());
    assert_eq!(at_one(&l, &e(2), &e(0)), CycScalar::one());
}

#[test]
fn malformed_lattices_are_rejected() {
    assert!(Lattice::new(vec![vec![1]], None).is_err());
    assert!(Lattice::new(vec![vec![2, -1], vec![0, 2]], None).is_err());
    assert!(Lattice::new(vec![vec![2, -1], vec![-1, 2]], Some(vec![vec![0, 1], vec![1, 0]])).is_err());
    assert!(Lattice::new(vec![vec![2, -1], vec![-1, 2]], Some(vec![vec![0, 1], vec![-1, 0]])).is_ok());
}

#[test]
fn spanning_set_counts() {
    let t = table("cyclic:2");
    let vs = VertexSpace::new(&mckay_weight(&t).unwrap(), None).unwrap();
    // β = 0 with Heisenberg degree ≤ 2 (8 monomials), and four roots ±γ_i of norm 2 with degree ≤ 1 (3 each).
    assert_eq!(spanning_set(&vs.lattice, &[0, 1], 2, 1).len(), 8 + 4 * 3);
    assert_eq!(lattice_ball(3, &[0, 1, 2], 1).len(), 7);
}

#[test]
fn creation_and_annihilation_halves_are_adjoint() {
    for spec in ["cyclic:2", "cyclic:3"] {
        let t = table(spec);
        let vs = VertexSpace::new(&mckay_weight(&t).unwrap(), None).unwrap();
        let k = t.num_chars();
        let all: Vec<usize> = (0..k).collect();
        let keys = spanning_set(&vs.lattice, &all, 2, 1);
        for i in 0..k {
            let r = verify_adjointness(&vs, i, &keys, &[-1, 0, 1]);
            assert!(r.pass, "{spec}, i={i}: {:?}", r.witness);
            assert!(r.pairs > 0);
        }
    }
}
