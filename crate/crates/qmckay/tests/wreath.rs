use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qmckay::chmap::{ch, ch_inverse, wreath_product};
use qmckay::fock::FockSpace;
use qmckay::group::{parse_group_spec, CharacterTable};
use qmckay::mckay::{mckay_weight, WeightFunction};
use qmckay::wreath::{class_equation_holds, enumerate_types, partitions, wreath_form, PartValuedFn, WreathClassFunction};
use qmckay::RSLaurent;

fn table(spec: &str) -> Arc<CharacterTable> {
    Arc::new(parse_group_spec(spec).unwrap())
}

/// Coefficients of Π_m (1 − x^m)^{−k} up to x^n.
fn multipartition_counts(k: usize, n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        for j in m..=n {
            p[j] += p[j - m];
        }
    }
    let mut out = vec![0u64; n + 1];
    out[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u64; n + 1];
        for a in 0..=n {
            for b in 0..=n - a {
                next[a + b] += out[a] * p[b];
            }
        }
        out = next;
    }
    out
}

fn z(lambda: &[u32]) -> BigInt {
    let mut counts = BTreeMap::new();
    for &p in lambda {
        *counts.entry(p).or_insert(0u32) += 1;
    }
    let mut acc = BigInt::one();
    for (p, m) in counts {
        for j in 1..=m {
            acc *= BigInt::from(p) * BigInt::from(j);
        }
    }
    acc
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
}

#[test]
fn type_counts_are_multipartition_numbers() {
    for spec in ["cyclic:2", "cyclic:3", "binary_dihedral:2", "binary_tetrahedral"] {
        let t = table(spec);
        let expect = multipartition_counts(t.num_classes(), 5);
        for n in 0..=5u32 {
            assert_eq!(enumerate_types(&t, n).len() as u64, expect[n as usize], "{spec}, n={n}");
        }
    }
    assert_eq!(enumerate_types(&table("cyclic:2"), 2).len(), 5);
}

#[test]
fn centralizer_orders_satisfy_the_class_equation() {
    for spec in ["cyclic:1", "cyclic:3", "binary_dihedral:3", "binary_octahedral"] {
        let t = table(spec);
        for n in 1..=4 {
            let mut sum = BigRational::zero();
            for rho in enumerate_types(&t, n) {
                let mut zr = BigInt::one();
                for (c, lam) in rho.parts().iter().enumerate() {
                    zr *= z(lam) * BigInt::from(t.centralizer(c)).pow(lam.len() as u32);
                }
                assert_eq!(rho.centralizer_order(&t), zr);
                sum += BigRational::new(BigInt::one(), zr);
            }
            assert!(sum.is_one(), "{spec}, n={n}");
            assert!(class_equation_holds(&t, n));
        }
    }
}

fn symmetric_group_character(n: u32, sign: bool) -> WreathClassFunction {
    let t = table("cyclic:1");
    WreathClassFunction::from_fn(&t, n, |rho| {
        let len = rho.part(0).len() as u32;
        if sign && (n - len) % 2 == 1 {
            RSLaurent::int(-1)
        } else {
            RSLaurent::one()
        }
    })
}

#[test]
fn trivial_group_recovers_the_hall_inner_product() {
    // Γ trivial: Γ_n = S_n, ch(1) = h_n, ch(sgn) = e_n, and ⟨p_λ, p_μ⟩ = z_λ δ_λμ.
    let t = table("cyclic:1");
    let xi = WeightFunction::trivial(&t);
    let fs = FockSpace::new(&xi);
    for n in 1..=5u32 {
        let h = ch(&symmetric_group_character(n, false));
        let e = ch(&symmetric_group_character(n, true));
        assert_eq!(fs.form(&h, &h), RSLaurent::one(), "n={n}");
        assert_eq!(fs.form(&e, &e), RSLaurent::one(), "n={n}");
        let cross = if n == 1 { RSLaurent::one() } else { RSLaurent::zero() };
        assert_eq!(fs.form(&h, &e), cross, "n={n}");
        for lam in partitions(n) {
            let rho = PartValuedFn::single(1, 0, lam.clone());
            let mut f = WreathClassFunction::zero(&t, n);
            f.set(rho, RSLaurent::int(1)).unwrap();
            let p = ch(&f);
            let zl = RSLaurent::constant(qmckay::CycScalar::rational(BigRational::new(BigInt::one(), z(&lam))));
            assert_eq!(fs.form(&p, &p), zl, "{lam:?}");
        }
    }
}

#[test]
fn induction_product_of_trivial_characters() {
    // h_1 · h_1 = h_2 + e_2 for S_2.
    let one = symmetric_group_character(1, false);
    let prod = wreath_product(&one, &one).unwrap();
    let expect = WreathClassFunction::from_fn(&table("cyclic:1"), 2, |rho| {
        if rho.part(0).len() == 2 {
            RSLaurent::int(2)
        } else {
            RSLaurent::zero()
        }
    });
    assert_eq!(prod, expect);
}

#[test]
fn wreath_form_is_the_mckay_form_at_n_equal_one() {
    use qmckay::group::ClassFunctionRS;
    use qmckay::mckay::weighted_form;
    let t = table("binary_dihedral:2");
    let xi = mckay_weight(&t).unwrap();
    for i in 0..t.num_chars() {
        for j in 0..t.num_chars() {
            let lift = |g: usize| {
                WreathClassFunction::from_fn(&t, 1, |rho| {
                    let c = rho.parts().iter().position(|p| !p.is_empty()).unwrap();
                    RSLaurent::constant(t.value(g, c).clone())
                })
            };
            let gi = ClassFunctionRS::character(&t, i, RSLaurent::one());
            let gj = ClassFunctionRS::character(&t, j, RSLaurent::one());
            assert_eq!(
                wreath_form(&lift(i), &lift(j), &xi).unwrap(),
                weighted_form(&gi, &gj, &xi).unwrap(),
                "({i},{j})"
            );
        }
    }
}

fn class_function(spec: &'static str, n: u32) -> impl Strategy<Value = WreathClassFunction> {
    let t = table(spec);
    let types = enumerate_types(&t, n);
    prop::collection::vec((-3i64..=3, -2i32..=2, -2i32..=2), types.len()).prop_map(move |vals| {
        let mut f = WreathClassFunction::zero(&t, n);
        for (rho, (c, a, b)) in types.iter().zip(vals) {
            f.set(rho.clone(), RSLaurent::uv(a, b).scale_int(c)).unwrap();
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ch_is_invertible(f in class_function("cyclic:3", 3)) {
        prop_assert_eq!(ch_inverse(&ch(&f), 3).unwrap(), f);
    }

    #[test]
    fn wreath_product_is_commutative(f in class_function("cyclic:2", 1), g in class_function("cyclic:2", 2)) {
        prop_assert_eq!(wreath_product(&f, &g).unwrap(), wreath_product(&g, &f).unwrap());
    }
}
