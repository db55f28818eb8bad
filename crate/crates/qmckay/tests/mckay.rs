use std::sync::Arc;

use num_rational::BigRational;
use qmckay::group::{parse_group_spec, CharacterTable};
use qmckay::mckay::{
    kappa_weight, mckay_graph, mckay_weight, nondegeneracy_spot_check, quantum_cartan, verify_eigenvectors, weighted_form,
    WeightFunction,
};
use qmckay::group::ClassFunctionRS;
use qmckay::suite::{reference_affine_cartan, CATALOGUE};
use qmckay::{CycScalar, RSLaurent};

fn table(spec: &str) -> Arc<CharacterTable> {
    Arc::new(parse_group_spec(spec).unwrap())
}

/// Multiplicity of χ_j in N ⊗ χ_i, from the orthogonality relations.
fn tensor_multiplicity(t: &CharacterTable, i: usize, j: usize) -> i64 {
    let nat = t.natural_values().unwrap();
    let mut acc = CycScalar::zero();
    for c in 0..t.num_classes() {
        let w = CycScalar::int(t.classes[c].size as i64);
        acc = acc.add(&w.mul(&nat[c]).mul(t.value(i, c)).mul(&t.value(j, c).conj()));
    }
    acc.div(&CycScalar::int(t.order as i64)).unwrap().to_i64().unwrap()
}

#[test]
fn classical_limit_is_two_minus_the_tensor_matrix() {
    for spec in CATALOGUE {
        let t = table(spec);
        let a = quantum_cartan(&t, &mckay_weight(&t).unwrap()).unwrap().at_one_int().unwrap();
        let k = t.num_chars();
        for i in 0..k {
            for j in 0..k {
                let expect = 2 * (i == j) as i64 - tensor_multiplicity(&t, i, j);
                assert_eq!(a[i][j], expect, "{spec} ({i},{j})");
            }
        }
    }
}

#[test]
fn dimension_vector_is_null() {
    for spec in CATALOGUE {
        let t = table(spec);
        let a = quantum_cartan(&t, &mckay_weight(&t).unwrap()).unwrap().at_one_int().unwrap();
        for row in &a {
            let s: i64 = row.iter().enumerate().map(|(j, x)| x * t.dim(j)).sum();
            assert_eq!(s, 0, "{spec}");
        }
    }
}

#[test]
fn graphs_have_the_affine_shape() {
    for spec in CATALOGUE {
        let t = table(spec);
        let g = mckay_graph(&t, &mckay_weight(&t).unwrap()).unwrap();
        let reference = reference_affine_cartan(spec).unwrap();
        let edges: u64 = g.edges.iter().map(|e| e.2).sum();
        let expect: i64 = (0..reference.len())
            .flat_map(|i| (i + 1..reference.len()).map(move |j| (i, j)))
            .map(|(i, j)| -reference[i][j])
            .sum();
        assert_eq!(edges as i64, expect, "{spec}");
        // Trees for D and E, a cycle for A.
        let cycle = spec.starts_with("cyclic");
        assert_eq!(edges as usize, if cycle { g.vertices } else { g.vertices - 1 }, "{spec}");
        assert!(g.to_dot(spec).starts_with("graph "));
    }
}

#[test]
fn quantum_cartan_is_bar_hermitian() {
    for spec in CATALOGUE {
        let t = table(spec);
        assert!(quantum_cartan(&t, &mckay_weight(&t).unwrap()).unwrap().is_bar_hermitian(), "{spec}");
    }
}

#[test]
fn weighted_form_of_characters_matches_the_cartan_entries() {
    let t = table("binary_dihedral:3");
    let xi = mckay_weight(&t).unwrap();
    let a = quantum_cartan(&t, &xi).unwrap();
    for i in 0..t.num_chars() {
        for j in 0..t.num_chars() {
            let gi = ClassFunctionRS::character(&t, i, RSLaurent::one());
            let gj = ClassFunctionRS::character(&t, j, RSLaurent::one());
            assert_eq!(weighted_form(&gi, &gj, &xi).unwrap(), *a.get(i, j), "({i},{j})");
        }
    }
}

#[test]
fn kappa_weight_eigenvectors() {
    for n in 3..=6 {
        let t = table(&format!("cyclic:{n}"));
        let xi = kappa_weight(&t, &RSLaurent::kappa()).unwrap();
        assert!(verify_eigenvectors(&t, &xi).unwrap().pass, "cyclic:{n}");
    }
    assert!(kappa_weight(&table("binary_dihedral:2"), &RSLaurent::kappa()).is_err());
}

#[test]
fn trivial_weight_gives_the_regular_pairing() {
    // ξ = γ_0 gives ⟨γ_i, γ_j⟩ = δ_ij.
    let t = table("binary_octahedral");
    let a = quantum_cartan(&t, &WeightFunction::trivial(&t)).unwrap();
    for i in 0..t.num_chars() {
        for j in 0..t.num_chars() {
            let expect = if i == j { RSLaurent::one() } else { RSLaurent::zero() };
            assert_eq!(*a.get(i, j), expect);
        }
    }
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[test]
fn cyclic_determinant_matches_the_circulant_formula() {
    // At (t, 1/t) the matrix is circulant with diagonal t + 1/t and −1 on the neighbours,
    // so det = Π_k (t + 1/t − 2 cos(2πk/n)).
    for n in 3..=6usize {
        let t = table(&format!("cyclic:{n}"));
        let a = quantum_cartan(&t, &mckay_weight(&t).unwrap()).unwrap();
        for x in [2i64, 3, 5] {
            let r = nondegeneracy_spot_check(&a, &[(rat(x, 1), rat(1, x))]);
            let s = &r.samples[0];
            let d = x as f64 + 1.0 / x as f64;
            let expect: f64 = (0..n)
                .map(|k| d - 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
                .product();
            assert!((s.det - expect).abs() < 1e-9 * expect.abs(), "n={n}, t={x}: {} vs {expect}", s.det);
            assert!(s.minors_positive);
        }
    }
}

#[test]
fn classical_point_is_degenerate() {
    for spec in CATALOGUE {
        let t = table(spec);
        let a = quantum_cartan(&t, &mckay_weight(&t).unwrap()).unwrap();
        let r = nondegeneracy_spot_check(&a, &[(rat(1, 1), rat(1, 1))]);
        assert!(!r.samples[0].det_nonzero, "{spec}");
    }
}

#[test]
fn rational_specialization_of_the_cartan_matrix() {
    let t = table("cyclic:3");
    let a = quantum_cartan(&t, &mckay_weight(&t).unwrap()).unwrap();
    let (r, s) = (CycScalar::int(4), CycScalar::one());
    let m = a.specialize(&r, &s, Some((&CycScalar::int(2), &CycScalar::one()))).unwrap();
    assert_eq!(m[0][0], CycScalar::frac(5, 2));
    assert_eq!(m[0][1], CycScalar::int(-1));
}
