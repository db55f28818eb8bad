use std::sync::Arc;

use qmckay::fock::{heisenberg_basis, Alphabet, FockKey, FockSpace, FockVector};
use qmckay::group::{parse_group_spec, CharacterTable};
use qmckay::mckay::{mckay_weight, quantum_cartan};
use qmckay::RSLaurent;

fn table(spec: &str) -> Arc<CharacterTable> {
    Arc::new(parse_group_spec(spec).unwrap())
}

#[test]
fn one_particle_pairing_is_the_cartan_entry_at_level_n() {
    let t = table("cyclic:3");
    let xi = mckay_weight(&t).unwrap();
    let a = quantum_cartan(&t, &xi).unwrap();
    let fs = FockSpace::new(&xi);
    let vac = FockVector::vacuum(&t);
    for n in 1..=3u32 {
        for i in 0..3 {
            for j in 0..3 {
                let got = fs.form(&vac.create(n, i), &vac.create(n, j));
                let expect = a.get(i, j).substitute(n as i32).unwrap().scale_int(n as i64);
                assert_eq!(got, expect, "n={n} ({i},{j})");
            }
        }
    }
}

#[test]
fn annihilation_then_creation_counts_factors() {
    // a_n(γ_i) a_{-n}(γ_i)^2 |0⟩ = 2 n ⟨γ_i,γ_i⟩_n a_{-n}(γ_i)|0⟩.
    let t = table("cyclic:2");
    let xi = mckay_weight(&t).unwrap();
    let fs = FockSpace::new(&xi);
    let v = FockVector::vacuum(&t).create(2, 0).create(2, 0);
    let w = fs.apply(2, 0, &v);
    let expect = FockVector::vacuum(&t).create(2, 0).scale(&fs.pairing(2)[0][0].scale_int(4));
    assert_eq!(w, expect);
}

#[test]
fn alphabet_conversion_round_trips() {
    let t = table("binary_dihedral:2");
    let k = t.num_chars();
    let all: Vec<usize> = (0..k).collect();
    for key in heisenberg_basis(k, &all, 3, &vec![0; k]) {
        let v = FockVector::basis(&t, key.clone());
        assert_eq!(v.convert(Alphabet::Class).convert(Alphabet::Character), v, "{:?}", key.modes);
    }
}

#[test]
fn json_round_trip() {
    let t = table("cyclic:3");
    let mut v = FockVector::zero(&t);
    v.add_term(FockKey::new(vec![(1, 0), (2, 2)], vec![1, -1, 0]), RSLaurent::uv(1, -1));
    v.add_term(FockKey::vacuum(3), RSLaurent::frac(-3, 2));
    let j = v.to_json();
    assert_eq!(FockVector::from_json(&t, &j).unwrap(), v);
    assert_eq!(serde_json::to_string(&j).unwrap(), serde_json::to_string(&v.clone().to_json()).unwrap());
}

#[test]
fn basis_sizes() {
    // Monomials of degree ≤ 3 in k colours: Σ_{d ≤ 3} (coefficient of x^d in Π(1−x^m)^{−k}).
    for (k, expect) in [(1usize, 1 + 1 + 2 + 3), (2, 1 + 2 + 5 + 10), (3, 1 + 3 + 9 + 22)] {
        let all: Vec<usize> = (0..k).collect();
        assert_eq!(heisenberg_basis(k, &all, 3, &vec![0; k]).len(), expect, "k={k}");
    }
}
