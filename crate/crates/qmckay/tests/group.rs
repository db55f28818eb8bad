use std::sync::Arc;

use qmckay::group::{parse_group_spec, CharacterTable};
use qmckay::suite::CATALOGUE;
use qmckay::CycScalar;

fn table(spec: &str) -> CharacterTable {
    parse_group_spec(spec).unwrap()
}

#[test]
fn orders() {
    for (spec, order) in [
        ("cyclic:1", 1),
        ("cyclic:7", 7),
        ("binary_dihedral:2", 8),
        ("binary_dihedral:5", 20),
        ("binary_tetrahedral", 24),
        ("binary_octahedral", 48),
        ("binary_icosahedral", 120),
    ] {
        let t = table(spec);
        assert_eq!(t.order, order, "{spec}");
        assert_eq!(t.classes.iter().map(|c| c.size).sum::<u64>(), order, "{spec}");
        assert_eq!(t.num_chars(), t.num_classes(), "{spec}");
    }
}

#[test]
fn aliases_name_the_same_tables() {
    assert_eq!(table("E6"), table("binary_tetrahedral"));
    assert_eq!(table("E7"), table("binary_octahedral"));
    assert_eq!(table("E8"), table("binary_icosahedral"));
}

#[test]
fn orthogonality_relations() {
    for spec in CATALOGUE {
        let t = table(spec);
        let order = CycScalar::int(t.order as i64);
        let k = t.num_chars();
        for i in 0..k {
            for j in 0..k {
                let mut row = CycScalar::zero();
                for c in 0..k {
                    let w = CycScalar::int(t.classes[c].size as i64);
                    row = row.add(&w.mul(t.value(i, c)).mul(&t.value(j, c).conj()));
                }
                let expect = if i == j { order.clone() } else { CycScalar::zero() };
                assert_eq!(row, expect, "{spec}: rows {i}, {j}");
            }
        }
        for c in 0..k {
            for d in 0..k {
                let mut col = CycScalar::zero();
                for i in 0..k {
                    col = col.add(&t.value(i, c).mul(&t.value(i, d).conj()));
                }
                let expect = if c == d {
                    CycScalar::int(t.centralizer(c) as i64)
                } else {
                    CycScalar::zero()
                };
                assert_eq!(col, expect, "{spec}: columns {c}, {d}");
            }
        }
    }
}

#[test]
fn inverse_classes_conjugate_values() {
    for spec in CATALOGUE {
        let t = table(spec);
        for c in 0..t.num_classes() {
            assert_eq!(t.inverse(t.inverse(c)), c);
            for i in 0..t.num_chars() {
                assert_eq!(*t.value(i, t.inverse(c)), t.value(i, c).conj(), "{spec}");
            }
        }
    }
}

#[test]
fn natural_character_is_a_faithful_special_unitary_embedding() {
    for spec in CATALOGUE {
        let t = table(spec);
        let nat = t.natural_values().expect(spec);
        assert_eq!(nat[0], CycScalar::int(2), "{spec}");
        for (c, v) in nat.iter().enumerate().skip(1) {
            // Eigenvalues λ, λ̄ of an element of SU(2): trace is real, and 2 only at the identity.
            assert_eq!(*v, v.conj(), "{spec}");
            assert_ne!(*v, CycScalar::int(2), "{spec}: class {c}");
        }
    }
}

#[test]
fn json_round_trip() {
    for spec in CATALOGUE {
        let t = table(spec);
        let text = serde_json::to_string(&t.to_doc()).unwrap();
        assert_eq!(CharacterTable::from_json(&text).unwrap(), t, "{spec}");
    }
}

#[test]
fn corrupted_tables_are_rejected() {
    let t = table("binary_dihedral:2");
    let mut doc = t.to_doc();
    doc.characters[1][2] = "5".into();
    assert!(CharacterTable::from_doc(&doc).is_err());

    let mut doc = t.to_doc();
    doc.classes[1].size += 1;
    assert!(CharacterTable::from_doc(&doc).is_err());

    let mut doc = t.to_doc();
    doc.characters.pop();
    assert!(CharacterTable::from_doc(&doc).is_err());

    assert!(CharacterTable::from_json("{\"name\": 3}").is_err());
}

#[test]
fn bad_specs() {
    for s in ["", "cyclic", "cyclic:0", "binary_dihedral:1", "E9", "cyclic:x"] {
        assert!(parse_group_spec(s).is_err(), "{s:?}");
    }
}

#[test]
fn tensor_products_stay_in_the_character_ring() {
    use qmckay::group::ClassFunctionRS;
    use qmckay::RSLaurent;
    let t = Arc::new(table("binary_tetrahedral"));
    let nat = t.natural.unwrap().components();
    let v = ClassFunctionRS::character(&t, nat[0], RSLaurent::one());
    let sq = v.tensor(&v).unwrap();
    // Every coefficient of V ⊗ V is a non-negative integer, and the dimensions add to 4.
    let mut dim = 0;
    for (i, c) in sq.coeffs.iter().enumerate() {
        let m = c.to_constant().and_then(|x| x.to_i64()).unwrap();
        assert!(m >= 0);
        dim += m * t.dim(i);
    }
    assert_eq!(dim, 4);
}
