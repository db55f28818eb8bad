use std::collections::BTreeSet;
use std::sync::Arc;

use qmckay::group::{parse_group_spec, CharacterTable};
use qmckay::toroidal::{
    specialize_one_param, verify_relation, Dictionary, Orientation, Relation, RepOptions, StructureMatrix, ToroidalRep,
    Variant, Window,
};
use qmckay::vertex::LatticeConvention;

fn table(spec: &str) -> Arc<CharacterTable> {
    Arc::new(parse_group_spec(spec).unwrap())
}

const SMALL: Window = Window {
    degree: 2,
    modes: 1,
    radius: 1,
};

fn failures(rep: &ToroidalRep, window: &Window) -> BTreeSet<String> {
    Relation::SUITE
        .iter()
        .chain(Relation::SERRE.iter())
        .map(|&r| verify_relation(rep, r, window))
        .filter(|r| !r.pass && !r.amended.as_ref().is_some_and(|a| a.pass))
        .map(|r| r.relation)
        .collect()
}

#[test]
fn structure_matrix_degenerates_to_q_power_cartan() {
    for spec in ["cyclic:3", "cyclic:5", "binary_dihedral:2", "binary_tetrahedral"] {
        let t = table(spec);
        let rep = ToroidalRep::build(&t, Variant::Plain, RepOptions::default()).unwrap();
        let m = &rep.structure;
        let cartan: Vec<Vec<i32>> = m.cartan.iter().map(|r| r.iter().map(|&x| x as i32).collect()).collect();
        assert_eq!(m.q_exponents(), cartan, "{spec}");
        for i in 0..m.size() {
            assert_eq!(m.get(i, i), qmckay::RSLaurent::rs(1, -1));
        }
    }
}

#[test]
fn structure_matrix_orientation() {
    let c = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
    let lower = StructureMatrix::new(c.clone(), None, Orientation::LowerToHigher).unwrap();
    assert_eq!(lower.get(0, 2), qmckay::RSLaurent::rs(-1, 0));
    assert_eq!(lower.get(2, 0), qmckay::RSLaurent::rs(0, 1));
    let cyclic = StructureMatrix::new(c, None, Orientation::Cyclic).unwrap();
    assert_eq!(cyclic.get(2, 0), qmckay::RSLaurent::rs(-1, 0));
    assert!(StructureMatrix::new(vec![vec![1]], None, Orientation::LowerToHigher).is_err());
}

#[test]
fn relation_names() {
    assert_eq!(Relation::parse("t6b"), Some(Relation::D6b));
    assert_eq!(Relation::parse("D9_2"), Some(Relation::D9_2));
    assert_eq!(Relation::D7.name(true), "T7");
    assert_eq!(Relation::parse("D10"), None);
}

#[test]
fn order_four_plain_both_dictionaries() {
    let t = table("cyclic:4");
    for dictionary in [Dictionary::First, Dictionary::Second] {
        let rep = ToroidalRep::build(
            &t,
            Variant::Plain,
            RepOptions {
                dictionary,
                ..RepOptions::default()
            },
        )
        .unwrap();
        assert!(failures(&rep, &SMALL).is_empty(), "{dictionary:?}");
    }
}

#[test]
fn order_four_kappa_needs_only_the_t7_amendment() {
    let t = table("cyclic:4");
    let rep = ToroidalRep::build(&t, Variant::Kappa, RepOptions::default()).unwrap();
    assert!(failures(&rep, &SMALL).is_empty());
    let t7 = verify_relation(&rep, Relation::D7, &SMALL);
    assert!(!t7.pass);
    assert!(t7.amended.unwrap().pass);
}

#[test]
fn order_four_affine_restriction() {
    let t = table("cyclic:4");
    let rep = ToroidalRep::build(&t, Variant::Affine, RepOptions::default()).unwrap();
    assert!(rep.is_affine());
    assert!(!rep.indices.contains(&0));
    assert!(failures(&rep, &SMALL).is_empty());
}

#[test]
fn literal_cocycle_is_detected() {
    let t = table("cyclic:3");
    let rep = ToroidalRep::build(
        &t,
        Variant::Plain,
        RepOptions {
            convention: LatticeConvention::LITERAL,
            ..RepOptions::default()
        },
    )
    .unwrap();
    assert!(failures(&rep, &SMALL).contains("D7"));
}

#[test]
fn cyclic_orientation_breaks_d7() {
    let t = table("cyclic:3");
    let rep = ToroidalRep::build(
        &t,
        Variant::Plain,
        RepOptions {
            orientation: Orientation::Cyclic,
            ..RepOptions::default()
        },
    )
    .unwrap();
    assert!(failures(&rep, &SMALL).contains("D7"));
}

#[test]
fn one_parameter_model_covers_order_four() {
    let t = table("cyclic:4");
    let rep = ToroidalRep::build(&t, Variant::Plain, RepOptions::default()).unwrap();
    let r = specialize_one_param(&rep, &SMALL).unwrap();
    assert!(r.pass, "{:?}", r.witness.map(|w| w.generator));
    assert!(r.coefficients > 0);
    let kappa = ToroidalRep::build(&t, Variant::Kappa, RepOptions::default()).unwrap();
    assert!(specialize_one_param(&kappa, &SMALL).is_err());
}
