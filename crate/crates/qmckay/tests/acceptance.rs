//! End-to-end acceptance run. Prints one line per criterion with its time against its budget.

use std::collections::BTreeSet;
use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use qmckay::group::{parse_group_spec, CharacterTable};
use qmckay::mckay::NONDEG_TOL;
use qmckay::suite::{self, Check, CATALOGUE};
use qmckay::toroidal::{Dictionary, RepOptions, Variant, Window};
use qmckay::vertex::LatticeConvention;

const TOROIDAL: Window = Window {
    degree: 4,
    modes: 2,
    radius: 1,
};
const SERRE: Window = Window {
    degree: 2,
    modes: 1,
    radius: 1,
};
const ONE_PARAM: Window = Window {
    degree: 3,
    modes: 2,
    radius: 1,
};

/// Relations that fail for ℤ/2 on the pair (0, 1), where a_01 = −2 (see the notes in the README).
const Z2_CONFLICT: [&str; 4] = ["D2", "D6a", "D6b", "D7"];

fn group(spec: &str) -> Arc<CharacterTable> {
    Arc::new(parse_group_spec(spec).unwrap())
}

fn options(dictionary: Dictionary) -> RepOptions {
    RepOptions {
        dictionary,
        ..RepOptions::default()
    }
}

fn failing_relations(c: &Check) -> BTreeSet<String> {
    c.detail["relations"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| !r["pass"].as_bool().unwrap() && !r["amended"]["pass"].as_bool().unwrap_or(false))
        .map(|r| r["relation"].as_str().unwrap().to_string())
        .collect()
}

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    expected_pass: bool,
    seconds: f64,
    budget: f64,
    note: String,
}

impl Outcome {
    fn line(&self) -> String {
        format!(
            "criterion {:>2} {:<44} {}  {:>7.2}s / {:>5.0}s  {}\n",
            self.id,
            self.title,
            if self.pass { "PASS" } else { "FAIL" },
            self.seconds,
            self.budget,
            self.note
        )
    }
}

fn run(id: u32, title: &'static str, budget: f64, body: impl FnOnce() -> (bool, bool, String)) -> Outcome {
    let t0 = Instant::now();
    let (pass, expected_pass, note) = body();
    let seconds = t0.elapsed().as_secs_f64();
    let out = Outcome {
        id,
        title,
        pass: pass && seconds <= budget,
        expected_pass,
        seconds,
        budget,
        note,
    };
    // Straight to the process stdout so the line survives test capture.
    let _ = std::io::stdout().lock().write_all(out.line().as_bytes());
    out
}

fn all_pass(checks: &[Check]) -> (bool, String) {
    match checks.iter().find(|c| !c.pass) {
        None => (true, format!("{} checks", checks.len())),
        Some(c) => (false, format!("{} {}: {}", c.check, c.group, c.witness.clone().unwrap_or_default())),
    }
}

fn criterion_1() -> Outcome {
    run(1, "A^{1,1} is the affine Cartan matrix", 5.0, || {
        let checks: Vec<Check> = CATALOGUE
            .iter()
            .map(|g| suite::check_mckay_specialization(&group(g)).unwrap())
            .collect();
        let (p, n) = all_pass(&checks);
        (p, true, n)
    })
}

fn criterion_2() -> Outcome {
    run(2, "character columns are eigenvectors", 60.0, || {
        let checks: Vec<Check> = CATALOGUE
            .iter()
            .map(|g| suite::check_eigenvectors(&group(g)).unwrap())
            .collect();
        let (p, n) = all_pass(&checks);
        (p, true, n)
    })
}

fn criterion_3() -> Outcome {
    run(3, "Heisenberg relations, |m| <= 4, degree <= 6", 120.0, || {
        let checks: Vec<Check> = ["cyclic:2", "cyclic:3"]
            .iter()
            .map(|g| suite::check_heisenberg(&group(g), 4, 6).unwrap())
            .collect();
        let (p, n) = all_pass(&checks);
        (p, true, n)
    })
}

fn criterion_4() -> Outcome {
    run(4, "ch is an isometry, n <= 4", 120.0, || {
        let checks: Vec<Check> = ["cyclic:1", "cyclic:2", "cyclic:3"]
            .iter()
            .map(|g| suite::check_isometry(&group(g), 4).unwrap())
            .collect();
        let (p, n) = all_pass(&checks);
        (p, true, format!("{n}, weights mckay and trivial"))
    })
}

fn criterion_5() -> Outcome {
    run(5, "generating functions, n <= 5", 60.0, || {
        let checks: Vec<Check> = ["cyclic:1", "cyclic:2", "cyclic:3"]
            .iter()
            .map(|g| suite::check_generating_functions(&group(g), 5))
            .collect();
        let (p, n) = all_pass(&checks);
        (p, true, n)
    })
}

fn criterion_6() -> Outcome {
    run(6, "operator products, cases 0, -1, 2", 300.0, || {
        let mut checks = vec![
            suite::check_ope(&group("cyclic:2"), false, 4, 1, None).unwrap(),
            suite::check_ope(&group("cyclic:3"), false, 4, 1, None).unwrap(),
            suite::check_ope(&group("cyclic:3"), true, 4, 1, None).unwrap(),
        ];
        // Neither ℤ/2 nor ℤ/3 has an orthogonal pair; ℤ/4 supplies case 0.
        let z4 = group("cyclic:4");
        for pair in [(0, 2), (1, 3)] {
            checks.push(suite::check_ope(&z4, false, 2, 1, Some(pair)).unwrap());
        }
        let identities: usize = checks.iter().map(|c| c.detail["identities"].as_array().unwrap().len()).sum();
        let (p, n) = all_pass(&checks);
        (p, true, format!("{n}, {identities} identities; displayed forms differ, recorded"))
    })
}

fn criterion_7() -> Outcome {
    run(7, "toroidal relations and cubic Serre", 600.0, || {
        let z3 = group("cyclic:3");
        let mut notes = Vec::new();
        let mut ok = true;
        for d in [Dictionary::First, Dictionary::Second] {
            let c = suite::check_toroidal(&z3, Variant::Plain, options(d), &TOROIDAL, Some(&SERRE)).unwrap();
            assert!(c.pass, "ℤ/3 {d:?}: {:?}", c.witness);
        }
        let k = suite::check_toroidal(&z3, Variant::Kappa, RepOptions::default(), &TOROIDAL, Some(&SERRE)).unwrap();
        assert!(k.pass, "ℤ/3 κ: {:?}", k.witness);
        assert!(k.recorded.iter().any(|r| r.starts_with("T7: holds after amendment")));
        notes.push("Z/3 pass (T7 amended)".to_string());

        let z2 = group("cyclic:2");
        for d in [Dictionary::First, Dictionary::Second] {
            let c = suite::check_toroidal(&z2, Variant::Plain, options(d), &TOROIDAL, Some(&SERRE)).unwrap();
            let failing = failing_relations(&c);
            let expected: BTreeSet<String> = Z2_CONFLICT.iter().map(|s| s.to_string()).collect();
            assert_eq!(failing, expected, "ℤ/2 {d:?}");
            ok &= c.pass;
        }
        notes.push(format!("Z/2 fails {} on a_01 = -2", Z2_CONFLICT.join(",")));

        let literal = RepOptions {
            convention: LatticeConvention::LITERAL,
            ..RepOptions::default()
        };
        let c = suite::check_toroidal(&z3, Variant::Plain, literal, &SERRE, Some(&SERRE)).unwrap();
        let failing = failing_relations(&c);
        assert!(!failing.is_empty());
        notes.push(format!(
            "literal cocycle fails {}",
            failing.into_iter().collect::<Vec<_>>().join(",")
        ));
        (ok, false, notes.join("; "))
    })
}

fn criterion_8() -> Outcome {
    run(8, "affine restriction, indices 1..N", 300.0, || {
        let mut checks = Vec::new();
        for g in ["cyclic:2", "cyclic:3"] {
            for d in [Dictionary::First, Dictionary::Second] {
                checks.push(suite::check_toroidal(&group(g), Variant::Affine, options(d), &TOROIDAL, Some(&SERRE)).unwrap());
            }
        }
        let (p, n) = all_pass(&checks);
        (p, true, n)
    })
}

fn criterion_9() -> Outcome {
    run(9, "(q, q^-1) degeneration against the oracle", 120.0, || {
        let mut checks = Vec::new();
        let mut coefficients = 0;
        for g in ["cyclic:2", "cyclic:3"] {
            for variant in [Variant::Plain, Variant::Affine] {
                for d in [Dictionary::First, Dictionary::Second] {
                    let c = suite::check_one_param(&group(g), variant, options(d), &ONE_PARAM).unwrap();
                    coefficients += c.detail["coefficients"].as_u64().unwrap();
                    checks.push(c);
                }
            }
        }
        let (p, n) = all_pass(&checks);
        (p, true, format!("{n}, {coefficients} coefficients"))
    })
}

fn criterion_10() -> Outcome {
    run(10, "non-degeneracy at t in {2,3,5}", 1.0, || {
        let checks: Vec<Check> = CATALOGUE
            .iter()
            .map(|g| suite::check_nondegeneracy(&group(g), &[2, 3, 5]).unwrap())
            .collect();
        let (p, n) = all_pass(&checks);
        (p, true, format!("{n}, tolerance {NONDEG_TOL:e}"))
    })
}

#[test]
fn acceptance() {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    for o in &outcomes {
        assert!(o.seconds <= o.budget, "criterion {} over budget: {:.1}s", o.id, o.seconds);
        assert_eq!(o.pass, o.expected_pass, "criterion {}: {}", o.id, o.note);
    }
}
