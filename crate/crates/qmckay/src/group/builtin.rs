//! The five families of finite subgroups of SU(2).
//!
//! Characters are numbered so that the McKay graph matches the affine
//! Dynkin diagram with node 0 as the affine node.

use std::str::FromStr;

use super::{CharacterTable, ClassInfo, Natural};
use crate::error::Error;
use crate::ring::CycScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic,
    BinaryDihedral,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "cyclic" | "A" => GroupKind::Cyclic,
            "binary_dihedral" | "dihedral" | "D" => GroupKind::BinaryDihedral,
            "binary_tetrahedral" | "tetrahedral" | "E6" => GroupKind::BinaryTetrahedral,
            "binary_octahedral" | "octahedral" | "E7" => GroupKind::BinaryOctahedral,
            "binary_icosahedral" | "icosahedral" | "E8" => GroupKind::BinaryIcosahedral,
            _ => return Err(Error::Invalid(format!("unknown group kind `{s}`"))),
        })
    }
}

/// Parses `kind` or `kind:n`, e.g. `cyclic:3`.
pub fn parse_group_spec(s: &str) -> Result<CharacterTable, Error> {
    let (kind, n) = match s.split_once(':') {
        Some((k, n)) => (
            k,
            Some(n.parse::<u32>().map_err(|_| Error::Invalid(format!("bad group order in `{s}`")))?),
        ),
        None => (s, None),
    };
    builtin_group(kind.parse()?, n)
}

pub fn builtin_group(kind: GroupKind, n: Option<u32>) -> Result<CharacterTable, Error> {
    match kind {
        GroupKind::Cyclic => match n {
            Some(n) if n >= 1 => Ok(cyclic(n)),
            _ => Err(Error::Invalid("cyclic group needs n >= 1".into())),
        },
        GroupKind::BinaryDihedral => match n {
            Some(n) if n >= 2 => Ok(binary_dihedral(n)),
            _ => Err(Error::Invalid("binary dihedral group of order 4n needs n >= 2".into())),
        },
        GroupKind::BinaryTetrahedral => Ok(binary_tetrahedral()),
        GroupKind::BinaryOctahedral => Ok(binary_octahedral()),
        GroupKind::BinaryIcosahedral => Ok(binary_icosahedral()),
    }
}

fn class(id: impl Into<String>, size: u64, order: u64, inverse: usize) -> ClassInfo {
    ClassInfo {
        id: id.into(),
        size,
        centralizer: order / size,
        inverse,
    }
}

fn z(n: u32, k: i64) -> CycScalar {
    CycScalar::zeta(n, k)
}

fn int(k: i64) -> CycScalar {
    CycScalar::int(k)
}

fn ints(v: &[i64]) -> Vec<CycScalar> {
    v.iter().map(|&k| int(k)).collect()
}

fn pointwise(a: &[CycScalar], b: &[CycScalar]) -> Vec<CycScalar> {
    a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
}

fn minus(a: &[CycScalar], b: &[CycScalar]) -> Vec<CycScalar> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

fn permute(a: &[CycScalar], p: &[usize]) -> Vec<CycScalar> {
    p.iter().map(|&i| a[i].clone()).collect()
}

fn build(name: String, order: u64, classes: Vec<ClassInfo>, chars: Vec<Vec<CycScalar>>, nat: Natural) -> CharacterTable {
    CharacterTable::new(name, order, classes, chars, 0, Some(nat)).expect("catalogued table is valid")
}

fn cyclic(n: u32) -> CharacterTable {
    let order = n as u64;
    let classes = (0..n)
        .map(|j| class(format!("g^{j}"), 1, order, ((n - j) % n) as usize))
        .collect();
    let chars = (0..n)
        .map(|k| (0..n).map(|j| z(n, (j as i64) * (k as i64))).collect())
        .collect();
    let nat = Natural::Sum([(1 % n) as usize, ((n - 1) % n) as usize]);
    build(format!("cyclic:{n}"), order, classes, chars, nat)
}

/// Binary dihedral group of order 4n, generated by a of order 2n and b with b² = aⁿ.
fn binary_dihedral(n: u32) -> CharacterTable {
    let order = 4 * n as u64;
    let m = 2 * n;
    let mut classes = vec![class("1", 1, order, 0), class("-1", 1, order, 1)];
    for k in 1..n {
        classes.push(class(format!("a^±{k}"), 2, order, classes.len()));
    }
    let be = classes.len();
    let (inv_e, inv_o) = if n.is_multiple_of(2) { (be, be + 1) } else { (be + 1, be) };
    classes.push(class("b", n as u64, order, inv_e));
    classes.push(class("ba", n as u64, order, inv_o));

    let row = |rot: &dyn Fn(i64) -> CycScalar, b_even: CycScalar, b_odd: CycScalar| {
        let mut row = vec![rot(0), rot(n as i64)];
        row.extend((1..n as i64).map(rot));
        row.push(b_even);
        row.push(b_odd);
        row
    };
    let one = |_: i64| int(1);
    let alt = |j: i64| int(if j % 2 == 0 { 1 } else { -1 });
    // On the a ↦ -1 characters b² = aⁿ forces b ↦ ±1 or ±i.
    let b_minus = if n.is_multiple_of(2) { int(1) } else { CycScalar::i() };

    let mut chars = vec![row(&one, int(1), int(1)), row(&one, int(-1), int(-1))];
    for k in 1..n as i64 {
        let rot = move |j: i64| z(m, k * j).add(&z(m, -k * j));
        chars.push(row(&rot, int(0), int(0)));
    }
    chars.push(row(&alt, b_minus.clone(), b_minus.neg()));
    chars.push(row(&alt, b_minus.neg(), b_minus));
    build(format!("binary_dihedral:{n}"), order, classes, chars, Natural::Irreducible(2))
}

fn binary_tetrahedral() -> CharacterTable {
    let order = 24;
    let classes = vec![
        class("1", 1, order, 0),
        class("-1", 1, order, 1),
        class("i", 6, order, 2),
        class("a", 4, order, 4),
        class("a^5", 4, order, 3),
        class("a^2", 4, order, 6),
        class("a^4", 4, order, 5),
    ];
    let w = z(3, 1);
    let w2 = z(3, 2);
    let lam = vec![int(1), int(1), int(1), w.clone(), w2.clone(), w2.clone(), w.clone()];
    let lam2: Vec<CycScalar> = lam.iter().map(|x| x.mul(x)).collect();
    let pi = ints(&[2, -2, 0, 1, 1, -1, -1]);
    let three = ints(&[3, 3, -1, 0, 0, 0, 0]);
    let chars = vec![
        ints(&[1; 7]),
        lam.clone(),
        pi.clone(),
        pointwise(&pi, &lam),
        three,
        pointwise(&pi, &lam2),
        lam2,
    ];
    build("binary_tetrahedral".into(), order, classes, chars, Natural::Irreducible(2))
}

fn binary_octahedral() -> CharacterTable {
    let order = 48;
    let classes = vec![
        class("1", 1, order, 0),
        class("-1", 1, order, 1),
        class("4A", 6, order, 2),
        class("6A", 8, order, 3),
        class("3A", 8, order, 4),
        class("8A", 6, order, 5),
        class("8B", 6, order, 6),
        class("4B", 12, order, 7),
    ];
    let sqrt2 = z(8, 1).add(&z(8, -1));
    let pi = vec![int(2), int(-2), int(0), int(1), int(-1), sqrt2.clone(), sqrt2.neg(), int(0)];
    let sign = ints(&[1, 1, 1, 1, 1, -1, -1, -1]);
    let one = ints(&[1; 8]);
    let pi2 = pointwise(&pi, &pi);
    let three = minus(&pi2, &one);
    let four = minus(&pointwise(&pi, &three), &pi);
    let three_s = pointwise(&three, &sign);
    let two = minus(&minus(&pointwise(&pi, &four), &three), &three_s);
    let chars = vec![one, pi.clone(), two, three, four, three_s, pointwise(&pi, &sign), sign];
    build("binary_octahedral".into(), order, classes, chars, Natural::Irreducible(1))
}

fn binary_icosahedral() -> CharacterTable {
    let order = 120;
    let classes = vec![
        class("1", 1, order, 0),
        class("-1", 1, order, 1),
        class("4A", 30, order, 2),
        class("6A", 20, order, 3),
        class("3A", 20, order, 4),
        class("10A", 12, order, 5),
        class("10B", 12, order, 6),
        class("5A", 12, order, 7),
        class("5B", 12, order, 8),
    ];
    // φ = 1 + ζ5 + ζ5⁻¹ = (1 + √5)/2.
    let phi = int(1).add(&z(5, 1)).add(&z(5, -1));
    let one = ints(&[1; 9]);
    let pi = vec![
        int(2),
        int(-2),
        int(0),
        int(1),
        int(-1),
        phi.clone(),
        int(1).sub(&phi),
        phi.sub(&int(1)),
        phi.neg(),
    ];
    let galois = [0, 1, 2, 3, 4, 6, 5, 8, 7];
    let g8 = pi.clone();
    let g7 = minus(&pointwise(&pi, &pi), &one);
    let g6 = minus(&pointwise(&pi, &g7), &g8);
    let g5 = minus(&pointwise(&pi, &g6), &g7);
    let g4 = minus(&pointwise(&pi, &g5), &g6);
    let g1 = permute(&pi, &galois);
    let g2 = permute(&g7, &galois);
    let g3 = pointwise(&pi, &g1);
    let chars = vec![one, g1, g2, g3, g4, g5, g6, g7, g8];
    build("binary_icosahedral".into(), order, classes, chars, Natural::Irreducible(8))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_sizes() {
        for (k, n, order, classes) in [
            (GroupKind::Cyclic, Some(5), 5, 5),
            (GroupKind::BinaryDihedral, Some(2), 8, 5),
            (GroupKind::BinaryDihedral, Some(3), 12, 6),
            (GroupKind::BinaryDihedral, Some(5), 20, 8),
            (GroupKind::BinaryTetrahedral, None, 24, 7),
            (GroupKind::BinaryOctahedral, None, 48, 8),
            (GroupKind::BinaryIcosahedral, None, 120, 9),
        ] {
            let t = builtin_group(k, n).unwrap();
            assert_eq!(t.order, order);
            assert_eq!(t.num_classes(), classes);
        }
        assert!(builtin_group(GroupKind::Cyclic, None).is_err());
        assert!("nope".parse::<GroupKind>().is_err());
    }
}
