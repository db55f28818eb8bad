//! Character tables and RSLaurent-valued class functions.

mod builtin;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ring::{CycScalar, RSLaurent};

pub use builtin::{builtin_group, parse_group_spec, GroupKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub id: String,
    pub size: u64,
    pub centralizer: u64,
    pub inverse: usize,
}

/// The SU(2) embedding character, either irreducible or a sum of two irreducibles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Natural {
    Irreducible(usize),
    Sum([usize; 2]),
}

impl Natural {
    pub fn components(&self) -> Vec<usize> {
        match *self {
            Natural::Irreducible(i) => vec![i],
            Natural::Sum([i, j]) => vec![i, j],
        }
    }
}

/// Serialized form of a character table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableDoc {
    pub name: String,
    pub order: u64,
    pub classes: Vec<ClassInfo>,
    pub characters: Vec<Vec<String>>,
    #[serde(default)]
    pub trivial: usize,
    #[serde(default)]
    pub natural: Option<Natural>,
}

/// A validated character table. Class 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    pub classes: Vec<ClassInfo>,
    pub chars: Vec<Vec<CycScalar>>,
    pub trivial: usize,
    pub natural: Option<Natural>,
    dual: Vec<usize>,
}

impl CharacterTable {
    /// Validates all table invariants exactly.
    pub fn new(
        name: impl Into<String>,
        order: u64,
        classes: Vec<ClassInfo>,
        chars: Vec<Vec<CycScalar>>,
        trivial: usize,
        natural: Option<Natural>,
    ) -> Result<Self, Error> {
        let bad = |m: String| Err(Error::InvalidTable(m));
        let k = classes.len();
        if k == 0 {
            return bad("no classes".into());
        }
        if chars.len() != k {
            return bad(format!("{} characters for {} classes", chars.len(), k));
        }
        for (i, row) in chars.iter().enumerate() {
            if row.len() != k {
                return bad(format!("character {i} has {} values, expected {k}", row.len()));
            }
        }
        for (c, cl) in classes.iter().enumerate() {
            if cl.size.checked_mul(cl.centralizer) != Some(order) {
                return bad(format!(
                    "class {c}: size {} * centralizer {} != order {order}",
                    cl.size, cl.centralizer
                ));
            }
            if cl.inverse >= k {
                return bad(format!("class {c}: inverse index {} out of range", cl.inverse));
            }
        }
        for (c, cl) in classes.iter().enumerate() {
            if classes[cl.inverse].inverse != c {
                return bad(format!("inverse-class map is not an involution at class {c}"));
            }
        }
        if classes[0].size != 1 || classes[0].inverse != 0 {
            return bad("class 0 must be the identity class".into());
        }
        if classes.iter().map(|c| c.size).sum::<u64>() != order {
            return bad("class sizes do not sum to the group order".into());
        }
        if trivial >= k || chars[trivial].iter().any(|x| !x.is_one()) {
            return bad(format!("character {trivial} is not trivial"));
        }
        let mut sumsq = 0i64;
        for (i, row) in chars.iter().enumerate() {
            match row[0].to_i64() {
                Some(d) if d > 0 => sumsq += d * d,
                _ => return bad(format!("character {i} has non-positive-integer degree")),
            }
        }
        if sumsq != order as i64 {
            return bad(format!("sum of squared degrees {sumsq} != order {order}"));
        }
        for i in 0..k {
            for j in 0..k {
                let mut acc = CycScalar::zero();
                for (c, cl) in classes.iter().enumerate() {
                    acc = acc.add(&chars[i][c].mul(&chars[j][cl.inverse]).scale(&inv_int(cl.centralizer)));
                }
                let want = if i == j { CycScalar::one() } else { CycScalar::zero() };
                if acc != want {
                    return bad(format!("row orthogonality fails at (i,j)=({i},{j}): got {}", acc.pretty()));
                }
            }
        }
        for c in 0..k {
            for c2 in 0..k {
                let mut acc = CycScalar::zero();
                for row in &chars {
                    acc = acc.add(&row[c2].mul(&row[classes[c].inverse]));
                }
                let want = if c == c2 {
                    CycScalar::int(classes[c].centralizer as i64)
                } else {
                    CycScalar::zero()
                };
                if acc != want {
                    return bad(format!("column orthogonality fails at classes ({c},{c2})"));
                }
            }
        }
        let mut dual = Vec::with_capacity(k);
        for row in &chars {
            let conj: Vec<CycScalar> = (0..k).map(|c| row[classes[c].inverse].clone()).collect();
            match chars.iter().position(|r| *r == conj) {
                Some(j) => dual.push(j),
                None => return bad("dual of a character is missing".into()),
            }
        }
        if let Some(nat) = natural {
            let comps = nat.components();
            if comps.iter().any(|&i| i >= k) {
                return bad("natural character index out of range".into());
            }
            let deg: i64 = comps.iter().map(|&i| chars[i][0].to_i64().unwrap()).sum();
            if deg != 2 {
                return bad(format!("natural character has degree {deg}, expected 2"));
            }
        }
        Ok(CharacterTable {
            name: name.into(),
            order,
            classes,
            chars,
            trivial,
            natural,
            dual,
        })
    }

    pub fn from_doc(doc: &TableDoc) -> Result<Self, Error> {
        let chars = doc
            .characters
            .iter()
            .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<CycScalar>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(doc.name.clone(), doc.order, doc.classes.clone(), chars, doc.trivial, doc.natural)
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let doc: TableDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn to_doc(&self) -> TableDoc {
        TableDoc {
            name: self.name.clone(),
            order: self.order,
            classes: self.classes.clone(),
            characters: self
                .chars
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
            trivial: self.trivial,
            natural: self.natural,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_chars(&self) -> usize {
        self.chars.len()
    }

    pub fn value(&self, i: usize, c: usize) -> &CycScalar {
        &self.chars[i][c]
    }

    pub fn inverse(&self, c: usize) -> usize {
        self.classes[c].inverse
    }

    pub fn centralizer(&self, c: usize) -> u64 {
        self.classes[c].centralizer
    }

    /// Index of the dual character γ_i^*, with γ_i^*(c) = γ_i(c^{-1}).
    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn dim(&self, i: usize) -> i64 {
        self.chars[i][0].to_i64().unwrap()
    }

    /// Values of π, the SU(2) embedding character.
    pub fn natural_values(&self) -> Option<Vec<CycScalar>> {
        let comps = self.natural?.components();
        Some(
            (0..self.num_classes())
                .map(|c| {
                    comps
                        .iter()
                        .fold(CycScalar::zero(), |acc, &i| acc.add(&self.chars[i][c]))
                })
                .collect(),
        )
    }

    /// Value of the indicator-dual combination used for class generators: ζ_c^{-1} γ_i(c̄).
    pub fn class_coefficient(&self, c: usize, i: usize) -> CycScalar {
        self.chars[i][self.inverse(c)].scale(&inv_int(self.centralizer(c)))
    }
}

pub(crate) fn inv_int(n: u64) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(n))
}

/// f = Σ_i f_i γ_i with Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunctionRS {
    pub table: Arc<CharacterTable>,
    pub coeffs: Vec<RSLaurent>,
}

impl ClassFunctionRS {
    pub fn zero(table: &Arc<CharacterTable>) -> Self {
        ClassFunctionRS {
            table: table.clone(),
            coeffs: vec![RSLaurent::zero(); table.num_chars()],
        }
    }

    /// γ_i ⊗ f.
    pub fn character(table: &Arc<CharacterTable>, i: usize, f: RSLaurent) -> Self {
        let mut out = Self::zero(table);
        out.coeffs[i] = f;
        out
    }

    /// The class function with the given values on classes.
    pub fn from_class_values(table: &Arc<CharacterTable>, values: &[RSLaurent]) -> Self {
        let mut out = Self::zero(table);
        for i in 0..table.num_chars() {
            let mut acc = RSLaurent::zero();
            for (c, v) in values.iter().enumerate() {
                acc.add_assign_ref(&v.scale(&table.class_coefficient(c, i)));
            }
            out.coeffs[i] = acc;
        }
        out
    }

    pub fn same_table(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.table, &o.table) || self.table == o.table
    }

    pub fn add(&self, o: &Self) -> Result<Self, Error> {
        if !self.same_table(o) {
            return Err(Error::TableMismatch);
        }
        Ok(ClassFunctionRS {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, Error> {
        if !self.same_table(o) {
            return Err(Error::TableMismatch);
        }
        Ok(ClassFunctionRS {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, f: &RSLaurent) -> Self {
        ClassFunctionRS {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|a| a * f).collect(),
        }
    }

    /// f(c).
    pub fn eval(&self, c: usize) -> RSLaurent {
        let mut acc = RSLaurent::zero();
        for (i, f) in self.coeffs.iter().enumerate() {
            if !f.is_zero() {
                acc.add_assign_ref(&f.scale(self.table.value(i, c)));
            }
        }
        acc
    }

    /// f_{(r^m, s^m)}(c): the coefficients are substituted at level m before evaluating.
    pub fn eval_level(&self, c: usize, m: i32) -> RSLaurent {
        self.eval(c).substitute(m).expect("nonzero level")
    }

    pub fn values(&self) -> Vec<RSLaurent> {
        (0..self.table.num_classes()).map(|c| self.eval(c)).collect()
    }

    /// S(f)(c, t1, t2) = f(c^{-1}, t1^{-1}, t2^{-1}).
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero(&self.table);
        for (i, f) in self.coeffs.iter().enumerate() {
            out.coeffs[self.table.dual(i)].add_assign_ref(&f.invert_vars());
        }
        out
    }

    /// Pointwise product, i.e. the tensor product of virtual characters.
    pub fn tensor(&self, o: &Self) -> Result<Self, Error> {
        if !self.same_table(o) {
            return Err(Error::TableMismatch);
        }
        let a = self.values();
        let b = o.values();
        let prod: Vec<RSLaurent> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        Ok(Self::from_class_values(&self.table, &prod))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}
