//! Conjugacy types of Γ_n and class functions on Γ_n × C^× × C^×.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::group::{CharacterTable, ClassFunctionRS};
use crate::mckay::WeightFunction;
use crate::ring::{CycScalar, RSLaurent};

/// All partitions of n, largest first in reverse-lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// z_λ = Π_i i^{m_i} m_i!.
pub fn z_lambda(lambda: &[u32]) -> BigInt {
    let mut z = BigInt::one();
    let mut i = 0;
    while i < lambda.len() {
        let mut j = i;
        while j < lambda.len() && lambda[j] == lambda[i] {
            j += 1;
        }
        let m = (j - i) as u64;
        for k in 1..=m {
            z *= BigInt::from(lambda[i]) * BigInt::from(k);
        }
        i = j;
    }
    z
}

/// Multiplicities m_i of each part size.
pub fn multiplicities(lambda: &[u32]) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for &p in lambda {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// A partition-valued function on an index set (classes or characters).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartValuedFn {
    parts: Vec<Vec<u32>>,
}

impl PartValuedFn {
    pub fn empty(k: usize) -> Self {
        PartValuedFn { parts: vec![Vec::new(); k] }
    }

    /// Builds from per-index partitions, sorting each into weakly decreasing order.
    pub fn new(mut parts: Vec<Vec<u32>>) -> Result<Self, Error> {
        for p in &mut parts {
            if p.contains(&0) {
                return Err(Error::Invalid("partition parts must be positive".into()));
            }
            p.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(PartValuedFn { parts })
    }

    pub fn single(k: usize, idx: usize, lambda: Vec<u32>) -> Self {
        let mut p = Self::empty(k);
        p.parts[idx] = lambda;
        p.parts[idx].sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty())
    }

    pub fn part(&self, idx: usize) -> &[u32] {
        &self.parts[idx]
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    /// ‖ρ‖.
    pub fn weight(&self) -> u32 {
        self.parts.iter().flatten().sum()
    }

    /// ρ̄(c) = ρ(c^{-1}).
    pub fn bar(&self, t: &CharacterTable) -> Self {
        PartValuedFn {
            parts: (0..self.parts.len()).map(|c| self.parts[t.inverse(c)].clone()).collect(),
        }
    }

    /// Juxtaposition ρ ⊔ ρ′.
    pub fn union(&self, o: &Self) -> Self {
        let parts = self
            .parts
            .iter()
            .zip(&o.parts)
            .map(|(a, b)| {
                let mut v: Vec<u32> = a.iter().chain(b).copied().collect();
                v.sort_unstable_by(|x, y| y.cmp(x));
                v
            })
            .collect();
        PartValuedFn { parts }
    }

    /// Z_ρ = Π_c z_{ρ(c)} ζ_c^{l(ρ(c))}, for class-indexed ρ.
    pub fn centralizer_order(&self, t: &CharacterTable) -> BigInt {
        let mut z = BigInt::one();
        for (c, lam) in self.parts.iter().enumerate() {
            z *= z_lambda(lam);
            for _ in 0..lam.len() {
                z *= BigInt::from(t.centralizer(c));
            }
        }
        z
    }

    /// Sparse JSON-friendly map index ↦ partition.
    pub fn to_map(&self) -> BTreeMap<usize, Vec<u32>> {
        self.parts
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_empty())
            .map(|(i, p)| (i, p.clone()))
            .collect()
    }

    pub fn from_map(k: usize, m: &BTreeMap<usize, Vec<u32>>) -> Result<Self, Error> {
        let mut parts = vec![Vec::new(); k];
        for (&i, p) in m {
            if i >= k {
                return Err(Error::Invalid(format!("index {i} out of range")));
            }
            parts[i] = p.clone();
        }
        Self::new(parts)
    }
}

impl fmt::Display for PartValuedFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .to_map()
            .into_iter()
            .map(|(i, p)| {
                let ps: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("{i}:({})", ps.join(","))
            })
            .collect();
        write!(f, "{{{}}}", items.join(" "))
    }
}

impl Serialize for PartValuedFn {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.to_map().serialize(ser)
    }
}

/// All partition-valued functions on k indices with weight n, in canonical order.
pub fn enumerate_types_k(k: usize, n: u32) -> Vec<PartValuedFn> {
    fn go(k: usize, idx: usize, n: u32, cur: &mut Vec<Vec<u32>>, out: &mut Vec<PartValuedFn>) {
        if idx == k {
            if n == 0 {
                out.push(PartValuedFn { parts: cur.clone() });
            }
            return;
        }
        if idx + 1 == k {
            for p in partitions(n) {
                cur.push(p);
                go(k, idx + 1, 0, cur, out);
                cur.pop();
            }
            return;
        }
        for w in (0..=n).rev() {
            for p in partitions(w) {
                cur.push(p);
                go(k, idx + 1, n - w, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(PartValuedFn { parts: vec![] });
        }
        return out;
    }
    go(k, 0, n, &mut Vec::new(), &mut out);
    out
}

/// P_n(Γ_*).
pub fn enumerate_types(t: &CharacterTable, n: u32) -> Vec<PartValuedFn> {
    enumerate_types_k(t.num_classes(), n)
}

fn pow_laurent(x: &RSLaurent, e: usize) -> RSLaurent {
    x.pow(e as i64).expect("nonnegative power")
}

/// η_n(f)(ρ) = Π_c Π_i f_{(r^i,s^i)}(c)^{m_i(ρ(c))}.
pub fn eta_of(f: &ClassFunctionRS, rho: &PartValuedFn) -> RSLaurent {
    let mut acc = RSLaurent::one();
    for (c, lam) in rho.parts.iter().enumerate() {
        for (i, m) in multiplicities(lam) {
            acc = &acc * &pow_laurent(&f.eval_level(c, i as i32), m as usize);
        }
    }
    acc
}

/// ε_n(f)(ρ) = (−1)^n Π_c Π_i (−f_{(r^i,s^i)}(c))^{m_i(ρ(c))}.
pub fn eps_of(f: &ClassFunctionRS, rho: &PartValuedFn) -> RSLaurent {
    let mut acc = if rho.weight().is_multiple_of(2) { RSLaurent::one() } else { RSLaurent::int(-1) };
    for (c, lam) in rho.parts.iter().enumerate() {
        for (i, m) in multiplicities(lam) {
            acc = &acc * &pow_laurent(&(-f.eval_level(c, i as i32)), m as usize);
        }
    }
    acc
}

/// η_n(γ ⊗ r^k s^l)(ρ) = Π_c γ(c)^{l(ρ(c))} r^{nk} s^{nl}.
pub fn eta_value(t: &CharacterTable, gamma: usize, k: i32, l: i32, rho: &PartValuedFn) -> RSLaurent {
    let n = rho.weight() as i32;
    let mut v = CycScalar::one();
    for (c, lam) in rho.parts.iter().enumerate() {
        for _ in 0..lam.len() {
            v = v.mul(t.value(gamma, c));
        }
    }
    RSLaurent::rs(n * k, n * l).scale(&v)
}

/// ε_n(γ ⊗ r^k s^l)(ρ) = (−1)^n Π_c (−γ(c))^{l(ρ(c))} r^{nk} s^{nl}.
pub fn eps_value(t: &CharacterTable, gamma: usize, k: i32, l: i32, rho: &PartValuedFn) -> RSLaurent {
    let n = rho.weight() as i32;
    let mut v = if n % 2 == 0 { CycScalar::one() } else { CycScalar::int(-1) };
    for (c, lam) in rho.parts.iter().enumerate() {
        for _ in 0..lam.len() {
            v = v.mul(&t.value(gamma, c).neg());
        }
    }
    RSLaurent::rs(n * k, n * l).scale(&v)
}

/// A class function on Γ_n × C^× × C^×, stored by type; absent types have value 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathClassFunction {
    pub table: Arc<CharacterTable>,
    pub n: u32,
    values: BTreeMap<PartValuedFn, RSLaurent>,
}

impl WreathClassFunction {
    pub fn zero(t: &Arc<CharacterTable>, n: u32) -> Self {
        WreathClassFunction {
            table: t.clone(),
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, rho: PartValuedFn, v: RSLaurent) -> Result<(), Error> {
        if rho.len() != self.table.num_classes() || rho.weight() != self.n {
            return Err(Error::Invalid(format!("type {rho} does not have weight {}", self.n)));
        }
        if v.is_zero() {
            self.values.remove(&rho);
        } else {
            self.values.insert(rho, v);
        }
        Ok(())
    }

    pub fn get(&self, rho: &PartValuedFn) -> RSLaurent {
        self.values.get(rho).cloned().unwrap_or_else(RSLaurent::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&PartValuedFn, &RSLaurent)> {
        self.values.iter()
    }

    /// Pointwise from a function of the type.
    pub fn from_fn(t: &Arc<CharacterTable>, n: u32, f: impl Fn(&PartValuedFn) -> RSLaurent) -> Self {
        let mut out = Self::zero(t, n);
        for rho in enumerate_types(t, n) {
            let v = f(&rho);
            out.set(rho, v).expect("enumerated type");
        }
        out
    }

    pub fn add(&self, o: &Self) -> Result<Self, Error> {
        if self.n != o.n || *self.table != *o.table {
            return Err(Error::TableMismatch);
        }
        let mut out = self.clone();
        for (k, v) in &o.values {
            let s = &out.get(k) + v;
            out.set(k.clone(), s)?;
        }
        Ok(out)
    }

    pub fn scale(&self, f: &RSLaurent) -> Self {
        let mut out = Self::zero(&self.table, self.n);
        for (k, v) in &self.values {
            out.set(k.clone(), v * f).expect("same type");
        }
        out
    }

    /// Wreath antipode: S(f)(ρ) = f(ρ̄) with Laurent variables inverted.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero(&self.table, self.n);
        for (k, v) in &self.values {
            out.set(k.bar(&self.table), v.invert_vars()).expect("same weight");
        }
        out
    }
}

/// σ_n(c ⊗ r^k s^l): n ζ_c r^{−nk} s^{−nl} on the n-cycle type over c.
pub fn sigma_class(t: &Arc<CharacterTable>, c: usize, n: u32, k: i32, l: i32) -> Result<WreathClassFunction, Error> {
    if n == 0 {
        return Err(Error::Invalid("σ_n needs n > 0".into()));
    }
    let mut f = WreathClassFunction::zero(t, n);
    let v = RSLaurent::rs(-(n as i32) * k, -(n as i32) * l).scale_int((n as u64 * t.centralizer(c)) as i64);
    f.set(PartValuedFn::single(t.num_classes(), c, vec![n]), v)?;
    Ok(f)
}

/// σ_n(γ ⊗ r^k s^l): n γ(c) r^{−nk} s^{−nl} on each n-cycle type over c.
pub fn sigma_char(t: &Arc<CharacterTable>, gamma: usize, n: u32, k: i32, l: i32) -> Result<WreathClassFunction, Error> {
    if n == 0 {
        return Err(Error::Invalid("σ_n needs n > 0".into()));
    }
    let mut f = WreathClassFunction::zero(t, n);
    let lp = RSLaurent::rs(-(n as i32) * k, -(n as i32) * l);
    for c in 0..t.num_classes() {
        let v = lp.scale(&t.value(gamma, c).scale(&BigRational::from_integer(BigInt::from(n))));
        f.set(PartValuedFn::single(t.num_classes(), c, vec![n]), v)?;
    }
    Ok(f)
}

/// σ_{ρ⊗r^k s^l}: Z_ρ r^{−nk} s^{−nl} on type ρ.
pub fn sigma_rho(t: &Arc<CharacterTable>, rho: &PartValuedFn, k: i32, l: i32) -> Result<WreathClassFunction, Error> {
    let n = rho.weight();
    let mut f = WreathClassFunction::zero(t, n);
    let z = rho.centralizer_order(t);
    let v = RSLaurent::rs(-(n as i32) * k, -(n as i32) * l)
        .scale_rational(&BigRational::from_integer(z));
    f.set(rho.clone(), v)?;
    Ok(f)
}

/// ⟨f, g⟩_{ξ,Γ_n} = Σ_ρ Z_ρ^{-1} η_n(ξ)(ρ) f(ρ) S(g)(ρ).
pub fn wreath_form(f: &WreathClassFunction, g: &WreathClassFunction, xi: &WeightFunction) -> Result<RSLaurent, Error> {
    if f.n != g.n || *f.table != *g.table || *f.table != **xi.table() {
        return Err(Error::TableMismatch);
    }
    let t = &f.table;
    let sg = g.antipode();
    let mut acc = RSLaurent::zero();
    for (rho, fv) in &f.values {
        let gv = sg.get(rho);
        if gv.is_zero() {
            continue;
        }
        let z = rho.centralizer_order(t);
        let term = &(&eta_of(&xi.base, rho) * fv) * &gv;
        acc.add_assign_ref(&term.scale_rational(&BigRational::new(BigInt::one(), z)));
    }
    Ok(acc)
}

/// Class equation check: Σ_ρ |Γ_n| / Z_ρ = |Γ_n|.
pub fn class_equation_holds(t: &CharacterTable, n: u32) -> bool {
    let mut order = BigInt::one();
    for k in 1..=n {
        order *= BigInt::from(t.order) * BigInt::from(k);
    }
    let mut sum = BigRational::zero();
    for rho in enumerate_types(t, n) {
        sum += BigRational::new(order.clone(), rho.centralizer_order(t));
    }
    sum == BigRational::from_integer(order)
}
