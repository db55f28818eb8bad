//! A one-variable model of the vertex representation at (r, s) = (q, q^{-1}), written with its own
//! arithmetic over Q(i)[q^{±1/2}], and a comparison against the two-parameter operators.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::fock::{FockKey, FockVector};
use crate::ring::{CycScalar, RSLaurent};
use crate::vertex::{Charge, CocycleBranch};

use super::{Dictionary, ToroidalRep, Variant, Window};

pub type Gauss = Complex<BigRational>;

fn gauss_int(k: i64) -> Gauss {
    Complex::new(BigRational::from_integer(k.into()), BigRational::zero())
}

fn gauss_frac(p: i64, q: i64) -> Gauss {
    Complex::new(BigRational::new(p.into(), q.into()), BigRational::zero())
}

fn gauss_i() -> Gauss {
    Complex::new(BigRational::zero(), BigRational::one())
}

fn gauss_pow(z: &Gauss, e: i64) -> Gauss {
    let mut base = if e < 0 { z.inv() } else { z.clone() };
    let mut e = e.unsigned_abs();
    let mut acc = gauss_int(1);
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// A Laurent polynomial in t = q^{1/2} with Gaussian rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPoly {
    terms: BTreeMap<i32, Gauss>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(c: Gauss) -> Self {
        let mut p = QPoly::zero();
        p.add_term(0, c);
        p
    }

    pub fn int(k: i64) -> Self {
        Self::constant(gauss_int(k))
    }

    /// t^e = q^{e/2}.
    pub fn t_pow(e: i32) -> Self {
        let mut p = QPoly::zero();
        p.add_term(e, gauss_int(1));
        p
    }

    pub fn q_pow(e: i32) -> Self {
        Self::t_pow(2 * e)
    }

    pub fn add_term(&mut self, e: i32, c: Gauss) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Gauss::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &Gauss)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Gauss) -> QPoly {
        let mut out = QPoly::zero();
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    /// Image of a two-parameter coefficient at r = q, s = q^{-1}; needs κ-free entries in Q(i).
    pub fn from_library(f: &RSLaurent) -> Result<QPoly, Error> {
        let mut out = QPoly::zero();
        for ((e, w), c) in f.specialize_q().terms() {
            if *w != 0 {
                return Err(Error::Invalid("κ survives the one-parameter specialization".into()));
            }
            out.add_term(*e, cyc_to_gauss(c)?);
        }
        Ok(out)
    }
}

fn cyc_to_gauss(c: &CycScalar) -> Result<Gauss, Error> {
    let n = c.conductor();
    if 4 % n != 0 {
        return Err(Error::Invalid(format!("coefficient {c} is not in Q(i)")));
    }
    let v = c.lift(4);
    let get = |k: usize| v.get(k).cloned().unwrap_or_else(BigRational::zero);
    Ok(Complex::new(get(0) - get(2), get(1) - get(3)))
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let c = if c.im.is_zero() {
                    c.re.to_string()
                } else {
                    format!("({}+{}i)", c.re, c.im)
                };
                if *e == 0 {
                    c
                } else {
                    format!("{c}*q^({e}/2)")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub type OneParamVector = BTreeMap<FockKey, QPoly>;

fn vec_add_scaled(out: &mut OneParamVector, v: &OneParamVector, f: &QPoly) {
    for (k, c) in v {
        let x = c.mul(f);
        if x.is_zero() {
            continue;
        }
        let entry = out.entry(k.clone()).or_insert_with(QPoly::zero);
        *entry = entry.add(&x);
        if entry.is_zero() {
            out.remove(k);
        }
    }
}

/// The Fock space at r = q, s = q^{-1} for a simply laced diagram given by its generalized Cartan matrix.
#[derive(Clone, Debug)]
pub struct OneParamFock {
    pub cartan: Vec<Vec<i64>>,
    /// ζ_4-valued cocycle on i > j if true, sign-valued otherwise.
    pub zeta_branch: bool,
}

/// Per-factor coefficient n·c_n in exp(Σ c_n a_{∓n} z^{±n}).
#[derive(Clone, Copy, Debug)]
struct Exponent {
    /// c_n = coeff · q^{q_step·n}.
    coeff: i64,
    q_step: i32,
}

impl Exponent {
    fn at(&self, n: u32) -> QPoly {
        QPoly::q_pow(self.q_step * n as i32).scale(&gauss_int(self.coeff))
    }
}

/// One x^± operator of the oracle: creation and annihilation exponents, lattice sign, twist t^{twist·k}.
#[derive(Clone, Copy, Debug)]
struct OracleOp {
    index: usize,
    lattice: i32,
    creation: Exponent,
    annihilation: Exponent,
    twist: i32,
}

impl OneParamFock {
    pub fn new(cartan: Vec<Vec<i64>>, zeta_branch: bool) -> Self {
        OneParamFock { cartan, zeta_branch }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// ⟨γ_i, γ_j⟩_n: q^n + q^{-n} on the diagonal, a_ij off it.
    pub fn pairing(&self, n: u32, i: usize, j: usize) -> QPoly {
        if i == j {
            QPoly::q_pow(n as i32).add(&QPoly::q_pow(-(n as i32)))
        } else {
            QPoly::int(self.cartan[i][j])
        }
    }

    /// a_{-n}(γ_i) u: one more factor.
    fn create(&self, n: u32, i: usize, v: &OneParamVector) -> OneParamVector {
        v.iter()
            .map(|(k, c)| {
                let mut modes = k.modes.clone();
                modes.push((n, i as u32));
                (FockKey::new(modes, k.beta.clone()), c.clone())
            })
            .collect()
    }

    /// a_n(γ_i) u: sum over removable factors a_{-n}(γ_j), each contributing n⟨γ_i, γ_j⟩_n.
    fn annihilate(&self, n: u32, i: usize, v: &OneParamVector) -> OneParamVector {
        let mut out = OneParamVector::new();
        for (k, c) in v {
            for pos in 0..k.modes.len() {
                let (m, j) = k.modes[pos];
                if m != n {
                    continue;
                }
                let mut modes = k.modes.clone();
                modes.remove(pos);
                let w = self.pairing(n, i, j as usize).scale(&gauss_int(n as i64));
                let mut single = OneParamVector::new();
                single.insert(FockKey::new(modes, k.beta.clone()), c.clone());
                vec_add_scaled(&mut out, &single, &w);
            }
        }
        out
    }

    /// a_n(γ_i) for n ≠ 0.
    pub fn heis(&self, n: i32, i: usize, v: &OneParamVector) -> OneParamVector {
        if n < 0 {
            self.create((-n) as u32, i, v)
        } else {
            self.annihilate(n as u32, i, v)
        }
    }

    /// ε(±γ_i, β) with ε(γ_i, γ_j) = b^{a_ij} for i > j, 1 otherwise, b ∈ {i, −1}.
    pub fn cocycle(&self, i: usize, sign: i32, beta: &[i32]) -> Gauss {
        let b = if self.zeta_branch { gauss_i() } else { gauss_int(-1) };
        let mut e = 0i64;
        for (j, &m) in beta.iter().enumerate().take(i) {
            e += self.cartan[i][j] * m as i64;
        }
        gauss_pow(&b, sign as i64 * e)
    }

    fn pair_root(&self, i: usize, beta: &[i32]) -> i64 {
        beta.iter().enumerate().map(|(j, &m)| self.cartan[i][j] * m as i64).sum()
    }

    /// 2·deg = 2‖ρ‖ + ⟨β, β⟩.
    pub fn degree2(&self, k: &FockKey) -> i64 {
        let rho: i64 = k.modes.iter().map(|m| m.0 as i64).sum();
        let bb: i64 = (0..self.rank()).map(|i| k.beta[i] as i64 * self.pair_root(i, &k.beta)).sum();
        2 * rho + bb
    }

    /// exp(Σ (c_n/n) a_{±n} z^{∓n}) as a list of (power, vector), factor by factor.
    fn expand(&self, e: Exponent, index: usize, creation: bool, v: &OneParamVector, max: u32) -> Vec<(u32, OneParamVector)> {
        let mut state = vec![(0u32, v.clone())];
        for n in 1..=max {
            let c = e.at(n).scale(&gauss_frac(1, n as i64));
            let mut next = Vec::new();
            for (p, w) in &state {
                let mut k = 0u32;
                let mut cur = w.clone();
                let mut coeff = QPoly::int(1);
                while p + n * k <= max && !cur.is_empty() {
                    let mut term = OneParamVector::new();
                    vec_add_scaled(&mut term, &cur, &coeff);
                    next.push((p + n * k, term));
                    k += 1;
                    cur = if creation {
                        self.create(n, index, &cur)
                    } else {
                        self.annihilate(n, index, &cur)
                    };
                    coeff = coeff.mul(&c).scale(&gauss_frac(1, k as i64));
                }
            }
            state = next;
        }
        state
    }

    fn apply_op(&self, op: &OracleOp, k: i64, v: &OneParamVector) -> OneParamVector {
        let h = self.cartan[op.index][op.index] / 2;
        let mut out = OneParamVector::new();
        let mut by_beta: BTreeMap<Vec<i32>, OneParamVector> = BTreeMap::new();
        for (key, c) in v {
            by_beta.entry(key.beta.clone()).or_default().insert(key.clone(), c.clone());
        }
        for (beta, u) in by_beta {
            let l = op.lattice as i64 * self.pair_root(op.index, &beta);
            let mut new_beta = beta.clone();
            new_beta[op.index] += op.lattice;
            let eps = self.cocycle(op.index, op.lattice, &beta);
            let deg = u.keys().map(|k| k.heis_degree()).max().unwrap_or(0);
            let ann = self.expand(op.annihilation, op.index, false, &u, deg);
            for (q, w) in ann {
                // creation power p with p − q + l = −k − h
                let p = q as i64 - k - h - l;
                if p < 0 || w.is_empty() {
                    continue;
                }
                let created = self.expand(op.creation, op.index, true, &w, p as u32);
                for (pp, x) in created {
                    if pp as i64 != p {
                        continue;
                    }
                    let moved: OneParamVector = x
                        .into_iter()
                        .map(|(key, c)| (key.with_beta(new_beta.clone()), c))
                        .collect();
                    vec_add_scaled(&mut out, &moved, &QPoly::t_pow(op.twist * k as i32).scale(&eps));
                }
            }
        }
        out
    }

    fn op(&self, dictionary: Dictionary, c: Charge, i: usize) -> OracleOp {
        let ex = |coeff, q_step| Exponent { coeff, q_step };
        match (dictionary, c) {
            (Dictionary::First, Charge::Plus) => OracleOp {
                index: i,
                lattice: 1,
                creation: ex(1, 0),
                annihilation: ex(-1, -1),
                twist: 1,
            },
            (Dictionary::First, Charge::Minus) => OracleOp {
                index: i,
                lattice: -1,
                creation: ex(-1, 1),
                annihilation: ex(1, 0),
                twist: 1,
            },
            (Dictionary::Second, Charge::Plus) => OracleOp {
                index: i,
                lattice: 1,
                creation: ex(1, -1),
                annihilation: ex(-1, 0),
                twist: -1,
            },
            (Dictionary::Second, Charge::Minus) => OracleOp {
                index: i,
                lattice: -1,
                creation: ex(-1, 0),
                annihilation: ex(1, 1),
                twist: -1,
            },
        }
    }

    /// x_i^±(k) v in the given dictionary.
    pub fn x(&self, dictionary: Dictionary, c: Charge, i: usize, k: i64, v: &OneParamVector) -> OneParamVector {
        self.apply_op(&self.op(dictionary, c, i), k, v)
    }

    /// a_i(m) = ([|m|]_q / |m|) a_m(γ_i).
    pub fn a(&self, i: usize, m: i32, v: &OneParamVector) -> OneParamVector {
        let n = m.abs();
        let mut qn = QPoly::zero();
        for j in 0..n {
            qn = qn.add(&QPoly::q_pow(n - 1 - 2 * j));
        }
        let mut out = OneParamVector::new();
        vec_add_scaled(&mut out, &self.heis(m, i, v), &qn.scale(&gauss_frac(1, n as i64)));
        out
    }

    fn diagonal(&self, v: &OneParamVector, f: impl Fn(&FockKey) -> i32) -> OneParamVector {
        v.iter().map(|(k, c)| (k.clone(), c.mul(&QPoly::t_pow(f(k))))).collect()
    }

    /// ω_i: q^{Σ_j a_ji m_j}.
    pub fn omega(&self, i: usize, v: &OneParamVector) -> OneParamVector {
        self.diagonal(v, |k| 2 * (0..self.rank()).map(|j| (self.cartan[j][i] * k.beta[j] as i64) as i32).sum::<i32>())
    }

    /// ω'_i: Π_j A_ij^{-m_j} with A_ij ↦ q^{a_ij}.
    pub fn omega_prime(&self, i: usize, v: &OneParamVector) -> OneParamVector {
        self.diagonal(v, |k| -2 * (0..self.rank()).map(|j| (self.cartan[i][j] * k.beta[j] as i64) as i32).sum::<i32>())
    }

    /// D = q^{-deg}.
    pub fn d(&self, v: &OneParamVector) -> OneParamVector {
        self.diagonal(v, |k| -(self.degree2(k) as i32))
    }

    /// D' = q^{deg}.
    pub fn d_prime(&self, v: &OneParamVector) -> OneParamVector {
        self.diagonal(v, |k| self.degree2(k) as i32)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OneParamMismatch {
    pub generator: String,
    pub source: String,
    pub target: String,
    pub library: String,
    pub oracle: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OneParamReport {
    pub group: String,
    pub dictionary: String,
    pub window: Window,
    pub vectors: usize,
    pub generators: usize,
    pub coefficients: usize,
    pub pass: bool,
    pub heisenberg_diagonal: String,
    pub witness: Option<OneParamMismatch>,
}

fn specialize_vector(v: &FockVector) -> Result<OneParamVector, Error> {
    let mut out = OneParamVector::new();
    for (k, c) in v.terms() {
        let p = QPoly::from_library(c)?;
        if !p.is_zero() {
            out.insert(k.clone(), p);
        }
    }
    Ok(out)
}

fn key_string(k: &FockKey) -> String {
    format!("{:?}⊗e^{:?}", k.modes, k.beta)
}

/// Compares every generator x^±_i(k), a_i(m), ω_i, ω'_i, D, D' at (q, q^{-1}) with the oracle
/// on the spanning monomials of the window.
pub fn specialize_one_param(rep: &ToroidalRep, window: &Window) -> Result<OneParamReport, Error> {
    if rep.variant == Variant::Kappa {
        return Err(Error::Invalid("the one-parameter oracle covers the κ-free representation".into()));
    }
    let oracle = OneParamFock::new(rep.vs.lattice.gram.clone(), rep.options.convention.branch == CocycleBranch::Zeta4);
    compare(rep, &oracle, window)
}

fn compare(rep: &ToroidalRep, oracle: &OneParamFock, window: &Window) -> Result<OneParamReport, Error> {
    let o = oracle;
    let dict = rep.options.dictionary;
    let keys = rep.spanning_keys(window);
    let t = rep.table().clone();
    let modes = window.modes;

    type Lib<'a> = Box<dyn Fn(&FockVector) -> FockVector + Sync + 'a>;
    type Orc<'a> = Box<dyn Fn(&OneParamVector) -> OneParamVector + Sync + 'a>;
    let mut gens: Vec<(String, Lib, Orc)> = Vec::new();
    for &i in &rep.indices {
        for k in -modes..=modes {
            for c in [Charge::Plus, Charge::Minus] {
                let s = if c == Charge::Plus { "+" } else { "-" };
                gens.push((
                    format!("x{s}_{i}({k})"),
                    Box::new(move |v| rep.x(c, i, k, v)),
                    Box::new(move |v| o.x(dict, c, i, k, v)),
                ));
            }
            if k != 0 {
                let m = k as i32;
                gens.push((
                    format!("a_{i}({m})"),
                    Box::new(move |v| rep.a(i, m, v)),
                    Box::new(move |v| o.a(i, m, v)),
                ));
            }
        }
        gens.push((format!("ω_{i}"), Box::new(move |v| rep.omega(i, v)), Box::new(move |v| o.omega(i, v))));
        gens.push((
            format!("ω'_{i}"),
            Box::new(move |v| rep.omega_prime(i, v)),
            Box::new(move |v| o.omega_prime(i, v)),
        ));
    }
    gens.push(("D".into(), Box::new(|v| rep.d(v)), Box::new(|v| o.d(v))));
    gens.push(("D'".into(), Box::new(|v| rep.d_prime(v)), Box::new(|v| o.d_prime(v))));

    let mut coefficients = 0usize;
    let mut witness = None;
    'outer: for (name, lib, orc) in &gens {
        for key in &keys {
            let lv = specialize_vector(&lib(&FockVector::basis(&t, key.clone())))?;
            let mut src = OneParamVector::new();
            src.insert(key.clone(), QPoly::int(1));
            let ov = orc(&src);
            let mut targets: Vec<&FockKey> = lv.keys().chain(ov.keys()).collect();
            targets.sort();
            targets.dedup();
            coefficients += targets.len();
            for tk in targets {
                let a = lv.get(tk).cloned().unwrap_or_default();
                let b = ov.get(tk).cloned().unwrap_or_default();
                if a != b {
                    witness = Some(OneParamMismatch {
                        generator: name.clone(),
                        source: key_string(key),
                        target: key_string(tk),
                        library: a.to_string(),
                        oracle: b.to_string(),
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(OneParamReport {
        group: t.name.clone(),
        dictionary: format!("{dict:?}"),
        window: *window,
        vectors: keys.len(),
        generators: gens.len(),
        coefficients,
        pass: witness.is_none(),
        heisenberg_diagonal: oracle.pairing(1, 0, 0).to_string(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toroidal::RepOptions;
    use crate::vertex::LatticeConvention;
    use std::sync::Arc;

    #[test]
    fn gaussian_conversion() {
        assert_eq!(cyc_to_gauss(&CycScalar::i()).unwrap(), gauss_i());
        assert_eq!(cyc_to_gauss(&CycScalar::zeta(4, 3)).unwrap(), -gauss_i());
        assert_eq!(cyc_to_gauss(&CycScalar::int(-3)).unwrap(), gauss_int(-3));
        assert!(cyc_to_gauss(&CycScalar::zeta(3, 1)).is_err());
    }

    #[test]
    fn qpoly_arithmetic() {
        let q = QPoly::q_pow(1);
        let qi = QPoly::q_pow(-1);
        assert_eq!(q.mul(&qi), QPoly::int(1));
        assert!(q.sub(&q).is_zero());
        assert_eq!(q.add(&qi).to_string(), "1*q^(-2/2) + 1*q^(2/2)");
    }

    fn z3(convention: LatticeConvention) -> ToroidalRep {
        let t = Arc::new(crate::group::parse_group_spec("cyclic:3").unwrap());
        let options = RepOptions {
            convention,
            ..RepOptions::default()
        };
        ToroidalRep::build(&t, Variant::Plain, options).unwrap()
    }

    const SMALL: Window = Window {
        degree: 2,
        modes: 1,
        radius: 1,
    };

    #[test]
    fn detects_wrong_branch() {
        let rep = z3(LatticeConvention::CORRECTED);
        let cartan = rep.vs.lattice.gram.clone();
        assert!(compare(&rep, &OneParamFock::new(cartan.clone(), false), &SMALL).unwrap().pass);
        let r = compare(&rep, &OneParamFock::new(cartan, true), &SMALL).unwrap();
        assert!(!r.pass);
        assert!(r.witness.unwrap().generator.starts_with('x'));
    }

    #[test]
    fn detects_wrong_cartan() {
        let rep = z3(LatticeConvention::CORRECTED);
        let mut cartan = rep.vs.lattice.gram.clone();
        cartan[0][1] = -2;
        cartan[1][0] = -2;
        assert!(!compare(&rep, &OneParamFock::new(cartan, false), &SMALL).unwrap().pass);
    }

    #[test]
    fn oracle_pairing_diagonal() {
        let o = OneParamFock::new(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]], false);
        assert_eq!(o.pairing(1, 1, 1), QPoly::q_pow(1).add(&QPoly::q_pow(-1)));
        assert_eq!(o.pairing(2, 0, 2), QPoly::int(-1));
    }
}
