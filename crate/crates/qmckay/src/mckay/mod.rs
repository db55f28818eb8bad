//! Weighted bilinear forms, McKay weights and the two-parameter quantum Cartan matrix.

use std::fmt::Write as _;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::group::{inv_int, CharacterTable, ClassFunctionRS};
use crate::ring::{CycScalar, RSLaurent};

/// A weight class function ξ; `self_dual` is computed, never asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    pub base: ClassFunctionRS,
    pub self_dual: bool,
    values: Vec<RSLaurent>,
}

impl WeightFunction {
    pub fn new(base: ClassFunctionRS) -> Self {
        let self_dual = base.antipode() == base;
        let values = base.values();
        WeightFunction { base, self_dual, values }
    }

    /// ξ = γ_0, giving the standard form.
    pub fn trivial(t: &Arc<CharacterTable>) -> Self {
        Self::new(ClassFunctionRS::character(t, t.trivial, RSLaurent::one()))
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.base.table
    }

    /// ξ^{r,s}(c).
    pub fn value(&self, c: usize) -> &RSLaurent {
        &self.values[c]
    }

    /// ξ_{(r^m, s^m)}(c).
    pub fn value_level(&self, c: usize, m: i32) -> RSLaurent {
        self.values[c].substitute(m).expect("nonzero level")
    }
}

/// (rs^{-1})^{1/2} + (r^{-1}s)^{1/2}.
pub fn sym_diag() -> RSLaurent {
    RSLaurent::uv(1, -1) + RSLaurent::uv(-1, 1)
}

/// The SU(2) weight ξ = γ_0 ⊗ ((rs^{-1})^{1/2} + (r^{-1}s)^{1/2}) − π.
pub fn mckay_weight(t: &Arc<CharacterTable>) -> Result<WeightFunction, Error> {
    mckay_weight_degree(t, 2)
}

/// ξ = γ_0 ⊗ [d](rs)^{-d/4} − π for an embedding of degree d; d must be even.
pub fn mckay_weight_degree(t: &Arc<CharacterTable>, d: i32) -> Result<WeightFunction, Error> {
    let nat = t
        .natural
        .ok_or_else(|| Error::Invalid(format!("table {} has no natural character", t.name)))?;
    if d <= 0 || d % 2 != 0 {
        return Err(Error::Invalid(format!("degree {d} needs quarter-integer exponents")));
    }
    let lead = crate::ring::rs_quantum_number(d) * RSLaurent::uv(-d / 2, -d / 2);
    let mut f = ClassFunctionRS::character(t, t.trivial, lead);
    for i in nat.components() {
        f.coeffs[i] = &f.coeffs[i] - &RSLaurent::one();
    }
    Ok(WeightFunction::new(f))
}

/// ξ^{r,s,κ} = γ_0 ⊗ ((rs^{-1})^{1/2}+(r^{-1}s)^{1/2}) − (γ_1 ⊗ κ + γ_N ⊗ κ^{-1}) for cyclic Γ.
pub fn kappa_weight(t: &Arc<CharacterTable>, kappa: &RSLaurent) -> Result<WeightFunction, Error> {
    if !is_cyclic(t) {
        return Err(Error::Invalid(format!("κ-weight needs a cyclic table, got {}", t.name)));
    }
    let n = t.num_chars();
    let kinv = kappa.inv()?;
    let mut f = ClassFunctionRS::character(t, 0, sym_diag());
    f.coeffs[1 % n] = &f.coeffs[1 % n] - kappa;
    f.coeffs[n - 1] = &f.coeffs[n - 1] - &kinv;
    Ok(WeightFunction::new(f))
}

/// A cyclic group with the standard numbering γ_k(g^j) = ζ^{jk}.
pub fn is_cyclic(t: &CharacterTable) -> bool {
    let n = t.num_chars() as u32;
    t.order == n as u64
        && (0..n as usize).all(|k| {
            (0..n as usize).all(|j| *t.value(k, j) == CycScalar::zeta(n, (j * k) as i64))
        })
}

/// ⟨f, g⟩_ξ = Σ_c ζ_c^{-1} ξ(c) f(c) g^{r^{-1},s^{-1}}(c^{-1}).
pub fn weighted_form(f: &ClassFunctionRS, g: &ClassFunctionRS, xi: &WeightFunction) -> Result<RSLaurent, Error> {
    if !f.same_table(g) || !f.same_table(&xi.base) {
        return Err(Error::TableMismatch);
    }
    let t = &f.table;
    let gi = ClassFunctionRS {
        table: t.clone(),
        coeffs: g.coeffs.iter().map(RSLaurent::invert_vars).collect(),
    };
    let mut acc = RSLaurent::zero();
    for c in 0..t.num_classes() {
        let fc = f.eval(c);
        if fc.is_zero() {
            continue;
        }
        let gc = gi.eval(t.inverse(c));
        let term = &(xi.value(c) * &fc) * &gc;
        acc.add_assign_ref(&term.scale_rational(&inv_int(t.centralizer(c))));
    }
    Ok(acc)
}

/// ⟨γ_i, γ_j⟩_ξ for plain characters.
pub fn char_pairing(t: &CharacterTable, xi: &WeightFunction, i: usize, j: usize) -> RSLaurent {
    let mut acc = RSLaurent::zero();
    for c in 0..t.num_classes() {
        let w = t
            .value(i, c)
            .mul(t.value(j, t.inverse(c)))
            .scale(&inv_int(t.centralizer(c)));
        if !w.is_zero() {
            acc.add_assign_ref(&xi.value(c).scale(&w));
        }
    }
    acc
}

/// a_{ij} with ξ ⊗ γ_i = Σ_j a_{ij} γ_j.
pub fn tensor_multiplicities(t: &Arc<CharacterTable>, xi: &WeightFunction, i: usize) -> Result<Vec<RSLaurent>, Error> {
    if **t != **xi.table() {
        return Err(Error::TableMismatch);
    }
    if i >= t.num_chars() {
        return Err(Error::Invalid(format!("character index {i} out of range")));
    }
    Ok((0..t.num_chars()).map(|j| char_pairing(t, xi, i, j)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumCartanMatrix {
    pub entries: Vec<Vec<RSLaurent>>,
    pub table: Arc<CharacterTable>,
    pub weight: WeightFunction,
}

pub fn quantum_cartan(t: &Arc<CharacterTable>, xi: &WeightFunction) -> Result<QuantumCartanMatrix, Error> {
    let entries = (0..t.num_chars())
        .map(|i| tensor_multiplicities(t, xi, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QuantumCartanMatrix {
        entries,
        table: t.clone(),
        weight: xi.clone(),
    })
}

impl QuantumCartanMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RSLaurent {
        &self.entries[i][j]
    }

    /// Entries at r = s = 1 (κ must be absent).
    pub fn at_one(&self) -> Result<Vec<Vec<CycScalar>>, Error> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| x.at_one()).collect())
            .collect()
    }

    /// Integer matrix at r = s = 1.
    pub fn at_one_int(&self) -> Result<Vec<Vec<i64>>, Error> {
        self.at_one()?
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| x.to_i64().ok_or_else(|| Error::Invalid(format!("non-integer entry {}", x.pretty()))))
                    .collect()
            })
            .collect()
    }

    pub fn specialize(&self, r: &CycScalar, s: &CycScalar, roots: Option<(&CycScalar, &CycScalar)>) -> Result<Vec<Vec<CycScalar>>, Error> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| x.specialize(r, s, roots)).collect())
            .collect()
    }

    /// a_{ij} = bar(a_{ji}) for all i, j.
    pub fn is_bar_hermitian(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i].bar()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenEntry {
    pub class: usize,
    pub class_id: String,
    pub eigenvalue: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub group: String,
    pub entries: Vec<EigenEntry>,
    pub pass: bool,
}

/// Checks A^{r,s} v(c) = ξ^{r,s}(c) v(c) for every class c.
pub fn verify_eigenvectors(t: &Arc<CharacterTable>, xi: &WeightFunction) -> Result<EigenReport, Error> {
    let a = quantum_cartan(t, xi)?;
    let n = t.num_chars();
    let mut entries = Vec::new();
    for c in 0..t.num_classes() {
        let lambda = xi.value(c);
        let mut pass = true;
        for i in 0..n {
            let mut lhs = RSLaurent::zero();
            for j in 0..n {
                lhs.add_assign_ref(&a.entries[i][j].scale(t.value(j, c)));
            }
            if lhs != lambda.scale(t.value(i, c)) {
                pass = false;
                break;
            }
        }
        entries.push(EigenEntry {
            class: c,
            class_id: t.classes[c].id.clone(),
            eigenvalue: lambda.pretty(),
            pass,
        });
    }
    let pass = entries.iter().all(|e| e.pass);
    Ok(EigenReport {
        group: t.name.clone(),
        entries,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McKayGraph {
    pub vertices: usize,
    /// (i, j, multiplicity) with i < j.
    pub edges: Vec<(usize, usize, u64)>,
}

impl McKayGraph {
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let id: String = name.chars().map(|c| if c.is_alphanumeric() { c } else { '_' }).collect();
        let _ = writeln!(s, "graph {id} {{");
        for v in 0..self.vertices {
            let _ = writeln!(s, "  {v};");
        }
        for &(i, j, m) in &self.edges {
            for _ in 0..m {
                let _ = writeln!(s, "  {i} -- {j};");
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut d = vec![0; self.vertices];
        for &(i, j, m) in &self.edges {
            d[i] += m;
            d[j] += m;
        }
        d
    }
}

/// Edges from |a_{ij}| at r = s = 1.
pub fn mckay_graph(t: &Arc<CharacterTable>, xi: &WeightFunction) -> Result<McKayGraph, Error> {
    let a = quantum_cartan(t, xi)?.at_one_int()?;
    let n = a.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a[i][j] != 0 {
                edges.push((i, j, a[i][j].unsigned_abs()));
            }
        }
    }
    Ok(McKayGraph { vertices: n, edges })
}

#[derive(Clone, Debug, Serialize)]
pub struct NondegSample {
    pub t1: String,
    pub t2: String,
    pub exact: bool,
    pub det: f64,
    pub minors: Vec<f64>,
    pub det_nonzero: bool,
    pub minors_positive: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NondegReport {
    pub group: String,
    pub samples: Vec<NondegSample>,
}

pub const NONDEG_TOL: f64 = 1e-9;

/// Leading principal minors of an exact rational matrix (the last one is det).
pub fn rational_minors(m: &[Vec<BigRational>]) -> Vec<BigRational> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<BigRational>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            rational_det(&sub)
        })
        .collect()
}

pub fn rational_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k].clone();
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

fn float_minors(m: &[Vec<f64>]) -> Vec<f64> {
    (1..=m.len())
        .map(|k| {
            let mut a: Vec<Vec<f64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            let mut det = 1.0;
            for c in 0..k {
                let p = (c..k)
                    .max_by(|&x, &y| a[x][c].abs().partial_cmp(&a[y][c].abs()).unwrap())
                    .unwrap();
                if a[p][c] == 0.0 {
                    return 0.0;
                }
                if p != c {
                    a.swap(p, c);
                    det = -det;
                }
                det *= a[c][c];
                for i in c + 1..k {
                    let f = a[i][c] / a[c][c];
                    for j in c..k {
                        a[i][j] -= f * a[c][j];
                    }
                }
            }
            det
        })
        .collect()
}

fn exact_entry(x: &RSLaurent, t1: &BigRational, t2: &BigRational) -> Option<BigRational> {
    if x.has_kappa() {
        return None;
    }
    let one = BigRational::one();
    let mut acc = BigRational::zero();
    for (m, c) in x.terms() {
        let c = c.to_rational()?.clone();
        let e = if t1 * t2 == one {
            // r = t, s = 1/t: u^a v^b = t^{(a-b)/2}.
            if (m.u - m.v) % 2 != 0 {
                return None;
            }
            rat_pow(t1, (m.u - m.v) / 2)
        } else {
            if m.u % 2 != 0 || m.v % 2 != 0 {
                return None;
            }
            rat_pow(t1, m.u / 2) * rat_pow(t2, m.v / 2)
        };
        acc += c * e;
    }
    Some(acc)
}

fn rat_pow(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Evaluates det A and its leading principal minors at each sample (t1, t2) > 0.
pub fn nondegeneracy_spot_check(a: &QuantumCartanMatrix, samples: &[(BigRational, BigRational)]) -> NondegReport {
    let mut out = Vec::new();
    for (t1, t2) in samples {
        let mut sample = NondegSample {
            t1: t1.to_string(),
            t2: t2.to_string(),
            exact: false,
            det: f64::NAN,
            minors: vec![],
            det_nonzero: false,
            minors_positive: false,
            error: None,
        };
        if t1.is_zero() || t2.is_zero() || t1.is_negative() || t2.is_negative() {
            sample.error = Some("samples must be positive".into());
            out.push(sample);
            continue;
        }
        let exact: Option<Vec<Vec<BigRational>>> = a
            .entries
            .iter()
            .map(|row| row.iter().map(|x| exact_entry(x, t1, t2)).collect())
            .collect();
        if let Some(m) = exact {
            let minors = rational_minors(&m);
            let det = rational_det(&m);
            sample.exact = true;
            sample.det = det.to_f64().unwrap_or(f64::NAN);
            sample.det_nonzero = !det.is_zero();
            sample.minors_positive = minors.iter().all(|x| x.is_positive());
            sample.minors = minors.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
        } else {
            let (f1, f2) = (t1.to_f64().unwrap(), t2.to_f64().unwrap());
            let mut m = Vec::new();
            let mut bad = None;
            for row in &a.entries {
                let mut r = Vec::new();
                for x in row {
                    if x.has_kappa() {
                        bad = Some("κ-dependent entry".to_string());
                    }
                    let (re, im) = x.eval_f64(f1, f2);
                    if im.abs() > NONDEG_TOL {
                        bad = Some("non-real entry".to_string());
                    }
                    r.push(re);
                }
                m.push(r);
            }
            if bad.is_some() {
                sample.error = bad;
                out.push(sample);
                continue;
            }
            let minors = float_minors(&m);
            sample.det = *minors.last().unwrap_or(&1.0);
            sample.det_nonzero = sample.det.abs() > NONDEG_TOL;
            sample.minors_positive = minors.iter().all(|&x| x > NONDEG_TOL);
            sample.minors = minors;
        }
        out.push(sample);
    }
    NondegReport {
        group: a.table.name.clone(),
        samples: out,
    }
}
