//! The Fock space S ⊗ C[R_Z(Γ)] with the two-parameter Heisenberg action.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::group::{CharacterTable, ClassFunctionRS};
use crate::mckay::{char_pairing, WeightFunction};
use crate::ring::{CycScalar, RSLaurent};
use crate::wreath::{enumerate_types_k, PartValuedFn};

/// Which generators a_{-n}(·) the mode indices refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alphabet {
    Character,
    Class,
}

/// A basis monomial Π a_{-n}(x_i) ⊗ e^β; `modes` holds sorted (n, index) pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockKey {
    pub modes: Vec<(u32, u32)>,
    pub beta: Vec<i32>,
}

impl FockKey {
    pub fn vacuum(rank: usize) -> Self {
        FockKey {
            modes: Vec::new(),
            beta: vec![0; rank],
        }
    }

    pub fn new(mut modes: Vec<(u32, u32)>, beta: Vec<i32>) -> Self {
        modes.sort_unstable();
        FockKey { modes, beta }
    }

    /// ‖ρ‖, the Heisenberg part of the degree.
    pub fn heis_degree(&self) -> u32 {
        self.modes.iter().map(|m| m.0).sum()
    }

    pub fn with_factor(&self, n: u32, i: u32) -> Self {
        let mut modes = self.modes.clone();
        let pos = modes.partition_point(|&x| x < (n, i));
        modes.insert(pos, (n, i));
        FockKey {
            modes,
            beta: self.beta.clone(),
        }
    }

    pub fn with_beta(&self, beta: Vec<i32>) -> Self {
        FockKey {
            modes: self.modes.clone(),
            beta,
        }
    }

    /// The partition-valued function over generator indices.
    pub fn rho(&self, k: usize) -> PartValuedFn {
        let mut parts = vec![Vec::new(); k];
        for &(n, i) in &self.modes {
            parts[i as usize].push(n);
        }
        PartValuedFn::new(parts).expect("positive modes")
    }

    pub fn from_rho(rho: &PartValuedFn, beta: Vec<i32>) -> Self {
        let mut modes = Vec::new();
        for (i, p) in rho.parts().iter().enumerate() {
            for &n in p {
                modes.push((n, i as u32));
            }
        }
        Self::new(modes, beta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    pub table: Arc<CharacterTable>,
    pub alphabet: Alphabet,
    terms: HashMap<FockKey, RSLaurent>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    rho: BTreeMap<usize, Vec<u32>>,
    beta: Vec<i32>,
    coeff: String,
}

impl FockVector {
    pub fn zero(t: &Arc<CharacterTable>) -> Self {
        FockVector {
            table: t.clone(),
            alphabet: Alphabet::Character,
            terms: HashMap::new(),
        }
    }

    pub fn zero_in(t: &Arc<CharacterTable>, alphabet: Alphabet) -> Self {
        FockVector {
            table: t.clone(),
            alphabet,
            terms: HashMap::new(),
        }
    }

    /// 1 ⊗ e^0.
    pub fn vacuum(t: &Arc<CharacterTable>) -> Self {
        Self::basis(t, FockKey::vacuum(t.num_chars()))
    }

    pub fn basis(t: &Arc<CharacterTable>, key: FockKey) -> Self {
        let mut v = Self::zero(t);
        v.add_term(key, RSLaurent::one());
        v
    }

    pub fn basis_in(t: &Arc<CharacterTable>, alphabet: Alphabet, key: FockKey) -> Self {
        let mut v = Self::zero_in(t, alphabet);
        v.add_term(key, RSLaurent::one());
        v
    }

    pub fn rank(&self) -> usize {
        self.table.num_chars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &FockKey) -> RSLaurent {
        self.terms.get(key).cloned().unwrap_or_else(RSLaurent::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockKey, &RSLaurent)> {
        self.terms.iter()
    }

    /// Terms in canonical key order.
    pub fn sorted_terms(&self) -> Vec<(&FockKey, &RSLaurent)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, key: FockKey, c: RSLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &FockVector, f: &RSLaurent) {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c * f);
        }
    }

    pub fn add(&self, o: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn scale(&self, f: &RSLaurent) -> FockVector {
        let mut out = Self::zero_in(&self.table, self.alphabet);
        if f.is_zero() {
            return out;
        }
        for (k, c) in &self.terms {
            out.terms.insert(k.clone(), c * f);
        }
        out
    }

    pub fn map_keys(&self, f: impl Fn(&FockKey, &RSLaurent) -> Option<(FockKey, RSLaurent)>) -> FockVector {
        let mut out = Self::zero_in(&self.table, self.alphabet);
        for (k, c) in &self.terms {
            if let Some((k2, c2)) = f(k, c) {
                out.add_term(k2, c2);
            }
        }
        out
    }

    /// Product in S ⊗ C[R_Z(Γ)]: Heisenberg parts multiply, lattice parts add.
    pub fn mul(&self, o: &FockVector) -> FockVector {
        let o = o.convert(self.alphabet);
        let mut out = Self::zero_in(&self.table, self.alphabet);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let mut modes = k1.modes.clone();
                modes.extend_from_slice(&k2.modes);
                let beta = k1.beta.iter().zip(&k2.beta).map(|(a, b)| a + b).collect();
                out.add_term(FockKey::new(modes, beta), c1 * c2);
            }
        }
        out
    }

    /// Multiplication by a_{-n}(x_i), n > 0, in the vector's own alphabet.
    pub fn create(&self, n: u32, i: usize) -> FockVector {
        self.map_keys(|k, c| Some((k.with_factor(n, i as u32), c.clone())))
    }

    /// Homogeneous components by Heisenberg degree.
    pub fn max_heis_degree(&self) -> u32 {
        self.terms.keys().map(|k| k.heis_degree()).max().unwrap_or(0)
    }

    /// Replaces each generator a_{-n}(x_i) by Σ_j coef(n, i)_j a_{-n}(y_j).
    fn substitute_generators(&self, target: Alphabet, coef: impl Fn(u32, usize) -> Vec<(usize, CycScalar)>) -> FockVector {
        let mut out = Self::zero_in(&self.table, target);
        for (k, c) in &self.terms {
            let mut partial: Vec<(Vec<(u32, u32)>, CycScalar)> = vec![(Vec::new(), CycScalar::one())];
            for &(n, i) in &k.modes {
                let expansion = coef(n, i as usize);
                let mut next = Vec::with_capacity(partial.len() * expansion.len());
                for (m, s) in &partial {
                    for (j, a) in &expansion {
                        let mut m2 = m.clone();
                        m2.push((n, *j as u32));
                        next.push((m2, s.mul(a)));
                    }
                }
                partial = next;
            }
            for (m, s) in partial {
                out.add_term(FockKey::new(m, k.beta.clone()), c.scale(&s));
            }
        }
        out
    }

    /// Rewrites the vector over the other generator alphabet.
    pub fn convert(&self, target: Alphabet) -> FockVector {
        if target == self.alphabet {
            return self.clone();
        }
        let t = self.table.clone();
        match target {
            // a_{-n}(γ) = Σ_c ζ_c^{-1} γ(c) a_{-n}(c).
            Alphabet::Class => self.substitute_generators(target, |_, i| {
                (0..t.num_classes())
                    .map(|c| {
                        let z = BigRational::new(BigInt::from(1), BigInt::from(t.centralizer(c)));
                        (c, t.value(i, c).scale(&z))
                    })
                    .filter(|(_, a)| !a.is_zero())
                    .collect()
            }),
            // a_{-n}(c) = Σ_γ γ(c^{-1}) a_{-n}(γ).
            Alphabet::Character => self.substitute_generators(target, |_, c| {
                (0..t.num_chars())
                    .map(|i| (i, t.value(i, t.inverse(c)).clone()))
                    .filter(|(_, a)| !a.is_zero())
                    .collect()
            }),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let docs: Vec<TermDoc> = self
            .sorted_terms()
            .into_iter()
            .map(|(k, c)| TermDoc {
                rho: k.rho(self.rank().max(self.table.num_classes())).to_map(),
                beta: k.beta.clone(),
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_value(docs).expect("serializable")
    }

    pub fn from_json(t: &Arc<CharacterTable>, v: &serde_json::Value) -> Result<FockVector, Error> {
        let docs: Vec<TermDoc> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(t);
        for d in docs {
            let rho = PartValuedFn::from_map(t.num_chars(), &d.rho)?;
            if d.beta.len() != t.num_chars() {
                return Err(Error::Parse("lattice vector has the wrong length".into()));
            }
            out.add_term(FockKey::from_rho(&rho, d.beta), d.coeff.parse()?);
        }
        Ok(out)
    }
}

/// Heisenberg pairings ⟨γ_i, γ_j⟩_ξ^{r^n,s^n}, cached per level.
#[derive(Debug)]
pub struct FockSpace {
    pub table: Arc<CharacterTable>,
    pub xi: WeightFunction,
    level1: Vec<Vec<RSLaurent>>,
    cache: Mutex<HashMap<i32, Arc<Vec<Vec<RSLaurent>>>>>,
}

impl FockSpace {
    pub fn new(xi: &WeightFunction) -> Self {
        let t = xi.table().clone();
        let k = t.num_chars();
        let level1 = (0..k)
            .map(|i| (0..k).map(|j| char_pairing(&t, xi, i, j)).collect())
            .collect();
        FockSpace {
            table: t,
            xi: xi.clone(),
            level1,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.table.num_chars()
    }

    /// ⟨γ_i, γ_j⟩_ξ^{r,s}.
    pub fn pairing1(&self, i: usize, j: usize) -> &RSLaurent {
        &self.level1[i][j]
    }

    /// The matrix (⟨γ_i, γ_j⟩_ξ^{r^n,s^n})_{ij}.
    pub fn pairing(&self, n: i32) -> Arc<Vec<Vec<RSLaurent>>> {
        let mut cache = self.cache.lock().expect("pairing cache");
        cache
            .entry(n)
            .or_insert_with(|| {
                Arc::new(
                    self.level1
                        .iter()
                        .map(|row| row.iter().map(|x| x.substitute(n).expect("nonzero level")).collect())
                        .collect(),
                )
            })
            .clone()
    }

    /// a_n(γ_i) for n > 0: the contraction derivation.
    pub fn annihilate(&self, n: u32, i: usize, v: &FockVector) -> FockVector {
        assert_eq!(v.alphabet, Alphabet::Character, "Heisenberg action needs the character alphabet");
        let p = self.pairing(n as i32);
        let nn = RSLaurent::int(n as i64);
        let mut out = FockVector::zero(&v.table);
        for (k, c) in &v.terms {
            let mut idx = 0;
            while idx < k.modes.len() {
                let f = k.modes[idx];
                let mut end = idx;
                while end < k.modes.len() && k.modes[end] == f {
                    end += 1;
                }
                if f.0 == n {
                    let w = &p[i][f.1 as usize];
                    if !w.is_zero() {
                        let mult = RSLaurent::int((end - idx) as i64);
                        let mut modes = k.modes.clone();
                        modes.remove(idx);
                        let coef = &(&(c * w) * &nn) * &mult;
                        out.add_term(
                            FockKey {
                                modes,
                                beta: k.beta.clone(),
                            },
                            coef,
                        );
                    }
                }
                idx = end;
            }
        }
        out
    }

    /// a_n(γ_i) for any nonzero n.
    pub fn apply(&self, n: i32, i: usize, v: &FockVector) -> FockVector {
        match n.cmp(&0) {
            std::cmp::Ordering::Less => v.create((-n) as u32, i),
            std::cmp::Ordering::Greater => self.annihilate(n as u32, i, v),
            std::cmp::Ordering::Equal => FockVector::zero(&v.table),
        }
    }

    /// a_n(f) for a class function f = Σ_i f_i γ_i, with a_n(γ⊗r^k s^l) = r^{-nk}s^{-nl} a_n(γ).
    pub fn apply_fn(&self, n: i32, f: &ClassFunctionRS, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(&v.table);
        for (i, fi) in f.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            let w = fi.substitute(-n).expect("nonzero mode");
            out.add_scaled(&self.apply(n, i, v), &w);
        }
        out
    }

    /// ⟨u, v⟩_ξ: bilinear over cyclotomic scalars, Laurent-inverting scalars on the left.
    pub fn form(&self, u: &FockVector, v: &FockVector) -> RSLaurent {
        let u = u.convert(Alphabet::Character);
        let v = v.convert(Alphabet::Character);
        let mut acc = RSLaurent::zero();
        let mut memo: HashMap<(FockKey, FockKey), RSLaurent> = HashMap::new();
        for (ku, cu) in &u.terms {
            let cu = cu.invert_vars();
            for (kv, cv) in &v.terms {
                let p = memo
                    .entry((ku.clone(), kv.clone()))
                    .or_insert_with(|| self.pair_keys(ku, kv))
                    .clone();
                if !p.is_zero() {
                    acc.add_assign_ref(&(&(&cu * cv) * &p));
                }
            }
        }
        acc
    }

    /// ⟨ku, kv⟩ for basis monomials, by moving the adjoint annihilators onto kv.
    pub fn pair_keys(&self, ku: &FockKey, kv: &FockKey) -> RSLaurent {
        if ku.beta != kv.beta || ku.heis_degree() != kv.heis_degree() {
            return RSLaurent::zero();
        }
        let mut mu: Vec<u32> = ku.modes.iter().map(|m| m.0).collect();
        let mut mv: Vec<u32> = kv.modes.iter().map(|m| m.0).collect();
        mu.sort_unstable();
        mv.sort_unstable();
        if mu != mv {
            return RSLaurent::zero();
        }
        let mut w = FockVector::basis(&self.table, kv.clone());
        for &(n, i) in &ku.modes {
            w = self.annihilate(n, i as usize, &w);
            if w.is_zero() {
                return RSLaurent::zero();
            }
        }
        w.coeff(&FockKey {
            modes: vec![],
            beta: kv.beta.clone(),
        })
    }

    /// Gram matrix of a list of vectors.
    pub fn gram(&self, vs: &[FockVector]) -> Vec<Vec<RSLaurent>> {
        let vs: Vec<FockVector> = vs.iter().map(|v| v.convert(Alphabet::Character)).collect();
        let mut memo: HashMap<(FockKey, FockKey), RSLaurent> = HashMap::new();
        let mut out = vec![vec![RSLaurent::zero(); vs.len()]; vs.len()];
        for (a, u) in vs.iter().enumerate() {
            for (b, v) in vs.iter().enumerate() {
                let mut acc = RSLaurent::zero();
                for (ku, cu) in &u.terms {
                    for (kv, cv) in &v.terms {
                        let p = memo
                            .entry((ku.clone(), kv.clone()))
                            .or_insert_with(|| self.pair_keys(ku, kv))
                            .clone();
                        if !p.is_zero() {
                            acc.add_assign_ref(&(&(&cu.invert_vars() * cv) * &p));
                        }
                    }
                }
                out[a][b] = acc;
            }
        }
        out
    }
}

/// All Heisenberg monomials over `indices` with ‖ρ‖ ≤ max_degree, with lattice part β.
pub fn heisenberg_basis(rank: usize, indices: &[usize], max_degree: u32, beta: &[i32]) -> Vec<FockKey> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for rho in enumerate_types_k(indices.len(), d) {
            let mut modes = Vec::new();
            for (slot, p) in rho.parts().iter().enumerate() {
                for &n in p {
                    modes.push((n, indices[slot] as u32));
                }
            }
            let _ = rank;
            out.push(FockKey::new(modes, beta.to_vec()));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub m: i32,
    pub n: i32,
    pub gamma: usize,
    pub gamma2: usize,
    pub expected: String,
    pub vectors: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Checks [a_m(γ), a_n(γ′)] = m δ_{m,-n} ⟨γ, γ′⟩_ξ^{r^m,s^m} on all monomials of degree ≤ D.
pub fn heis_commutator_check(fs: &FockSpace, m: i32, n: i32, g: usize, g2: usize, max_degree: u32) -> CommutatorReport {
    let k = fs.rank();
    let all: Vec<usize> = (0..k).collect();
    let basis = heisenberg_basis(k, &all, max_degree, &vec![0; k]);
    let expected = if m == -n && m != 0 {
        fs.pairing(m)[g][g2].scale_int(m as i64)
    } else {
        RSLaurent::zero()
    };
    let mut witness = None;
    for key in &basis {
        let v = FockVector::basis(&fs.table, key.clone());
        let lhs = fs.apply(m, g, &fs.apply(n, g2, &v)).sub(&fs.apply(n, g2, &fs.apply(m, g, &v)));
        let rhs = v.scale(&expected);
        if lhs != rhs {
            witness = Some(format!("{:?}", key.modes));
            break;
        }
    }
    CommutatorReport {
        m,
        n,
        gamma: g,
        gamma2: g2,
        expected: expected.pretty(),
        vectors: basis.len(),
        pass: witness.is_none(),
        witness,
    }
}

/// The class-basis relation [a_m(c), a_{-m}(c′)] = m δ_{c′,c^{-1}} ζ_c ξ_{(r^m,s^m)}(c), applied to v.
pub fn class_commutator(fs: &FockSpace, m: i32, c: usize, c2: usize, v: &FockVector) -> FockVector {
    let t = &fs.table;
    let class_op = |mode: i32, cl: usize, w: &FockVector| {
        // a_mode(c) = Σ_γ γ(c^{-1}) a_mode(γ).
        let mut out = FockVector::zero(t);
        for i in 0..t.num_chars() {
            let coef = t.value(i, t.inverse(cl));
            if coef.is_zero() {
                continue;
            }
            out.add_scaled(&fs.apply(mode, i, w), &RSLaurent::constant(coef.clone()));
        }
        out
    };
    class_op(m, c, &class_op(-m, c2, v)).sub(&class_op(-m, c2, &class_op(m, c, v)))
}
