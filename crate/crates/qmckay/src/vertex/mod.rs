//! The root lattice with its cocycle, and two-parameter vertex operators X^± on the Fock space.
//!
//! X^+(γ, a, b, z) = exp(Σ a_{-n}(γ) zⁿ/n) exp(−Σ a_n(γ) r^{-an}s^{-bn} z^{-n}/n) e^γ z^{∂_γ},
//! X^-(γ, a, b, z) = exp(−Σ a_{-n}(γ) r^{an}s^{bn} zⁿ/n) exp(Σ a_n(γ) z^{-n}/n) e^{-γ} z^{-∂_γ},
//! with modes X(z) = Σ_n X_n z^{-n-⟨γ,γ⟩/2}. A twisted argument γ ⊗ r^k s^l is the
//! rescaling z ↦ r^{-k}s^{-l}z.

mod ope;

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use serde::Serialize;

use crate::error::Error;
use crate::fock::{FockKey, FockSpace, FockVector};
use crate::mckay::WeightFunction;
use crate::ring::{CycScalar, Mono, RSLaurent};

pub use ope::{compare_claims, derived_claim, ope_check, paper_claims, ClaimAgreement, OpeClaim, OpeReport, PaperStatement, Poly2};

/// How the square root in (−rs)^{a_ij/2} is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum CocycleBranch {
    /// (−1)^{1/2} = ζ_4.
    #[default]
    Zeta4,
    /// (−rs)^{a/2} = (−1)^a (rs)^{a/2}.
    Sign,
}

/// Conventions for the lattice operators e^{±γ_i} and z^{±∂_{γ_i,κ}}.
///
/// With `transpose_negative`, e^{−γ_i} e^β = Π_k σ_ik^{−m_k} (rs)^{−e_ki m_k/2} e^{β−γ_i}, where
/// ε(α_i, α_k) = σ_ik (rs)^{e_ik/2}; e^{+γ_i} is unchanged.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LatticeConvention {
    pub branch: CocycleBranch,
    pub transpose_negative: bool,
}

impl LatticeConvention {
    pub const LITERAL: LatticeConvention = LatticeConvention {
        branch: CocycleBranch::Zeta4,
        transpose_negative: false,
    };
    pub const CORRECTED: LatticeConvention = LatticeConvention {
        branch: CocycleBranch::Sign,
        transpose_negative: true,
    };
}

/// Even lattice R_Z(Γ) with Gram matrix ⟨γ_i, γ_j⟩¹ and the cocycle ε.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub gram: Vec<Vec<i64>>,
    pub skew: Option<Vec<Vec<i64>>>,
    pub convention: LatticeConvention,
    basis: Vec<Vec<(Mono, CycScalar)>>,
}

impl Lattice {
    /// ε(α_i,α_i) = (rs)^{1/2}; ε(α_i,α_j) = 1 for i < j; (−rs)^{a_ij/2} for i > j, with (−1)^{1/2} = ζ_4.
    pub fn new(gram: Vec<Vec<i64>>, skew: Option<Vec<Vec<i64>>>) -> Result<Self, Error> {
        let k = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Invalid("Gram matrix is not square".into()));
            }
            if row[i] % 2 != 0 {
                return Err(Error::Invalid(format!("lattice is not even at index {i}")));
            }
            for j in 0..k {
                if gram[j][i] != row[j] {
                    return Err(Error::Invalid("Gram matrix is not symmetric".into()));
                }
            }
        }
        if let Some(b) = &skew {
            if b.len() != k || b.iter().any(|r| r.len() != k) {
                return Err(Error::Invalid("skew matrix has the wrong size".into()));
            }
            for i in 0..k {
                for j in 0..k {
                    if b[i][j] != -b[j][i] {
                        return Err(Error::Invalid("b is not skew-symmetric".into()));
                    }
                }
            }
        }
        let convention = LatticeConvention::default();
        let basis = Self::cocycle_basis(&gram, convention.branch);
        Ok(Lattice {
            gram,
            skew,
            convention,
            basis,
        })
    }

    fn cocycle_basis(gram: &[Vec<i64>], branch: CocycleBranch) -> Vec<Vec<(Mono, CycScalar)>> {
        let k = gram.len();
        let mut basis = vec![vec![(Mono::ONE, CycScalar::one()); k]; k];
        for i in 0..k {
            for j in 0..k {
                basis[i][j] = match i.cmp(&j) {
                    std::cmp::Ordering::Equal => (Mono::new(1, 1, 0), CycScalar::one()),
                    std::cmp::Ordering::Less => (Mono::ONE, CycScalar::one()),
                    std::cmp::Ordering::Greater => {
                        let a = gram[i][j] as i32;
                        let sign = match branch {
                            CocycleBranch::Zeta4 => CycScalar::zeta(4, a as i64),
                            CocycleBranch::Sign => CycScalar::int(if a % 2 == 0 { 1 } else { -1 }),
                        };
                        (Mono::new(a, a, 0), sign)
                    }
                };
            }
        }
        basis
    }

    pub fn with_convention(mut self, convention: LatticeConvention) -> Self {
        self.basis = Self::cocycle_basis(&self.gram, convention.branch);
        self.convention = convention;
        self
    }

    /// The lattice of a weight: ⟨γ_i, γ_j⟩_ξ at r = s = κ = 1.
    pub fn from_weight(xi: &WeightFunction, skew: Option<Vec<Vec<i64>>>) -> Result<Self, Error> {
        let fs = FockSpace::new(xi);
        let k = fs.rank();
        let one = CycScalar::one();
        let mut gram = vec![vec![0; k]; k];
        for (i, row) in gram.iter_mut().enumerate() {
            for (j, g) in row.iter_mut().enumerate() {
                let v = fs.pairing1(i, j).eval(&one, &one, &one)?;
                *g = v.to_i64().ok_or_else(|| Error::Invalid("pairing at 1 is not an integer".into()))?;
            }
        }
        Self::new(gram, skew)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn pairing(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut acc = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                acc += ai as i64 * bj as i64 * self.gram[i][j];
            }
        }
        acc
    }

    /// ⟨γ_i, β⟩¹.
    pub fn pairing_root(&self, i: usize, b: &[i32]) -> i64 {
        b.iter().enumerate().map(|(j, &m)| m as i64 * self.gram[i][j]).sum()
    }

    /// Bimultiplicative extension ε(α, β) = Π ε(α_i, α_j)^{α_i β_j}.
    pub fn cocycle(&self, a: &[i32], b: &[i32]) -> RSLaurent {
        let (mut u, mut v, mut w) = (0i64, 0i64, 0i64);
        let mut c = CycScalar::one();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                let e = ai as i64 * bj as i64;
                if e == 0 {
                    continue;
                }
                let (m, s) = &self.basis[i][j];
                u += e * m.u as i64;
                v += e * m.v as i64;
                w += e * m.w as i64;
                if !s.is_one() {
                    c = c.mul(&s.pow(e).expect("unit"));
                }
            }
        }
        RSLaurent::term(Mono::new(u as i32, v as i32, w as i32), c)
    }

    /// The scalar of e^{sign·γ_i} on e^β under the convention.
    pub fn shift_scalar(&self, i: usize, sign: i32, b: &[i32]) -> RSLaurent {
        if sign > 0 || !self.convention.transpose_negative {
            let mut a = vec![0; self.rank()];
            a[i] = sign;
            return self.cocycle(&a, b);
        }
        let mut e = 0i64;
        let mut c = CycScalar::one();
        for (k, &m) in b.iter().enumerate() {
            if m == 0 {
                continue;
            }
            e -= m as i64 * self.basis[k][i].0.u as i64;
            let s = &self.basis[i][k].1;
            if !s.is_one() {
                c = c.mul(&s.pow(-(m as i64)).expect("unit"));
            }
        }
        RSLaurent::term(Mono::new(e as i32, e as i32, 0), c)
    }

    /// Exponent of κ^{1/2} in z^{∂_{±γ_i,κ}} e^β: ∓Σ_j ⟨γ_i, m_jγ_j⟩¹ b_ij.
    pub fn kappa_half_exponent(&self, i: usize, sign: i32, b: &[i32]) -> i32 {
        match &self.skew {
            None => 0,
            Some(sk) => {
                let s: i64 = b
                    .iter()
                    .enumerate()
                    .map(|(j, &m)| m as i64 * self.gram[i][j] * sk[i][j])
                    .sum();
                -(sign as i64 * s) as i32
            }
        }
    }

    /// Twice the lattice degree: ⟨β, β⟩¹.
    pub fn norm2(&self, b: &[i32]) -> i64 {
        self.pairing(b, b)
    }
}

/// The skew matrix of the κ-deformation for the cyclic group of order n: b_{i,i+1} = 1, b_{i+1,i} = −1.
pub fn cyclic_skew(n: usize) -> Vec<Vec<i64>> {
    let mut b = vec![vec![0; n]; n];
    if n < 3 {
        return b;
    }
    for i in 0..n {
        b[i][(i + 1) % n] += 1;
        b[(i + 1) % n][i] -= 1;
    }
    b
}

/// e^α (u ⊗ e^β) = ε(α, β) u ⊗ e^{α+β}.
pub fn lattice_mul(l: &Lattice, alpha: &[i32], v: &FockVector) -> FockVector {
    v.map_keys(|k, c| {
        let beta: Vec<i32> = k.beta.iter().zip(alpha).map(|(b, a)| a + b).collect();
        Some((k.with_beta(beta), c * &l.cocycle(alpha, &k.beta)))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Charge {
    Plus,
    Minus,
}

/// X^±(σγ_i ⊗ r^k s^l, a, b); half-integers are stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexOp {
    pub charge: Charge,
    pub index: usize,
    pub sign: i32,
    pub a2: i32,
    pub b2: i32,
    pub k2: i32,
    pub l2: i32,
}

impl VertexOp {
    pub fn new(charge: Charge, index: usize, sign: i32, a2: i32, b2: i32) -> Self {
        VertexOp {
            charge,
            index,
            sign,
            a2,
            b2,
            k2: 0,
            l2: 0,
        }
    }

    /// γ ⊗ r^{k2/2} s^{l2/2}.
    pub fn twisted(mut self, k2: i32, l2: i32) -> Self {
        self.k2 = k2;
        self.l2 = l2;
        self
    }

    /// Sign of the lattice shift ±γ_i.
    pub fn lattice_sign(&self) -> i32 {
        match self.charge {
            Charge::Plus => self.sign,
            Charge::Minus => -self.sign,
        }
    }

    pub fn lattice_shift(&self, rank: usize) -> Vec<i32> {
        let mut v = vec![0; rank];
        v[self.index] = self.lattice_sign();
        v
    }

    /// The rescaling factor μ = r^{-k}s^{-l} in X(γ⊗r^k s^l, z) = X(γ, μz).
    pub fn mu(&self) -> Mono {
        Mono::new(-self.k2, -self.l2, 0)
    }

    /// n·t_n for the creation exponent Σ t_n a_{-n}(γ_i) zⁿ.
    fn creation_coeff(&self, n: u32) -> RSLaurent {
        let n = n as i32;
        match self.charge {
            Charge::Plus => RSLaurent::int(self.sign as i64),
            Charge::Minus => RSLaurent::uv(self.a2 * n, self.b2 * n).scale_int(-self.sign as i64),
        }
    }

    /// n·t_n for the annihilation exponent Σ t_n a_n(γ_i) z^{-n}.
    fn annihilation_coeff(&self, n: u32) -> RSLaurent {
        let n = n as i32;
        match self.charge {
            Charge::Plus => RSLaurent::uv(-self.a2 * n, -self.b2 * n).scale_int(-self.sign as i64),
            Charge::Minus => RSLaurent::int(self.sign as i64),
        }
    }

    fn creation_key(&self) -> (Charge, usize, i32, i32, i32) {
        (self.charge, self.index, self.sign, self.a2, self.b2)
    }
}

fn mono_pow(m: Mono, e: i64) -> RSLaurent {
    RSLaurent::term(
        Mono::new((m.u as i64 * e) as i32, (m.v as i64 * e) as i32, (m.w as i64 * e) as i32),
        CycScalar::one(),
    )
}

/// A vector split by lattice part, with an annihilation exponential expanded on each piece.
#[derive(Clone, Debug)]
pub struct Prepared {
    groups: Vec<(Vec<i32>, Vec<FockVector>)>,
}

/// A vector with both annihilation exponentials of a normal ordered product expanded.
#[derive(Clone, Debug)]
pub struct NormalPrepared {
    groups: Vec<(Vec<i32>, Vec<(i64, i64, FockVector)>)>,
}

/// Fock space with its lattice, acting by vertex operators.
#[derive(Debug)]
pub struct VertexSpace {
    pub fock: FockSpace,
    pub lattice: Lattice,
    creation: Mutex<HashMap<(Charge, usize, i32, i32, i32), Vec<FockVector>>>,
}

impl VertexSpace {
    pub fn new(xi: &WeightFunction, skew: Option<Vec<Vec<i64>>>) -> Result<Self, Error> {
        let lattice = Lattice::from_weight(xi, skew)?;
        Ok(VertexSpace {
            fock: FockSpace::new(xi),
            lattice,
            creation: Mutex::new(HashMap::new()),
        })
    }

    /// The same space with another cocycle convention. Normal ordering and the OPE
    /// helpers assume the bimultiplicative (non-transposed) rule.
    pub fn with_convention(mut self, convention: LatticeConvention) -> Self {
        self.lattice = self.lattice.with_convention(convention);
        self
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn is_kappa(&self) -> bool {
        self.lattice.skew.is_some()
    }

    /// Mode shift ⟨γ_i, γ_i⟩¹ / 2.
    pub fn shift(&self, i: usize) -> i64 {
        self.lattice.gram[i][i] / 2
    }

    /// 2·deg of a basis monomial: 2‖ρ‖ + ⟨β, β⟩¹.
    pub fn degree2(&self, k: &FockKey) -> i64 {
        2 * k.heis_degree() as i64 + self.lattice.norm2(&k.beta)
    }

    /// The zᵖ coefficient of the creation exponential, as a vector (multiplication operator).
    fn creation_poly(&self, op: &VertexOp, p: u32) -> FockVector {
        let mut cache = self.creation.lock().expect("creation cache");
        let t = &self.fock.table;
        let list = cache.entry(op.creation_key()).or_insert_with(|| vec![FockVector::vacuum(t)]);
        while list.len() <= p as usize {
            let k = list.len() as u32;
            let mut acc = FockVector::zero(t);
            for m in 1..=k {
                acc.add_scaled(&list[(k - m) as usize].create(m, op.index), &op.creation_coeff(m));
            }
            list.push(acc.scale(&RSLaurent::frac(1, k as i64)));
        }
        list[p as usize].clone()
    }

    /// Coefficients z^{-q}, q = 0..=max, of the annihilation exponential applied to u.
    fn annihilation_series(&self, op: &VertexOp, u: &FockVector, max: u32) -> Vec<FockVector> {
        let mut out = vec![u.clone()];
        for k in 1..=max {
            let mut acc = FockVector::zero(&u.table);
            for m in 1..=k {
                let prev = &out[(k - m) as usize];
                if prev.is_zero() {
                    continue;
                }
                acc.add_scaled(&self.fock.annihilate(m, op.index, prev), &op.annihilation_coeff(m));
            }
            out.push(acc.scale(&RSLaurent::frac(1, k as i64)));
        }
        out
    }

    fn group_by_beta(v: &FockVector) -> BTreeMap<Vec<i32>, FockVector> {
        let mut groups: BTreeMap<Vec<i32>, FockVector> = BTreeMap::new();
        for (k, c) in v.terms() {
            groups
                .entry(k.beta.clone())
                .or_insert_with(|| FockVector::zero(&v.table))
                .add_term(k.clone(), c.clone());
        }
        groups
    }

    /// Lattice scalar of one operator on e^β: ε(λ, β) times the κ factor of z^{±∂_{γ_i,κ}}.
    fn lattice_scalar(&self, op: &VertexOp, beta: &[i32]) -> RSLaurent {
        let e = self.lattice.shift_scalar(op.index, op.lattice_sign(), beta);
        let kh = self.lattice.kappa_half_exponent(op.index, op.lattice_sign(), beta);
        if kh == 0 {
            e
        } else {
            e.mul_mono(Mono::new(0, 0, kh))
        }
    }

    /// Splits v by lattice part and expands the annihilation exponential of `op` on each piece.
    pub fn prepare(&self, op: &VertexOp, v: &FockVector) -> Prepared {
        Prepared {
            groups: Self::group_by_beta(v)
                .into_iter()
                .map(|(beta, u)| {
                    let ann = self.annihilation_series(op, &u, u.max_heis_degree());
                    (beta, ann)
                })
                .collect(),
        }
    }

    /// The mode X_n applied to v (exact; v has finitely many terms).
    pub fn apply_mode(&self, op: &VertexOp, n: i64, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(&v.table);
        self.apply_mode_prepared(op, n, &self.prepare(op, v), &mut out);
        out
    }

    /// Adds X_n v to `out`, with v given by [`VertexSpace::prepare`] for the same operator.
    pub fn apply_mode_prepared(&self, op: &VertexOp, n: i64, prep: &Prepared, out: &mut FockVector) {
        let rank = self.rank();
        let h = self.shift(op.index);
        let lam = op.lattice_shift(rank);
        let twist = mono_pow(op.mu(), -n - h);
        for (beta, ann) in &prep.groups {
            let l = op.lattice_sign() as i64 * self.lattice.pairing_root(op.index, beta);
            let new_beta: Vec<i32> = beta.iter().zip(&lam).map(|(b, a)| a + b).collect();
            // z-exponent p − q + l must equal −n − h.
            let q_min = (n + h + l).max(0);
            if q_min >= ann.len() as i64 {
                continue;
            }
            let scalar = &self.lattice_scalar(op, beta) * &twist;
            for q in q_min as usize..ann.len() {
                let aq = &ann[q];
                if aq.is_zero() {
                    continue;
                }
                let p = q as i64 - n - h - l;
                let prod = self.creation_poly(op, p as u32).mul(aq);
                out.add_scaled(&prod.map_keys(|k, c| Some((k.with_beta(new_beta.clone()), c.clone()))), &scalar);
            }
        }
    }

    /// The z^A w^B coefficient of X1(z)X2(w) v.
    pub fn product_coeff(&self, op1: &VertexOp, op2: &VertexOp, za: i64, wb: i64, v: &FockVector) -> FockVector {
        let inner = self.apply_mode(op2, -wb - self.shift(op2.index), v);
        self.apply_mode(op1, -za - self.shift(op1.index), &inner)
    }

    /// Both annihilation exponentials of :X1X2: expanded on v.
    pub fn prepare_normal(&self, op1: &VertexOp, op2: &VertexOp, v: &FockVector) -> NormalPrepared {
        let mut groups = Vec::new();
        for (beta, u) in Self::group_by_beta(v) {
            let max_q = u.max_heis_degree();
            let mut parts = Vec::new();
            for (q2, a2) in self.annihilation_series(op2, &u, max_q).iter().enumerate() {
                if a2.is_zero() {
                    continue;
                }
                for (q1, a1) in self.annihilation_series(op1, a2, max_q - q2 as u32).into_iter().enumerate() {
                    if !a1.is_zero() {
                        parts.push((q1 as i64, q2 as i64, a1));
                    }
                }
            }
            groups.push((beta, parts));
        }
        NormalPrepared { groups }
    }

    /// The z^A w^B coefficient of :X1(z)X2(w): v.
    pub fn normal_ordered_coeff(&self, op1: &VertexOp, op2: &VertexOp, za: i64, wb: i64, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(&v.table);
        self.normal_ordered_prepared(op1, op2, za, wb, &self.prepare_normal(op1, op2, v), &mut out);
        out
    }

    /// Adds the z^A w^B coefficient of :X1X2: v to `out`.
    pub fn normal_ordered_prepared(
        &self,
        op1: &VertexOp,
        op2: &VertexOp,
        za: i64,
        wb: i64,
        prep: &NormalPrepared,
        out: &mut FockVector,
    ) {
        let rank = self.rank();
        let l1 = op1.lattice_shift(rank);
        let l2 = op2.lattice_shift(rank);
        let lsum: Vec<i32> = l1.iter().zip(&l2).map(|(a, b)| a + b).collect();
        let twist = &mono_pow(op1.mu(), za) * &mono_pow(op2.mu(), wb);
        for (beta, parts) in &prep.groups {
            let lz = op1.lattice_sign() as i64 * self.lattice.pairing_root(op1.index, beta);
            let lw = op2.lattice_sign() as i64 * self.lattice.pairing_root(op2.index, beta);
            let mut scalar = &self.lattice.cocycle(&lsum, beta) * &twist;
            let kh = self.lattice.kappa_half_exponent(op1.index, op1.lattice_sign(), beta)
                + self.lattice.kappa_half_exponent(op2.index, op2.lattice_sign(), beta);
            if kh != 0 {
                scalar = scalar.mul_mono(Mono::new(0, 0, kh));
            }
            let new_beta: Vec<i32> = beta.iter().zip(&lsum).map(|(b, a)| a + b).collect();
            for (q1, q2, a1) in parts {
                let p1 = za - lz + q1;
                let p2 = wb - lw + q2;
                if p1 < 0 || p2 < 0 {
                    continue;
                }
                let prod = self
                    .creation_poly(op1, p1 as u32)
                    .mul(&self.creation_poly(op2, p2 as u32))
                    .mul(a1);
                out.add_scaled(&prod.map_keys(|k, c| Some((k.with_beta(new_beta.clone()), c.clone()))), &scalar);
            }
        }
    }

    /// a_n(γ_i) on the full space (the lattice part is untouched).
    pub fn heis(&self, n: i32, i: usize, v: &FockVector) -> FockVector {
        self.fock.apply(n, i, v)
    }
}

/// All β supported on `indices` with Σ|β_i| ≤ radius.
pub fn lattice_ball(rank: usize, indices: &[usize], radius: u32) -> Vec<Vec<i32>> {
    fn go(idx: usize, indices: &[usize], left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if idx == indices.len() {
            out.push(cur.clone());
            return;
        }
        for m in -left..=left {
            cur[indices[idx]] = m;
            go(idx + 1, indices, left - m.abs(), cur, out);
        }
        cur[indices[idx]] = 0;
    }
    let mut out = Vec::new();
    go(0, indices, radius as i32, &mut vec![0; rank], &mut out);
    out.sort();
    out
}

/// Basis monomials over `indices` with total degree ≤ max_degree and lattice part in the ball.
pub fn spanning_set(l: &Lattice, indices: &[usize], max_degree: u32, radius: u32) -> Vec<FockKey> {
    let mut out = Vec::new();
    for beta in lattice_ball(l.rank(), indices, radius) {
        let n2 = l.norm2(&beta);
        if n2 > 2 * max_degree as i64 {
            continue;
        }
        let heis = max_degree - (n2 / 2) as u32;
        out.extend(crate::fock::heisenberg_basis(l.rank(), indices, heis, &beta));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct AdjointReport {
    pub op: VertexOp,
    pub pairs: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

/// ⟨X⁺_n u, v⟩ = ⟨u, X⁻_{-n} v⟩ with the cocycle factor ε(γ,β)ε(−γ,β+γ)^{-1} moved to the lattice side.
///
/// The Heisenberg factors are mutually adjoint as the definition Y⁻(z) = (Y⁺(z^{-1}))* requires;
/// e^γ is adjoint to e^{-γ} only up to the cocycle, which is divided out here.
pub fn verify_adjointness(vs: &VertexSpace, i: usize, keys: &[FockKey], modes: &[i64]) -> AdjointReport {
    let plus = VertexOp::new(Charge::Plus, i, 1, 0, 0);
    let minus = VertexOp::new(Charge::Minus, i, 1, 0, 0);
    let rank = vs.rank();
    let lam = plus.lattice_shift(rank);
    let mut pairs = 0;
    let mut witness = None;
    'outer: for ku in keys {
        for kv in keys {
            for &n in modes {
                let u = FockVector::basis(&vs.fock.table, ku.clone());
                let v = FockVector::basis(&vs.fock.table, kv.clone());
                let lhs = vs.fock.form(&vs.apply_mode(&plus, n, &u), &v);
                let rhs = vs.fock.form(&u, &vs.apply_mode(&minus, -n, &v));
                // X⁺ picks up ε(γ, β_u); X⁻ picks up ε(−γ, β_v) with β_v = β_u + γ.
                let eu = vs.lattice.cocycle(&lam, &ku.beta).invert_vars();
                let neg: Vec<i32> = lam.iter().map(|x| -x).collect();
                let ev = vs.lattice.cocycle(&neg, &kv.beta);
                pairs += 1;
                let ok = if lhs.is_zero() || rhs.is_zero() {
                    lhs.is_zero() && rhs.is_zero()
                } else {
                    &lhs * &ev == &rhs * &eu
                };
                if !ok {
                    witness = Some(format!("u={:?} v={:?} n={n}", ku, kv));
                    break 'outer;
                }
            }
        }
    }
    AdjointReport {
        op: plus,
        pairs,
        pass: witness.is_none(),
        witness,
    }
}
