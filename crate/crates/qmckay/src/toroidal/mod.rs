//! The two-parameter quantum toroidal algebra acting on the Fock space by vertex operators,
//! with checks of its defining relations on truncated spanning sets.

mod oneparam;
mod relations;

use std::sync::Arc;

use serde::Serialize;

use crate::error::Error;
use crate::fock::{FockKey, FockVector};
use crate::group::CharacterTable;
use crate::mckay::{is_cyclic, kappa_weight, mckay_weight};
use crate::ring::{rs_quantum_number, CycScalar, Mono, RSLaurent};
use crate::vertex::{cyclic_skew, spanning_set, Charge, LatticeConvention, VertexOp, VertexSpace};

pub use oneparam::{specialize_one_param, OneParamFock, OneParamReport, OneParamVector, QPoly};
pub use relations::{verify_relation, verify_relation_on, verify_serre, verify_suite, AmendedCheck, Relation, RelationReport, Window};

/// How adjacent off-diagonal entries of (A_ij) are oriented.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// i < j adjacent: A_ij = r^{a_ij}, A_ji = s^{−a_ij}.
    #[default]
    LowerToHigher,
    /// The cyclic type A display: A_{i,i+1} = r^{-1}, A_{i+1,i} = s with indices mod N+1.
    Cyclic,
}

/// The two-parameter structure constants A_ij, the Cartan matrix and (κ-variant) the skew matrix.
#[derive(Clone, Debug, Serialize)]
pub struct StructureMatrix {
    #[serde(serialize_with = "serialize_monos")]
    pub entries: Vec<Vec<Mono>>,
    pub cartan: Vec<Vec<i64>>,
    pub skew: Option<Vec<Vec<i64>>>,
    pub orientation: Orientation,
}

fn serialize_monos<S: serde::Serializer>(m: &[Vec<Mono>], s: S) -> Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = m
        .iter()
        .map(|row| row.iter().map(|&x| RSLaurent::term(x, CycScalar::one()).pretty()).collect())
        .collect();
    text.serialize(s)
}

impl StructureMatrix {
    pub fn new(cartan: Vec<Vec<i64>>, skew: Option<Vec<Vec<i64>>>, orientation: Orientation) -> Result<Self, Error> {
        let n = cartan.len();
        let mut entries = vec![vec![Mono::ONE; n]; n];
        for i in 0..n {
            for j in 0..n {
                let a = cartan[i][j] as i32;
                entries[i][j] = if i == j {
                    if a != 2 {
                        return Err(Error::Invalid(format!("Cartan diagonal at {i} is {a}")));
                    }
                    Mono::new(2, -2, 0)
                } else if a == 0 {
                    Mono::ONE
                } else {
                    let forward = match orientation {
                        Orientation::LowerToHigher => i < j,
                        Orientation::Cyclic if n > 2 => (i + 1) % n == j,
                        Orientation::Cyclic => i < j,
                    };
                    if forward {
                        Mono::new(2 * a, 0, 0)
                    } else {
                        Mono::new(0, -2 * a, 0)
                    }
                };
            }
        }
        Ok(StructureMatrix {
            entries,
            cartan,
            skew,
            orientation,
        })
    }

    pub fn size(&self) -> usize {
        self.cartan.len()
    }

    pub fn get(&self, i: usize, j: usize) -> RSLaurent {
        RSLaurent::term(self.entries[i][j], CycScalar::one())
    }

    pub fn mono(&self, i: usize, j: usize) -> Mono {
        self.entries[i][j]
    }

    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.skew.as_ref().map_or(0, |b| b[i][j])
    }

    /// The matrix at (r, s) = (q, q^{-1}), as exponents of q.
    pub fn q_exponents(&self) -> Vec<Vec<i32>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|m| (m.u - m.v) / 2).collect())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    Plain,
    Kappa,
    /// Indices 1..N on the space without γ_0 directions.
    Affine,
}

/// The two generator assignments: x⁺ ↦ Y⁺(γ_i), x⁻ ↦ Y⁻(γ_i); or x⁺ ↦ Y⁻(−γ_i), x⁻ ↦ Y⁺(−γ_i).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dictionary {
    First,
    Second,
}

/// Construction choices beyond the variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RepOptions {
    pub dictionary: Dictionary,
    pub convention: LatticeConvention,
    pub orientation: Orientation,
}

impl Default for RepOptions {
    fn default() -> Self {
        RepOptions {
            dictionary: Dictionary::First,
            convention: LatticeConvention::CORRECTED,
            orientation: Orientation::LowerToHigher,
        }
    }
}

/// The vertex representation on the Fock space.
#[derive(Debug)]
pub struct ToroidalRep {
    pub vs: VertexSpace,
    pub structure: StructureMatrix,
    pub variant: Variant,
    pub options: RepOptions,
    /// Generator indices: 0..=N, or 1..=N for the affine variant.
    pub indices: Vec<usize>,
}

impl ToroidalRep {
    pub fn build(t: &Arc<CharacterTable>, variant: Variant, options: RepOptions) -> Result<Self, Error> {
        let n = t.num_chars();
        let (xi, skew) = match variant {
            Variant::Kappa => {
                if !is_cyclic(t) {
                    return Err(Error::Invalid("the κ-variant needs a cyclic group".into()));
                }
                (kappa_weight(t, &RSLaurent::kappa())?, Some(cyclic_skew(n)))
            }
            _ => (mckay_weight(t)?, None),
        };
        let vs = VertexSpace::new(&xi, skew.clone())?.with_convention(options.convention);
        let structure = StructureMatrix::new(vs.lattice.gram.clone(), skew, options.orientation)?;
        let indices = match variant {
            Variant::Affine => (1..n).collect(),
            _ => (0..n).collect(),
        };
        Ok(ToroidalRep {
            vs,
            structure,
            variant,
            options,
            indices,
        })
    }

    pub fn rank(&self) -> usize {
        self.vs.rank()
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.vs.fock.table
    }

    /// The vertex operator realizing x_i^±.
    pub fn x_op(&self, c: Charge, i: usize) -> VertexOp {
        match (self.options.dictionary, c) {
            (Dictionary::First, Charge::Plus) => VertexOp::new(Charge::Plus, i, 1, 1, -1).twisted(0, -1),
            (Dictionary::First, Charge::Minus) => VertexOp::new(Charge::Minus, i, 1, 1, -1).twisted(1, 0),
            (Dictionary::Second, Charge::Plus) => VertexOp::new(Charge::Minus, i, -1, -1, 1).twisted(-1, 0),
            (Dictionary::Second, Charge::Minus) => VertexOp::new(Charge::Plus, i, -1, -1, 1).twisted(0, 1),
        }
    }

    /// Twisted modes are normalized as μ^{-k} X_k(γ) rather than μ^{-k-h} X_k(γ): this is μ^h.
    pub fn x_norm(&self, c: Charge, i: usize) -> RSLaurent {
        let mu = self.x_op(c, i).mu();
        let h = self.vs.shift(i) as i32;
        RSLaurent::term(Mono::new(mu.u * h, mu.v * h, mu.w * h), CycScalar::one())
    }

    /// x_i^±(k) v.
    pub fn x(&self, c: Charge, i: usize, k: i64, v: &FockVector) -> FockVector {
        self.vs.apply_mode(&self.x_op(c, i), k, v).scale(&self.x_norm(c, i))
    }

    /// The scalar [|m|]/|m| with a_i(m) ↦ ([|m|]/|m|) a_m(γ_i).
    pub fn heis_scalar(m: i32) -> RSLaurent {
        rs_quantum_number(m.abs()).scale_rational(&num_rational::BigRational::new(1.into(), (m.abs() as i64).into()))
    }

    /// a_i(m) v.
    pub fn a(&self, i: usize, m: i32, v: &FockVector) -> FockVector {
        self.vs.heis(m, i, v).scale(&Self::heis_scalar(m))
    }

    fn diagonal(&self, v: &FockVector, f: impl Fn(&FockKey) -> Mono) -> FockVector {
        v.map_keys(|k, c| Some((k.clone(), c.mul_mono(f(k)))))
    }

    fn lattice_product(&self, beta: &[i32], f: impl Fn(usize) -> Mono) -> Mono {
        let mut acc = Mono::ONE;
        for (j, &m) in beta.iter().enumerate() {
            if m != 0 {
                let e = f(j);
                acc = Mono::new(acc.u + m * e.u, acc.v + m * e.v, acc.w + m * e.w);
            }
        }
        acc
    }

    /// ω_i on u ⊗ e^β: Π_j A_ji^{m_j}.
    pub fn omega_scalar(&self, i: usize, beta: &[i32]) -> Mono {
        self.lattice_product(beta, |j| self.structure.mono(j, i))
    }

    /// ω'_i on u ⊗ e^β: Π_j A_ij^{−m_j}.
    pub fn omega_prime_scalar(&self, i: usize, beta: &[i32]) -> Mono {
        let m = self.lattice_product(beta, |j| self.structure.mono(i, j));
        Mono::new(-m.u, -m.v, -m.w)
    }

    pub fn omega(&self, i: usize, v: &FockVector) -> FockVector {
        self.diagonal(v, |k| self.omega_scalar(i, &k.beta))
    }

    pub fn omega_inv(&self, i: usize, v: &FockVector) -> FockVector {
        self.diagonal(v, |k| {
            let m = self.omega_scalar(i, &k.beta);
            Mono::new(-m.u, -m.v, -m.w)
        })
    }

    pub fn omega_prime(&self, i: usize, v: &FockVector) -> FockVector {
        self.diagonal(v, |k| self.omega_prime_scalar(i, &k.beta))
    }

    /// Coefficients z^{-m}, m = 0..=max, of exp(c Σ_{ℓ≥1} a_i(±ℓ) z^{∓ℓ}) applied to v.
    fn heis_exp(&self, i: usize, sign: i32, c: &RSLaurent, max: u32, v: &FockVector) -> Vec<FockVector> {
        let mut out = vec![v.clone()];
        for m in 1..=max {
            let mut acc = FockVector::zero(&v.table);
            for l in 1..=m {
                let prev = &out[(m - l) as usize];
                if prev.is_zero() {
                    continue;
                }
                acc.add_scaled(&self.a(i, sign * l as i32, prev), &c.scale_int(l as i64));
            }
            out.push(acc.scale(&RSLaurent::frac(1, m as i64)));
        }
        out
    }

    /// ω_i(m) v for m ≥ 0 (zero for m < 0).
    pub fn omega_mode(&self, i: usize, m: i64, v: &FockVector) -> FockVector {
        if m < 0 {
            return FockVector::zero(&v.table);
        }
        let rs = &RSLaurent::r() - &RSLaurent::s();
        let e = self.heis_exp(i, 1, &rs, m as u32, v);
        self.omega(i, &e[m as usize])
    }

    /// ω'_i(m) v for m ≤ 0 (zero for m > 0).
    pub fn omega_prime_mode(&self, i: usize, m: i64, v: &FockVector) -> FockVector {
        if m > 0 {
            return FockVector::zero(&v.table);
        }
        let rs = &RSLaurent::s() - &RSLaurent::r();
        let e = self.heis_exp(i, -1, &rs, (-m) as u32, v);
        self.omega_prime(i, &e[(-m) as usize])
    }

    /// 2·deg, with deg = ‖ρ‖ + ½⟨β, β⟩¹.
    pub fn degree2(&self, k: &FockKey) -> i64 {
        self.vs.degree2(k)
    }

    /// D = r^{−deg}.
    pub fn d(&self, v: &FockVector) -> FockVector {
        self.diagonal(v, |k| Mono::new(-(self.degree2(k) as i32), 0, 0))
    }

    /// D' = s^{−deg}.
    pub fn d_prime(&self, v: &FockVector) -> FockVector {
        self.diagonal(v, |k| Mono::new(0, -(self.degree2(k) as i32), 0))
    }

    /// D_2 = r^{m_0(β)}.
    pub fn d2(&self, v: &FockVector) -> FockVector {
        self.diagonal(v, |k| Mono::new(2 * k.beta[0], 0, 0))
    }

    /// D_2' = s^{m_0(β)}.
    pub fn d2_prime(&self, v: &FockVector) -> FockVector {
        self.diagonal(v, |k| Mono::new(0, 2 * k.beta[0], 0))
    }

    /// γ ↦ r.
    pub fn gamma(&self) -> RSLaurent {
        RSLaurent::r()
    }

    /// γ' ↦ s.
    pub fn gamma_prime(&self) -> RSLaurent {
        RSLaurent::s()
    }

    /// Spanning monomials of degree ≤ window.degree on the variant's directions.
    pub fn spanning_keys(&self, window: &Window) -> Vec<FockKey> {
        spanning_set(&self.vs.lattice, &self.indices, window.degree, window.radius)
    }
}
