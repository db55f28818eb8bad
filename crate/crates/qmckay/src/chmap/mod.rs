//! The characteristic map between wreath class functions and the Fock space.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::Error;
use crate::fock::{Alphabet, FockKey, FockSpace, FockVector};
use crate::group::{CharacterTable, ClassFunctionRS};
use crate::mckay::WeightFunction;
use crate::ring::RSLaurent;
use crate::wreath::{
    enumerate_types, eps_value, eta_value, multiplicities, sigma_rho, wreath_form, PartValuedFn, WreathClassFunction,
};

#[derive(Clone, Debug, Serialize)]
pub struct ChReport {
    pub group: String,
    pub n: u32,
    pub statement: String,
    pub checked: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

impl ChReport {
    fn new(t: &CharacterTable, n: u32, statement: &str) -> Self {
        ChReport {
            group: t.name.clone(),
            n,
            statement: statement.into(),
            checked: 0,
            pass: true,
            witness: None,
        }
    }

    fn fail(&mut self, w: String) {
        if self.witness.is_none() {
            self.witness = Some(w);
        }
        self.pass = false;
    }
}

fn inv_big(z: &BigInt) -> BigRational {
    BigRational::new(BigInt::from(1), z.clone())
}

/// a′_{−ρ} over class generators.
pub fn class_monomial(t: &Arc<CharacterTable>, rho: &PartValuedFn) -> FockVector {
    let mut v = FockVector::zero_in(t, Alphabet::Class);
    v.add_term(FockKey::from_rho(rho, vec![0; t.num_chars()]), RSLaurent::one());
    v
}

/// ch(f) = Σ_ρ Z_ρ^{-1} S(f(ρ)) a′_{−ρ}, returned over character generators.
pub fn ch(f: &WreathClassFunction) -> FockVector {
    let t = &f.table;
    let mut v = FockVector::zero_in(t, Alphabet::Class);
    for (rho, val) in f.support() {
        let z = rho.centralizer_order(t);
        v.add_term(
            FockKey::from_rho(rho, vec![0; t.num_chars()]),
            val.invert_vars().scale_rational(&inv_big(&z)),
        );
    }
    v.convert(Alphabet::Character)
}

/// Inverse of ch on a homogeneous vector with zero lattice part.
pub fn ch_inverse(v: &FockVector, n: u32) -> Result<WreathClassFunction, Error> {
    let t = &v.table;
    let cv = v.convert(Alphabet::Class);
    let mut f = WreathClassFunction::zero(t, n);
    for (k, c) in cv.terms() {
        if k.beta.iter().any(|&b| b != 0) {
            return Err(Error::Invalid("vector has a lattice part".into()));
        }
        let rho = k.rho(t.num_classes());
        if rho.weight() != n {
            return Err(Error::Invalid(format!("vector is not homogeneous of degree {n}")));
        }
        let z = rho.centralizer_order(t);
        f.set(rho, c.scale_rational(&BigRational::from_integer(z)).invert_vars())?;
    }
    Ok(f)
}

/// Wreath-ring product, realized on the Fock side and pulled back.
pub fn wreath_product(f: &WreathClassFunction, g: &WreathClassFunction) -> Result<WreathClassFunction, Error> {
    ch_inverse(&ch(f).mul(&ch(g)), f.n + g.n)
}

/// The zⁿ coefficient of exp(Σ_m sign^{m−1} a_{−m}(γ)(r^{−k}s^{−l}z)^m / m).
fn exp_coefficient(gamma: &ClassFunctionRS, k: i32, l: i32, n: u32, alternating: bool) -> FockVector {
    let t = &gamma.table;
    let mut e = vec![FockVector::vacuum(t)];
    for deg in 1..=n {
        let mut acc = FockVector::zero(t);
        for m in 1..=deg {
            let mut step = FockVector::zero(t);
            let shift = RSLaurent::rs(-(m as i32) * k, -(m as i32) * l);
            for (i, fi) in gamma.coeffs.iter().enumerate() {
                if fi.is_zero() {
                    continue;
                }
                let c = &fi.substitute(m as i32).expect("positive level") * &shift;
                step.add_scaled(&e[(deg - m) as usize].create(m, i), &c);
            }
            if alternating && m % 2 == 0 {
                step = step.scale(&RSLaurent::int(-1));
            }
            acc = acc.add(&step);
        }
        e.push(acc.scale(&RSLaurent::frac(1, deg as i64)));
    }
    e.pop().expect("at least the vacuum")
}

/// Coefficient of zⁿ in exp(Σ a_{−m}(γ)(r^{−k}s^{−l}z)^m/m); γ may be virtual.
pub fn ch_eta(gamma: &ClassFunctionRS, k: i32, l: i32, n: u32) -> FockVector {
    exp_coefficient(gamma, k, l, n, false)
}

/// As `ch_eta` with (−1)^{m−1} inside the exponential.
pub fn ch_eps(gamma: &ClassFunctionRS, k: i32, l: i32, n: u32) -> FockVector {
    exp_coefficient(gamma, k, l, n, true)
}

/// Checks ch(η_n(γ⊗r^k s^l)) and ch(ε_n(γ⊗r^k s^l)) against the series for every irreducible γ.
pub fn verify_generating_functions(t: &Arc<CharacterTable>, n: u32, twists: &[(i32, i32)]) -> ChReport {
    let mut rep = ChReport::new(t, n, "ch(η_n), ch(ε_n) equal the exponential-series coefficients");
    for gamma in 0..t.num_chars() {
        let g = ClassFunctionRS::character(t, gamma, RSLaurent::one());
        for &(k, l) in twists {
            let eta = WreathClassFunction::from_fn(t, n, |rho| eta_value(t, gamma, k, l, rho));
            let eps = WreathClassFunction::from_fn(t, n, |rho| eps_value(t, gamma, k, l, rho));
            rep.checked += 2;
            if ch(&eta) != ch_eta(&g, k, l, n) {
                rep.fail(format!("η: γ{gamma}, k={k}, l={l}"));
            }
            if ch(&eps) != ch_eps(&g, k, l, n) {
                rep.fail(format!("ε: γ{gamma}, k={k}, l={l}"));
            }
        }
    }
    rep
}

/// Wreath-side and Fock-side Gram matrices of σ_{ρ⊗r^k s^l}, ρ ∈ P_n(Γ_*).
pub fn isometry_grams(
    xi: &WeightFunction,
    n: u32,
    twists: &[(i32, i32)],
) -> Result<(Vec<Vec<RSLaurent>>, Vec<Vec<RSLaurent>>), Error> {
    let t = xi.table().clone();
    let mut sigmas = Vec::new();
    for rho in enumerate_types(&t, n) {
        for &(k, l) in twists {
            sigmas.push(sigma_rho(&t, &rho, k, l)?);
        }
    }
    let mut wreath = vec![vec![RSLaurent::zero(); sigmas.len()]; sigmas.len()];
    for (a, f) in sigmas.iter().enumerate() {
        for (b, g) in sigmas.iter().enumerate() {
            wreath[a][b] = wreath_form(f, g, xi)?;
        }
    }
    let fs = FockSpace::new(xi);
    let images: Vec<FockVector> = sigmas.iter().map(ch).collect();
    Ok((wreath, fs.gram(&images)))
}

pub fn verify_isometry(xi: &WeightFunction, n: u32, twists: &[(i32, i32)]) -> Result<ChReport, Error> {
    let t = xi.table().clone();
    let mut rep = ChReport::new(&t, n, "⟨σ_ρ, σ_ρ′⟩ on Γ_n equals ⟨ch σ_ρ, ch σ_ρ′⟩ on the Fock space");
    let (w, f) = isometry_grams(xi, n, twists)?;
    for a in 0..w.len() {
        for b in 0..w.len() {
            rep.checked += 1;
            if w[a][b] != f[a][b] {
                rep.fail(format!("entry ({a},{b}): wreath {} vs Fock {}", w[a][b].pretty(), f[a][b].pretty()));
            }
        }
    }
    Ok(rep)
}

/// Elements of the tensor square of the Fock space.
pub type Tensor2 = HashMap<(FockKey, FockKey), RSLaurent>;

fn tensor_add(t: &mut Tensor2, k: (FockKey, FockKey), c: RSLaurent) {
    if c.is_zero() {
        return;
    }
    match t.entry(k) {
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

/// Δ(a_{−n}(x)) = a_{−n}(x)⊗1 + 1⊗a_{−n}(x), Δ(e^β) = e^β⊗e^β, extended multiplicatively.
pub fn coproduct(v: &FockVector) -> Tensor2 {
    let mut out = Tensor2::new();
    for (k, c) in v.terms() {
        let mut parts: Vec<(Vec<(u32, u32)>, Vec<(u32, u32)>)> = vec![(vec![], vec![])];
        for &f in &k.modes {
            let mut next = Vec::with_capacity(parts.len() * 2);
            for (l, r) in &parts {
                let mut l2 = l.clone();
                l2.push(f);
                next.push((l2, r.clone()));
                let mut r2 = r.clone();
                r2.push(f);
                next.push((l.clone(), r2));
            }
            parts = next;
        }
        for (l, r) in parts {
            tensor_add(
                &mut out,
                (FockKey::new(l, k.beta.clone()), FockKey::new(r, k.beta.clone())),
                c.clone(),
            );
        }
    }
    out
}

/// Fock antipode: a_{−n}(x) ↦ −a_{−n}(x), e^β ↦ e^{−β}.
pub fn antipode(v: &FockVector) -> FockVector {
    v.map_keys(|k, c| {
        let sign = if k.modes.len() % 2 == 0 { 1 } else { -1 };
        Some((k.with_beta(k.beta.iter().map(|b| -b).collect()), c.scale_int(sign)))
    })
}

/// Counit: the coefficient of the vacuum e^0 plus lattice terms with no Heisenberg part.
pub fn counit(v: &FockVector) -> RSLaurent {
    let mut acc = RSLaurent::zero();
    for (k, c) in v.terms() {
        if k.modes.is_empty() {
            acc.add_assign_ref(c);
        }
    }
    acc
}

/// Hopf compatibility of ch up to weight n: multiplicativity, coproduct, counit and antipode axioms.
pub fn verify_hopf(t: &Arc<CharacterTable>, n: u32) -> Result<ChReport, Error> {
    let mut rep = ChReport::new(t, n, "ch is an isomorphism of Hopf algebras");
    let twists = [(0, 0), (1, 0), (0, -1)];
    // σ_ρ σ_ρ′ = σ_{ρ∪ρ′} on the Fock side.
    for n1 in 1..n {
        let n2 = n - n1;
        for r1 in enumerate_types(t, n1) {
            for r2 in enumerate_types(t, n2) {
                for &(k, l) in &twists {
                    let lhs = ch(&sigma_rho(t, &r1, k, l)?).mul(&ch(&sigma_rho(t, &r2, k, l)?));
                    let rhs = ch(&sigma_rho(t, &r1.union(&r2), k, l)?);
                    rep.checked += 1;
                    if lhs != rhs {
                        rep.fail(format!("product of types {r1} and {r2}"));
                    }
                }
            }
        }
    }
    for rho in enumerate_types(t, n) {
        let f = sigma_rho(t, &rho, 1, -1)?;
        let v = ch(&f).convert(Alphabet::Class);
        // ch ⊗ ch of the restriction equals Δ(ch f).
        let mut res = Tensor2::new();
        for (whole, val) in f.support() {
            for (a, b) in splittings(whole) {
                let za = a.centralizer_order(t);
                let zb = b.centralizer_order(t);
                let rank = t.num_chars();
                tensor_add(
                    &mut res,
                    (FockKey::from_rho(&a, vec![0; rank]), FockKey::from_rho(&b, vec![0; rank])),
                    val.invert_vars().scale_rational(&inv_big(&(za * zb))),
                );
            }
        }
        rep.checked += 1;
        if res != coproduct(&v) {
            rep.fail(format!("coproduct at type {rho}"));
        }
        // Counit and antipode axioms.
        let delta = coproduct(&v);
        let mut left = FockVector::zero_in(t, Alphabet::Class);
        let mut right = FockVector::zero_in(t, Alphabet::Class);
        let mut counit_l = FockVector::zero_in(t, Alphabet::Class);
        for ((a, b), c) in &delta {
            let va = FockVector::basis_in(t, Alphabet::Class, a.clone());
            let vb = FockVector::basis_in(t, Alphabet::Class, b.clone());
            left.add_scaled(&antipode(&va).mul(&vb), c);
            right.add_scaled(&va.mul(&antipode(&vb)), c);
            counit_l.add_scaled(&vb, &(c * &counit(&va)));
        }
        let eps = counit(&v);
        let mut unit = FockVector::zero_in(t, Alphabet::Class);
        unit.add_term(FockKey::vacuum(t.num_chars()), eps);
        rep.checked += 3;
        if left != unit || right != unit {
            rep.fail(format!("antipode axiom at type {rho}"));
        }
        if counit_l != v {
            rep.fail(format!("counit axiom at type {rho}"));
        }
    }
    // Group-like lattice elements.
    let mut beta = vec![0; t.num_chars()];
    beta[0] = 1;
    if t.num_chars() > 1 {
        beta[1] = -2;
    }
    let e = FockVector::basis(t, FockKey::new(vec![], beta.clone()));
    let mut want = Tensor2::new();
    want.insert((FockKey::new(vec![], beta.clone()), FockKey::new(vec![], beta)), RSLaurent::one());
    rep.checked += 1;
    if coproduct(&e) != want {
        rep.fail("Δ(e^β) is not e^β ⊗ e^β".into());
    }
    Ok(rep)
}

/// All ways to split a type into an ordered pair of sub-multisets.
pub fn splittings(rho: &PartValuedFn) -> Vec<(PartValuedFn, PartValuedFn)> {
    let mut acc: Vec<(Vec<Vec<u32>>, Vec<Vec<u32>>)> = vec![(vec![], vec![])];
    for lam in rho.parts() {
        let mult: Vec<(u32, u32)> = multiplicities(lam).into_iter().collect();
        let mut options: Vec<(Vec<u32>, Vec<u32>)> = vec![(vec![], vec![])];
        for (part, m) in mult {
            let mut next = Vec::new();
            for (l, r) in &options {
                for take in 0..=m {
                    let mut l2 = l.clone();
                    let mut r2 = r.clone();
                    l2.extend(std::iter::repeat_n(part, take as usize));
                    r2.extend(std::iter::repeat_n(part, (m - take) as usize));
                    next.push((l2, r2));
                }
            }
            options = next;
        }
        let mut next = Vec::new();
        for (l, r) in &acc {
            for (ol, or) in &options {
                let mut l2 = l.clone();
                l2.push(ol.clone());
                let mut r2 = r.clone();
                r2.push(or.clone());
                next.push((l2, r2));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(l, r)| (PartValuedFn::new(l).expect("parts"), PartValuedFn::new(r).expect("parts")))
        .collect()
}
