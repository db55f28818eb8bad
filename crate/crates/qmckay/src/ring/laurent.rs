//! Laurent polynomials in u = r^{1/2}, v = s^{1/2} (and w = κ^{1/2}) over Q(ζ_∞).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use super::cyclotomic::CycScalar;
use crate::error::Error;

/// Exponents of u, v, w in a monomial u^u v^v w^w.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub u: i32,
    pub v: i32,
    pub w: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { u: 0, v: 0, w: 0 };

    pub fn new(u: i32, v: i32, w: i32) -> Self {
        Mono { u, v, w }
    }

    fn mul(self, o: Mono) -> Mono {
        Mono::new(self.u + o.u, self.v + o.v, self.w + o.w)
    }

    fn inv(self) -> Mono {
        Mono::new(-self.u, -self.v, -self.w)
    }
}

/// Exact element of Q(ζ)[r^{±1/2}, s^{±1/2}, κ^{±1/2}] in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RSLaurent {
    terms: BTreeMap<Mono, CycScalar>,
}

impl RSLaurent {
    pub fn zero() -> Self {
        RSLaurent::default()
    }

    pub fn one() -> Self {
        Self::constant(CycScalar::one())
    }

    pub fn int(k: i64) -> Self {
        Self::constant(CycScalar::int(k))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Self::constant(CycScalar::frac(p, q))
    }

    pub fn constant(c: CycScalar) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn term(m: Mono, c: CycScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        RSLaurent { terms }
    }

    /// u^a v^b, i.e. r^{a/2} s^{b/2}.
    pub fn uv(a: i32, b: i32) -> Self {
        Self::term(Mono::new(a, b, 0), CycScalar::one())
    }

    /// r^a s^b with integer exponents.
    pub fn rs(a: i32, b: i32) -> Self {
        Self::uv(2 * a, 2 * b)
    }

    pub fn r() -> Self {
        Self::rs(1, 0)
    }

    pub fn s() -> Self {
        Self::rs(0, 1)
    }

    /// κ^{c/2}.
    pub fn kappa_half(c: i32) -> Self {
        Self::term(Mono::new(0, 0, c), CycScalar::one())
    }

    pub fn kappa() -> Self {
        Self::kappa_half(2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> CycScalar {
        self.terms.get(m).cloned().unwrap_or_else(CycScalar::zero)
    }

    /// The value as a scalar when no variable appears.
    pub fn to_constant(&self) -> Option<CycScalar> {
        match self.terms.len() {
            0 => Some(CycScalar::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn has_kappa(&self) -> bool {
        self.terms.keys().any(|m| m.w != 0)
    }

    fn add_term(&mut self, m: Mono, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &Self) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }

    /// self += f * g without materialising the product.
    pub fn add_product(&mut self, f: &Self, g: &Self) {
        for (mf, cf) in &f.terms {
            for (mg, cg) in &g.terms {
                self.add_term(mf.mul(*mg), cf.mul(cg));
            }
        }
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RSLaurent {
            terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect(),
        }
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RSLaurent {
            terms: self.terms.iter().map(|(m, x)| (*m, x.scale(q))).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&CycScalar::int(k))
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        RSLaurent {
            terms: self.terms.iter().map(|(x, c)| (x.mul(m), c.clone())).collect(),
        }
    }

    /// Inverse of a unit (a single nonzero term).
    pub fn inv(&self) -> Result<Self, Error> {
        if self.terms.len() != 1 {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Ok(Self::term(m.inv(), c.inv()?))
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Exact quotient by a nonzero divisor, failing if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self, Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (dlead, dcoef) = d.terms.iter().next_back().unwrap();
        let dlow = *d.terms.keys().next().unwrap();
        let flow = *self.terms.keys().next().unwrap();
        let floor = flow.mul(dlow.inv());
        let dinv = dcoef.inv()?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((rl, rc)) = rem.terms.iter().next_back() {
            let qm = rl.mul(dlead.inv());
            if qm < floor {
                return Err(Error::InexactDivision);
            }
            let qc = rc.mul(&dinv);
            let t = Self::term(qm, qc);
            rem = &rem - &(&t * d);
            q.add_assign_ref(&t);
        }
        Ok(q)
    }

    /// Replaces every monomial r^a s^b κ^c by r^{ma} s^{mb} κ^{mc}.
    pub fn substitute(&self, m: i32) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::ZeroSubstitution);
        }
        Ok(self.map_monos(|x| Mono::new(m * x.u, m * x.v, m * x.w)))
    }

    /// Swaps r and s.
    pub fn bar(&self) -> Self {
        self.map_monos(|x| Mono::new(x.v, x.u, x.w))
    }

    /// Inverts every variable: f(r^{-1}, s^{-1}, κ^{-1}).
    pub fn invert_vars(&self) -> Self {
        self.map_monos(Mono::inv)
    }

    fn map_monos(&self, f: impl Fn(Mono) -> Mono) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(f(*m), c.clone());
        }
        out
    }

    /// Evaluates at u = r^{1/2}, v = s^{1/2}, w = κ^{1/2} given as nonzero scalars.
    pub fn eval(&self, u: &CycScalar, v: &CycScalar, w: &CycScalar) -> Result<CycScalar, Error> {
        if u.is_zero() || v.is_zero() || w.is_zero() {
            return Err(Error::ZeroSubstitution);
        }
        let mut acc = CycScalar::zero();
        for (m, c) in &self.terms {
            let t = c
                .mul(&u.pow(m.u as i64)?)
                .mul(&v.pow(m.v as i64)?)
                .mul(&w.pow(m.w as i64)?);
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Evaluates at scalar values of r and s; half-integer exponents need designated roots.
    pub fn specialize(
        &self,
        r: &CycScalar,
        s: &CycScalar,
        roots: Option<(&CycScalar, &CycScalar)>,
    ) -> Result<CycScalar, Error> {
        if r.is_zero() || s.is_zero() {
            return Err(Error::ZeroSubstitution);
        }
        if self.has_kappa() {
            return Err(Error::Parse("cannot specialize a κ-dependent value".into()));
        }
        match roots {
            Some((u, v)) => {
                if &u.mul(u) != r || &v.mul(v) != s {
                    return Err(Error::Parse("designated roots do not square to r, s".into()));
                }
                self.eval(u, v, &CycScalar::one())
            }
            None => {
                let mut acc = CycScalar::zero();
                for (m, c) in &self.terms {
                    if m.u % 2 != 0 || m.v % 2 != 0 {
                        return Err(Error::MissingSquareRoot);
                    }
                    let t = c.mul(&r.pow((m.u / 2) as i64)?).mul(&s.pow((m.v / 2) as i64)?);
                    acc = acc.add(&t);
                }
                Ok(acc)
            }
        }
    }

    /// The value at r = s = 1 (κ must be absent).
    pub fn at_one(&self) -> Result<CycScalar, Error> {
        self.specialize(&CycScalar::one(), &CycScalar::one(), Some((&CycScalar::one(), &CycScalar::one())))
    }

    /// Specialization r = q, s = q^{-1}, giving a Laurent polynomial in t = q^{1/2}.
    pub fn specialize_q(&self) -> QLaurent {
        let mut out = QLaurent::zero();
        for (m, c) in &self.terms {
            out.add_term((m.u - m.v, m.w), c.clone());
        }
        out
    }

    /// Floating value at positive real r, s (u, v the positive roots) and κ = 1.
    pub fn eval_f64(&self, r: f64, s: f64) -> (f64, f64) {
        let (u, v) = (r.sqrt(), s.sqrt());
        let mut re = 0.0;
        let mut im = 0.0;
        for (m, c) in &self.terms {
            let f = u.powi(m.u) * v.powi(m.v);
            let (a, b) = c.to_complex();
            re += a * f;
            im += b * f;
        }
        (re, im)
    }

    /// The lexicographically largest monomial.
    pub fn leading(&self) -> Option<(&Mono, &CycScalar)> {
        self.terms.iter().next_back()
    }

    /// Human-readable rendering, e.g. `(r s^-1)^(1/2) + 2`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mono = pretty_mono(m);
            let cs = c.pretty();
            let (neg, body) = if c.conductor() == 1 {
                let neg = cs.starts_with('-');
                let mag = cs.trim_start_matches('-').to_string();
                let body = match (mag.as_str(), mono.is_empty()) {
                    (_, true) => mag,
                    ("1", false) => mono,
                    (_, false) => format!("{mag} {mono}"),
                };
                (neg, body)
            } else if mono.is_empty() {
                (false, format!("({cs})"))
            } else {
                (false, format!("({cs}) {mono}"))
            };
            if out.is_empty() {
                out = if neg { format!("-{body}") } else { body };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        out
    }
}

fn pretty_mono(m: &Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("r", m.u), ("s", m.v), ("k", m.w)] {
        if e == 0 {
            continue;
        }
        if e % 2 == 0 {
            let k = e / 2;
            parts.push(if k == 1 { name.to_string() } else { format!("{name}^{k}") });
        } else {
            parts.push(format!("{name}^({e}/2)"));
        }
    }
    parts.join(" ")
}

impl fmt::Display for RSLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{} * r^({}/2) * s^({}/2)", c, m.u, m.v)?;
            if m.w != 0 {
                write!(f, " * k^({}/2)", m.w)?;
            }
        }
        Ok(())
    }
}

/// Recursive-descent reader for both the canonical and the pretty rendering:
/// sums and differences of products of numbers, `[..]@n` scalars, `zN^k`, `r`, `s`, `k` with integer or
/// `(p/2)` exponents, and parenthesized subexpressions.
struct Reader<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn signed_int(&mut self) -> Result<i64, Error> {
        self.skip_ws();
        let neg = self.eat('-');
        self.skip_ws();
        let d = self.digits().ok_or_else(|| self.err("expected an integer"))?;
        let v: i64 = d.parse().map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<RSLaurent, Error> {
        let mut out = RSLaurent::zero();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let t = self.term()?;
            out.add_assign_ref(&if sign < 0 { -&t } else { t });
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<RSLaurent, Error> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat('*') {
                acc = &acc * &self.factor()?;
                continue;
            }
            match self.peek() {
                Some(c) if c == '(' || c == '[' || c.is_ascii_alphanumeric() => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    /// `^n`, `^-n`, `^(n)` or `^(p/2)`, as a multiple of 1/2.
    fn half_exponent(&mut self) -> Result<i64, Error> {
        if !self.eat('^') {
            return Ok(2);
        }
        if self.eat('(') {
            let p = self.signed_int()?;
            let e = if self.eat('/') {
                let d = self.signed_int()?;
                if d != 2 {
                    return Err(self.err("exponent denominator must be 2"));
                }
                p
            } else {
                2 * p
            };
            if !self.eat(')') {
                return Err(self.err("expected `)`"));
            }
            Ok(e)
        } else {
            Ok(2 * self.signed_int()?)
        }
    }

    fn factor(&mut self) -> Result<RSLaurent, Error> {
        self.skip_ws();
        let c = self.peek().ok_or_else(|| self.err("unexpected end"))?;
        if c == '(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(')') {
                return Err(self.err("expected `)`"));
            }
            return Ok(e);
        }
        if c == '[' {
            let start = self.pos;
            self.pos += self.src[start..].find(']').ok_or_else(|| self.err("unclosed `[`"))? + 1;
            if !self.eat('@') {
                return Err(self.err("expected `@`"));
            }
            self.skip_ws();
            self.digits().ok_or_else(|| self.err("expected a conductor"))?;
            return Ok(RSLaurent::constant(self.src[start..self.pos].parse::<CycScalar>()?));
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            self.digits();
            if self.peek() == Some('/') && self.src[self.pos + 1..].starts_with(|c: char| c.is_ascii_digit()) {
                self.pos += 1;
                self.digits();
            }
            return Ok(RSLaurent::constant(self.src[start..self.pos].parse::<CycScalar>()?));
        }
        self.pos += c.len_utf8();
        match c {
            'r' | 's' | 'k' => {
                let e = self.half_exponent()?;
                let e = i32::try_from(e).map_err(|_| self.err("exponent out of range"))?;
                Ok(RSLaurent::term(
                    match c {
                        'r' => Mono::new(e, 0, 0),
                        's' => Mono::new(0, e, 0),
                        _ => Mono::new(0, 0, e),
                    },
                    CycScalar::one(),
                ))
            }
            'z' => {
                let n: u32 = self
                    .digits()
                    .ok_or_else(|| self.err("expected `zN`"))?
                    .parse()
                    .map_err(|_| self.err("bad root order"))?;
                if n == 0 {
                    return Err(self.err("bad root order"));
                }
                let k = if self.eat('^') { self.signed_int()? } else { 1 };
                Ok(RSLaurent::constant(CycScalar::zeta(n, k)))
            }
            _ => Err(self.err(&format!("unexpected `{c}`"))),
        }
    }
}

impl FromStr for RSLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut r = Reader { src: s, pos: 0 };
        let out = r.expr()?;
        r.skip_ws();
        if r.pos != s.len() {
            return Err(r.err("trailing input"));
        }
        Ok(out)
    }
}

impl serde::Serialize for RSLaurent {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for RSLaurent {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &RSLaurent {
    type Output = RSLaurent;
    fn add(self, o: &RSLaurent) -> RSLaurent {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl Sub for &RSLaurent {
    type Output = RSLaurent;
    fn sub(self, o: &RSLaurent) -> RSLaurent {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.neg());
        }
        out
    }
}

impl Mul for &RSLaurent {
    type Output = RSLaurent;
    fn mul(self, o: &RSLaurent) -> RSLaurent {
        let mut out = RSLaurent::zero();
        out.add_product(self, o);
        out
    }
}

impl Neg for &RSLaurent {
    type Output = RSLaurent;
    fn neg(self) -> RSLaurent {
        RSLaurent {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for RSLaurent {
            type Output = RSLaurent;
            fn $f(self, o: RSLaurent) -> RSLaurent {
                (&self).$f(&o)
            }
        }
        impl $tr<&RSLaurent> for RSLaurent {
            type Output = RSLaurent;
            fn $f(self, o: &RSLaurent) -> RSLaurent {
                (&self).$f(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for RSLaurent {
    type Output = RSLaurent;
    fn neg(self) -> RSLaurent {
        -(&self)
    }
}

/// Two-parameter quantum number [n] = (r^n - s^n)/(r - s).
pub fn rs_quantum_number(n: i32) -> RSLaurent {
    let mut out = RSLaurent::zero();
    if n > 0 {
        for i in 0..n {
            out.add_term(Mono::new(2 * (n - 1 - i), 2 * i, 0), CycScalar::one());
        }
    } else if n < 0 {
        // (r^{-m} - s^{-m})/(r - s) = -(rs)^{-m}[m] for m = -n.
        let m = -n;
        for i in 0..m {
            out.add_term(Mono::new(2 * (m - 1 - i) - 2 * m, 2 * i - 2 * m, 0), CycScalar::int(-1));
        }
    }
    out
}

/// A Laurent polynomial in t = q^{1/2} (and w = κ^{1/2}), the image of r = q, s = q^{-1}.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QLaurent {
    terms: BTreeMap<(i32, i32), CycScalar>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn add_term(&mut self, e: (i32, i32), c: CycScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(CycScalar::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Terms keyed by (exponent of q^{1/2}, exponent of κ^{1/2}).
    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &CycScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at q^{1/2} = t when every q-exponent is even or t is given exactly.
    pub fn eval(&self, t: &CycScalar) -> Result<CycScalar, Error> {
        let mut acc = CycScalar::zero();
        for ((e, w), c) in &self.terms {
            if *w != 0 {
                return Err(Error::Parse("κ present".into()));
            }
            acc = acc.add(&c.mul(&t.pow(*e as i64)?));
        }
        Ok(acc)
    }

    /// Evaluates at q (not its root) when all q^{1/2}-exponents are even.
    pub fn eval_at_q(&self, q: &CycScalar) -> Result<CycScalar, Error> {
        let mut acc = CycScalar::zero();
        for ((e, w), c) in &self.terms {
            if *w != 0 {
                return Err(Error::Parse("κ present".into()));
            }
            if e % 2 != 0 {
                return Err(Error::MissingSquareRoot);
            }
            acc = acc.add(&c.mul(&q.pow((*e / 2) as i64)?));
        }
        Ok(acc)
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((e, w), c)| {
                if *w == 0 {
                    format!("{c} * q^({e}/2)")
                } else {
                    format!("{c} * q^({e}/2) * k^({w}/2)")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_numbers() {
        assert!(rs_quantum_number(0).is_zero());
        assert!(rs_quantum_number(1).is_one());
        assert_eq!(rs_quantum_number(2), RSLaurent::r() + RSLaurent::s());
        assert_eq!(rs_quantum_number(-1), -RSLaurent::rs(-1, -1));
    }

    #[test]
    fn division() {
        let rms = RSLaurent::r() - RSLaurent::s();
        let num = RSLaurent::rs(3, 0) - RSLaurent::rs(0, 3);
        assert_eq!(num.div_exact(&rms).unwrap(), rs_quantum_number(3));
        assert!(RSLaurent::r().div_exact(&rms).is_err());
        let neg = RSLaurent::rs(-2, 0) - RSLaurent::rs(0, -2);
        assert_eq!(neg.div_exact(&rms).unwrap(), rs_quantum_number(-2));
    }

    #[test]
    fn text_round_trip() {
        let f = RSLaurent::uv(1, -1) + RSLaurent::uv(-1, 1).scale(&CycScalar::zeta(3, 1))
            + RSLaurent::kappa_half(-1);
        let s = f.to_string();
        assert_eq!(s.parse::<RSLaurent>().unwrap(), f);
        assert_eq!("r + s".parse::<RSLaurent>().unwrap(), rs_quantum_number(2));
        assert_eq!("0".parse::<RSLaurent>().unwrap(), RSLaurent::zero());
    }

    #[test]
    fn specializations() {
        let d = RSLaurent::uv(1, -1) + RSLaurent::uv(-1, 1);
        assert_eq!(d.at_one().unwrap(), CycScalar::int(2));
        let q3 = rs_quantum_number(3).specialize_q();
        let mut want = QLaurent::zero();
        for e in [4, 0, -4] {
            want.add_term((e, 0), CycScalar::one());
        }
        assert_eq!(q3, want);
        assert!(d
            .specialize(&CycScalar::int(4), &CycScalar::one(), None)
            .is_err());
        assert!(d.specialize(&CycScalar::zero(), &CycScalar::one(), None).is_err());
    }
}
