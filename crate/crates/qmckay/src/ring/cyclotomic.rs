//! Elements of the cyclotomic field Q(ζ_N) in the power basis modulo Φ_N.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n > 0, "conductor must be positive");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_poly(d);
            num = poly_div_exact(&num, &den);
        }
    }
    let p = Arc::new(num);
    cyclo_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    q
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An element of Q(ζ_N).
#[derive(Clone, Debug)]
pub struct CycScalar {
    n: u32,
    c: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(q: BigRational) -> Self {
        CycScalar { n: 1, c: vec![q] }
    }

    pub fn int(k: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn frac(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// ζ_n^k.
    pub fn zeta(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigRational::zero(); e.max(1) + 1];
        raw[e] = BigRational::one();
        Self::from_raw(n, raw)
    }

    /// The fixed square root of -1, ζ_4.
    pub fn i() -> Self {
        Self::zeta(4, 1)
    }

    /// Builds from an arbitrary-length coefficient vector in powers of ζ_n.
    pub fn from_raw(n: u32, mut raw: Vec<BigRational>) -> Self {
        reduce_mod(n, &mut raw);
        let mut s = CycScalar { n, c: raw };
        s.normalize();
        s
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    fn normalize(&mut self) {
        if self.n != 1 && self.c[1..].iter().all(|q| q.is_zero()) {
            self.n = 1;
            self.c.truncate(1);
        }
    }

    /// Re-expresses the value in Q(ζ_m) where n | m.
    pub fn lift(&self, m: u32) -> Vec<BigRational> {
        if m == self.n {
            return self.c.clone();
        }
        debug_assert!(m.is_multiple_of(self.n));
        let step = (m / self.n) as usize;
        let mut raw = vec![BigRational::zero(); step * (self.c.len() - 1) + 1];
        for (i, q) in self.c.iter().enumerate() {
            raw[i * step] = q.clone();
        }
        reduce_mod(m, &mut raw);
        raw
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.c[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0].is_one()
    }

    /// The value as a rational number, if it lies in Q.
    pub fn to_rational(&self) -> Option<&BigRational> {
        if self.n == 1 {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// The non-negative rational square root of a non-negative rational square, if any.
    pub fn rational_sqrt(&self) -> Option<CycScalar> {
        let q = self.to_rational()?;
        if q.is_negative() {
            return None;
        }
        let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
        if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
            Some(Self::rational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        let q = self.to_rational()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.n == 1 && o.n == 1 {
            return Self::rational(&self.c[0] + &o.c[0]);
        }
        let m = lcm(self.n, o.n);
        let a = self.lift(m);
        let b = o.lift(m);
        let raw: Vec<_> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
        let mut s = CycScalar { n: m, c: raw };
        s.normalize();
        s
    }

    pub fn neg(&self) -> Self {
        CycScalar {
            n: self.n,
            c: self.c.iter().map(|q| -q).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.n == 1 {
            return o.scale(&self.c[0]);
        }
        if o.n == 1 {
            return self.scale(&o.c[0]);
        }
        let m = lcm(self.n, o.n);
        let a = self.lift(m);
        let b = o.lift(m);
        let mut raw = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Self::from_raw(m, raw)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycScalar {
            n: self.n,
            c: self.c.iter().map(|x| x * q).collect(),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Self::rational(self.c[0].recip()));
        }
        // Solve (multiplication-by-self matrix) * y = e_0.
        let d = self.c.len();
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        for j in 0..d {
            let mut raw = vec![BigRational::zero(); d + j];
            for (i, q) in self.c.iter().enumerate() {
                raw[i + j] = q.clone();
            }
            reduce_mod(self.n, &mut raw);
            cols.push(raw);
        }
        let mut aug: Vec<Vec<BigRational>> = (0..d)
            .map(|row| {
                let mut r: Vec<BigRational> = (0..d).map(|col| cols[col][row].clone()).collect();
                r.push(if row == 0 { BigRational::one() } else { BigRational::zero() });
                r
            })
            .collect();
        let y = solve_in_place(&mut aug).ok_or(Error::DivisionByZero)?;
        let mut s = CycScalar { n: self.n, c: y };
        s.normalize();
        Ok(s)
    }

    pub fn div(&self, o: &Self) -> Result<Self, Error> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as usize;
        let mut raw = vec![BigRational::zero(); n];
        for (i, q) in self.c.iter().enumerate() {
            raw[(n - i) % n] += q;
        }
        Self::from_raw(self.n, raw)
    }

    /// Floating-point value at ζ_N = exp(2πi/N).
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.n as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, q) in self.c.iter().enumerate() {
            let v = q.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }
}

fn reduce_mod(n: u32, raw: &mut Vec<BigRational>) {
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    if raw.len() > d {
        for deg in (d..raw.len()).rev() {
            let c = std::mem::replace(&mut raw[deg], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, &p) in phi.iter().enumerate().take(d) {
                if p != 0 {
                    raw[deg - d + j] -= &c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
    }
    raw.resize(d, BigRational::zero());
}

/// Gaussian elimination on an augmented square system; returns the solution column.
pub(crate) fn solve_in_place(aug: &mut [Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let d = aug.len();
    for col in 0..d {
        let piv = (col..d).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, piv);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..d {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (x, p) in aug[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(aug.iter().map(|row| row[d].clone()).collect())
}

impl PartialEq for CycScalar {
    fn eq(&self, o: &Self) -> bool {
        if self.n == o.n {
            return self.c == o.c;
        }
        let m = lcm(self.n, o.n);
        self.lift(m) == o.lift(m)
    }
}

impl Eq for CycScalar {}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(fmt_rational).collect();
        write!(f, "[{}]@{}", parts.join(","), self.n)
    }
}

impl CycScalar {
    /// Human-readable rendering such as `1/2 - z3^2`.
    pub fn pretty(&self) -> String {
        if self.n == 1 {
            return fmt_rational(&self.c[0]);
        }
        let mut out = String::new();
        for (i, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            let sym = match i {
                0 => String::new(),
                1 => format!("z{}", self.n),
                _ => format!("z{}^{}", self.n, i),
            };
            let body = if i == 0 {
                fmt_rational(&a)
            } else if a.is_one() {
                sym
            } else {
                format!("{}*{}", fmt_rational(&a), sym)
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

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(p, q))
    } else {
        Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        ))
    }
}

impl FromStr for CycScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad cyclotomic scalar `{s}`"));
        if !s.starts_with('[') {
            return parse_rational(s).map(Self::rational);
        }
        let close = s.find(']').ok_or_else(bad)?;
        let body = &s[1..close];
        let rest = s[close + 1..].trim();
        let n: u32 = rest
            .strip_prefix('@')
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        let raw = body
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        if raw.is_empty() {
            return Err(bad());
        }
        Ok(Self::from_raw(n, raw))
    }
}

impl From<i64> for CycScalar {
    fn from(k: i64) -> Self {
        Self::int(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(60), 16);
    }

    #[test]
    fn roots_of_unity() {
        let w = CycScalar::zeta(3, 1);
        assert!(w.pow(3).unwrap().is_one());
        let sum = CycScalar::one().add(&w).add(&w.mul(&w));
        assert!(sum.is_zero());
        assert_eq!(CycScalar::i().mul(&CycScalar::i()), CycScalar::int(-1));
        assert_eq!(CycScalar::zeta(12, 4), CycScalar::zeta(3, 1));
    }

    #[test]
    fn inverse_and_display() {
        let x = CycScalar::int(2).add(&CycScalar::zeta(5, 1));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
        let s = x.to_string();
        assert_eq!(s.parse::<CycScalar>().unwrap(), x);
        assert_eq!("[1/2]@1".parse::<CycScalar>().unwrap(), CycScalar::frac(1, 2));
    }

    #[test]
    fn sqrt_two_in_q_zeta8() {
        let r2 = CycScalar::zeta(8, 1).add(&CycScalar::zeta(8, -1));
        assert_eq!(r2.mul(&r2), CycScalar::int(2));
    }
}
