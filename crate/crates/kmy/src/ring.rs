//! Exact coefficient rings: rationals, Gaussian rationals and Laurent
//! polynomials in the loop parameter delta.
//!
//! Every computation in this crate is exact; there is no floating point
//! anywhere. A coefficient never changes ring implicitly: mixing kinds is
//! reported as [`KmyError::RingMismatch`].

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{KmyError, Result};

pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rational {
    BigRational::from_integer(BigInt::from(p))
}

/// An element a + b*i of Q(i).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn zero() -> Self {
        GaussianRational::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::from_rational(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussianRational { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn neg(&self) -> Self {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussianRational {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(GaussianRational { re: &self.re / &norm, im: -(&self.im / &norm) })
    }

    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = GaussianRational::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// A Laurent polynomial in delta with rational coefficients, stored as a
/// sparse exponent -> coefficient map with zero terms pruned.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, Rational::one())
    }

    /// The monomial c * delta^e.
    pub fn monomial(e: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// delta^e.
    pub fn delta_pow(e: i64) -> Self {
        LaurentPoly::monomial(e, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative power of delta occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    fn insert_add(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    /// Multiply by delta^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Normalise both to honest polynomials and long-divide.
        let a_shift = self.min_exp().unwrap();
        let b_shift = other.min_exp().unwrap();
        let mut num = self.to_dense_from(a_shift);
        let den = other.to_dense_from(b_shift);
        let dl = den.len() - 1;
        let lead = den[dl].clone();
        if num.len() < den.len() {
            return None;
        }
        let mut quo = vec![Rational::zero(); num.len() - den.len() + 1];
        for k in (0..quo.len()).rev() {
            let c = &num[k + dl] / &lead;
            if !c.is_zero() {
                for (j, dj) in den.iter().enumerate() {
                    let v = &num[k + j] - &c * dj;
                    num[k + j] = v;
                }
            }
            quo[k] = c;
        }
        if num.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = LaurentPoly::zero();
        for (k, c) in quo.into_iter().enumerate() {
            out.insert_add(a_shift - b_shift + k as i64, c);
        }
        Some(out)
    }

    fn to_dense_from(&self, base: i64) -> Vec<Rational> {
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - base + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - base) as usize] = c.clone();
        }
        v
    }

    /// Dense coefficient vector `[c_0, c_1, ...]`; requires a polynomial.
    pub fn dense_poly_coeffs(&self) -> Result<Vec<Rational>> {
        if !self.is_polynomial() {
            return Err(KmyError::EvalAtZeroWithNegativePower);
        }
        if self.is_zero() {
            return Ok(vec![Rational::zero()]);
        }
        Ok(self.to_dense_from(0))
    }

    pub fn eval_rational(&self, delta: &Rational) -> Result<Rational> {
        if delta.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(KmyError::EvalAtZeroWithNegativePower);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num::pow::pow(delta.clone(), *e as usize)
            } else {
                num::pow::pow(delta.clone(), (-e) as usize).recip()
            };
            acc += c * p;
        }
        Ok(acc)
    }

    pub fn eval_gaussian(&self, delta: &GaussianRational) -> Result<GaussianRational> {
        if delta.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(KmyError::EvalAtZeroWithNegativePower);
        }
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let p = delta.pow(*e).ok_or(KmyError::EvalAtZeroWithNegativePower)?;
            acc = acc.add(&p.mul(&GaussianRational::from_rational(c.clone())));
        }
        Ok(acc)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, e: i64, c: &Rational, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    match e {
        0 => write!(f, "{abs}"),
        _ => {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if e == 1 {
                write!(f, "d")
            } else {
                write!(f, "d^{e}")
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms by ascending exponent, `d` for delta.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            fmt_term(f, *e, c, i == 0)?;
        }
        Ok(())
    }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Rational::new(p.into(), q.into()))
        }
        None => s.trim().parse::<i64>().ok().map(|v| Rational::from_integer(v.into())),
    }
}

/// Parses a delta value: `p/q`, `a+bi`, `a-bi`, `bi`, `i` or `-i`. Exact
/// values only; floating point is rejected.
pub fn parse_delta(s: &str) -> Result<Coefficient> {
    let s = s.trim();
    let bad = || KmyError::ParseError(format!("cannot parse delta `{s}`"));
    if let Some(body) = s.strip_suffix('i') {
        let body = body.trim();
        // split off the real part at the last sign that is neither leading
        // nor right after a slash or another sign
        let split = body
            .char_indices()
            .rev()
            .find(|&(i, c)| {
                (c == '+' || c == '-')
                    && i > 0
                    && !matches!(body.as_bytes()[i - 1], b'/' | b'+' | b'-')
            })
            .map(|(i, _)| i);
        let (re_str, im_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let re = parse_rational(if re_str.is_empty() { "0" } else { re_str }).ok_or_else(bad)?;
        let im = match im_str {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other).ok_or_else(bad)?,
        };
        return Ok(Coefficient::Gaussian(GaussianRational::new(re, im)));
    }
    parse_rational(s).map(Coefficient::Rational).ok_or_else(bad)
}

/// Which coefficient ring a computation runs in. For the evaluated rings the
/// loop parameter delta is part of the ring choice, so elements of the same
/// algebra always agree on what a closed loop contributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    /// Q[delta, delta^-1] with delta symbolic.
    Laurent,
    /// Q with delta evaluated at a fixed rational.
    Rational { delta: Rational },
    /// Q(i) with delta evaluated at a fixed Gaussian rational.
    Gaussian { delta: GaussianRational },
}

impl RingSpec {
    pub fn zero(&self) -> Coefficient {
        match self {
            RingSpec::Laurent => Coefficient::Laurent(LaurentPoly::zero()),
            RingSpec::Rational { .. } => Coefficient::Rational(Rational::zero()),
            RingSpec::Gaussian { .. } => Coefficient::Gaussian(GaussianRational::zero()),
        }
    }

    pub fn one(&self) -> Coefficient {
        match self {
            RingSpec::Laurent => Coefficient::Laurent(LaurentPoly::one()),
            RingSpec::Rational { .. } => Coefficient::Rational(Rational::one()),
            RingSpec::Gaussian { .. } => Coefficient::Gaussian(GaussianRational::one()),
        }
    }

    pub fn from_rational(&self, c: Rational) -> Coefficient {
        match self {
            RingSpec::Laurent => Coefficient::Laurent(LaurentPoly::constant(c)),
            RingSpec::Rational { .. } => Coefficient::Rational(c),
            RingSpec::Gaussian { .. } => Coefficient::Gaussian(GaussianRational::from_rational(c)),
        }
    }

    /// delta^k in this ring. Negative k needs an invertible delta.
    pub fn delta_power(&self, k: i64) -> Result<Coefficient> {
        match self {
            RingSpec::Laurent => Ok(Coefficient::Laurent(LaurentPoly::delta_pow(k))),
            RingSpec::Rational { delta } => {
                if k >= 0 {
                    Ok(Coefficient::Rational(num::pow::pow(delta.clone(), k as usize)))
                } else if delta.is_zero() {
                    Err(KmyError::DeltaNotInvertible)
                } else {
                    Ok(Coefficient::Rational(num::pow::pow(delta.clone(), (-k) as usize).recip()))
                }
            }
            RingSpec::Gaussian { delta } => {
                delta.pow(k).map(Coefficient::Gaussian).ok_or(KmyError::DeltaNotInvertible)
            }
        }
    }

    pub fn matches(&self, c: &Coefficient) -> bool {
        matches!(
            (self, c),
            (RingSpec::Laurent, Coefficient::Laurent(_))
                | (RingSpec::Rational { .. }, Coefficient::Rational(_))
                | (RingSpec::Gaussian { .. }, Coefficient::Gaussian(_))
        )
    }
}

/// A value in one of the three coefficient rings. There is no implicit
/// coercion between kinds; see [`RingSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coefficient {
    Rational(Rational),
    Gaussian(GaussianRational),
    Laurent(LaurentPoly),
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(c) => c.is_zero(),
            Coefficient::Gaussian(c) => c.is_zero(),
            Coefficient::Laurent(c) => c.is_zero(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Coefficient> {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Ok(Coefficient::Rational(a + b)),
            (Coefficient::Gaussian(a), Coefficient::Gaussian(b)) => Ok(Coefficient::Gaussian(a.add(b))),
            (Coefficient::Laurent(a), Coefficient::Laurent(b)) => Ok(Coefficient::Laurent(a.add(b))),
            _ => Err(KmyError::RingMismatch),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Coefficient> {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Ok(Coefficient::Rational(a * b)),
            (Coefficient::Gaussian(a), Coefficient::Gaussian(b)) => Ok(Coefficient::Gaussian(a.mul(b))),
            (Coefficient::Laurent(a), Coefficient::Laurent(b)) => Ok(Coefficient::Laurent(a.mul(b))),
            _ => Err(KmyError::RingMismatch),
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(c) => Coefficient::Rational(-c.clone()),
            Coefficient::Gaussian(c) => Coefficient::Gaussian(c.neg()),
            Coefficient::Laurent(c) => Coefficient::Laurent(c.neg()),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(c) => write!(f, "{c}"),
            Coefficient::Gaussian(c) => write!(f, "{c}"),
            Coefficient::Laurent(c) => write!(f, "{c}"),
        }
    }
}
