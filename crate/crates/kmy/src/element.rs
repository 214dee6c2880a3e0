//! Formal linear combinations of diagrams over one of the exact rings.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::Diagram;
use crate::error::{KmyError, Result};
use crate::ring::{Coefficient, GaussianRational, Rational, RingSpec};

/// A finite sum of diagrams with coefficients, all on the same strand count
/// and in the same ring. Zero coefficients are pruned; term order follows
/// the canonical diagram order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    ring: RingSpec,
    terms: BTreeMap<Diagram, Coefficient>,
}

impl AlgebraElement {
    pub fn zero(n: usize, ring: RingSpec) -> Self {
        AlgebraElement { n, ring, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: Diagram, ring: RingSpec) -> Self {
        let one = ring.one();
        Self::from_term(d, one, ring).expect("ring one always matches")
    }

    pub fn from_term(d: Diagram, c: Coefficient, ring: RingSpec) -> Result<Self> {
        if !ring.matches(&c) {
            return Err(KmyError::RingMismatch);
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(d.clone(), c);
        }
        Ok(AlgebraElement { n: d.n(), ring, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Coefficient)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, d: &Diagram) -> Coefficient {
        self.terms.get(d).cloned().unwrap_or_else(|| self.ring.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(KmyError::SizeMismatch { left: self.n, right: other.n });
        }
        if self.ring != other.ring {
            return Err(KmyError::RingMismatch);
        }
        Ok(())
    }

    fn insert_add(&mut self, d: Diagram, c: Coefficient) -> Result<()> {
        match self.terms.remove(&d) {
            None => {
                if !c.is_zero() {
                    self.terms.insert(d, c);
                }
            }
            Some(prev) => {
                let sum = prev.try_add(&c)?;
                if !sum.is_zero() {
                    self.terms.insert(d, sum);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.insert_add(d.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scalar_mul(&self, c: &Coefficient) -> Result<Self> {
        if !self.ring.matches(c) {
            return Err(KmyError::RingMismatch);
        }
        let mut out = AlgebraElement::zero(self.n, self.ring.clone());
        for (d, k) in &self.terms {
            out.insert_add(d.clone(), k.try_mul(c)?)?;
        }
        Ok(out)
    }

    /// Bilinear extension of diagram stacking, with delta^loops folded into
    /// the coefficients.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = AlgebraElement::zero(self.n, self.ring.clone());
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (loops, prod) = d1.multiply(d2)?;
                let c = c1.try_mul(c2)?.try_mul(&self.ring.delta_power(loops as i64)?)?;
                out.insert_add(prod, c)?;
            }
        }
        Ok(out)
    }

    /// Specialises a symbolic (Laurent) element at a concrete delta.
    pub fn evaluate(&self, delta0: &Coefficient) -> Result<Self> {
        if self.ring != RingSpec::Laurent {
            return Err(KmyError::RingMismatch);
        }
        let target = match delta0 {
            Coefficient::Rational(d) => RingSpec::Rational { delta: d.clone() },
            Coefficient::Gaussian(d) => RingSpec::Gaussian { delta: d.clone() },
            Coefficient::Laurent(_) => return Err(KmyError::RingMismatch),
        };
        let mut out = AlgebraElement::zero(self.n, target.clone());
        for (d, c) in &self.terms {
            let Coefficient::Laurent(p) = c else { unreachable!() };
            let value = match &target {
                RingSpec::Rational { delta } => Coefficient::Rational(p.eval_rational(delta)?),
                RingSpec::Gaussian { delta } => Coefficient::Gaussian(p.eval_gaussian(delta)?),
                RingSpec::Laurent => unreachable!(),
            };
            out.insert_add(d.clone(), value)?;
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(d, c)| format!("({c})*[{d}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// delta0 as a rational coefficient.
pub fn delta_rational(p: i64, q: i64) -> Coefficient {
    Coefficient::Rational(Rational::new(p.into(), q.into()))
}

/// delta0 as a Gaussian rational a + b i.
pub fn delta_gaussian(a: Rational, b: Rational) -> Coefficient {
    Coefficient::Gaussian(GaussianRational::new(a, b))
}
