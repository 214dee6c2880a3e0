//! Sturm-sequence real-root counting for rational polynomials.
//!
//! Used to certify that a Gram determinant has only real roots: the number
//! of distinct real roots reported by Sturm's theorem is compared with the
//! degree of the square-free part.

use num::{Signed, Zero};

use crate::ring::Rational;

/// Dense polynomial over Q, coefficients by ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().unwrap()
    }

    pub fn derivative(&self) -> RatPoly {
        if self.degree() == 0 {
            return RatPoly::new(vec![]);
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    fn rem(&self, div: &RatPoly) -> RatPoly {
        assert!(!div.is_zero());
        let mut r = self.coeffs.clone();
        let dd = div.degree();
        let lead = div.leading();
        while r.len() > dd && !(r.len() == 1 && r[0].is_zero()) {
            let k = r.len() - 1 - dd;
            let factor = r.last().unwrap() / lead;
            for (j, c) in div.coeffs.iter().enumerate() {
                let v = &r[k + j] - &factor * c;
                r[k + j] = v;
            }
            while r.len() > 1 && r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            if r.len() <= dd {
                break;
            }
        }
        RatPoly::new(r)
    }

    /// Monic gcd via Euclid.
    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().clone();
        RatPoly::new(a.coeffs.iter().map(|c| c / &lead).collect())
    }

    /// p / gcd(p, p'): same roots, all simple.
    pub fn square_free_part(&self) -> RatPoly {
        assert!(!self.is_zero());
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_exact(&g)
    }

    fn div_exact(&self, div: &RatPoly) -> RatPoly {
        let mut r = self.coeffs.clone();
        let dd = div.degree();
        let lead = div.leading();
        let mut q = vec![Rational::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let factor = &r[k + dd] / lead;
            if !factor.is_zero() {
                for (j, c) in div.coeffs.iter().enumerate() {
                    let v = &r[k + j] - &factor * c;
                    r[k + j] = v;
                }
            }
            q[k] = factor;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        RatPoly::new(q)
    }

    fn sign_at_inf(&self, positive: bool) -> i8 {
        let lead = self.leading();
        if lead.is_zero() {
            return 0;
        }
        let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
        if !positive && self.degree() % 2 == 1 {
            s = -s;
        }
        s
    }
}

fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let len = chain.len();
        if chain[len - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[len - 2].rem(&chain[len - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(RatPoly::new(r.coeffs.iter().map(|c| -c.clone()).collect()));
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last: Option<i8> = None;
    for s in signs {
        if s == 0 {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &RatPoly) -> usize {
    assert!(!p.is_zero(), "Sturm needs a nonzero polynomial");
    let sf = p.square_free_part();
    if sf.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let at_minus = variations(chain.iter().map(|q| q.sign_at_inf(false)));
    let at_plus = variations(chain.iter().map(|q| q.sign_at_inf(true)));
    at_minus - at_plus
}

/// True iff every complex root of `p` is real, certified by Sturm's theorem
/// on the square-free part.
pub fn sturm_all_roots_real(p: &RatPoly) -> bool {
    assert!(!p.is_zero(), "Sturm needs a nonzero polynomial");
    let sf = p.square_free_part();
    count_real_roots(&sf) == sf.degree()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_pair_detected() {
        // d^2 + 1
        assert!(!sturm_all_roots_real(&RatPoly::from_i64(&[1, 0, 1])));
    }

    #[test]
    fn real_roots_detected() {
        // d^2 - 3d + 2 = (d-1)(d-2)
        assert!(sturm_all_roots_real(&RatPoly::from_i64(&[2, -3, 1])));
        // d^4 - d^2 = d^2 (d-1)(d+1), repeated root at 0
        assert!(sturm_all_roots_real(&RatPoly::from_i64(&[0, 0, -1, 0, 1])));
        assert_eq!(count_real_roots(&RatPoly::from_i64(&[0, 0, -1, 0, 1])), 3);
        // (d^2+1)(d-1): one real of three
        assert!(!sturm_all_roots_real(&RatPoly::from_i64(&[-1, 1, -1, 1])));
        assert_eq!(count_real_roots(&RatPoly::from_i64(&[-1, 1, -1, 1])), 1);
    }

    #[test]
    fn constants_and_multiplicity() {
        assert!(sturm_all_roots_real(&RatPoly::from_i64(&[5])));
        // (d-1)^2
        assert!(sturm_all_roots_real(&RatPoly::from_i64(&[1, -2, 1])));
        assert_eq!(count_real_roots(&RatPoly::from_i64(&[1, -2, 1])), 1);
    }
}
