//! Dense univariate polynomials with CycNumber coefficients.

use super::{CycError, CycNumber};

#[derive(Clone, Debug, PartialEq)]
pub struct CycPoly {
    order: u32,
    /// Ascending degree, no trailing zeros; empty means the zero polynomial.
    coeffs: Vec<CycNumber>,
}

impl CycPoly {
    pub fn new(order: u32, coeffs: Vec<CycNumber>) -> Result<Self, CycError> {
        for c in &coeffs {
            if c.order() != order {
                return Err(CycError::OrderMismatch {
                    left: order,
                    right: c.order(),
                });
            }
        }
        let mut p = CycPoly { order, coeffs };
        p.trim();
        Ok(p)
    }

    pub fn zero(order: u32) -> Self {
        CycPoly {
            order,
            coeffs: Vec::new(),
        }
    }

    /// Convenience constructor from i64 coefficients, ascending degree.
    pub fn from_integers(order: u32, coeffs: &[i64]) -> Self {
        let c = coeffs
            .iter()
            .map(|&v| CycNumber::from_integer(order, v))
            .collect();
        CycPoly::new(order, c).unwrap()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[CycNumber] {
        &self.coeffs
    }

    pub fn eval(&self, x: &CycNumber) -> CycNumber {
        let mut acc = CycNumber::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.order);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale_rational(&super::Rational::from_integer((k as i64).into())))
            .collect();
        CycPoly::new(self.order, coeffs).unwrap()
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        let mut out = vec![CycNumber::zero(self.order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        CycPoly {
            order: self.order,
            coeffs: out,
        }
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = divisor.coeffs.last().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![
            CycNumber::zero(self.order);
            self.coeffs.len().saturating_sub(dd).max(1)
        ];
        while !rem.is_zero() && rem.coeffs.len() - 1 >= dd {
            let k = rem.coeffs.len() - 1 - dd;
            let factor = rem.coeffs.last().unwrap() * &lead_inv;
            quo[k] = factor.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let s = &rem.coeffs[k + i] - &(&factor * dc);
                rem.coeffs[k + i] = s;
            }
            rem.trim();
        }
        let q = CycPoly::new(self.order, quo).unwrap();
        (q, rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead_inv = a.coeffs.last().unwrap().inv().unwrap();
        let coeffs = a.coeffs.iter().map(|c| c * &lead_inv).collect();
        CycPoly {
            order: a.order,
            coeffs,
        }
    }

    /// p / gcd(p, p′): same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q
    }

    /// Verifies the product against schoolbook multiplication; test support.
    pub fn mul_check(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_exact() {
        // (t − 1)(t − ζ₄) over Q(ζ₄)
        let z = CycNumber::zeta(4);
        let one = CycNumber::one(4);
        let a = CycPoly::new(4, vec![one.neg(), one.clone()]).unwrap();
        let b = CycPoly::new(4, vec![z.neg(), one.clone()]).unwrap();
        let p = a.mul_check(&b);
        let (q, r) = p.divrem(&a);
        assert!(r.is_zero());
        assert_eq!(q, b);
    }

    #[test]
    fn squarefree_kills_multiplicity() {
        // (t − 1)² t
        let p = CycPoly::from_integers(4, &[0, 1, -2, 1]);
        let sf = p.squarefree_part();
        assert_eq!(sf.degree(), Some(2));
        assert!(sf.eval(&CycNumber::one(4)).is_zero());
        assert!(sf.eval(&CycNumber::zero(4)).is_zero());
    }

    #[test]
    fn eval_horner() {
        let p = CycPoly::from_integers(3, &[1, 0, 1]); // t² + 1
        let z = CycNumber::zeta(3);
        let expect = &z.pow(2).unwrap() + &CycNumber::one(3);
        assert_eq!(p.eval(&z), expect);
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let a = CycPoly::from_integers(5, &[-1, 1]); // t − 1
        let b = CycPoly::from_integers(5, &[1, 1]); // t + 1
        assert_eq!(a.gcd(&b).degree(), Some(0));
    }
}
