//! Exact elements of the cyclotomic field Q(ζ_N).
//!
//! A `CycNumber` is a vector of rational coordinates in the power basis
//! 1, z, …, z^{φ(N)−1} of Q[z]/Φ_N(z), kept fully reduced at all times so
//! that equality is coefficient comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::phi::{cyclotomic_polynomial, euler_phi, qpoly_divrem_monic, qpoly_trim};
use super::{CycError, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct CycNumber {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycNumber {
    /// Builds a value from raw power-basis coordinates; the slice may have any
    /// length and is reduced modulo Φ_N.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        let phi = euler_phi(order) as usize;
        let mut c = coeffs;
        qpoly_trim(&mut c);
        if c.len() > phi {
            let modulus = cyclotomic_polynomial(order);
            let (_, rem) = qpoly_divrem_monic(&c, &modulus);
            c = rem;
        }
        c.resize(phi, Rational::zero());
        CycNumber { order, coeffs: c }
    }

    pub fn zero(order: u32) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, value: Rational) -> Self {
        Self::from_coeffs(order, vec![value])
    }

    pub fn from_integer(order: u32, value: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(BigInt::from(value)))
    }

    /// z^e in Q(ζ_N), with e taken modulo N.
    pub fn zeta_pow(order: u32, exponent: i64) -> Self {
        let e = exponent.rem_euclid(order as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Self::from_coeffs(order, c)
    }

    /// The generator z = ζ_N itself.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(q) iff the value lies in Q (all higher coordinates vanish).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Some(k) iff the value is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), CycError> {
        if self.order != other.order {
            Err(CycError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNumber {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNumber {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycError> {
        self.check_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.order));
        }
        let mut prod = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Ok(Self::from_coeffs(self.order, prod))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CycError> {
        self.check_order(other)?;
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let modulus = cyclotomic_polynomial(self.order);
        // Extended Euclid over Q[t]: maintain r, and u with u * self ≡ r (mod Φ).
        let mut r0: Vec<Rational> = modulus.as_ref().clone();
        let mut r1: Vec<Rational> = self.coeffs.clone();
        qpoly_trim(&mut r1);
        let mut u0: Vec<Rational> = Vec::new();
        let mut u1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            // Make divisor monic for the shared division helper.
            let lead = r1.last().unwrap().clone();
            let monic: Vec<Rational> = r1.iter().map(|c| c / &lead).collect();
            let (quo_monic, rem) = qpoly_divrem_monic(&r0, &monic);
            // r0 = (quo_monic / lead) * r1 + rem
            let quo: Vec<Rational> = quo_monic.iter().map(|c| c / &lead).collect();
            let u_next = poly_sub(&u0, &poly_mul(&quo, &u1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = u_next;
        }
        // r0 = gcd(Φ, self) is a nonzero constant because Φ_N is irreducible.
        debug_assert_eq!(r0.len(), 1, "cyclotomic polynomial must be irreducible");
        let g = r0[0].clone();
        let inv_coeffs: Vec<Rational> = u0.iter().map(|c| c / &g).collect();
        Ok(Self::from_coeffs(self.order, inv_coeffs))
    }

    pub fn neg(&self) -> Self {
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self, CycError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Image under z_N ↦ z_{N'}^{N'/N}; requires N | N'.
    pub fn coerce(&self, new_order: u32) -> Result<Self, CycError> {
        if new_order % self.order != 0 {
            return Err(CycError::NotADivisor {
                value: self.order,
                target: new_order,
            });
        }
        if new_order == self.order {
            return Ok(self.clone());
        }
        let step = (new_order / self.order) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[k * step] = c.clone();
            }
        }
        Ok(Self::from_coeffs(new_order, raw))
    }

    /// Expresses the value in the subfield Q(ζ_M) when possible (M | N).
    /// Returns None when the value does not lie in that subfield.
    pub fn demote(&self, new_order: u32) -> Option<Self> {
        if self.order % new_order != 0 {
            return None;
        }
        if new_order == self.order {
            return Some(self.clone());
        }
        let phi_small = euler_phi(new_order) as usize;
        let phi_big = euler_phi(self.order) as usize;
        // Columns: images of the small power basis in the big field.
        let cols: Vec<CycNumber> = (0..phi_small)
            .map(|k| {
                CycNumber::zeta_pow(new_order, k as i64)
                    .coerce(self.order)
                    .expect("new_order divides self.order")
            })
            .collect();
        // Solve the φ(N) × φ(M) rational system by elimination.
        let mut aug: Vec<Vec<Rational>> = (0..phi_big)
            .map(|row| {
                let mut r: Vec<Rational> = cols.iter().map(|c| c.coeffs[row].clone()).collect();
                r.push(self.coeffs[row].clone());
                r
            })
            .collect();
        let mut pivot_of_col = vec![usize::MAX; phi_small];
        let mut rank = 0usize;
        for col in 0..phi_small {
            let Some(p) = (rank..phi_big).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(rank, p);
            let inv = aug[rank][col].clone().recip();
            for v in aug[rank].iter_mut() {
                *v *= &inv;
            }
            for r in 0..phi_big {
                if r != rank && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in 0..=phi_small {
                        let v = &aug[rank][c] * &f;
                        aug[r][c] -= v;
                    }
                }
            }
            pivot_of_col[col] = rank;
            rank += 1;
        }
        // Inconsistent rows mean the value is outside the subfield.
        for row in rank..phi_big {
            if !aug[row][phi_small].is_zero() {
                return None;
            }
        }
        let mut coeffs = vec![Rational::zero(); phi_small];
        for (col, &pr) in pivot_of_col.iter().enumerate() {
            if pr != usize::MAX {
                coeffs[col] = aug[pr][phi_small].clone();
            }
        }
        let candidate = CycNumber::from_coeffs(new_order, coeffs);
        debug_assert_eq!(&candidate.coerce(self.order).unwrap(), self);
        Some(candidate)
    }

    /// A crude size measure used when picking pivots: total bit length of all
    /// numerators and denominators.
    pub(crate) fn bit_size(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits() + c.denom().bits())
            .sum()
    }

    /// True when every coordinate is a rational integer.
    pub(crate) fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Least common multiple of all coordinate denominators.
    pub(crate) fn denom_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            let d = c.denom();
            let g = num_integer::Integer::gcd(&l, d);
            l = &l / g * d;
        }
        l.abs()
    }

    /// Multiplies by a plain integer.
    pub fn scale_by_int(&self, k: i64) -> Self {
        self.scale_rational(&Rational::from_integer(k.into()))
    }

    pub(crate) fn scale_rational(&self, s: &Rational) -> Self {
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qpoly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    qpoly_trim(&mut out);
    out
}

macro_rules! binop_impl {
    ($trait:ident, $method:ident, $try_method:ident) => {
        impl std::ops::$trait<&CycNumber> for &CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &CycNumber) -> CycNumber {
                self.$try_method(rhs)
                    .expect("cyclotomic operands must share one order")
            }
        }
        impl std::ops::$trait<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

binop_impl!(Add, add, try_add);
binop_impl!(Sub, sub, try_sub);
binop_impl!(Mul, mul, try_mul);

impl std::ops::Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber::neg(self)
    }
}

impl std::ops::Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber::neg(&self)
    }
}

impl std::fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycNumber[N={}]({})", self.order, self)
    }
}
