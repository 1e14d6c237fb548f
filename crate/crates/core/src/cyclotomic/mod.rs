//! Exact arithmetic in cyclotomic fields Q(ζ_N): canonical field elements,
//! order coercion, root-of-unity enumeration, and a numeric-locate /
//! exact-verify bridge for polynomial roots.

mod embed;
mod grammar;
mod number;
mod phi;
mod poly;
mod roots;

pub use grammar::parse_scalar;
pub use number::CycNumber;
pub use phi::{cyclotomic_polynomial, divisors, euler_phi, gcd_u64, lcm_u64};
pub use poly::CycPoly;
pub use roots::{locate_exact_root, roots_of_unity};

/// Exact rational scalars; arbitrary-precision, always fully reduced.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CycError {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{value} does not divide {target}")]
    NotADivisor { value: u32, target: u32 },
    #[error("scalar parse error: {0}")]
    Parse(String),
}

/// Shorthand for an exact rational from an integer pair.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
