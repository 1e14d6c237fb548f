//! Cyclotomic polynomials Φ_N over Q, computed by recursive division of
//! t^N − 1 by the Φ_d of proper divisors d | N, and cached per order.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n > 0);
    let mut divs = Vec::new();
    let mut i = 1u32;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler totient φ(n).
pub fn euler_phi(n: u32) -> u32 {
    assert!(n > 0);
    let mut m = n;
    let mut phi = n;
    let mut p = 2u32;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_u64(a, b) * b
    }
}

// --- dense polynomials over Q, ascending degree, used only internally ---

pub(crate) fn qpoly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder and quotient of `a` by monic `b`.
pub(crate) fn qpoly_divrem_monic(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    debug_assert!(b.last().is_some_and(|c| c.is_one()));
    let mut rem: Vec<Rational> = a.to_vec();
    qpoly_trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quo = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap().clone();
        quo[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let v = &c * bc;
            rem[k + i] -= v;
        }
        qpoly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    (quo, rem)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

type PhiCache = RwLock<HashMap<u32, Arc<Vec<Rational>>>>;

fn cache() -> &'static PhiCache {
    static CACHE: OnceLock<PhiCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Φ_N as a monic polynomial over Q in ascending degree, shared and cached.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<Rational>> {
    assert!(n > 0, "cyclotomic order must be positive");
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let result = compute_phi(n);
    let arc = Arc::new(result);
    cache().write().unwrap().insert(n, arc.clone());
    arc
}

fn compute_phi(n: u32) -> Vec<Rational> {
    if n == 1 {
        return vec![int(-1), int(1)];
    }
    // t^n - 1
    let mut num = vec![Rational::zero(); n as usize + 1];
    num[0] = int(-1);
    num[n as usize] = int(1);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        let (quo, rem) = qpoly_divrem_monic(&num, &phi_d);
        debug_assert!(rem.is_empty(), "Phi_{d} must divide t^{n} - 1 exactly");
        num = quo;
    }
    debug_assert_eq!(num.len() as u32 - 1, euler_phi(n));
    num
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_i64(p: &[Rational]) -> Vec<i64> {
        use num_traits::ToPrimitive;
        p.iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
    }

    #[test]
    fn small_phi() {
        assert_eq!(as_i64(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn degrees_match_totient() {
        for n in 1..=60 {
            assert_eq!(
                cyclotomic_polynomial(n).len() as u32 - 1,
                euler_phi(n),
                "order {n}"
            );
        }
    }

    #[test]
    fn totient_values() {
        let expected = [1u32, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u32 + 1), *e);
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7), vec![1, 7]);
        assert_eq!(divisors(1), vec![1]);
    }
}
