//! Root-of-unity enumeration and the numeric-locate / exact-verify bridge.

use num_bigint::BigInt;
use num_traits::Zero;

use super::embed::{durand_kerner, reconstruct_rational, Cx, FixCtx};
use super::phi::euler_phi;
use super::poly::CycPoly;
use super::{CycError, CycNumber};

/// All m distinct m-th roots of unity in Q(ζ_N), as powers of z^{N/m} in
/// exponent order. Requires m | N.
pub fn roots_of_unity(order: u32, m: u32) -> Result<Vec<CycNumber>, CycError> {
    if m == 0 || order % m != 0 {
        return Err(CycError::NotADivisor {
            value: m,
            target: order,
        });
    }
    let step = (order / m) as i64;
    Ok((0..m as i64)
        .map(|k| CycNumber::zeta_pow(order, step * k))
        .collect())
}

/// Roots of `p` that lie in Q(ζ_N), found by high-precision complex
/// embedding, reconstructed as small-denominator candidates, and then
/// verified by exact substitution. Sound but not complete: every returned
/// value satisfies p exactly, and candidates are drawn from rational
/// multiples of in-field roots of unity (plus full coordinate solves for
/// fields of degree ≤ 2), which covers every spectrum this crate produces.
pub fn locate_exact_root(p: &CycPoly, precision_bits: u32) -> Vec<CycNumber> {
    assert!(!p.is_zero(), "locate_exact_root requires a nonzero polynomial");
    let order = p.order();
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let prec = precision_bits.max(64) + 64;
    let ctx = FixCtx::new(prec);
    let denom_bound = BigInt::from(u64::MAX);

    let sf = p.squarefree_part();
    let numeric = {
        let coeffs: Vec<Cx> = sf.coeffs().iter().map(|c| embed(&ctx, c)).collect();
        durand_kerner(&ctx, &coeffs, 400)
    };

    let phi = euler_phi(order) as usize;
    let zeta = ctx.unit_root(1, order);
    // Powers of the embedded generator, 0..order.
    let mut zeta_pows = Vec::with_capacity(order as usize);
    let mut acc = ctx.cx(ctx.from_i64(1), ctx.zero());
    for _ in 0..order {
        zeta_pows.push(acc.clone());
        acc = ctx.cx_mul(&acc, &zeta);
    }

    let mut found: Vec<CycNumber> = Vec::new();
    let push_checked = |cand: CycNumber, found: &mut Vec<CycNumber>| {
        if p.eval(&cand).is_zero() && !found.contains(&cand) {
            found.push(cand);
        }
    };

    for root in &numeric {
        // Candidate family 1: q · ζ^j with rational q.
        for j in 0..order as usize {
            // w = root / ζ^j  (multiply by the conjugate power).
            let conj = &zeta_pows[(order as usize - j) % order as usize];
            let w = ctx.cx_mul(root, conj);
            if !ctx.is_small(&w.im, prec / 2) {
                continue;
            }
            if let Some(q) = reconstruct_rational(&ctx, &w.re, &denom_bound) {
                let cand = CycNumber::from_rational(order, q)
                    .try_mul(&CycNumber::zeta_pow(order, j as i64))
                    .expect("same order");
                push_checked(cand, &mut found);
            }
        }
        // Candidate family 2: full coordinate solve when the field has
        // degree ≤ 2 over Q.
        if phi == 1 {
            if ctx.is_small(&root.im, prec / 2) {
                if let Some(q) = reconstruct_rational(&ctx, &root.re, &denom_bound) {
                    push_checked(CycNumber::from_rational(order, q), &mut found);
                }
            }
        } else if phi == 2 {
            // root = c0 + c1·ζ with ζ non-real: c1 = Im(root)/Im(ζ).
            if !zeta.im.m.is_zero() {
                let c1f = ctx.div(&root.im, &zeta.im);
                let c0f = ctx.sub(&root.re, &ctx.mul(&c1f, &zeta.re));
                let c1 = reconstruct_rational(&ctx, &c1f, &denom_bound);
                let c0 = reconstruct_rational(&ctx, &c0f, &denom_bound);
                if let (Some(c0), Some(c1)) = (c0, c1) {
                    let cand = CycNumber::from_coeffs(order, vec![c0, c1]);
                    push_checked(cand, &mut found);
                }
            }
        }
    }
    // Zero is easy to miss numerically; test it directly.
    push_checked(CycNumber::zero(order), &mut found);

    found.sort_by(|a, b| coeff_key(a).cmp(&coeff_key(b)));
    found
}

fn coeff_key(v: &CycNumber) -> Vec<(BigInt, BigInt)> {
    v.coeffs()
        .iter()
        .map(|c| (c.numer().clone(), c.denom().clone()))
        .collect()
}

fn embed(ctx: &FixCtx, v: &CycNumber) -> Cx {
    let order = v.order();
    let zeta = ctx.unit_root(1, order);
    let mut acc = ctx.cx_zero();
    for c in v.coeffs().iter().rev() {
        acc = ctx.cx_mul(&acc, &zeta);
        if !c.is_zero() {
            let t = ctx.cx(ctx.from_rational(c), ctx.zero());
            acc = ctx.cx_add(&acc, &t);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Rational;

    fn sorted_set(v: Vec<CycNumber>) -> Vec<String> {
        let mut s: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        s.sort();
        s
    }

    #[test]
    fn roots_of_unity_examples() {
        let r = roots_of_unity(6, 2).unwrap();
        assert_eq!(r, vec![CycNumber::one(6), CycNumber::from_integer(6, -1)]);
        let r = roots_of_unity(6, 3).unwrap();
        assert_eq!(
            r,
            vec![
                CycNumber::one(6),
                CycNumber::zeta_pow(6, 2),
                CycNumber::zeta_pow(6, 4)
            ]
        );
        let r = roots_of_unity(12, 4).unwrap();
        assert_eq!(
            r,
            vec![
                CycNumber::one(12),
                CycNumber::zeta_pow(12, 3),
                CycNumber::from_integer(12, -1),
                CycNumber::zeta_pow(12, 9)
            ]
        );
    }

    #[test]
    fn roots_of_unity_properties() {
        for (n, m) in [(12u32, 6u32), (10, 5), (9, 3), (8, 8)] {
            let roots = roots_of_unity(n, m).unwrap();
            assert_eq!(roots.len(), m as usize);
            for r in &roots {
                assert!(r.pow(m as i64).unwrap().is_one());
            }
            for i in 0..roots.len() {
                for j in 0..i {
                    assert_ne!(roots[i], roots[j]);
                }
            }
        }
    }

    #[test]
    fn roots_of_unity_requires_divisor() {
        assert!(matches!(
            roots_of_unity(6, 4),
            Err(CycError::NotADivisor { .. })
        ));
    }

    #[test]
    fn locate_t2_minus_1_over_q_i() {
        let p = CycPoly::from_integers(4, &[-1, 0, 1]);
        let roots = locate_exact_root(&p, 256);
        assert_eq!(
            sorted_set(roots),
            sorted_set(vec![CycNumber::one(4), CycNumber::from_integer(4, -1)])
        );
    }

    #[test]
    fn locate_t2_plus_1_over_q_i() {
        let p = CycPoly::from_integers(4, &[1, 0, 1]);
        let roots = locate_exact_root(&p, 256);
        assert_eq!(
            sorted_set(roots),
            sorted_set(vec![CycNumber::zeta(4), CycNumber::zeta(4).neg()])
        );
    }

    #[test]
    fn locate_t2_minus_2_over_q_zeta3() {
        let p = CycPoly::from_integers(3, &[-2, 0, 1]);
        assert!(locate_exact_root(&p, 256).is_empty());
    }

    #[test]
    fn locate_with_rational_scale_and_zero() {
        // t·(t − 3/2·ζ₆)
        let z = CycNumber::zeta(6);
        let scale = CycNumber::from_rational(6, Rational::new(3.into(), 2.into()));
        let r = z.try_mul(&scale).unwrap();
        let p = CycPoly::new(6, vec![CycNumber::zero(6), r.neg(), CycNumber::one(6)]).unwrap();
        let roots = locate_exact_root(&p, 256);
        assert_eq!(sorted_set(roots), sorted_set(vec![CycNumber::zero(6), r]));
    }

    #[test]
    fn every_output_is_verified() {
        // Repeated root: squarefree part handles multiplicity.
        let one = CycNumber::one(8);
        let p = CycPoly::new(
            8,
            vec![one.clone(), CycNumber::from_integer(8, 2), one.clone()],
        )
        .unwrap(); // (t+1)²
        let roots = locate_exact_root(&p, 256);
        assert_eq!(roots.len(), 1);
        for r in &roots {
            assert!(p.eval(r).is_zero());
        }
    }
}
