//! Fixed-point complex arithmetic for the numeric candidate stage of root
//! location. Values are BigInt mantissas at a shared binary scale; every
//! product is truncated back to the working precision, so precision loss is
//! bounded and controlled. Nothing here is trusted: exact verification
//! happens downstream.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Rational;

#[derive(Clone, Debug)]
pub(crate) struct Fix {
    pub m: BigInt,
}

pub(crate) struct FixCtx {
    pub prec: u32,
}

impl FixCtx {
    pub fn new(prec: u32) -> Self {
        FixCtx { prec }
    }

    pub fn zero(&self) -> Fix {
        Fix { m: BigInt::zero() }
    }

    pub fn from_i64(&self, v: i64) -> Fix {
        Fix {
            m: BigInt::from(v) << self.prec,
        }
    }

    pub fn from_rational(&self, q: &Rational) -> Fix {
        Fix {
            m: (q.numer() << self.prec) / q.denom(),
        }
    }

    pub fn to_rational(&self, x: &Fix) -> Rational {
        Rational::new(x.m.clone(), BigInt::from(1) << self.prec)
    }

    pub fn add(&self, a: &Fix, b: &Fix) -> Fix {
        Fix { m: &a.m + &b.m }
    }

    pub fn sub(&self, a: &Fix, b: &Fix) -> Fix {
        Fix { m: &a.m - &b.m }
    }

    pub fn neg(&self, a: &Fix) -> Fix {
        Fix { m: -&a.m }
    }

    pub fn mul(&self, a: &Fix, b: &Fix) -> Fix {
        Fix {
            m: (&a.m * &b.m) >> self.prec,
        }
    }

    pub fn div(&self, a: &Fix, b: &Fix) -> Fix {
        assert!(!b.m.is_zero(), "fixed-point division by zero");
        Fix {
            m: (&a.m << self.prec) / &b.m,
        }
    }

    pub fn div_u32(&self, a: &Fix, d: u32) -> Fix {
        Fix { m: &a.m / d }
    }

    /// |a| < 2^(−bits) as a magnitude test.
    pub fn is_small(&self, a: &Fix, bits: u32) -> bool {
        a.m.abs() < (BigInt::from(1) << (self.prec.saturating_sub(bits)))
    }

    /// π by Machin's formula, 16·atan(1/5) − 4·atan(1/239).
    pub fn pi(&self) -> Fix {
        let a = self.atan_inv(5);
        let b = self.atan_inv(239);
        Fix {
            m: 16 * &a.m - 4 * &b.m,
        }
    }

    /// atan(1/x) for integer x ≥ 2 via the alternating Taylor series.
    fn atan_inv(&self, x: u32) -> Fix {
        let x2 = BigInt::from(x) * BigInt::from(x);
        let mut term = (BigInt::from(1) << self.prec) / BigInt::from(x);
        let mut acc = term.clone();
        let mut k = 1u32;
        while !term.is_zero() {
            term /= &x2;
            if term.is_zero() {
                break;
            }
            let piece = &term / BigInt::from(2 * k + 1);
            if k % 2 == 1 {
                acc -= &piece;
            } else {
                acc += &piece;
            }
            k += 1;
        }
        Fix { m: acc }
    }

    /// cos(x) and sin(x) by Taylor series; callers keep |x| ≤ 2π so the terms
    /// stay moderate before decaying.
    pub fn cos_sin(&self, x: &Fix) -> (Fix, Fix) {
        let mut cos = self.from_i64(1);
        let mut sin = self.zero();
        // term_k = x^k / k!
        let mut term = self.from_i64(1);
        let mut k = 0u32;
        loop {
            k += 1;
            term = self.mul(&term, x);
            term = self.div_u32(&term, k);
            if term.m.is_zero() {
                break;
            }
            match k % 4 {
                1 => sin = self.add(&sin, &term),
                2 => cos = self.sub(&cos, &term),
                3 => sin = self.sub(&sin, &term),
                _ => cos = self.add(&cos, &term),
            }
            if k > 16 && self.is_small(&term, self.prec - 4) {
                break;
            }
        }
        (cos, sin)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Cx {
    pub re: Fix,
    pub im: Fix,
}

impl FixCtx {
    pub fn cx(&self, re: Fix, im: Fix) -> Cx {
        Cx { re, im }
    }

    pub fn cx_zero(&self) -> Cx {
        Cx {
            re: self.zero(),
            im: self.zero(),
        }
    }

    pub fn cx_add(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: self.add(&a.re, &b.re),
            im: self.add(&a.im, &b.im),
        }
    }

    pub fn cx_sub(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: self.sub(&a.re, &b.re),
            im: self.sub(&a.im, &b.im),
        }
    }

    pub fn cx_mul(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: self.sub(&self.mul(&a.re, &b.re), &self.mul(&a.im, &b.im)),
            im: self.add(&self.mul(&a.re, &b.im), &self.mul(&a.im, &b.re)),
        }
    }

    pub fn cx_div(&self, a: &Cx, b: &Cx) -> Cx {
        let norm = self.add(&self.mul(&b.re, &b.re), &self.mul(&b.im, &b.im));
        assert!(!norm.m.is_zero(), "complex division by zero");
        let num = self.cx_mul(
            a,
            &Cx {
                re: b.re.clone(),
                im: self.neg(&b.im),
            },
        );
        Cx {
            re: self.div(&num.re, &norm),
            im: self.div(&num.im, &norm),
        }
    }

    #[cfg(test)]
    pub fn cx_norm_sq(&self, a: &Cx) -> Fix {
        self.add(&self.mul(&a.re, &a.re), &self.mul(&a.im, &a.im))
    }

    /// e^{2πi k/n}.
    pub fn unit_root(&self, k: u32, n: u32) -> Cx {
        let two_pi = {
            let pi = self.pi();
            Fix { m: 2 * pi.m }
        };
        let angle = Fix {
            m: (&two_pi.m * BigInt::from(k % n)) / BigInt::from(n),
        };
        let (c, s) = self.cos_sin(&angle);
        Cx { re: c, im: s }
    }
}

/// All complex roots of the polynomial with the given complex coefficients
/// (ascending degree, leading coefficient nonzero, roots assumed simple),
/// found by Durand–Kerner iteration.
pub(crate) fn durand_kerner(ctx: &FixCtx, coeffs: &[Cx], max_iter: usize) -> Vec<Cx> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    // Monic normalization.
    let lead = coeffs.last().unwrap();
    let monic: Vec<Cx> = coeffs.iter().map(|c| ctx.cx_div(c, lead)).collect();
    let eval = |z: &Cx| -> Cx {
        let mut acc = ctx.cx_zero();
        for c in monic.iter().rev() {
            acc = ctx.cx_add(&ctx.cx_mul(&acc, z), c);
        }
        acc
    };
    // Standard seed 0.4 + 0.9i raised to increasing powers.
    let seed = Cx {
        re: ctx.from_rational(&Rational::new(2.into(), 5.into())),
        im: ctx.from_rational(&Rational::new(9.into(), 10.into())),
    };
    let mut roots = Vec::with_capacity(deg);
    let mut cur = seed.clone();
    for _ in 0..deg {
        roots.push(cur.clone());
        cur = ctx.cx_mul(&cur, &seed);
    }
    let conv_bits = ctx.prec.saturating_sub(48);
    for _ in 0..max_iter {
        let mut worst_small = true;
        for i in 0..deg {
            let mut denom = ctx.cx(ctx.from_i64(1), ctx.zero());
            for j in 0..deg {
                if i != j {
                    let d = ctx.cx_sub(&roots[i], &roots[j]);
                    denom = ctx.cx_mul(&denom, &d);
                }
            }
            if denom.re.m.is_zero() && denom.im.m.is_zero() {
                // Collided approximations; nudge and keep going.
                roots[i] = ctx.cx_add(&roots[i], &seed);
                worst_small = false;
                continue;
            }
            let delta = ctx.cx_div(&eval(&roots[i]), &denom);
            roots[i] = ctx.cx_sub(&roots[i], &delta);
            if !(ctx.is_small(&delta.re, conv_bits) && ctx.is_small(&delta.im, conv_bits)) {
                worst_small = false;
            }
        }
        if worst_small {
            break;
        }
    }
    roots
}

/// Best rational approximation with denominator ≤ bound, via continued
/// fractions; returns None when no convergent is close enough (within
/// 2^(−prec/2)).
pub(crate) fn reconstruct_rational(ctx: &FixCtx, x: &Fix, denom_bound: &BigInt) -> Option<Rational> {
    // Continued-fraction convergents of x = m / 2^prec.
    let mut a = x.m.clone();
    let mut b = BigInt::from(1) << ctx.prec;
    let (mut p0, mut q0) = (BigInt::from(1), BigInt::zero());
    let floor_div = |a: &BigInt, b: &BigInt| -> BigInt {
        let mut f = a / b;
        if (a - &f * b).is_negative() {
            f -= 1;
        }
        f
    };
    let a0 = floor_div(&a, &b);
    let (mut p1, mut q1) = (a0.clone(), BigInt::from(1));
    let r = &a - &a0 * &b;
    a = b;
    b = r;
    let mut best: Option<Rational> = None;
    loop {
        if q1 <= *denom_bound {
            best = Some(Rational::new(p1.clone(), q1.clone()));
        } else {
            break;
        }
        if b.is_zero() {
            break;
        }
        let f = &a / &b;
        let r = &a - &f * &b;
        let p2 = &f * &p1 + &p0;
        let q2 = &f * &q1 + &q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        a = b;
        b = r;
    }
    let cand = best?;
    // Accept only if genuinely close.
    let diff = ctx.to_rational(x) - &cand;
    let tol = Rational::new(BigInt::from(1), BigInt::from(1) << (ctx.prec / 2));
    if diff.abs() <= tol {
        Some(cand)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn pi_matches_f64() {
        let ctx = FixCtx::new(128);
        let pi = ctx.pi();
        let approx = ctx.to_rational(&pi).to_f64().unwrap();
        assert!((approx - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn unit_roots_on_circle() {
        let ctx = FixCtx::new(128);
        for (k, n) in [(1u32, 4u32), (1, 3), (2, 5), (5, 12)] {
            let w = ctx.unit_root(k, n);
            let norm = ctx.cx_norm_sq(&w);
            let diff = ctx.sub(&norm, &ctx.from_i64(1));
            assert!(ctx.is_small(&diff, 100), "|ζ_{n}^{k}| = 1");
        }
        let i = ctx.unit_root(1, 4);
        assert!(ctx.is_small(&i.re, 100));
        let one_diff = ctx.sub(&i.im, &ctx.from_i64(1));
        assert!(ctx.is_small(&one_diff, 100));
    }

    #[test]
    fn durand_kerner_quadratic() {
        // t² − 1: roots ±1
        let ctx = FixCtx::new(192);
        let coeffs = vec![
            ctx.cx(ctx.from_i64(-1), ctx.zero()),
            ctx.cx_zero(),
            ctx.cx(ctx.from_i64(1), ctx.zero()),
        ];
        let roots = durand_kerner(&ctx, &coeffs, 200);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            let sq = ctx.cx_mul(r, r);
            let diff = ctx.sub(&sq.re, &ctx.from_i64(1));
            assert!(ctx.is_small(&diff, 100));
            assert!(ctx.is_small(&sq.im, 100));
        }
    }

    #[test]
    fn rational_reconstruction() {
        let ctx = FixCtx::new(192);
        let q = Rational::new(BigInt::from(-22), BigInt::from(7));
        let x = ctx.from_rational(&q);
        let got = reconstruct_rational(&ctx, &x, &BigInt::from(1u64 << 32)).unwrap();
        assert_eq!(got, q);
        // A third at low precision still reconstructs exactly.
        let third = Rational::new(BigInt::from(1), BigInt::from(3));
        let x = ctx.from_rational(&third);
        assert_eq!(
            reconstruct_rational(&ctx, &x, &BigInt::from(1u64 << 32)).unwrap(),
            third
        );
    }
}
