//! Integrals, distinguished group-likes, group-like enumeration,
//! semisimplicity tests, Radford's S⁴ formula check, and the trace-formula
//! oracle.

mod grouplikes;
mod checks;

pub use checks::{is_semisimple, trace_formula, verify_radford_s4, SemisimpleVerdict};
pub use grouplikes::group_likes;

use crate::cyclotomic::CycNumber;
use crate::hopf::{FinHopfAlgebra, HopfError};
use crate::linalg::{dot, restrict_kernel, FieldMatrix, LinalgError};

#[derive(Debug, Clone, thiserror::Error)]
pub enum StructureError {
    #[error("the {side} integral space has dimension {dim}, expected 1")]
    IntegralSpaceNotOneDimensional { side: &'static str, dim: usize },
    #[error("normalization impossible: λ(Λ) = 0 on this input")]
    NormalizationImpossible,
    #[error("Theorem 2.2 equivalence violated: {0}")]
    EquivalenceViolation(String),
    #[error("trace expressions disagree: {0}")]
    ExpressionMismatch(String),
    #[error("antipode required but absent")]
    MissingAntipode,
    #[error("element order exceeds cap {cap}")]
    OrderExceedsCap { cap: u32 },
    #[error("integral invariant failed: {0}")]
    InvariantFailed(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Integrals and distinguished group-likes of a Hopf algebra, with
/// normalization λ(Λ) = 1. All defining identities are re-verified exactly
/// at construction.
#[derive(Clone, Debug)]
pub struct IntegralPack {
    /// Left integral Λ ∈ H: hΛ = ε(h)Λ.
    pub left_integral: Vec<CycNumber>,
    /// Right integral λ ∈ H*: λβ = β(1)λ, normalized so λ(Λ) = 1.
    pub right_functional_integral: Vec<CycNumber>,
    /// Distinguished group-like g ∈ H: βλ = β(g)λ.
    pub distinguished_grouplike: Vec<CycNumber>,
    /// Distinguished group-like α ∈ H*: Λa = α(a)Λ.
    pub distinguished_character: Vec<CycNumber>,
    /// α = ε.
    pub unimodular: bool,
    /// g = 1.
    pub dual_unimodular: bool,
}

/// Multiplicative order of an element whose powers return to the unit;
/// errors out beyond the cap.
pub fn element_order(h: &FinHopfAlgebra, v: &[CycNumber], cap: u32) -> Result<u32, StructureError> {
    let mut p = v.to_vec();
    for m in 1..=cap {
        if p == h.unit_vector() {
            return Ok(m);
        }
        if m < cap {
            p = h.mul_vec(&p, v);
        }
    }
    Err(StructureError::OrderExceedsCap { cap })
}

/// Convolution order of a functional: least m with β^★m = ε.
pub fn functional_order(
    h: &FinHopfAlgebra,
    beta: &[CycNumber],
    cap: u32,
) -> Result<u32, StructureError> {
    let mut p = beta.to_vec();
    for m in 1..=cap {
        if p == h.counit_vector() {
            return Ok(m);
        }
        if m < cap {
            p = h.convolve(&p, beta);
        }
    }
    Err(StructureError::OrderExceedsCap { cap })
}

/// Group inverse of a group-like element: g^{o(g)−1}.
pub fn grouplike_inverse(
    h: &FinHopfAlgebra,
    g: &[CycNumber],
) -> Result<Vec<CycNumber>, StructureError> {
    let o = element_order(h, g, h.dim() as u32 + 1)?;
    let mut p = h.unit_vector().to_vec();
    for _ in 0..o.saturating_sub(1) {
        p = h.mul_vec(&p, g);
    }
    Ok(p)
}

/// Convolution inverse of a character (algebra map): β∘S.
pub fn character_inverse(
    h: &FinHopfAlgebra,
    beta: &[CycNumber],
) -> Result<Vec<CycNumber>, StructureError> {
    let s = h.antipode().ok_or(StructureError::MissingAntipode)?;
    // (β∘S)_y = Σ_t β_t S_{t,y}
    Ok(s.transpose().apply(beta)?)
}

/// Finds Λ and λ as one-dimensional kernel intersections, normalizes
/// λ(Λ) = 1, reads off g and α by linear proportionality, and re-verifies
/// every IntegralPack invariant exactly.
pub fn compute_integrals(h: &FinHopfAlgebra) -> Result<IntegralPack, StructureError> {
    let d = h.dim();
    let order = h.cyc_order();

    // Λ: ∩_h ker(L(e_h) − ε(e_h)).
    let mut span: Vec<Vec<CycNumber>> = (0..d)
        .map(|i| {
            let mut v = vec![CycNumber::zero(order); d];
            v[i] = CycNumber::one(order);
            v
        })
        .collect();
    for k in 0..d {
        if span.is_empty() {
            break;
        }
        let mut ek = vec![CycNumber::zero(order); d];
        ek[k] = CycNumber::one(order);
        let l = h.left_mult_matrix(&ek);
        let eps = h.counit_vector()[k].clone();
        span = restrict_kernel(&span, &l, &eps);
    }
    if span.len() != 1 {
        return Err(StructureError::IntegralSpaceNotOneDimensional {
            side: "left (Λ)",
            dim: span.len(),
        });
    }
    let mut lambda_cap = span.pop().unwrap();
    // Deterministic scaling: first nonzero coordinate becomes 1.
    let first = lambda_cap
        .iter()
        .find(|c| !c.is_zero())
        .expect("kernel vector is nonzero")
        .clone();
    let inv = first.inv().map_err(|e| StructureError::Linalg(e.into()))?;
    for c in lambda_cap.iter_mut() {
        if !c.is_zero() {
            *c = &*c * &inv;
        }
    }

    // λ: ∩_j ker(M_j − u_j) with (M_j)_{k,i} = c_k^{ij}.
    let mut span: Vec<Vec<CycNumber>> = (0..d)
        .map(|i| {
            let mut v = vec![CycNumber::zero(order); d];
            v[i] = CycNumber::one(order);
            v
        })
        .collect();
    let grouped = h.comult().grouped_by_first();
    for j in 0..d {
        if span.is_empty() {
            break;
        }
        let mut m = FieldMatrix::zero(d, d, order);
        for (k, entries) in grouped.iter().enumerate() {
            for &(i, jj, c) in entries {
                if jj as usize == j {
                    let cur = m.at(k, i as usize);
                    *m.at_mut(k, i as usize) = cur + c;
                }
            }
        }
        let uj = h.unit_vector()[j].clone();
        span = restrict_kernel(&span, &m, &uj);
    }
    if span.len() != 1 {
        return Err(StructureError::IntegralSpaceNotOneDimensional {
            side: "right functional (λ)",
            dim: span.len(),
        });
    }
    let mut lambda = span.pop().unwrap();

    // Normalize λ(Λ) = 1.
    let pairing = dot(&lambda, &lambda_cap);
    if pairing.is_zero() {
        return Err(StructureError::NormalizationImpossible);
    }
    let pinv = pairing.inv().map_err(|e| StructureError::Linalg(e.into()))?;
    for c in lambda.iter_mut() {
        if !c.is_zero() {
            *c = &*c * &pinv;
        }
    }

    // g from β★λ = β(g)·λ over dual basis β = f_t.
    let k0 = lambda.iter().position(|c| !c.is_zero()).expect("λ ≠ 0");
    let lk0_inv = lambda[k0].inv().map_err(|e| StructureError::Linalg(e.into()))?;
    let mut g = vec![CycNumber::zero(order); d];
    for t in 0..d {
        let mut ft = vec![CycNumber::zero(order); d];
        ft[t] = CycNumber::one(order);
        let conv = h.convolve(&ft, &lambda);
        let gt = &conv[k0] * &lk0_inv;
        // Verify β★λ = β(g)·λ in full.
        for k in 0..d {
            let expect = &gt * &lambda[k];
            if conv[k] != expect {
                return Err(StructureError::InvariantFailed(format!(
                    "f_{t}★λ is not proportional to λ at coordinate {k}"
                )));
            }
        }
        g[t] = gt;
    }

    // α from Λ·a = α(a)·Λ over basis a = e_t.
    let k1 = lambda_cap.iter().position(|c| !c.is_zero()).expect("Λ ≠ 0");
    let ck1_inv = lambda_cap[k1]
        .inv()
        .map_err(|e| StructureError::Linalg(e.into()))?;
    let mut alpha = vec![CycNumber::zero(order); d];
    for t in 0..d {
        let mut et = vec![CycNumber::zero(order); d];
        et[t] = CycNumber::one(order);
        let prod = h.mul_vec(&lambda_cap, &et);
        let at = &prod[k1] * &ck1_inv;
        for k in 0..d {
            let expect = &at * &lambda_cap[k];
            if prod[k] != expect {
                return Err(StructureError::InvariantFailed(format!(
                    "Λ·e_{t} is not proportional to Λ at coordinate {k}"
                )));
            }
        }
        alpha[t] = at;
    }

    // Re-verify the integral identities themselves.
    for k in 0..d {
        let mut ek = vec![CycNumber::zero(order); d];
        ek[k] = CycNumber::one(order);
        let prod = h.mul_vec(&ek, &lambda_cap);
        let eps = &h.counit_vector()[k];
        for (p, l) in prod.iter().zip(&lambda_cap) {
            if p != &(eps * l) {
                return Err(StructureError::InvariantFailed(format!(
                    "e_{k}·Λ ≠ ε(e_{k})Λ"
                )));
            }
        }
        // Right-integral identity in vector form: Σ λ(h₁)h₂ = λ(h)·1.
        let mut lhs = vec![CycNumber::zero(order); d];
        for &(i, j, c) in &grouped[k] {
            let li = &lambda[i as usize];
            if !li.is_zero() {
                lhs[j as usize] = &lhs[j as usize] + &(li * c);
            }
        }
        for (t, l) in lhs.iter().enumerate() {
            let expect = &lambda[k] * &h.unit_vector()[t];
            if *l != expect {
                return Err(StructureError::InvariantFailed(format!(
                    "Σ λ((e_{k})₁)(e_{k})₂ ≠ λ(e_{k})·1"
                )));
            }
        }
    }
    if !dot(&lambda, &lambda_cap).is_one() {
        return Err(StructureError::InvariantFailed("λ(Λ) ≠ 1".into()));
    }

    // g must be group-like, α an algebra map.
    let gmat = h.comult_matrix(&g);
    for i in 0..d {
        for j in 0..d {
            if gmat.at(i, j) != &(&g[i] * &g[j]) {
                return Err(StructureError::InvariantFailed(
                    "distinguished g is not group-like".into(),
                ));
            }
        }
    }
    if !h.counit_of(&g).is_one() {
        return Err(StructureError::InvariantFailed("ε(g) ≠ 1".into()));
    }
    // α algebra map: α(e_i e_j) = Σ_k m_{ij}^k α_k must equal α_i α_j.
    let mut alpha_prod = FieldMatrix::zero(d, d, order);
    for (&(i, j, k), c) in h.mult().iter() {
        let ak = &alpha[k as usize];
        if !ak.is_zero() {
            let cur = alpha_prod.at(i as usize, j as usize);
            *alpha_prod.at_mut(i as usize, j as usize) = cur + &(c * ak);
        }
    }
    for i in 0..d {
        for j in 0..d {
            if alpha_prod.at(i, j) != &(&alpha[i] * &alpha[j]) {
                return Err(StructureError::InvariantFailed(
                    "distinguished α is not an algebra map".into(),
                ));
            }
        }
    }
    if !dot(&alpha, h.unit_vector()).is_one() {
        return Err(StructureError::InvariantFailed("α(1) ≠ 1".into()));
    }

    let unimodular = alpha == h.counit_vector();
    let dual_unimodular = g == h.unit_vector();
    Ok(IntegralPack {
        left_integral: lambda_cap,
        right_functional_integral: lambda,
        distinguished_grouplike: g,
        distinguished_character: alpha,
        unimodular,
        dual_unimodular,
    })
}
