//! Semisimplicity (the Theorem-2.2 style three-way agreement), the S⁴
//! conjugation formula, and the integral trace formula, all exact.

use crate::cyclotomic::CycNumber;
use crate::hopf::{FinHopfAlgebra, HopfError};
use crate::linalg::FieldMatrix;
use crate::report::VerificationReport;

use super::{character_inverse, grouplike_inverse, IntegralPack, StructureError};

/// Outcome of the semisimplicity test, with its exact evidence.
#[derive(Debug, Clone)]
pub struct SemisimpleVerdict {
    pub semisimple: bool,
    /// Tr(S²), exactly.
    pub trace_s2: CycNumber,
    /// ε(Λ), exactly.
    pub counit_of_integral: CycNumber,
}

/// Runs the three equivalent tests — Tr(S²) ≠ 0, ε(Λ) ≠ 0, S² = id — and
/// hard-fails unless all three agree.
pub fn is_semisimple(
    h: &FinHopfAlgebra,
    pack: &IntegralPack,
) -> Result<SemisimpleVerdict, StructureError> {
    let s = h.antipode().ok_or(StructureError::MissingAntipode)?;
    let s2 = s.mul(s)?;
    let trace_s2 = s2.trace();
    let by_trace = !trace_s2.is_zero();
    let counit_of_integral = h.counit_of(&pack.left_integral);
    let by_integral = !counit_of_integral.is_zero();
    let by_involution = s2.is_identity();
    if by_trace != by_integral || by_trace != by_involution {
        return Err(StructureError::EquivalenceViolation(format!(
            "Tr(S²)≠0: {by_trace}, ε(Λ)≠0: {by_integral}, S²=id: {by_involution}"
        )));
    }
    Ok(SemisimpleVerdict {
        semisimple: by_trace,
        trace_s2,
        counit_of_integral,
    })
}

/// Checks S⁴(h) = g(α ⇀ h ↼ α⁻¹)g⁻¹ on every basis element, with
/// α⁻¹ = α∘S.
pub fn verify_radford_s4(h: &FinHopfAlgebra, pack: &IntegralPack) -> VerificationReport {
    let mut report = VerificationReport::new();
    let Some(s) = h.antipode() else {
        report.skip("radford-s4", "no antipode present");
        return report;
    };
    let inner = || -> Result<Option<(usize, usize, CycNumber)>, StructureError> {
        let s4 = s.pow(4)?;
        let alpha = h.functional(pack.distinguished_character.clone());
        let alpha_inv = h.functional(character_inverse(h, &pack.distinguished_character)?);
        let g = &pack.distinguished_grouplike;
        let g_inv = grouplike_inverse(h, g)?;
        for k in 0..h.dim() {
            let basis = h.basis_element(k);
            let pulled = FinHopfAlgebra::harpoon_right(&basis, &alpha_inv).map_err(HopfError::from)?;
            let pushed =
                FinHopfAlgebra::harpoon_left(&alpha, &h.element(pulled)).map_err(HopfError::from)?;
            let conj = h.mul_vec(&h.mul_vec(g, &pushed), &g_inv);
            for t in 0..h.dim() {
                let lhs = s4.at(t, k);
                if lhs != &conj[t] {
                    return Ok(Some((k, t, lhs - &conj[t])));
                }
            }
        }
        Ok(None)
    };
    match inner() {
        Ok(None) => report.pass("radford-s4"),
        Ok(Some((k, t, residual))) => report.fail(
            "radford-s4",
            format!("S⁴(e{k}) ≠ g(α⇀e{k}↼α⁻¹)g⁻¹ at coordinate {t}"),
            residual.to_string(),
        ),
        Err(e) => report.fail("radford-s4", format!("evaluation error: {e}"), "-"),
    }
    report
}

/// Evaluates the three integral trace expressions
///   Σ λ(S(Λ₂) f(Λ₁)),  Σ λ(S(f(Λ₂)) Λ₁),  Σ λ(f(S(Λ₂)) Λ₁)
/// and returns the common value, hard-failing unless all of them equal the
/// direct matrix trace.
pub fn trace_formula(
    h: &FinHopfAlgebra,
    pack: &IntegralPack,
    f: &FieldMatrix,
) -> Result<CycNumber, StructureError> {
    let d = h.dim();
    let order = h.cyc_order();
    let s = h.antipode().ok_or(StructureError::MissingAntipode)?;
    if !crate::linalg::dot(&pack.right_functional_integral, &pack.left_integral).is_one() {
        return Err(StructureError::InvariantFailed("λ(Λ) ≠ 1".into()));
    }
    // T[i][j]: Δ(Λ) = Σ T_ij e_i⊗e_j.
    let t = h.comult_matrix(&pack.left_integral);
    // P[s][i] = λ(e_s·e_i); B[j][i] = λ(S(e_j)·e_i) = (Sᵀ P)[j][i].
    let mut p = FieldMatrix::zero(d, d, order);
    for (&(si, i, k), m) in h.mult().iter() {
        let lk = &pack.right_functional_integral[k as usize];
        if !lk.is_zero() {
            let cur = p.at(si as usize, i as usize);
            *p.at_mut(si as usize, i as usize) = cur + &(m * lk);
        }
    }
    let b = s.transpose().mul(&p)?;

    let trace_of_product = |x: &FieldMatrix, y: &FieldMatrix| -> Result<CycNumber, StructureError> {
        // tr(x·y) without forming the product.
        let mut acc = CycNumber::zero(order);
        for i in 0..d {
            for k in 0..d {
                let a = x.at(i, k);
                if a.is_zero() {
                    continue;
                }
                let c = y.at(k, i);
                if c.is_zero() {
                    continue;
                }
                acc = &acc + &(a * c);
            }
        }
        Ok(acc)
    };

    // expr1 = Σ T_ij λ(S(e_j) f(e_i)) = tr(T · B · F).
    let expr1 = trace_of_product(&t, &b.mul(f)?)?;
    // expr2 = Σ T_ij λ(S(f(e_j)) e_i) = tr(T · Fᵀ · B).
    let expr2 = trace_of_product(&t, &f.transpose().mul(&b)?)?;
    // expr3 = Σ T_ij λ(f(S(e_j)) e_i) = tr(T · (F·S)ᵀ · P).
    let expr3 = trace_of_product(&t, &f.mul(s)?.transpose().mul(&p)?)?;
    let direct = f.trace();
    if expr1 != direct || expr2 != direct || expr3 != direct {
        return Err(StructureError::ExpressionMismatch(format!(
            "direct {direct}, expr1 {expr1}, expr2 {expr2}, expr3 {expr3}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra, taft};
    use crate::structure::compute_integrals;

    #[test]
    fn group_algebra_is_semisimple() {
        let h = group_algebra(&[5]).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let v = is_semisimple(&h, &pack).unwrap();
        assert!(v.semisimple);
        assert_eq!(v.trace_s2, CycNumber::from_integer(h.cyc_order(), 5));
    }

    #[test]
    fn taft_is_not_semisimple() {
        let h = taft(3, 1).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let v = is_semisimple(&h, &pack).unwrap();
        assert!(!v.semisimple);
        assert!(v.trace_s2.is_zero());
        assert!(v.counit_of_integral.is_zero());
    }

    #[test]
    fn radford_formula_on_bundled_inputs() {
        for h in [group_algebra(&[6]).unwrap(), taft(3, 1).unwrap(), taft(5, 2).unwrap()] {
            let pack = compute_integrals(&h).unwrap();
            let report = verify_radford_s4(&h, &pack);
            assert!(report.all_passed(), "{}", h.name());
        }
    }

    #[test]
    fn radford_reduces_to_s4_for_taft_x() {
        // Both sides send x ↦ ξ²x for T(ξ).
        let n = 3u32;
        let h = taft(n, 1).unwrap();
        let s4 = h.antipode().unwrap().pow(4).unwrap();
        let xi = CycNumber::zeta_pow(h.cyc_order(), 2);
        let idx = (n * 1 + 0) as usize; // x = x^1 a^0
        assert_eq!(s4.at(idx, idx), &xi.pow(2).unwrap());
    }

    #[test]
    fn trace_formula_identity_and_s_powers() {
        let h = group_algebra(&[5]).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let id = FieldMatrix::identity(5, h.cyc_order());
        assert_eq!(
            trace_formula(&h, &pack, &id).unwrap(),
            CycNumber::from_integer(h.cyc_order(), 5)
        );

        let h = taft(3, 1).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let s = h.antipode().unwrap();
        let s2 = s.pow(2).unwrap();
        assert!(trace_formula(&h, &pack, &s2).unwrap().is_zero());
        let s6 = s.pow(6).unwrap();
        assert_eq!(
            trace_formula(&h, &pack, &s6).unwrap(),
            CycNumber::from_integer(h.cyc_order(), 9)
        );
    }
}
