//! Computable consequences of the pq-dimensional classification results:
//! antipode-order bounds, the Tr(S^{2p}) divisibility with odd quotient,
//! the p²-dimensional signature, and the forbidden group-like pattern.

use num_traits::ToPrimitive;

use crate::hopf::FinHopfAlgebra;
use crate::report::VerificationReport;
use crate::structure::{IntegralPack, SemisimpleVerdict, StructureError};

use super::{GradingContext, SpectralError};

fn odd_prime_factor_pair(dim: usize) -> Option<(u32, u32)> {
    // dim = p·q with p ≤ q odd primes (p = q allowed).
    let is_odd_prime =
        |n: usize| n >= 3 && n % 2 == 1 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
    for p in 3..=dim {
        if !is_odd_prime(p) || dim % p != 0 {
            continue;
        }
        let q = dim / p;
        if q >= p && is_odd_prime(q) {
            return Some((p as u32, q as u32));
        }
    }
    None
}

/// Checks the computable content of the pq results on a single algebra:
/// o(S⁴) = p and index = p; S^{4p} = id and Tr(S^{2p}) = p²·(odd d); for
/// dim p², the classification signature (S^{2p} = id, o(S²) = p for the
/// non-semisimple branch; index 1 with S² = id for the semisimple one);
/// and the group-like pattern |G(H)| = p, |G(H*)| = q that must never
/// occur for p ≠ q.
pub fn verify_pq_theorems(
    h: &FinHopfAlgebra,
    _pack: &IntegralPack,
    ctx: &GradingContext,
    verdict: &SemisimpleVerdict,
    grouplikes: usize,
    dual_grouplikes: usize,
) -> Result<VerificationReport, SpectralError> {
    let mut report = VerificationReport::new();
    let dim = h.dim();
    let Some((p, q)) = odd_prime_factor_pair(dim) else {
        report.skip(
            "prop-6.2",
            format!("dim {dim} is not a product of two odd primes"),
        );
        report.skip("thm-6.4", format!("dim {dim} is not a product of two odd primes"));
        report.skip("thm-6.5", format!("dim {dim} is not an odd prime square"));
        report.skip(
            "lemma-6.1-pattern",
            format!("dim {dim} is not a product of two odd primes"),
        );
        return Ok(report);
    };
    let s = h
        .antipode()
        .ok_or(StructureError::MissingAntipode)?;

    // Prop 6.2: for non-semisimple H of dimension pq, o(S⁴) = p, index = p.
    if verdict.semisimple {
        report.skip("prop-6.2", "algebra is semisimple");
    } else if ctx.order_s4 == p && ctx.index == p {
        report.pass_with("prop-6.2", format!("o(S⁴) = index = {p}"));
    } else {
        report.fail(
            "prop-6.2",
            format!(
                "expected o(S⁴) = index = {p}, got o(S⁴) = {}, index = {}",
                ctx.order_s4, ctx.index
            ),
            format!("{}", ctx.index as i64 - p as i64),
        );
    }

    // Thm 6.4: S^{4p} = id and Tr(S^{2p}) = p²d with d odd.
    if verdict.semisimple {
        report.skip("thm-6.4", "algebra is semisimple");
    } else {
        let s4p = s.pow(4 * p)?;
        if !s4p.is_identity() {
            report.fail("thm-6.4", format!("S^{} is not the identity", 4 * p), "-");
        } else {
            let tr = s.pow(2 * p)?.trace();
            match tr.as_integer().and_then(|b| b.to_i64()) {
                Some(v) if v % (p as i64 * p as i64) == 0 && (v / (p as i64 * p as i64)) % 2 != 0 => {
                    report.pass_with(
                        "thm-6.4",
                        format!("Tr(S^{}) = {v} = {p}²·{}", 2 * p, v / (p as i64 * p as i64)),
                    );
                }
                Some(v) => {
                    report.fail(
                        "thm-6.4",
                        format!("Tr(S^{}) = {v} is not p² times an odd integer", 2 * p),
                        v.to_string(),
                    );
                }
                None => {
                    report.fail(
                        "thm-6.4",
                        format!("Tr(S^{}) = {tr} is not a rational integer", 2 * p),
                        tr.to_string(),
                    );
                }
            }
        }
    }

    // Thm 6.5 signature for dim = p².
    if p != q {
        report.skip("thm-6.5", format!("dim {dim} is not an odd prime square"));
    } else if verdict.semisimple {
        if ctx.index == 1 && s.pow(2)?.is_identity() {
            report.pass_with("thm-6.5", "semisimple branch: index 1, S² = id");
        } else {
            report.fail(
                "thm-6.5",
                format!("semisimple algebra with index {} and S² ≠ id", ctx.index),
                "-",
            );
        }
    } else {
        let s2 = s.pow(2)?;
        let s2p_identity = s2.pow(p)?.is_identity();
        let o_s2 = s2.operator_order(2 * p)?;
        if s2p_identity && o_s2 == p {
            report.pass_with("thm-6.5", format!("Taft signature: S^{} = id, o(S²) = {p}", 2 * p));
        } else {
            report.fail(
                "thm-6.5",
                format!("expected S^{} = id and o(S²) = {p}, got o(S²) = {o_s2}", 2 * p),
                "-",
            );
        }
    }

    // Lemma 6.1: for p ≠ q, the pattern {|G(H)|, |G(H*)|} = {p, q} never
    // occurs.
    let pattern = format!("|G(H)| = {grouplikes}, |G(H*)| = {dual_grouplikes}");
    if p == q {
        report.pass_with("lemma-6.1-pattern", format!("{pattern} (p = q, no constraint)"));
    } else {
        let forbidden = (grouplikes == p as usize && dual_grouplikes == q as usize)
            || (grouplikes == q as usize && dual_grouplikes == p as usize);
        if forbidden {
            report.fail(
                "lemma-6.1-pattern",
                format!("forbidden pattern realized: {pattern}"),
                pattern.clone(),
            );
        } else {
            report.pass_with("lemma-6.1-pattern", pattern);
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra, taft};
    use crate::spectral::compute_index;
    use crate::structure::{compute_integrals, group_likes, is_semisimple};
    use crate::hopf::dual;
    use crate::report::CheckStatus;

    fn run(h: &FinHopfAlgebra) -> VerificationReport {
        let pack = compute_integrals(h).unwrap();
        let ctx = compute_index(h, &pack).unwrap();
        let verdict = is_semisimple(h, &pack).unwrap();
        let gl = group_likes(h).unwrap().len();
        let hd = dual(h).unwrap();
        let gld = group_likes(&hd).unwrap().len();
        verify_pq_theorems(h, &pack, &ctx, &verdict, gl, gld).unwrap()
    }

    #[test]
    fn taft3_pq_results() {
        let report = run(&taft(3, 1).unwrap());
        assert_eq!(report.find("prop-6.2").unwrap().status, CheckStatus::Pass);
        let e = report.find("thm-6.4").unwrap();
        assert_eq!(e.status, CheckStatus::Pass);
        assert!(e.reason.as_deref().unwrap().contains("9 = 3²·1"));
        assert_eq!(report.find("thm-6.5").unwrap().status, CheckStatus::Pass);
    }

    #[test]
    fn group_algebra9_semisimple_branch() {
        let report = run(&group_algebra(&[9]).unwrap());
        assert_eq!(report.find("prop-6.2").unwrap().status, CheckStatus::Skipped);
        assert_eq!(report.find("thm-6.5").unwrap().status, CheckStatus::Pass);
        assert!(report
            .find("thm-6.5")
            .unwrap()
            .reason
            .as_deref()
            .unwrap()
            .contains("semisimple branch"));
    }

    #[test]
    fn sweedler_skipped() {
        let report = run(&taft(2, 1).unwrap());
        for id in ["prop-6.2", "thm-6.4", "thm-6.5"] {
            assert_eq!(report.find(id).unwrap().status, CheckStatus::Skipped, "{id}");
        }
    }

    #[test]
    fn factor_pairs() {
        assert_eq!(odd_prime_factor_pair(9), Some((3, 3)));
        assert_eq!(odd_prime_factor_pair(15), Some((3, 5)));
        assert_eq!(odd_prime_factor_pair(25), Some((5, 5)));
        assert_eq!(odd_prime_factor_pair(4), None);
        assert_eq!(odd_prime_factor_pair(8), None);
        assert_eq!(odd_prime_factor_pair(81), None);
    }
}
