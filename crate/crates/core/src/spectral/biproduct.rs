//! The biproduct factorization through a Hopf projection π: H → B = k[g]:
//! coinvariants R, the multiplication identification R⊗B ≅ H, the operator
//! T with S² = T ⊗ id_B, and the trace identities Tr(T) = 0 and
//! Tr(T^p) = p·d with their equal-eigenspace-dimension consequence.

use num_traits::ToPrimitive;

use crate::cyclotomic::CycNumber;
use crate::hopf::FinHopfAlgebra;
use crate::linalg::{
    kernel_basis, projections_for_eigenvalues, rank, FieldMatrix, RowSpan,
};
use crate::report::VerificationReport;
use crate::structure::{IntegralPack, StructureError};

use super::SpectralError;

/// Data extracted by the biproduct verifier, for downstream assertions.
#[derive(Debug)]
pub struct BiproductData {
    pub coinvariant_dim: usize,
    /// S² restricted to R, in the computed R-basis.
    pub t_matrix: FieldMatrix,
    /// Tr(T^p)/p when the trace identity holds.
    pub d: Option<i64>,
}

fn hopf_map_check(
    src: &FinHopfAlgebra,
    dst: &FinHopfAlgebra,
    f: &FieldMatrix,
    name: &str,
) -> Result<(), SpectralError> {
    let ds = src.dim();
    let order = src.cyc_order();
    if f.rows() != dst.dim() || f.cols() != ds || f.order() != order || dst.cyc_order() != order {
        return Err(SpectralError::NotAHopfProjection(format!(
            "{name} has shape {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            dst.dim(),
            ds
        )));
    }
    // Unit and counit.
    if f.apply(src.unit_vector())? != dst.unit_vector() {
        return Err(SpectralError::NotAHopfProjection(format!("{name}(1) ≠ 1")));
    }
    for k in 0..ds {
        let mut ek = vec![CycNumber::zero(order); ds];
        ek[k] = CycNumber::one(order);
        let img = f.apply(&ek)?;
        if dst.counit_of(&img) != src.counit_vector()[k] {
            return Err(SpectralError::NotAHopfProjection(format!(
                "ε∘{name} ≠ ε at basis {k}"
            )));
        }
    }
    // Algebra map on all basis pairs.
    for i in 0..ds {
        let mut ei = vec![CycNumber::zero(order); ds];
        ei[i] = CycNumber::one(order);
        let fi = f.apply(&ei)?;
        for j in 0..ds {
            let mut ej = vec![CycNumber::zero(order); ds];
            ej[j] = CycNumber::one(order);
            let prod = src.mul_vec(&ei, &ej);
            let lhs = f.apply(&prod)?;
            let rhs = dst.mul_vec(&fi, &f.apply(&ej)?);
            if lhs != rhs {
                return Err(SpectralError::NotAHopfProjection(format!(
                    "{name} is not multiplicative at ({i},{j})"
                )));
            }
        }
    }
    // Coalgebra map on every basis element.
    for k in 0..ds {
        let mut ek = vec![CycNumber::zero(order); ds];
        ek[k] = CycNumber::one(order);
        let t = src.comult_matrix(&ek);
        let lhs = dst.comult_matrix(&f.apply(&ek)?);
        let rhs = FieldMatrix::two_leg_apply(f, &t, f)?;
        if lhs != rhs {
            return Err(SpectralError::NotAHopfProjection(format!(
                "{name} is not comultiplicative at basis {k}"
            )));
        }
    }
    // Antipode intertwining.
    match (src.antipode(), dst.antipode()) {
        (Some(ss), Some(sd)) => {
            if f.mul(ss)? != sd.mul(f)? {
                return Err(SpectralError::NotAHopfProjection(format!(
                    "{name} does not intertwine the antipodes"
                )));
            }
        }
        _ => {
            return Err(SpectralError::NotAHopfProjection(
                "antipodes required on both sides".into(),
            ))
        }
    }
    Ok(())
}

/// Verifies the full biproduct picture for a Hopf projection π: H → B with
/// section γ. B must be a group algebra of odd prime order for the trace
/// identities; other inputs get skipped entries.
pub fn verify_biproduct(
    h: &FinHopfAlgebra,
    b: &FinHopfAlgebra,
    pi: &FieldMatrix,
    gamma: &FieldMatrix,
    _pack: &IntegralPack,
) -> Result<(VerificationReport, Option<BiproductData>), SpectralError> {
    let mut report = VerificationReport::new();
    let d = h.dim();
    let nb = b.dim();
    let order = h.cyc_order();

    hopf_map_check(h, b, pi, "π")?;
    hopf_map_check(b, h, gamma, "γ")?;
    if !pi.mul(gamma)?.is_identity() {
        return Err(SpectralError::NotAHopfProjection("π∘γ ≠ id".into()));
    }

    // Coinvariants R = {h : (id⊗π)Δ(h) = h⊗1}: kernel of the stacked
    // linear conditions over pairs (i ∈ H-basis, b ∈ B-basis).
    let comult_by_source = h.comult().grouped_by_first();
    let mut rows: Vec<Vec<CycNumber>> = Vec::with_capacity(d * nb);
    for i in 0..d {
        for bb in 0..nb {
            let mut row = vec![CycNumber::zero(order); d];
            for (k, entries) in comult_by_source.iter().enumerate() {
                let mut acc = CycNumber::zero(order);
                for &(ii, j, c) in entries {
                    if ii as usize != i {
                        continue;
                    }
                    let pv = pi.at(bb, j as usize);
                    if !pv.is_zero() {
                        acc = &acc + &(c * pv);
                    }
                }
                if i == k {
                    acc = &acc - &b.unit_vector()[bb];
                }
                row[k] = acc;
            }
            rows.push(row);
        }
    }
    let all_entries: Vec<CycNumber> = rows.into_iter().flatten().collect();
    let cond = FieldMatrix::new(d * nb, d, order, all_entries)?;
    let r_basis = kernel_basis(&cond);
    let r_dim = r_basis.len();

    if r_dim * nb == d {
        report.pass_with("lemma-6.3-dim", format!("dim R = {r_dim}, dim B = {nb}"));
    } else {
        report.fail(
            "lemma-6.3-dim",
            format!("dim R · dim B = {} ≠ dim H = {d}", r_dim * nb),
            ((r_dim * nb) as i64).to_string(),
        );
        return Ok((report, None));
    }

    // Multiplication R ⊗ B → H must be bijective.
    let mut columns: Vec<Vec<CycNumber>> = Vec::with_capacity(r_dim * nb);
    for r in &r_basis {
        for bb in 0..nb {
            let mut eb = vec![CycNumber::zero(order); nb];
            eb[bb] = CycNumber::one(order);
            let in_h = gamma.apply(&eb)?;
            columns.push(h.mul_vec(r, &in_h));
        }
    }
    let mult_map = FieldMatrix::from_fn(d, r_dim * nb, order, |i, j| columns[j][i].clone());
    if rank(&mult_map) == d {
        report.pass("lemma-6.3-bijective");
    } else {
        report.fail(
            "lemma-6.3-bijective",
            format!("multiplication R⊗B → H has rank {} < {d}", rank(&mult_map)),
            "-",
        );
        return Ok((report, None));
    }

    // S² preserves R; T = S²|_R in the R-basis.
    let s = h
        .antipode()
        .ok_or(StructureError::MissingAntipode)?;
    let s2 = s.pow(2)?;
    let mut rspan = RowSpan::new(d, order);
    for r in &r_basis {
        rspan.insert(r);
    }
    let mut t_cols: Vec<Vec<CycNumber>> = Vec::with_capacity(r_dim);
    for r in &r_basis {
        let img = s2.apply(r)?;
        // Solve img = Σ c_k r_k against the original (unnormalized) basis.
        let rmat = FieldMatrix::from_fn(d, r_dim, order, |i, j| r_basis[j][i].clone());
        match crate::linalg::solve_linear(&rmat, &img)? {
            crate::linalg::SolveOutcome::Solution(c) => t_cols.push(c),
            crate::linalg::SolveOutcome::Inconsistent { .. } => {
                report.fail("lemma-6.3-s2-invariance", "S²(R) ⊄ R", "-");
                return Ok((report, None));
            }
        }
    }
    report.pass("lemma-6.3-s2-invariance");
    let t_matrix = FieldMatrix::from_fn(r_dim, r_dim, order, |i, j| t_cols[j][i].clone());

    // Under the multiplication identification, S²(r·γ(e_b)) = T(r)·γ(e_b).
    let mut ident_ok = true;
    'ident: for (ri, r) in r_basis.iter().enumerate() {
        for bb in 0..nb {
            let mut eb = vec![CycNumber::zero(order); nb];
            eb[bb] = CycNumber::one(order);
            let in_h = gamma.apply(&eb)?;
            let lhs = s2.apply(&h.mul_vec(r, &in_h))?;
            let mut tr_vec = vec![CycNumber::zero(order); d];
            for (k, rk) in r_basis.iter().enumerate() {
                let c = t_matrix.at(k, ri);
                if c.is_zero() {
                    continue;
                }
                for (tv, rv) in tr_vec.iter_mut().zip(rk) {
                    if !rv.is_zero() {
                        *tv = &*tv + &(c * rv);
                    }
                }
            }
            let rhs = h.mul_vec(&tr_vec, &in_h);
            if lhs != rhs {
                report.fail(
                    "lemma-6.3-factorization",
                    format!("S² ≠ T⊗id at R-basis {ri}, B-basis {bb}"),
                    "-",
                );
                ident_ok = false;
                break 'ident;
            }
        }
    }
    if ident_ok {
        report.pass("lemma-6.3-factorization");
    }

    // Trace identities: Tr(T) = 0; Tr(T^p) = p·d; Tr(S^{2p}) = p²·d.
    let p = nb as u32;
    let is_odd_prime =
        |n: u32| n >= 3 && n % 2 == 1 && (2..n).take_while(|k| k * k <= n).all(|k| n % k != 0);
    if !is_odd_prime(p) {
        report.skip("lemma-6.3-traces", format!("dim B = {p} is not an odd prime"));
        report.skip("lemma-2.4", format!("dim B = {p} is not an odd prime"));
        return Ok((
            report,
            Some(BiproductData {
                coinvariant_dim: r_dim,
                t_matrix,
                d: None,
            }),
        ));
    }
    let tr_t = t_matrix.trace();
    let mut d_out = None;
    if !tr_t.is_zero() {
        report.fail("lemma-6.3-traces", "Tr(T) ≠ 0", tr_t.to_string());
    } else {
        let tp = t_matrix.pow(p)?;
        let tr_tp = tp.trace();
        let s2p_trace = s2.pow(p)?.trace();
        let ok = match (
            tr_tp.as_integer().and_then(|v| v.to_i64()),
            s2p_trace.as_integer().and_then(|v| v.to_i64()),
        ) {
            (Some(a), Some(bv)) if a % p as i64 == 0 && bv == p as i64 * a => {
                d_out = Some(a / p as i64);
                true
            }
            _ => false,
        };
        if ok {
            report.pass_with(
                "lemma-6.3-traces",
                format!(
                    "Tr(T) = 0, Tr(T^{p}) = {tr_tp} = {p}·{}, Tr(S^{}) = {s2p_trace}",
                    d_out.unwrap(),
                    2 * p
                ),
            );
        } else {
            report.fail(
                "lemma-6.3-traces",
                format!("Tr(T^{p}) = {tr_tp}, Tr(S^{}) = {s2p_trace} do not satisfy p·d / p²·d", 2 * p),
                tr_tp.to_string(),
            );
        }
    }

    // Lemma 2.4: when Tr(T) = 0 and T^p = id, the p eigenspace dimensions
    // are all equal.
    let tp_identity = t_matrix.pow(p)?.is_identity();
    if tr_t.is_zero() && tp_identity {
        let values: Vec<CycNumber> = (0..p)
            .map(|e| CycNumber::zeta_pow(order, (order / p) as i64 * e as i64))
            .collect();
        if order % p != 0 {
            report.skip("lemma-2.4", format!("field lacks {p}-th roots of unity"));
        } else {
            match projections_for_eigenvalues(&t_matrix, &values) {
                Ok(fam) => {
                    let ranks = fam.ranks();
                    if ranks.iter().all(|&r| r == ranks[0]) {
                        report.pass_with(
                            "lemma-2.4",
                            format!("all {p} eigenspaces of T have dimension {}", ranks[0]),
                        );
                    } else {
                        report.fail(
                            "lemma-2.4",
                            format!("eigenspace dimensions differ: {ranks:?}"),
                            "-",
                        );
                    }
                }
                Err(e) => {
                    report.fail("lemma-2.4", format!("projection failure: {e}"), "-");
                }
            }
        }
    } else {
        report.skip(
            "lemma-2.4",
            format!("hypotheses Tr(T) = 0 and T^{p} = id do not both hold"),
        );
    }

    Ok((
        report,
        Some(BiproductData {
            coinvariant_dim: r_dim,
            t_matrix,
            d: d_out,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{taft, taft_projection};
    use crate::report::CheckStatus;
    use crate::structure::compute_integrals;

    #[test]
    fn taft3_biproduct() {
        let h = taft(3, 1).unwrap();
        let tp = taft_projection(3, 1).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let (report, data) = verify_biproduct(&h, &tp.b, &tp.pi, &tp.gamma, &pack).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let data = data.unwrap();
        assert_eq!(data.coinvariant_dim, 3);
        assert_eq!(data.d, Some(1));
        // T has eigenvalues {1, ω, ω²}: order 3, trace 0.
        assert_eq!(data.t_matrix.operator_order(6).unwrap(), 3);
        assert!(data.t_matrix.trace().is_zero());
        assert_eq!(report.find("lemma-2.4").unwrap().status, CheckStatus::Pass);
    }

    #[test]
    fn corrupted_projection_rejected() {
        let h = taft(3, 1).unwrap();
        let tp = taft_projection(3, 1).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let mut bad = tp.pi.clone();
        *bad.at_mut(0, 4) = CycNumber::one(h.cyc_order());
        assert!(matches!(
            verify_biproduct(&h, &tp.b, &bad, &tp.gamma, &pack),
            Err(SpectralError::NotAHopfProjection(_))
        ));
    }
}
