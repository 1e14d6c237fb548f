//! The K_n-grading: joint eigenspaces H^ω_{a,i,j} of S² (eigenvalue
//! (−1)^a ω^i) and right multiplication by g (eigenvalue ω^j), for odd
//! index n.

use crate::cyclotomic::CycNumber;
use crate::hopf::FinHopfAlgebra;
use crate::linalg::{joint_refine, projections_for_eigenvalues, ProjectionFamily};
use crate::structure::{IntegralPack, StructureError};

use super::{GradingContext, SpectralError};

/// Dimensions of the graded pieces, indexed by (a, i, j) ∈ Z₂×Z_n×Z_n.
#[derive(Debug, Clone)]
pub struct GradingTable {
    index: u32,
    dims: Vec<usize>,
}

impl GradingTable {
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn dim(&self, a: u8, i: u32, j: u32) -> usize {
        let n = self.index;
        self.dims[((a as u32 * n + i % n) * n + j % n) as usize]
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Cells in (a, i, j) order.
    pub fn cells(&self) -> impl Iterator<Item = (u8, u32, u32, usize)> + '_ {
        let n = self.index;
        self.dims.iter().enumerate().map(move |(pos, &d)| {
            let j = pos as u32 % n;
            let i = (pos as u32 / n) % n;
            let a = (pos as u32 / (n * n)) as u8;
            (a, i, j, d)
        })
    }

    /// Tr(S²) recomputed from the table: Σ (−1)^a ω^i dim H_{a,i,j}.
    pub fn trace_s2(&self, omega: &CycNumber) -> CycNumber {
        let mut acc = CycNumber::zero(omega.order());
        for (a, i, _, d) in self.cells() {
            if d == 0 {
                continue;
            }
            let mut term = omega
                .pow(i as i64)
                .expect("root of unity")
                .scale_by_int(d as i64);
            if a == 1 {
                term = term.neg();
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Tr(S^{2m}) recomputed from the table: Σ ((−1)^a ω^i)^m dims.
    pub fn trace_s2_power(&self, omega: &CycNumber, m: u32) -> CycNumber {
        let mut acc = CycNumber::zero(omega.order());
        for (a, i, _, d) in self.cells() {
            if d == 0 {
                continue;
            }
            let mut term = omega
                .pow((i as i64) * (m as i64))
                .expect("root of unity")
                .scale_by_int(d as i64);
            if a == 1 && m % 2 == 1 {
                term = term.neg();
            }
            acc = &acc + &term;
        }
        acc
    }
}

/// The grading with its joint projection family; labels are in (a, i, j)
/// order: position (a·n + i)·n + j.
#[derive(Debug, Clone)]
pub struct Grading {
    pub table: GradingTable,
    pub family: ProjectionFamily,
}

/// Joint eigenprojections of S² (over the eigenvalues (−1)^a ω^i, which lie
/// in Q(ζ_N) for odd n dividing N) refined by the r(g) family (eigenvalues
/// ω^j). Requires odd index; verifies S^{4n} = id and r(g)ⁿ = id first.
pub fn compute_grading(
    h: &FinHopfAlgebra,
    pack: &IntegralPack,
    ctx: &GradingContext,
) -> Result<Grading, SpectralError> {
    let n = ctx.index;
    if n % 2 == 0 {
        return Err(SpectralError::EvenIndexUnsupported { n });
    }
    let s = h
        .antipode()
        .ok_or(StructureError::MissingAntipode)?;
    let s2 = s.pow(2)?;
    if !s2.pow(2 * n)?.is_identity() {
        return Err(SpectralError::IndexInvariantFailed(format!(
            "S^{} is not the identity",
            4 * n
        )));
    }
    let rg = h.right_mult_matrix(&pack.distinguished_grouplike);
    if !rg.pow(n)?.is_identity() {
        return Err(SpectralError::IndexInvariantFailed(format!(
            "r(g)^{n} is not the identity"
        )));
    }

    // S² eigenvalues (−1)^a ω^i in (a, i) order; for odd n these are the
    // 2n-th roots of unity, all available in-field since −1 is rational.
    let mut s2_values = Vec::with_capacity(2 * n as usize);
    for a in 0..2u8 {
        for i in 0..n {
            let mut v = ctx.omega.pow(i as i64).map_err(|e| SpectralError::Linalg(e.into()))?;
            if a == 1 {
                v = v.neg();
            }
            s2_values.push(v);
        }
    }
    let s2_family = projections_for_eigenvalues(&s2, &s2_values)?;
    let g_values: Vec<CycNumber> = (0..n)
        .map(|j| ctx.omega.pow(j as i64).expect("root of unity"))
        .collect();
    let g_family = projections_for_eigenvalues(&rg, &g_values)?;
    let family = joint_refine(&s2_family, &g_family)?;
    let dims = family.ranks().to_vec();
    let table = GradingTable { index: n, dims };
    if table.total() != h.dim() {
        return Err(SpectralError::IndexInvariantFailed(format!(
            "graded dimensions sum to {} instead of {}",
            table.total(),
            h.dim()
        )));
    }
    // The table must reproduce Tr(S²) exactly.
    let from_table = table.trace_s2(&ctx.omega);
    let direct = s2.trace();
    if from_table != direct {
        return Err(SpectralError::IndexInvariantFailed(format!(
            "table trace {from_table} differs from Tr(S²) = {direct}"
        )));
    }
    Ok(Grading { table, family })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra, taft};
    use crate::spectral::compute_index;
    use crate::structure::compute_integrals;

    #[test]
    fn group_algebra_single_cell() {
        let h = group_algebra(&[9]).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let ctx = compute_index(&h, &pack).unwrap();
        let grading = compute_grading(&h, &pack, &ctx).unwrap();
        assert_eq!(grading.table.dim(0, 0, 0), 9);
        assert_eq!(grading.table.total(), 9);
        for (a, _, _, d) in grading.table.cells() {
            if a == 1 {
                assert_eq!(d, 0);
            }
        }
    }

    #[test]
    fn taft3_grading_is_all_ones_plane() {
        let h = taft(3, 1).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let ctx = compute_index(&h, &pack).unwrap();
        let grading = compute_grading(&h, &pack, &ctx).unwrap();
        for (a, i, j, d) in grading.table.cells() {
            assert_eq!(d, if a == 0 { 1 } else { 0 }, "cell ({a},{i},{j})");
        }
        assert_eq!(grading.family.len(), 18);
    }

    #[test]
    fn sweedler_grading_rejected() {
        let h = taft(2, 1).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let ctx = compute_index(&h, &pack).unwrap();
        assert!(matches!(
            compute_grading(&h, &pack, &ctx),
            Err(SpectralError::EvenIndexUnsupported { n: 2 })
        ));
    }

    #[test]
    fn trace_power_from_table_matches_direct() {
        let h = taft(5, 2).unwrap();
        let pack = compute_integrals(&h).unwrap();
        let ctx = compute_index(&h, &pack).unwrap();
        let grading = compute_grading(&h, &pack, &ctx).unwrap();
        let s = h.antipode().unwrap();
        for m in 1..=10u32 {
            let direct = s.pow(2 * m).unwrap().trace();
            let tabled = grading.table.trace_s2_power(&ctx.omega, m);
            assert_eq!(tabled, direct, "Tr(S^{})", 2 * m);
        }
    }
}
