//! Eigenprojections of finite-order operators via Lagrange interpolation,
//! and joint refinement of commuting projection families.

use crate::cyclotomic::{roots_of_unity, CycNumber};

use super::matrix::FieldMatrix;
use super::solve::rank;
use super::LinalgError;

/// A complete family of projections onto joint eigenspaces. Labels are
/// eigenvalue tuples, one scalar per refining operator.
#[derive(Clone, Debug)]
pub struct ProjectionFamily {
    labels: Vec<Vec<CycNumber>>,
    operators: Vec<FieldMatrix>,
    ranks: Vec<usize>,
}

impl ProjectionFamily {
    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    pub fn labels(&self) -> &[Vec<CycNumber>] {
        &self.labels
    }

    pub fn operators(&self) -> &[FieldMatrix] {
        &self.operators
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn dim(&self) -> usize {
        self.operators.first().map_or(0, |m| m.rows())
    }

    /// Exact invariant check: each member idempotent, pairwise products
    /// vanish, the family sums to the identity, and ranks add up to the
    /// ambient dimension.
    pub fn verify_invariants(&self) -> Result<(), LinalgError> {
        let d = self.dim();
        let order = self.operators[0].order();
        let mut sum = FieldMatrix::zero(d, d, order);
        for e in &self.operators {
            sum = sum.add(e)?;
        }
        if !sum.is_identity() {
            return Err(LinalgError::SelfCheckFailed {
                context: "projection family does not sum to the identity".into(),
            });
        }
        for (i, e) in self.operators.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let sq = e.mul(e)?;
            if &sq != e {
                return Err(LinalgError::SelfCheckFailed {
                    context: format!("projection {i} is not idempotent"),
                });
            }
        }
        for i in 0..self.operators.len() {
            if self.operators[i].is_zero() {
                continue;
            }
            for j in 0..self.operators.len() {
                if i == j || self.operators[j].is_zero() {
                    continue;
                }
                if !self.operators[i].mul(&self.operators[j])?.is_zero() {
                    return Err(LinalgError::SelfCheckFailed {
                        context: format!("projections {i} and {j} do not annihilate each other"),
                    });
                }
            }
        }
        let total: usize = self.ranks.iter().sum();
        if total != d {
            return Err(LinalgError::SelfCheckFailed {
                context: format!("projection ranks sum to {total}, ambient dimension is {d}"),
            });
        }
        Ok(())
    }
}

/// Rank of an idempotent: its trace, which must be a non-negative integer;
/// cross-checked against the elimination rank.
fn idempotent_rank(e: &FieldMatrix) -> Result<usize, LinalgError> {
    let t = e.trace();
    let n = t.as_integer().ok_or_else(|| LinalgError::SelfCheckFailed {
        context: format!("projection trace {t} is not an integer"),
    })?;
    use num_traits::ToPrimitive;
    let by_trace = n.to_usize().ok_or_else(|| LinalgError::SelfCheckFailed {
        context: format!("projection trace {n} is negative or huge"),
    })?;
    let by_rank = rank(e);
    if by_trace != by_rank {
        return Err(LinalgError::SelfCheckFailed {
            context: format!("projection trace {by_trace} disagrees with rank {by_rank}"),
        });
    }
    Ok(by_rank)
}

/// Projections onto the eigenspaces of A for an explicit eigenvalue list,
/// by Lagrange interpolation: E_λ = Π_{μ≠λ} (A − μ)/(λ − μ). Requires that
/// Π_μ (A − μ) annihilates A (checked exactly); distinct eigenvalues.
pub fn projections_for_eigenvalues(
    a: &FieldMatrix,
    values: &[CycNumber],
) -> Result<ProjectionFamily, LinalgError> {
    assert_eq!(a.rows(), a.cols(), "eigenprojections need a square matrix");
    let d = a.rows();
    let order = a.order();
    let id = FieldMatrix::identity(d, order);
    // Σ over the full product must vanish: minimal polynomial divides
    // Π (t − μ).
    let mut ann = id.clone();
    for mu in values {
        let factor = a.sub(&id.scale(mu))?;
        ann = ann.mul(&factor)?;
    }
    if !ann.is_zero() {
        return Err(LinalgError::NotAnnihilated);
    }
    let mut labels = Vec::with_capacity(values.len());
    let mut operators = Vec::with_capacity(values.len());
    let mut ranks = Vec::with_capacity(values.len());
    for (i, lam) in values.iter().enumerate() {
        let mut e = id.clone();
        for (j, mu) in values.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = lam.try_sub(mu).map_err(LinalgError::Scalar)?;
            let denom_inv = denom.inv().map_err(|_| LinalgError::SelfCheckFailed {
                context: "repeated eigenvalue in projection list".into(),
            })?;
            let factor = a.sub(&id.scale(mu))?.scale(&denom_inv);
            e = e.mul(&factor)?;
        }
        ranks.push(idempotent_rank(&e)?);
        labels.push(vec![lam.clone()]);
        operators.push(e);
    }
    let fam = ProjectionFamily {
        labels,
        operators,
        ranks,
    };
    fam.verify_invariants()?;
    // Reconstruction: Σ λ·E_λ = A exactly.
    let mut rec = FieldMatrix::zero(d, d, order);
    for (lab, e) in fam.labels.iter().zip(&fam.operators) {
        rec = rec.add(&e.scale(&lab[0]))?;
    }
    if &rec != a {
        return Err(LinalgError::SelfCheckFailed {
            context: "eigenprojections do not reconstruct the operator".into(),
        });
    }
    Ok(fam)
}

/// Projections onto the eigenspaces of a verified finite-order operator,
/// labeled by the m-th roots of unity in exponent order. The working
/// cyclotomic order must contain all m-th roots of unity as powers of ζ_N.
pub fn finite_order_eigenprojections(
    a: &FieldMatrix,
    m: u32,
) -> Result<ProjectionFamily, LinalgError> {
    let order = a.order();
    if m == 0 || order % m != 0 {
        return Err(LinalgError::MissingRootsOfUnity { order, needed: m });
    }
    if !a.pow(m)?.is_identity() {
        return Err(LinalgError::NotFiniteOrder { power: m });
    }
    let values = roots_of_unity(order, m).map_err(LinalgError::Scalar)?;
    projections_for_eigenvalues(a, &values)
}

/// Refines two commuting projection families into the family of products
/// with concatenated labels. Commutation is checked exactly.
pub fn joint_refine(
    p: &ProjectionFamily,
    q: &ProjectionFamily,
) -> Result<ProjectionFamily, LinalgError> {
    for (i, ep) in p.operators.iter().enumerate() {
        for (j, eq) in q.operators.iter().enumerate() {
            if ep.is_zero() || eq.is_zero() {
                continue;
            }
            if ep.mul(eq)? != eq.mul(ep)? {
                return Err(LinalgError::NonCommuting {
                    context: format!("projection {i} of first family vs {j} of second"),
                });
            }
        }
    }
    let mut labels = Vec::with_capacity(p.len() * q.len());
    let mut operators = Vec::with_capacity(p.len() * q.len());
    let mut ranks = Vec::with_capacity(p.len() * q.len());
    for (lp, ep) in p.labels.iter().zip(&p.operators) {
        for (lq, eq) in q.labels.iter().zip(&q.operators) {
            let prod = ep.mul(eq)?;
            let mut lab = lp.clone();
            lab.extend(lq.iter().cloned());
            ranks.push(idempotent_rank(&prod)?);
            labels.push(lab);
            operators.push(prod);
        }
    }
    let fam = ProjectionFamily {
        labels,
        operators,
        ranks,
    };
    fam.verify_invariants()?;
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycNumber as C;

    #[test]
    fn identity_single_projection() {
        let id = FieldMatrix::identity(4, 3);
        let fam = finite_order_eigenprojections(&id, 1).unwrap();
        assert_eq!(fam.len(), 1);
        assert!(fam.operators()[0].is_identity());
        assert_eq!(fam.ranks(), &[4]);
    }

    #[test]
    fn diag_plus_minus_one() {
        let one = C::one(4);
        let m1 = C::from_integer(4, -1);
        let z = C::zero(4);
        let a = FieldMatrix::new(2, 2, 4, vec![one.clone(), z.clone(), z.clone(), m1]).unwrap();
        let fam = finite_order_eigenprojections(&a, 2).unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam.ranks(), &[1, 1]);
        assert_eq!(fam.operators()[0].at(0, 0), &C::one(4));
        assert!(fam.operators()[0].at(1, 1).is_zero());
        assert_eq!(fam.operators()[1].at(1, 1), &C::one(4));
    }

    #[test]
    fn missing_roots_of_unity() {
        let id = FieldMatrix::identity(2, 5);
        assert!(matches!(
            finite_order_eigenprojections(&id, 2),
            Err(LinalgError::MissingRootsOfUnity { order: 5, needed: 2 })
        ));
    }

    #[test]
    fn not_finite_order_detected() {
        let two = C::from_integer(4, 2);
        let m = FieldMatrix::new(1, 1, 4, vec![two]).unwrap();
        assert!(matches!(
            finite_order_eigenprojections(&m, 4),
            Err(LinalgError::NotFiniteOrder { power: 4 })
        ));
    }

    #[test]
    fn refine_with_identity_family_is_identity_refinement() {
        let one = C::one(4);
        let m1 = C::from_integer(4, -1);
        let z = C::zero(4);
        let a = FieldMatrix::new(2, 2, 4, vec![one, z.clone(), z.clone(), m1]).unwrap();
        let p = finite_order_eigenprojections(&FieldMatrix::identity(2, 4), 1).unwrap();
        let q = finite_order_eigenprojections(&a, 2).unwrap();
        let joint = joint_refine(&p, &q).unwrap();
        assert_eq!(joint.len(), 2);
        assert_eq!(joint.ranks(), q.ranks());
        // Refining a family with itself keeps the ranks on the diagonal.
        let selfjoint = joint_refine(&q, &q).unwrap();
        let diag: Vec<usize> = (0..2).map(|i| selfjoint.ranks()[i * 2 + i]).collect();
        assert_eq!(diag, q.ranks().to_vec());
        assert_eq!(selfjoint.ranks().iter().sum::<usize>(), 2);
    }

    #[test]
    fn non_commuting_rejected() {
        // Projections built from non-commuting operators.
        let one = C::one(4);
        let z = C::zero(4);
        // A = diag(1, -1); B = reflection about the line x=y has eigenvectors
        // (1,1) and (1,-1); AB ≠ BA.
        let a = FieldMatrix::new(
            2,
            2,
            4,
            vec![one.clone(), z.clone(), z.clone(), C::from_integer(4, -1)],
        )
        .unwrap();
        let b = FieldMatrix::new(2, 2, 4, vec![z.clone(), one.clone(), one.clone(), z.clone()]).unwrap();
        let pa = finite_order_eigenprojections(&a, 2).unwrap();
        let pb = finite_order_eigenprojections(&b, 2).unwrap();
        assert!(matches!(
            joint_refine(&pa, &pb),
            Err(LinalgError::NonCommuting { .. })
        ));
    }
}
