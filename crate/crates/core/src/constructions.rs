//! Builders for the bundled algebra families: group algebras of finite
//! abelian groups, Taft algebras T(ξ), the Drinfeld double, and the Hopf
//! projection T(ξ) → k[a] used by the biproduct verifier.
//!
//! Basis orderings are fixed so emitted structure files are reproducible:
//! group algebras enumerate tuples with the first invariant factor as the
//! most significant digit; Taft algebras order x^i a^j lexicographically in
//! (i, j); the double orders f-index major.

use crate::cyclotomic::{gcd_u64, lcm_u64, CycNumber};
use crate::hopf::{antipode_inverse, FinHopfAlgebra, HopfError};
use crate::linalg::{FieldMatrix, SparseTensor3};

#[derive(Debug, Clone, thiserror::Error)]
pub enum ConstructError {
    #[error("invariant factor list must be nonempty and positive")]
    BadFactors,
    #[error("taft parameter n must be at least 2")]
    BadTaftOrder,
    #[error("xi exponent {exponent} is not coprime to {n}: xi must be a primitive n-th root")]
    NotPrimitive { exponent: u32, n: u32 },
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// The group algebra k[Z_{f1} × … × Z_{fr}] with cyclotomic order lcm(f_i),
/// so all characters exist in-field. Basis = group elements; Δ(g) = g⊗g,
/// S(g) = g⁻¹, ε(g) = 1.
pub fn group_algebra(invariant_factors: &[u32]) -> Result<FinHopfAlgebra, ConstructError> {
    if invariant_factors.is_empty() || invariant_factors.iter().any(|&f| f == 0) {
        return Err(ConstructError::BadFactors);
    }
    let factors = invariant_factors.to_vec();
    let dim: usize = factors.iter().map(|&f| f as usize).product();
    let order = factors
        .iter()
        .fold(1u64, |acc, &f| lcm_u64(acc, f as u64)) as u32;
    let one = CycNumber::one(order);

    let index_of = |tuple: &[u32]| -> usize {
        let mut idx = 0usize;
        for (g, &f) in tuple.iter().zip(&factors) {
            idx = idx * f as usize + *g as usize;
        }
        idx
    };
    let tuple_of = |mut idx: usize| -> Vec<u32> {
        let mut t = vec![0u32; factors.len()];
        for pos in (0..factors.len()).rev() {
            let f = factors[pos] as usize;
            t[pos] = (idx % f) as u32;
            idx /= f;
        }
        t
    };

    let mut mult = SparseTensor3::new((dim, dim, dim), order);
    let mut comult = SparseTensor3::new((dim, dim, dim), order);
    let mut antipode = FieldMatrix::zero(dim, dim, order);
    for i in 0..dim {
        let gi = tuple_of(i);
        for j in 0..dim {
            let gj = tuple_of(j);
            let sum: Vec<u32> = gi
                .iter()
                .zip(&gj)
                .zip(&factors)
                .map(|((a, b), &f)| (a + b) % f)
                .collect();
            mult.set((i as u32, j as u32, index_of(&sum) as u32), one.clone())
                .map_err(HopfError::Linalg)?;
        }
        comult
            .set((i as u32, i as u32, i as u32), one.clone())
            .map_err(HopfError::Linalg)?;
        let inv: Vec<u32> = gi
            .iter()
            .zip(&factors)
            .map(|(a, &f)| (f - a) % f)
            .collect();
        *antipode.at_mut(index_of(&inv), i) = one.clone();
    }
    let mut unit = vec![CycNumber::zero(order); dim];
    unit[0] = one.clone();
    let counit = vec![one.clone(); dim];

    let name = format!(
        "k[Z{}]",
        factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("xZ")
    );
    let mut h = FinHopfAlgebra::new(name, dim, order, mult, comult, unit, counit)?;
    h.set_antipode(antipode);
    Ok(h)
}

/// Gaussian binomial coefficient [n; k]_q by the q-Pascal recurrence.
fn gaussian_binomial(n: usize, k: usize, q: &CycNumber) -> CycNumber {
    let order = q.order();
    if k > n {
        return CycNumber::zero(order);
    }
    // row[k] = [m; k]_q, grown row by row.
    let mut row = vec![CycNumber::one(order)];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(CycNumber::one(order));
        for kk in 1..row.len() {
            // [m; kk] = [m−1; kk−1] + q^kk [m−1; kk]
            let qk = q.pow(kk as i64).expect("q is invertible");
            next.push(&row[kk - 1] + &(&qk * &row[kk]));
        }
        next.push(CycNumber::one(order));
        row = next;
    }
    row[k].clone()
}

/// The Taft algebra T(ξ) with ξ = ζ_n^xiExponent primitive: generated by a
/// group-like a and x with aⁿ = 1, ax = ξxa, xⁿ = 0, Δ(x) = x⊗a + 1⊗x.
/// Basis x^i a^j at index i·n + j; dim n²; cyclotomic order 2n.
pub fn taft(n: u32, xi_exponent: u32) -> Result<FinHopfAlgebra, ConstructError> {
    if n < 2 {
        return Err(ConstructError::BadTaftOrder);
    }
    if gcd_u64(xi_exponent as u64, n as u64) != 1 {
        return Err(ConstructError::NotPrimitive {
            exponent: xi_exponent,
            n,
        });
    }
    let order = 2 * n;
    let dim = (n * n) as usize;
    let xi = CycNumber::zeta_pow(order, 2 * xi_exponent as i64);
    let idx = |i: u32, j: u32| -> u32 { i * n + j };

    let mut mult = SparseTensor3::new((dim, dim, dim), order);
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                if i + s >= n {
                    continue; // xⁿ = 0 truncates
                }
                for t in 0..n {
                    // (x^i a^j)(x^s a^t) = ξ^{js} x^{i+s} a^{j+t}
                    let scalar = xi.pow((j as i64) * (s as i64)).expect("root of unity");
                    mult.set((idx(i, j), idx(s, t), idx(i + s, (j + t) % n)), scalar)
                        .map_err(HopfError::Linalg)?;
                }
            }
        }
    }

    let mut comult = SparseTensor3::new((dim, dim, dim), order);
    for i in 0..n {
        for j in 0..n {
            for k in 0..=i {
                // Δ(x^i a^j) = Σ_k [i;k]_ξ (x^k a^j) ⊗ (x^{i−k} a^{k+j})
                let coeff = gaussian_binomial(i as usize, k as usize, &xi);
                comult
                    .set(
                        (idx(i, j), idx(k, j), idx(i - k, (k + j) % n)),
                        coeff,
                    )
                    .map_err(HopfError::Linalg)?;
            }
        }
    }

    let mut unit = vec![CycNumber::zero(order); dim];
    unit[0] = CycNumber::one(order);
    let mut counit = vec![CycNumber::zero(order); dim];
    for j in 0..n {
        counit[idx(0, j) as usize] = CycNumber::one(order);
    }

    // S(x^i a^j) = (−1)^i ξ^{−i(i−1)/2 − ij} x^i a^{−i−j}
    let mut antipode = FieldMatrix::zero(dim, dim, order);
    for i in 0..n {
        for j in 0..n {
            let e = -((i as i64) * (i as i64 - 1) / 2) - (i as i64) * (j as i64);
            let mut scalar = xi.pow(e).expect("root of unity");
            if i % 2 == 1 {
                scalar = scalar.neg();
            }
            let target = idx(i, ((2 * n - i - j) % n) as u32);
            *antipode.at_mut(target as usize, idx(i, j) as usize) = scalar;
        }
    }

    let mut h = FinHopfAlgebra::new(
        format!("taft({n},{xi_exponent})"),
        dim,
        order,
        mult,
        comult,
        unit,
        counit,
    )?;
    h.set_antipode(antipode);
    Ok(h)
}

/// The Drinfeld double D(H) on dual(H)^cop ⊗ H, f-index major, with the
/// standard crossed multiplication
/// (f⋈h)(f′⋈h′) = Σ f·(h₍₁₎ ⇀ f′ ↼ S⁻¹(h₍₃₎)) ⋈ h₍₂₎h′
/// and the tensor-product comultiplication. The cyclotomic order is
/// inherited from the input.
pub fn drinfeld_double(h: &FinHopfAlgebra) -> Result<FinHopfAlgebra, ConstructError> {
    let d = h.dim();
    let dd = d * d;
    let order = h.cyc_order();
    let s_inv = antipode_inverse(h)?;
    let zero = CycNumber::zero(order);
    let didx = |f: usize, e: usize| -> u32 { (f * d + e) as u32 };

    // Pair products of H as sparse lists.
    let mut pair_products: Vec<Vec<(u32, CycNumber)>> = vec![Vec::new(); d * d];
    for (&(i, j, k), c) in h.mult().iter() {
        pair_products[i as usize * d + j as usize].push((k, c.clone()));
    }

    // Multiplication tensor of the double.
    let mut mult = SparseTensor3::new((dd, dd, dd), order);
    for t in 0..d {
        let delta2 = h.delta2_basis(t);
        for s in 0..d {
            let row_pair = didx(s, t);
            for sp in 0..d {
                // φ = h₁ ⇀ f_{sp} ↼ S⁻¹(h₃), f_s·φ in H*, then h₂·h'.
                for &((u, w, v), ref c123) in &delta2 {
                    // ψ = f_{sp} ∘ L(S⁻¹ e_v): ψ_y = Σ_i (S⁻¹)_{i,v} [e_i e_y]_{sp}
                    let mut psi = vec![zero.clone(); d];
                    for (&(i, y, k), mv) in h.mult().iter() {
                        if k as usize != sp {
                            continue;
                        }
                        let svi = s_inv.at(i as usize, v as usize);
                        if svi.is_zero() {
                            continue;
                        }
                        psi[y as usize] = &psi[y as usize] + &(svi * mv);
                    }
                    // φ = ψ ∘ R(e_u): φ_y = Σ_k [e_y e_u]_k ψ_k
                    let mut phi = vec![zero.clone(); d];
                    for (&(y, j, k), mv) in h.mult().iter() {
                        if j != u {
                            continue;
                        }
                        let pk = &psi[k as usize];
                        if pk.is_zero() {
                            continue;
                        }
                        phi[y as usize] = &phi[y as usize] + &(mv * pk);
                    }
                    // f_s · φ in H*: out_k = Σ_j c_k^{s,j} φ_j
                    let mut fpart = vec![zero.clone(); d];
                    for (&(k, i, j), cv) in h.comult().iter() {
                        if i as usize != s {
                            continue;
                        }
                        let pj = &phi[j as usize];
                        if pj.is_zero() {
                            continue;
                        }
                        fpart[k as usize] = &fpart[k as usize] + &(cv * pj);
                    }
                    for tp in 0..d {
                        let col_pair = didx(sp, tp);
                        for (kf, fv) in fpart.iter().enumerate() {
                            if fv.is_zero() {
                                continue;
                            }
                            let scaled = &(c123 * fv);
                            for &(kh, ref mw) in &pair_products[w as usize * d + tp] {
                                mult.add_to(
                                    (row_pair, col_pair, didx(kf, kh as usize)),
                                    &(scaled * mw),
                                )
                                .map_err(HopfError::Linalg)?;
                            }
                        }
                    }
                }
            }
        }
    }

    // Tensor-product comultiplication with the cop flip on the dual leg:
    // Δ(f_s ⋈ e_t) = Σ m_{ij}^s c_t^{uv} (f_j ⋈ e_u) ⊗ (f_i ⋈ e_v).
    let mut comult = SparseTensor3::new((dd, dd, dd), order);
    for (&(i, j, sidx), mval) in h.mult().iter() {
        for (&(t, u, v), cval) in h.comult().iter() {
            comult
                .add_to(
                    (
                        didx(sidx as usize, t as usize),
                        didx(j as usize, u as usize),
                        didx(i as usize, v as usize),
                    ),
                    &(mval * cval),
                )
                .map_err(HopfError::Linalg)?;
        }
    }

    // Unit ε ⋈ 1; counit (f ⋈ h) ↦ f(1)ε(h).
    let mut unit = vec![zero.clone(); dd];
    let mut counit = vec![zero.clone(); dd];
    for s in 0..d {
        for t in 0..d {
            let uv = &h.counit_vector()[s] * &h.unit_vector()[t];
            if !uv.is_zero() {
                unit[(s * d + t) as usize] = uv;
            }
            let cv = &h.unit_vector()[s] * &h.counit_vector()[t];
            if !cv.is_zero() {
                counit[(s * d + t) as usize] = cv;
            }
        }
    }

    let mut double = FinHopfAlgebra::new(
        format!("D({})", h.name()),
        dd,
        order,
        mult,
        comult,
        unit,
        counit,
    )?;

    // Antipode: S_D(f ⋈ h) = (1 ⋈ S(h)) · ((f∘S⁻¹) ⋈ 1), computed through
    // the double's own multiplication.
    let s_h = h
        .antipode()
        .ok_or_else(|| HopfError::Structure("double needs an antipode".into()))?;
    let mut dbl_pairs: Vec<Vec<(u32, CycNumber)>> = vec![Vec::new(); dd * dd];
    for (&(i, j, k), c) in double.mult().iter() {
        dbl_pairs[i as usize * dd + j as usize].push((k, c.clone()));
    }
    let mut antipode = FieldMatrix::zero(dd, dd, order);
    for s in 0..d {
        for t in 0..d {
            // vec1 = ε ⋈ S(e_t); vec2 = (f_s ∘ S⁻¹) ⋈ 1.
            let mut vec1: Vec<(usize, CycNumber)> = Vec::new();
            for sp in 0..d {
                let es = &h.counit_vector()[sp];
                if es.is_zero() {
                    continue;
                }
                for tp in 0..d {
                    let sv = s_h.at(tp, t);
                    if sv.is_zero() {
                        continue;
                    }
                    vec1.push((sp * d + tp, es * sv));
                }
            }
            let mut vec2: Vec<(usize, CycNumber)> = Vec::new();
            for sp in 0..d {
                let fs = s_inv.at(s, sp);
                if fs.is_zero() {
                    continue;
                }
                for tp in 0..d {
                    let uv = &h.unit_vector()[tp];
                    if uv.is_zero() {
                        continue;
                    }
                    vec2.push((sp * d + tp, fs * uv));
                }
            }
            for (i1, c1) in &vec1 {
                for (i2, c2) in &vec2 {
                    let c12 = c1 * c2;
                    for &(k, ref mv) in &dbl_pairs[i1 * dd + i2] {
                        let cur = antipode.at(k as usize, (s * d + t) as usize);
                        *antipode.at_mut(k as usize, (s * d + t) as usize) =
                            cur + &(&c12 * mv);
                    }
                }
            }
        }
    }
    double.set_antipode(antipode);
    Ok(double)
}

/// The Hopf projection π: T(ξ) → k[a] ≅ k[Z_n] with π(x^i a^j) = δ_{i,0} a^j,
/// and the inclusion γ; π∘γ = id. Both matrices act over Q(ζ_{2n}), and the
/// target group algebra is returned re-expressed over that order.
pub struct TaftProjection {
    pub b: FinHopfAlgebra,
    pub pi: FieldMatrix,
    pub gamma: FieldMatrix,
}

pub fn taft_projection(n: u32, xi_exponent: u32) -> Result<TaftProjection, ConstructError> {
    if n < 2 {
        return Err(ConstructError::BadTaftOrder);
    }
    if gcd_u64(xi_exponent as u64, n as u64) != 1 {
        return Err(ConstructError::NotPrimitive {
            exponent: xi_exponent,
            n,
        });
    }
    let order = 2 * n;
    let dim = (n * n) as usize;
    let b = group_algebra(&[n])?.coerce_order(order)?;
    let one = CycNumber::one(order);
    let mut pi = FieldMatrix::zero(n as usize, dim, order);
    let mut gamma = FieldMatrix::zero(dim, n as usize, order);
    for j in 0..n as usize {
        pi.at_mut(j, j).clone_from(&one); // x^0 a^j ↦ a^j
        gamma.at_mut(j, j).clone_from(&one); // a^j ↦ x^0 a^j
    }
    Ok(TaftProjection { b, pi, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_axioms;

    #[test]
    fn group_algebra_axioms_and_shape() {
        for factors in [vec![1u32], vec![9], vec![3, 3], vec![2, 4]] {
            let h = group_algebra(&factors).unwrap();
            let dim: usize = factors.iter().map(|&f| f as usize).product();
            assert_eq!(h.dim(), dim);
            assert!(verify_axioms(&h).all_passed(), "axioms for {:?}", factors);
        }
        // The base field as a Hopf algebra: S = id.
        let k = group_algebra(&[1]).unwrap();
        assert!(k.antipode().unwrap().is_identity());
    }

    #[test]
    fn taft_requires_primitive_xi() {
        assert!(matches!(
            taft(4, 2),
            Err(ConstructError::NotPrimitive { exponent: 2, n: 4 })
        ));
        assert!(taft(1, 1).is_err());
    }

    #[test]
    fn taft_axioms_small() {
        for (n, e) in [(2u32, 1u32), (3, 1), (3, 2), (5, 2)] {
            let h = taft(n, e).unwrap();
            assert_eq!(h.dim(), (n * n) as usize);
            assert_eq!(h.cyc_order(), 2 * n);
            let report = verify_axioms(&h);
            assert!(report.all_passed(), "taft({n},{e}): {:?}", report.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn taft_antipode_formulas() {
        // S(x) = −x·a⁻¹ = −x a^{n−1}, S(a) = a^{n−1}.
        let n = 3u32;
        let h = taft(n, 1).unwrap();
        let s = h.antipode().unwrap();
        let idx = |i: u32, j: u32| (i * n + j) as usize;
        // column of x = (1,0): single entry −1 at (1, n−1)
        for r in 0..h.dim() {
            let want_minus_one = r == idx(1, n - 1);
            let e = s.at(r, idx(1, 0));
            if want_minus_one {
                assert_eq!(e, &CycNumber::from_integer(h.cyc_order(), -1));
            } else {
                assert!(e.is_zero());
            }
        }
        // column of a = (0,1): single entry 1 at (0, n−1)
        for r in 0..h.dim() {
            let e = s.at(r, idx(0, 1));
            if r == idx(0, n - 1) {
                assert!(e.is_one());
            } else {
                assert!(e.is_zero());
            }
        }
    }

    #[test]
    fn sweedler_s2_is_not_identity() {
        let h = taft(2, 1).unwrap();
        let s2 = h.antipode().unwrap().pow(2).unwrap();
        assert!(!s2.is_identity());
        assert_eq!(h.antipode().unwrap().operator_order(8).unwrap(), 4);
    }

    #[test]
    fn s4_scales_x_by_xi_squared() {
        // S⁴(x) = ξ²x, S⁴(a) = a.
        let n = 5u32;
        let e = 2u32;
        let h = taft(n, e).unwrap();
        let s4 = h.antipode().unwrap().pow(4).unwrap();
        let idx = |i: u32, j: u32| (i * n + j) as usize;
        let xi = CycNumber::zeta_pow(h.cyc_order(), 2 * e as i64);
        let xi2 = xi.pow(2).unwrap();
        assert_eq!(s4.at(idx(1, 0), idx(1, 0)), &xi2);
        assert!(s4.at(idx(0, 1), idx(0, 1)).is_one());
    }

    #[test]
    fn double_of_z2_passes_axioms() {
        let h = group_algebra(&[2]).unwrap();
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.dim(), 4);
        let report = verify_axioms(&d);
        assert!(
            report.all_passed(),
            "double of k[Z2]: {:?}",
            report.failures().collect::<Vec<_>>()
        );
        // Semisimple: Tr(S²) = 4 ≠ 0.
        let s2 = d.antipode().unwrap().pow(2).unwrap();
        assert_eq!(s2.trace(), CycNumber::from_integer(d.cyc_order(), 4));
    }

    #[test]
    fn double_of_sweedler_passes_axioms() {
        let h = taft(2, 1).unwrap();
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.dim(), 16);
        let report = verify_axioms(&d);
        assert!(
            report.all_passed(),
            "double of sweedler: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }

    #[test]
    fn taft_projection_is_hopf_projection() {
        let n = 3u32;
        let h = taft(n, 1).unwrap();
        let tp = taft_projection(n, 1).unwrap();
        // π∘γ = id on k[Z_n].
        assert!(tp.pi.mul(&tp.gamma).unwrap().is_identity());
        // π is an algebra map on all basis pairs: π(uv) = π(u)π(v).
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let mut ei = vec![CycNumber::zero(h.cyc_order()); h.dim()];
                ei[i] = CycNumber::one(h.cyc_order());
                let mut ej = vec![CycNumber::zero(h.cyc_order()); h.dim()];
                ej[j] = CycNumber::one(h.cyc_order());
                let prod = h.mul_vec(&ei, &ej);
                let lhs = tp.pi.apply(&prod).unwrap();
                let rhs = tp
                    .b
                    .mul_vec(&tp.pi.apply(&ei).unwrap(), &tp.pi.apply(&ej).unwrap());
                assert_eq!(lhs, rhs, "π multiplicative at ({i},{j})");
            }
        }
        // π is a coalgebra map: Δ_B∘π = (π⊗π)∘Δ_H on every basis element.
        for k in 0..h.dim() {
            let mut ek = vec![CycNumber::zero(h.cyc_order()); h.dim()];
            ek[k] = CycNumber::one(h.cyc_order());
            let t = h.comult_matrix(&ek);
            let lhs = tp.b.comult_matrix(&tp.pi.apply(&ek).unwrap());
            let rhs = FieldMatrix::two_leg_apply(&tp.pi, &t, &tp.pi).unwrap();
            assert_eq!(lhs, rhs, "π comultiplicative at {k}");
        }
    }
}
