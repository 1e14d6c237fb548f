//! Dual, opposite and co-opposite Hopf algebras, by transposing or flipping
//! structure constants.

use crate::linalg::{inverse, FieldMatrix, SparseTensor3};

use super::{FinHopfAlgebra, HopfError};

/// The dual Hopf algebra H*: multiplication and comultiplication swap roles
/// (transposed), unit and counit swap, the antipode transposes.
pub fn dual(h: &FinHopfAlgebra) -> Result<FinHopfAlgebra, HopfError> {
    let d = h.dim();
    let order = h.cyc_order();
    let mut mult = SparseTensor3::new((d, d, d), order);
    for (&(k, i, j), c) in h.comult().iter() {
        // f_i f_j = Σ_k c_k^{ij} f_k
        mult.set((i, j, k), c.clone())?;
    }
    let mut comult = SparseTensor3::new((d, d, d), order);
    for (&(i, j, k), c) in h.mult().iter() {
        // Δ*(f_k) = Σ_{ij} m_{ij}^k f_i ⊗ f_j
        comult.set((k, i, j), c.clone())?;
    }
    let mut out = FinHopfAlgebra::new(
        format!("dual({})", h.name()),
        d,
        order,
        mult,
        comult,
        h.counit_vector().to_vec(),
        h.unit_vector().to_vec(),
    )?;
    if let Some(s) = h.antipode() {
        out.set_antipode(s.transpose());
    }
    Ok(out)
}

/// Opposite/co-opposite variants: flips the multiplication and/or the
/// comultiplication. Flipping exactly one of the two replaces the antipode
/// by its inverse; flipping both (or neither) keeps it.
pub fn op_cop(h: &FinHopfAlgebra, flip_mult: bool, flip_comult: bool) -> Result<FinHopfAlgebra, HopfError> {
    let d = h.dim();
    let order = h.cyc_order();
    let mut mult = SparseTensor3::new((d, d, d), order);
    for (&(i, j, k), c) in h.mult().iter() {
        let idx = if flip_mult { (j, i, k) } else { (i, j, k) };
        mult.set(idx, c.clone())?;
    }
    let mut comult = SparseTensor3::new((d, d, d), order);
    for (&(k, i, j), c) in h.comult().iter() {
        let idx = if flip_comult { (k, j, i) } else { (k, i, j) };
        comult.set(idx, c.clone())?;
    }
    let suffix = match (flip_mult, flip_comult) {
        (false, false) => String::new(),
        (true, false) => "^op".into(),
        (false, true) => "^cop".into(),
        (true, true) => "^op,cop".into(),
    };
    let mut out = FinHopfAlgebra::new(
        format!("{}{}", h.name(), suffix),
        d,
        order,
        mult,
        comult,
        h.unit_vector().to_vec(),
        h.counit_vector().to_vec(),
    )?;
    if let Some(s) = h.antipode() {
        let new_s = if flip_mult ^ flip_comult {
            inverse(s).ok_or(HopfError::AntipodeNotInvertible)?
        } else {
            s.clone()
        };
        out.set_antipode(new_s);
    }
    Ok(out)
}

/// The antipode inverse as a matrix, for constructions that need S⁻¹.
pub fn antipode_inverse(h: &FinHopfAlgebra) -> Result<FieldMatrix, HopfError> {
    let s = h
        .antipode()
        .ok_or_else(|| HopfError::Structure("antipode required".into()))?;
    inverse(s).ok_or(HopfError::AntipodeNotInvertible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra, taft};
    use crate::hopf::verify_axioms;

    #[test]
    fn dual_passes_axioms_and_preserves_dim() {
        for h in [group_algebra(&[4]).unwrap(), taft(3, 1).unwrap()] {
            let d = dual(&h).unwrap();
            assert_eq!(d.dim(), h.dim());
            assert!(verify_axioms(&d).all_passed(), "dual of {}", h.name());
        }
    }

    #[test]
    fn double_dual_is_identity_on_structure() {
        let h = taft(3, 1).unwrap();
        let dd = dual(&dual(&h).unwrap()).unwrap();
        assert_eq!(dd.mult(), h.mult());
        assert_eq!(dd.comult(), h.comult());
        assert_eq!(dd.unit_vector(), h.unit_vector());
        assert_eq!(dd.counit_vector(), h.counit_vector());
        assert_eq!(dd.antipode(), h.antipode());
    }

    #[test]
    fn trace_s2_equal_on_dual() {
        let h = taft(5, 1).unwrap();
        let d = dual(&h).unwrap();
        let s2 = h.antipode().unwrap().pow(2).unwrap();
        let s2d = d.antipode().unwrap().pow(2).unwrap();
        assert_eq!(s2.trace(), s2d.trace());
    }

    #[test]
    fn flips_on_commutative_cocommutative_are_identity() {
        let h = group_algebra(&[6]).unwrap();
        let f = op_cop(&h, true, true).unwrap();
        assert_eq!(f.mult(), h.mult());
        assert_eq!(f.comult(), h.comult());
        assert_eq!(f.antipode(), h.antipode());
    }

    #[test]
    fn cop_of_taft_passes_axioms_with_inverted_antipode() {
        let h = taft(3, 1).unwrap();
        let c = op_cop(&h, false, true).unwrap();
        assert!(verify_axioms(&c).all_passed());
        // The cop antipode is the inverse of the original.
        let prod = h.antipode().unwrap().mul(c.antipode().unwrap()).unwrap();
        assert!(prod.is_identity());
    }

    #[test]
    fn double_flip_is_involutive() {
        let h = taft(3, 2).unwrap();
        let once = op_cop(&h, true, true).unwrap();
        let twice = op_cop(&once, true, true).unwrap();
        assert_eq!(twice.mult(), h.mult());
        assert_eq!(twice.comult(), h.comult());
        assert_eq!(twice.antipode(), h.antipode());
    }
}
