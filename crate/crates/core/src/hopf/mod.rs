//! The finite-dimensional Hopf algebra data model: structure constants over
//! Q(ζ_N), elements and functionals, harpoon actions, convolution, duality,
//! and antipode solving. Basis-indexed structure constants are the single
//! source of truth; everything else is derived from them.

mod antipode;
mod axioms;
mod dual;

pub use antipode::solve_antipode;
pub use axioms::verify_axioms;
pub use dual::{antipode_inverse, dual, op_cop};

use crate::cyclotomic::CycNumber;
use crate::linalg::{FieldMatrix, LinalgError, SparseTensor3};

#[derive(Debug, Clone, thiserror::Error)]
pub enum HopfError {
    #[error("degenerate algebra: dimension must be at least 1")]
    ZeroDimension,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("elements belong to different parent algebras")]
    ParentMismatch,
    #[error("no antipode: the left convolution-inverse system is inconsistent")]
    NoAntipode,
    #[error("antipode identity fails on the right at basis index {index}")]
    RightIdentityFails { index: usize },
    #[error("antipode matrix is not invertible")]
    AntipodeNotInvertible,
    #[error("structure error: {0}")]
    Structure(String),
}

/// A finite-dimensional Hopf algebra presented by structure constants.
///
/// `mult` is indexed (i, j, k): e_i · e_j = Σ_k m[i,j,k] e_k.
/// `comult` is indexed (k, i, j): Δ(e_k) = Σ_{i,j} c[k,i,j] e_i ⊗ e_j.
#[derive(Clone, Debug)]
pub struct FinHopfAlgebra {
    name: String,
    dim: usize,
    cyc_order: u32,
    mult: SparseTensor3,
    comult: SparseTensor3,
    unit: Vec<CycNumber>,
    counit: Vec<CycNumber>,
    antipode: Option<FieldMatrix>,
}

/// An element of H, as a coefficient vector tied to its parent algebra.
#[derive(Clone, Debug)]
pub struct HopfElement<'a> {
    pub algebra: &'a FinHopfAlgebra,
    pub coeffs: Vec<CycNumber>,
}

/// A functional in H*, as a covector tied to its parent algebra.
#[derive(Clone, Debug)]
pub struct HopfFunctional<'a> {
    pub algebra: &'a FinHopfAlgebra,
    pub coeffs: Vec<CycNumber>,
}

impl PartialEq for HopfElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.algebra, other.algebra) && self.coeffs == other.coeffs
    }
}

impl PartialEq for HopfFunctional<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.algebra, other.algebra) && self.coeffs == other.coeffs
    }
}

impl FinHopfAlgebra {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        cyc_order: u32,
        mult: SparseTensor3,
        comult: SparseTensor3,
        unit: Vec<CycNumber>,
        counit: Vec<CycNumber>,
    ) -> Result<Self, HopfError> {
        if dim == 0 {
            return Err(HopfError::ZeroDimension);
        }
        if mult.dims() != (dim, dim, dim) || comult.dims() != (dim, dim, dim) {
            return Err(HopfError::Structure(format!(
                "structure tensors must be {dim}x{dim}x{dim}"
            )));
        }
        if mult.order() != cyc_order || comult.order() != cyc_order {
            return Err(HopfError::Structure(
                "structure tensors must share the ambient cyclotomic order".into(),
            ));
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(HopfError::Structure(
                "unit and counit must have length dim".into(),
            ));
        }
        for v in unit.iter().chain(&counit) {
            if v.order() != cyc_order {
                return Err(HopfError::Structure(
                    "unit/counit scalars must share the ambient cyclotomic order".into(),
                ));
            }
        }
        Ok(FinHopfAlgebra {
            name: name.into(),
            dim,
            cyc_order,
            mult,
            comult,
            unit,
            counit,
            antipode: None,
        })
    }

    pub fn with_antipode(mut self, s: FieldMatrix) -> Result<Self, HopfError> {
        if s.rows() != self.dim || s.cols() != self.dim || s.order() != self.cyc_order {
            return Err(HopfError::Structure(
                "antipode matrix shape or order mismatch".into(),
            ));
        }
        self.antipode = Some(s);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cyc_order(&self) -> u32 {
        self.cyc_order
    }

    pub fn mult(&self) -> &SparseTensor3 {
        &self.mult
    }

    pub fn comult(&self) -> &SparseTensor3 {
        &self.comult
    }

    pub fn unit_vector(&self) -> &[CycNumber] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[CycNumber] {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&FieldMatrix> {
        self.antipode.as_ref()
    }

    pub fn zero_scalar(&self) -> CycNumber {
        CycNumber::zero(self.cyc_order)
    }

    pub fn one_scalar(&self) -> CycNumber {
        CycNumber::one(self.cyc_order)
    }

    pub fn element(&self, coeffs: Vec<CycNumber>) -> HopfElement<'_> {
        assert_eq!(coeffs.len(), self.dim, "element length must equal dim");
        HopfElement {
            algebra: self,
            coeffs,
        }
    }

    pub fn functional(&self, coeffs: Vec<CycNumber>) -> HopfFunctional<'_> {
        assert_eq!(coeffs.len(), self.dim, "functional length must equal dim");
        HopfFunctional {
            algebra: self,
            coeffs,
        }
    }

    pub fn basis_element(&self, k: usize) -> HopfElement<'_> {
        let mut coeffs = vec![self.zero_scalar(); self.dim];
        coeffs[k] = self.one_scalar();
        self.element(coeffs)
    }

    pub fn dual_basis_functional(&self, k: usize) -> HopfFunctional<'_> {
        let mut coeffs = vec![self.zero_scalar(); self.dim];
        coeffs[k] = self.one_scalar();
        self.functional(coeffs)
    }

    pub fn unit_element(&self) -> HopfElement<'_> {
        self.element(self.unit.clone())
    }

    pub fn counit_functional(&self) -> HopfFunctional<'_> {
        self.functional(self.counit.clone())
    }

    /// Product of coefficient vectors through the mult tensor.
    pub fn mul_vec(&self, u: &[CycNumber], v: &[CycNumber]) -> Vec<CycNumber> {
        let mut out = vec![self.zero_scalar(); self.dim];
        for (&(i, j, k), c) in self.mult.iter() {
            let a = &u[i as usize];
            if a.is_zero() {
                continue;
            }
            let b = &v[j as usize];
            if b.is_zero() {
                continue;
            }
            let t = &(a * b) * c;
            out[k as usize] = &out[k as usize] + &t;
        }
        out
    }

    /// ε(u) for a coefficient vector.
    pub fn counit_of(&self, u: &[CycNumber]) -> CycNumber {
        crate::linalg::dot(&self.counit, u)
    }

    /// Δ(u) as a dim×dim coefficient matrix T with Δ(u) = Σ T[i][j] e_i⊗e_j.
    pub fn comult_matrix(&self, u: &[CycNumber]) -> FieldMatrix {
        let mut t = FieldMatrix::zero(self.dim, self.dim, self.cyc_order);
        for (&(k, i, j), c) in self.comult.iter() {
            let a = &u[k as usize];
            if a.is_zero() {
                continue;
            }
            let v = a * c;
            let cur = t.at(i as usize, j as usize);
            *t.at_mut(i as usize, j as usize) = cur + &v;
        }
        t
    }

    /// Matrix of left multiplication by v: L(v) e_j = v·e_j.
    pub fn left_mult_matrix(&self, v: &[CycNumber]) -> FieldMatrix {
        let mut m = FieldMatrix::zero(self.dim, self.dim, self.cyc_order);
        for (&(i, j, k), c) in self.mult.iter() {
            let a = &v[i as usize];
            if a.is_zero() {
                continue;
            }
            let t = a * c;
            let cur = m.at(k as usize, j as usize);
            *m.at_mut(k as usize, j as usize) = cur + &t;
        }
        m
    }

    /// Matrix of right multiplication by v: R(v) e_i = e_i·v.
    pub fn right_mult_matrix(&self, v: &[CycNumber]) -> FieldMatrix {
        let mut m = FieldMatrix::zero(self.dim, self.dim, self.cyc_order);
        for (&(i, j, k), c) in self.mult.iter() {
            let a = &v[j as usize];
            if a.is_zero() {
                continue;
            }
            let t = a * c;
            let cur = m.at(k as usize, i as usize);
            *m.at_mut(k as usize, i as usize) = cur + &t;
        }
        m
    }

    /// β ⇀ a = Σ a₍₁₎ β(a₍₂₎).
    pub fn harpoon_left(
        beta: &HopfFunctional<'_>,
        a: &HopfElement<'_>,
    ) -> Result<Vec<CycNumber>, HopfError> {
        if !std::ptr::eq(beta.algebra, a.algebra) {
            return Err(HopfError::ParentMismatch);
        }
        let h = a.algebra;
        let mut out = vec![h.zero_scalar(); h.dim];
        for (&(k, i, j), c) in h.comult.iter() {
            let ak = &a.coeffs[k as usize];
            if ak.is_zero() {
                continue;
            }
            let bj = &beta.coeffs[j as usize];
            if bj.is_zero() {
                continue;
            }
            let t = &(ak * bj) * c;
            out[i as usize] = &out[i as usize] + &t;
        }
        Ok(out)
    }

    /// a ↼ β = Σ β(a₍₁₎) a₍₂₎.
    pub fn harpoon_right(
        a: &HopfElement<'_>,
        beta: &HopfFunctional<'_>,
    ) -> Result<Vec<CycNumber>, HopfError> {
        if !std::ptr::eq(beta.algebra, a.algebra) {
            return Err(HopfError::ParentMismatch);
        }
        let h = a.algebra;
        let mut out = vec![h.zero_scalar(); h.dim];
        for (&(k, i, j), c) in h.comult.iter() {
            let ak = &a.coeffs[k as usize];
            if ak.is_zero() {
                continue;
            }
            let bi = &beta.coeffs[i as usize];
            if bi.is_zero() {
                continue;
            }
            let t = &(ak * bi) * c;
            out[j as usize] = &out[j as usize] + &t;
        }
        Ok(out)
    }

    /// Convolution product of functionals: (β★γ)(h) = Σ β(h₁)γ(h₂).
    pub fn convolve(&self, beta: &[CycNumber], gamma: &[CycNumber]) -> Vec<CycNumber> {
        let mut out = vec![self.zero_scalar(); self.dim];
        for (&(k, i, j), c) in self.comult.iter() {
            let b = &beta[i as usize];
            if b.is_zero() {
                continue;
            }
            let g = &gamma[j as usize];
            if g.is_zero() {
                continue;
            }
            let t = &(b * g) * c;
            out[k as usize] = &out[k as usize] + &t;
        }
        out
    }

    /// Δ²(e_k) = (Δ⊗id)Δ(e_k) as a sparse list of ((u,v,w), scalar) with
    /// legs u⊗v⊗w. Coassociativity makes the bracketing irrelevant.
    pub fn delta2_basis(&self, k: usize) -> Vec<((u32, u32, u32), CycNumber)> {
        let mut out: std::collections::BTreeMap<(u32, u32, u32), CycNumber> =
            std::collections::BTreeMap::new();
        let grouped = self.comult.grouped_by_first();
        for &(m, w, c1) in &grouped[k] {
            for &(u, v, c2) in &grouped[m as usize] {
                let val = c1 * c2;
                let entry = out.entry((u, v, w));
                match entry {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get().try_add(&val).expect("uniform order");
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if !val.is_zero() {
                            e.insert(val);
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// The whole algebra re-expressed over Q(ζ_M); requires N | M.
    pub fn coerce_order(&self, new_order: u32) -> Result<Self, HopfError> {
        let mult = self.mult.coerce_order(new_order)?;
        let comult = self.comult.coerce_order(new_order)?;
        let coerce_vec = |v: &[CycNumber]| -> Result<Vec<CycNumber>, LinalgError> {
            v.iter()
                .map(|e| e.coerce(new_order).map_err(LinalgError::Scalar))
                .collect()
        };
        let unit = coerce_vec(&self.unit)?;
        let counit = coerce_vec(&self.counit)?;
        let mut out = FinHopfAlgebra::new(
            self.name.clone(),
            self.dim,
            new_order,
            mult,
            comult,
            unit,
            counit,
        )?;
        if let Some(s) = &self.antipode {
            out.antipode = Some(s.coerce_order(new_order)?);
        }
        Ok(out)
    }

    /// Replaces the antipode; internal to constructions and solving.
    pub(crate) fn set_antipode(&mut self, s: FieldMatrix) {
        debug_assert_eq!(s.rows(), self.dim);
        debug_assert_eq!(s.order(), self.cyc_order);
        self.antipode = Some(s);
    }

    /// Drops the antipode, leaving the bialgebra; used to exercise solving.
    pub fn without_antipode(&self) -> Self {
        let mut h = self.clone();
        h.antipode = None;
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_algebra, taft};

    #[test]
    fn zero_dimension_rejected() {
        let t = SparseTensor3::new((0, 0, 0), 1);
        let c = SparseTensor3::new((0, 0, 0), 1);
        assert!(matches!(
            FinHopfAlgebra::new("empty", 0, 1, t, c, vec![], vec![]),
            Err(HopfError::ZeroDimension)
        ));
    }

    #[test]
    fn counit_harpoon_is_identity() {
        let h = taft(3, 1).unwrap();
        let eps = h.counit_functional();
        for k in 0..h.dim() {
            let a = h.basis_element(k);
            let out = FinHopfAlgebra::harpoon_left(&eps, &a).unwrap();
            assert_eq!(out, a.coeffs, "ε ⇀ e_{k} = e_{k}");
            let out = FinHopfAlgebra::harpoon_right(&a, &eps).unwrap();
            assert_eq!(out, a.coeffs, "e_{k} ↼ ε = e_{k}");
        }
    }

    #[test]
    fn harpoon_on_unit_gives_beta_of_one() {
        let h = group_algebra(&[4]).unwrap();
        let one = h.unit_element();
        for t in 0..h.dim() {
            let beta = h.dual_basis_functional(t);
            let out = FinHopfAlgebra::harpoon_left(&beta, &one).unwrap();
            // β ⇀ 1 = β(1)·1
            let beta_of_one = crate::linalg::dot(&beta.coeffs, h.unit_vector());
            let expect: Vec<_> = h
                .unit_vector()
                .iter()
                .map(|u| u * &beta_of_one)
                .collect();
            assert_eq!(out, expect);
        }
    }

    #[test]
    fn parent_mismatch_detected() {
        let h1 = group_algebra(&[3]).unwrap();
        let h2 = group_algebra(&[3]).unwrap();
        let beta = h1.counit_functional();
        let a = h2.basis_element(0);
        assert!(matches!(
            FinHopfAlgebra::harpoon_left(&beta, &a),
            Err(HopfError::ParentMismatch)
        ));
    }
}
