//! Sparse order-3 tensors over Q(ζ_N); the storage format for structure
//! constants.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNumber;

use super::LinalgError;

#[derive(Clone, Debug, PartialEq)]
pub struct SparseTensor3 {
    dims: (usize, usize, usize),
    order: u32,
    entries: BTreeMap<(u32, u32, u32), CycNumber>,
}

impl SparseTensor3 {
    pub fn new(dims: (usize, usize, usize), order: u32) -> Self {
        SparseTensor3 {
            dims,
            order,
            entries: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn check_index(&self, idx: (u32, u32, u32)) -> Result<(), LinalgError> {
        if (idx.0 as usize) < self.dims.0 && (idx.1 as usize) < self.dims.1 && (idx.2 as usize) < self.dims.2 {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                context: format!("index {idx:?} outside tensor dims {:?}", self.dims),
            })
        }
    }

    /// Sets the entry; zero values are removed, never stored.
    pub fn set(&mut self, idx: (u32, u32, u32), value: CycNumber) -> Result<(), LinalgError> {
        self.check_index(idx)?;
        if value.order() != self.order {
            return Err(LinalgError::MixedOrders {
                expected: self.order,
                found: value.order(),
            });
        }
        if value.is_zero() {
            self.entries.remove(&idx);
        } else {
            self.entries.insert(idx, value);
        }
        Ok(())
    }

    /// Adds into the entry, dropping it if the sum cancels.
    pub fn add_to(&mut self, idx: (u32, u32, u32), value: &CycNumber) -> Result<(), LinalgError> {
        self.check_index(idx)?;
        if value.is_zero() {
            return Ok(());
        }
        let next = match self.entries.get(&idx) {
            Some(cur) => cur.try_add(value).map_err(LinalgError::Scalar)?,
            None => value.clone(),
        };
        if next.is_zero() {
            self.entries.remove(&idx);
        } else {
            self.entries.insert(idx, next);
        }
        Ok(())
    }

    pub fn get(&self, idx: (u32, u32, u32)) -> Option<&CycNumber> {
        self.entries.get(&idx)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32, u32), &CycNumber)> {
        self.entries.iter()
    }

    /// Entries grouped by the first index: grouped[i] lists (j, k, value).
    pub fn grouped_by_first(&self) -> Vec<Vec<(u32, u32, &CycNumber)>> {
        let mut out = vec![Vec::new(); self.dims.0];
        for (&(i, j, k), v) in &self.entries {
            out[i as usize].push((j, k, v));
        }
        out
    }

    /// Entries grouped by the last index: grouped[k] lists (i, j, value).
    pub fn grouped_by_last(&self) -> Vec<Vec<(u32, u32, &CycNumber)>> {
        let mut out = vec![Vec::new(); self.dims.2];
        for (&(i, j, k), v) in &self.entries {
            out[k as usize].push((i, j, v));
        }
        out
    }

    /// Rescales all values into Q(ζ_M); requires N | M.
    pub fn coerce_order(&self, new_order: u32) -> Result<Self, LinalgError> {
        let mut out = SparseTensor3::new(self.dims, new_order);
        for (&idx, v) in &self.entries {
            out.entries
                .insert(idx, v.coerce(new_order).map_err(LinalgError::Scalar)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycNumber as C;

    #[test]
    fn zero_values_never_stored() {
        let mut t = SparseTensor3::new((2, 2, 2), 4);
        t.set((0, 1, 1), C::zeta(4)).unwrap();
        t.set((0, 1, 1), C::zero(4)).unwrap();
        assert_eq!(t.nnz(), 0);
        t.add_to((1, 0, 0), &C::one(4)).unwrap();
        t.add_to((1, 0, 0), &C::from_integer(4, -1)).unwrap();
        assert_eq!(t.nnz(), 0);
    }

    #[test]
    fn out_of_bounds_rejected() {
        let mut t = SparseTensor3::new((2, 2, 2), 4);
        assert!(t.set((2, 0, 0), C::one(4)).is_err());
    }

    #[test]
    fn grouping() {
        let mut t = SparseTensor3::new((3, 2, 2), 4);
        t.set((1, 0, 1), C::one(4)).unwrap();
        t.set((1, 1, 0), C::zeta(4)).unwrap();
        t.set((2, 1, 1), C::one(4)).unwrap();
        let g = t.grouped_by_first();
        assert!(g[0].is_empty());
        assert_eq!(g[1].len(), 2);
        assert_eq!(g[2].len(), 1);
    }
}
