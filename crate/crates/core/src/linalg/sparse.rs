//! Sparse exact linear systems with fill-reducing pivoting; used for the
//! d²-unknown antipode solve, whose coefficient matrix is nearly triangular
//! for the bundled families.

use std::collections::{BTreeMap, BTreeSet};

use crate::cyclotomic::CycNumber;

use super::LinalgError;

pub struct SparseSystem {
    order: u32,
    ncols: usize,
    rows: Vec<BTreeMap<u32, CycNumber>>,
    rhs: Vec<CycNumber>,
}

impl SparseSystem {
    pub fn new(order: u32, ncols: usize) -> Self {
        SparseSystem {
            order,
            ncols,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn add_row(&mut self, entries: BTreeMap<u32, CycNumber>, rhs: CycNumber) {
        debug_assert!(entries.keys().all(|&c| (c as usize) < self.ncols));
        let entries: BTreeMap<u32, CycNumber> =
            entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        self.rows.push(entries);
        self.rhs.push(rhs);
    }

    /// Gauss–Jordan elimination with smallest-row / smallest-column pivot
    /// selection. Returns Some(x) with free variables zeroed, or None when
    /// the system is inconsistent. Solutions satisfy every original row
    /// exactly (re-checked).
    pub fn solve(mut self) -> Result<Option<Vec<CycNumber>>, LinalgError> {
        let original_rows = self.rows.clone();
        let original_rhs = self.rhs.clone();
        let nrows = self.rows.len();
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for &c in row.keys() {
                col_rows[c as usize].insert(r);
            }
        }
        let mut processed = vec![false; nrows];
        let mut pivot_of_row: Vec<Option<u32>> = vec![None; nrows];
        loop {
            // Smallest active row.
            let mut best: Option<(usize, usize)> = None;
            for r in 0..nrows {
                if processed[r] || self.rows[r].is_empty() {
                    continue;
                }
                let n = self.rows[r].len();
                if best.map_or(true, |(_, bn)| n < bn) {
                    best = Some((r, n));
                    if n == 1 {
                        break;
                    }
                }
            }
            let Some((r, _)) = best else { break };
            // Column of that row with fewest other occupants.
            let c = *self
                .rows[r]
                .keys()
                .min_by_key(|&&c| col_rows[c as usize].len())
                .expect("row is nonempty");
            let piv_inv = self.rows[r][&c].inv().map_err(LinalgError::Scalar)?;
            // Normalize the pivot row; its support is unchanged.
            let normalized: BTreeMap<u32, CycNumber> = self.rows[r]
                .iter()
                .map(|(&k, v)| (k, v * &piv_inv))
                .collect();
            let norm_rhs = &self.rhs[r] * &piv_inv;
            self.rows[r] = normalized;
            self.rhs[r] = norm_rhs;
            // Eliminate the pivot column from every other row, processed
            // rows included, so extraction reads straight off the rhs.
            let victims: Vec<usize> = col_rows[c as usize].iter().copied().collect();
            for q in victims {
                if q == r {
                    continue;
                }
                let factor = self.rows[q][&c].clone();
                let pivot_row = self.rows[r].clone();
                let row_q = &mut self.rows[q];
                for (&k, v) in &pivot_row {
                    let delta = &factor * v;
                    match row_q.get_mut(&k) {
                        Some(cur) => {
                            let next = &*cur - &delta;
                            if next.is_zero() {
                                row_q.remove(&k);
                                col_rows[k as usize].remove(&q);
                            } else {
                                *cur = next;
                            }
                        }
                        None => {
                            row_q.insert(k, delta.neg());
                            col_rows[k as usize].insert(q);
                        }
                    }
                }
                let d = &factor * &self.rhs[r];
                self.rhs[q] = &self.rhs[q] - &d;
            }
            col_rows[c as usize] = BTreeSet::from([r]);
            processed[r] = true;
            pivot_of_row[r] = Some(c);
        }
        // Empty rows with nonzero rhs certify inconsistency.
        for r in 0..nrows {
            if self.rows[r].is_empty() && !self.rhs[r].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![CycNumber::zero(self.order); self.ncols];
        for r in 0..nrows {
            if let Some(c) = pivot_of_row[r] {
                // Free columns in the pivot row are zeroed, leaving rhs.
                x[c as usize] = self.rhs[r].clone();
            }
        }
        // Exact substitution check against the original rows.
        for (row, want) in original_rows.iter().zip(&original_rhs) {
            let mut acc = CycNumber::zero(self.order);
            for (&c, v) in row {
                if !x[c as usize].is_zero() {
                    acc = &acc + &(v * &x[c as usize]);
                }
            }
            if &acc != want {
                return Ok(None);
            }
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycNumber as C;

    fn row(order: u32, entries: &[(u32, i64)]) -> BTreeMap<u32, CycNumber> {
        entries
            .iter()
            .map(|&(c, v)| (c, C::from_integer(order, v)))
            .collect()
    }

    #[test]
    fn solves_small_system() {
        // x + y = 3, x − y = 1 → x = 2, y = 1
        let mut sys = SparseSystem::new(1, 2);
        sys.add_row(row(1, &[(0, 1), (1, 1)]), C::from_integer(1, 3));
        sys.add_row(row(1, &[(0, 1), (1, -1)]), C::from_integer(1, 1));
        let x = sys.solve().unwrap().unwrap();
        assert_eq!(x[0], C::from_integer(1, 2));
        assert_eq!(x[1], C::from_integer(1, 1));
    }

    #[test]
    fn detects_inconsistency() {
        let mut sys = SparseSystem::new(1, 1);
        sys.add_row(row(1, &[(0, 1)]), C::from_integer(1, 1));
        sys.add_row(row(1, &[(0, 1)]), C::from_integer(1, 2));
        assert!(sys.solve().unwrap().is_none());
    }

    #[test]
    fn underdetermined_gets_free_vars_zeroed() {
        let mut sys = SparseSystem::new(1, 3);
        sys.add_row(row(1, &[(0, 1), (2, 1)]), C::from_integer(1, 5));
        let x = sys.solve().unwrap().unwrap();
        // One of the two variables carries 5, the other is 0.
        let sum = &x[0] + &x[2];
        assert_eq!(sum, C::from_integer(1, 5));
        assert!(x[1].is_zero());
    }
}
