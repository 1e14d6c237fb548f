//! Dense matrices over Q(ζ_N) with exact arithmetic.

use crate::cyclotomic::{CycNumber, Rational};

use super::LinalgError;

#[derive(Clone, PartialEq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    order: u32,
    /// Row-major, length rows × cols, uniform cyclotomic order.
    entries: Vec<CycNumber>,
}

impl FieldMatrix {
    pub fn new(rows: usize, cols: usize, order: u32, entries: Vec<CycNumber>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                context: format!(
                    "matrix {rows}x{cols} needs {} entries, got {}",
                    rows * cols,
                    entries.len()
                ),
            });
        }
        if let Some(e) = entries.iter().find(|e| e.order() != order) {
            return Err(LinalgError::MixedOrders {
                expected: order,
                found: e.order(),
            });
        }
        Ok(FieldMatrix {
            rows,
            cols,
            order,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, order: u32) -> Self {
        FieldMatrix {
            rows,
            cols,
            order,
            entries: vec![CycNumber::zero(order); rows * cols],
        }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        let mut m = Self::zero(n, n, order);
        for i in 0..n {
            *m.at_mut(i, i) = CycNumber::one(order);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, order: u32, mut f: impl FnMut(usize, usize) -> CycNumber) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert_eq!(v.order(), order);
                entries.push(v);
            }
        }
        FieldMatrix {
            rows,
            cols,
            order,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn at(&self, i: usize, j: usize) -> &CycNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut CycNumber {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[CycNumber] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[CycNumber] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.order, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries,
        })
    }

    fn same_shape(&self, other: &Self) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols || self.order != other.order {
            return Err(LinalgError::DimensionMismatch {
                context: format!(
                    "{}x{} (N={}) vs {}x{} (N={})",
                    self.rows, self.cols, self.order, other.rows, other.cols, other.order
                ),
            });
        }
        Ok(())
    }

    pub fn scale(&self, s: &CycNumber) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| if e.is_zero() { e.clone() } else { e * s })
            .collect();
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows || self.order != other.order {
            return Err(LinalgError::DimensionMismatch {
                context: format!(
                    "{}x{} (N={}) * {}x{} (N={})",
                    self.rows, self.cols, self.order, other.rows, other.cols, other.order
                ),
            });
        }
        let mut out = Self::zero(self.rows, other.cols, self.order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cur = out.at(i, j);
                    *out.at_mut(i, j) = cur + &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[CycNumber]) -> Result<Vec<CycNumber>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                context: format!("matrix {}x{} applied to vector of length {}", self.rows, self.cols, v.len()),
            });
        }
        let mut out = vec![CycNumber::zero(self.order); self.rows];
        for i in 0..self.rows {
            for (k, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * x);
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> CycNumber {
        debug_assert_eq!(self.rows, self.cols);
        let mut t = CycNumber::zero(self.order);
        for i in 0..self.rows {
            t = &t + self.at(i, i);
        }
        t
    }

    pub fn pow(&self, e: u32) -> Result<Self, LinalgError> {
        debug_assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows, self.order);
        let mut sq = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Least m in 1..=cap with A^m = identity.
    pub fn operator_order(&self, cap: u32) -> Result<u32, LinalgError> {
        assert_eq!(self.rows, self.cols, "operator order needs a square matrix");
        let mut p = self.clone();
        for m in 1..=cap {
            if p.is_identity() {
                return Ok(m);
            }
            if m < cap {
                p = p.mul(self)?;
            }
        }
        Err(LinalgError::OrderExceedsCap { cap })
    }

    /// Rescales all scalars into Q(ζ_M); requires N | M.
    pub fn coerce_order(&self, new_order: u32) -> Result<Self, LinalgError> {
        let entries: Result<Vec<_>, _> = self.entries.iter().map(|e| e.coerce(new_order)).collect();
        Ok(FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            order: new_order,
            entries: entries.map_err(LinalgError::Scalar)?,
        })
    }

    /// A · T · Bᵀ, the action of A⊗B on a two-leg coefficient matrix T
    /// without materializing the Kronecker product.
    pub fn two_leg_apply(a: &Self, t: &Self, b: &Self) -> Result<Self, LinalgError> {
        a.mul(t)?.mul(&b.transpose())
    }
}

impl std::fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FieldMatrix {}x{} over Q(zeta_{})", self.rows, self.cols, self.order)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Scales a vector of field elements by a rational.
pub fn scale_vec(v: &[CycNumber], s: &Rational) -> Vec<CycNumber> {
    v.iter().map(|e| e.scale_rational(s)).collect()
}

/// Dot product of equal-length slices.
pub fn dot(a: &[CycNumber], b: &[CycNumber]) -> CycNumber {
    assert_eq!(a.len(), b.len());
    assert!(!a.is_empty());
    let order = a[0].order();
    let mut acc = CycNumber::zero(order);
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = &acc + &(x * y);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycNumber as C;

    #[test]
    fn identity_and_mul() {
        let id = FieldMatrix::identity(3, 4);
        let m = FieldMatrix::from_fn(3, 3, 4, |i, j| C::from_integer(4, (i * 3 + j) as i64));
        assert_eq!(id.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&id).unwrap(), m);
    }

    #[test]
    fn rotation_by_zeta4_has_order_4() {
        let z = C::zeta(4);
        let mut m = FieldMatrix::zero(2, 2, 4);
        *m.at_mut(0, 0) = z.clone();
        *m.at_mut(1, 1) = z.pow(3).unwrap();
        assert_eq!(m.operator_order(10).unwrap(), 4);
    }

    #[test]
    fn identity_has_order_1() {
        assert_eq!(FieldMatrix::identity(5, 3).operator_order(4).unwrap(), 1);
    }

    #[test]
    fn order_cap_exceeded() {
        let z = C::zeta(8);
        let mut m = FieldMatrix::zero(1, 1, 8);
        *m.at_mut(0, 0) = z;
        assert!(matches!(
            m.operator_order(3),
            Err(LinalgError::OrderExceedsCap { cap: 3 })
        ));
    }

    #[test]
    fn two_leg_matches_kronecker_on_small_case() {
        // (A ⊗ B) vec(T) with A = diag(1, −1), B = swap.
        let one = C::one(4);
        let m1 = C::from_integer(4, -1);
        let zero = C::zero(4);
        let a = FieldMatrix::new(2, 2, 4, vec![one.clone(), zero.clone(), zero.clone(), m1]).unwrap();
        let b = FieldMatrix::new(2, 2, 4, vec![zero.clone(), one.clone(), one.clone(), zero.clone()]).unwrap();
        let t = FieldMatrix::from_fn(2, 2, 4, |i, j| C::from_integer(4, (1 + i * 2 + j) as i64));
        let got = FieldMatrix::two_leg_apply(&a, &t, &b).unwrap();
        // Row i of result: sum_k A[i][k] * (row k of T) then columns mixed by Bᵀ.
        let expect = FieldMatrix::new(
            2,
            2,
            4,
            vec![
                C::from_integer(4, 2),
                C::from_integer(4, 1),
                C::from_integer(4, -4),
                C::from_integer(4, -3),
            ],
        )
        .unwrap();
        assert_eq!(got, expect);
    }
}
