//! Dense matrices over a field and over Laurent polynomial rings.

use std::fmt;

use crate::algebra::field::{Field, Scalar};
use crate::algebra::laurent::{LaurentPoly, Monomial};
use crate::error::AlgebraError;

/// Below this size `PolyMatrix::det` uses cofactor expansion.
pub const COFACTOR_THRESHOLD: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Dimension("ragged rows".into()));
        }
        if rows.iter().flatten().any(|x| x.field() != field) {
            return Err(AlgebraError::Dimension("entry from another field".into()));
        }
        Ok(ScalarMatrix {
            rows: r,
            cols: c,
            field,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, rows).expect("rectangular integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ScalarMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Gaussian elimination; returns the determinant.
    pub fn det(&self) -> Result<Scalar, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = self.field.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a.get(k, k).clone();
            det = &det * &pivot;
            let inv = pivot.inverse()?;
            for i in k + 1..n {
                let factor = a.get(i, k) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = a.get(i, j) - &(&factor * a.get(k, j));
                    a.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<ScalarMatrix, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = ScalarMatrix::identity(self.field, n);
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a.get(i, k).is_zero())
                .ok_or(AlgebraError::DivisionByZero)?;
            a.swap_rows(p, k);
            inv.swap_rows(p, k);
            let s = a.get(k, k).inverse()?;
            for j in 0..n {
                a.set(k, j, a.get(k, j) * &s);
                inv.set(k, j, inv.get(k, j) * &s);
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    a.set(i, j, a.get(i, j) - &(&f * a.get(k, j)));
                    inv.set(i, j, inv.get(i, j) - &(&f * inv.get(k, j)));
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `m · self` as a polynomial matrix in `nvars` variables.
    pub fn times_monomial(&self, m: &Monomial) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.field, m.nvars(), self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.set(i, j, LaurentPoly::term(m.clone(), v.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Dense rectangular matrix of Laurent polynomials sharing one ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    field: Field,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(field: Field, nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            field,
            data: vec![LaurentPoly::zero(field, nvars); rows * cols],
        }
    }

    pub fn identity(field: Field, nvars: usize, n: usize) -> Self {
        let mut m = Self::zeros(field, nvars, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(field, nvars));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, AlgebraError> {
        let first = rows
            .iter()
            .flatten()
            .next()
            .ok_or_else(|| AlgebraError::Dimension("empty matrix needs explicit ring".into()))?;
        let (field, nvars) = (first.field(), first.nvars());
        let c = rows[0].len();
        if rows.iter().any(|r| r.len() != c) {
            return Err(AlgebraError::Dimension("ragged rows".into()));
        }
        if rows.iter().flatten().any(|p| p.nvars() != nvars || p.field() != field) {
            return Err(AlgebraError::Dimension("entries from different rings".into()));
        }
        Ok(PolyMatrix {
            rows: rows.len(),
            cols: c,
            nvars,
            field,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        debug_assert_eq!(v.nvars(), self.nvars);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    /// Copies `block` into the submatrix starting at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &PolyMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> PolyMatrix {
        self.select(&(row..row + rows).collect::<Vec<_>>(), &(col..col + cols).collect::<Vec<_>>())
    }

    /// Submatrix with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.field, self.nvars, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn without_columns(&self, drop: &[usize]) -> PolyMatrix {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !drop.contains(j)).collect();
        self.select(&(0..self.rows).collect::<Vec<_>>(), &keep)
    }

    pub fn map(
        &self,
        nvars: usize,
        mut f: impl FnMut(&LaurentPoly) -> Result<LaurentPoly, AlgebraError>,
    ) -> Result<PolyMatrix, AlgebraError> {
        let data = self.data.iter().map(&mut f).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars,
            field: self.field,
            data,
        })
    }

    /// Entrywise specialization `t_{k+1} := value`.
    pub fn specialize(&self, k: usize, value: &Scalar) -> Result<PolyMatrix, AlgebraError> {
        self.map(self.nvars.saturating_sub(1), |p| p.specialize(k, value))
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = &*a - b;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> PolyMatrix {
        let mut out = self.clone();
        for a in &mut out.data {
            *a = &*a * c;
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.cols != other.rows || self.nvars != other.nvars || self.field != other.field {
            return Err(AlgebraError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.field, self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &PolyMatrix) -> Result<(), AlgebraError> {
        if self.rows != other.rows
            || self.cols != other.cols
            || self.nvars != other.nvars
            || self.field != other.field
        {
            return Err(AlgebraError::Dimension("matrices of different shape or ring".into()));
        }
        Ok(())
    }

    fn check_square(&self) -> Result<(), AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Determinant, by cofactor expansion for small sizes and fraction-free
    /// elimination otherwise. Both strategies give identical results.
    pub fn det(&self) -> Result<LaurentPoly, AlgebraError> {
        if self.rows <= COFACTOR_THRESHOLD {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the first row. Exponential; meant for small
    /// matrices and as an independent check of [`PolyMatrix::det_bareiss`].
    pub fn det_cofactor(&self) -> Result<LaurentPoly, AlgebraError> {
        self.check_square()?;
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.cofactor_rec(0, &cols))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> LaurentPoly {
        if cols.is_empty() {
            return LaurentPoly::one(self.field, self.nvars);
        }
        let mut acc = LaurentPoly::zero(self.field, self.nvars);
        for (pos, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.cofactor_rec(row + 1, &rest);
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Bareiss fraction-free elimination. Each row is first multiplied by the
    /// monomial that clears its negative exponents; the product of those
    /// monomials is divided back out at the end.
    pub fn det_bareiss(&self) -> Result<LaurentPoly, AlgebraError> {
        self.check_square()?;
        let n = self.rows;
        let one = LaurentPoly::one(self.field, self.nvars);
        if n == 0 {
            return Ok(one);
        }
        let mut cleared = vec![0i32; self.nvars];
        let mut a: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<LaurentPoly> = (0..n).map(|j| self.get(i, j).clone()).collect();
            let mut mins: Option<Vec<i32>> = None;
            for p in &row {
                if let Some(m) = p.min_exponents() {
                    mins = Some(match mins {
                        None => m,
                        Some(acc) => acc.iter().zip(&m).map(|(a, b)| *a.min(b)).collect(),
                    });
                }
            }
            let Some(mins) = mins else {
                return Ok(LaurentPoly::zero(self.field, self.nvars));
            };
            for (c, m) in cleared.iter_mut().zip(&mins) {
                *c += m;
            }
            let shift = Monomial::new(mins).inverse();
            a.push(row.iter().map(|p| p.shift(&shift)).collect());
        }

        let mut negate = false;
        let mut prev = one;
        for k in 0..n {
            let pivot = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].len());
            let Some(p) = pivot else {
                return Ok(LaurentPoly::zero(self.field, self.nvars));
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                let lead = std::mem::replace(&mut row[k], LaurentPoly::zero(self.field, self.nvars));
                for j in k + 1..n {
                    let mut num = &pivot_row[k] * &row[j];
                    if !lead.is_zero() && !pivot_row[j].is_zero() {
                        num = &num - &(&lead * &pivot_row[j]);
                    }
                    row[j] = if prev.is_one() {
                        num
                    } else {
                        num.exact_divide(&prev)?
                            .expect("Bareiss step divides exactly")
                    };
                }
            }
            prev = a[k][k].clone();
        }
        let mut det = a[n - 1][n - 1].shift(&Monomial::new(cleared));
        if negate {
            det = -&det;
        }
        Ok(det)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("[{}]", self.get(i, j))).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str, nvars: usize) -> LaurentPoly {
        LaurentPoly::parse(text, Field::Rational, nvars).unwrap()
    }

    #[test]
    fn identity_determinant() {
        let id = PolyMatrix::identity(Field::Rational, 1, 4);
        assert!(id.det_bareiss().unwrap().is_one());
        assert!(id.det_cofactor().unwrap().is_one());
    }

    #[test]
    fn triangular_determinant() {
        let m = PolyMatrix::from_rows(vec![
            vec![q("t1", 1), q("1", 1)],
            vec![q("0", 1), q("t1", 1)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), q("t1^2", 1));
        assert_eq!(m.det_bareiss().unwrap(), q("t1^2", 1));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = PolyMatrix::zeros(Field::Rational, 1, 2, 3);
        assert!(matches!(m.det(), Err(AlgebraError::Dimension(_))));
        assert!(matches!(m.det_bareiss(), Err(AlgebraError::Dimension(_))));
    }

    #[test]
    fn bareiss_needs_pivoting_and_laurent_rows() {
        let m = PolyMatrix::from_rows(vec![
            vec![q("0", 2), q("t1^-1", 2), q("1", 2), q("t2", 2)],
            vec![q("t2^-2", 2), q("1", 2), q("0", 2), q("1", 2)],
            vec![q("1", 2), q("0", 2), q("t1 - t2", 2), q("0", 2)],
            vec![q("0", 2), q("2", 2), q("1", 2), q("t1*t2^-1", 2)],
        ])
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn scalar_inverse_and_det() {
        let f7 = Field::Prime(7);
        let a = ScalarMatrix::from_i64(f7, &[&[2, 1], &[3, 5]]);
        assert_eq!(a.det().unwrap(), f7.from_i64(7));
        let b = ScalarMatrix::from_i64(f7, &[&[0, -1], &[1, 1]]);
        assert!(b.mul(&b.inverse().unwrap()).unwrap().is_identity());
        assert_eq!(b.det().unwrap(), f7.one());
    }
}
