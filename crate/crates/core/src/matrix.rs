//! Dense matrices over [`Scalar`] with fraction-free elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::{denominator_lcm, Scalar};

/// Row-major dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length. An empty row list gives a 0x0 matrix.
    pub fn from_rows<R: AsRef<[Scalar]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Mat { rows: rows.len(), cols, data })
    }

    /// Convenience constructor for integer literals; panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Scalar::from_integer(x.into())).collect())
            .collect();
        Mat::from_rows(&rows).expect("ragged integer matrix")
    }

    pub fn from_columns<C: AsRef<[Scalar]>>(cols: &[C]) -> Result<Self> {
        Ok(Mat::from_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Submatrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Mat { rows: self.rows, cols: cols.len(), data }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        Mat { rows: rows.len(), cols: self.cols, data }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|i| crate::scalar::dot(self.row(i), v)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Rows scaled to integers, plus the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = denominator_lcm(row);
                let r = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
                scale *= l;
                r
            })
            .collect();
        (rows, scale)
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    ///
    /// Each row is first cleared of denominators so that elimination runs on
    /// integers; every division inside the loop is exact.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let (mut a, scale) = self.integer_rows();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                for j in k + 1..n {
                    let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        let d = if negate { -d } else { d };
        Ok(Scalar::new(d, scale))
    }

    /// Exact rank by fraction-free row echelon reduction.
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        let (m, n) = (self.rows, self.cols);
        let mut r = 0;
        let mut prev = BigInt::one();
        for col in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let (top, bottom) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in bottom.iter_mut() {
                for j in col + 1..n {
                    let v = &row[j] * &pivot_row[col] - &row[col] * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[col] = BigInt::zero();
            }
            prev = a[r][col].clone();
            r += 1;
        }
        r
    }

    /// Reduced row echelon form over the rationals, with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a[(r, col)].recip();
            for j in col..self.cols {
                a[(r, j)] = &a[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i == r || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in col..self.cols {
                    let v = &a[(r, j)] * &f;
                    a[(i, j)] -= v;
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    /// Basis of the right kernel. Each basis vector has its first nonzero
    /// entry equal to 1; the list is empty iff the columns are independent.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free = (0..self.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(row, f)].clone();
            }
            let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero kernel vector");
            v.iter().map(|x| x / &lead).collect()
        })
        .collect()
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Rank("matrix is singular".into()));
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(r.select_columns(&cols))
    }

    /// Unique solution of `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        self.inverse()?.mul_vec(b)
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Determinant by cofactor expansion along the first row. Exponential;
/// only meant as a cross-check for small matrices.
pub fn cofactor_det(m: &Mat) -> Result<Scalar> {
    if !m.is_square() {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    fn go(m: &Mat, rows: &[usize], cols: &[usize]) -> Scalar {
        if rows.is_empty() {
            return Scalar::one();
        }
        let mut acc = Scalar::zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = &m[(rows[0], c)];
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = e * go(m, &rows[1..], &rest);
            if k % 2 == 0 {
                acc += minor;
            } else {
                acc -= minor;
            }
        }
        acc
    }
    let idx: Vec<usize> = (0..m.rows).collect();
    Ok(go(m, &idx, &idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ints, ratio};

    #[test]
    fn det_examples() {
        assert_eq!(Mat::identity(4).det().unwrap(), int(1));
        assert_eq!(Mat::from_ints(&[[0, 1], [1, 0]]).det().unwrap(), int(-1));
        let vandermonde = Mat::from_ints(&[[1, 1, 1], [1, 2, 4], [1, 3, 9]]);
        assert_eq!(vandermonde.det().unwrap(), int(2));
        assert_eq!(Mat::zeros(0, 0).det().unwrap(), int(1));
    }

    #[test]
    fn det_rational_entries() {
        let m = Mat::from_rows(&[vec![ratio(1, 2), ratio(1, 3)], vec![ratio(1, 4), ratio(1, 5)]]).unwrap();
        // 1/10 - 1/12 = 1/60
        assert_eq!(m.det().unwrap(), ratio(1, 60));
    }

    #[test]
    fn det_needs_pivoting() {
        let m = Mat::from_ints(&[[0, 0, 1], [0, 2, 0], [3, 0, 0]]);
        assert_eq!(m.det().unwrap(), int(-6));
        let singular = Mat::from_ints(&[[1, 2, 3], [2, 4, 6], [0, 1, 1]]);
        assert_eq!(singular.det().unwrap(), int(0));
    }

    #[test]
    fn det_rejects_non_square() {
        assert!(matches!(Mat::zeros(2, 3).det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::zeros(3, 3).rank(), 0);
        assert_eq!(Mat::identity(5).rank(), 5);
        let m = Mat::from_ints(&[
            [1, 2, 0, 3, 1],
            [0, 1, 4, 1, 2],
            [2, 0, 1, 0, 5],
            [1, 1, 1, 7, 0],
            [1, 3, 4, 4, 3],
        ]);
        assert_eq!(m.rank(), 4);
        assert_eq!(Mat::from_ints(&[[0, 0, 1, 2], [0, 0, 2, 4]]).rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(Mat::identity(3).nullspace().is_empty());
        let ns = Mat::from_ints(&[[1, 1, 1]]).nullspace();
        assert_eq!(ns, vec![ints(&[1, -1, 0]), ints(&[1, 0, -1])]);
        let ns = Mat::from_ints(&[[0, 2, 4]]).nullspace();
        assert_eq!(ns, vec![ints(&[1, 0, 0]), vec![int(0), int(1), ratio(-1, 2)]]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat::from_ints(&[[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Mat::identity(3));
        assert!(matches!(Mat::from_ints(&[[1, 2], [2, 4]]).inverse(), Err(Error::Rank(_))));
    }

    #[test]
    fn cofactor_matches_small_cases() {
        let m = Mat::from_ints(&[[3, 1, 4], [1, 5, 9], [2, 6, 5]]);
        assert_eq!(cofactor_det(&m).unwrap(), m.det().unwrap());
    }
}
