use std::collections::BTreeMap;

use super::MPoly;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::Scalar;

/// Live-term budget for [`poly_det`].
pub const DEFAULT_TERM_CEILING: usize = 50_000_000;

/// Dense matrix of polynomials sharing one variable count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MPoly>,
}

impl PolyMat {
    pub fn new(rows: usize, cols: usize, nvars: usize, entries: Vec<MPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} polynomial matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::VarMismatch { left: nvars, right: bad.nvars() });
        }
        Ok(PolyMat { rows, cols, nvars, entries })
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged polynomial matrix".into()));
        }
        PolyMat::new(r, c, nvars, rows.into_iter().flatten().collect())
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

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Entrywise evaluation at a point.
    pub fn eval(&self, point: &[Scalar]) -> Result<Mat> {
        let data = self.entries.iter().map(|p| p.eval(point)).collect::<Result<Vec<_>>>()?;
        Mat::new(self.rows, self.cols, data)
    }

    fn row_nonzeros(&self, i: usize) -> usize {
        (0..self.cols).filter(|&j| !self.get(i, j).is_zero()).count()
    }
}

/// Determinant of a square polynomial matrix, with the default term ceiling.
pub fn poly_det(m: &PolyMat) -> Result<MPoly> {
    poly_det_with_ceiling(m, DEFAULT_TERM_CEILING)
}

/// Determinant by Laplace expansion with memoized minors.
///
/// Rows are consumed one at a time; after row `k` the table holds, for
/// every `k`-subset `S` of columns that can carry a nonzero minor, the
/// determinant of the first `k` rows restricted to `S`. Rows are visited
/// sparsest-first (the permutation sign is applied at the end), which
/// keeps the table small for the structured matrices used here.
///
/// Fails with [`Error::Resource`] if the live terms across the table ever
/// exceed `ceiling`.
pub fn poly_det_with_ceiling(m: &PolyMat, ceiling: usize) -> Result<MPoly> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} polynomial matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n > 64 {
        return Err(Error::InvalidArgument("polynomial determinant limited to 64x64".into()));
    }
    if n == 0 {
        return Ok(MPoly::one(m.nvars));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| m.row_nonzeros(i));
    let negate_result = permutation_is_odd(&order);

    let mut level: BTreeMap<u64, MPoly> = BTreeMap::new();
    level.insert(0, MPoly::one(m.nvars));
    for (k, &row) in order.iter().enumerate() {
        let mut next: BTreeMap<u64, MPoly> = BTreeMap::new();
        for (&mask, minor) in &level {
            for c in 0..n {
                let bit = 1u64 << c;
                let entry = m.get(row, c);
                if mask & bit != 0 || entry.is_zero() {
                    continue;
                }
                // Sign of the cofactor of (k, c) in the (k+1)-minor on mask|bit.
                let before = (mask & (bit - 1)).count_ones() as usize;
                let negate = (k + before) % 2 == 1;
                next.entry(mask | bit)
                    .or_insert_with(|| MPoly::zero(m.nvars))
                    .add_product(entry, minor, negate);
            }
        }
        next.retain(|_, p| !p.is_zero());
        let live: usize = next.values().map(MPoly::num_terms).sum();
        if live > ceiling {
            return Err(Error::Resource { ceiling, reached: live });
        }
        if next.is_empty() {
            return Ok(MPoly::zero(m.nvars));
        }
        level = next;
    }

    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let det = level.remove(&full).unwrap_or_else(|| MPoly::zero(m.nvars));
    Ok(if negate_result { -det } else { det })
}

fn permutation_is_odd(p: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::variables;
    use crate::scalar::int;

    #[test]
    fn two_by_two() {
        let v = variables(4);
        let m = PolyMat::from_rows(4, vec![vec![v[0].clone(), v[1].clone()], vec![v[2].clone(), v[3].clone()]]).unwrap();
        let expected = &(&v[0] * &v[3]) - &(&v[1] * &v[2]);
        assert_eq!(poly_det(&m).unwrap(), expected);
    }

    #[test]
    fn diagonal() {
        let v = variables(5);
        let rows: Vec<Vec<MPoly>> = (0..5)
            .map(|i| (0..5).map(|j| if i == j { v[i].clone() } else { MPoly::zero(5) }).collect())
            .collect();
        let m = PolyMat::from_rows(5, rows).unwrap();
        let expected = v.iter().skip(1).fold(v[0].clone(), |acc, x| &acc * x);
        assert_eq!(poly_det(&m).unwrap(), expected);
    }

    #[test]
    fn sparse_rows_first_keeps_sign() {
        // Row 1 is sparser than row 0, so the rows are reordered internally.
        let c = |x: i64| MPoly::constant(int(x), 1);
        let m = PolyMat::from_rows(1, vec![vec![c(1), c(2), c(3)], vec![c(0), c(4), c(0)], vec![c(5), c(6), c(0)]]).unwrap();
        let d = poly_det(&m).unwrap();
        let expected = m.eval(&[int(0)]).unwrap().det().unwrap();
        assert_eq!(d, MPoly::constant(expected, 1));
    }

    #[test]
    fn ceiling_is_enforced() {
        let v = variables(9);
        let rows: Vec<Vec<MPoly>> = (0..3).map(|i| (0..3).map(|j| v[3 * i + j].clone()).collect()).collect();
        let m = PolyMat::from_rows(9, rows).unwrap();
        assert!(matches!(poly_det_with_ceiling(&m, 2), Err(Error::Resource { .. })));
        assert_eq!(poly_det(&m).unwrap().num_terms(), 6);
    }

    #[test]
    fn non_square() {
        let m = PolyMat::new(1, 2, 1, vec![MPoly::zero(1), MPoly::zero(1)]).unwrap();
        assert!(matches!(poly_det(&m), Err(Error::Dimension(_))));
    }
}
