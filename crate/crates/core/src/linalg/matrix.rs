use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{self, Rational};
use crate::error::{ensure_dim, Error, Result};

/// Dense rational matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixQ({}x{})[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(rational::render).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for MatrixQ {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for MatrixQ {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl MatrixQ {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        ensure_dim("matrix entry count", rows * cols, data.len())?;
        Ok(MatrixQ { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixQ {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from explicit rows; `cols` disambiguates the empty case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            ensure_dim("matrix row length", cols, r.len())?;
            data.extend(r);
        }
        Ok(MatrixQ {
            rows: n,
            cols,
            data,
        })
    }

    /// Convenience constructor for integer fixtures. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Rational> = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| rational::int(x))
            })
            .collect();
        MatrixQ {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &MatrixQ) -> Result<Self> {
        ensure_dim("matrix product inner dimension", self.cols, other.rows)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        ensure_dim("matrix-vector product", self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| rational::dot(self.row(i), v))
            .collect())
    }

    /// Row vector times matrix: `v^T M`.
    pub fn vec_mul(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        ensure_dim("vector-matrix product", self.rows, v.len())?;
        let mut out = vec![Rational::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi * &self[(i, j)];
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &MatrixQ, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        ensure_dim("matrix rows", self.rows, other.rows)?;
        ensure_dim("matrix cols", self.cols, other.cols)?;
        Ok(MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &MatrixQ) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &MatrixQ) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (i..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone())
            })
    }

    pub fn ensure_antisymmetric(&self, context: &'static str) -> Result<()> {
        if self.is_antisymmetric() {
            Ok(())
        } else {
            Err(Error::NotAntisymmetric { context })
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &MatrixQ) -> Result<Self> {
        ensure_dim("vstack column count", self.cols, other.cols)?;
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(MatrixQ {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &MatrixQ) -> Result<Self> {
        ensure_dim("hstack row count", self.rows, other.rows)?;
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(MatrixQ {
            rows: self.rows,
            cols,
            data,
        })
    }

    pub fn columns_range(&self, start: usize, end: usize) -> Self {
        let mut out = Self::zeros(self.rows, end - start);
        for i in 0..self.rows {
            for j in start..end {
                out[(i, j - start)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let aug = self.hstack(&Self::identity(n)).ok()?;
        let (r, pivots) = rref_with_pivots(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.columns_range(n, 2 * n))
    }
}

fn lcm_of_denominators(row: &[Rational]) -> BigInt {
    row.iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

fn reduce_content(row: &mut [BigInt]) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
///
/// Rows are cleared to integers and eliminated fraction-free with content
/// reduction; only the final normalisation divides by pivots.
pub fn rref_with_pivots(m: &MatrixQ) -> (MatrixQ, Vec<usize>) {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let l = lcm_of_denominators(row);
            row.iter()
                .map(|q| q.numer() * (&l / q.denom()))
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        let Some(found) = (pr..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pr, found);
        reduce_content(&mut a[pr]);
        let p = a[pr][col].clone();
        for r in 0..rows {
            if r == pr || a[r][col].is_zero() {
                continue;
            }
            let g = a[r][col].gcd(&p);
            let mul_r = &p / &g;
            let mul_p = &a[r][col] / &g;
            let (pivot_row, other) = if r < pr {
                let (lo, hi) = a.split_at_mut(pr);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = a.split_at_mut(r);
                (&lo[pr], &mut hi[0])
            };
            for (x, y) in other.iter_mut().zip(pivot_row) {
                *x = &*x * &mul_r - y * &mul_p;
            }
            reduce_content(other);
        }
        pivots.push(col);
        pr += 1;
    }

    let mut out = MatrixQ::zeros(rows, cols);
    for (i, &pc) in pivots.iter().enumerate() {
        let p = a[i][pc].clone();
        for j in 0..cols {
            if !a[i][j].is_zero() {
                out[(i, j)] = Rational::new(a[i][j].clone(), p.clone());
            }
        }
    }
    (out, pivots)
}

/// Reduced row echelon form and rank.
pub fn rref(m: &MatrixQ) -> (MatrixQ, usize) {
    let (r, pivots) = rref_with_pivots(m);
    (r, pivots.len())
}

/// Particular solution of `a x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &MatrixQ, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    ensure_dim("right-hand side length", a.rows, b.len())?;
    let col = MatrixQ::new(b.len(), 1, b.to_vec())?;
    let aug = a.hstack(&col)?;
    let (r, pivots) = rref_with_pivots(&aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); a.cols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = r[(i, a.cols)].clone();
    }
    Ok(Some(x))
}

/// Solves `x^T a = b^T`, i.e. expresses `b` as a combination of the rows of `a`.
pub fn solve_left(a: &MatrixQ, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    solve(&a.transpose(), b)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{frac, int};

    #[test]
    fn rref_identity_and_zero() {
        let id = MatrixQ::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));
        let z = MatrixQ::zeros(2, 4);
        assert_eq!(rref(&z), (z.clone(), 0));
    }

    #[test]
    fn rref_dependent_rows() {
        let m = MatrixQ::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(r, MatrixQ::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_with_fractions() {
        let m = MatrixQ::from_rows(
            3,
            vec![
                vec![frac(1, 2), int(1), int(0)],
                vec![int(0), frac(2, 3), int(1)],
            ],
        )
        .unwrap();
        let (r, rank) = rref(&m);
        assert_eq!(rank, 2);
        // x = -2y, y = -3/2 z  →  rows (1, 0, -3), (0, 1, 3/2)
        assert_eq!(r.row(0), &[int(1), int(0), int(-3)]);
        assert_eq!(r.row(1), &[int(0), int(1), frac(3, 2)]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = MatrixQ::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), MatrixQ::identity(2));
        assert!(MatrixQ::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = MatrixQ::from_i64(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[int(2), int(0)]).unwrap(), Some(vec![int(1), int(1)]));
        let s = MatrixQ::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&s, &[int(1), int(3)]).unwrap(), None);
    }

    #[test]
    fn product_dimension_mismatch_is_rejected() {
        let a = MatrixQ::zeros(2, 3);
        assert!(a.mul(&a).is_err());
    }
}
