use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{MatrixQ, Rational};

use super::polynomial::Poly;

/// Polynomial map ℚ^source → ℚ^target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    source_dim: usize,
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(source_dim: usize, components: Vec<Poly>) -> Result<Self> {
        for c in &components {
            ensure_dim("map component variables", source_dim, c.nvars())?;
        }
        Ok(PolyMap {
            source_dim,
            components,
        })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            source_dim: n,
            components: (0..n).map(|i| Poly::var(n, i)).collect(),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        ensure_dim("map evaluation point", self.source_dim, point.len())?;
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }

    /// Symbolic Jacobian: entry `[i][j] = ∂m_i/∂x_j`.
    pub fn jacobian(&self) -> PolyMatrix {
        let rows = self
            .components
            .iter()
            .map(|c| c.gradient())
            .collect();
        PolyMatrix {
            nvars: self.source_dim,
            rows: self.target_dim(),
            cols: self.source_dim,
            entries: rows,
        }
    }

    pub fn jacobian_at(&self, point: &[Rational]) -> Result<MatrixQ> {
        self.jacobian().evaluate(point)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        ensure_dim("map composition", self.source_dim, inner.target_dim())?;
        let components = self
            .components
            .iter()
            .map(|c| c.compose(&inner.components))
            .collect::<Result<_>>()?;
        Ok(PolyMap {
            source_dim: inner.source_dim,
            components,
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMap::identity(self.source_dim)
    }
}

/// Matrix of polynomials in a shared variable context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(nvars: usize, entries: Vec<Vec<Poly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        for r in &entries {
            ensure_dim("polynomial matrix row length", cols, r.len())?;
            for p in r {
                ensure_dim("polynomial matrix entry variables", nvars, p.nvars())?;
            }
        }
        Ok(PolyMatrix {
            nvars,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            nvars,
            rows,
            cols,
            entries: vec![vec![Poly::zero(nvars); cols]; rows],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert_eq!(p.nvars(), self.nvars, "polynomial context");
        self.entries[i][j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i]
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<MatrixQ> {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for r in &self.entries {
            for p in r {
                data.push(p.evaluate(point)?);
            }
        }
        MatrixQ::new(self.rows, self.cols, data)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(self.nvars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j][i] = self.entries[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        ensure_dim("polynomial matrix product", self.cols, other.rows)?;
        ensure_dim("polynomial matrix context", self.nvars, other.nvars)?;
        let mut out = PolyMatrix::zeros(self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other.entries[k][j].is_zero() {
                        continue;
                    }
                    let t = &self.entries[i][k] * &other.entries[k][j];
                    out.entries[i][j] = &out.entries[i][j] + &t;
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination with exact polynomial division.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: "determinant of a non-square matrix",
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(self.nvars));
        }
        let mut a = self.entries.clone();
        let mut sign_flip = false;
        let mut prev = Poly::one(self.nvars);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(Poly::zero(self.nvars));
                };
                a.swap(k, swap);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss step divides exactly");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign_flip { -d } else { d })
    }

    /// Applies `f` to every entry.
    pub fn try_map(&self, nvars: usize, f: impl Fn(&Poly) -> Result<Poly>) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(nvars, entries).map(|mut m| {
            m.cols = self.cols;
            m
        })
    }

    /// Substitutes `inner` into every entry.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMatrix> {
        self.try_map(inner.source_dim(), |p| p.compose(inner.components()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (i..self.cols).all(|j| self.entries[i][j] == -self.entries[j][i].clone())
            })
    }

    /// Replaces column `j` by `col`.
    pub fn with_column(&self, j: usize, col: &[Poly]) -> PolyMatrix {
        let mut out = self.clone();
        for (i, p) in col.iter().enumerate() {
            out.entries[i][j] = p.clone();
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.entries[i][j].clone()).collect()
    }

    /// Inverse when the determinant is a nonzero constant (so the inverse is polynomial).
    pub fn unimodular_inverse(&self) -> Result<PolyMatrix> {
        let det = self.det()?;
        let c = match det.constant_value() {
            Some(c) if !num_traits::Zero::is_zero(&c) => c,
            _ => {
                return Err(Error::precondition(format!(
                    "matrix determinant is not a nonzero constant (degree {:?}); its inverse is not polynomial",
                    det.total_degree()
                )))
            }
        };
        let inv_c = <Rational as num_traits::One>::one() / c;
        let n = self.rows;
        let mut out = PolyMatrix::zeros(self.nvars, n, n);
        let id: Vec<Vec<Poly>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { Poly::one(self.nvars) } else { Poly::zero(self.nvars) })
                    .collect()
            })
            .collect();
        // Cramer: (A^{-1})_{ij} = det(A with column i replaced by e_j) / det A.
        for (j, e) in id.iter().enumerate() {
            for i in 0..n {
                out.entries[i][j] = self.with_column(i, e).det()?.scale(&inv_c);
            }
        }
        Ok(out)
    }
}
