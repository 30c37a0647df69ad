use std::fmt;

use num_traits::Zero;

use super::matrix::{rref_with_pivots, solve_left, MatrixQ};
use super::rational::{self, Rational};
use crate::error::{ensure_dim, Error, Result};

/// Which space a subspace lives in: ℚⁿ or its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Vectors,
    Covectors,
}

impl Kind {
    pub fn dual(self) -> Kind {
        match self {
            Kind::Vectors => Kind::Covectors,
            Kind::Covectors => Kind::Vectors,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Vectors => "vectors",
            Kind::Covectors => "covectors",
        }
    }
}

/// A linear subspace of ℚⁿ (or of its dual), stored as its unique reduced
/// row echelon basis. Two equal subspaces compare equal field by field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    kind: Kind,
    basis: MatrixQ,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace<{}>(dim {} in {}: {:?})",
            self.kind.name(),
            self.dim(),
            self.ambient_dim(),
            self.basis
        )
    }
}

impl Subspace {
    /// Span of the rows of `rows`.
    pub fn span(kind: Kind, rows: &MatrixQ) -> Subspace {
        let (r, pivots) = rref_with_pivots(rows);
        let rank = pivots.len();
        let mut basis = MatrixQ::zeros(rank, rows.cols());
        for i in 0..rank {
            for j in 0..rows.cols() {
                basis[(i, j)] = r[(i, j)].clone();
            }
        }
        Subspace {
            kind,
            basis,
            pivots,
        }
    }

    pub fn from_vectors(kind: Kind, ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Subspace> {
        Ok(Self::span(kind, &MatrixQ::from_rows(ambient_dim, vectors)?))
    }

    /// Span of standard basis vectors with the given (0-based) indices.
    pub fn coordinate(kind: Kind, ambient_dim: usize, indices: &[usize]) -> Subspace {
        let rows = indices
            .iter()
            .map(|&i| unit(ambient_dim, i))
            .collect();
        Self::from_vectors(kind, ambient_dim, rows).expect("unit vectors have ambient length")
    }

    pub fn zero(kind: Kind, ambient_dim: usize) -> Subspace {
        Subspace {
            kind,
            basis: MatrixQ::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(kind: Kind, ambient_dim: usize) -> Subspace {
        Subspace {
            kind,
            basis: MatrixQ::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// Rows form the canonical basis.
    pub fn basis(&self) -> &MatrixQ {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Same subspace with the other kind tag. Only for identifications the
    /// caller makes explicitly (e.g. coordinates of a pullback).
    pub fn retag(&self, kind: Kind) -> Subspace {
        Subspace {
            kind,
            ..self.clone()
        }
    }

    fn check_compatible(&self, other: &Subspace, context: &'static str) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch {
                context,
                expected: self.kind.name(),
                found: other.kind.name(),
            });
        }
        ensure_dim(context, self.ambient_dim(), other.ambient_dim())
    }

    pub fn expect_kind(&self, kind: Kind, context: &'static str) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                context,
                expected: kind.name(),
                found: self.kind.name(),
            })
        }
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        ensure_dim("vector length", self.ambient_dim(), v.len())?;
        // The pivot entries of an RREF basis read off the coordinates directly.
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.combine(&coords);
        Ok((back == v).then_some(coords))
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        self.basis
            .vec_mul(coords)
            .expect("coordinate count equals subspace dimension")
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other, "subspace containment")?;
        for i in 0..other.dim() {
            if !self.contains_vector(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other, "subspace sum")?;
        Ok(Self::span(self.kind, &self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other, "subspace intersection")?;
        let constraints = self
            .annihilator()
            .basis
            .vstack(other.annihilator().basis())?;
        Ok(kernel_of(&constraints, self.kind))
    }

    /// Annihilator, living in the dual space.
    pub fn annihilator(&self) -> Subspace {
        kernel_of(&self.basis, self.kind.dual())
    }

    /// `self ∩ other = {0}`.
    pub fn is_transverse_to(&self, other: &Subspace) -> Result<bool> {
        Ok(self.intersect(other)?.is_zero())
    }

    /// `self ⊕ other` is the whole space.
    pub fn is_complement_of(&self, other: &Subspace) -> Result<bool> {
        Ok(self.dim() + other.dim() == self.ambient_dim() && self.is_transverse_to(other)?)
    }

    /// Greedy completion by standard basis vectors in increasing index order:
    /// returns the span `R` of the chosen vectors, so that `self ⊕ R` is everything.
    pub fn standard_complement(&self) -> Subspace {
        let candidates = (0..self.ambient_dim()).map(|i| unit(self.ambient_dim(), i));
        self.greedy_complement(candidates)
    }

    /// Greedy completion from an ordered list of candidates, keeping each candidate
    /// that is not in the span accumulated so far.
    pub fn greedy_complement(&self, candidates: impl IntoIterator<Item = Vec<Rational>>) -> Subspace {
        let mut acc = self.clone();
        let mut chosen: Vec<Vec<Rational>> = Vec::new();
        for c in candidates {
            if acc.is_full() {
                break;
            }
            if !acc.contains_vector(&c).expect("candidate length matches") {
                let row = MatrixQ::from_rows(self.ambient_dim(), vec![c.clone()]).expect("length");
                acc = Self::span(self.kind, &acc.basis.vstack(&row).expect("cols"));
                chosen.push(c);
            }
        }
        Self::from_vectors(self.kind, self.ambient_dim(), chosen).expect("candidate length matches")
    }

    /// Image under a linear map given by `m` (acting on column vectors).
    pub fn image(&self, m: &MatrixQ, codomain: Kind) -> Result<Subspace> {
        ensure_dim("map domain", m.cols(), self.ambient_dim())?;
        Ok(Self::span(codomain, &self.basis.mul(&m.transpose())?))
    }

    pub fn render(&self) -> Vec<Vec<String>> {
        (0..self.dim())
            .map(|i| rational::render_vec(self.basis.row(i)))
            .collect()
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = rational::one();
    v
}

fn kernel_of(m: &MatrixQ, kind: Kind) -> Subspace {
    let n = m.cols();
    let (r, pivots) = rref_with_pivots(m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let rows: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(i, f)].clone();
            }
            v
        })
        .collect();
    Subspace::from_vectors(kind, n, rows).expect("kernel vectors have ambient length")
}

/// `{v : m v = 0}`, as a subspace of ℚ^cols.
pub fn kernel(m: &MatrixQ) -> Subspace {
    kernel_of(m, Kind::Vectors)
}

/// `{v : m v = 0}` with an explicit kind for the domain.
pub fn kernel_in(m: &MatrixQ, domain: Kind) -> Subspace {
    kernel_of(m, domain)
}

/// `{v : m v ∈ s}`, where `m` maps a space of kind `domain` into the space of `s`.
pub fn preimage(m: &MatrixQ, s: &Subspace, domain: Kind) -> Result<Subspace> {
    ensure_dim("map codomain", s.ambient_dim(), m.rows())?;
    let constraints = s.annihilator().basis().mul(m)?;
    Ok(kernel_of(&constraints, domain))
}

/// Expresses each row of `rows` in the basis given by the rows of `basis`.
/// Fails if some row is not in the span.
pub fn coordinates_in(basis: &MatrixQ, rows: &MatrixQ) -> Result<MatrixQ> {
    ensure_dim("coordinate basis ambient", basis.cols(), rows.cols())?;
    let mut out = Vec::with_capacity(rows.rows());
    for i in 0..rows.rows() {
        let c = solve_left(basis, rows.row(i))?
            .ok_or_else(|| Error::precondition("vector not in the span of the given basis"))?;
        out.push(c);
    }
    MatrixQ::from_rows(basis.rows(), out)
}

#[cfg(test)]
fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
