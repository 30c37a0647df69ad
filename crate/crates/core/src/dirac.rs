//! Linear Dirac structures `L ⊂ P ⊕ P*`, stored as subspaces of ℚ^{2n} with
//! coordinates ordered `(X | ξ)`. The pairing is `⟨(X,ξ),(Y,η)⟩ = ξ(Y) + η(X)`.

use num_traits::Zero;

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::rational::dot;
use crate::linalg::{kernel, solve, solve_left, Kind, MatrixQ, Rational, Subspace};
use crate::poisson::PoissonVS;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracVS {
    n: usize,
    span: Subspace,
}

/// Result of trying to read a Dirac structure as the graph of a bivector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BivectorExtraction {
    Bivector(PoissonVS),
    /// `L ∩ (P ⊕ 0)` is nonzero; it is reported here.
    NotAGraph { characteristic: Subspace },
}

impl BivectorExtraction {
    pub fn bivector(self) -> Option<PoissonVS> {
        match self {
            BivectorExtraction::Bivector(p) => Some(p),
            BivectorExtraction::NotAGraph { .. } => None,
        }
    }
}

fn pairing(n: usize, a: &[Rational], b: &[Rational]) -> Rational {
    dot(&a[n..], &b[..n]) + dot(&b[n..], &a[..n])
}

impl DiracVS {
    /// Validates dimension `n` and isotropy.
    pub fn new(n: usize, span: Subspace) -> Result<Self> {
        ensure_dim("Dirac structure ambient", 2 * n, span.ambient_dim())?;
        if span.dim() != n {
            return Err(Error::precondition(format!(
                "a Dirac structure on a {n}-dimensional space must have dimension {n}, got {}",
                span.dim()
            )));
        }
        let rows = span.basis_vectors();
        for (i, a) in rows.iter().enumerate() {
            for b in &rows[i..] {
                if !pairing(n, a, b).is_zero() {
                    return Err(Error::precondition("subspace is not isotropic for the pairing"));
                }
            }
        }
        Ok(DiracVS { n, span })
    }

    /// Span of rows `(X | ξ)` of length `2n`.
    pub fn from_rows(n: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(n, Subspace::from_vectors(Kind::Vectors, 2 * n, rows)?)
    }

    /// Graph `{(♯ξ, ξ)}` of a bivector.
    pub fn from_bivector(p: &PoissonVS) -> Self {
        let n = p.dim();
        let rows = (0..n)
            .map(|j| {
                let mut r = p.matrix().column(j);
                r.extend((0..n).map(|i| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }));
                r
            })
            .collect();
        Self::from_rows(n, rows).expect("graph of an antisymmetric matrix is Lagrangian")
    }

    /// `{(X, ξ) : X ∈ o, ξ|_o = ω(X, ·)}`, with `omega` given in the canonical basis of `o`.
    pub fn from_subspace_form(o: &Subspace, omega: &MatrixQ) -> Result<Self> {
        o.expect_kind(Kind::Vectors, "range of a Dirac structure")?;
        let n = o.ambient_dim();
        let d = o.dim();
        ensure_dim("form size", d, omega.rows())?;
        omega.ensure_antisymmetric("form on a subspace")?;
        let mut rows = Vec::with_capacity(n);
        for a in 0..d {
            let xi = solve(o.basis(), omega.row(a))?
                .ok_or_else(|| Error::property("form values cannot be realised by a covector"))?;
            let mut r = o.basis().row(a).to_vec();
            r.extend(xi);
            rows.push(r);
        }
        for eta in o.annihilator().basis_vectors() {
            let mut r = vec![Rational::zero(); n];
            r.extend(eta);
            rows.push(r);
        }
        Self::from_rows(n, rows)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rational>> {
        self.span.basis_vectors()
    }

    /// Gram matrix of the pairing on the basis rows (zero for a valid structure).
    pub fn pairing_matrix(&self) -> MatrixQ {
        let rows = self.basis_rows();
        let mut m = MatrixQ::zeros(rows.len(), rows.len());
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in rows.iter().enumerate() {
                m[(i, j)] = pairing(self.n, a, b);
            }
        }
        m
    }

    pub fn contains(&self, x: &[Rational], xi: &[Rational]) -> Result<bool> {
        ensure_dim("vector part", self.n, x.len())?;
        ensure_dim("covector part", self.n, xi.len())?;
        let mut v = x.to_vec();
        v.extend_from_slice(xi);
        self.span.contains_vector(&v)
    }

    /// `pr_P(L)`.
    pub fn range(&self) -> Subspace {
        Subspace::span(Kind::Vectors, &self.span.basis().columns_range(0, self.n))
    }

    /// `{X : (X, 0) ∈ L}`.
    pub fn characteristic(&self) -> Subspace {
        let xi_part = self.span.basis().columns_range(self.n, 2 * self.n);
        let coeffs = kernel(&xi_part.transpose());
        let x_part = self.span.basis().columns_range(0, self.n);
        Subspace::span(Kind::Vectors, &coeffs.basis().mul(&x_part).expect("sizes agree"))
    }

    /// Range `o = pr_P(L)` and the form `ω(X1, X2) = ξ1(X2)` on it (canonical basis of `o`).
    pub fn range_and_form(&self) -> Result<(Subspace, MatrixQ)> {
        let o = self.range();
        let basis = self.span.basis();
        let x_part = basis.columns_range(0, self.n);
        let d = o.dim();
        let mut omega = MatrixQ::zeros(d, d);
        let o_rows = o.basis_vectors();
        for (a, oa) in o_rows.iter().enumerate() {
            let c = solve_left(&x_part, oa)?
                .ok_or_else(|| Error::property("range vector has no lift to L"))?;
            let lift = basis.vec_mul(&c)?;
            for (b, ob) in o_rows.iter().enumerate() {
                omega[(a, b)] = dot(&lift[self.n..], ob);
            }
        }
        Ok((o, omega))
    }

    /// `{(X, ξ|_W) : X ∈ W, (X, ξ) ∈ L}`, written in the coordinates given by the
    /// (independent) rows of `basis`.
    pub fn pullback_along(&self, basis: &MatrixQ) -> Result<DiracVS> {
        ensure_dim("pullback basis ambient", self.n, basis.cols())?;
        let w = Subspace::span(Kind::Vectors, basis);
        let d = basis.rows();
        if w.dim() != d {
            return Err(Error::precondition("pullback basis rows are linearly dependent"));
        }
        let lbasis = self.span.basis();
        let x_part = lbasis.columns_range(0, self.n);
        let xi_part = lbasis.columns_range(self.n, 2 * self.n);
        // Coefficients c with Σ c_i X_i ∈ W.
        let constraint = w.annihilator().basis().mul(&x_part.transpose())?;
        let coeffs = kernel(&constraint);
        let mut rows = Vec::with_capacity(coeffs.dim());
        for c in coeffs.basis_vectors() {
            let x = x_part.vec_mul(&c)?;
            let xi = xi_part.vec_mul(&c)?;
            let mut r = solve_left(basis, &x)?
                .ok_or_else(|| Error::property("vector part left W"))?;
            r.extend(basis.mul_vec(&xi)?);
            rows.push(r);
        }
        DiracVS::from_rows(d, rows)
    }

    pub fn pullback(&self, w: &Subspace) -> Result<DiracVS> {
        w.expect_kind(Kind::Vectors, "pullback subspace")?;
        self.pullback_along(w.basis())
    }

    /// `τ_B L = {(X, ξ + i_X B)}` with `(i_X B)_j = Σ_i X^i B_ij`.
    pub fn gauge(&self, b: &MatrixQ) -> Result<DiracVS> {
        ensure_dim("gauge form size", self.n, b.rows())?;
        b.ensure_antisymmetric("gauge form")?;
        let rows = self
            .basis_rows()
            .into_iter()
            .map(|r| {
                let shift = b.vec_mul(&r[..self.n]).expect("sizes agree");
                let mut out = r[..self.n].to_vec();
                out.extend(r[self.n..].iter().zip(shift).map(|(x, s)| x + s));
                out
            })
            .collect();
        DiracVS::from_rows(self.n, rows)
    }

    pub fn as_bivector(&self) -> BivectorExtraction {
        let characteristic = self.characteristic();
        if !characteristic.is_zero() {
            return BivectorExtraction::NotAGraph { characteristic };
        }
        let basis = self.span.basis();
        let xi_part = basis.columns_range(self.n, 2 * self.n);
        let x_part = basis.columns_range(0, self.n);
        let mut columns = Vec::with_capacity(self.n);
        for j in 0..self.n {
            let mut e = vec![Rational::zero(); self.n];
            e[j] = Rational::from_integer(1.into());
            let c = solve_left(&xi_part, &e)
                .expect("sizes agree")
                .expect("covector projection is onto when the characteristic is zero");
            columns.push(x_part.vec_mul(&c).expect("sizes agree"));
        }
        let pi = MatrixQ::from_rows(self.n, columns)
            .expect("column length")
            .transpose();
        BivectorExtraction::Bivector(
            PoissonVS::new(pi).expect("a Lagrangian graph has an antisymmetric matrix"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn coord(n: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(Kind::Vectors, n, idx)
    }

    #[test]
    fn graph_of_zero_bivector() {
        let l = DiracVS::from_bivector(&PoissonVS::zero(2));
        let expect = DiracVS::from_rows(2, vec![v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])]).unwrap();
        assert_eq!(l, expect);
        assert!(l.characteristic().is_zero());
        assert_eq!(l.as_bivector().bivector().unwrap(), PoissonVS::zero(2));
    }

    #[test]
    fn graph_round_trip() {
        let p = PoissonVS::standard_symplectic(1);
        let l = DiracVS::from_bivector(&p);
        assert!(l.contains(&v(&[1, 0]), &v(&[0, 1])).unwrap());
        assert_eq!(l.as_bivector().bivector().unwrap(), p);
        let l4 = DiracVS::from_bivector(&PoissonVS::standard_symplectic(2));
        assert!(l4.characteristic().is_zero());
        assert!(l4.pairing_matrix().is_zero());
    }

    #[test]
    fn subspace_form_examples() {
        let full = Subspace::full(Kind::Vectors, 2);
        let omega = MatrixQ::from_i64(&[&[0, 1], &[-1, 0]]);
        let l = DiracVS::from_subspace_form(&full, &omega).unwrap();
        assert!(l.as_bivector().bivector().is_some());
        assert_eq!(l.range_and_form().unwrap(), (full, omega));

        let zero = Subspace::zero(Kind::Vectors, 3);
        let l = DiracVS::from_subspace_form(&zero, &MatrixQ::zeros(0, 0)).unwrap();
        assert_eq!(l, DiracVS::from_bivector(&PoissonVS::zero(3)));

        let o = coord(3, &[0, 1]);
        let l = DiracVS::from_subspace_form(&o, &MatrixQ::zeros(2, 2)).unwrap();
        let expect = DiracVS::from_rows(
            3,
            vec![v(&[1, 0, 0, 0, 0, 0]), v(&[0, 1, 0, 0, 0, 0]), v(&[0, 0, 0, 0, 0, 1])],
        )
        .unwrap();
        assert_eq!(l, expect);
    }

    #[test]
    fn rejects_non_isotropic_and_wrong_dimension() {
        assert!(DiracVS::from_rows(1, vec![v(&[1, 1])]).is_err());
        assert!(DiracVS::from_rows(2, vec![v(&[1, 0, 0, 0])]).is_err());
    }

    #[test]
    fn pullback_examples() {
        let p = PoissonVS::standard_symplectic(2);
        let l = DiracVS::from_bivector(&p);
        assert_eq!(l.pullback(&Subspace::full(Kind::Vectors, 4)).unwrap(), l);

        let line = l.pullback(&coord(4, &[0])).unwrap();
        assert_eq!(line.characteristic(), Subspace::full(Kind::Vectors, 1));

        let plane = l.pullback(&coord(4, &[0, 1])).unwrap();
        assert_eq!(plane, DiracVS::from_bivector(&PoissonVS::standard_symplectic(1)));
    }

    #[test]
    fn characteristic_by_direct_solve() {
        // ♯ξ = (ξ2, −ξ1, ξ4, −ξ3); W° = span{(0,1,−1,0), (0,0,0,1)}, so
        // ♯W° = span{(1,0,0,1), (0,0,1,0)}, which meets W = span{e1, e2+e3} only in 0.
        let p = PoissonVS::standard_symplectic(2);
        let w = Subspace::from_vectors(Kind::Vectors, 4, vec![v(&[1, 0, 0, 0]), v(&[0, 1, 1, 0])]).unwrap();
        let lw = DiracVS::from_bivector(&p).pullback(&w).unwrap();
        assert!(lw.characteristic().is_zero());
    }

    #[test]
    fn gauge_examples() {
        let p = PoissonVS::standard_symplectic(1);
        let l = DiracVS::from_bivector(&p);
        assert_eq!(l.gauge(&MatrixQ::zeros(2, 2)).unwrap(), l);

        let tm = DiracVS::from_subspace_form(&Subspace::full(Kind::Vectors, 2), &MatrixQ::zeros(2, 2)).unwrap();
        let b = MatrixQ::from_i64(&[&[0, 3], &[-3, 0]]);
        let gauged = tm.gauge(&b).unwrap();
        assert_eq!(gauged.range_and_form().unwrap().1, b);

        let back = l.gauge(&b).unwrap().gauge(&b.neg()).unwrap();
        assert_eq!(back, l);
        assert!(l.gauge(&MatrixQ::from_i64(&[&[1, 0], &[0, 0]])).is_err());
    }

    #[test]
    fn non_graph_is_reported() {
        let l = DiracVS::from_subspace_form(&Subspace::full(Kind::Vectors, 2), &MatrixQ::zeros(2, 2)).unwrap();
        match l.as_bivector() {
            BivectorExtraction::NotAGraph { characteristic } => assert!(characteristic.is_full()),
            other => panic!("expected a non-graph, got {other:?}"),
        }
    }
}
