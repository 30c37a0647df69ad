//! Polynomial bivector fields and 2-forms on a coordinate patch.

use std::collections::BTreeMap;

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{MatrixQ, Rational};
use crate::poisson::PoissonVS;
use crate::poly::{Poly, PolyMap, PolyMatrix};

/// `Π = Σ_{i<j} Π^{ij} ∂i∧∂j` with polynomial coefficients in `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivectorField {
    entries: PolyMatrix,
}

/// `B = Σ_{i<j} B_ij dxi∧dxj` with polynomial coefficients in `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFormField {
    entries: PolyMatrix,
}

/// A totally antisymmetric 3-tensor, stored by its components with `i < j < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trivector {
    n: usize,
    components: BTreeMap<(usize, usize, usize), Poly>,
}

impl Trivector {
    fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> Poly) -> Trivector {
        let mut components = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let c = f(i, j, k);
                    if !c.is_zero() {
                        components.insert((i, j, k), c);
                    }
                }
            }
        }
        Trivector { n, components }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Nonzero components with `i < j < k`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Poly)> {
        self.components.iter().map(|(&k, v)| (k, v))
    }

    /// Component for any index triple, using total antisymmetry.
    pub fn component(&self, i: usize, j: usize, k: usize) -> Poly {
        if i == j || j == k || i == k {
            return Poly::zero(self.n);
        }
        let mut idx = [i, j, k];
        let mut sign = false;
        for a in 0..3 {
            for b in 0..2 - a {
                if idx[b] > idx[b + 1] {
                    idx.swap(b, b + 1);
                    sign = !sign;
                }
            }
        }
        let c = self
            .components
            .get(&(idx[0], idx[1], idx[2]))
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.n));
        if sign {
            -c
        } else {
            c
        }
    }
}

fn antisymmetric_from_entries(
    n: usize,
    entries: impl IntoIterator<Item = (usize, usize, Poly)>,
) -> Result<PolyMatrix> {
    let mut m = PolyMatrix::zeros(n, n, n);
    for (i, j, p) in entries {
        if i >= j || j >= n {
            return Err(Error::precondition(format!(
                "entry ({}, {}) must satisfy 1 ≤ i < j ≤ {n}",
                i + 1,
                j + 1
            )));
        }
        ensure_dim("entry variables", n, p.nvars())?;
        let sum = m.get(i, j) + &p;
        m.set(j, i, -sum.clone());
        m.set(i, j, sum);
    }
    Ok(m)
}

impl BivectorField {
    pub fn new(entries: PolyMatrix) -> Result<Self> {
        ensure_dim("bivector field size", entries.rows(), entries.cols())?;
        ensure_dim("bivector field variables", entries.rows(), entries.nvars())?;
        if !entries.is_antisymmetric() {
            return Err(Error::NotAntisymmetric {
                context: "bivector field",
            });
        }
        Ok(BivectorField { entries })
    }

    /// From 0-based `(i, j, Π^{ij})` with `i < j`; repeated pairs add up.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (usize, usize, Poly)>) -> Result<Self> {
        Ok(BivectorField {
            entries: antisymmetric_from_entries(n, entries)?,
        })
    }

    pub fn constant(p: &PoissonVS) -> Self {
        let n = p.dim();
        let mut m = PolyMatrix::zeros(n, n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, Poly::constant(n, p.matrix()[(i, j)].clone()));
            }
        }
        BivectorField { entries: m }
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        self.entries.get(i, j)
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.entries
    }

    /// Nonzero entries with `i < j`.
    pub fn upper_entries(&self) -> Vec<(usize, usize, Poly)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let p = self.entries.get(i, j);
                if !p.is_zero() {
                    out.push((i, j, p.clone()));
                }
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<PoissonVS> {
        ensure_dim("evaluation point", self.dim(), point.len())?;
        PoissonVS::new(self.entries.evaluate(point)?)
    }

    /// `J^{ijk} = Σ_l (Π^{il}∂_lΠ^{jk} + Π^{jl}∂_lΠ^{ki} + Π^{kl}∂_lΠ^{ij})`.
    pub fn jacobiator(&self) -> Trivector {
        let n = self.dim();
        let d: Vec<Vec<Vec<Poly>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.entries.get(i, j).gradient())
                    .collect()
            })
            .collect();
        let pi = |i: usize, j: usize| self.entries.get(i, j);
        #[allow(clippy::needless_range_loop)]
        Trivector::from_fn(n, |i, j, k| {
            let mut acc = Poly::zero(n);
            for l in 0..n {
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let coeff = pi(a, l);
                    let der = &d[b][c][l];
                    if !coeff.is_zero() && !der.is_zero() {
                        acc = &acc + &(coeff * der);
                    }
                }
            }
            acc
        })
    }

    pub fn is_poisson(&self) -> bool {
        self.jacobiator().is_zero()
    }

    /// `(φ_*Π)^{ab} = Σ_{ij} ∂_iφ^a ∂_jφ^b Π^{ij}`, composed with `φ⁻¹`.
    pub fn pushforward(&self, phi: &PolyMap, phi_inv: &PolyMap) -> Result<BivectorField> {
        let n = self.dim();
        for m in [phi, phi_inv] {
            ensure_dim("pushforward source dimension", n, m.source_dim())?;
            if m.target_dim() != n {
                return Err(Error::DimensionMismatch {
                    context: "pushforward target dimension",
                    expected: n,
                    found: m.target_dim(),
                });
            }
        }
        if !phi.compose(phi_inv)?.is_identity() {
            return Err(Error::precondition("φ ∘ φ⁻¹ is not the identity"));
        }
        if !phi_inv.compose(phi)?.is_identity() {
            return Err(Error::precondition("φ⁻¹ ∘ φ is not the identity"));
        }
        let j = phi.jacobian();
        let pushed = j.mul(&self.entries)?.mul(&j.transpose())?;
        BivectorField::new(pushed.compose(phi_inv)?)
    }

    /// Reorders coordinates: new coordinate `a` is old coordinate `perm[a]`.
    pub fn permute(&self, perm: &[usize]) -> Result<BivectorField> {
        let n = self.dim();
        let inv = inverse_permutation(perm, n)?;
        let mut m = PolyMatrix::zeros(n, n, n);
        for a in 0..n {
            for b in 0..n {
                m.set(a, b, self.entries.get(perm[a], perm[b]).embed(n, &inv)?);
            }
        }
        BivectorField::new(m)
    }
}

fn inverse_permutation(perm: &[usize], n: usize) -> Result<Vec<usize>> {
    ensure_dim("permutation length", n, perm.len())?;
    let mut inv = vec![usize::MAX; n];
    for (a, &i) in perm.iter().enumerate() {
        if i >= n || inv[i] != usize::MAX {
            return Err(Error::precondition("coordinate reordering is not a permutation"));
        }
        inv[i] = a;
    }
    Ok(inv)
}

impl TwoFormField {
    pub fn new(entries: PolyMatrix) -> Result<Self> {
        ensure_dim("2-form size", entries.rows(), entries.cols())?;
        ensure_dim("2-form variables", entries.rows(), entries.nvars())?;
        if !entries.is_antisymmetric() {
            return Err(Error::NotAntisymmetric { context: "2-form" });
        }
        Ok(TwoFormField { entries })
    }

    /// From 0-based `(i, j, B_ij)` with `i < j`.
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (usize, usize, Poly)>) -> Result<Self> {
        Ok(TwoFormField {
            entries: antisymmetric_from_entries(n, entries)?,
        })
    }

    pub fn zero(n: usize) -> Self {
        TwoFormField {
            entries: PolyMatrix::zeros(n, n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        self.entries.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    pub fn upper_entries(&self) -> Vec<(usize, usize, Poly)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let p = self.entries.get(i, j);
                if !p.is_zero() {
                    out.push((i, j, p.clone()));
                }
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<MatrixQ> {
        ensure_dim("evaluation point", self.dim(), point.len())?;
        self.entries.evaluate(point)
    }

    pub fn sub(&self, other: &TwoFormField) -> Result<TwoFormField> {
        ensure_dim("2-form size", self.dim(), other.dim())?;
        let n = self.dim();
        let mut m = PolyMatrix::zeros(n, n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.entry(i, j) - other.entry(i, j));
            }
        }
        Ok(TwoFormField { entries: m })
    }

    /// `(dB)_{ijk} = ∂_i B_jk − ∂_j B_ik + ∂_k B_ij`.
    pub fn exterior_derivative(&self) -> Trivector {
        let n = self.dim();
        let b = |i: usize, j: usize| self.entries.get(i, j);
        let d = |p: &Poly, i: usize| p.partial(i).expect("variable index in range");
        Trivector::from_fn(n, |i, j, k| {
            &(&d(b(j, k), i) - &d(b(i, k), j)) + &d(b(i, j), k)
        })
    }

    pub fn is_closed(&self) -> bool {
        self.exterior_derivative().is_zero()
    }
}

/// Outcome of checking `Π = Σ ∂q_I∧∂p_I + Σ φ_ij(y) ∂y_i∧∂y_j` in coordinates
/// `(q1..qk, p1..pk, y1..)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitFormCheck {
    pub holds: bool,
    pub failures: Vec<String>,
    /// The `y`-block `φ_ij` (indices relative to the `y` coordinates), in all variables.
    pub y_block: Vec<(usize, usize, Poly)>,
}

pub fn verify_split_form(pi: &BivectorField, k: usize) -> Result<SplitFormCheck> {
    let n = pi.dim();
    if 2 * k > n {
        return Err(Error::precondition(format!(
            "split form with k = {k} needs at least {} coordinates, got {n}",
            2 * k
        )));
    }
    let y: Vec<usize> = (2 * k..n).collect();
    let mut failures = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let e = pi.entry(a, b);
            let both_y = a >= 2 * k;
            let expect_one = a < k && b == a + k;
            if both_y {
                if !e.depends_only_on(&y) {
                    failures.push(format!("y-block entry ({}, {}) depends on q or p", a + 1, b + 1));
                }
            } else if expect_one {
                if *e != Poly::one(n) {
                    failures.push(format!("pairing entry ({}, {}) is not 1", a + 1, b + 1));
                }
            } else if !e.is_zero() {
                failures.push(format!("cross entry ({}, {}) is nonzero", a + 1, b + 1));
            }
        }
    }
    let y_block = pi
        .upper_entries()
        .into_iter()
        .filter(|(i, _, _)| *i >= 2 * k)
        .map(|(i, j, p)| (i - 2 * k, j - 2 * k, p))
        .collect();
    Ok(SplitFormCheck {
        holds: failures.is_empty(),
        failures,
        y_block,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;
    use crate::poly::Variables;

    fn field(n: usize, names: &Variables, entries: &[(usize, usize, &str)]) -> BivectorField {
        BivectorField::from_entries(
            n,
            entries
                .iter()
                .map(|&(i, j, s)| (i - 1, j - 1, names.parse(s).unwrap())),
        )
        .unwrap()
    }

    fn r4_vars() -> Variables {
        Variables::new(["x1", "x2", "x3", "y3"].map(String::from).to_vec()).unwrap()
    }

    fn pi1() -> BivectorField {
        field(4, &r4_vars(), &[(1, 2, "x1^2"), (3, 4, "1")])
    }

    fn pi2() -> BivectorField {
        field(4, &r4_vars(), &[(1, 2, "x1^2"), (3, 4, "1"), (2, 3, "x1*y3")])
    }

    #[test]
    fn jacobi_examples() {
        assert!(pi1().is_poisson());
        assert!(pi2().is_poisson());
        let v = Variables::numbered("x", 3);
        let broken = field(3, &v, &[(1, 2, "1"), (1, 3, "x1")]);
        let j = broken.jacobiator();
        assert!(!broken.is_poisson());
        assert_eq!(j.component(0, 1, 2), Poly::one(3));
        assert_eq!(j.component(2, 1, 0), -Poly::one(3));
        let constant = field(3, &v, &[(1, 2, "3"), (2, 3, "-1/2")]);
        assert!(constant.is_poisson());
    }

    #[test]
    fn evaluation_examples() {
        let v = Variables::numbered("x", 3);
        let fz = field(3, &v, &[(1, 2, "x3")]);
        assert_eq!(fz.evaluate(&[int(5), int(7), int(0)]).unwrap(), PoissonVS::zero(3));
        let at1 = fz.evaluate(&[int(0), int(0), int(1)]).unwrap();
        assert_eq!(at1.matrix()[(0, 1)], int(1));
        let p = PoissonVS::standard_symplectic(1);
        assert_eq!(BivectorField::constant(&p).evaluate(&[int(3), int(4)]).unwrap(), p);
        assert!(fz.evaluate(&[int(1)]).is_err());
    }

    #[test]
    fn pushforward_examples() {
        let v = Variables::numbered("x", 2);
        let sym = field(2, &v, &[(1, 2, "1")]);
        let id = PolyMap::identity(2);
        assert_eq!(sym.pushforward(&id, &id).unwrap(), sym);

        // (x1, x2) ↦ (x1 + 2 x2, x2) has determinant 1.
        let phi = PolyMap::new(2, vec![v.parse("x1 + 2*x2").unwrap(), v.parse("x2").unwrap()]).unwrap();
        let inv = PolyMap::new(2, vec![v.parse("x1 - 2*x2").unwrap(), v.parse("x2").unwrap()]).unwrap();
        assert_eq!(sym.pushforward(&phi, &inv).unwrap(), sym);
        assert!(matches!(sym.pushforward(&phi, &phi), Err(Error::Precondition(_))));
    }

    #[test]
    fn exterior_derivative_examples() {
        let v = Variables::numbered("x", 3);
        let constant = TwoFormField::from_entries(3, [(0, 1, v.parse("4").unwrap())]).unwrap();
        assert!(constant.is_closed());
        let b = TwoFormField::from_entries(3, [(1, 2, v.parse("x1").unwrap())]).unwrap();
        let db = b.exterior_derivative();
        assert_eq!(db.component(0, 1, 2), Poly::one(3));
        assert!(!b.is_closed());
        let r = r4_vars();
        let b = TwoFormField::from_entries(4, [(2, 3, r.parse("1").unwrap())]).unwrap();
        assert!(b.is_closed());
    }

    #[test]
    fn split_form_examples() {
        let reordered = pi1().permute(&[2, 3, 0, 1]).unwrap();
        let check = verify_split_form(&reordered, 1).unwrap();
        assert!(check.holds, "{:?}", check.failures);
        let x1 = Poly::var(4, 2).pow(2);
        assert_eq!(check.y_block, vec![(0, 1, x1)]);

        let sym = BivectorField::constant(&PoissonVS::standard_symplectic(2)).permute(&[0, 2, 1, 3]).unwrap();
        let check = verify_split_form(&sym, 2).unwrap();
        assert!(check.holds && check.y_block.is_empty());

        for perm in [[2, 3, 0, 1], [0, 1, 2, 3], [3, 2, 1, 0], [2, 3, 1, 0]] {
            let p = pi2().permute(&perm).unwrap();
            assert!(!verify_split_form(&p, 1).unwrap().holds);
        }
        assert!(verify_split_form(&pi1(), 3).is_err());
    }

    #[test]
    fn rejects_non_antisymmetric_matrix() {
        let m = PolyMatrix::new(2, vec![vec![Poly::one(2), Poly::zero(2)], vec![Poly::zero(2), Poly::zero(2)]]).unwrap();
        assert!(BivectorField::new(m).is_err());
        assert!(BivectorField::from_entries(2, [(1, 0, Poly::one(2))]).is_err());
    }
}
