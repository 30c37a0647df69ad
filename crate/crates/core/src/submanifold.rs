//! Submanifolds of polynomial Poisson patches, analysed at rational points.

use num_traits::Zero;
use rayon::prelude::*;

use crate::bivector::BivectorField;
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::rational::{dot, render_vec};
use crate::linalg::{coordinates_in, kernel, solve, solve_left, Kind, MatrixQ, Rational, Subspace};
use crate::poisson::{classify_subspace, cosymplectic_extension, ClassificationRecord};
use crate::poly::{Poly, PolyMap};
use crate::sampling::{grid_point, seeded};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubmanifoldPatch {
    /// Image of a polynomial map `ℚ^k → ℚ^n`; points are parameter values.
    Parametrized(PolyMap),
    /// Common zero set of polynomials on `ℚ^n`; points are ambient points on the locus.
    LevelSet { ambient_dim: usize, constraints: Vec<Poly> },
}

impl SubmanifoldPatch {
    pub fn level_set(ambient_dim: usize, constraints: Vec<Poly>) -> Result<Self> {
        for c in &constraints {
            ensure_dim("constraint variables", ambient_dim, c.nvars())?;
        }
        Ok(SubmanifoldPatch::LevelSet {
            ambient_dim,
            constraints,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            SubmanifoldPatch::Parametrized(m) => m.target_dim(),
            SubmanifoldPatch::LevelSet { ambient_dim, .. } => *ambient_dim,
        }
    }

    /// Number of coordinates of a query point.
    pub fn point_dim(&self) -> usize {
        match self {
            SubmanifoldPatch::Parametrized(m) => m.source_dim(),
            SubmanifoldPatch::LevelSet { ambient_dim, .. } => *ambient_dim,
        }
    }

    pub fn ambient_point(&self, q: &[Rational]) -> Result<Vec<Rational>> {
        ensure_dim("submanifold point", self.point_dim(), q.len())?;
        match self {
            SubmanifoldPatch::Parametrized(m) => m.evaluate(q),
            SubmanifoldPatch::LevelSet { constraints, .. } => {
                for (i, c) in constraints.iter().enumerate() {
                    if !c.evaluate(q)?.is_zero() {
                        return Err(Error::precondition(format!(
                            "point ({}) does not satisfy constraint {}",
                            render_vec(q).join(", "),
                            i + 1
                        )));
                    }
                }
                Ok(q.to_vec())
            }
        }
    }

    /// Rows spanning `T_qC`: the columns of the Jacobian, or a kernel basis of the
    /// constraint differentials. Rejects non-regular points.
    pub fn tangent_basis_at(&self, q: &[Rational]) -> Result<MatrixQ> {
        self.ambient_point(q)?;
        let irregular = |what: &str| {
            Error::precondition(format!(
                "{what} at point ({})",
                render_vec(q).join(", ")
            ))
        };
        match self {
            SubmanifoldPatch::Parametrized(m) => {
                let jt = m.jacobian_at(q)?.transpose();
                if jt.rank() != m.source_dim() {
                    return Err(irregular("parametrization is not an immersion"));
                }
                Ok(jt)
            }
            SubmanifoldPatch::LevelSet {
                ambient_dim,
                constraints,
            } => {
                let rows = constraints
                    .iter()
                    .map(|c| c.gradient().iter().map(|d| d.evaluate(q)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let jac = MatrixQ::from_rows(*ambient_dim, rows)?;
                if jac.rank() != constraints.len() {
                    return Err(irregular("constraint differentials are dependent"));
                }
                Ok(kernel(&jac).basis().clone())
            }
        }
    }

    pub fn tangent_at(&self, q: &[Rational]) -> Result<Subspace> {
        Ok(Subspace::span(Kind::Vectors, &self.tangent_basis_at(q)?))
    }

    pub fn conormal_at(&self, q: &[Rational]) -> Result<Subspace> {
        Ok(self.tangent_at(q)?.annihilator())
    }

    /// Restriction of an ambient polynomial to a function in the point coordinates.
    pub fn restrict(&self, f: &Poly) -> Result<Poly> {
        ensure_dim("ambient function variables", self.ambient_dim(), f.nvars())?;
        match self {
            SubmanifoldPatch::Parametrized(m) => f.compose(m.components()),
            SubmanifoldPatch::LevelSet { .. } => Ok(f.clone()),
        }
    }

    /// `df` on the tangent basis rows `b_a`: entry `a` is `df(b_a)`. The function is
    /// given in point coordinates (parameters, or ambient variables for level sets).
    pub fn differential_at(&self, f: &Poly, q: &[Rational]) -> Result<Vec<Rational>> {
        ensure_dim("function variables", self.point_dim(), f.nvars())?;
        let grad = f
            .gradient()
            .iter()
            .map(|d| d.evaluate(q))
            .collect::<Result<Vec<_>>>()?;
        match self {
            SubmanifoldPatch::Parametrized(_) => Ok(grad),
            SubmanifoldPatch::LevelSet { .. } => {
                let basis = self.tangent_basis_at(q)?;
                basis.mul_vec(&grad)
            }
        }
    }

    /// Deterministic sample points. Level sets are supported when all constraints are
    /// affine, by sampling coordinates along a basis of the solution space.
    pub fn sample_points(&self, seed: u64, height: u32, count: usize) -> Result<Vec<Vec<Rational>>> {
        let mut rng = seeded(seed);
        match self {
            SubmanifoldPatch::Parametrized(m) => Ok((0..count)
                .map(|_| grid_point(&mut rng, m.source_dim(), height))
                .collect()),
            SubmanifoldPatch::LevelSet {
                ambient_dim,
                constraints,
            } => {
                let n = *ambient_dim;
                if constraints.iter().any(|c| c.total_degree().unwrap_or(0) > 1) {
                    return Err(Error::precondition(
                        "grid sampling of level sets needs affine constraints; pass explicit points",
                    ));
                }
                let zero = vec![Rational::zero(); n];
                let mut a_rows = Vec::new();
                let mut rhs = Vec::new();
                for c in constraints {
                    let grad = c.gradient().iter().map(|d| d.evaluate(&zero)).collect::<Result<Vec<_>>>()?;
                    a_rows.push(grad);
                    rhs.push(-c.evaluate(&zero)?);
                }
                let a = MatrixQ::from_rows(n, a_rows)?;
                let base = solve(&a, &rhs)?
                    .ok_or_else(|| Error::precondition("the affine constraints have no common solution"))?;
                let dirs = kernel(&a);
                Ok((0..count)
                    .map(|_| {
                        let t = grid_point(&mut rng, dirs.dim(), height);
                        let offset = dirs.combine(&t);
                        base.iter().zip(offset).map(|(b, o)| b + o).collect()
                    })
                    .collect())
            }
        }
    }
}

pub fn classify_at(pi: &BivectorField, c: &SubmanifoldPatch, q: &[Rational]) -> Result<ClassificationRecord> {
    ensure_dim("bivector dimension", c.ambient_dim(), pi.dim())?;
    let tangent = c.tangent_at(q)?;
    let p = pi.evaluate(&c.ambient_point(q)?)?;
    classify_subspace(&p, &tangent)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileRow {
    pub point: Vec<Rational>,
    pub ambient_point: Vec<Rational>,
    pub record: ClassificationRecord,
}

/// Whether each quantity took a single value on the successfully analysed samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstancyFlags {
    pub dim_tangent: bool,
    pub dim_sharp_conormal: bool,
    pub dim_sum: bool,
    pub dim_characteristic: bool,
    pub rho_rank: bool,
}

impl ConstancyFlags {
    /// Constant rank of `TC + ♯N*C` on the samples: evidence, not proof, of pre-Poisson-ness.
    pub fn pre_poisson_on_samples(&self) -> bool {
        self.dim_sum
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub rows: Vec<std::result::Result<ProfileRow, Error>>,
    pub constant_on_samples: ConstancyFlags,
}

impl RankProfile {
    pub fn failures(&self) -> impl Iterator<Item = (usize, &Error)> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().err().map(|e| (i, e)))
    }
}

fn constant<T: PartialEq>(values: impl Iterator<Item = T>) -> bool {
    let mut it = values;
    match it.next() {
        None => true,
        Some(first) => it.all(|v| v == first),
    }
}

pub fn rank_profile(pi: &BivectorField, c: &SubmanifoldPatch, samples: &[Vec<Rational>]) -> RankProfile {
    let rows: Vec<_> = samples
        .par_iter()
        .map(|q| {
            Ok(ProfileRow {
                point: q.clone(),
                ambient_point: c.ambient_point(q)?,
                record: classify_at(pi, c, q)?,
            })
        })
        .collect();
    let ok = || rows.iter().filter_map(|r| r.as_ref().ok()).map(|r| &r.record);
    let constant_on_samples = ConstancyFlags {
        dim_tangent: constant(ok().map(|r| r.dim_c)),
        dim_sharp_conormal: constant(ok().map(|r| r.dim_sharp_conormal)),
        dim_sum: constant(ok().map(|r| r.dim_sum)),
        dim_characteristic: constant(ok().map(|r| r.dim_characteristic)),
        rho_rank: constant(ok().map(|r| r.rho_rank)),
    };
    RankProfile {
        rows,
        constant_on_samples,
    }
}

struct PointData {
    tangent_basis: MatrixQ,
    /// Characteristic directions `T_qC ∩ ♯N*_qC` in tangent coordinates (rows).
    characteristic: MatrixQ,
    lc: crate::dirac::DiracVS,
    p: crate::poisson::PoissonVS,
}

fn point_data(pi: &BivectorField, c: &SubmanifoldPatch, q: &[Rational]) -> Result<PointData> {
    ensure_dim("bivector dimension", c.ambient_dim(), pi.dim())?;
    let tangent_basis = c.tangent_basis_at(q)?;
    let p = pi.evaluate(&c.ambient_point(q)?)?;
    let record = classify_subspace(&p, &Subspace::span(Kind::Vectors, &tangent_basis))?;
    let characteristic = coordinates_in(&tangent_basis, record.characteristic.basis())?;
    let lc = p.graph().pullback_along(&tangent_basis)?;
    Ok(PointData {
        tangent_basis,
        characteristic,
        lc,
        p,
    })
}

fn annihilates(alpha: &[Rational], rows: &MatrixQ) -> bool {
    (0..rows.rows()).all(|i| dot(alpha, rows.row(i)).is_zero())
}

/// Whether `df` annihilates the characteristic directions at `q`.
pub fn is_basic(f: &Poly, pi: &BivectorField, c: &SubmanifoldPatch, q: &[Rational]) -> Result<bool> {
    let data = point_data(pi, c, q)?;
    Ok(annihilates(&c.differential_at(f, q)?, &data.characteristic))
}

pub fn is_basic_on_samples(
    f: &Poly,
    pi: &BivectorField,
    c: &SubmanifoldPatch,
    samples: &[Vec<Rational>],
) -> Vec<Result<bool>> {
    samples.par_iter().map(|q| is_basic(f, pi, c, q)).collect()
}

/// `{f, g}_C(q) = Y(g)` where `(Y, df_q)` lies in the pullback of `graph Π` to `T_qC`.
pub fn basic_bracket(f: &Poly, g: &Poly, pi: &BivectorField, c: &SubmanifoldPatch, q: &[Rational]) -> Result<Rational> {
    let data = point_data(pi, c, q)?;
    intrinsic_bracket(&data, &c.differential_at(f, q)?, &c.differential_at(g, q)?)
}

fn intrinsic_bracket(data: &PointData, alpha_f: &[Rational], alpha_g: &[Rational]) -> Result<Rational> {
    for (name, alpha) in [("f", alpha_f), ("g", alpha_g)] {
        if !annihilates(alpha, &data.characteristic) {
            return Err(Error::precondition(format!(
                "{name} is not basic: its differential pairs with a characteristic direction"
            )));
        }
    }
    let k = data.tangent_basis.rows();
    let rows = data.lc.span().basis();
    let xi_part = rows.columns_range(k, 2 * k);
    let coeffs = solve_left(&xi_part, alpha_f)?
        .ok_or_else(|| Error::precondition("no Y with (Y, df) in the pulled-back Dirac structure"))?;
    let y = rows.columns_range(0, k).vec_mul(&coeffs)?;
    // Y is determined up to {Y : (Y, 0) ∈ L_C}; dg must not see that ambiguity.
    let ambiguity = data.lc.characteristic();
    if !annihilates(alpha_g, ambiguity.basis()) {
        return Err(Error::property("bracket depends on the choice of Y"));
    }
    Ok(dot(alpha_g, &y))
}

/// The bracket computed intrinsically and through a cosymplectic extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketConsistency {
    pub intrinsic: Rational,
    pub via_extension: Rational,
    pub extension_dim: usize,
    pub agree: bool,
}

pub fn bracket_consistency_check(
    pi: &BivectorField,
    c: &SubmanifoldPatch,
    q: &[Rational],
    f: &Poly,
    g: &Poly,
) -> Result<BracketConsistency> {
    let data = point_data(pi, c, q)?;
    let alpha_f = c.differential_at(f, q)?;
    let alpha_g = c.differential_at(g, q)?;
    let intrinsic = intrinsic_bracket(&data, &alpha_f, &alpha_g)?;

    let tangent = Subspace::span(Kind::Vectors, &data.tangent_basis);
    let ext = cosymplectic_extension(&data.p, &tangent)?;
    let k = data.tangent_basis.rows();
    let w_basis = data.tangent_basis.vstack(ext.r.basis())?;
    let pi_w = data.p.induced_bivector_in_basis(&w_basis)?;
    let extend = |alpha: &[Rational]| {
        let mut v = alpha.to_vec();
        v.resize(w_basis.rows(), Rational::zero());
        v
    };
    let y = pi_w.sharp(&extend(&alpha_f))?;
    if y[k..].iter().any(|x| !x.is_zero()) {
        return Err(Error::property(
            "Hamiltonian vector of the extended function is not tangent to C",
        ));
    }
    let via_extension = dot(&extend(&alpha_g), &y);
    Ok(BracketConsistency {
        agree: intrinsic == via_extension,
        intrinsic,
        via_extension,
        extension_dim: w_basis.rows(),
    })
}
