//! Poisson vector spaces.
//!
//! Conventions used throughout the crate:
//! `(♯ξ)^i = Σ_j Π^{ij} ξ_j` and, on the leaf `𝒪 = ♯P*`, `Ω(♯ξ, ♯η) = −ξ(♯η)`.
//! With `Π = ∂1∧∂2` this gives `♯e2* = e1`, `♯e1* = −e2` and `Ω(e1, e2) = −1`.

use num_traits::Zero;

use crate::dirac::DiracVS;
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::rational::{dot, frac, one};
use crate::linalg::{coordinates_in, preimage, solve, Kind, MatrixQ, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonVS {
    pi: MatrixQ,
}

impl PoissonVS {
    pub fn new(pi: MatrixQ) -> Result<Self> {
        pi.ensure_antisymmetric("Poisson bivector")?;
        Ok(PoissonVS { pi })
    }

    pub fn zero(n: usize) -> Self {
        PoissonVS {
            pi: MatrixQ::zeros(n, n),
        }
    }

    /// Bivector `Σ c ∂i∧∂j` from 0-based `(i, j, c)` triples with `i < j`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, Rational)]) -> Result<Self> {
        let mut pi = MatrixQ::zeros(n, n);
        for (i, j, c) in entries {
            if *i >= n || *j >= n || i == j {
                return Err(Error::precondition(format!(
                    "bivector entry ({i}, {j}) is not an off-diagonal index pair of a {n}-dimensional space"
                )));
            }
            pi[(*i, *j)] = &pi[(*i, *j)] + c;
            pi[(*j, *i)] = &pi[(*j, *i)] - c;
        }
        Ok(PoissonVS { pi })
    }

    /// `Σ_{a<k} ∂_{2a+1}∧∂_{2a+2}` on ℚ^{2k}.
    pub fn standard_symplectic(k: usize) -> Self {
        let entries: Vec<_> = (0..k).map(|a| (2 * a, 2 * a + 1, one())).collect();
        Self::from_entries(2 * k, &entries).expect("valid index pairs")
    }

    pub fn dim(&self) -> usize {
        self.pi.rows()
    }

    pub fn matrix(&self) -> &MatrixQ {
        &self.pi
    }

    pub fn sharp(&self, xi: &[Rational]) -> Result<Vec<Rational>> {
        self.pi.mul_vec(xi)
    }

    pub fn sharp_image(&self, s: &Subspace) -> Result<Subspace> {
        s.expect_kind(Kind::Covectors, "sharp map domain")?;
        s.image(&self.pi, Kind::Vectors)
    }

    /// `♯⁻¹ s` for a subspace of vectors.
    pub fn sharp_preimage(&self, s: &Subspace) -> Result<Subspace> {
        s.expect_kind(Kind::Vectors, "sharp map preimage")?;
        preimage(&self.pi, s, Kind::Covectors)
    }

    /// The leaf `𝒪 = ♯P*`.
    pub fn leaf(&self) -> Subspace {
        Subspace::span(Kind::Vectors, &self.pi.transpose())
    }

    pub fn rank(&self) -> usize {
        self.pi.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.dim()
    }

    /// `M Π Mᵀ`: the bivector carried along the linear map `M`.
    pub fn pushforward(&self, m: &MatrixQ) -> Result<PoissonVS> {
        ensure_dim("pushforward source", self.dim(), m.cols())?;
        PoissonVS::new(m.mul(&self.pi)?.mul(&m.transpose())?)
    }

    fn preimage_in_dual(&self, x: &[Rational], what: &str) -> Result<Vec<Rational>> {
        ensure_dim("leaf vector", self.dim(), x.len())?;
        solve(&self.pi, x)?
            .ok_or_else(|| Error::precondition(format!("{what} does not lie in the leaf ♯P*")))
    }

    /// `Ω(x, y) = −ξ(y)` for any `ξ` with `♯ξ = x`; both arguments must lie in the leaf.
    pub fn leaf_form_value(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        let xi = self.preimage_in_dual(x, "first argument")?;
        self.preimage_in_dual(y, "second argument")?;
        Ok(-dot(&xi, y))
    }

    pub fn classify(&self, c: &Subspace) -> Result<ClassificationRecord> {
        classify_subspace(self, c)
    }

    /// Induced bivector on `w`, in the canonical basis of `w`.
    pub fn induced_bivector(&self, w: &Subspace) -> Result<PoissonVS> {
        self.induced_bivector_in_basis(w.basis())
    }

    /// Induced bivector on the span of the rows of `basis` (which must be independent),
    /// expressed in that basis. The span must meet `♯` of its annihilator trivially.
    pub fn induced_bivector_in_basis(&self, basis: &MatrixQ) -> Result<PoissonVS> {
        ensure_dim("subspace basis ambient", self.dim(), basis.cols())?;
        let w = Subspace::span(Kind::Vectors, basis);
        if w.dim() != basis.rows() {
            return Err(Error::precondition("subspace basis rows are linearly dependent"));
        }
        let sharp_ann = self.sharp_image(&w.annihilator())?;
        if !w.is_transverse_to(&sharp_ann)? {
            return Err(Error::precondition(
                "subspace is not Poisson-Dirac: it meets ♯ of its annihilator nontrivially",
            ));
        }
        let d = basis.rows();
        // Extensions ξ_b satisfy ξ_b(w_a) = δ_ab and vanish on ♯W°.
        let constraints = basis.vstack(sharp_ann.basis())?;
        let mut columns = Vec::with_capacity(d);
        for b in 0..d {
            let mut rhs = vec![Rational::zero(); constraints.rows()];
            rhs[b] = one();
            let xi = solve(&constraints, &rhs)?
                .ok_or_else(|| Error::property("covector extension does not exist"))?;
            let x = self.sharp(&xi)?;
            let coords = coordinates_in(basis, &MatrixQ::from_rows(self.dim(), vec![x])?)
                .map_err(|_| Error::property("♯ of an extension left the subspace"))?;
            columns.push(coords.row(0).to_vec());
        }
        PoissonVS::new(MatrixQ::from_rows(d, columns)?.transpose())
    }

    pub fn graph(&self) -> DiracVS {
        DiracVS::from_bivector(self)
    }
}

/// Dimensions and flags describing how a subspace `C` sits in a Poisson vector space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub ambient_dim: usize,
    pub dim_c: usize,
    pub dim_conormal: usize,
    pub dim_sharp_conormal: usize,
    pub dim_sum: usize,
    pub dim_characteristic: usize,
    pub rho_rank: usize,
    pub coisotropic: bool,
    pub cosymplectic: bool,
    pub pointwise_poisson_dirac: bool,
    pub lagrangian_in_leaf: bool,
    /// `C ∩ ♯C°`.
    pub characteristic: Subspace,
    pub sharp_conormal: Subspace,
}

pub fn classify_subspace(p: &PoissonVS, c: &Subspace) -> Result<ClassificationRecord> {
    c.expect_kind(Kind::Vectors, "classified subspace")?;
    ensure_dim("classified subspace ambient", p.dim(), c.ambient_dim())?;
    let ann = c.annihilator();
    let sharp_ann = p.sharp_image(&ann)?;
    let sum = c.sum(&sharp_ann)?;
    let characteristic = c.intersect(&sharp_ann)?;
    let rho_rank = sum.dim() - c.dim();

    // ρ = pr_{P/C} ∘ ♯ on C°; its kernel is C° ∩ ♯⁻¹C.
    let kernel_rho = ann.intersect(&p.sharp_preimage(c)?)?;
    if ann.dim() - kernel_rho.dim() != rho_rank {
        return Err(Error::property(format!(
            "two computations of rank ρ disagree: {} vs {}",
            ann.dim() - kernel_rho.dim(),
            rho_rank
        )));
    }

    let leaf = p.leaf();
    let c_in_leaf = c.intersect(&leaf)?;
    Ok(ClassificationRecord {
        ambient_dim: p.dim(),
        dim_c: c.dim(),
        dim_conormal: ann.dim(),
        dim_sharp_conormal: sharp_ann.dim(),
        dim_sum: sum.dim(),
        dim_characteristic: characteristic.dim(),
        rho_rank,
        coisotropic: c.contains(&sharp_ann)?,
        cosymplectic: sum.is_full() && characteristic.is_zero(),
        pointwise_poisson_dirac: characteristic.is_zero(),
        lagrangian_in_leaf: sharp_ann == c_in_leaf,
        characteristic,
        sharp_conormal: sharp_ann,
    })
}

/// The two conditions characterising the subspaces `W ⊇ C` that are Poisson-Dirac
/// with `C` coisotropic in the induced structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoisLaConditions {
    /// `W + ♯C° ⊇ 𝒪`.
    pub cond_leaf: bool,
    /// `W ∩ (C + ♯C°) = C`.
    pub cond_int: bool,
}

impl PoisLaConditions {
    pub fn both(&self) -> bool {
        self.cond_leaf && self.cond_int
    }
}

pub fn check_poisla(p: &PoissonVS, c: &Subspace, w: &Subspace) -> Result<PoisLaConditions> {
    c.expect_kind(Kind::Vectors, "subspace C")?;
    w.expect_kind(Kind::Vectors, "subspace W")?;
    ensure_dim("subspace ambient", p.dim(), c.ambient_dim())?;
    if !w.contains(c)? {
        return Err(Error::precondition("C is not contained in W"));
    }
    let sharp_ann = p.sharp_image(&c.annihilator())?;
    let cond_leaf = w.sum(&sharp_ann)?.contains(&p.leaf())?;
    let cond_int = w.intersect(&c.sum(&sharp_ann)?)? == *c;
    let out = PoisLaConditions { cond_leaf, cond_int };

    if out.both() {
        let rec = classify_subspace(p, w)?;
        if !rec.pointwise_poisson_dirac {
            return Err(Error::property(
                "W satisfies both conditions but is not Poisson-Dirac",
            ));
        }
        let pw = p.induced_bivector(w)?;
        let c_in_w = Subspace::span(Kind::Vectors, &coordinates_in(w.basis(), c.basis())?);
        if !classify_subspace(&pw, &c_in_w)?.coisotropic {
            return Err(Error::property(
                "W satisfies both conditions but C is not coisotropic in the induced structure",
            ));
        }
    }
    Ok(out)
}

/// Cosymplectic subspace `W = C ⊕ R` where `R` is the greedy standard-basis
/// complement of `C + ♯C°`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosymplecticExtension {
    pub w: Subspace,
    pub r: Subspace,
    pub conditions: PoisLaConditions,
}

pub fn cosymplectic_extension(p: &PoissonVS, c: &Subspace) -> Result<CosymplecticExtension> {
    c.expect_kind(Kind::Vectors, "subspace C")?;
    ensure_dim("subspace ambient", p.dim(), c.ambient_dim())?;
    let sum = c.sum(&p.sharp_image(&c.annihilator())?)?;
    let r = sum.standard_complement();
    let w = c.sum(&r)?;
    if !classify_subspace(p, &w)?.cosymplectic {
        return Err(Error::property("extension is not cosymplectic"));
    }
    let conditions = check_poisla(p, c, &w)?;
    if !conditions.both() {
        return Err(Error::property("extension fails the Poisson-Dirac conditions for C"));
    }
    Ok(CosymplecticExtension { w, r, conditions })
}

/// The canonical Poisson isomorphism `φ = Id + A + B: V → W` fixing `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalIso {
    pub source: Subspace,
    pub target: Subspace,
    /// Column `a` holds the coordinates of `φ(v_a)` in the canonical basis of the target.
    pub matrix: MatrixQ,
    /// Row `a` is `A v_a` (ambient coordinates).
    pub a_part: MatrixQ,
    /// Row `a` is `B v_a` (ambient coordinates).
    pub b_part: MatrixQ,
}

impl CanonicalIso {
    /// `φ(x)` for an ambient vector `x ∈ V`, in ambient coordinates.
    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let coords = self
            .source
            .coordinates(x)?
            .ok_or_else(|| Error::precondition("vector is not in the source subspace"))?;
        Ok(self.target.combine(&self.matrix.mul_vec(&coords)?))
    }
}

pub fn canonical_iso(p: &PoissonVS, c: &Subspace, v: &Subspace, w: &Subspace) -> Result<CanonicalIso> {
    for (name, s) in [("V", v), ("W", w)] {
        if !classify_subspace(p, s)?.cosymplectic {
            return Err(Error::precondition(format!("{name} is not cosymplectic")));
        }
        let cond = check_poisla(p, c, s)?;
        if !cond.cond_leaf {
            return Err(Error::precondition(format!(
                "{name} + ♯C° does not contain the leaf"
            )));
        }
        if !cond.cond_int {
            return Err(Error::precondition(format!("{name} ∩ (C + ♯C°) differs from C")));
        }
    }
    let n = p.dim();
    let sharp_v_ann = p.sharp_image(&v.annihilator())?;
    if w.dim() != v.dim() || !w.is_transverse_to(&sharp_v_ann)? {
        return Err(Error::property("W is not a graph over V along ♯V°"));
    }

    // v_a = w' + u with w' ∈ W, u ∈ ♯V°, and A v_a = −u.
    let split = w.basis().vstack(sharp_v_ann.basis())?;
    let mut a_rows = Vec::with_capacity(v.dim());
    for va in v.basis_vectors() {
        let coeffs = solve(&split.transpose(), &va)?
            .ok_or_else(|| Error::property("W ⊕ ♯V° does not span P"))?;
        let u = sharp_v_ann.combine(&coeffs[w.dim()..]);
        a_rows.push(u.into_iter().map(|x| -x).collect::<Vec<_>>());
    }

    // B v = ½ ♯_V(Ω(Av, A•)), computed in the canonical basis of V.
    let pi_v = p.induced_bivector(v)?;
    let d = v.dim();
    let mut b_rows = Vec::with_capacity(d);
    for a in 0..d {
        let mut eta = Vec::with_capacity(d);
        for row in &a_rows {
            eta.push(p.leaf_form_value(&a_rows[a], row)?);
        }
        let half: Vec<Rational> = pi_v
            .sharp(&eta)?
            .into_iter()
            .map(|x| x * frac(1, 2))
            .collect();
        b_rows.push(v.combine(&half));
    }

    let mut images = Vec::with_capacity(d);
    for (a, va) in v.basis_vectors().into_iter().enumerate() {
        let img: Vec<Rational> = (0..n)
            .map(|i| &va[i] + &a_rows[a][i] + &b_rows[a][i])
            .collect();
        let coords = w
            .coordinates(&img)?
            .ok_or_else(|| Error::property("φ(v) does not lie in W"))?;
        images.push(coords);
    }
    let matrix = MatrixQ::from_rows(d, images)?.transpose();
    let iso = CanonicalIso {
        source: v.clone(),
        target: w.clone(),
        matrix,
        a_part: MatrixQ::from_rows(n, a_rows)?,
        b_part: MatrixQ::from_rows(n, b_rows)?,
    };

    for x in c.basis_vectors() {
        if iso.apply(&x)? != x {
            return Err(Error::property("φ does not restrict to the identity on C"));
        }
    }
    if pi_v.pushforward(&iso.matrix)? != p.induced_bivector(w)? {
        return Err(Error::property("φ does not carry the induced bivector of V to that of W"));
    }
    Ok(iso)
}

/// Splitting `P = V ⊕ E ⊕ F` adapted to a coisotropic `M` with `E = ♯M°`,
/// `M = V ⊕ E`, and `F` isotropic with `Ω(e_I, f_J) = −δ_IJ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoisotropicSplitting {
    pub v_basis: MatrixQ,
    pub e_basis: MatrixQ,
    pub f_basis: MatrixQ,
    /// Columns `[V | E | F]`.
    pub change_of_basis: MatrixQ,
    /// `T⁻¹ Π T⁻ᵀ`: induced bivector on `V` plus `Σ ∂e_I∧∂f_I`.
    pub model: PoissonVS,
}

impl CoisotropicSplitting {
    pub fn e(&self) -> Subspace {
        Subspace::span(Kind::Vectors, &self.e_basis)
    }

    pub fn v(&self) -> Subspace {
        Subspace::span(Kind::Vectors, &self.v_basis)
    }
}

/// `E = ♯M°` after checking that `M` is coisotropic and `♯` is injective on `M°`.
pub fn characteristic_of_coisotropic(p: &PoissonVS, m: &Subspace) -> Result<Subspace> {
    m.expect_kind(Kind::Vectors, "subspace M")?;
    ensure_dim("subspace ambient", p.dim(), m.ambient_dim())?;
    let ann = m.annihilator();
    let e = p.sharp_image(&ann)?;
    if !m.contains(&e)? {
        return Err(Error::precondition("M is not coisotropic"));
    }
    if e.dim() != ann.dim() {
        return Err(Error::precondition("♯ is not injective on the annihilator of M"));
    }
    Ok(e)
}

pub fn coisotropic_splitting(p: &PoissonVS, m: &Subspace) -> Result<CoisotropicSplitting> {
    let e = characteristic_of_coisotropic(p, m)?;
    let v = e.greedy_complement(m.basis_vectors());
    coisotropic_splitting_with(p, m, &v)
}

/// As [`coisotropic_splitting`] with a prescribed complement `V` of `E` in `M`.
pub fn coisotropic_splitting_with(p: &PoissonVS, m: &Subspace, v: &Subspace) -> Result<CoisotropicSplitting> {
    let e = characteristic_of_coisotropic(p, m)?;
    if !m.contains(v)? || v.dim() + e.dim() != m.dim() || !v.is_transverse_to(&e)? {
        return Err(Error::precondition("V is not a complement of E inside M"));
    }
    let n = p.dim();
    let k = e.dim();
    let sharp_v_ann = p.sharp_image(&v.annihilator())?;
    let g = e.greedy_complement(sharp_v_ann.basis_vectors());
    if g.dim() != k || sharp_v_ann.dim() != 2 * k {
        return Err(Error::property("♯V° is not a symplectic space containing E as a Lagrangian"));
    }
    let e_rows = e.basis_vectors();
    let g_rows = g.basis_vectors();

    // f_J = Σ_L g_L c_LJ with Ω(e_I, f_J) = −δ_IJ.
    let mut pairing = MatrixQ::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            pairing[(i, j)] = p.leaf_form_value(&e_rows[i], &g_rows[j])?;
        }
    }
    let coeff = pairing
        .inverse()
        .ok_or_else(|| Error::property("E is not paired nondegenerately with its complement"))?
        .neg();
    let g_mat = MatrixQ::from_rows(n, g_rows)?;
    let mut f_rows = coeff.transpose().mul(&g_mat)?.row_vecs();

    // f_J += ½ Σ_L Ω(f_J, f_L) e_L makes F isotropic.
    let mut shift = Vec::with_capacity(k);
    for fj in &f_rows {
        let mut s = vec![Rational::zero(); n];
        for (fl, el) in f_rows.iter().zip(&e_rows) {
            let w = p.leaf_form_value(fj, fl)? * frac(1, 2);
            for (si, ei) in s.iter_mut().zip(el) {
                *si += &w * ei;
            }
        }
        shift.push(s);
    }
    for (fj, s) in f_rows.iter_mut().zip(shift) {
        for (x, y) in fj.iter_mut().zip(s) {
            *x += y;
        }
    }

    let v_basis = v.basis().clone();
    let e_basis = e.basis().clone();
    let f_basis = MatrixQ::from_rows(n, f_rows)?;
    let change_of_basis = v_basis.vstack(&e_basis)?.vstack(&f_basis)?.transpose();
    let t_inv = change_of_basis
        .inverse()
        .ok_or_else(|| Error::property("V, E and F do not span P"))?;
    let model = p.pushforward(&t_inv)?;

    let expected = split_model(&p.induced_bivector(v)?, k);
    if model != expected {
        return Err(Error::property("pushed-forward bivector is not in split form"));
    }
    Ok(CoisotropicSplitting {
        v_basis,
        e_basis,
        f_basis,
        change_of_basis,
        model,
    })
}

/// Block-diagonal `Π_V ⊕ Σ_I ∂e_I∧∂f_I` in coordinates `(V | E | F)`.
fn split_model(pi_v: &PoissonVS, k: usize) -> PoissonVS {
    let dv = pi_v.dim();
    let n = dv + 2 * k;
    let mut m = MatrixQ::zeros(n, n);
    for i in 0..dv {
        for j in 0..dv {
            m[(i, j)] = pi_v.matrix()[(i, j)].clone();
        }
    }
    for a in 0..k {
        m[(dv + a, dv + k + a)] = one();
        m[(dv + k + a, dv + a)] = -one();
    }
    PoissonVS { pi: m }
}

/// Linear isomorphism `Φ: P1 → P2` carrying `Π1` to `Π2` and fixing `M` pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessIso {
    pub matrix: MatrixQ,
    pub splitting1: CoisotropicSplitting,
    pub splitting2: CoisotropicSplitting,
}

pub fn linear_uniqueness_iso(
    p1: &PoissonVS,
    p2: &PoissonVS,
    m: &Subspace,
    v: &Subspace,
) -> Result<UniquenessIso> {
    ensure_dim("second Poisson space", p1.dim(), p2.dim())?;
    let e1 = characteristic_of_coisotropic(p1, m)?;
    let e2 = characteristic_of_coisotropic(p2, m)?;
    if e1 != e2 {
        return Err(Error::precondition("♯₁M° and ♯₂M° differ"));
    }
    let l1 = p1.graph().pullback(m)?;
    let l2 = p2.graph().pullback(m)?;
    if l1 != l2 {
        return Err(Error::precondition(
            "the two bivectors induce different Dirac structures on M",
        ));
    }
    let s1 = coisotropic_splitting_with(p1, m, v)?;
    let s2 = coisotropic_splitting_with(p2, m, v)?;
    if s1.model != s2.model {
        return Err(Error::property("the two split models differ"));
    }
    let inv1 = s1
        .change_of_basis
        .inverse()
        .ok_or_else(|| Error::property("splitting is not a basis"))?;
    let matrix = s2.change_of_basis.mul(&inv1)?;
    if p1.pushforward(&matrix)? != *p2 {
        return Err(Error::property("Φ does not carry Π1 to Π2"));
    }
    for x in m.basis_vectors() {
        if matrix.mul_vec(&x)? != x {
            return Err(Error::property("Φ is not the identity on M"));
        }
    }
    Ok(UniquenessIso {
        matrix,
        splitting1: s1,
        splitting2: s2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn span(n: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::from_vectors(Kind::Vectors, n, rows.iter().map(|r| v(r)).collect()).unwrap()
    }

    fn coord(n: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(Kind::Vectors, n, idx)
    }

    fn sym4() -> PoissonVS {
        PoissonVS::standard_symplectic(2)
    }

    #[test]
    fn sharp_image_examples() {
        let p = PoissonVS::standard_symplectic(1);
        let s = Subspace::coordinate(Kind::Covectors, 2, &[1]);
        assert_eq!(p.sharp_image(&s).unwrap(), coord(2, &[0]));

        let z = PoissonVS::zero(3);
        assert!(z.sharp_image(&Subspace::full(Kind::Covectors, 3)).unwrap().is_zero());

        let s = Subspace::coordinate(Kind::Covectors, 4, &[2, 3]);
        assert_eq!(sym4().sharp_image(&s).unwrap(), coord(4, &[2, 3]));
    }

    #[test]
    fn sharp_rejects_vectors() {
        let p = sym4();
        assert!(matches!(
            p.sharp_image(&coord(4, &[0])),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn sign_convention() {
        let p = PoissonVS::standard_symplectic(1);
        assert_eq!(p.sharp(&v(&[0, 1])).unwrap(), v(&[1, 0]));
        assert_eq!(p.sharp(&v(&[1, 0])).unwrap(), v(&[0, -1]));
        assert_eq!(p.leaf_form_value(&v(&[1, 0]), &v(&[0, 1])).unwrap(), int(-1));
    }

    #[test]
    fn classify_examples() {
        let p = sym4();
        let whole = Subspace::full(Kind::Vectors, 4);
        let r = classify_subspace(&p, &whole).unwrap();
        assert!(r.coisotropic && r.cosymplectic);

        let r = classify_subspace(&p, &coord(4, &[0, 1])).unwrap();
        assert!(r.cosymplectic);
        assert_eq!(r.dim_characteristic, 0);

        let c = coord(4, &[0]);
        let r = classify_subspace(&p, &c).unwrap();
        assert_eq!(r.rho_rank, 2);
        assert_eq!(r.characteristic, c);
        assert!(!r.coisotropic && !r.cosymplectic);
        assert_eq!(r.sharp_conormal, coord(4, &[0, 2, 3]));
    }

    #[test]
    fn induced_bivector_examples() {
        let p = sym4();
        assert_eq!(p.induced_bivector(&Subspace::full(Kind::Vectors, 4)).unwrap(), p);
        let pw = p.induced_bivector(&coord(4, &[0, 1])).unwrap();
        assert_eq!(pw, PoissonVS::standard_symplectic(1));

        let q = PoissonVS::from_entries(3, &[(0, 1, int(1))]).unwrap();
        assert_eq!(q.induced_bivector(&coord(3, &[2])).unwrap(), PoissonVS::zero(1));

        assert!(p.induced_bivector(&coord(4, &[0])).is_err());
    }

    #[test]
    fn poisla_examples() {
        let p = sym4();
        let whole = Subspace::full(Kind::Vectors, 4);
        assert!(check_poisla(&p, &whole, &whole).unwrap().both());
        let c = coord(4, &[0]);
        assert!(check_poisla(&p, &c, &coord(4, &[0, 1])).unwrap().both());
        let r = check_poisla(&p, &c, &coord(4, &[0, 2])).unwrap();
        assert!(!r.cond_int);
        assert!(check_poisla(&p, &coord(4, &[1]), &c).is_err());
    }

    #[test]
    fn extension_examples() {
        let p = sym4();
        let ext = cosymplectic_extension(&p, &coord(4, &[0, 1, 2])).unwrap();
        assert!(ext.w.is_full());

        let ext = cosymplectic_extension(&p, &coord(4, &[0])).unwrap();
        assert_eq!(ext.w, coord(4, &[0, 1]));
        assert_eq!(ext.r, coord(4, &[1]));

        let q = PoissonVS::from_entries(3, &[(0, 1, int(1))]).unwrap();
        let ext = cosymplectic_extension(&q, &Subspace::zero(Kind::Vectors, 3)).unwrap();
        assert_eq!(ext.w, coord(3, &[2]));
    }

    #[test]
    fn leaf_form_rejects_vectors_outside_the_leaf() {
        let z = PoissonVS::zero(2);
        assert!(z.leaf_form_value(&v(&[1, 0]), &v(&[0, 0])).is_err());
        let q = PoissonVS::from_entries(3, &[(0, 1, int(1))]).unwrap();
        assert!(q.leaf_form_value(&v(&[1, 0, 0]), &v(&[0, 0, 1])).is_err());
        assert_eq!(q.leaf_form_value(&v(&[1, 2, 0]), &v(&[1, 2, 0])).unwrap(), int(0));
    }

    #[test]
    fn canonical_iso_examples() {
        let p = sym4();
        let c = coord(4, &[0]);
        let vv = coord(4, &[0, 1]);
        let id = canonical_iso(&p, &c, &vv, &vv).unwrap();
        assert_eq!(id.matrix, MatrixQ::identity(2));

        let w = span(4, &[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        let phi = canonical_iso(&p, &c, &vv, &w).unwrap();
        assert_eq!(phi.apply(&v(&[1, 0, 0, 0])).unwrap(), v(&[1, 0, 0, 0]));
        assert_eq!(phi.apply(&v(&[0, 1, 0, 0])).unwrap(), v(&[0, 1, 1, 0]));
        assert!(phi.b_part.is_zero());

        let bad = coord(4, &[0, 2]);
        assert!(matches!(
            canonical_iso(&p, &c, &vv, &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn splitting_examples() {
        let p = PoissonVS::standard_symplectic(1);
        let s = coisotropic_splitting(&p, &coord(2, &[0])).unwrap();
        assert_eq!(s.e(), coord(2, &[0]));
        assert_eq!(s.v_basis.rows(), 0);
        assert_eq!(s.model, PoissonVS::standard_symplectic(1));

        let s = coisotropic_splitting(&sym4(), &coord(4, &[0, 1, 2])).unwrap();
        assert_eq!(s.e(), coord(4, &[2]));
        assert_eq!(s.v(), coord(4, &[0, 1]));

        let s = coisotropic_splitting(&sym4(), &Subspace::full(Kind::Vectors, 4)).unwrap();
        assert!(s.e().is_zero());
        assert_eq!(s.change_of_basis, MatrixQ::identity(4));

        assert!(coisotropic_splitting(&sym4(), &coord(4, &[0])).is_err());
    }

    #[test]
    fn uniqueness_iso_on_the_plane() {
        let p1 = PoissonVS::standard_symplectic(1);
        let p2 = PoissonVS::from_entries(2, &[(0, 1, int(2))]).unwrap();
        let m = coord(2, &[0]);
        let iso = linear_uniqueness_iso(&p1, &p2, &m, &Subspace::zero(Kind::Vectors, 2)).unwrap();
        assert_eq!(iso.matrix, MatrixQ::from_i64(&[&[1, 0], &[0, 2]]));

        let same = linear_uniqueness_iso(&p1, &p1, &m, &Subspace::zero(Kind::Vectors, 2)).unwrap();
        assert_eq!(p1.pushforward(&same.matrix).unwrap(), p1);

        let p3 = PoissonVS::from_entries(2, &[(0, 1, int(0))]).unwrap();
        assert!(linear_uniqueness_iso(&p1, &p3, &m, &Subspace::zero(Kind::Vectors, 2)).is_err());
    }
}
