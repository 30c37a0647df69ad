//! Coisotropic embedding of a Dirac manifold `(M, L)` with `E = L ∩ TM` of constant
//! rank into the total space of `E*`, with structure `τ_{i*ω} π*L`.
//!
//! Coordinates on `E*` are `(x1..xm, p1..pk)`, where `p_I` pairs with the `I`-th
//! vector of the `E` frame.

use num_traits::Zero;
use rayon::prelude::*;

use crate::bivector::{BivectorField, TwoFormField};
use crate::dirac::DiracVS;
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::rational::render_vec;
use crate::linalg::{Kind, Rational, Subspace};
use crate::poly::{Poly, PolyMatrix};

/// `ω_{T*M} = SIGN · dθ` for the tautological 1-form `θ = Σ P_a dx_a`. With `−1` the
/// canonical form is `Σ dx_a∧dP_a`, the orientation under which a constant
/// characteristic direction `∂x` produces the term `∂x∧∂p`.
pub const CANONICAL_FORM_SIGN: i64 = -1;

/// A section `(X, ξ)` of `L` with polynomial coefficients in `x1..xm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub x: Vec<Poly>,
    pub xi: Vec<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracManifoldData {
    m: usize,
    sections: Vec<Section>,
    e_frame: Vec<Vec<Poly>>,
    v_frame: Vec<Vec<Poly>>,
}

impl DiracManifoldData {
    pub fn new(
        m: usize,
        sections: Vec<Section>,
        e_frame: Vec<Vec<Poly>>,
        v_frame: Vec<Vec<Poly>>,
    ) -> Result<Self> {
        ensure_dim("number of spanning sections", m, sections.len())?;
        ensure_dim("frame sizes", m, e_frame.len() + v_frame.len())?;
        for s in &sections {
            ensure_dim("section vector length", m, s.x.len())?;
            ensure_dim("section covector length", m, s.xi.len())?;
        }
        for f in e_frame.iter().chain(&v_frame) {
            ensure_dim("frame vector length", m, f.len())?;
        }
        let coeffs = sections
            .iter()
            .flat_map(|s| s.x.iter().chain(&s.xi))
            .chain(e_frame.iter().chain(&v_frame).flatten());
        for p in coeffs {
            ensure_dim("coefficient variables", m, p.nvars())?;
        }
        Ok(DiracManifoldData {
            m,
            sections,
            e_frame,
            v_frame,
        })
    }

    pub fn base_dim(&self) -> usize {
        self.m
    }

    pub fn fiber_dim(&self) -> usize {
        self.e_frame.len()
    }

    pub fn total_dim(&self) -> usize {
        self.m + self.fiber_dim()
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn e_frame(&self) -> &[Vec<Poly>] {
        &self.e_frame
    }

    pub fn v_frame(&self) -> &[Vec<Poly>] {
        &self.v_frame
    }

    pub fn with_v_frame(&self, v_frame: Vec<Vec<Poly>>) -> Result<Self> {
        Self::new(self.m, self.sections.clone(), self.e_frame.clone(), v_frame)
    }

    /// `L(x)` as a linear Dirac structure.
    pub fn dirac_at(&self, x: &[Rational]) -> Result<DiracVS> {
        ensure_dim("base point", self.m, x.len())?;
        let rows = self
            .sections
            .iter()
            .map(|s| eval_vec(s.x.iter().chain(&s.xi), x))
            .collect::<Result<Vec<_>>>()?;
        DiracVS::from_rows(self.m, rows)
    }

    fn frame_at(frame: &[Vec<Poly>], x: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        frame.iter().map(|v| eval_vec(v.iter(), x)).collect()
    }
}

fn eval_vec<'a>(ps: impl Iterator<Item = &'a Poly>, x: &[Rational]) -> Result<Vec<Rational>> {
    ps.map(|p| p.evaluate(x)).collect()
}

fn point_label(x: &[Rational]) -> String {
    format!("({})", render_vec(x).join(", "))
}

/// Per-point outcome of [`validate_dirac_data`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointValidation {
    pub point: Vec<Rational>,
    pub issues: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub fiber_dim: usize,
    pub points: Vec<PointValidation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.points.iter().all(|p| p.issues.is_empty())
    }
}

fn validate_point(d: &DiracManifoldData, x: &[Rational]) -> Vec<String> {
    let mut issues = Vec::new();
    let l = match d.dirac_at(x) {
        Ok(l) => l,
        Err(e) => return vec![format!("sections do not form a Dirac structure: {e}")],
    };
    let (e_vecs, v_vecs) = match (
        DiracManifoldData::frame_at(&d.e_frame, x),
        DiracManifoldData::frame_at(&d.v_frame, x),
    ) {
        (Ok(e), Ok(v)) => (e, v),
        (Err(e), _) | (_, Err(e)) => return vec![format!("frame evaluation failed: {e}")],
    };
    let zero = vec![Rational::zero(); d.m];
    for (i, e) in e_vecs.iter().enumerate() {
        if !l.contains(e, &zero).unwrap_or(false) {
            issues.push(format!("E frame vector {} is not in L ∩ TM", i + 1));
        }
    }
    let characteristic = l.characteristic();
    let e_span = Subspace::from_vectors(Kind::Vectors, d.m, e_vecs.clone()).expect("lengths checked");
    if e_span.dim() != e_vecs.len() {
        issues.push("E frame vectors are dependent".into());
    }
    if characteristic.dim() != d.fiber_dim() {
        issues.push(format!(
            "L ∩ TM has dimension {}, but the E frame has {} vectors",
            characteristic.dim(),
            d.fiber_dim()
        ));
    }
    let all: Vec<_> = e_vecs.into_iter().chain(v_vecs).collect();
    if Subspace::from_vectors(Kind::Vectors, d.m, all).expect("lengths checked").dim() != d.m {
        issues.push("E and V frames do not span TM".into());
    }
    issues
}

pub fn validate_dirac_data(d: &DiracManifoldData, samples: &[Vec<Rational>]) -> ValidationReport {
    let points = samples
        .par_iter()
        .map(|x| PointValidation {
            point: x.clone(),
            issues: if x.len() == d.m {
                validate_point(d, x)
            } else {
                vec![format!("base point has {} coordinates, expected {}", x.len(), d.m)]
            },
        })
        .collect();
    ValidationReport {
        fiber_dim: d.fiber_dim(),
        points,
    }
}

/// The coframe `e^I` dual to the `E` frame and vanishing on the `V` frame, as
/// polynomial covector fields. Requires `det [E; V]` to be a nonzero constant.
pub fn dual_coframe(d: &DiracManifoldData) -> Result<Vec<Vec<Poly>>> {
    let m = d.m;
    if d.fiber_dim() == 0 {
        return Ok(Vec::new());
    }
    let rows: Vec<Vec<Poly>> = d.e_frame.iter().chain(&d.v_frame).cloned().collect();
    let frame = PolyMatrix::new(m, rows)?;
    // Rows of (Fᵀ)⁻¹ are the dual covectors.
    let dual = frame.transpose().unimodular_inverse().map_err(|e| {
        Error::precondition(format!("the dual coframe is not polynomial: {e}"))
    })?;
    Ok((0..d.fiber_dim()).map(|i| dual.row(i).to_vec()).collect())
}

/// `i*θ = Σ_a (Σ_I p_I e^I_a(x)) dx_a` as coefficients on `(x, p)`.
pub fn canonical_one_form(d: &DiracManifoldData) -> Result<Vec<Poly>> {
    let n = d.total_dim();
    let m = d.m;
    let base: Vec<usize> = (0..m).collect();
    let coframe = dual_coframe(d)?;
    let mut theta = vec![Poly::zero(n); n];
    for (i, e) in coframe.iter().enumerate() {
        let p = Poly::var(n, m + i);
        for (a, coeff) in e.iter().enumerate() {
            theta[a] = &theta[a] + &(&p * &coeff.embed(n, &base)?);
        }
    }
    Ok(theta)
}

/// `i*ω_{T*M}` on `ℝ^{m+k}`.
pub fn pullback_canonical_form(d: &DiracManifoldData) -> Result<TwoFormField> {
    let theta = canonical_one_form(d)?;
    let n = d.total_dim();
    let sign = Rational::from_integer(CANONICAL_FORM_SIGN.into());
    let mut entries = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            // (dθ)_ab = ∂_a θ_b − ∂_b θ_a
            let dtheta = &theta[b].partial(a)? - &theta[a].partial(b)?;
            if !dtheta.is_zero() {
                entries.push((a, b, dtheta.scale(&sign)));
            }
        }
    }
    let form = TwoFormField::from_entries(n, entries)?;
    if !form.is_closed() {
        return Err(Error::property("d(dθ) is not zero"));
    }
    Ok(form)
}

/// Rows `(X̂, ζ)` spanning `τ_B π*L` with polynomial coefficients on `E*`.
fn gauged_rows(d: &DiracManifoldData, b: &TwoFormField) -> Result<Vec<(Vec<Poly>, Vec<Poly>)>> {
    let n = d.total_dim();
    let m = d.m;
    let base: Vec<usize> = (0..m).collect();
    let lift = |v: &[Poly]| -> Result<Vec<Poly>> {
        let mut out = v.iter().map(|p| p.embed(n, &base)).collect::<Result<Vec<_>>>()?;
        out.resize(n, Poly::zero(n));
        Ok(out)
    };
    let mut rows = Vec::with_capacity(n);
    for s in &d.sections {
        rows.push((lift(&s.x)?, lift(&s.xi)?));
    }
    for i in 0..d.fiber_dim() {
        let mut x = vec![Poly::zero(n); n];
        x[m + i] = Poly::one(n);
        rows.push((x, vec![Poly::zero(n); n]));
    }
    // ζ_j += Σ_i X^i B_ij
    for (x, zeta) in rows.iter_mut() {
        for (j, z) in zeta.iter_mut().enumerate() {
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() && !b.entry(i, j).is_zero() {
                    *z = &*z + &(xi * b.entry(i, j));
                }
            }
        }
    }
    Ok(rows)
}

fn rows_at(rows: &[(Vec<Poly>, Vec<Poly>)], z: &[Rational]) -> Result<DiracVS> {
    let n = z.len();
    let vals = rows
        .iter()
        .map(|(x, zeta)| eval_vec(x.iter().chain(zeta), z))
        .collect::<Result<Vec<_>>>()?;
    DiracVS::from_rows(n, vals)
}

/// Solves `X = Z Πᵀ` by Cramer's rule when `det Z` divides every cofactor sum.
fn extract_bivector(rows: &[(Vec<Poly>, Vec<Poly>)], n: usize) -> Result<std::result::Result<BivectorField, String>> {
    let z = PolyMatrix::new(n, rows.iter().map(|r| r.1.clone()).collect())?;
    let x = PolyMatrix::new(n, rows.iter().map(|r| r.0.clone()).collect())?;
    let det = z.det()?;
    if det.is_zero() {
        return Ok(Err("covector parts are dependent everywhere; not the graph of a bivector".into()));
    }
    let mut pi_t = PolyMatrix::zeros(n, n, n);
    for j in 0..n {
        let col = x.column(j);
        for i in 0..n {
            let num = z.with_column(i, &col).det()?;
            match num.div_exact(&det) {
                Some(q) => pi_t.set(i, j, q),
                None => {
                    return Ok(Err(
                        "bivector entries are rational functions, not polynomials".into(),
                    ))
                }
            }
        }
    }
    match BivectorField::new(pi_t.transpose()) {
        Ok(b) => Ok(Ok(b)),
        Err(_) => Err(Error::property("extracted bivector is not antisymmetric")),
    }
}

/// Checks at one sample `(x, p)` of `E*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleCheck {
    pub point: Vec<Rational>,
    pub is_graph: bool,
    pub zero_section_is_graph: bool,
    pub zero_section_coisotropic: bool,
    pub pullback_matches: bool,
    /// Agreement of the pointwise bivector with the extracted polynomial one.
    pub matches_extracted: Option<bool>,
    pub error: Option<String>,
}

impl SampleCheck {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.is_graph
            && self.zero_section_is_graph
            && self.zero_section_coisotropic
            && self.pullback_matches
            && self.matches_extracted != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub base_dim: usize,
    pub fiber_dim: usize,
    pub total_dim: usize,
    pub canonical_one_form: Vec<Poly>,
    pub gauge_form: TwoFormField,
    rows: Vec<(Vec<Poly>, Vec<Poly>)>,
    pub bivector: Option<BivectorField>,
    pub bivector_is_poisson: Option<bool>,
    /// Why no polynomial bivector was extracted, if none was.
    pub extraction_note: Option<String>,
    pub samples: Vec<SampleCheck>,
}

impl EmbeddingResult {
    /// `L_{E*}` at a point of `E*`.
    pub fn dirac_at(&self, z: &[Rational]) -> Result<DiracVS> {
        ensure_dim("point of E*", self.total_dim, z.len())?;
        rows_at(&self.rows, z)
    }

    pub fn all_samples_passed(&self) -> bool {
        self.samples.iter().all(SampleCheck::passed)
    }
}

fn check_sample(d: &DiracManifoldData, res: &EmbeddingResult, z: &[Rational]) -> SampleCheck {
    let m = d.m;
    let mut out = SampleCheck {
        point: z.to_vec(),
        is_graph: false,
        zero_section_is_graph: false,
        zero_section_coisotropic: false,
        pullback_matches: false,
        matches_extracted: None,
        error: None,
    };
    let run = |out: &mut SampleCheck| -> Result<()> {
        let here = res.dirac_at(z)?.as_bivector().bivector();
        out.is_graph = here.is_some();
        if let (Some(p), Some(field)) = (&here, &res.bivector) {
            out.matches_extracted = Some(field.evaluate(z)? == *p);
        }
        let mut base = z[..m].to_vec();
        base.resize(res.total_dim, Rational::zero());
        let l0 = res.dirac_at(&base)?;
        let zero_section = Subspace::coordinate(Kind::Vectors, res.total_dim, &(0..m).collect::<Vec<_>>());
        if let Some(p) = l0.as_bivector().bivector() {
            out.zero_section_is_graph = true;
            out.zero_section_coisotropic = p.classify(&zero_section)?.coisotropic;
        }
        out.pullback_matches = l0.pullback(&zero_section)? == d.dirac_at(&z[..m])?;
        Ok(())
    };
    if let Err(e) = run(&mut out) {
        out.error = Some(format!("at {}: {e}", point_label(z)));
    }
    out
}

/// Builds `τ_{i*ω} π*L` on `E*` and checks it at the given points of `E*`.
pub fn build_embedding(d: &DiracManifoldData, samples: &[Vec<Rational>]) -> Result<EmbeddingResult> {
    let n = d.total_dim();
    for z in samples {
        ensure_dim("point of E*", n, z.len())?;
    }
    let bases: Vec<Vec<Rational>> = samples.iter().map(|z| z[..d.m].to_vec()).collect();
    let report = validate_dirac_data(d, &bases);
    if let Some(bad) = report.points.iter().find(|p| !p.issues.is_empty()) {
        return Err(Error::precondition(format!(
            "invalid Dirac data at {}: {}",
            point_label(&bad.point),
            bad.issues.join("; ")
        )));
    }
    let canonical_one_form = canonical_one_form(d)?;
    let gauge_form = pullback_canonical_form(d)?;
    let rows = gauged_rows(d, &gauge_form)?;
    let (bivector, extraction_note) = match extract_bivector(&rows, n)? {
        Ok(b) => (Some(b), None),
        Err(note) => (None, Some(note)),
    };
    let bivector_is_poisson = bivector.as_ref().map(BivectorField::is_poisson);
    let mut res = EmbeddingResult {
        base_dim: d.m,
        fiber_dim: d.fiber_dim(),
        total_dim: n,
        canonical_one_form,
        gauge_form,
        rows,
        bivector,
        bivector_is_poisson,
        extraction_note,
        samples: Vec::new(),
    };
    res.samples = samples.par_iter().map(|z| check_sample(d, &res, z)).collect();
    Ok(res)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingComparison {
    /// `B = i_1*ω − i_0*ω`.
    pub difference: TwoFormField,
    pub difference_closed: bool,
    /// `i_1*θ − i_0*θ` restricted to the zero section is zero.
    pub primitive_vanishes_on_zero_section: bool,
    /// Per sample: `τ_B` carries the structure built from `V0` to the one built from `V1`.
    pub intertwines: Vec<bool>,
}

impl SplittingComparison {
    pub fn all_hold(&self) -> bool {
        self.difference_closed
            && self.primitive_vanishes_on_zero_section
            && self.intertwines.iter().all(|&b| b)
    }
}

pub fn compare_splittings(
    d: &DiracManifoldData,
    v0: Vec<Vec<Poly>>,
    v1: Vec<Vec<Poly>>,
    samples: &[Vec<Rational>],
) -> Result<SplittingComparison> {
    let d0 = d.with_v_frame(v0)?;
    let d1 = d.with_v_frame(v1)?;
    let e0 = build_embedding(&d0, samples)?;
    let e1 = build_embedding(&d1, samples)?;
    let difference = e1.gauge_form.sub(&e0.gauge_form)?;
    let n = d.total_dim();
    let m = d.m;
    let zero_section: Vec<Poly> = (0..n)
        .map(|i| if i < m { Poly::var(n, i) } else { Poly::zero(n) })
        .collect();
    let mut primitive_vanishes = true;
    for (a, b) in e1.canonical_one_form.iter().zip(&e0.canonical_one_form) {
        if !(a - b).compose(&zero_section)?.is_zero() {
            primitive_vanishes = false;
        }
    }
    let intertwines = samples
        .par_iter()
        .map(|z| -> Result<bool> {
            let l0 = e0.dirac_at(z)?;
            let l1 = e1.dirac_at(z)?;
            Ok(l0.gauge(&difference.evaluate(z)?)? == l1)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SplittingComparison {
        difference_closed: difference.is_closed(),
        difference,
        primitive_vanishes_on_zero_section: primitive_vanishes,
        intertwines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;
    use crate::poly::Variables;
    use crate::sampling::grid_points;

    fn polys(v: &Variables, xs: &[&str]) -> Vec<Poly> {
        xs.iter().map(|s| v.parse(s).unwrap()).collect()
    }

    fn r4_data() -> DiracManifoldData {
        let v = Variables::numbered("x", 3);
        DiracManifoldData::new(
            3,
            vec![
                Section { x: polys(&v, &["0", "-x1^2", "0"]), xi: polys(&v, &["1", "0", "0"]) },
                Section { x: polys(&v, &["x1^2", "0", "0"]), xi: polys(&v, &["0", "1", "0"]) },
                Section { x: polys(&v, &["0", "0", "1"]), xi: polys(&v, &["0", "0", "0"]) },
            ],
            vec![polys(&v, &["0", "0", "1"])],
            vec![polys(&v, &["1", "0", "0"]), polys(&v, &["0", "1", "0"])],
        )
        .unwrap()
    }

    fn pi1() -> BivectorField {
        let v = Variables::new(["x1", "x2", "x3", "p1"].map(String::from).to_vec()).unwrap();
        BivectorField::from_entries(4, [(0, 1, v.parse("x1^2").unwrap()), (2, 3, v.parse("1").unwrap())]).unwrap()
    }

    #[test]
    fn validates_example_data() {
        let samples: Vec<_> = grid_points(1, 3, 3, 10)
            .into_iter()
            .chain([vec![int(0), int(2), int(-1)]])
            .collect();
        assert!(validate_dirac_data(&r4_data(), &samples).is_valid());
    }

    #[test]
    fn flags_non_isotropic_sections() {
        let v = Variables::numbered("x", 1);
        let d = DiracManifoldData::new(
            1,
            vec![Section { x: polys(&v, &["1"]), xi: polys(&v, &["1"]) }],
            vec![],
            vec![polys(&v, &["1"])],
        )
        .unwrap();
        assert!(!validate_dirac_data(&d, &[vec![int(0)]]).is_valid());
    }

    #[test]
    fn canonical_form_examples() {
        let form = pullback_canonical_form(&r4_data()).unwrap();
        let v = Variables::numbered("z", 4);
        assert_eq!(form, TwoFormField::from_entries(4, [(2, 3, v.parse("1").unwrap())]).unwrap());

        let v2 = Variables::numbered("x", 2);
        let plane = DiracManifoldData::new(
            2,
            vec![
                Section { x: polys(&v2, &["1", "0"]), xi: polys(&v2, &["0", "0"]) },
                Section { x: polys(&v2, &["0", "0"]), xi: polys(&v2, &["0", "1"]) },
            ],
            vec![polys(&v2, &["1", "0"])],
            vec![polys(&v2, &["0", "1"])],
        )
        .unwrap();
        let form = pullback_canonical_form(&plane).unwrap();
        assert_eq!(form.upper_entries().len(), 1);
        assert_eq!(form.upper_entries()[0].0, 0);
        assert_eq!(form.upper_entries()[0].1, 2);
    }

    #[test]
    fn rejects_non_polynomial_coframe() {
        let v = Variables::numbered("x", 2);
        let d = DiracManifoldData::new(
            2,
            vec![
                Section { x: polys(&v, &["1", "0"]), xi: polys(&v, &["0", "0"]) },
                Section { x: polys(&v, &["0", "0"]), xi: polys(&v, &["0", "1"]) },
            ],
            vec![polys(&v, &["1", "0"])],
            vec![polys(&v, &["0", "1 + x1^2"])],
        )
        .unwrap();
        assert!(matches!(pullback_canonical_form(&d), Err(Error::Precondition(_))));
    }

    #[test]
    fn reproduces_example_bivector() {
        let samples = grid_points(5, 4, 3, 25);
        let res = build_embedding(&r4_data(), &samples).unwrap();
        assert_eq!(res.bivector.as_ref().unwrap(), &pi1());
        assert_eq!(res.bivector_is_poisson, Some(true));
        assert!(res.all_samples_passed(), "{:?}", res.samples);
    }

    #[test]
    fn line_with_tangent_bundle_gives_cotangent_structure() {
        let v = Variables::numbered("x", 1);
        let d = DiracManifoldData::new(
            1,
            vec![Section { x: polys(&v, &["1"]), xi: polys(&v, &["0"]) }],
            vec![polys(&v, &["1"])],
            vec![],
        )
        .unwrap();
        let res = build_embedding(&d, &grid_points(2, 2, 3, 5)).unwrap();
        let w = Variables::numbered("z", 2);
        let expect = BivectorField::from_entries(2, [(0, 1, w.parse("1").unwrap())]).unwrap();
        assert_eq!(res.bivector.unwrap(), expect);
    }

    #[test]
    fn symplectic_base_is_unchanged() {
        let v = Variables::numbered("x", 2);
        let d = DiracManifoldData::new(
            2,
            vec![
                Section { x: polys(&v, &["0", "-1"]), xi: polys(&v, &["1", "0"]) },
                Section { x: polys(&v, &["1", "0"]), xi: polys(&v, &["0", "1"]) },
            ],
            vec![],
            vec![polys(&v, &["1", "0"]), polys(&v, &["0", "1"])],
        )
        .unwrap();
        let samples = grid_points(3, 2, 3, 5);
        let res = build_embedding(&d, &samples).unwrap();
        assert!(res.gauge_form.is_zero());
        for z in &samples {
            assert_eq!(res.dirac_at(z).unwrap(), d.dirac_at(z).unwrap());
        }
        assert!(res.all_samples_passed());
    }

    #[test]
    fn splittings_are_gauge_related() {
        let v = Variables::numbered("x", 3);
        let d = r4_data();
        let samples = grid_points(9, 4, 3, 10);
        let same = compare_splittings(&d, d.v_frame().to_vec(), d.v_frame().to_vec(), &samples).unwrap();
        assert!(same.difference.is_zero() && same.all_hold());

        let v1 = vec![polys(&v, &["1", "0", "1"]), polys(&v, &["0", "1", "0"])];
        let cmp = compare_splittings(&d, d.v_frame().to_vec(), v1, &samples).unwrap();
        assert!(!cmp.difference.is_zero());
        assert!(cmp.all_hold());
    }
}
