//! Scenario files: strict JSON with rationals as `"p/q"` strings and polynomials in
//! the library's text grammar. Unknown fields are rejected.

use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use poisson_dirac::bivector::BivectorField;
use poisson_dirac::gotay::{DiracManifoldData, Section};
use poisson_dirac::linalg::{parse_rational, MatrixQ, Rational, Subspace, Kind};
use poisson_dirac::poisson::PoissonVS;
use poisson_dirac::poly::{Poly, PolyMap, Variables};
use poisson_dirac::submanifold::SubmanifoldPatch;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed scenario: {0}")]
    Json(#[from] serde_json::Error),
    #[error("scenario has no `{0}` section")]
    Missing(&'static str),
    #[error("{field}: {source}")]
    Field {
        field: String,
        source: poisson_dirac::Error,
    },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, ScenarioError>;

fn at<T>(field: impl Into<String>, r: poisson_dirac::Result<T>) -> Result<T> {
    r.map_err(|source| ScenarioError::Field {
        field: field.into(),
        source,
    })
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default)]
    pub description: Option<String>,
    /// Names of the ambient (or base) coordinates; defaults to `x1..xn`.
    #[serde(default)]
    pub variables: Option<Vec<String>>,
    #[serde(default)]
    pub ambient: Option<BivectorSpec>,
    #[serde(default)]
    pub submanifold: Option<SubmanifoldSpec>,
    #[serde(default)]
    pub points: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub pushforward: Option<PushforwardSpec>,
    #[serde(default)]
    pub linear: Option<LinearSpec>,
    #[serde(default)]
    pub dirac_manifold: Option<DiracManifoldSpec>,
    #[serde(default)]
    pub bracket: Option<BracketSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BivectorSpec {
    pub dim: usize,
    pub bivector: Vec<EntrySpec>,
}

/// Coefficient of `∂i∧∂j`, 1-based, `i < j`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntrySpec {
    pub i: usize,
    pub j: usize,
    pub poly: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", deny_unknown_fields, rename_all = "snake_case")]
pub enum SubmanifoldSpec {
    LevelSet {
        constraints: Vec<String>,
    },
    Parametrized {
        #[serde(default)]
        parameters: Option<Vec<String>>,
        map: Vec<String>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PushforwardSpec {
    pub map: Vec<String>,
    pub inverse: Vec<String>,
    #[serde(default)]
    pub target: Option<BivectorSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearSpec {
    pub dim: usize,
    pub bivector: Vec<LinearEntrySpec>,
    pub c: Vec<Vec<String>>,
    #[serde(default)]
    pub v: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub w: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearEntrySpec {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiracManifoldSpec {
    pub dim: usize,
    pub sections: Vec<SectionSpec>,
    #[serde(rename = "E_frame")]
    pub e_frame: Vec<Vec<String>>,
    #[serde(rename = "V_frame")]
    pub v_frame: Vec<Vec<String>>,
    /// A second complement of `E`, compared against `V_frame`.
    #[serde(default, rename = "compare_V_frame")]
    pub compare_v_frame: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionSpec {
    #[serde(rename = "X")]
    pub vector: Vec<String>,
    pub xi: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketSpec {
    pub f: FunctionSpec,
    pub g: FunctionSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Ambient,
    Parameters,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpec {
    pub poly: String,
    pub on: Domain,
}

/// Dirac data, base variable names, and the optional second `V` frame.
pub type DiracScenario = (DiracManifoldData, Variables, Option<Vec<Vec<Poly>>>);

pub fn load(path: &Path) -> Result<Scenario> {
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<Scenario> {
    Ok(serde_json::from_str(text)?)
}

/// Parses `"p/q,…;…"` into points.
pub fn parse_points(spec: &str) -> Result<Vec<Vec<Rational>>> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    spec.split(';')
        .enumerate()
        .map(|(i, pt)| {
            pt.split(',')
                .map(|c| at(format!("--points point {}", i + 1), parse_rational(c.trim())))
                .collect()
        })
        .collect()
}

pub fn rationals(field: &str, xs: &[String]) -> Result<Vec<Rational>> {
    xs.iter()
        .enumerate()
        .map(|(i, s)| at(format!("{field}[{i}]"), parse_rational(s)))
        .collect()
}

fn polys(field: &str, vars: &Variables, xs: &[String]) -> Result<Vec<Poly>> {
    xs.iter()
        .enumerate()
        .map(|(i, s)| at(format!("{field}[{i}]"), vars.parse(s)))
        .collect()
}

fn check_len(field: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(ScenarioError::Invalid(format!(
            "{field}: expected {expected} entries, found {found}"
        )))
    }
}

fn check_entry(field: &str, i: usize, j: usize, dim: usize) -> Result<()> {
    if i == 0 || j == 0 || i >= j || j > dim {
        return Err(ScenarioError::Invalid(format!(
            "{field}: entry ({i}, {j}) must satisfy 1 ≤ i < j ≤ {dim}"
        )));
    }
    Ok(())
}

impl Scenario {
    pub fn variables(&self, dim: usize) -> Result<Variables> {
        match &self.variables {
            None => Ok(Variables::numbered("x", dim)),
            Some(names) => {
                check_len("variables", dim, names.len())?;
                at("variables", Variables::new(names.clone()))
            }
        }
    }

    fn ambient_spec(&self) -> Result<&BivectorSpec> {
        self.ambient.as_ref().ok_or(ScenarioError::Missing("ambient"))
    }

    pub fn ambient_dim(&self) -> Result<usize> {
        Ok(self.ambient_spec()?.dim)
    }

    pub fn ambient_variables(&self) -> Result<Variables> {
        self.variables(self.ambient_dim()?)
    }

    pub fn bivector(&self) -> Result<BivectorField> {
        let spec = self.ambient_spec()?;
        bivector_from(spec, &self.variables(spec.dim)?, "ambient")
    }

    pub fn submanifold(&self) -> Result<(SubmanifoldPatch, Variables)> {
        let n = self.ambient_dim()?;
        let vars = self.ambient_variables()?;
        match self.submanifold.as_ref().ok_or(ScenarioError::Missing("submanifold"))? {
            SubmanifoldSpec::LevelSet { constraints } => {
                let constraints = polys("submanifold.constraints", &vars, constraints)?;
                let patch = at("submanifold.constraints", SubmanifoldPatch::level_set(n, constraints))?;
                Ok((patch, vars))
            }
            SubmanifoldSpec::Parametrized { parameters, map } => {
                check_len("submanifold.map", n, map.len())?;
                let params = match parameters {
                    Some(names) => at("submanifold.parameters", Variables::new(names.clone()))?,
                    None => Variables::numbered("t", infer_parameter_count(map)),
                };
                let comps = polys("submanifold.map", &params, map)?;
                let m = at("submanifold.map", PolyMap::new(params.len(), comps))?;
                Ok((SubmanifoldPatch::Parametrized(m), params))
            }
        }
    }

    pub fn points(&self) -> Result<Option<Vec<Vec<Rational>>>> {
        self.points
            .as_ref()
            .map(|pts| {
                pts.iter()
                    .enumerate()
                    .map(|(i, p)| rationals(&format!("points[{i}]"), p))
                    .collect()
            })
            .transpose()
    }

    pub fn pushforward_data(&self) -> Result<(PolyMap, PolyMap, Option<BivectorField>)> {
        let spec = self.pushforward.as_ref().ok_or(ScenarioError::Missing("pushforward"))?;
        let n = self.ambient_dim()?;
        let vars = self.ambient_variables()?;
        check_len("pushforward.map", n, spec.map.len())?;
        check_len("pushforward.inverse", n, spec.inverse.len())?;
        let phi = at("pushforward.map", PolyMap::new(n, polys("pushforward.map", &vars, &spec.map)?))?;
        let inv = at(
            "pushforward.inverse",
            PolyMap::new(n, polys("pushforward.inverse", &vars, &spec.inverse)?),
        )?;
        let target = spec
            .target
            .as_ref()
            .map(|t| {
                check_len("pushforward.target.dim", n, t.dim)?;
                bivector_from(t, &vars, "pushforward.target")
            })
            .transpose()?;
        Ok((phi, inv, target))
    }

    pub fn linear(&self) -> Result<LinearData> {
        let spec = self.linear.as_ref().ok_or(ScenarioError::Missing("linear"))?;
        let n = spec.dim;
        let mut entries = Vec::with_capacity(spec.bivector.len());
        for (k, e) in spec.bivector.iter().enumerate() {
            check_entry("linear.bivector", e.i, e.j, n)?;
            entries.push((e.i - 1, e.j - 1, at(format!("linear.bivector[{k}]"), parse_rational(&e.value))?));
        }
        let p = at("linear.bivector", PoissonVS::from_entries(n, &entries))?;
        let span = |field: &str, rows: &[Vec<String>]| -> Result<Subspace> {
            let rows = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    check_len(&format!("{field}[{i}]"), n, r.len())?;
                    rationals(&format!("{field}[{i}]"), r)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Subspace::span(Kind::Vectors, &at(field.to_string(), MatrixQ::from_rows(n, rows))?))
        };
        Ok(LinearData {
            c: span("linear.c", &spec.c)?,
            v: spec.v.as_ref().map(|r| span("linear.v", r)).transpose()?,
            w: spec.w.as_ref().map(|r| span("linear.w", r)).transpose()?,
            p,
        })
    }

    /// Dirac data with base variable names, and the optional second `V` frame.
    pub fn dirac_manifold(&self) -> Result<DiracScenario> {
        let spec = self
            .dirac_manifold
            .as_ref()
            .ok_or(ScenarioError::Missing("dirac_manifold"))?;
        let m = spec.dim;
        let vars = self.variables(m)?;
        let sections = spec
            .sections
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let f = format!("dirac_manifold.sections[{i}]");
                check_len(&format!("{f}.X"), m, s.vector.len())?;
                check_len(&format!("{f}.xi"), m, s.xi.len())?;
                Ok(Section {
                    x: polys(&format!("{f}.X"), &vars, &s.vector)?,
                    xi: polys(&format!("{f}.xi"), &vars, &s.xi)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let frame = |field: &str, rows: &[Vec<String>]| -> Result<Vec<Vec<Poly>>> {
            rows.iter()
                .enumerate()
                .map(|(i, r)| {
                    check_len(&format!("{field}[{i}]"), m, r.len())?;
                    polys(&format!("{field}[{i}]"), &vars, r)
                })
                .collect()
        };
        let e = frame("dirac_manifold.E_frame", &spec.e_frame)?;
        let v = frame("dirac_manifold.V_frame", &spec.v_frame)?;
        let v1 = spec
            .compare_v_frame
            .as_ref()
            .map(|r| frame("dirac_manifold.compare_V_frame", r))
            .transpose()?;
        let data = at("dirac_manifold", DiracManifoldData::new(m, sections, e, v))?;
        Ok((data, vars, v1))
    }

    /// `f` and `g` in the point coordinates of the submanifold.
    pub fn bracket_functions(&self, patch: &SubmanifoldPatch, point_vars: &Variables) -> Result<(Poly, Poly)> {
        let spec = self.bracket.as_ref().ok_or(ScenarioError::Missing("bracket"))?;
        let ambient = self.ambient_variables()?;
        let one = |name: &str, f: &FunctionSpec| -> Result<Poly> {
            let field = format!("bracket.{name}");
            match (f.on, patch) {
                (Domain::Ambient, _) => {
                    let p = at(field.clone(), ambient.parse(&f.poly))?;
                    at(field, patch.restrict(&p))
                }
                (Domain::Parameters, SubmanifoldPatch::Parametrized(_)) => at(field, point_vars.parse(&f.poly)),
                (Domain::Parameters, SubmanifoldPatch::LevelSet { .. }) => Err(ScenarioError::Invalid(format!(
                    "{field}: a level set has no parameters; use \"on\": \"ambient\""
                ))),
            }
        };
        Ok((one("f", &spec.f)?, one("g", &spec.g)?))
    }
}

pub struct LinearData {
    pub p: PoissonVS,
    pub c: Subspace,
    pub v: Option<Subspace>,
    pub w: Option<Subspace>,
}

fn bivector_from(spec: &BivectorSpec, vars: &Variables, field: &str) -> Result<BivectorField> {
    let mut entries = Vec::with_capacity(spec.bivector.len());
    for (k, e) in spec.bivector.iter().enumerate() {
        check_entry(field, e.i, e.j, spec.dim)?;
        entries.push((e.i - 1, e.j - 1, at(format!("{field}.bivector[{k}]"), vars.parse(&e.poly))?));
    }
    at(field.to_string(), BivectorField::from_entries(spec.dim, entries))
}

/// Largest `tK` mentioned in the map components.
fn infer_parameter_count(map: &[String]) -> usize {
    let mut k = 0;
    for s in map {
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b't' && (i == 0 || !bytes[i - 1].is_ascii_alphanumeric()) {
                let digits: String = s[i + 1..].chars().take_while(char::is_ascii_digit).collect();
                if let Ok(d) = digits.parse::<usize>() {
                    k = k.max(d);
                }
            }
            i += 1;
        }
    }
    k
}
