//! One function per subcommand. Each returns a [`Report`] or a [`Failure`] that
//! aborted the analysis before any report could be formed.

use std::fmt::Write;

use serde_json::{json, Value};

use poisson_dirac::dirac::DiracVS;
use poisson_dirac::gotay::{build_embedding, compare_splittings, validate_dirac_data};
use poisson_dirac::linalg::rational::render;
use poisson_dirac::linalg::Rational;
use poisson_dirac::poisson::{canonical_iso, check_poisla, classify_subspace, cosymplectic_extension, ClassificationRecord};
use poisson_dirac::poly::{render_with, Variables};
use poisson_dirac::sampling::grid_points;
use poisson_dirac::submanifold::{bracket_consistency_check, is_basic, rank_profile, SubmanifoldPatch};

use crate::report::*;
use crate::scenario::{Scenario, ScenarioError};

/// Where sample points come from: `--points` wins over `--grid`, which wins over the
/// scenario's own `points`.
#[derive(Debug, Clone, Default)]
pub struct PointOptions {
    pub explicit: Option<Vec<Vec<Rational>>>,
    pub grid: Option<u32>,
    pub seed: u64,
    pub count: usize,
}

impl PointOptions {
    fn resolve(
        &self,
        scenario: &Scenario,
        dim: usize,
        grid: impl FnOnce(u32) -> Result<Vec<Vec<Rational>>, Failure>,
    ) -> Result<Vec<Vec<Rational>>, Failure> {
        let pts = if let Some(p) = &self.explicit {
            p.clone()
        } else if let Some(h) = self.grid {
            grid(h)?
        } else {
            scenario.points()?.unwrap_or_default()
        };
        for (i, p) in pts.iter().enumerate() {
            if p.len() != dim {
                return Err(ScenarioError::Invalid(format!(
                    "point {} has {} coordinates, expected {dim}",
                    i + 1,
                    p.len()
                ))
                .into());
            }
        }
        Ok(pts)
    }
}

fn names(v: &Variables) -> Vec<String> {
    v.names().to_vec()
}

fn record_json(r: &ClassificationRecord) -> Value {
    json!({
        "dim_tangent": r.dim_c,
        "dim_conormal": r.dim_conormal,
        "dim_sharp_conormal": r.dim_sharp_conormal,
        "dim_sum": r.dim_sum,
        "dim_characteristic": r.dim_characteristic,
        "rho_rank": r.rho_rank,
        "coisotropic": r.coisotropic,
        "cosymplectic": r.cosymplectic,
        "poisson_dirac": r.pointwise_poisson_dirac,
        "lagrangian_in_leaf": r.lagrangian_in_leaf,
        "characteristic": subspace_json(&r.characteristic),
        "sharp_conormal": subspace_json(&r.sharp_conormal),
    })
}

fn flags_text(r: &ClassificationRecord) -> String {
    let mut f = Vec::new();
    if r.coisotropic {
        f.push("coisotropic");
    }
    if r.cosymplectic {
        f.push("cosymplectic");
    }
    if r.pointwise_poisson_dirac {
        f.push("poisson-dirac");
    }
    if r.lagrangian_in_leaf {
        f.push("lagrangian");
    }
    if f.is_empty() {
        "-".into()
    } else {
        f.join(",")
    }
}

fn patch_points(patch: &SubmanifoldPatch, opts: &PointOptions, scenario: &Scenario) -> Result<Vec<Vec<Rational>>, Failure> {
    opts.resolve(scenario, patch.point_dim(), |h| {
        Ok(patch.sample_points(opts.seed, h, opts.count)?)
    })
}

pub fn classify(scenario: &Scenario, opts: &PointOptions) -> Result<Report, Failure> {
    let pi = scenario.bivector()?;
    let (patch, _) = scenario.submanifold()?;
    let vars = names(&scenario.ambient_variables()?);
    let pts = patch_points(&patch, opts, scenario)?;
    let profile = rank_profile(&pi, &patch, &pts);

    let mut text = String::new();
    let mut rows = Vec::new();
    let mut outcome = Outcome::Success;
    writeln!(text, "rank profile over {} sample point(s)", pts.len()).unwrap();
    writeln!(
        text,
        "  {:<24} {:>4} {:>6} {:>9} {:>9} {:>5}  {:<28} characteristic",
        "point", "TC", "♯N*C", "TC+♯N*C", "TC∩♯N*C", "rk ρ", "flags"
    )
    .unwrap();
    for (q, row) in pts.iter().zip(&profile.rows) {
        match row {
            Ok(r) => {
                let rec = &r.record;
                writeln!(
                    text,
                    "  {:<24} {:>4} {:>6} {:>9} {:>9} {:>5}  {:<28} {}",
                    point_text(q),
                    rec.dim_c,
                    rec.dim_sharp_conormal,
                    rec.dim_sum,
                    rec.dim_characteristic,
                    rec.rho_rank,
                    flags_text(rec),
                    subspace_text(&rec.characteristic, &vars)
                )
                .unwrap();
                rows.push(json!({
                    "point": point_json(q),
                    "ambient_point": point_json(&r.ambient_point),
                    "record": record_json(rec),
                }));
            }
            Err(e) => {
                outcome = outcome.worst(outcome_of(e));
                writeln!(text, "  {:<24} failed: {e}", point_text(q)).unwrap();
                rows.push(json!({ "point": point_json(q), "error": e.to_string() }));
            }
        }
    }
    let c = profile.constant_on_samples;
    writeln!(
        text,
        "constant on samples: TC {}, ♯N*C {}, TC+♯N*C {}, TC∩♯N*C {}, rk ρ {}",
        yes_no(c.dim_tangent),
        yes_no(c.dim_sharp_conormal),
        yes_no(c.dim_sum),
        yes_no(c.dim_characteristic),
        yes_no(c.rho_rank)
    )
    .unwrap();
    writeln!(
        text,
        "pre-Poisson on samples: {} (evidence from the sampled points only)",
        yes_no(c.pre_poisson_on_samples())
    )
    .unwrap();
    let failures = profile.failures().count();
    if failures > 0 {
        writeln!(text, "{failures} point(s) failed").unwrap();
    }
    Ok(Report {
        text,
        json: json!({
            "command": "classify",
            "rows": rows,
            "constant_on_samples": {
                "dim_tangent": c.dim_tangent,
                "dim_sharp_conormal": c.dim_sharp_conormal,
                "dim_sum": c.dim_sum,
                "dim_characteristic": c.dim_characteristic,
                "rho_rank": c.rho_rank,
            },
            "pre_poisson_on_samples": c.pre_poisson_on_samples(),
            "failures": failures,
        }),
        outcome,
    })
}

pub fn jacobi(scenario: &Scenario) -> Result<Report, Failure> {
    let pi = scenario.bivector()?;
    let vars = names(&scenario.ambient_variables()?);
    let jac = pi.jacobiator();
    let poisson = jac.is_zero();
    let mut text = String::new();
    writeln!(text, "Π = {}", bivector_text(&pi, &vars)).unwrap();
    writeln!(text, "Poisson: {}", yes_no(poisson)).unwrap();
    let mut comps = Vec::new();
    for ((i, j, k), p) in jac.nonzero() {
        let s = render_with(p, &vars);
        writeln!(text, "  J^{{{}{}{}}} = {s}", i + 1, j + 1, k + 1).unwrap();
        comps.push(json!({ "i": i + 1, "j": j + 1, "k": k + 1, "poly": s }));
    }
    Ok(Report {
        text,
        json: json!({
            "command": "jacobi",
            "bivector": bivector_json(&pi, &vars),
            "poisson": poisson,
            "jacobiator": comps,
        }),
        outcome: Outcome::Success,
    })
}

pub fn pushforward(scenario: &Scenario) -> Result<Report, Failure> {
    let pi = scenario.bivector()?;
    let vars = names(&scenario.ambient_variables()?);
    let (phi, inv, target) = scenario.pushforward_data()?;
    let pushed = pi.pushforward(&phi, &inv)?;
    let poisson = pushed.is_poisson();
    let matches = target.as_ref().map(|t| *t == pushed);
    let mut text = String::new();
    writeln!(text, "Π       = {}", bivector_text(&pi, &vars)).unwrap();
    writeln!(text, "φ_*Π    = {}", bivector_text(&pushed, &vars)).unwrap();
    writeln!(text, "Poisson: {}", yes_no(poisson)).unwrap();
    if let (Some(t), Some(m)) = (&target, matches) {
        writeln!(text, "target  = {}", bivector_text(t, &vars)).unwrap();
        writeln!(text, "matches target: {}", yes_no(m)).unwrap();
    }
    Ok(Report {
        text,
        json: json!({
            "command": "pushforward",
            "source": bivector_json(&pi, &vars),
            "pushed": bivector_json(&pushed, &vars),
            "poisson": poisson,
            "matches_target": matches,
        }),
        outcome: if matches == Some(false) {
            Outcome::PropertyViolated
        } else {
            Outcome::Success
        },
    })
}

fn linear_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

pub fn extend(scenario: &Scenario) -> Result<Report, Failure> {
    let data = scenario.linear()?;
    let n = data.p.dim();
    let e = linear_names(n);
    let rec = classify_subspace(&data.p, &data.c)?;
    let ext = cosymplectic_extension(&data.p, &data.c)?;
    let pi_w = data.p.induced_bivector(&ext.w)?;
    let sum = data.c.sum(&rec.sharp_conormal)?;

    let mut text = String::new();
    writeln!(text, "C            = {}  (dim {})", subspace_text(&data.c, &e), data.c.dim()).unwrap();
    writeln!(text, "♯C°          = {}  (dim {})", subspace_text(&rec.sharp_conormal, &e), rec.dim_sharp_conormal).unwrap();
    writeln!(text, "C + ♯C°      dim {}", sum.dim()).unwrap();
    writeln!(text, "C ∩ ♯C°      = {}  (dim {})", subspace_text(&rec.characteristic, &e), rec.dim_characteristic).unwrap();
    writeln!(text, "R            = {}  (dim {})", subspace_text(&ext.r, &e), ext.r.dim()).unwrap();
    writeln!(text, "W = C ⊕ R    = {}  (dim {})", subspace_text(&ext.w, &e), ext.w.dim()).unwrap();
    writeln!(
        text,
        "W + ♯C° ⊇ 𝒪: {}    W ∩ (C + ♯C°) = C: {}",
        yes_no(ext.conditions.cond_leaf),
        yes_no(ext.conditions.cond_int)
    )
    .unwrap();
    writeln!(text, "induced bivector on W (canonical basis):").unwrap();
    text.push_str(&matrix_text(pi_w.matrix(), "  "));

    let mut json = json!({
        "command": "extend",
        "classification": record_json(&rec),
        "sum": subspace_json(&sum),
        "r": subspace_json(&ext.r),
        "w": subspace_json(&ext.w),
        "cond_leaf": ext.conditions.cond_leaf,
        "cond_int": ext.conditions.cond_int,
        "induced_bivector": matrix_json(pi_w.matrix()),
    });
    let mut outcome = Outcome::Success;
    if let Some(w) = &data.w {
        let cond = check_poisla(&data.p, &data.c, w)?;
        let cosymplectic = classify_subspace(&data.p, w)?.cosymplectic;
        writeln!(
            text,
            "given W: W + ♯C° ⊇ 𝒪: {}    W ∩ (C + ♯C°) = C: {}    cosymplectic: {}",
            yes_no(cond.cond_leaf),
            yes_no(cond.cond_int),
            yes_no(cosymplectic)
        )
        .unwrap();
        if cond.both() && cosymplectic {
            let sharp_w = data.p.sharp_image(&w.annihilator())?;
            let identity = sum == data.c.sum(&sharp_w)? && data.c.intersect(&sharp_w)?.is_zero();
            writeln!(text, "given W: C + ♯C° = C ⊕ ♯W°: {}", yes_no(identity)).unwrap();
            json["given_w_splitting_identity"] = json!(identity);
            if !identity {
                outcome = Outcome::PropertyViolated;
            }
        }
        json["given_w"] = json!({
            "subspace": subspace_json(w),
            "cond_leaf": cond.cond_leaf,
            "cond_int": cond.cond_int,
            "cosymplectic": cosymplectic,
        });
    }
    Ok(Report { text, json, outcome })
}

pub fn phi(scenario: &Scenario) -> Result<Report, Failure> {
    let data = scenario.linear()?;
    let n = data.p.dim();
    let e = linear_names(n);
    let v = data.v.as_ref().ok_or(ScenarioError::Missing("linear.v"))?;
    let w = data.w.as_ref().ok_or(ScenarioError::Missing("linear.w"))?;
    let iso = canonical_iso(&data.p, &data.c, v, w)?;

    let fixes_c = data
        .c
        .basis_vectors()
        .iter()
        .map(|x| iso.apply(x).map(|y| &y == x))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|b| b);
    let graph = DiracVS::from_bivector(&data.p);
    let pi_v = graph.pullback(v)?.as_bivector().bivector();
    let pi_w = graph.pullback(w)?.as_bivector().bivector();
    let poisson_iso = match (&pi_v, &pi_w) {
        (Some(a), Some(b)) => a.pushforward(&iso.matrix)? == *b,
        _ => false,
    };

    let mut text = String::new();
    writeln!(text, "C = {}", subspace_text(&data.c, &e)).unwrap();
    writeln!(text, "V = {}", subspace_text(v, &e)).unwrap();
    writeln!(text, "W = {}", subspace_text(w, &e)).unwrap();
    writeln!(text, "φ = Id + A + B, columns are φ(v_a) in the basis of W:").unwrap();
    text.push_str(&matrix_text(&iso.matrix, "  "));
    writeln!(text, "rows A v_a:").unwrap();
    text.push_str(&matrix_text(&iso.a_part, "  "));
    writeln!(text, "rows B v_a:").unwrap();
    text.push_str(&matrix_text(&iso.b_part, "  "));
    writeln!(text, "φ fixes C: {}", yes_no(fixes_c)).unwrap();
    writeln!(text, "φ is a Poisson isomorphism: {}", yes_no(poisson_iso)).unwrap();

    Ok(Report {
        text,
        json: json!({
            "command": "phi",
            "v": subspace_json(v),
            "w": subspace_json(w),
            "matrix": matrix_json(&iso.matrix),
            "a_part": matrix_json(&iso.a_part),
            "b_part": matrix_json(&iso.b_part),
            "fixes_c": fixes_c,
            "poisson_isomorphism": poisson_iso,
        }),
        outcome: if fixes_c && poisson_iso {
            Outcome::Success
        } else {
            Outcome::PropertyViolated
        },
    })
}

pub fn embed(scenario: &Scenario, opts: &PointOptions) -> Result<Report, Failure> {
    let (data, base_vars, v1) = scenario.dirac_manifold()?;
    let k = data.fiber_dim();
    let prefix = if base_vars.names().iter().any(|n| n.starts_with('p')) { "y" } else { "p" };
    let all_vars = base_vars
        .concat(&Variables::numbered(prefix, k))
        .map_err(Failure::from)?;
    let vars = names(&all_vars);
    let n = data.total_dim();
    let pts = opts.resolve(scenario, n, |h| Ok(grid_points(opts.seed, n, h, opts.count)))?;

    let bases: Vec<Vec<Rational>> = pts.iter().map(|z| z[..data.base_dim()].to_vec()).collect();
    let validation = validate_dirac_data(&data, &bases);
    let mut text = String::new();
    writeln!(text, "base dim m = {}, rank of L ∩ TM k = {}, total dim = {}", data.base_dim(), k, n).unwrap();
    if !validation.is_valid() {
        for p in validation.points.iter().filter(|p| !p.issues.is_empty()) {
            writeln!(text, "  invalid at {}: {}", point_text(&p.point), p.issues.join("; ")).unwrap();
        }
    }
    let res = build_embedding(&data, &pts)?;
    writeln!(text, "i*θ coefficients: [{}]", res.canonical_one_form.iter().map(|p| render_with(p, &vars)).collect::<Vec<_>>().join(", ")).unwrap();
    writeln!(text, "gauge form i*ω = {}", form_text(&res.gauge_form, &vars)).unwrap();
    let mut outcome = Outcome::Success;
    match (&res.bivector, &res.extraction_note) {
        (Some(b), _) => {
            writeln!(text, "Π on E* = {}", bivector_text(b, &vars)).unwrap();
            let poisson = res.bivector_is_poisson == Some(true);
            writeln!(text, "Poisson: {}", yes_no(poisson)).unwrap();
            if !poisson {
                outcome = Outcome::PropertyViolated;
            }
        }
        (None, note) => {
            writeln!(text, "no polynomial bivector: {}", note.as_deref().unwrap_or("unknown reason")).unwrap();
        }
    }
    writeln!(text, "samples ({}):", res.samples.len()).unwrap();
    writeln!(text, "  {:<28} {:>5} {:>13} {:>11} {:>9} {:>9}", "point", "graph", "zero graph", "coisotropic", "pullback", "extracted").unwrap();
    let mut samples = Vec::new();
    for s in &res.samples {
        let ext = match s.matches_extracted {
            Some(b) => yes_no(b),
            None => "-",
        };
        writeln!(
            text,
            "  {:<28} {:>5} {:>13} {:>11} {:>9} {:>9}",
            point_text(&s.point),
            yes_no(s.is_graph),
            yes_no(s.zero_section_is_graph),
            yes_no(s.zero_section_coisotropic),
            yes_no(s.pullback_matches),
            ext
        )
        .unwrap();
        if let Some(e) = &s.error {
            writeln!(text, "    error: {e}").unwrap();
        }
        if !s.passed() {
            outcome = Outcome::PropertyViolated;
        }
        samples.push(json!({
            "point": point_json(&s.point),
            "graph": s.is_graph,
            "zero_section_graph": s.zero_section_is_graph,
            "zero_section_coisotropic": s.zero_section_coisotropic,
            "pullback_matches": s.pullback_matches,
            "matches_extracted": s.matches_extracted,
            "error": s.error,
        }));
    }
    let mut json = json!({
        "command": "embed",
        "base_dim": res.base_dim,
        "fiber_dim": res.fiber_dim,
        "total_dim": res.total_dim,
        "variables": vars,
        "canonical_one_form": res.canonical_one_form.iter().map(|p| render_with(p, &vars)).collect::<Vec<_>>(),
        "gauge_form": form_json(&res.gauge_form, &vars),
        "bivector": res.bivector.as_ref().map(|b| bivector_json(b, &vars)),
        "poisson": res.bivector_is_poisson,
        "extraction_note": res.extraction_note,
        "samples": samples,
    });

    if let Some(v1) = v1 {
        let cmp = compare_splittings(&data, data.v_frame().to_vec(), v1, &pts)?;
        writeln!(text, "second complement: B = {}", form_text(&cmp.difference, &vars)).unwrap();
        writeln!(
            text,
            "  B closed: {}    θ1 - θ0 vanishes on M: {}    τ_B intertwines at all samples: {}",
            yes_no(cmp.difference_closed),
            yes_no(cmp.primitive_vanishes_on_zero_section),
            yes_no(cmp.intertwines.iter().all(|&b| b))
        )
        .unwrap();
        if !cmp.all_hold() {
            outcome = Outcome::PropertyViolated;
        }
        json["comparison"] = json!({
            "difference": form_json(&cmp.difference, &vars),
            "closed": cmp.difference_closed,
            "primitive_vanishes_on_zero_section": cmp.primitive_vanishes_on_zero_section,
            "intertwines": cmp.intertwines,
        });
    }
    Ok(Report { text, json, outcome })
}

pub fn bracket(scenario: &Scenario, opts: &PointOptions) -> Result<Report, Failure> {
    let pi = scenario.bivector()?;
    let (patch, point_vars) = scenario.submanifold()?;
    let (f, g) = scenario.bracket_functions(&patch, &point_vars)?;
    let pts = patch_points(&patch, opts, scenario)?;

    let mut text = String::new();
    writeln!(text, "f = {}    g = {}  (in the coordinates {})", render_with(&f, point_vars.names()), render_with(&g, point_vars.names()), point_vars.names().join(", ")).unwrap();
    writeln!(text, "  {:<24} {:>7} {:>7} {:>12} {:>12} {:>6}", "point", "basic f", "basic g", "{f,g}_C", "via W", "agree").unwrap();
    let mut outcome = Outcome::Success;
    let mut rows = Vec::new();
    for q in &pts {
        let basic = |h| is_basic(h, &pi, &patch, q);
        let bf = basic(&f);
        let bg = basic(&g);
        let res = bracket_consistency_check(&pi, &patch, q, &f, &g);
        let show = |b: &Result<bool, poisson_dirac::Error>| b.as_ref().map(|&b| yes_no(b)).unwrap_or("?");
        match &res {
            Ok(r) => {
                writeln!(
                    text,
                    "  {:<24} {:>7} {:>7} {:>12} {:>12} {:>6}",
                    point_text(q),
                    show(&bf),
                    show(&bg),
                    render(&r.intrinsic),
                    render(&r.via_extension),
                    yes_no(r.agree)
                )
                .unwrap();
                if !r.agree {
                    outcome = outcome.worst(Outcome::PropertyViolated);
                }
                rows.push(json!({
                    "point": point_json(q),
                    "basic_f": true,
                    "basic_g": true,
                    "intrinsic": render(&r.intrinsic),
                    "via_extension": render(&r.via_extension),
                    "extension_dim": r.extension_dim,
                    "agree": r.agree,
                }));
            }
            Err(e) => {
                outcome = outcome.worst(outcome_of(e));
                writeln!(text, "  {:<24} {:>7} {:>7}  failed: {e}", point_text(q), show(&bf), show(&bg)).unwrap();
                rows.push(json!({
                    "point": point_json(q),
                    "basic_f": bf.as_ref().ok(),
                    "basic_g": bg.as_ref().ok(),
                    "error": e.to_string(),
                }));
            }
        }
    }
    Ok(Report {
        text,
        json: json!({ "command": "bracket", "rows": rows }),
        outcome,
    })
}
