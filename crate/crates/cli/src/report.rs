//! Report values shared by all subcommands, and rendering helpers.

use serde_json::{json, Value};

use poisson_dirac::bivector::{BivectorField, TwoFormField};
use poisson_dirac::linalg::rational::{render, render_vec};
use poisson_dirac::linalg::{MatrixQ, Rational, Subspace};
use poisson_dirac::poly::{render_with, Poly};
use poisson_dirac::ErrorCategory;

use crate::scenario::ScenarioError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Success,
    PreconditionFailed,
    PropertyViolated,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::PreconditionFailed => 2,
            Outcome::PropertyViolated => 3,
        }
    }

    pub fn worst(self, other: Outcome) -> Outcome {
        self.max(other)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub outcome: Outcome,
}

/// A command that could not produce a report.
#[derive(Debug)]
pub struct Failure {
    pub exit_code: i32,
    pub message: String,
}

impl From<ScenarioError> for Failure {
    fn from(e: ScenarioError) -> Self {
        let exit_code = match &e {
            ScenarioError::Field { source, .. } => category_code(source.category()),
            _ => 1,
        };
        Failure {
            exit_code,
            message: e.to_string(),
        }
    }
}

impl From<poisson_dirac::Error> for Failure {
    fn from(e: poisson_dirac::Error) -> Self {
        Failure {
            exit_code: category_code(e.category()),
            message: e.to_string(),
        }
    }
}

fn category_code(c: ErrorCategory) -> i32 {
    match c {
        ErrorCategory::Input => 1,
        ErrorCategory::Precondition => 2,
        ErrorCategory::Property => 3,
    }
}

pub fn outcome_of(e: &poisson_dirac::Error) -> Outcome {
    match e.category() {
        ErrorCategory::Property => Outcome::PropertyViolated,
        _ => Outcome::PreconditionFailed,
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn point_text(p: &[Rational]) -> String {
    format!("({})", render_vec(p).join(", "))
}

pub fn point_json(p: &[Rational]) -> Value {
    json!(render_vec(p))
}

/// `2∂x1 - ∂x3`-style rendering of a vector.
pub fn vector_text(v: &[Rational], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c == &Rational::from_integer(0.into()) {
            continue;
        }
        let neg = c < &Rational::from_integer(0.into());
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != Rational::from_integer(1.into()) {
            out.push_str(&render(&mag));
        }
        out.push('∂');
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn subspace_text(s: &Subspace, names: &[String]) -> String {
    let parts: Vec<String> = s.basis_vectors().iter().map(|v| vector_text(v, names)).collect();
    format!("span{{{}}}", parts.join(", "))
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.render() })
}

pub fn matrix_json(m: &MatrixQ) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| render_vec(m.row(i))).collect();
    json!(rows)
}

pub fn matrix_text(m: &MatrixQ, indent: &str) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|i| render_vec(m.row(i))).collect();
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        out.push_str(indent);
        out.push('[');
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&padded.join(" "));
        out.push_str("]\n");
    }
    out
}

fn entries_json(entries: Vec<(usize, usize, Poly)>, names: &[String]) -> Value {
    Value::Array(
        entries
            .into_iter()
            .map(|(i, j, p)| json!({ "i": i + 1, "j": j + 1, "poly": render_with(&p, names) }))
            .collect(),
    )
}

fn entries_text(entries: Vec<(usize, usize, Poly)>, names: &[String], wedge: &str) -> String {
    if entries.is_empty() {
        return "0".into();
    }
    entries
        .into_iter()
        .map(|(i, j, p)| {
            format!("({}) {wedge}{}∧{wedge}{}", render_with(&p, names), names[i], names[j])
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn bivector_json(b: &BivectorField, names: &[String]) -> Value {
    entries_json(b.upper_entries(), names)
}

pub fn bivector_text(b: &BivectorField, names: &[String]) -> String {
    entries_text(b.upper_entries(), names, "∂")
}

pub fn form_json(f: &TwoFormField, names: &[String]) -> Value {
    entries_json(f.upper_entries(), names)
}

pub fn form_text(f: &TwoFormField, names: &[String]) -> String {
    entries_text(f.upper_entries(), names, "d")
}

#[cfg(test)]
mod tests {
    use super::*;
    use poisson_dirac::linalg::rational::{frac, int};

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn renders_vectors() {
        assert_eq!(vector_text(&[int(0), int(0), int(1)], &names(3)), "∂x3");
        assert_eq!(vector_text(&[int(2), int(0), int(-1)], &names(3)), "2∂x1 - ∂x3");
        assert_eq!(vector_text(&[int(-1), frac(1, 2), int(0)], &names(3)), "-∂x1 + 1/2∂x2");
        assert_eq!(vector_text(&[int(0)], &names(1)), "0");
    }

    #[test]
    fn worst_outcome_wins() {
        assert_eq!(Outcome::Success.worst(Outcome::PropertyViolated), Outcome::PropertyViolated);
        assert_eq!(Outcome::PropertyViolated.worst(Outcome::PreconditionFailed), Outcome::PropertyViolated);
    }
}
