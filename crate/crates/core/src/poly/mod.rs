//! Polynomials with rational coefficients, polynomial maps and polynomial matrices.

mod map;
mod parse;
mod polynomial;

pub use map::{PolyMap, PolyMatrix};
pub use parse::{render_with, Variables};
pub use polynomial::{Monomial, Poly};
