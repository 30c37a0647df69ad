//! Exact-arithmetic Poisson and Dirac linear algebra, plus pointwise analysis of
//! polynomial Poisson manifolds: subspace classification, cosymplectic extensions,
//! canonical isomorphisms, Jacobi and pushforward checks for polynomial bivector
//! fields, and the coisotropic embedding of a regular Dirac manifold into the
//! dual of its characteristic bundle.

pub mod error;
pub mod linalg;
pub mod bivector;
pub mod dirac;
pub mod gotay;
pub mod poisson;
pub mod poly;
pub mod sampling;
pub mod submanifold;

pub use error::{Error, ErrorCategory, Result};
