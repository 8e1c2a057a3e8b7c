//! Twisted homology of Artin groups with coefficients in `Q[q^{±1}]`, computed
//! through weighted discrete Morse matchings and cross-checked by Smith normal
//! forms over the polynomial ring.

pub mod catalog;
pub mod complexes;
pub mod coxeter;
pub mod exec;
pub mod independence;
pub mod linalg;
pub mod morse;
pub mod oracle;
pub mod poly;

pub use coxeter::{CoxeterGraph, Simplex};
pub use exec::Exec;
pub use morse::{HomologyTable, TorsionSummand};
pub use poly::{LaurentPoly, Rational};

/// Default cap on the number of vertices for exhaustive enumeration of `2^n` simplices.
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("residual factor {0} is not a product of cyclotomic polynomials")]
    NonCyclotomicFactor(String),
    #[error("simplex {0} does not generate a finite parabolic subgroup")]
    NotSpherical(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("not a matching: {0}")]
    NotAMatching(String),
    #[error("alternating path enumeration exceeded {0} steps; matching is not acyclic")]
    NonTerminating(usize),
    #[error("Morse complex is not precise: {0}")]
    NotPrecise(String),
    #[error("matching is not weighted: {0}")]
    NotWeighted(String),
    #[error("matching has a cycle")]
    NotAcyclic,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("graph format: {0}")]
    GraphFormat(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
