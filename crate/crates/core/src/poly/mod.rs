//! Exact arithmetic in `Q[q, q^-1]` and cyclotomic bookkeeping.

mod cyclotomic;
mod laurent;

pub use cyclotomic::{
    cyclotomic, factor_cyclotomic, q_integer, q_integer_profile, totient, CyclotomicProfile,
};
pub use laurent::LaurentPoly;

/// Exact rational coefficients; `Display` renders `p/q` (or `p` when integral).
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
