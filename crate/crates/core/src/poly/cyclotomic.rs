use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::One;

use super::{LaurentPoly, Rational};
use crate::Error;

fn cache() -> &'static Mutex<BTreeMap<u32, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// The `d`-th cyclotomic polynomial `phi_d(q)`, `d >= 1`.
pub fn cyclotomic(d: u32) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    // q^d - 1 = prod_{e | d} phi_e
    let mut acc = LaurentPoly::monomial(Rational::one(), d as i64) - LaurentPoly::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        acc = acc
            .div_exact(&cyclotomic(e))
            .expect("q^d - 1 is divisible by phi_e for e | d");
    }
    cache().lock().unwrap().insert(d, acc.clone());
    acc
}

/// The q-integer `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn q_integer(k: u32) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, vec![Rational::one(); k as usize])
}

/// `[k]_q` written as the product of `phi_d` over divisors `d >= 2` of `k`.
pub fn q_integer_profile(k: u32) -> CyclotomicProfile {
    let mut prof = CyclotomicProfile::default();
    for d in (2..=k).filter(|d| k.is_multiple_of(*d)) {
        prof.exponents.insert(d, 1);
    }
    prof
}

/// A polynomial written as `c * q^s * prod phi_d^{e_d}` with `d >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicProfile {
    pub unit_coeff: Rational,
    pub unit_shift: i64,
    pub exponents: BTreeMap<u32, u32>,
}

impl Default for CyclotomicProfile {
    fn default() -> Self {
        CyclotomicProfile {
            unit_coeff: Rational::one(),
            unit_shift: 0,
            exponents: BTreeMap::new(),
        }
    }
}

impl CyclotomicProfile {
    pub fn exponent(&self, d: u32) -> u32 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    pub fn to_poly(&self) -> LaurentPoly {
        self.exponents.iter().fold(
            LaurentPoly::monomial(self.unit_coeff.clone(), self.unit_shift),
            |acc, (&d, &e)| &acc * &cyclotomic(d).pow(e),
        )
    }

    /// Multiplies profiles (exponents add).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.unit_coeff *= &other.unit_coeff;
        out.unit_shift += other.unit_shift;
        for (&d, &e) in &other.exponents {
            *out.exponents.entry(d).or_insert(0) += e;
        }
        out
    }
}

impl fmt::Display for CyclotomicProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit_coeff.is_one() || self.unit_shift != 0 {
            parts.push(LaurentPoly::monomial(self.unit_coeff.clone(), self.unit_shift).to_string());
        }
        for (&d, &e) in &self.exponents {
            parts.push(if e == 1 { format!("phi_{d}") } else { format!("phi_{d}^{e}") });
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" * "))
        }
    }
}

/// Factors `p` as a unit times a product of `phi_d`, `2 <= d <= d_max`.
///
/// Without `d_max` every `d` with `totient(d) <= span(p)` is tried; since
/// `totient(d) >= sqrt(d / 2)` that means `d <= 2 * span^2`.
pub fn factor_cyclotomic(p: &LaurentPoly, d_max: Option<u32>) -> Result<CyclotomicProfile, Error> {
    if p.is_zero() {
        return Err(Error::NonCyclotomicFactor("0".into()));
    }
    let span = p.span() as u32;
    let limit = d_max.unwrap_or(2 * span * span + 2);
    let mut rest = p.clone();
    let mut prof = CyclotomicProfile::default();
    let mut d = 2;
    while d <= limit && !rest.is_unit() {
        let phi = cyclotomic(d);
        if phi.span() <= rest.span() {
            while let Ok(next) = rest.div_exact(&phi) {
                rest = next;
                *prof.exponents.entry(d).or_insert(0) += 1;
            }
        }
        d += 1;
    }
    if !rest.is_unit() {
        return Err(Error::NonCyclotomicFactor(rest.to_string()));
    }
    prof.unit_coeff = rest.trailing_coeff().unwrap().clone();
    prof.unit_shift = rest.low_degree();
    Ok(prof)
}

/// Euler's totient, used to bound cyclotomic degrees.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), LaurentPoly::from_ints(0, &[-1, 1]));
        assert_eq!(cyclotomic(2), LaurentPoly::from_ints(0, &[1, 1]));
        assert_eq!(cyclotomic(4), LaurentPoly::from_ints(0, &[1, 0, 1]));
        assert_eq!(cyclotomic(6), LaurentPoly::from_ints(0, &[1, -1, 1]));
        assert_eq!(cyclotomic(12), LaurentPoly::from_ints(0, &[1, 0, -1, 0, 1]));
        // phi_105 is the first with a coefficient of absolute value 2
        let c105 = cyclotomic(105);
        assert_eq!(c105.degree(), Some(48));
        assert_eq!(c105.coeff(7), Rational::from_integer((-2).into()));
    }

    #[test]
    fn degrees_are_totients() {
        for d in 1..=60 {
            assert_eq!(cyclotomic(d).degree(), Some(totient(d) as i64), "d = {d}");
        }
    }

    #[test]
    fn q_integer_is_product_of_cyclotomics() {
        for k in 1..=30 {
            assert_eq!(q_integer_profile(k).to_poly(), q_integer(k), "k = {k}");
        }
    }

    #[test]
    fn factor_round_trip() {
        let p = &(&q_integer(6) * &q_integer(4)).shift(-3) * &LaurentPoly::from_ints(0, &[5]);
        let prof = factor_cyclotomic(&p, None).unwrap();
        assert_eq!(prof.exponent(2), 2);
        assert_eq!(prof.exponent(3), 1);
        assert_eq!(prof.exponent(4), 1);
        assert_eq!(prof.exponent(6), 1);
        assert_eq!(prof.unit_shift, -3);
        assert_eq!(prof.to_poly(), p);
    }

    #[test]
    fn non_cyclotomic_is_rejected() {
        let p = LaurentPoly::from_ints(0, &[2, 1]); // q + 2
        assert!(matches!(factor_cyclotomic(&p, None), Err(Error::NonCyclotomicFactor(_))));
        // q - 1 = phi_1 is not admissible either
        assert!(factor_cyclotomic(&cyclotomic(1), None).is_err());
    }
}
