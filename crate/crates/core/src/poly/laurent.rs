use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::Error;

/// An element of `Q[q, q^-1]`.
///
/// Stored densely as `q^low * (c_0 + c_1 q + ... + c_k q^k)` with `c_0` and
/// `c_k` nonzero. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `sum_i coeffs[i] * q^(low + i)`; zero coefficients at either end are trimmed.
    pub fn from_coeffs(low: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from small integer coefficients, lowest exponent first.
    pub fn from_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            low,
            coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Units of `Q[q^{±1}]` are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_degree(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    /// `degree - low_degree`, the Euclidean size in `Q[q^{±1}]`.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let idx = exp - self.low;
        if idx < 0 {
            return Rational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn trailing_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    /// Iterates `(exponent, coefficient)` over nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Strips the unit part: monic with nonzero constant term.
    pub fn normalized(&self) -> Self {
        self.shift(-self.low).monic()
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.low >= 0 {
            acc * x.pow(self.low as i32)
        } else {
            acc / x.pow((-self.low) as i32)
        }
    }

    /// Division with remainder as ordinary polynomials in `q`.
    ///
    /// Both operands must have `low_degree() >= 0`; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        assert!(self.low >= 0 && divisor.low >= 0, "div_rem needs polynomials in q");
        let dd = divisor.degree().unwrap();
        let lc_inv = divisor.leading_coeff().unwrap().recip();
        let mut rem = self.clone();
        let mut quot_terms: Vec<(i64, Rational)> = Vec::new();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap() * &lc_inv;
            let k = rd - dd;
            rem = &rem - &divisor.scale(&c).shift(k);
            quot_terms.push((k, c));
        }
        let quot = quot_terms
            .into_iter()
            .fold(Self::zero(), |acc, (k, c)| &acc + &Self::monomial(c, k));
        (quot, rem)
    }

    /// Exact division in `Q[q^{±1}]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num = self.shift(-self.low);
        let den = divisor.shift(-divisor.low);
        let (quot, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(quot.shift(self.low - divisor.low))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_ok()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.degree().unwrap().max(rhs.degree().unwrap());
        let coeffs = (low..=high).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Renders as `a*q^k + ...` with descending exponents, e.g. `q^2 - q + 1`,
/// `3*q^-1`, `1/2*q + 2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let var = match exp {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            match (mag.is_one(), var.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => f.write_str(&var)?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order (by span, then exponents, then coefficients); used
/// only for deterministic sorting.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then(self.low.cmp(&other.low))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    #[test]
    fn trims_zero_coefficients() {
        let x = p(-2, &[0, 0, 1, 0]);
        assert_eq!(x, LaurentPoly::one());
        assert!(p(3, &[0, 0]).is_zero());
    }

    #[test]
    fn multiplication_and_exact_division() {
        let a = p(0, &[1, 1]); // 1 + q
        let b = p(-1, &[1, 0, 1]); // q^-1 + q
        let ab = &a * &b;
        assert_eq!(ab, p(-1, &[1, 1, 1, 1]));
        assert_eq!(ab.div_exact(&a).unwrap(), b);
        assert_eq!(ab.div_exact(&b).unwrap(), a);
        assert!(matches!(a.div_exact(&p(0, &[1, 0, 1])), Err(Error::InexactDivision)));
    }

    #[test]
    fn div_rem_matches_hand_computation() {
        // q^3 + 2q + 5 = (q^2 + q + 3)(q - 1) + 8
        let (quot, rem) = p(0, &[5, 2, 0, 1]).div_rem(&p(0, &[-1, 1]));
        assert_eq!(quot, p(0, &[3, 1, 1]));
        assert_eq!(rem, p(0, &[8]));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(0, &[1, -1, 1]).to_string(), "q^2 - q + 1");
        assert_eq!(p(-1, &[3]).to_string(), "3*q^-1");
        assert_eq!(p(0, &[-1, 0, -2]).to_string(), "-2*q^2 - 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let half = LaurentPoly::from_coeffs(
            0,
            vec![Rational::from_integer(2.into()), Rational::new(1.into(), 2.into())],
        );
        assert_eq!(half.to_string(), "1/2*q + 2");
    }

    #[test]
    fn evaluate_at_rational() {
        let x = p(-1, &[1, 0, 2]); // q^-1 + 2q
        let two = Rational::from_integer(2.into());
        assert_eq!(x.evaluate(&two), Rational::new(9.into(), 2.into()));
    }
}
