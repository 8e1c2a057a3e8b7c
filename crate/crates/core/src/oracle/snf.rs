//! Smith normal form over a Euclidean domain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::LaurentPoly;

/// The operations elimination needs.
pub trait Euclidean: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// Euclidean size; remainders are strictly smaller than the divisor.
    fn size(&self) -> u64;
    fn div_rem(&self, divisor: &Self) -> (Self, Self);
    /// `self - q * b`.
    fn sub_mul(&self, q: &Self, b: &Self) -> Self;
    fn add(&self, other: &Self) -> Self;
    /// Canonical associate.
    fn normalize(&self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Euclidean for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn size(&self) -> u64 {
        // only the ordering matters; saturate very large values
        self.abs().try_into().unwrap_or(u64::MAX)
    }
    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        Integer::div_rem(self, divisor)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Self {
        self - q * b
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn normalize(&self) -> Self {
        self.abs()
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

/// `Q[q^{±1}]`: size is the span, units are monomials.
impl Euclidean for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn size(&self) -> u64 {
        self.span() as u64
    }
    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let (a, b) = (self.low_degree(), divisor.low_degree());
        let (q, r) = self.shift(-a).div_rem(&divisor.shift(-b));
        (q.shift(a - b), r.shift(a))
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Self {
        self - &(q * b)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn normalize(&self) -> Self {
        self.normalized()
    }
    fn is_unit(&self) -> bool {
        LaurentPoly::is_unit(self)
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ...`, each normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<T> {
    pub diagonal: Vec<T>,
    pub rank: usize,
}

impl<T: Euclidean> SnfResult<T> {
    pub fn is_divisibility_chain(&self) -> bool {
        self.diagonal.windows(2).all(|w| w[1].div_rem(&w[0]).1.is_zero())
    }
}

/// Smith normal form by row and column reduction on a dense copy.
pub fn snf<T: Euclidean>(matrix: &[Vec<T>]) -> SnfResult<T> {
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            // clear column t below the pivot
            let mut again = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, _) = a[i][t].div_rem(&a[t][t]);
                let pivot_row = a[t].clone();
                for j in t..cols {
                    a[i][j] = a[i][j].sub_mul(&q, &pivot_row[j]);
                }
                if !a[i][t].is_zero() {
                    again = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, _) = a[t][j].div_rem(&a[t][t]);
                for i in t..rows {
                    let v = a[i][j].sub_mul(&q, &a[i][t]);
                    a[i][j] = v;
                }
                if !a[t][j].is_zero() {
                    again = true;
                }
            }
            if again {
                move_smallest_to_pivot(&mut a, t);
                continue;
            }
            // the pivot must divide the rest; otherwise fold the offending row in
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].div_rem(&a[t][t]).1.is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] = a[t][j].add(&a[i][j]);
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].normalize());
    }
    let rank = diagonal.len();
    SnfResult { diagonal, rank }
}

/// Position of a nonzero entry of least size in the block `[t.., t..]`.
fn smallest<T: Euclidean>(a: &[Vec<T>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(u64, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.is_none_or(|b| x.size() < b.0) {
                best = Some((x.size(), i, j));
            }
        }
    }
    best.map(|b| (b.1, b.2))
}

/// After a reduction pass the smallest entry lives in row or column `t`.
fn move_smallest_to_pivot<T: Euclidean>(a: &mut [Vec<T>], t: usize) {
    let rows = a.len();
    let cols = a[0].len();
    let mut best = (a[t][t].size(), t, t);
    if a[t][t].is_zero() {
        best.0 = u64::MAX;
    }
    for i in t..rows {
        if !a[i][t].is_zero() && a[i][t].size() < best.0 {
            best = (a[i][t].size(), i, t);
        }
    }
    for j in t..cols {
        if !a[t][j].is_zero() && a[t][j].size() < best.0 {
            best = (a[t][j].size(), t, j);
        }
    }
    a.swap(t, best.1);
    for row in a.iter_mut() {
        row.swap(t, best.2);
    }
}

pub fn snf_int(matrix: &[Vec<i64>]) -> SnfResult<BigInt> {
    let m: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    snf(&m)
}

pub fn snf_poly(matrix: &[Vec<LaurentPoly>]) -> SnfResult<LaurentPoly> {
    snf(matrix)
}
