//! Matching for `C̃_n` (the path on `0..=n` with label 4 at both ends), pulled
//! back from `B_{n-h}` on each piece `K_h`.

use super::b::b_toggle;
use super::{check_params, ones, CriticalCell, IncidenceRule};
use crate::coxeter::Simplex;
use crate::morse::Matching;
use crate::Result;

#[derive(Clone, Copy, Debug)]
pub struct TildeCMatching {
    pub n: usize,
    pub d: usize,
}

impl TildeCMatching {
    /// On `K_h`, relative vertex `j` (1-based) is absolute `n + 1 - j`.
    fn relative_bits(&self, s: Simplex, h: usize) -> u64 {
        (1..=self.n - h).filter(|&j| s.contains(self.n + 1 - j)).fold(0, |acc, j| acc | 1 << (j - 1))
    }
}

impl Matching for TildeCMatching {
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        let h = s.first_missing(self.n + 1)?;
        b_toggle(self.relative_bits(s, h), self.n - h, self.d).map(|i| s.toggle(self.n - i))
    }

    fn in_domain(&self, s: Simplex) -> bool {
        s.is_subset(Simplex::full(self.n + 1)) && s != Simplex::full(self.n + 1)
    }
}

pub fn matching_tilde_c(n: usize, d: usize) -> Result<TildeCMatching> {
    check_params((2..=62).contains(&n) && d >= 2, || format!("tC_{n} with d = {d}"))?;
    Ok(TildeCMatching { n, d })
}

#[derive(Clone, Copy)]
struct Shape {
    h: usize,
    k: usize,
    r: usize,
}

impl Shape {
    fn new(n: usize, d: usize) -> Self {
        let h = d / 2;
        Shape { h, k: n / h, r: n % h }
    }

    fn sigma(&self, q1: usize, q2: usize) -> CriticalCell {
        let Shape { h, k, r } = *self;
        let bits = format!(
            "{}0{}0{}{}",
            ones(q1 * h + r),
            ones(2 * h - 1),
            format!("{}0", ones(h - 1)).repeat(k - q1 - q2 - 2),
            ones(q2 * h)
        );
        CriticalCell::new(&format!("sigma_{q1},{q2}"), &bits, (q1 + q2 + 1) as u32)
    }

    fn sigma_prime(&self, q1: usize, q2: usize) -> CriticalCell {
        let Shape { h, k, r } = *self;
        let bits = format!(
            "{}0{}{}",
            ones(q1 * h + r),
            format!("{}0", ones(h - 1)).repeat(k - q1 - q2),
            ones(q2 * h)
        );
        CriticalCell::new(&format!("sigma'_{q1},{q2}"), &bits, (q1 + q2) as u32)
    }
}

/// `d` odd: the single cell `1^n 0`. `d` even, `n = k d/2 + r`: `sigma_{q1,q2}`
/// for `q1 + q2 <= k - 2` and `sigma'_{q1,q2}` for `q1 + q2 <= k`.
pub fn critical_tilde_c(n: usize, d: usize) -> Result<Vec<CriticalCell>> {
    matching_tilde_c(n, d)?;
    if d % 2 == 1 {
        // the B_n component on 0..n has phi_d exponent floor(n / d)
        return Ok(vec![CriticalCell::new("sigma_bar", &format!("{}0", ones(n)), (n / d) as u32)]);
    }
    let sh = Shape::new(n, d);
    let mut out = Vec::new();
    for l in 0..=sh.k {
        for q1 in 0..=l {
            if l + 2 <= sh.k {
                out.push(sh.sigma(q1, l - q1));
            }
            out.push(sh.sigma_prime(q1, l - q1));
        }
    }
    Ok(out)
}

fn pow(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The seven signed incidence families for `d` even; nothing for `d` odd.
pub fn incidence_tilde_c(n: usize, d: usize) -> Result<Vec<IncidenceRule>> {
    matching_tilde_c(n, d)?;
    if d % 2 == 1 {
        return Ok(Vec::new());
    }
    let sh = Shape::new(n, d);
    let Shape { h, k, r } = sh;
    let s = |a, b| sh.sigma(a, b).simplex;
    let sp = |a, b| sh.sigma_prime(a, b).simplex;
    let mut out = Vec::new();
    for q1 in 0..=k {
        for q2 in 0..=k - q1 {
            let alpha = (k - q2) * (h - 1) + q1 + r + h;
            let beta = q1 * h + r;
            if q1 + q2 + 2 <= k {
                if q2 >= 1 {
                    out.push(IncidenceRule::signed("[sigma:sigma_q2-1]", s(q1, q2), s(q1, q2 - 1), pow(alpha)));
                }
                if q1 >= 1 {
                    out.push(IncidenceRule::signed("[sigma:sigma_q1-1]", s(q1, q2), s(q1 - 1, q2), pow(beta + 1)));
                }
                out.push(IncidenceRule::signed("[sigma:sigma']", s(q1, q2), sp(q1, q2), pow(beta + h + 1)));
            }
            if q2 >= 2 {
                out.push(IncidenceRule::signed("[sigma':sigma_q2-2]", sp(q1, q2), s(q1, q2 - 2), pow(beta + 1)));
            }
            if q1 >= 2 {
                out.push(IncidenceRule::signed("[sigma':sigma_q1-2]", sp(q1, q2), s(q1 - 2, q2), pow(beta)));
            }
            if q2 >= 1 {
                out.push(IncidenceRule::signed("[sigma':sigma'_q2-1]", sp(q1, q2), sp(q1, q2 - 1), pow(alpha + 1)));
            }
            if q1 >= 1 {
                out.push(IncidenceRule::signed("[sigma':sigma'_q1-1]", sp(q1, q2), sp(q1 - 1, q2), pow(beta + h)));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_d_single_critical_cell() {
        let m = matching_tilde_c(4, 3).unwrap();
        let critical: Vec<Simplex> = (0..31u64).map(Simplex).filter(|&x| m.partner(x).is_none()).collect();
        assert_eq!(critical, vec![Simplex::full(4)]);
    }

    #[test]
    fn counts_by_dimension() {
        // n = 6, d = 4: h = 2, k = 3, r = 0; cardinality n - k + l holds 2l + 1
        // cells for l < k and k + 1 for l = k
        let c = critical_tilde_c(6, 4).unwrap();
        for l in 0..=3 {
            let count = c.iter().filter(|c| c.simplex.len() == 6 - 3 + l).count();
            assert_eq!(count, if l < 3 { 2 * l + 1 } else { l + 1 }, "l = {l}");
        }
    }
}
