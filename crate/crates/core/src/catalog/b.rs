//! Matching for `B_n`: the vertex `1` carries the label-4 edge.

use super::a::a_toggle;
use super::{check_params, ones, CriticalCell, IncidenceRule};
use crate::coxeter::Simplex;
use crate::morse::Matching;
use crate::Result;

/// Relative vertex (0-based) to toggle on the `B_n` graph, or `None` when
/// critical. Bit `i` is vertex `i + 1`.
pub fn b_toggle(bits: u64, n: usize, d: usize) -> Option<usize> {
    if n == 0 {
        return None;
    }
    if d % 2 == 1 {
        return Some(0);
    }
    let h = d / 2;
    let has = |j: usize| j >= 1 && j <= n && bits >> (j - 1) & 1 == 1;
    let run = (bits.trailing_ones() as usize).min(n);
    let (q, r) = (run / h, run % h);
    if r >= 1 {
        return Some(q * h);
    }
    // with h = 1 the range below is empty, so the end of the path has to be
    // caught first
    if q * h == n {
        return None;
    }
    if !(q * h + 2..=(q + 1) * h).all(has) {
        return Some(q * h);
    }
    let base = q * h + 1;
    a_toggle(bits >> base, n - base, h - 1, d).map(|i| i + base)
}

#[derive(Clone, Copy, Debug)]
pub struct BMatching {
    pub n: usize,
    pub d: usize,
}

impl Matching for BMatching {
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        b_toggle(s.0, self.n, self.d).map(|v| s.toggle(v))
    }

    fn in_domain(&self, s: Simplex) -> bool {
        s.is_subset(Simplex::full(self.n))
    }
}

pub fn matching_b(n: usize, d: usize) -> Result<BMatching> {
    check_params((1..=63).contains(&n) && d >= 2, || format!("B_{n} with d = {d}"))?;
    Ok(BMatching { n, d })
}

fn sigma(n: usize, d: usize, q: usize) -> CriticalCell {
    let h = d / 2;
    let k = n / h;
    let bits = format!("{}{}0{}", ones(q * h), format!("0{}", ones(h - 1)).repeat(k - q - 2), ones(d - 1));
    CriticalCell::new(&format!("sigma_{q}"), &bits, q as u32 + 1)
}

fn sigma_prime(n: usize, d: usize, q: usize) -> CriticalCell {
    let h = d / 2;
    let k = n / h;
    let bits = format!("{}{}", ones(q * h), format!("0{}", ones(h - 1)).repeat(k - q));
    CriticalCell::new(&format!("sigma'_{q}"), &bits, q as u32)
}

fn applies(n: usize, d: usize) -> bool {
    d.is_multiple_of(2) && n.is_multiple_of(d / 2)
}

/// `sigma_q` for `0 <= q <= k - 2` and `sigma'_q` for `0 <= q <= k` when `d`
/// is even and `n = k d/2`; nothing otherwise.
pub fn critical_b(n: usize, d: usize) -> Result<Vec<CriticalCell>> {
    matching_b(n, d)?;
    if !applies(n, d) {
        return Ok(Vec::new());
    }
    let k = n / (d / 2);
    let mut out: Vec<CriticalCell> = (0..k.saturating_sub(1)).map(|q| sigma(n, d, q)).collect();
    out.extend((0..=k).map(|q| sigma_prime(n, d, q)));
    Ok(out)
}

fn pow(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The nonzero Morse incidences between critical cells, with signs.
pub fn incidence_b(n: usize, d: usize) -> Result<Vec<IncidenceRule>> {
    matching_b(n, d)?;
    if !applies(n, d) {
        return Ok(Vec::new());
    }
    let h = d / 2;
    let k = n / h;
    let mut out = Vec::new();
    let s = |q| sigma(n, d, q).simplex;
    let sp = |q| sigma_prime(n, d, q).simplex;
    for q in 0..=k {
        if q + 2 <= k {
            if q >= 1 {
                out.push(IncidenceRule::signed("[sigma_q:sigma_q-1]", s(q), s(q - 1), pow((q - 1) * h)));
            }
            out.push(IncidenceRule::signed("[sigma_q:sigma'_q]", s(q), sp(q), pow((k - 1) * (h - 1) + q)));
        }
        if q >= 2 {
            out.push(IncidenceRule::signed("[sigma'_q:sigma_q-2]", sp(q), s(q - 2), pow(k * (h - 1) + q)));
        }
        if q >= 1 {
            out.push(IncidenceRule::signed("[sigma'_q:sigma'_q-1]", sp(q), sp(q - 1), pow((q - 1) * h)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(printed: &[usize]) -> Simplex {
        Simplex::from_vertices(printed.iter().map(|v| v - 1))
    }

    #[test]
    fn b4_d4() {
        let m = matching_b(4, 4).unwrap();
        assert_eq!(m.partner(s(&[1, 2])), Some(s(&[1, 2, 3])));
        let critical: Vec<Simplex> = (0..16u64).map(Simplex).filter(|&x| m.partner(x).is_none()).collect();
        assert_eq!(critical.len(), 4);
        for x in [s(&[2, 3, 4]), s(&[1, 2, 3, 4]), s(&[1, 2, 4]), s(&[2, 4])] {
            assert!(critical.contains(&x), "{x:?}");
        }
        // {1,3} starts with a run of length 1 and is matched down to {3}
        assert_eq!(m.partner(s(&[1, 3])), Some(s(&[3])));
        let c = critical_b(4, 4).unwrap();
        let weights: Vec<(Simplex, u32)> = c.iter().map(|c| (c.simplex, c.exponent)).collect();
        assert_eq!(
            weights,
            vec![(s(&[2, 3, 4]), 1), (s(&[2, 4]), 0), (s(&[1, 2, 4]), 1), (s(&[1, 2, 3, 4]), 2)]
        );
    }

    #[test]
    fn odd_d_and_non_multiples_are_perfect() {
        assert!(critical_b(5, 3).unwrap().is_empty());
        assert!(critical_b(5, 4).unwrap().is_empty());
        let m = matching_b(5, 4).unwrap();
        assert!((0..32u64).all(|b| m.partner(Simplex(b)).is_some()));
    }

    #[test]
    fn d2_ends_at_the_full_simplex() {
        let m = matching_b(3, 2).unwrap();
        assert_eq!(m.partner(Simplex::full(3)), None);
    }
}
