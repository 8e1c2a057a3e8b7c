//! Matching for `Ã_n` (the cycle on `0..=n`), pulled back from `K^A` through
//! a relabeling of each piece `K_h = {sigma : 0..h ⊆ sigma, h ∉ sigma}`.

use super::a::a_toggle;
use super::{check_params, ones, CriticalCell, IncidenceRule};
use crate::coxeter::Simplex;
use crate::morse::Matching;
use crate::Result;

/// The clockwise relabeling of `K_h` onto `K^A_{m,r}` with `h = qd + r`,
/// `m = n - qd`: relative vertex `j` (1-based) sits at absolute vertex `r - j`
/// for `j <= r` and at `n + r + 1 - j` beyond. The vertices `r..h` are
/// always present and carry no relative label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relabel {
    pub n: usize,
    pub h: usize,
    pub r: usize,
    pub m: usize,
}

impl Relabel {
    pub fn new(n: usize, d: usize, h: usize) -> Self {
        let (q, r) = (h / d, h % d);
        Relabel { n, h, r, m: n - q * d }
    }

    pub fn absolute(&self, j: usize) -> usize {
        debug_assert!((1..=self.m).contains(&j));
        if j <= self.r {
            self.r - j
        } else {
            self.n + self.r + 1 - j
        }
    }

    /// The simplex in relative coordinates (bit `j - 1` for vertex `j`).
    pub fn relative_bits(&self, s: Simplex) -> u64 {
        (1..=self.m).filter(|&j| s.contains(self.absolute(j))).fold(0, |acc, j| acc | 1 << (j - 1))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TildeAMatching {
    pub n: usize,
    pub d: usize,
}

impl Matching for TildeAMatching {
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        let h = s.first_missing(self.n + 1)?;
        let rel = Relabel::new(self.n, self.d, h);
        a_toggle(rel.relative_bits(s), rel.m, rel.r, self.d).map(|j| s.toggle(rel.absolute(j + 1)))
    }

    fn in_domain(&self, s: Simplex) -> bool {
        s.is_subset(Simplex::full(self.n + 1)) && s != Simplex::full(self.n + 1)
    }
}

pub fn matching_tilde_a(n: usize, d: usize) -> Result<TildeAMatching> {
    check_params((2..=62).contains(&n) && d >= 2, || format!("tA_{n} with d = {d}"))?;
    Ok(TildeAMatching { n, d })
}

fn tau(d: usize, k: usize, r: usize, q: usize) -> CriticalCell {
    let block = format!("{}0{}0", ones(r), ones(d - 2 - r));
    let bits = format!("{}0{}0{}", ones(q * d + r), ones(d - 1), block.repeat(k - q - 1));
    CriticalCell::new(&format!("tau_{q}"), &bits, q as u32 + 1)
}

fn tau_prime(d: usize, k: usize, r: usize, q: usize) -> CriticalCell {
    let block = format!("{}0{}0", ones(r), ones(d - 2 - r));
    let bits = format!("{}0{}", ones(q * d + r), block.repeat(k - q));
    CriticalCell::new(&format!("tau'_{q}"), &bits, q as u32)
}

/// For `q = k - 1` the pattern runs past vertex `n` and is cut off there,
/// leaving every vertex but `h = (k-1)d + r`.
fn sigma(d: usize, k: usize, q: usize, r: usize) -> CriticalCell {
    let block = format!("{}0{}0", ones(d - 2 - r), ones(r));
    let bits = if q + 1 == k {
        format!("{}0{}", ones(q * d + r), ones(d - 1 - r))
    } else {
        format!("{}0{}0{}{}0", ones(q * d + r), ones(d - 1), block.repeat(k - q - 2), ones(d - 2 - r))
    };
    CriticalCell::new(&format!("sigma_{q},{r}"), &bits, q as u32 + 1)
}

fn sigma_prime(d: usize, k: usize, q: usize, r: usize) -> CriticalCell {
    let block = format!("{}0{}0", ones(d - 2 - r), ones(r));
    let bits = format!("{}0{}{}0", ones(q * d + r), block.repeat(k - q - 1), ones(d - 2 - r));
    CriticalCell::new(&format!("sigma'_{q},{r}"), &bits, q as u32)
}

fn sigma_bar(n: usize, d: usize) -> CriticalCell {
    CriticalCell::new("sigma_bar", &format!("{}0", ones(n)), ((n + 1) / d) as u32)
}

/// Closed-form critical cells: `tau_q`, `tau'_q` when `n = kd + r` with
/// `r <= d - 2`; `sigma_{q,r}`, `sigma'_{q,r}` (`q <= k - 1`) and `sigma_bar`
/// when `n = kd - 1`.
pub fn critical_tilde_a(n: usize, d: usize) -> Result<Vec<CriticalCell>> {
    matching_tilde_a(n, d)?;
    let mut out = Vec::new();
    if !(n + 1).is_multiple_of(d) {
        let (k, r) = (n / d, n % d);
        out.extend((0..k).map(|q| tau(d, k, r, q)));
        out.extend((0..=k).map(|q| tau_prime(d, k, r, q)));
    } else {
        let k = (n + 1) / d;
        for r in 0..=d - 2 {
            out.extend((0..k).map(|q| sigma(d, k, q, r)));
            out.extend((0..k).map(|q| sigma_prime(d, k, q, r)));
        }
        out.push(sigma_bar(n, d));
    }
    Ok(out)
}

/// The nonzero Morse incidences; signs are left open (`±1`).
pub fn incidence_tilde_a(n: usize, d: usize) -> Result<Vec<IncidenceRule>> {
    matching_tilde_a(n, d)?;
    let mut out = Vec::new();
    if !(n + 1).is_multiple_of(d) {
        let (k, r) = (n / d, n % d);
        for q in 0..k {
            out.push(IncidenceRule::unsigned("[tau_q:tau'_q]", tau(d, k, r, q).simplex, tau_prime(d, k, r, q).simplex));
        }
    } else {
        let k = (n + 1) / d;
        for r in 0..=d - 2 {
            for q in 0..k {
                let (s, sp) = (sigma(d, k, q, r).simplex, sigma_prime(d, k, q, r).simplex);
                out.push(IncidenceRule::unsigned("[sigma_q,r:sigma'_q,r]", s, sp));
            }
            let sp = sigma_prime(d, k, k - 1, r).simplex;
            out.push(IncidenceRule::unsigned("[sigma_bar:sigma'_k-1,r]", sigma_bar(n, d).simplex, sp));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeling_small_cases() {
        // n = 5, d = 3, h = 4: q = 1, r = 1, m = 2; relative 1 -> 0, 2 -> 5
        let rel = Relabel::new(5, 3, 4);
        assert_eq!((rel.r, rel.m), (1, 2));
        assert_eq!(rel.absolute(1), 0);
        assert_eq!(rel.absolute(2), 5);
        // h = 2 on n = 5, d = 3: r = 2, relative 1, 2 -> 1, 0 then 3 -> 5, 4 -> 4, 5 -> 3
        let rel = Relabel::new(5, 3, 2);
        let got: Vec<usize> = (1..=rel.m).map(|j| rel.absolute(j)).collect();
        assert_eq!(got, vec![1, 0, 5, 4, 3]);
        // h = 0: plain reversal of 1..=n
        let rel = Relabel::new(4, 3, 0);
        let got: Vec<usize> = (1..=rel.m).map(|j| rel.absolute(j)).collect();
        assert_eq!(got, vec![4, 3, 2, 1]);
        // the last relative vertex is always h + 1
        for n in 2..9 {
            for d in 2..6 {
                for h in 0..n {
                    let rel = Relabel::new(n, d, h);
                    assert_eq!(rel.absolute(rel.m), h + 1, "n={n} d={d} h={h}");
                }
            }
        }
    }

    #[test]
    fn sigma_bar_is_critical() {
        let m = matching_tilde_a(5, 3).unwrap();
        let bar = Simplex::full(5);
        assert_eq!(m.partner(bar), None);
        let c = critical_tilde_a(5, 3).unwrap();
        let last = c.last().unwrap();
        assert_eq!((last.simplex, last.simplex.len(), last.exponent), (bar, 5, 2));
    }
}
