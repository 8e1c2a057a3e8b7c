//! The recursive matching on `K^A_{n,f}`: simplices of the path on `1..=n`
//! that contain `1..=f`.

use super::{check_params, ones, CriticalCell};
use crate::coxeter::Simplex;
use crate::morse::Matching;
use crate::Result;

/// Relative vertex (0-based) to toggle for a simplex of `K^A_{n,f}`, or `None`
/// when it is critical. Bit `i` of `bits` is vertex `i + 1`; bits at or past
/// `n` must be clear.
pub fn a_toggle(bits: u64, n: usize, f: usize, d: usize) -> Option<usize> {
    let (mut off, mut n, mut f) = (0, n, f);
    if f >= d {
        // the leading multiple of d is frozen in
        let s = f / d * d;
        off += s;
        n -= s;
        f -= s;
    }
    loop {
        let has = |j: usize| j >= 1 && j <= n && bits >> (off + j - 1) & 1 == 1;
        if d - 1 <= n && (1..d).all(has) {
            return if n == d - 1 { None } else { Some(off + d - 1) };
        }
        if n == f {
            return None;
        }
        if has(f + 1) || !(f + 2..d).all(has) {
            return Some(off + f);
        }
        off += f + 1;
        n -= f + 1;
        f = d - 2 - f;
    }
}

/// The matching on `K^A_{n,f}` for `phi_d`, on the graph `A_n` (internal
/// vertex `i` is vertex `i + 1`).
#[derive(Clone, Copy, Debug)]
pub struct AMatching {
    pub n: usize,
    pub f: usize,
    pub d: usize,
}

impl Matching for AMatching {
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        a_toggle(s.0, self.n, self.f, self.d).map(|v| s.toggle(v))
    }

    fn in_domain(&self, s: Simplex) -> bool {
        Simplex::full(self.f).is_subset(s) && s.is_subset(Simplex::full(self.n))
    }
}

pub fn matching_a(n: usize, f: usize, d: usize) -> Result<AMatching> {
    check_params(n >= f && d >= 2 && n <= 63, || format!("K^A_{{{n},{f}}} with d = {d}"))?;
    Ok(AMatching { n, f, d })
}

/// Closed-form critical cells of [`AMatching`] for `f <= d - 1`.
pub fn critical_a(n: usize, f: usize, d: usize) -> Result<Vec<CriticalCell>> {
    check_params(n >= f && d >= 2 && f < d, || format!("K^A_{{{n},{f}}} with d = {d}"))?;
    let block = format!("{}0{}0", ones(f), ones(d.saturating_sub(2 + f)));
    let mut out = Vec::new();
    if n == f {
        out.push(CriticalCell::new("1^f", &ones(f), ((f + 1) / d) as u32));
        return Ok(out);
    }
    if f > d - 2 {
        return Ok(out);
    }
    if (n - f).is_multiple_of(d) {
        let k = (n - f) / d;
        let prefix = block.repeat(k - 1);
        out.push(CriticalCell::new("sigma", &format!("{prefix}{}0{}", ones(f), ones(d - 1)), 1));
        out.push(CriticalCell::new("tau", &format!("{}{}", block.repeat(k), ones(f)), 0));
    } else if (n + 1).is_multiple_of(d) {
        let k = (n + 1) / d;
        let prefix = block.repeat(k - 1);
        out.push(CriticalCell::new("sigma", &format!("{prefix}{}", ones(d - 1)), 1));
        out.push(CriticalCell::new("tau", &format!("{prefix}{}0{}", ones(f), ones(d - 2 - f)), 0));
    }
    Ok(out)
}
