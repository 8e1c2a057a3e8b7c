//! The matching on the positive-weight part of `A_n`, i.e. on the simplices
//! outside `Ind_{d-2}(A_n)`.

use super::check_params;
use crate::coxeter::Simplex;
use crate::morse::Matching;
use crate::Result;

#[derive(Clone, Copy, Debug)]
pub struct IndependenceMatching {
    pub n: usize,
    pub d: usize,
}

impl IndependenceMatching {
    /// Start of the first run of length `>= d - 1`.
    fn first_long_run(&self, s: Simplex) -> Option<usize> {
        let mut v = 0;
        while v < self.n {
            if !s.contains(v) {
                v += 1;
                continue;
            }
            let start = v;
            while v < self.n && s.contains(v) {
                v += 1;
            }
            if v - start >= self.d - 1 {
                return Some(start);
            }
        }
        None
    }
}

impl Matching for IndependenceMatching {
    /// Toggles the `d`-th vertex of the first long run; removing it leaves a
    /// run of exactly `d - 1`, so the run and the weight survive.
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        let a = self.first_long_run(s)?;
        let v = a + self.d - 1;
        (v < self.n).then(|| s.toggle(v))
    }

    fn in_domain(&self, s: Simplex) -> bool {
        s.is_subset(Simplex::full(self.n)) && self.first_long_run(s).is_some()
    }
}

pub fn matching_a_independence(n: usize, d: usize) -> Result<IndependenceMatching> {
    check_params((1..=63).contains(&n) && d >= 2, || format!("A_{n} with d = {d}"))?;
    Ok(IndependenceMatching { n, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_weight_criticals_for_a5_d3() {
        let m = matching_a_independence(5, 3).unwrap();
        let critical: Vec<Simplex> =
            (0..32u64).map(Simplex).filter(|&s| m.in_domain(s) && m.partner(s).is_none()).collect();
        // tau + {4,5} for tau in {∅, {1}, {2}} (printed labels)
        let expect = [vec![3, 4], vec![0, 3, 4], vec![1, 3, 4]];
        assert_eq!(critical.len(), 3);
        for e in expect {
            assert!(critical.contains(&Simplex::from_vertices(e)));
        }
    }

    #[test]
    fn d2_domain_is_every_nonempty_simplex() {
        let m = matching_a_independence(3, 2).unwrap();
        assert!(!m.in_domain(Simplex::EMPTY));
        assert!((1..8u64).all(|b| m.in_domain(Simplex(b))));
    }
}
