//! Alternating paths and the incidence numbers of the Morse complex.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::rc::Rc;

use super::Matching;
use crate::complexes::incidence;
use crate::coxeter::{Simplex, SphericalComplex};
use crate::Error;

/// Integer combination of critical cells, sorted by cell.
pub type Chain = Vec<(Simplex, i64)>;

fn overflow() -> Error {
    Error::TooLarge("Morse incidence overflowed i64".into())
}

/// Memoized gradient flow: `flow(x)` is the signed count of alternating paths
/// from the face `x` down to each critical cell of the same degree.
///
/// `flow(x) = x` for critical `x`; `0` when `x` is matched with a face of
/// itself; and `-[y:x] * sum_{z facet of y, z != x} [y:z] flow(z)` when `x` is
/// matched with the coface `y`.
pub struct Flow<'a> {
    k: &'a SphericalComplex,
    m: &'a dyn Matching,
    memo: HashMap<Simplex, Rc<Chain>>,
    guard: usize,
}

impl<'a> Flow<'a> {
    pub fn new(k: &'a SphericalComplex, m: &'a dyn Matching) -> Self {
        Flow { k, m, memo: HashMap::new(), guard: 2 * k.cells().len() + 2 }
    }

    fn in_domain(&self, s: Simplex) -> bool {
        self.k.contains(s) && self.m.in_domain(s)
    }

    /// Facets of `y` inside the domain other than `skip`.
    fn other_facets(&self, y: Simplex, skip: Simplex) -> Vec<Simplex> {
        y.facets().map(|(_, z)| z).filter(|&z| z != skip && self.in_domain(z)).collect()
    }

    pub fn flow(&mut self, x: Simplex) -> Result<Rc<Chain>, Error> {
        let mut stack = vec![x];
        let mut open: HashSet<Simplex> = HashSet::new();
        while let Some(&top) = stack.last() {
            if self.memo.contains_key(&top) {
                stack.pop();
                continue;
            }
            if stack.len() > self.guard {
                return Err(Error::NonTerminating(self.guard));
            }
            let y = match self.m.partner(top) {
                None => {
                    self.memo.insert(top, Rc::new(vec![(top, 1)]));
                    stack.pop();
                    continue;
                }
                Some(p) if p.len() < top.len() => {
                    self.memo.insert(top, Rc::new(Vec::new()));
                    stack.pop();
                    continue;
                }
                Some(p) => p,
            };
            let deps = self.other_facets(y, top);
            let missing: Vec<Simplex> =
                deps.iter().copied().filter(|z| !self.memo.contains_key(z)).collect();
            if missing.is_empty() {
                let mut acc: BTreeMap<Simplex, i64> = BTreeMap::new();
                for z in deps {
                    let c = incidence(y, z);
                    for &(cell, v) in self.memo[&z].iter() {
                        let e = acc.entry(cell).or_insert(0);
                        *e = v.checked_mul(c).and_then(|t| e.checked_add(t)).ok_or_else(overflow)?;
                    }
                }
                let s = -incidence(y, top);
                let chain: Chain = acc
                    .into_iter()
                    .filter(|&(_, v)| v != 0)
                    .map(|(cell, v)| v.checked_mul(s).map(|w| (cell, w)).ok_or_else(overflow))
                    .collect::<Result<_, _>>()?;
                self.memo.insert(top, Rc::new(chain));
                open.remove(&top);
                stack.pop();
            } else {
                if !open.insert(top) {
                    // revisited while its dependencies are still pending
                    return Err(Error::NonTerminating(self.guard));
                }
                for z in missing {
                    if open.contains(&z) {
                        return Err(Error::NonTerminating(self.guard));
                    }
                    stack.push(z);
                }
            }
        }
        Ok(self.memo[&x].clone())
    }

    /// Morse boundary of a critical cell: `sum_z [sigma:z] flow(z)`.
    pub fn boundary(&mut self, sigma: Simplex) -> Result<Chain, Error> {
        let mut acc: BTreeMap<Simplex, i64> = BTreeMap::new();
        for (_, z) in sigma.facets() {
            if !self.in_domain(z) {
                continue;
            }
            let c = incidence(sigma, z);
            for &(cell, v) in self.flow(z)?.iter() {
                let e = acc.entry(cell).or_insert(0);
                *e = v.checked_mul(c).and_then(|t| e.checked_add(t)).ok_or_else(overflow)?;
            }
        }
        Ok(acc.into_iter().filter(|&(_, v)| v != 0).collect())
    }
}

/// `[sigma : tau]^M` via the memoized flow.
pub fn morse_incidence(
    k: &SphericalComplex,
    m: &dyn Matching,
    sigma: Simplex,
    tau: Simplex,
) -> Result<i64, Error> {
    let chain = Flow::new(k, m).boundary(sigma)?;
    Ok(chain.iter().find(|e| e.0 == tau).map_or(0, |e| e.1))
}

/// Every alternating path `sigma > tau_1 < sigma_1 > ... > tau`, listed as
/// `[sigma, tau_1, sigma_1, ..., tau]`, found by exhaustive depth-first search.
pub fn alternating_paths(
    k: &SphericalComplex,
    m: &dyn Matching,
    sigma: Simplex,
    tau: Simplex,
) -> Result<Vec<Vec<Simplex>>, Error> {
    let guard = 2 * k.cells().len() + 2;
    let in_domain = |s: Simplex| k.contains(s) && m.in_domain(s);
    let mut out = Vec::new();
    let mut path = vec![sigma];
    fn go(
        m: &dyn Matching,
        in_domain: &dyn Fn(Simplex) -> bool,
        tau: Simplex,
        guard: usize,
        path: &mut Vec<Simplex>,
        out: &mut Vec<Vec<Simplex>>,
    ) -> Result<(), Error> {
        if path.len() > guard {
            return Err(Error::NonTerminating(guard));
        }
        let top = *path.last().unwrap();
        let came_from = path.len().checked_sub(2).map(|i| path[i]);
        for (_, z) in top.facets() {
            if Some(z) == came_from || !in_domain(z) {
                continue;
            }
            if z == tau {
                let mut p = path.clone();
                p.push(z);
                out.push(p);
                continue;
            }
            if let Some(y) = m.partner(z) {
                if y.len() > z.len() {
                    path.push(z);
                    path.push(y);
                    go(m, in_domain, tau, guard, path, out)?;
                    path.truncate(path.len() - 2);
                }
            }
        }
        Ok(())
    }
    go(m, &in_domain, tau, guard, &mut path, &mut out)?;
    Ok(out)
}

/// `(-1)^m [sigma:tau_1][sigma_1:tau_1][sigma_1:tau_2] ... [sigma_m:tau]`.
pub fn path_weight(path: &[Simplex]) -> i64 {
    let steps = (path.len() - 2) / 2;
    let sign = if steps.is_multiple_of(2) { 1 } else { -1 };
    sign * path
        .windows(2)
        .map(|w| if w[0].len() > w[1].len() { incidence(w[0], w[1]) } else { incidence(w[1], w[0]) })
        .product::<i64>()
}

/// `[sigma : tau]^M` as an explicit signed sum over alternating paths.
pub fn morse_incidence_by_paths(
    k: &SphericalComplex,
    m: &dyn Matching,
    sigma: Simplex,
    tau: Simplex,
) -> Result<i64, Error> {
    Ok(alternating_paths(k, m, sigma, tau)?.iter().map(|p| path_weight(p)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterGraph;
    use crate::morse::PairMatching;

    fn s(vs: &[usize]) -> Simplex {
        Simplex::from_vertices(vs.iter().copied())
    }

    #[test]
    fn trivial_path_is_the_incidence() {
        let k = SphericalComplex::new(&CoxeterGraph::a(3).unwrap()).unwrap();
        let m = PairMatching::new();
        let (sigma, tau) = (s(&[0, 1, 2]), s(&[0, 2]));
        assert_eq!(alternating_paths(&k, &m, sigma, tau).unwrap(), vec![vec![sigma, tau]]);
        assert_eq!(morse_incidence(&k, &m, sigma, tau).unwrap(), -1);
        assert_eq!(morse_incidence_by_paths(&k, &m, sigma, tau).unwrap(), -1);
    }

    #[test]
    fn one_step_path() {
        // match {0} with {0,1}; then [{0,2} : {1}]^M runs {0,2} > {0} < {0,1} > {1}
        let k = SphericalComplex::new(&CoxeterGraph::discrete(3).unwrap()).unwrap();
        let m = PairMatching::from_pairs([(s(&[0]), s(&[0, 1]))]);
        let paths = alternating_paths(&k, &m, s(&[0, 2]), s(&[1])).unwrap();
        assert_eq!(paths, vec![vec![s(&[0, 2]), s(&[0]), s(&[0, 1]), s(&[1])]]);
        // (-1)^1 * [02:0] * [01:0] * [01:1] = -1 * (-1) * (-1) * 1 = -1
        assert_eq!(path_weight(&paths[0]), -1);
        assert_eq!(morse_incidence(&k, &m, s(&[0, 2]), s(&[1])).unwrap(), -1);
    }

    #[test]
    fn cycles_do_not_hang() {
        let k = SphericalComplex::new(&CoxeterGraph::discrete(3).unwrap()).unwrap();
        let cyc = PairMatching::from_pairs([
            (s(&[0]), s(&[0, 1])),
            (s(&[1]), s(&[1, 2])),
            (s(&[2]), s(&[0, 2])),
        ]);
        let r = Flow::new(&k, &cyc).flow(s(&[0]));
        assert!(matches!(r, Err(Error::NonTerminating(_))));
    }
}
