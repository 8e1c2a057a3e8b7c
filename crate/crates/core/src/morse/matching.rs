use std::collections::{HashMap, VecDeque};

use crate::coxeter::{Simplex, SphericalComplex};
use crate::Error;

/// A matching on a subposet of the spherical complex, given as a function.
pub trait Matching: Sync {
    /// The partner of `s`, or `None` when `s` is critical.
    fn partner(&self, s: Simplex) -> Option<Simplex>;

    /// Whether `s` lies in the subposet the matching is defined on.
    fn in_domain(&self, _s: Simplex) -> bool {
        true
    }
}

impl<M: Matching + ?Sized> Matching for &M {
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        (**self).partner(s)
    }
    fn in_domain(&self, s: Simplex) -> bool {
        (**self).in_domain(s)
    }
}

impl<M: Matching + ?Sized> Matching for Box<M> {
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        (**self).partner(s)
    }
    fn in_domain(&self, s: Simplex) -> bool {
        (**self).in_domain(s)
    }
}

/// An explicitly stored matching; pairs are kept in both directions.
#[derive(Clone, Debug, Default)]
pub struct PairMatching {
    pairs: HashMap<Simplex, Simplex>,
}

impl PairMatching {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Simplex, Simplex)>) -> Self {
        let mut m = Self::new();
        for (a, b) in pairs {
            m.insert(a, b);
        }
        m
    }

    pub fn insert(&mut self, a: Simplex, b: Simplex) {
        self.pairs.insert(a, b);
        self.pairs.insert(b, a);
    }

    /// Materializes any matching restricted to the cells of `k` in its domain.
    pub fn materialize(k: &SphericalComplex, m: &dyn Matching) -> Self {
        let pairs = k
            .cells()
            .iter()
            .filter(|&&s| m.in_domain(s))
            .filter_map(|&s| m.partner(s).map(|p| (s, p)))
            .collect();
        PairMatching { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl Matching for PairMatching {
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        self.pairs.get(&s).copied()
    }
}

/// Restricts a matching to a smaller domain, e.g. the cells of positive weight.
pub struct Restricted<M, F> {
    pub inner: M,
    pub keep: F,
}

impl<M: Matching, F: Fn(Simplex) -> bool + Sync> Matching for Restricted<M, F> {
    fn partner(&self, s: Simplex) -> Option<Simplex> {
        self.inner.partner(s)
    }
    fn in_domain(&self, s: Simplex) -> bool {
        self.inner.in_domain(s) && (self.keep)(s)
    }
}

/// Cells of `k` inside the matching's domain, in basis order.
pub fn domain_cells(k: &SphericalComplex, m: &dyn Matching) -> Vec<Simplex> {
    k.cells().iter().copied().filter(|&s| m.in_domain(s)).collect()
}

/// Checks the pairing invariants: partners are in the domain, are mutual, and
/// differ in exactly one vertex.
pub fn check_matching(k: &SphericalComplex, m: &dyn Matching) -> Result<(), Error> {
    for s in domain_cells(k, m) {
        let Some(p) = m.partner(s) else { continue };
        if !k.contains(p) || !m.in_domain(p) {
            return Err(Error::NotAMatching(format!("partner {p:?} of {s:?} lies outside the domain")));
        }
        if (s.0 ^ p.0).count_ones() != 1 {
            return Err(Error::NotAMatching(format!("{s:?} and {p:?} are not a cover pair")));
        }
        if m.partner(p) != Some(s) {
            return Err(Error::NotAMatching(format!("{s:?} -> {p:?} is not symmetric")));
        }
    }
    Ok(())
}

/// Whether the modified Hasse diagram (facet edges pointing down, matched
/// edges reversed) has no directed cycle. Errors if `m` is not a matching.
pub fn verify_acyclic(k: &SphericalComplex, m: &dyn Matching) -> Result<bool, Error> {
    check_matching(k, m)?;
    let cells = domain_cells(k, m);
    let index: HashMap<Simplex, usize> = cells.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    let mut indeg = vec![0usize; cells.len()];
    for (i, &sigma) in cells.iter().enumerate() {
        for (_, tau) in sigma.facets() {
            let Some(&j) = index.get(&tau) else { continue };
            let (from, to) = if m.partner(tau) == Some(sigma) { (j, i) } else { (i, j) };
            out[from].push(to);
            indeg[to] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..cells.len()).filter(|&i| indeg[i] == 0).collect();
    let mut seen = 0;
    while let Some(i) = queue.pop_front() {
        seen += 1;
        for &j in &out[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                queue.push_back(j);
            }
        }
    }
    Ok(seen == cells.len())
}

/// Whether every matched pair has equal `phi_d` exponent.
///
/// Weights here are monic cyclotomic products up to units, so equality of the
/// ideals `(w(x)) = (w(y))` reduces to equality of exponents.
pub fn verify_weighted(k: &SphericalComplex, m: &dyn Matching, d: u32) -> bool {
    domain_cells(k, m).into_iter().all(|s| match m.partner(s) {
        Some(p) => k.exponent(s, d) == k.exponent(p, d),
        None => true,
    })
}

/// The critical cells of the matching, in basis order.
pub fn critical_cells(k: &SphericalComplex, m: &dyn Matching) -> Vec<Simplex> {
    domain_cells(k, m).into_iter().filter(|&s| m.partner(s).is_none()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterGraph;

    fn s(vs: &[usize]) -> Simplex {
        Simplex::from_vertices(vs.iter().copied())
    }

    #[test]
    fn empty_matching_is_acyclic_and_weighted() {
        let k = SphericalComplex::new(&CoxeterGraph::a(3).unwrap()).unwrap();
        let m = PairMatching::new();
        assert!(verify_acyclic(&k, &m).unwrap());
        assert!(verify_weighted(&k, &m, 2));
        assert_eq!(critical_cells(&k, &m).len(), 8);
    }

    #[test]
    fn gradient_cycle_is_detected() {
        // Around the boundary of a triangle: {0}~{0,1}, {1}~{1,2}, {2}~{0,2}
        // gives {0} -> {0,1} -> {1} -> {1,2} -> {2} -> {0,2} -> {0}.
        let k = SphericalComplex::new(&CoxeterGraph::discrete(3).unwrap()).unwrap();
        let cyc = PairMatching::from_pairs([
            (s(&[0]), s(&[0, 1])),
            (s(&[1]), s(&[1, 2])),
            (s(&[2]), s(&[0, 2])),
        ]);
        assert!(!verify_acyclic(&k, &cyc).unwrap());
        let ok = PairMatching::from_pairs([(s(&[0]), s(&[0, 1])), (s(&[1]), s(&[1, 2]))]);
        assert!(verify_acyclic(&k, &ok).unwrap());
    }

    #[test]
    fn bad_pairs_are_rejected() {
        let k = SphericalComplex::new(&CoxeterGraph::a(3).unwrap()).unwrap();
        let m = PairMatching::from_pairs([(s(&[0]), s(&[1, 2]))]);
        assert!(matches!(verify_acyclic(&k, &m), Err(Error::NotAMatching(_))));
    }
}
