use std::fmt;

use super::{CoxeterGraph, Label, Simplex};
use crate::poly::{q_integer, q_integer_profile, CyclotomicProfile, LaurentPoly};
use crate::Error;

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(k) | FiniteType::B(k) | FiniteType::D(k) => k,
            FiniteType::E6 => 6,
            FiniteType::E7 => 7,
            FiniteType::E8 => 8,
            FiniteType::F4 | FiniteType::H4 => 4,
            FiniteType::H3 => 3,
            FiniteType::I2(_) => 2,
        }
    }

    /// Degrees of the basic invariants; the Poincaré polynomial is `prod [d_i]_q`.
    pub fn degrees(self) -> Vec<u32> {
        match self {
            FiniteType::A(k) => (2..=k as u32 + 1).collect(),
            FiniteType::B(k) => (1..=k as u32).map(|i| 2 * i).collect(),
            FiniteType::D(k) => {
                let mut d: Vec<u32> = (1..k as u32).map(|i| 2 * i).collect();
                d.push(k as u32);
                d
            }
            FiniteType::E6 => vec![2, 5, 6, 8, 9, 12],
            FiniteType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            FiniteType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            FiniteType::F4 => vec![2, 6, 8, 12],
            FiniteType::H3 => vec![2, 6, 10],
            FiniteType::H4 => vec![2, 12, 20, 30],
            FiniteType::I2(m) => vec![2, m],
        }
    }

    /// Exponent of `phi_d` in the Poincaré polynomial, `d >= 2`.
    pub fn weight_exponent(self, d: u32) -> u32 {
        let d = d as usize;
        match self {
            FiniteType::A(k) => ((k + 1) / d) as u32,
            FiniteType::B(k) if d % 2 == 1 => (k / d) as u32,
            FiniteType::B(k) => (k / (d / 2)) as u32,
            other => other.degrees().iter().filter(|&&di| (di as usize).is_multiple_of(d)).count() as u32,
        }
    }

    pub fn poincare_polynomial(self) -> LaurentPoly {
        self.degrees()
            .into_iter()
            .fold(LaurentPoly::one(), |acc, d| &acc * &q_integer(d))
    }

    pub fn weight_profile(self) -> CyclotomicProfile {
        self.degrees()
            .into_iter()
            .fold(CyclotomicProfile::default(), |acc, d| acc.mul(&q_integer_profile(d)))
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(k) => write!(f, "A{k}"),
            FiniteType::B(k) => write!(f, "B{k}"),
            FiniteType::D(k) => write!(f, "D{k}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// One connected component of an induced subgraph, with its type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub ty: FiniteType,
    pub vertices: Simplex,
}

/// Finite-type decomposition of a simplex: components ordered by lowest vertex.
pub type FiniteTypeLabel = Vec<Component>;

/// Connected components of the subgraph induced on `sigma`, by lowest vertex.
pub fn components(graph: &CoxeterGraph, sigma: Simplex) -> Vec<Simplex> {
    let mut rest = sigma.0;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = graph.neighbours(v) & sigma.0 & !comp;
            comp |= new;
            frontier |= new;
        }
        rest &= !comp;
        out.push(Simplex(comp));
    }
    out
}

/// Decomposes the induced subgraph on `sigma` into irreducible finite types;
/// `None` if the parabolic subgroup is infinite.
pub fn classify(graph: &CoxeterGraph, sigma: Simplex) -> Option<FiniteTypeLabel> {
    components(graph, sigma)
        .into_iter()
        .map(|c| classify_connected(graph, c).map(|ty| Component { ty, vertices: c }))
        .collect()
}

fn classify_connected(graph: &CoxeterGraph, comp: Simplex) -> Option<FiniteType> {
    let vs: Vec<usize> = comp.vertices().collect();
    let k = vs.len();
    let deg = |v: usize| (graph.neighbours(v) & comp.0).count_ones() as usize;
    let mut edges = Vec::new();
    for (a, &i) in vs.iter().enumerate() {
        for &j in &vs[a + 1..] {
            let l = graph.label(i, j);
            if l.is_edge() {
                edges.push((i, j, l));
            }
        }
    }
    if edges.iter().any(|e| e.2 == Label::Infinite) {
        return None;
    }
    let m = |e: &(usize, usize, Label)| match e.2 {
        Label::Finite(m) => m,
        Label::Infinite => unreachable!(),
    };
    if k == 1 {
        return Some(FiniteType::A(1));
    }
    if k == 2 {
        return Some(match m(&edges[0]) {
            3 => FiniteType::A(2),
            4 => FiniteType::B(2),
            x => FiniteType::I2(x),
        });
    }
    // Connected with k - 1 edges means a tree.
    if edges.len() != k - 1 {
        return None;
    }
    let heavy: Vec<_> = edges.iter().filter(|e| m(e) > 3).collect();
    let max_deg = vs.iter().map(|&v| deg(v)).max().unwrap();
    match heavy.as_slice() {
        [] if max_deg <= 2 => Some(FiniteType::A(k)),
        [] => {
            let branch: Vec<usize> = vs.iter().copied().filter(|&v| deg(v) >= 3).collect();
            if branch.len() != 1 || deg(branch[0]) != 3 {
                return None;
            }
            let b = branch[0];
            let mut arms: Vec<usize> = Simplex(graph.neighbours(b) & comp.0)
                .vertices()
                .map(|start| arm_length(graph, comp, b, start))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(FiniteType::D(k)),
                [1, 2, 2] => Some(FiniteType::E6),
                [1, 2, 3] => Some(FiniteType::E7),
                [1, 2, 4] => Some(FiniteType::E8),
                _ => None,
            }
        }
        [e] if max_deg <= 2 => {
            let at_end = deg(e.0) == 1 || deg(e.1) == 1;
            match (m(e), at_end, k) {
                (4, true, _) => Some(FiniteType::B(k)),
                (4, false, 4) => Some(FiniteType::F4),
                (5, true, 3) => Some(FiniteType::H3),
                (5, true, 4) => Some(FiniteType::H4),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Number of vertices on the arm leaving `branch` through `start`.
fn arm_length(graph: &CoxeterGraph, comp: Simplex, branch: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (branch, start, 1);
    loop {
        let next = graph.neighbours(cur) & comp.0 & !(1 << prev);
        if next == 0 {
            return len;
        }
        prev = cur;
        cur = next.trailing_zeros() as usize;
        len += 1;
    }
}

fn require(graph: &CoxeterGraph, sigma: Simplex) -> Result<FiniteTypeLabel, Error> {
    classify(graph, sigma).ok_or_else(|| Error::NotSpherical(format!("{sigma:?}")))
}

/// `W_sigma(q)`, the Poincaré polynomial of the parabolic subgroup.
pub fn poincare_polynomial(graph: &CoxeterGraph, sigma: Simplex) -> Result<LaurentPoly, Error> {
    Ok(require(graph, sigma)?
        .iter()
        .fold(LaurentPoly::one(), |acc, c| &acc * &c.ty.poincare_polynomial()))
}

/// `W_sigma(q)` as a cyclotomic profile.
pub fn weight_profile(graph: &CoxeterGraph, sigma: Simplex) -> Result<CyclotomicProfile, Error> {
    Ok(require(graph, sigma)?
        .iter()
        .fold(CyclotomicProfile::default(), |acc, c| acc.mul(&c.ty.weight_profile())))
}

/// `v_phi(sigma)` for `phi = phi_d`.
pub fn weight_exponent(graph: &CoxeterGraph, sigma: Simplex, d: u32) -> Result<u32, Error> {
    Ok(require(graph, sigma)?.iter().map(|c| c.ty.weight_exponent(d)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn types(g: &CoxeterGraph, vs: &[usize]) -> Option<Vec<FiniteType>> {
        classify(g, Simplex::from_vertices(vs.iter().copied()))
            .map(|cs| cs.into_iter().map(|c| c.ty).collect())
    }

    #[test]
    fn induced_paths_in_a() {
        // A_5 printed 1..5; {2,3,5} is internal {1,2,4}
        let g = CoxeterGraph::a(5).unwrap();
        assert_eq!(types(&g, &[1, 2, 4]), Some(vec![FiniteType::A(2), FiniteType::A(1)]));
        assert_eq!(types(&g, &[]), Some(vec![]));
    }

    #[test]
    fn affine_ends_and_cycles() {
        let tc = CoxeterGraph::tilde_c(3).unwrap();
        assert_eq!(types(&tc, &[0, 1]), Some(vec![FiniteType::B(2)]));
        assert_eq!(types(&tc, &[1, 2, 3]), Some(vec![FiniteType::B(3)]));
        assert_eq!(types(&tc, &[0, 1, 2, 3]), None);
        let ta = CoxeterGraph::tilde_a(2).unwrap();
        assert_eq!(types(&ta, &[0, 1, 2]), None);
        assert_eq!(types(&ta, &[0, 2]), Some(vec![FiniteType::A(2)]));
    }

    #[test]
    fn exceptional_diagrams() {
        // E8: path 0-1-2-3-4-5-6 with 7 attached to 2 (arms 2, 4, 1)
        let mut g = CoxeterGraph::discrete(8).unwrap();
        for i in 1..7 {
            g.set_label(i - 1, i, Label::Finite(3)).unwrap();
        }
        g.set_label(2, 7, Label::Finite(3)).unwrap();
        assert_eq!(types(&g, &[0, 1, 2, 3, 4, 5, 6, 7]), Some(vec![FiniteType::E8]));
        assert_eq!(types(&g, &[0, 1, 2, 3, 4, 5, 7]), Some(vec![FiniteType::E7]));
        assert_eq!(types(&g, &[0, 1, 2, 3, 4, 7]), Some(vec![FiniteType::E6]));
        assert_eq!(types(&g, &[1, 2, 3, 7]), Some(vec![FiniteType::D(4)]));
        let mut f4 = CoxeterGraph::a(4).unwrap();
        f4.set_label(1, 2, Label::Finite(4)).unwrap();
        assert_eq!(types(&f4, &[0, 1, 2, 3]), Some(vec![FiniteType::F4]));
        let mut h = CoxeterGraph::a(4).unwrap();
        h.set_label(0, 1, Label::Finite(5)).unwrap();
        assert_eq!(types(&h, &[0, 1, 2, 3]), Some(vec![FiniteType::H4]));
        assert_eq!(types(&h, &[0, 1, 2]), Some(vec![FiniteType::H3]));
        assert_eq!(types(&h, &[0, 1]), Some(vec![FiniteType::I2(5)]));
    }

    #[test]
    fn poincare_of_small_types() {
        let a3 = CoxeterGraph::a(3).unwrap();
        let p = poincare_polynomial(&a3, Simplex::full(3)).unwrap();
        assert_eq!(p, &(&q_integer(2) * &q_integer(3)) * &q_integer(4));
        assert!(poincare_polynomial(&a3, Simplex::EMPTY).unwrap().is_one());
        let ta = CoxeterGraph::tilde_a(2).unwrap();
        assert!(matches!(poincare_polynomial(&ta, Simplex::full(3)), Err(Error::NotSpherical(_))));
    }

    #[test]
    fn weight_exponent_examples() {
        // {2,3,5,6,7,9} in A_9 printed 1..9
        let a9 = CoxeterGraph::a(9).unwrap();
        let s = Simplex::from_vertices([1, 2, 4, 5, 6, 8]);
        assert_eq!(weight_exponent(&a9, s, 3).unwrap(), 2);
        let b4 = CoxeterGraph::b(4).unwrap();
        assert_eq!(weight_exponent(&b4, Simplex::full(4), 4).unwrap(), 2);
        assert_eq!(weight_exponent(&b4, Simplex::full(4), 11).unwrap(), 0);
    }
}
