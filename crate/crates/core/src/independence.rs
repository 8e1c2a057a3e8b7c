//! `r`-independence complexes: vertex sets of a graph whose induced
//! components have at most `r` vertices.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::catalog::{catalog_provider, matching_a_independence};
use crate::complexes::IntChainComplex;
use crate::coxeter::{Family, Simplex, SphericalComplex};
use crate::morse::{homology_artin_with, morse_complex_with};
use crate::{Error, Exec, Result};

/// An undirected graph on `0..n` without loops or multi-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adjacency: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > 63 {
            return Err(Error::BadParams(format!("{n} vertices (at most 63)")));
        }
        Ok(SimpleGraph { n, adjacency: vec![0; n] })
    }

    /// The path `A_n`.
    pub fn path(n: usize) -> Result<Self> {
        let mut g = Self::new(n)?;
        for i in 1..n {
            g.add_edge(i - 1, i)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j || i >= self.n || j >= self.n {
            return Err(Error::GraphFormat(format!("bad edge ({i}, {j}) on {} vertices", self.n)));
        }
        self.adjacency[i] |= 1 << j;
        self.adjacency[j] |= 1 << i;
        Ok(())
    }

    /// Reads the Coxeter graph JSON format; every listed pair is an edge and
    /// the labels are ignored.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: usize,
            edges: Vec<(usize, usize, serde_json::Value)>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::GraphFormat(e.to_string()))?;
        let mut g = Self::new(raw.vertices)?;
        for (i, j, _) in raw.edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    /// Size of the largest component of the induced subgraph on `s`.
    pub fn largest_component(&self, s: Simplex) -> usize {
        let mut left = s.0;
        let mut best = 0;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = Simplex(comp)
                    .vertices()
                    .fold(comp, |acc, v| acc | (self.adjacency[v] & s.0));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            best = best.max(comp.count_ones() as usize);
            left &= !comp;
        }
        best
    }
}

/// `Ind_r(G)`. Only non-empty simplices are stored; dimension is `|sigma| - 1`.
#[derive(Clone, Debug)]
pub struct IndComplex {
    pub n_vertices: usize,
    pub r: usize,
    pub simplices: Vec<Simplex>,
}

impl IndComplex {
    pub fn contains(&self, s: Simplex) -> bool {
        self.simplices.binary_search(&s).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.simplices.iter().map(|s| s.len() as i64 - 1).max().unwrap_or(-1)
    }
}

pub fn ind_complex(g: &SimpleGraph, r: usize) -> IndComplex {
    let simplices = if r == 0 {
        Vec::new()
    } else {
        (1..1u64 << g.n).map(Simplex).filter(|&s| g.largest_component(s) <= r).collect()
    };
    IndComplex { n_vertices: g.n, r, simplices }
}

/// Reduced Betti numbers over `Q`, keyed by dimension; zeros are omitted.
/// The empty complex has `b̃_{-1} = 1`.
pub fn reduced_betti(c: &IndComplex) -> BTreeMap<i64, usize> {
    // the augmented complex is the chain complex on the cells plus the empty
    // simplex, graded by cardinality
    let top = (c.dim() + 1) as usize;
    let chain = IntChainComplex::from_cells(c.simplices.iter().copied().chain([Simplex::EMPTY]), top);
    chain
        .betti()
        .into_iter()
        .enumerate()
        .filter(|&(_, b)| b > 0)
        .map(|(k, b)| (k as i64 - 1, b))
        .collect()
}

/// Both sides of the braid-group correspondence for one `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidCorrespondence {
    pub n: usize,
    pub d: usize,
    /// `m -> b̃_{m-d+1}(Ind_{d-2}(A_{n-d}))`, nonzero entries only.
    pub independence: BTreeMap<usize, usize>,
    /// `m -> ` multiplicity of `R/(phi_d)` in `H_m(Br_{n+1}; R)`, nonzero only.
    pub braid: BTreeMap<usize, usize>,
}

impl BraidCorrespondence {
    pub fn holds(&self) -> bool {
        self.independence == self.braid
    }
}

/// Compares `b̃_{m-d+1}(Ind_{d-2}(A_{n-d}))` with the `phi_d`-torsion of
/// `H_m(Br_{n+1}; R)` for every `m`. `A_{-1}` is read as the graph with no
/// vertices, like `A_0`; for `n < d - 1` the independence side is zero.
pub fn braid_correspondence(n: usize, d: usize, exec: Exec) -> Result<BraidCorrespondence> {
    if n == 0 || d < 2 {
        return Err(Error::BadParams(format!("n = {n}, d = {d}")));
    }
    let mut independence = BTreeMap::new();
    if n + 1 >= d {
        let ind = ind_complex(&SimpleGraph::path(n.saturating_sub(d))?, d - 2);
        for (deg, b) in reduced_betti(&ind) {
            let m = deg + d as i64 - 1;
            if m >= 0 {
                independence.insert(m as usize, b);
            }
        }
    }
    let k = SphericalComplex::new(&Family::A.graph(n)?)?;
    let provider = catalog_provider(Family::A, n);
    let table = homology_artin_with(&k, &provider, exec, Some(d as u32))?;
    let braid = (0..table.degrees.len())
        .map(|m| (m, table.phi_multiplicity(m, d as u32)))
        .filter(|&(_, b)| b > 0)
        .collect();
    Ok(BraidCorrespondence { n, d, independence, braid })
}

pub fn check_braid_correspondence(n: usize, d: usize) -> Result<bool> {
    Ok(braid_correspondence(n, d, Exec::default())?.holds())
}

/// Betti numbers of the Morse complex of the independence matching,
/// re-indexed as reduced homology of `Ind_{d-2}(A_{n-d})`: a critical cell
/// `tau + {n-d+2..n}` sits in dimension `|tau| - 1`.
pub fn independence_morse_betti(n: usize, d: usize) -> Result<BTreeMap<i64, usize>> {
    let k = SphericalComplex::new(&Family::A.graph(n)?)?;
    let m = matching_a_independence(n, d)?;
    let mc = morse_complex_with(&k, &m, d as u32, Exec::Sequential)?;
    Ok(mc
        .betti()
        .into_iter()
        .enumerate()
        .filter(|&(_, b)| b > 0)
        .map(|(c, b)| (c as i64 - d as i64, b))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complexes() {
        let ind = ind_complex(&SimpleGraph::path(3).unwrap(), 1);
        let want: Vec<Simplex> = [vec![0], vec![1], vec![2], vec![0, 2]]
            .into_iter()
            .map(Simplex::from_vertices)
            .collect();
        assert_eq!(ind.simplices, want);
        assert!(ind_complex(&SimpleGraph::path(5).unwrap(), 0).is_empty());
        let fig = ind_complex(&SimpleGraph::path(9).unwrap(), 3);
        assert!(fig.contains(Simplex::from_vertices([1, 2, 4, 5, 6, 8])));
        assert!(!fig.contains(Simplex::from_vertices([1, 2, 3, 4])));
    }

    #[test]
    fn reduced_betti_examples() {
        let b = |n, r| reduced_betti(&ind_complex(&SimpleGraph::path(n).unwrap(), r));
        assert_eq!(b(3, 1), BTreeMap::from([(0, 1)]));
        assert!(b(4, 1).is_empty());
        assert_eq!(b(0, 1), BTreeMap::from([(-1, 1)]));
        assert_eq!(b(5, 0), BTreeMap::from([(-1, 1)]));
    }

    #[test]
    fn json_graph_ignores_labels() {
        let g = SimpleGraph::from_json(r#"{"vertices":3,"edges":[[0,1,4],[1,2,"inf"]]}"#).unwrap();
        assert_eq!(g, SimpleGraph::path(3).unwrap());
        assert!(SimpleGraph::from_json(r#"{"vertices":2,"edges":[[0,0,3]]}"#).is_err());
    }

    #[test]
    fn correspondence_small() {
        let c = braid_correspondence(3, 3, Exec::Sequential).unwrap();
        assert_eq!(c.independence, BTreeMap::from([(1, 1)]));
        assert!(c.holds());
        let c = braid_correspondence(5, 7, Exec::Sequential).unwrap();
        assert!(c.independence.is_empty() && c.braid.is_empty());
    }
}
