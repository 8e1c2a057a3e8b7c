//! Coxeter graphs, simplices of the spherical complex, and their weights.

mod brute;
mod classify;
mod graph;
mod simplex;

use std::collections::HashMap;

pub use brute::{brute_force_poincare, BruteType, MAX_GROUP_ORDER};
pub use classify::{
    classify, components, poincare_polynomial, weight_exponent, weight_profile, Component,
    FiniteType, FiniteTypeLabel,
};
pub use graph::{CoxeterGraph, Family, Label};
pub use simplex::Simplex;

use crate::Error;

/// Cap on the vertex count for `2^n` enumeration: `ARTIN_MORSE_MAX_N` if set
/// and parseable, else [`crate::DEFAULT_MAX_N`].
pub fn enumeration_cap() -> usize {
    std::env::var("ARTIN_MORSE_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(crate::DEFAULT_MAX_N)
}

/// Every simplex (the empty one included) with finite parabolic subgroup,
/// ordered by cardinality and then by bit value.
pub fn spherical_complex(graph: &CoxeterGraph) -> Result<Vec<Simplex>, Error> {
    spherical_complex_capped(graph, enumeration_cap())
}

pub fn spherical_complex_capped(graph: &CoxeterGraph, cap: usize) -> Result<Vec<Simplex>, Error> {
    let n = graph.n_vertices();
    if n > cap {
        return Err(Error::TooLarge(format!(
            "{n} vertices exceeds the enumeration cap {cap} (ARTIN_MORSE_MAX_N)"
        )));
    }
    let mut cells: Vec<Simplex> =
        (0..1u64 << n).map(Simplex).filter(|&s| classify(graph, s).is_some()).collect();
    cells.sort_by_key(|s| (s.len(), s.0));
    Ok(cells)
}

/// The spherical complex together with the finite types of each cell.
#[derive(Clone, Debug)]
pub struct SphericalComplex {
    pub graph: CoxeterGraph,
    cells: Vec<Simplex>,
    types: Vec<Vec<FiniteType>>,
    index: HashMap<Simplex, usize>,
}

impl SphericalComplex {
    pub fn new(graph: &CoxeterGraph) -> Result<Self, Error> {
        Self::with_cap(graph, enumeration_cap())
    }

    pub fn with_cap(graph: &CoxeterGraph, cap: usize) -> Result<Self, Error> {
        let cells = spherical_complex_capped(graph, cap)?;
        let types = cells
            .iter()
            .map(|&s| classify(graph, s).unwrap().into_iter().map(|c| c.ty).collect())
            .collect();
        let index = cells.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(SphericalComplex { graph: graph.clone(), cells, types, index })
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    /// Cells in basis order: by cardinality, then bit value.
    pub fn cells(&self) -> &[Simplex] {
        &self.cells
    }

    pub fn contains(&self, s: Simplex) -> bool {
        self.index.contains_key(&s)
    }

    pub fn index_of(&self, s: Simplex) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn types(&self, s: Simplex) -> Option<&[FiniteType]> {
        self.index_of(s).map(|i| self.types[i].as_slice())
    }

    /// `v_phi(s)` for `phi = phi_d`; 0 for simplices outside the complex.
    pub fn exponent(&self, s: Simplex, d: u32) -> u32 {
        self.types(s).map_or(0, |ts| ts.iter().map(|t| t.weight_exponent(d)).sum())
    }

    /// Largest degree of any component type: every `d` with a nonzero weight
    /// exponent lies in `2..=d_max`.
    pub fn d_max(&self) -> u32 {
        self.types
            .iter()
            .flatten()
            .flat_map(|t| t.degrees())
            .max()
            .unwrap_or(1)
    }

    /// Highest cardinality of a cell.
    pub fn dim(&self) -> usize {
        self.cells.last().map_or(0, |s| s.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spherical_counts() {
        assert_eq!(spherical_complex(&CoxeterGraph::a(2).unwrap()).unwrap().len(), 4);
        assert_eq!(spherical_complex(&CoxeterGraph::tilde_a(2).unwrap()).unwrap().len(), 7);
        assert_eq!(spherical_complex(&CoxeterGraph::tilde_c(2).unwrap()).unwrap().len(), 7);
    }

    #[test]
    fn cap_is_enforced() {
        let g = CoxeterGraph::a(5).unwrap();
        assert!(matches!(spherical_complex_capped(&g, 4), Err(Error::TooLarge(_))));
    }

    #[test]
    fn d_max_of_families() {
        assert_eq!(SphericalComplex::new(&CoxeterGraph::a(4).unwrap()).unwrap().d_max(), 5);
        assert_eq!(SphericalComplex::new(&CoxeterGraph::b(3).unwrap()).unwrap().d_max(), 6);
        assert_eq!(SphericalComplex::new(&CoxeterGraph::tilde_c(3).unwrap()).unwrap().d_max(), 6);
        assert_eq!(SphericalComplex::new(&CoxeterGraph::tilde_a(3).unwrap()).unwrap().d_max(), 4);
    }
}
