//! Weighted discrete Morse theory: matchings, alternating paths, Morse
//! complexes, precise matchings and the resulting homology.

mod complex;
mod homology;
mod matching;
mod paths;

pub use complex::{
    collapse_check, component_complex, components, morse_complex, morse_complex_unchecked,
    morse_complex_with, verify_precise, ComponentDecomposition, MorseComplex,
};
pub use homology::{
    homology_artin, homology_artin_with, homology_l_phi, DegreeHomology, HomologyTable,
    MatchingProvider, PhiHomology, TorsionSummand,
};
pub use matching::{
    check_matching, critical_cells, domain_cells, verify_acyclic, verify_weighted, Matching,
    PairMatching, Restricted,
};
pub use paths::{
    alternating_paths, morse_incidence, morse_incidence_by_paths, path_weight, Chain, Flow,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterGraph, Simplex, SphericalComplex};

    #[test]
    fn empty_matching_reproduces_c0() {
        let k = SphericalComplex::new(&CoxeterGraph::tilde_a(3).unwrap()).unwrap();
        let mc = morse_complex(&k, &PairMatching::new(), 0).unwrap();
        assert!(mc.boundary_squares_to_zero());
        let c0 = crate::complexes::c0_of(&k);
        assert_eq!(mc.betti(), c0.betti());
        // K is every proper subset of 4 vertices: a 2-sphere, seen in degree 3
        assert_eq!(c0.betti(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn truncated_matching_is_not_precise() {
        // nothing matched on A_3 at d = 2: the edge {0,1,2} (v = 2) -> {0,2} (v = 0)
        // skips a level
        let k = SphericalComplex::new(&CoxeterGraph::a(3).unwrap()).unwrap();
        let mc = morse_complex(&k, &PairMatching::new(), 2).unwrap();
        assert!(!verify_precise(&mc));
        assert!(matches!(homology_l_phi(&mc), Err(crate::Error::NotPrecise(_))));
        assert_eq!(mc.incidence(Simplex::full(3), Simplex::from_vertices([0, 2])), -1);
    }

    #[test]
    fn empty_morse_complex_is_trivially_fine() {
        // {} ~ {0} is perfect on A_1 and weighted at d = 3 (all weights are units)
        let k = SphericalComplex::new(&CoxeterGraph::a(1).unwrap()).unwrap();
        let m = PairMatching::from_pairs([(Simplex::EMPTY, Simplex::full(1))]);
        let mc = morse_complex(&k, &m, 3).unwrap();
        assert!(mc.is_empty());
        assert!(verify_precise(&mc));
        assert!(collapse_check(&mc));
        assert!(homology_l_phi(&mc).unwrap().is_zero());
    }
}
