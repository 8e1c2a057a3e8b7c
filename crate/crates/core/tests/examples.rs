//! Worked examples: small instances with hand-checked answers.

use std::collections::BTreeMap;

use artin_morse::catalog::{critical_b, critical_tilde_a, matching_b, matching_tilde_a, matching_tilde_c, FamilySpec};
use artin_morse::complexes::{build_c, filtration_subcomplex};
use artin_morse::coxeter::{weight_exponent, CoxeterGraph, Family, Simplex, SphericalComplex};
use artin_morse::independence::{ind_complex, independence_morse_betti, reduced_betti, SimpleGraph};
use artin_morse::morse::{alternating_paths, morse_complex, morse_incidence, path_weight};
use artin_morse::oracle::homology_direct;

fn bits(s: &str) -> Simplex {
    Simplex::from_bitstring(s).unwrap()
}

fn cell(cells: &[artin_morse::catalog::CriticalCell], name: &str) -> Simplex {
    cells.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no cell {name}")).simplex
}

#[test]
fn weight_exponents_by_components() {
    // A_9 with components of sizes 2, 3, 1 (vertices 1-based in the bitstring)
    let a9 = CoxeterGraph::a(9).unwrap();
    assert_eq!(weight_exponent(&a9, bits("011011101"), 3).unwrap(), 2);
    let b4 = CoxeterGraph::b(4).unwrap();
    assert_eq!(weight_exponent(&b4, Simplex::full(4), 4).unwrap(), 2);
}

#[test]
fn zero_filtration_level_is_the_independence_complex() {
    let k = SphericalComplex::new(&CoxeterGraph::a(5).unwrap()).unwrap();
    let level0 = filtration_subcomplex(&k, 3, 0);
    let ind = ind_complex(&SimpleGraph::path(5).unwrap(), 1);
    let mut want: Vec<Simplex> = ind.simplices.clone();
    want.push(Simplex::EMPTY);
    want.sort();
    let mut got = level0;
    got.sort();
    assert_eq!(got, want);
}

#[test]
fn single_alternating_path_in_b10() {
    let k = SphericalComplex::new(&CoxeterGraph::b(10).unwrap()).unwrap();
    let m = matching_b(10, 4).unwrap();
    let cells = critical_b(10, 4).unwrap();
    let (from, to) = (cell(&cells, "sigma'_2"), cell(&cells, "sigma_0"));
    assert_eq!(from, bits("1111010101"));
    assert_eq!(to, bits("0101010111"));
    let paths = alternating_paths(&k, &m, from, to).unwrap();
    assert_eq!(paths.len(), 1);
    // three matched pairs between the endpoints
    assert_eq!(paths[0].len(), 8);
    assert_eq!(morse_incidence(&k, &m, from, to).unwrap(), path_weight(&paths[0]));
}

#[test]
fn cancelling_paths_in_tilde_a() {
    // n = 7, d = 3: k = 2, r = 1
    let k = SphericalComplex::new(&CoxeterGraph::tilde_a(7).unwrap()).unwrap();
    let m = matching_tilde_a(7, 3).unwrap();
    let cells = critical_tilde_a(7, 3).unwrap();
    let (from, to) = (cell(&cells, "tau'_1"), cell(&cells, "tau_0"));
    assert_eq!(from.len(), to.len() + 1);
    let paths = alternating_paths(&k, &m, from, to).unwrap();
    assert_eq!(paths.len(), 2);
    assert_eq!(paths.iter().map(|p| path_weight(p)).sum::<i64>(), 0);
    assert_eq!(morse_incidence(&k, &m, from, to).unwrap(), 0);
}

#[test]
fn b6_incidence_block_has_rank_one() {
    let k = SphericalComplex::new(&CoxeterGraph::b(6).unwrap()).unwrap();
    let mc = morse_complex(&k, &matching_b(6, 4).unwrap(), 4).unwrap();
    // k = 3: the two cells in degree 5 against the two in degree 4
    assert_eq!(mc.delta_rank(5), 1);
    assert_eq!(mc.delta_rank(4), 1);
    assert_eq!(mc.delta_rank(6), 1);
}

#[test]
fn perfect_matchings() {
    for (family, n, d) in [(Family::A, 4, 3), (Family::B, 5, 4), (Family::B, 4, 3)] {
        let spec = FamilySpec::new(family, n, d).unwrap();
        let mc = morse_complex(&spec.complex().unwrap(), &spec.matching().unwrap(), d as u32).unwrap();
        let positive = mc.critical().filter(|c| c.1 > 0).count();
        assert_eq!(positive, 0, "{family:?} n={n} d={d}");
    }
}

#[test]
fn tilde_c_odd_d_has_one_critical_cell() {
    for (n, d) in [(3, 3), (4, 5), (5, 3)] {
        let k = SphericalComplex::new(&CoxeterGraph::tilde_c(n).unwrap()).unwrap();
        let mc = morse_complex(&k, &matching_tilde_c(n, d).unwrap(), d as u32).unwrap();
        let crit: Vec<_> = mc.critical().collect();
        assert_eq!(crit, vec![(Simplex::full(n), (n / d) as u32)]);
    }
}

#[test]
fn independence_matching_has_no_paths_between_criticals() {
    for d in 2..=5 {
        for n in d..=10 {
            let want = reduced_betti(&ind_complex(&SimpleGraph::path(n - d).unwrap(), d - 2));
            assert_eq!(independence_morse_betti(n, d).unwrap(), want, "n={n} d={d}");
        }
    }
}

#[test]
fn direct_homology_of_small_cases() {
    let h = homology_direct(&build_c(&CoxeterGraph::a(1).unwrap()).unwrap()).unwrap();
    assert_eq!(h.multiplicity(0, 2, 1), 1);
    assert_eq!(h.torsion().count(), 1);

    // tC_2, d = 4: k = 1, one copy in degree 1 and a free top
    let h = homology_direct(&build_c(&CoxeterGraph::tilde_c(2).unwrap()).unwrap()).unwrap();
    assert_eq!(h.phi_multiplicity(1, 4), 1);
    assert_eq!(h.free_rank(2), 1);

    let h = homology_direct(&build_c(&CoxeterGraph::b(4).unwrap()).unwrap()).unwrap();
    let phi4: BTreeMap<usize, usize> = (0..=4).map(|m| (m, h.phi_multiplicity(m, 4))).filter(|x| x.1 > 0).collect();
    assert_eq!(phi4, BTreeMap::from([(2, 1), (3, 1)]));
}
