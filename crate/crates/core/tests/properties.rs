use artin_morse::catalog::FamilySpec;
use artin_morse::complexes::{build_c, build_c0, build_lphi, c0_of};
use artin_morse::coxeter::{poincare_polynomial, CoxeterGraph, Family, Label, Simplex, SphericalComplex};
use artin_morse::linalg::SparseMatrix;
use artin_morse::morse::morse_complex_with;
use artin_morse::oracle::{snf_int, snf_poly};
use artin_morse::poly::{cyclotomic, factor_cyclotomic, rational};
use artin_morse::{Exec, LaurentPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-4i64..=4, 0..=4)).prop_map(|(low, c)| LaurentPoly::from_ints(low, &c))
}

fn label() -> impl Strategy<Value = Label> {
    prop_oneof![
        4 => Just(Label::Finite(2)),
        4 => Just(Label::Finite(3)),
        2 => Just(Label::Finite(4)),
        1 => Just(Label::Finite(5)),
        1 => Just(Label::Finite(6)),
        1 => Just(Label::Infinite),
    ]
}

fn graph() -> impl Strategy<Value = CoxeterGraph> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(label(), n * (n - 1) / 2).prop_map(move |labels| {
            let mut g = CoxeterGraph::discrete(n).unwrap();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            for ((i, j), l) in pairs.zip(labels) {
                g.set_label(i, j, l).unwrap();
            }
            g
        })
    })
}

fn family_spec() -> impl Strategy<Value = FamilySpec> {
    (prop::sample::select(Family::ALL.to_vec()), 0usize..=5, 0usize..=12).prop_map(|(f, n, d)| {
        let n = f.min_n() + n;
        FamilySpec::new(f, n, 2 + d % (2 * n + 1)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_with_remainder(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (a, b) = (a.shift(-a.low_degree().min(0)), b.shift(-b.low_degree()));
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn cyclotomic_profiles_round_trip(es in prop::collection::vec(0u32..=2, 11), shift in -3i64..=3) {
        let mut p = LaurentPoly::monomial(rational(1), shift);
        for (i, &e) in es.iter().enumerate() {
            p = &p * &cyclotomic(i as u32 + 2).pow(e);
        }
        let prof = factor_cyclotomic(&p, None).unwrap();
        for (i, &e) in es.iter().enumerate() {
            prop_assert_eq!(prof.exponent(i as u32 + 2), e);
        }
        prop_assert_eq!(prof.to_poly(), p);
    }

    #[test]
    fn boundaries_square_to_zero(g in graph(), d in 2u32..=8) {
        prop_assert!(build_c0(&g).unwrap().boundary_squares_to_zero());
        prop_assert!(build_c(&g).unwrap().boundary_squares_to_zero());
        prop_assert!(build_lphi(&g, d).unwrap().cells.boundary_squares_to_zero());
    }

    #[test]
    fn exponents_match_factored_poincare_polynomials(g in graph(), d in 2u32..=12) {
        let k = SphericalComplex::new(&g).unwrap();
        for &s in k.cells() {
            let prof = factor_cyclotomic(&poincare_polynomial(&g, s).unwrap(), None).unwrap();
            prop_assert_eq!(k.exponent(s, d), prof.exponent(d));
        }
    }

    #[test]
    fn integer_smith_forms(m in (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)))
    {
        let s = snf_int(&m);
        prop_assert!(s.is_divisibility_chain());
        prop_assert_eq!(s.rank, SparseMatrix::from_dense(&m).rank());
        // the first invariant factor is the gcd of the entries
        let g = m.iter().flatten().fold(BigInt::from(0), |acc, &x| acc.gcd(&BigInt::from(x)));
        if s.rank > 0 {
            prop_assert_eq!(&s.diagonal[0], &g);
        }
        if m.len() == 2 && m[0].len() == 2 {
            let det = BigInt::from(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
            if s.rank == 2 {
                prop_assert_eq!(&s.diagonal[0] * &s.diagonal[1], det.abs());
            }
        }
    }

    #[test]
    fn polynomial_smith_forms(m in (1usize..=3, 1usize..=3)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(poly(), c), r)))
    {
        let s = snf_poly(&m);
        prop_assert!(s.is_divisibility_chain());
        prop_assert!(s.rank <= m.len().min(m[0].len()));
        if m.len() == 2 && m[0].len() == 2 {
            let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
            prop_assert_eq!(s.rank == 2, !det.is_zero());
            if s.rank == 2 {
                prop_assert_eq!((&s.diagonal[0] * &s.diagonal[1]).normalized(), det.normalized());
            }
        }
    }

    #[test]
    fn catalog_matchings_are_involutions(spec in family_spec()) {
        let k = spec.complex().unwrap();
        let m = spec.matching().unwrap();
        for &s in k.cells() {
            if !m.in_domain(s) {
                continue;
            }
            if let Some(p) = m.partner(s) {
                prop_assert_eq!((s.0 ^ p.0).count_ones(), 1);
                prop_assert!(k.contains(p) && m.in_domain(p));
                prop_assert_eq!(m.partner(p), Some(s));
                prop_assert_eq!(k.exponent(s, spec.d as u32), k.exponent(p, spec.d as u32));
            }
        }
    }
}

#[test]
fn morse_complexes_keep_rational_homology() {
    // the catalog matchings cover all of K, so the unweighted Morse complex
    // has the Betti numbers of C0
    for family in Family::ALL {
        for n in family.min_n()..=6 {
            let k = SphericalComplex::new(&family.graph(n).unwrap()).unwrap();
            let want = c0_of(&k).betti();
            for d in 2..=2 * n + 2 {
                let m = FamilySpec::new(family, n, d).unwrap().matching().unwrap();
                let mc = morse_complex_with(&k, &m, d as u32, Exec::Sequential).unwrap();
                assert!(mc.boundary_squares_to_zero(), "{family:?} n={n} d={d}");
                assert_eq!(mc.betti(), want, "{family:?} n={n} d={d}");
            }
        }
    }
}

#[test]
fn empty_and_full_simplices() {
    let k = SphericalComplex::new(&CoxeterGraph::tilde_a(3).unwrap()).unwrap();
    assert!(k.contains(Simplex::EMPTY));
    assert!(!k.contains(Simplex::full(4)));
    assert_eq!(k.dim(), 3);
}
