//! Sequential against rayon-parallel evaluation on the three grid-shaped
//! workloads: per-d homology, catalog verification, and Smith forms per degree.

use std::hint::black_box;

use artin_morse::catalog::{catalog_provider, check_spec, FamilySpec};
use artin_morse::complexes::build_c;
use artin_morse::coxeter::{CoxeterGraph, Family, SphericalComplex};
use artin_morse::morse::homology_artin_with;
use artin_morse::oracle::homology_direct_with;
use artin_morse::Exec;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn homology_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology_artin");
    group.sample_size(10);
    for (family, n) in [(Family::A, 10), (Family::TildeA, 9), (Family::TildeC, 9)] {
        let k = SphericalComplex::new(&family.graph(n).unwrap()).unwrap();
        let provider = catalog_provider(family, n);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("{family}_{n}")), &k, |b, k| {
                b.iter(|| black_box(homology_artin_with(k, &provider, exec, None).unwrap()))
            });
        }
    }
    group.finish();
}

fn catalog_sweep(c: &mut Criterion) {
    let specs: Vec<FamilySpec> = Family::ALL
        .into_iter()
        .flat_map(|f| (f.min_n()..=7).flat_map(move |n| (2..=2 * n + 2).map(move |d| FamilySpec::new(f, n, d).unwrap())))
        .collect();
    let mut group = c.benchmark_group("catalog_grid");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                let reports = exec.map(specs.clone(), |s| check_spec(&s, Exec::Sequential).unwrap().0.passed());
                assert!(reports.into_iter().all(|ok| ok));
            })
        });
    }
    group.finish();
}

fn oracle_degrees(c: &mut Criterion) {
    let complex = build_c(&CoxeterGraph::b(5).unwrap()).unwrap();
    let mut group = c.benchmark_group("homology_direct_b5");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| black_box(homology_direct_with(&complex, exec).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, homology_sweep, catalog_sweep, oracle_degrees);
criterion_main!(benches);
