//! Parallel against sequential exhaustive checking on the larger corpus
//! algebras. Without the `parallel` feature both paths are sequential.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use snalab_core::algebra::suites::{derived_properties_suite, verify_sna};
use snalab_core::congruence::congruences_bruteforce;
use snalab_core::corpus;
use snalab_core::par;
use snalab_core::{CheckMode, SnaAlgebra};

fn algebra(name: &str) -> SnaAlgebra {
    corpus::snas()
        .into_iter()
        .find(|e| e.name == name)
        .expect("corpus algebra")
        .algebra
}

fn compare(c: &mut Criterion, group: &str, name: &str, run: impl Fn(&SnaAlgebra) + Copy) {
    let t = algebra(name);
    let mut g = c.benchmark_group(group);
    g.bench_with_input(BenchmarkId::new("parallel", name), &t, |b, t| {
        b.iter(|| run(black_box(t)))
    });
    g.bench_with_input(BenchmarkId::new("sequential", name), &t, |b, t| {
        b.iter(|| par::sequential(|| run(black_box(t))))
    });
    g.finish();
}

fn benches(c: &mut Criterion) {
    compare(c, "verify_sna", "K(grid)", |t| {
        black_box(verify_sna(t, CheckMode::FullReport));
    });
    compare(c, "derived_laws", "K(grid)", |t| {
        black_box(derived_properties_suite(t, CheckMode::FullReport).unwrap());
    });
    compare(c, "congruences_bruteforce", "K(S1)", |t| {
        black_box(congruences_bruteforce(t, 12).unwrap());
    });
}

criterion_group! {
    name = exhaustive;
    config = Criterion::default().sample_size(10);
    targets = benches
}
criterion_main!(exhaustive);
