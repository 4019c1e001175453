//! Benchmarks the claim suite's case fan-out: rayon against the
//! sequential fallback, on a mid-size slice of the default corpus and on
//! a single heavyweight case.
//!
//! Build with `--no-default-features` to measure the build without the
//! `parallel` feature compiled in at all (the `parallel` group then
//! degenerates to a second sequential run).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use spectral_core::caps::Caps;
use spectral_core::ring::RingSpec;
use spectral_core::space::YSelector;
use spectral_core::suite::{run_suite, Case, CheckConfig};

fn slice_corpus() -> Vec<Case> {
    let mut cases: Vec<Case> = (24..=36)
        .map(|n| Case { ring: RingSpec::Modular { n }, selector: YSelector::Spec })
        .collect();
    cases.push(Case {
        ring: RingSpec::Product(vec![RingSpec::Modular { n: 6 }, RingSpec::Modular { n: 2 }]),
        selector: YSelector::Spec,
    });
    cases.push(Case {
        ring: RingSpec::Product(vec![RingSpec::Modular { n: 4 }, RingSpec::Modular { n: 9 }]),
        selector: YSelector::Spec,
    });
    cases
}

fn bench_suite(c: &mut Criterion) {
    let config = CheckConfig::new(Caps::default());
    let corpus = slice_corpus();
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_with_input(BenchmarkId::new("sequential", corpus.len()), &corpus, |b, corpus| {
        b.iter(|| {
            let report = run_suite(corpus, &config, false);
            assert_eq!(report.summary.fail, 0);
            report.summary.pass
        })
    });
    group.bench_with_input(BenchmarkId::new("parallel", corpus.len()), &corpus, |b, corpus| {
        b.iter(|| {
            let report = run_suite(corpus, &config, true);
            assert_eq!(report.summary.fail, 0);
            report.summary.pass
        })
    });
    group.finish();

    let single = vec![Case {
        ring: RingSpec::Product(vec![RingSpec::Modular { n: 4 }, RingSpec::Modular { n: 9 }]),
        selector: YSelector::Spec,
    }];
    let mut group = c.benchmark_group("single_case");
    group.sample_size(10);
    group.bench_function("z4xz9_all_claims", |b| {
        b.iter(|| {
            let report = run_suite(&single, &config, false);
            report.summary.pass
        })
    });
    group.finish();
}

criterion_group!(benches, bench_suite);
criterion_main!(benches);
