use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use packing_core::graph::named;
use packing_core::packing::{prove_uncolorable, PackingSpec, ProveOptions};
use packing_core::reducibility::{check_reducible, synthetic_corpus, CheckOptions, Engine};

/// Enumeration engine on one worker versus the whole pool. Without the
/// `parallel` feature both rows run sequentially.
fn workers(c: &mut Criterion) {
    let mut group = c.benchmark_group("faithful_workers");
    group.sample_size(10);
    for name in ["ring7_t3_extra", "ring8_t4"] {
        let cfg = synthetic_corpus().into_iter().find(|c| c.name == name).unwrap();
        for (label, workers) in [("sequential", Some(1)), ("parallel", None)] {
            let opts = CheckOptions { engine: Engine::Faithful, exhaustive_first: true, workers, ..Default::default() };
            group.bench_with_input(BenchmarkId::new(label, name), &opts, |b, opts| {
                b.iter(|| check_reducible(&cfg, opts).unwrap())
            });
        }
    }
    group.finish();
}

fn engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("engines");
    group.sample_size(10);
    let cfg = synthetic_corpus().into_iter().find(|c| c.name == "ring7_t3_extra").unwrap();
    for engine in [Engine::Faithful, Engine::Frontier] {
        let opts = CheckOptions { engine, exhaustive_first: true, ..Default::default() };
        group.bench_with_input(BenchmarkId::from_parameter(format!("{engine:?}")), &opts, |b, opts| {
            b.iter(|| check_reducible(&cfg, opts).unwrap())
        });
    }
    group.finish();
}

fn refutation(c: &mut Criterion) {
    let p = named::petersen();
    let spec = PackingSpec::one_and_twos(5);
    c.bench_function("petersen_refutation", |b| {
        b.iter(|| prove_uncolorable(&p, &spec, ProveOptions::default()).unwrap())
    });
}

criterion_group!(benches, workers, engines, refutation);
criterion_main!(benches);
