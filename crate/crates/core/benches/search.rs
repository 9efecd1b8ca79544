use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rootdisk::bounds::Theorem;
use rootdisk::genpoly::{gen_ek_instance, gen_thm110_instance, GenSpec};
use rootdisk::oracle::{roots_many, RootConfig};
use rootdisk::search::{optimize_params, SearchConfig};
use rootdisk::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn search(c: &mut Criterion) {
    let mut spec = GenSpec::new(8, 3, 1.2, 0.0, 5);
    spec.m = Some(2);
    let p = gen_thm110_instance(&spec).expect("fixed seed generates");
    let mut g = c.benchmark_group("optimize_params");
    for (name, execution) in MODES {
        for theorem in [Theorem::Thm17, Theorem::Thm110] {
            let cfg = SearchConfig {
                execution,
                ..SearchConfig::default()
            };
            g.bench_with_input(BenchmarkId::new(name, theorem), &cfg, |b, cfg| {
                b.iter(|| optimize_params(black_box(&p), theorem, cfg).unwrap())
            });
        }
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let polys: Vec<_> = (0..256).map(|s| gen_ek_instance(4 + (s as usize % 12), s)).collect();
    let cfg = RootConfig::default();
    let mut g = c.benchmark_group("roots_many");
    for (name, execution) in MODES {
        g.bench_function(name, |b| b.iter(|| roots_many(black_box(&polys), &cfg, execution)));
    }
    g.finish();
}

criterion_group!(benches, search, oracle);
criterion_main!(benches);
