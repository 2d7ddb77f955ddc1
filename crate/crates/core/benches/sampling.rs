use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nilcommute::oracle::{sampled_max_nil, shape_set, ValueMode};
use nilcommute::path_cover::verify_gansner_saks;
use nilcommute::{AcyclicDigraph, Execution, Partition, Prime};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn census(c: &mut Criterion) {
    let p = Prime::default();
    let mut group = c.benchmark_group("shape_set");
    group.sample_size(10);
    for shape in ["5,3", "6,4", "4,3,2,2,1"] {
        let mu: Partition = shape.parse().unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, shape), &mu, |b, mu| {
                b.iter(|| shape_set(mu, ValueMode::Random, 2000, p, 0, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn max_nil(c: &mut Criterion) {
    let p = Prime::default();
    let mu: Partition = "4,3,3,2,1".parse().unwrap();
    let mut group = c.benchmark_group("sampled_max_nil");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| sampled_max_nil(black_box(&mu), 1000, p, 1, exec))
        });
    }
    group.finish();
}

fn gansner_saks(c: &mut Criterion) {
    let p = Prime::default();
    let n = 12;
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |v| (u * 7 + v * 3) % 4 == 0)
            .map(move |v| (u, v))
    });
    let g = AcyclicDigraph::new(n, edges).unwrap();
    let mut group = c.benchmark_group("verify_gansner_saks");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| verify_gansner_saks(black_box(&g), p, 500, 2, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, census, max_nil, gansner_saks);
criterion_main!(benches);
