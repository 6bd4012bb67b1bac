use criterion::{criterion_group, criterion_main, Criterion};
use stencil_bench::weight_cases;

fn weights(c: &mut Criterion) {
    let mut g = c.benchmark_group("weights");
    for (label, scheme, spec) in weight_cases(&[10, 50, 200]) {
        g.bench_function(label, |b| b.iter(|| scheme.weights(std::hint::black_box(&spec)).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, weights);
criterion_main!(benches);
