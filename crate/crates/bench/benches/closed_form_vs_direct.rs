use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use harmonica::{direct_eval, HarmonicTable, Params};
use harmonica_bench::{real_table, subjects};
use std::hint::black_box;

const BITS: u32 = 256;

fn fixed_point(c: &mut Criterion) {
    let entries = subjects();
    for n in [1_000u64, 10_000, 100_000] {
        let table = real_table(&entries, n, BITS).unwrap();
        for e in &entries {
            let mut group = c.benchmark_group(format!("real/{}", e.id));
            group.sample_size(10);
            let spec = e.spec(n, Params::NONE);
            group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
                b.iter(|| e.evaluate::<harmonica::Real>(black_box(n), Params::NONE, &table).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("direct", n), &spec, |b, spec| {
                b.iter(|| direct_eval(black_box(spec), &table).unwrap())
            });
            group.finish();
        }
    }
}

fn exact(c: &mut Criterion) {
    let entries = subjects();
    let table = HarmonicTable::build(420, 4).unwrap();
    for e in &entries {
        let mut group = c.benchmark_group(format!("exact/{}", e.id));
        group.sample_size(10);
        for n in [100u64, 400] {
            let spec = e.spec(n, Params::NONE);
            group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
                b.iter(|| e.evaluate::<harmonica::Rational>(black_box(n), Params::NONE, &table).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("direct", n), &spec, |b, spec| {
                b.iter(|| direct_eval(black_box(spec), &table).unwrap())
            });
        }
        group.finish();
    }
}

criterion_group!(benches, fixed_point, exact);
criterion_main!(benches);
