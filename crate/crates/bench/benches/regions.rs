use criterion::{criterion_group, criterion_main};

criterion_group!(benches, nonstoch_bench::regions);
criterion_main!(benches);
