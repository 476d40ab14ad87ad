use criterion::{criterion_group, criterion_main};

criterion_group!(benches, nonstoch_bench::information);
criterion_main!(benches);
