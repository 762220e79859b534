//! Criterion benchmarks for the p5lab kernels; see `benches/kernels.rs`.
