//! Criterion benchmarks for the enumeration and arithmetic kernels live in `benches/`.
