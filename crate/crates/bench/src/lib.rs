//! Criterion benchmarks for `symprod-core`; see `benches/`.
