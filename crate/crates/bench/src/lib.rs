//! Criterion benchmarks for `apery-core`; see `benches/`.
