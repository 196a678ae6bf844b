//! Criterion benchmarks for `mystic-core`; see `benches/determinants.rs`.
