//! Benchmarks for the `hurwitz` crate live in `benches/`.
