//! Benchmark-only crate; see `benches/lattices.rs`.
