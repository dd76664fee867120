//! Benchmark-only crate; see `benches/completion.rs`.
