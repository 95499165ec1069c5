//! Criterion benchmarks for the cubicmap pipeline; see `benches/pipeline.rs`.
