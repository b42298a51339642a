//! Criterion benchmarks for the semigroup-degree machinery; see
//! `benches/suites.rs`. The package exports nothing.
