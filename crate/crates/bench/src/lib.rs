//! Criterion benchmarks for the closed-form tables and the brute-force oracle.
//!
//! Run with `cargo bench -p zassenhaus-bench`.
