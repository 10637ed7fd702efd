//! Benchmarks for `ghost5`; run with `cargo bench -p ghost5-bench`.
