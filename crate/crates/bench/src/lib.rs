//! Benchmark-only crate; see benches/normal_forms.rs.
