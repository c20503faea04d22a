//! Skew line configurations in P³ and their groupoid groups in PGL₂.
//!
//! A line skew to `L₀ = {(v, 0)}` and `L∞ = {(0, v)}` is the graph
//! `{(v, M v)}` of an invertible 2×2 matrix `M`. The group generated by the
//! projections between lines of a configuration is a subgroup of `PGL₂(K)`;
//! this crate computes it exactly, classifies it, and enumerates point orbits.

pub mod exactfield;
pub mod linalg2;
pub mod config;
pub mod groupoid;
pub mod orbits;
