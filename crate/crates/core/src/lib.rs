//! Unit-distance dimension and dimension-criticality of finite graphs.
//!
//! Exact answers come from closed-form results for complete multipartite
//! graphs and the joins `K_n + C_m`; everything else gets certified bounds:
//! combinatorial lower bounds and upper bounds backed by a verified
//! embedding found through multi-start least squares.

pub mod error;
pub mod geometry;
pub mod graph;
pub mod multipartite;
pub mod reproduce;
pub mod search;

pub use error::{Error, Result};
