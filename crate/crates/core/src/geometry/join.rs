use super::{embed_cycle_on_sphere, regular_simplex, Embedding};
use crate::error::{Error, Result};
use crate::graph::JoinSpec;

/// Radius `sqrt((n+1)/(2n))` on which the cycle vertices of `K_n + C_m`
/// must lie: unit distance from every vertex of the centred simplex.
pub fn join_cycle_radius(n: usize) -> f64 {
    ((n + 1) as f64 / (2 * n) as f64).sqrt()
}

fn require_clique(spec: &JoinSpec) -> Result<usize> {
    let n = spec.clique_size();
    if n < 2 {
        return Err(Error::Precondition(format!(
            "construction needs a clique of size >= 2, got {n}"
        )));
    }
    Ok(n)
}

/// `K_n + C_m` in R^(n+2): the simplex in the first `n - 1` coordinates,
/// the cycle on a 2-sphere of radius [`join_cycle_radius`] in the last three.
/// Vertex order matches [`crate::graph::build_join_clique_cycle`].
pub fn embed_join_clique_cycle(spec: &JoinSpec) -> Result<Embedding> {
    let n = require_clique(spec)?;
    let d = n + 2;
    let simplex = regular_simplex(n).lifted(d);
    let cycle = embed_cycle_on_sphere(spec.cycle_length(), join_cycle_radius(n))?;
    let mut points = simplex.points().to_vec();
    for p in cycle.points() {
        let mut q = vec![0.0; d];
        q[n - 1..].copy_from_slice(p);
        points.push(q);
    }
    Embedding::new(d, points)
}

/// `(K_n + C_m) - w_1 w_m` in R^(n+1): the path `w_1 … w_m` walks around a
/// circle of radius [`join_cycle_radius`] in steps of one unit chord. The
/// step angle is an irrational multiple of π, so the walk never revisits a
/// point.
pub fn embed_join_minus_edge(spec: &JoinSpec) -> Result<Embedding> {
    let n = require_clique(spec)?;
    let d = n + 1;
    let r = join_cycle_radius(n);
    let theta = 2.0 * (1.0 / (2.0 * r)).asin();
    let mut points = regular_simplex(n).lifted(d).points().to_vec();
    for k in 1..=spec.cycle_length() {
        let angle = k as f64 * theta;
        let mut q = vec![0.0; d];
        q[n - 1] = r * angle.cos();
        q[n] = r * angle.sin();
        points.push(q);
    }
    Embedding::new(d, points)
}
