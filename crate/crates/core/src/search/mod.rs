//! Numerical embedding search, certified dimension estimates, criticality
//! tests and the small-graph hunters built on them.

mod critical;
mod descent;
mod embed;
mod estimate;
mod hunt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use critical::{
    prune_to_critical, test_criticality, CriticalityReport, EdgeOutcome, PruneReport, PruneStep,
    Verdict,
};
pub use embed::{find_embedding, restart_seed, THREADS_ENV};
pub use estimate::{
    certified_lower_bound, estimate_dimension, estimate_dimension_with_hint, recognize_join,
    DimensionEstimate, LowerProvenance, Status, UpperProvenance,
};
pub use hunt::{
    connected_graphs, hunt_edge_drop, hunt_vertex_drop, EdgeDropCandidate, EdgeDropReport,
    VertexDropCandidate, VertexDropReport, HUNT_VERTEX_LIMIT,
};

/// Budget and randomness for [`find_embedding`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    /// Largest accepted `|‖x_u − x_v‖ − 1|` over edges.
    pub tolerance: f64,
    pub seed: u64,
    /// Standard deviation of the initial coordinates.
    pub scale: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 50,
            max_iterations: 5000,
            tolerance: 1e-7,
            seed: 0,
            scale: 1.0,
        }
    }
}

impl SearchConfig {
    pub fn with_seed(seed: u64) -> Self {
        SearchConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 || self.max_iterations == 0 {
            return Err(Error::OutOfRange(
                "restarts and iterations must be positive".into(),
            ));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::OutOfRange(format!("tolerance {}", self.tolerance)));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::OutOfRange(format!("scale {}", self.scale)));
        }
        Ok(())
    }
}
