//! Exhaustive sweeps over small connected graphs looking for large drops
//! in dimension after deleting one edge or one vertex.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{estimate_dimension, estimate_dimension_with_hint, DimensionEstimate, SearchConfig};
use crate::error::{Error, Result};
use crate::geometry::Embedding;
use crate::graph::{build_join_clique_cycle, canonical_form, CanonicalCode, Edge, Graph, JoinSpec};

/// Largest graphs the hunters enumerate.
pub const HUNT_VERTEX_LIMIT: usize = 7;

fn check_budget(max_vertices: usize) -> Result<()> {
    if max_vertices > HUNT_VERTEX_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "enumeration is limited to {HUNT_VERTEX_LIMIT} vertices, asked for {max_vertices}"
        )));
    }
    Ok(())
}

/// All connected graphs on `1..=max_vertices` vertices up to isomorphism,
/// canonically labelled, ordered by vertex count and then canonical code.
///
/// Every connected graph on `k + 1` vertices has a vertex whose removal
/// leaves it connected, so joining a new vertex to every non-empty subset of
/// every connected graph on `k` vertices reaches all of them.
pub fn connected_graphs(max_vertices: usize) -> Result<Vec<Graph>> {
    check_budget(max_vertices)?;
    let mut all = Vec::new();
    if max_vertices == 0 {
        return Ok(all);
    }
    let mut layer: BTreeSet<CanonicalCode> = BTreeSet::new();
    layer.insert(canonical_form(&Graph::empty(1)).0);
    for k in 1..=max_vertices {
        all.extend(layer.iter().map(|c| c.to_graph()));
        if k == max_vertices {
            break;
        }
        let mut next = BTreeSet::new();
        for code in &layer {
            let g = code.to_graph();
            for mask in 1u32..(1 << k) {
                let edges = g.edges().iter().copied().chain(
                    (0..k)
                        .filter(|v| mask >> v & 1 == 1)
                        .map(|v| Edge::new(v, k).expect("v < k")),
                );
                let h = Graph::new(k + 1, edges).expect("valid edges");
                next.insert(canonical_form(&h).0);
            }
        }
        layer = next;
    }
    Ok(all)
}

/// Estimates keyed by canonical code, stored in canonical labels.
struct Memo<'a> {
    cfg: &'a SearchConfig,
    table: HashMap<CanonicalCode, DimensionEstimate>,
}

impl<'a> Memo<'a> {
    fn new(cfg: &'a SearchConfig) -> Self {
        Memo {
            cfg,
            table: HashMap::new(),
        }
    }

    /// `hint` is a drawing of `g` in its own labels.
    fn estimate(&mut self, g: &Graph, hint: Option<&Embedding>) -> DimensionEstimate {
        let (code, perm) = canonical_form(g);
        if let Some(e) = self.table.get(&code) {
            return e.clone();
        }
        let canon = g.relabel(&perm).expect("permutation");
        let mut order = vec![0; perm.len()];
        for (old, &new) in perm.iter().enumerate() {
            order[new] = old;
        }
        let hint = hint.map(|h| h.reorder(&order));
        let e = estimate_dimension_with_hint(&canon, self.cfg, hint.as_ref());
        self.table.insert(code, e.clone());
        e
    }
}

/// Bounds before and after one deletion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DropBounds {
    pub before_lower: usize,
    pub before_upper: usize,
    pub after_lower: usize,
    pub after_upper: usize,
    /// The drop is at least this much.
    pub certified_drop: usize,
    /// The drop is at most this much.
    pub possible_drop: usize,
    /// The smaller graph has an isolated vertex.
    pub isolated_vertices: bool,
}

impl DropBounds {
    fn new(before: &DimensionEstimate, after: &DimensionEstimate, smaller: &Graph) -> Self {
        DropBounds {
            before_lower: before.lower,
            before_upper: before.upper,
            after_lower: after.lower,
            after_upper: after.upper,
            certified_drop: before.lower.saturating_sub(after.upper),
            possible_drop: before.upper.saturating_sub(after.lower),
            isolated_vertices: !smaller.isolated_vertices().is_empty(),
        }
    }

    fn undecided_at(&self, size: usize) -> bool {
        self.certified_drop < size && self.possible_drop >= size
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeDropCandidate {
    pub graph: Graph,
    pub edge: Edge,
    #[serde(flatten)]
    pub bounds: DropBounds,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeDropReport {
    pub max_vertices: usize,
    pub graphs: usize,
    pub deletions: usize,
    /// Deletions certified to lower the dimension by 2 or more.
    pub certified: Vec<EdgeDropCandidate>,
    /// Deletions where a drop of 2 or more is neither shown nor excluded.
    pub undecided: Vec<EdgeDropCandidate>,
    pub undecided_count: usize,
}

/// Looks for an edge whose deletion lowers the dimension by at least 2.
pub fn hunt_edge_drop(max_vertices: usize, cfg: &SearchConfig) -> Result<EdgeDropReport> {
    let graphs = connected_graphs(max_vertices)?;
    let mut memo = Memo::new(cfg);
    let (mut certified, mut undecided, mut deletions) = (Vec::new(), Vec::new(), 0);
    for g in &graphs {
        let before = memo.estimate(g, None);
        for &e in g.edges() {
            let h = g.delete_edge(e.lo(), e.hi())?;
            let after = memo.estimate(&h, before.embedding.as_ref());
            deletions += 1;
            let bounds = DropBounds::new(&before, &after, &h);
            let candidate = || EdgeDropCandidate {
                graph: g.clone(),
                edge: e,
                bounds: bounds.clone(),
            };
            if bounds.certified_drop >= 2 {
                certified.push(candidate());
            } else if bounds.undecided_at(2) {
                undecided.push(candidate());
            }
        }
    }
    Ok(EdgeDropReport {
        max_vertices,
        graphs: graphs.len(),
        deletions,
        certified,
        undecided_count: undecided.len(),
        undecided,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexDropCandidate {
    pub graph: Graph,
    pub vertex: usize,
    #[serde(flatten)]
    pub bounds: DropBounds,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexDropReport {
    pub max_vertices: usize,
    pub graphs: usize,
    pub deletions: usize,
    /// Deletions certified to lower the dimension by 2 or more.
    pub certified: Vec<VertexDropCandidate>,
    /// Certified drops of 3 or more.
    pub alarms: Vec<VertexDropCandidate>,
    /// Deletions where a drop of 3 or more is neither shown nor excluded.
    pub undecided: Vec<VertexDropCandidate>,
    pub undecided_count: usize,
    /// Known drop-2 examples outside the enumeration range.
    pub witnesses: Vec<VertexDropCandidate>,
}

fn without_point(emb: &Embedding, v: usize) -> Embedding {
    let keep: Vec<usize> = (0..emb.len()).filter(|&u| u != v).collect();
    emb.reorder(&keep)
}

/// Deleting a clique vertex of `K_2 + C_6` leaves the wheel `W_6`.
fn join_witness(cfg: &SearchConfig) -> Result<VertexDropCandidate> {
    let g = build_join_clique_cycle(&JoinSpec::new(2, 6)?);
    let before = estimate_dimension(&g, cfg);
    let h = g.delete_vertex(0)?;
    let hint = before.embedding.as_ref().map(|e| without_point(e, 0));
    let after = estimate_dimension_with_hint(&h, cfg, hint.as_ref());
    Ok(VertexDropCandidate {
        bounds: DropBounds::new(&before, &after, &h),
        graph: g,
        vertex: 0,
    })
}

/// Looks for vertex deletions that lower the dimension by 2 or more and
/// flags any drop of 3 or more.
pub fn hunt_vertex_drop(max_vertices: usize, cfg: &SearchConfig) -> Result<VertexDropReport> {
    let graphs = connected_graphs(max_vertices)?;
    let mut memo = Memo::new(cfg);
    let mut report = VertexDropReport {
        max_vertices,
        graphs: graphs.len(),
        deletions: 0,
        certified: Vec::new(),
        alarms: Vec::new(),
        undecided: Vec::new(),
        undecided_count: 0,
        witnesses: vec![join_witness(cfg)?],
    };
    for g in graphs.iter().filter(|g| g.vertex_count() >= 2) {
        let before = memo.estimate(g, None);
        for v in 0..g.vertex_count() {
            let h = g.delete_vertex(v)?;
            let hint = before.embedding.as_ref().map(|e| without_point(e, v));
            let after = memo.estimate(&h, hint.as_ref());
            report.deletions += 1;
            let bounds = DropBounds::new(&before, &after, &h);
            let candidate = VertexDropCandidate {
                graph: g.clone(),
                vertex: v,
                bounds,
            };
            if candidate.bounds.certified_drop >= 3 {
                report.alarms.push(candidate.clone());
            } else if candidate.bounds.undecided_at(3) {
                report.undecided.push(candidate.clone());
            }
            if candidate.bounds.certified_drop >= 2 {
                report.certified.push(candidate);
            }
        }
    }
    report.undecided_count = report.undecided.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // Connected graphs on 1..=6 vertices: 1, 1, 2, 6, 21, 112.
        let graphs = connected_graphs(6).unwrap();
        let mut counts = [0usize; 7];
        for g in &graphs {
            assert!(g.is_connected());
            counts[g.vertex_count()] += 1;
        }
        assert_eq!(&counts[1..], &[1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(8).is_err());
        assert!(connected_graphs(0).unwrap().is_empty());
    }

    #[test]
    fn small_edge_hunt_is_clean() {
        let report = hunt_edge_drop(4, &SearchConfig::default()).unwrap();
        assert_eq!(report.graphs, 10);
        assert!(report.certified.is_empty());
        assert_eq!(report.undecided_count, report.undecided.len());
    }
}
