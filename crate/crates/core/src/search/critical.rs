use serde::{Deserialize, Serialize};

use super::estimate::{certified_lower_bound, estimate_from, recognize_join};
use super::{
    estimate_dimension, find_embedding, DimensionEstimate, LowerProvenance, SearchConfig, Status,
    UpperProvenance,
};
use crate::error::{Error, Result};
use crate::geometry::Embedding;
use crate::graph::{Edge, Graph};
use crate::multipartite::{edge_orbits, recognize_multipartite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Critical,
    NotCritical,
    Undecided,
}

/// What deleting one edge (or a whole orbit of equivalent edges) does.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeOutcome {
    pub edge: Edge,
    /// Edges equivalent to `edge` under a known automorphism group.
    pub orbit: Vec<Edge>,
    pub estimate: DimensionEstimate,
    /// `G - e` has an isolated vertex, so its dimension rests on the
    /// distinct-point convention.
    pub isolated_vertices: bool,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub graph: DimensionEstimate,
    /// Recognised family whose symmetry reduced the edge list.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    pub edges: Vec<EdgeOutcome>,
    pub overall: Verdict,
}

/// Edge classes to test: orbits for recognised families, singletons otherwise.
fn edge_classes(g: &Graph) -> (Option<String>, Vec<Vec<Edge>>) {
    if let Some((spec, parts)) = recognize_multipartite(g) {
        if spec.part_count() >= 2 {
            let orbits = edge_orbits(g, &parts)
                .into_iter()
                .map(|o| o.members)
                .collect();
            return (Some(spec.to_string()), orbits);
        }
    }
    if let Some((spec, order)) = recognize_join(g) {
        let n = spec.clique_size();
        let in_clique = |v: usize| order[..n].contains(&v);
        let mut classes: [Vec<Edge>; 3] = Default::default();
        for &e in g.edges() {
            let k = usize::from(in_clique(e.lo())) + usize::from(in_clique(e.hi()));
            classes[2 - k].push(e);
        }
        let name = format!("K_{} + C_{}", n, spec.cycle_length());
        return (
            Some(name),
            classes.into_iter().filter(|c| !c.is_empty()).collect(),
        );
    }
    (None, g.edges().iter().map(|&e| vec![e]).collect())
}

fn classify(whole: &DimensionEstimate, minus: &DimensionEstimate) -> Verdict {
    if minus.upper < whole.lower {
        Verdict::Critical
    } else if minus.lower >= whole.upper {
        Verdict::NotCritical
    } else {
        Verdict::Undecided
    }
}

fn outcome(
    g: &Graph,
    class: Vec<Edge>,
    whole: &DimensionEstimate,
    cfg: &SearchConfig,
) -> Result<EdgeOutcome> {
    let e = class[0];
    let h = g.delete_edge(e.lo(), e.hi())?;
    // Only a drawing below lower(G) can show the edge is critical.
    let floor = whole.lower.saturating_sub(1);
    let estimate = estimate_from(&h, cfg, whole.embedding.as_ref(), floor);
    Ok(EdgeOutcome {
        edge: e,
        verdict: classify(whole, &estimate),
        isolated_vertices: !h.isolated_vertices().is_empty(),
        orbit: class,
        estimate,
    })
}

fn overall(edges: &[EdgeOutcome]) -> Verdict {
    if edges.iter().any(|o| o.verdict == Verdict::NotCritical) {
        Verdict::NotCritical
    } else if edges.iter().all(|o| o.verdict == Verdict::Critical) {
        Verdict::Critical
    } else {
        Verdict::Undecided
    }
}

/// Decides, edge by edge, whether deleting it lowers the dimension.
///
/// An edge is critical when a drawing of `G - e` below `lower(G)` is
/// certified, not critical when `lower(G - e) >= upper(G)`, and undecided
/// otherwise.
pub fn test_criticality(g: &Graph, cfg: &SearchConfig) -> Result<CriticalityReport> {
    if g.edge_count() == 0 || !g.is_connected() {
        return Err(Error::NotConnectedNonEmpty);
    }
    let whole = estimate_dimension(g, cfg);
    let (family, classes) = edge_classes(g);
    let edges = classes
        .into_iter()
        .map(|c| outcome(g, c, &whole, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(CriticalityReport {
        overall: overall(&edges),
        graph: whole,
        family,
        edges,
    })
}

/// One edge removed by [`prune_to_critical`], in original vertex labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PruneStep {
    pub edge: Edge,
    /// Certified lower bound of the graph left after the deletion.
    pub lower: usize,
    pub lower_provenance: LowerProvenance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PruneReport {
    pub target: usize,
    /// Pruned graph on the vertices in `kept_vertices`, relabelled densely.
    pub graph: Graph,
    /// Original label of each vertex of `graph`.
    pub kept_vertices: Vec<usize>,
    pub removed: Vec<PruneStep>,
    /// Verdict for every remaining edge, in the labels of `graph`.
    pub edges: Vec<EdgeOutcome>,
    pub undecided: usize,
    pub is_critical: bool,
    pub connected: bool,
    /// Drawing of `graph` in R^target, when one is known.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub embedding: Option<Embedding>,
}

/// Deletes edges whose removal provably keeps the dimension at `target`,
/// first edge first, until none is left; then drops isolated vertices and
/// classifies what remains.
pub fn prune_to_critical(g: &Graph, target: usize, cfg: &SearchConfig) -> Result<PruneReport> {
    if g.edge_count() == 0 || !g.is_connected() {
        return Err(Error::NotConnectedNonEmpty);
    }
    let start = estimate_dimension(g, cfg);
    if start.exact() != Some(target) {
        return Err(Error::Precondition(format!(
            "target {target} is not the certified dimension (bounds [{}, {}])",
            start.lower, start.upper
        )));
    }
    let mut embedding = match start.embedding {
        Some(emb) if emb.dimension() == target => Some(emb),
        _ => find_embedding(g, target, cfg),
    };

    let mut current = g.clone();
    let mut removed = Vec::new();
    'scan: loop {
        for &e in current.edges() {
            let h = current.delete_edge(e.lo(), e.hi())?;
            let (lower, lower_provenance) = certified_lower_bound(&h);
            if lower >= target {
                removed.push(PruneStep {
                    edge: e,
                    lower,
                    lower_provenance,
                });
                current = h;
                continue 'scan;
            }
        }
        break;
    }

    let isolated = current.isolated_vertices();
    let kept_vertices: Vec<usize> = if current.vertex_count() - isolated.len() >= 2 {
        (0..current.vertex_count())
            .filter(|v| !isolated.contains(v))
            .collect()
    } else {
        (0..current.vertex_count()).collect()
    };
    let pruned = current.induced_subgraph(&kept_vertices)?;
    embedding = embedding.map(|emb| emb.reorder(&kept_vertices));

    // dim(pruned) = target: the last deletion certified the lower bound (or
    // nothing was deleted), isolated vertices do not matter once two other
    // vertices remain, and a subgraph never needs more room than `g`.
    let (lower_provenance, lower_witness) = match removed.last() {
        Some(step) => (step.lower_provenance, None),
        None => (start.lower_provenance, start.lower_witness.clone()),
    };
    let whole = DimensionEstimate {
        lower: target,
        lower_provenance,
        lower_witness,
        upper: target,
        upper_provenance: match embedding {
            Some(_) => UpperProvenance::EmbeddingFound,
            None => start.upper_provenance,
        },
        upper_witness: Some("inherited".into()),
        status: Status::Exact,
        embedding: embedding.clone(),
    };
    let edges = pruned
        .edges()
        .iter()
        .map(|&e| outcome(&pruned, vec![e], &whole, cfg))
        .collect::<Result<Vec<_>>>()?;
    let undecided = edges
        .iter()
        .filter(|o| o.verdict != Verdict::Critical)
        .count();
    Ok(PruneReport {
        target,
        connected: pruned.is_connected(),
        graph: pruned,
        kept_vertices,
        removed,
        is_critical: undecided == 0,
        undecided,
        edges,
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_multipartite, PartitionSpec};

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn spec_examples() {
        let c5 = test_criticality(&Graph::cycle(5).unwrap(), &cfg()).unwrap();
        assert_eq!(c5.overall, Verdict::Critical);
        assert_eq!(c5.edges.len(), 5);

        let k2 = test_criticality(&Graph::complete(2), &cfg()).unwrap();
        assert_eq!(k2.overall, Verdict::NotCritical);
        assert!(k2.edges[0].isolated_vertices);

        let k33 = build_multipartite(&PartitionSpec::new(vec![3, 3]).unwrap());
        let r = test_criticality(&k33, &cfg()).unwrap();
        assert_eq!(r.overall, Verdict::Critical);
        assert_eq!(r.edges.len(), 1);
        assert_eq!(r.edges[0].orbit.len(), 9);
    }

    #[test]
    fn rejects_disconnected_input() {
        assert!(test_criticality(&Graph::empty(3), &cfg()).is_err());
        let two = Graph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            test_criticality(&two, &cfg()),
            Err(Error::NotConnectedNonEmpty)
        ));
    }

    #[test]
    fn prune_keeps_critical_graphs() {
        for (g, target) in [(Graph::cycle(6).unwrap(), 2), (Graph::complete(4), 3)] {
            let r = prune_to_critical(&g, target, &cfg()).unwrap();
            assert_eq!(r.graph, g);
            assert!(r.removed.is_empty());
            assert!(r.is_critical);
            assert_eq!(r.embedding.unwrap().dimension(), target);
        }
    }

    #[test]
    fn prune_star_to_claw() {
        let r = prune_to_critical(&Graph::star(4), 2, &cfg()).unwrap();
        assert_eq!(r.removed.len(), 1);
        assert_eq!(r.graph, Graph::star(3));
        assert_eq!(r.kept_vertices.len(), 4);
        assert!(r.is_critical && r.connected);
    }

    #[test]
    fn prune_edge_cases() {
        let r = prune_to_critical(&Graph::complete(2), 1, &cfg()).unwrap();
        assert_eq!(r.graph, Graph::empty(2));
        assert!(!r.connected);
        assert!(prune_to_critical(&Graph::cycle(5).unwrap(), 3, &cfg()).is_err());
    }
}
