use serde::{Deserialize, Serialize};

use super::{find_embedding, SearchConfig};
use crate::geometry::{embed_join_clique_cycle, verify_embedding, Embedding};
use crate::graph::{clique_number, dimension_upper_bound_trivial, Graph, JoinSpec};
use crate::multipartite::{
    multipartite_dimension, recognize_multipartite, subgraph_lower_bound, supergraph_upper_bound,
};

/// Where a lower bound comes from. Every tag is a proof, never a failed search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerProvenance {
    /// Distinct points: two vertices need R^1; one fits in R^0.
    VertexCount,
    /// Not a path forest, so not drawable on a line.
    PathForest,
    /// A clique on ω vertices needs R^(ω−1).
    Clique,
    /// The graph is a complete multipartite graph or a join `K_n + C_m`.
    ExactFamily,
    /// Formula value of a complete multipartite subgraph.
    FamilySubgraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperProvenance {
    /// A verified embedding is stored with the estimate.
    EmbeddingFound,
    /// Subgraph of the regular simplex on all vertices.
    SimplexTrivial,
    /// Path forests lie on a line.
    PathForest,
    ExactFamily,
    /// Formula value of a complete multipartite graph containing this one.
    FamilySupergraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    Interval,
}

/// Certified bounds on the dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionEstimate {
    pub lower: usize,
    pub lower_provenance: LowerProvenance,
    /// Family or clique behind the lower bound, when there is one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lower_witness: Option<String>,
    pub upper: usize,
    pub upper_provenance: UpperProvenance,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub upper_witness: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub embedding: Option<Embedding>,
}

impl DimensionEstimate {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// The dimension when both bounds meet.
    pub fn exact(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }

    fn new(
        lower: Bound<LowerProvenance>,
        upper: Bound<UpperProvenance>,
        embedding: Option<Embedding>,
    ) -> Self {
        debug_assert!(lower.value <= upper.value, "{lower:?} > {upper:?}");
        DimensionEstimate {
            lower: lower.value,
            lower_provenance: lower.tag,
            lower_witness: lower.witness,
            upper: upper.value,
            upper_provenance: upper.tag,
            upper_witness: upper.witness,
            status: if lower.value == upper.value {
                Status::Exact
            } else {
                Status::Interval
            },
            embedding,
        }
    }
}

#[derive(Debug, Clone)]
struct Bound<T> {
    value: usize,
    tag: T,
    witness: Option<String>,
}

impl<T> Bound<T> {
    fn new(value: usize, tag: T) -> Self {
        Bound {
            value,
            tag,
            witness: None,
        }
    }

    fn with(value: usize, tag: T, witness: String) -> Self {
        Bound {
            value,
            tag,
            witness: Some(witness),
        }
    }
}

/// Recognises `K_n + C_m` with `m ≥ 4`: the universal vertices form the
/// clique and the rest must induce one cycle. Returns the spec and the
/// vertex of `g` at each position of [`crate::graph::build_join_clique_cycle`].
pub fn recognize_join(g: &Graph) -> Option<(JoinSpec, Vec<usize>)> {
    let total = g.vertex_count();
    let clique: Vec<usize> = (0..total).filter(|&v| g.degree(v) + 1 == total).collect();
    let rest: Vec<usize> = (0..total).filter(|&v| g.degree(v) + 1 != total).collect();
    if clique.is_empty() || rest.len() < 4 {
        return None;
    }
    let in_rest = |v: usize| g.degree(v) + 1 != total;
    let ring = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&u| in_rest(u))
            .collect()
    };
    if rest.iter().any(|&v| ring(v).len() != 2) {
        return None;
    }
    let mut order = clique.clone();
    let (start, mut prev) = (rest[0], usize::MAX);
    let mut cur = start;
    loop {
        order.push(cur);
        let next = ring(cur).into_iter().find(|&u| u != prev)?;
        prev = cur;
        cur = next;
        if cur == start {
            break;
        }
        if order.len() > total {
            return None;
        }
    }
    if order.len() != total {
        return None;
    }
    let spec = JoinSpec::new(clique.len(), rest.len()).ok()?;
    Some((spec, order))
}

fn exact_family(g: &Graph) -> Option<(usize, String, Option<Embedding>)> {
    if let Some((spec, _)) = recognize_multipartite(g) {
        if spec.part_count() >= 2 || g.vertex_count() <= 1 {
            return Some((multipartite_dimension(&spec).ok()?, spec.to_string(), None));
        }
        return None;
    }
    let (spec, order) = recognize_join(g)?;
    if spec.clique_size() < 2 {
        return None;
    }
    let construction = embed_join_clique_cycle(&spec).ok()?;
    // Position k of the construction belongs to vertex order[k].
    let mut position = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    let emb = construction.reorder(&position);
    let name = format!("K_{} + C_{}", spec.clique_size(), spec.cycle_length());
    Some((spec.clique_size() + 2, name, Some(emb)))
}

fn combinatorial_lower(g: &Graph) -> Bound<LowerProvenance> {
    let n = g.vertex_count();
    let mut best = Bound::new(0, LowerProvenance::VertexCount);
    if n >= 2 {
        best = Bound::new(1, LowerProvenance::VertexCount);
    }
    if !g.is_path_forest() {
        best = Bound::new(2, LowerProvenance::PathForest);
    }
    let omega = clique_number(g);
    if omega.saturating_sub(1) > best.value {
        best = Bound::with(omega - 1, LowerProvenance::Clique, format!("K_{omega}"));
    }
    if let Some(fam) = subgraph_lower_bound(g) {
        if fam.dimension > best.value {
            best = Bound::with(
                fam.dimension,
                LowerProvenance::FamilySubgraph,
                fam.spec.to_string(),
            );
        }
    }
    best
}

/// The best lower bound that needs no search, with its provenance.
pub fn certified_lower_bound(g: &Graph) -> (usize, LowerProvenance) {
    match exact_family(g) {
        Some((dim, _, _)) => (dim, LowerProvenance::ExactFamily),
        None => {
            let b = combinatorial_lower(g);
            (b.value, b.tag)
        }
    }
}

/// Certified bounds on the dimension of `g`, searching upward from the
/// lower bound until an embedding is found or the upper bound is reached.
pub fn estimate_dimension(g: &Graph, cfg: &SearchConfig) -> DimensionEstimate {
    estimate_dimension_with_hint(g, cfg, None)
}

/// As [`estimate_dimension`], but a verified drawing of `g` (typically
/// inherited from a supergraph) caps the search.
pub fn estimate_dimension_with_hint(
    g: &Graph,
    cfg: &SearchConfig,
    hint: Option<&Embedding>,
) -> DimensionEstimate {
    estimate_from(g, cfg, hint, 0)
}

/// Searches only dimensions `>= search_floor`. Lower dimensions are left
/// undecided, which keeps every reported bound sound.
pub(crate) fn estimate_from(
    g: &Graph,
    cfg: &SearchConfig,
    hint: Option<&Embedding>,
    search_floor: usize,
) -> DimensionEstimate {
    let n = g.vertex_count();
    if n <= 1 {
        let emb = Embedding::new(0, vec![vec![]; n]).expect("empty points");
        return DimensionEstimate::new(
            Bound::new(0, LowerProvenance::VertexCount),
            Bound::new(0, UpperProvenance::SimplexTrivial),
            Some(emb),
        );
    }
    if let Some((dim, name, emb)) = exact_family(g) {
        return DimensionEstimate::new(
            Bound::with(dim, LowerProvenance::ExactFamily, name.clone()),
            Bound::with(dim, UpperProvenance::ExactFamily, name),
            emb,
        );
    }
    let lower = combinatorial_lower(g);
    let mut upper = if g.is_path_forest() {
        Bound::new(1, UpperProvenance::PathForest)
    } else {
        Bound::new(
            dimension_upper_bound_trivial(g),
            UpperProvenance::SimplexTrivial,
        )
    };
    if let Some(fam) = supergraph_upper_bound(g) {
        if fam.dimension < upper.value {
            upper = Bound::with(
                fam.dimension,
                UpperProvenance::FamilySupergraph,
                fam.spec.to_string(),
            );
        }
    }
    let mut embedding = None;
    if let Some(h) = hint {
        let usable = h.len() == n
            && h.dimension() < upper.value
            && verify_embedding(g, h, cfg.tolerance).is_ok_and(|r| r.passed);
        if usable {
            upper = Bound::with(
                h.dimension(),
                UpperProvenance::EmbeddingFound,
                "inherited".into(),
            );
            embedding = Some(h.clone());
        }
    }
    for d in lower.value.max(search_floor)..upper.value {
        if let Some(emb) = find_embedding(g, d, cfg) {
            upper = Bound::new(d, UpperProvenance::EmbeddingFound);
            embedding = Some(emb);
            break;
        }
    }
    DimensionEstimate::new(lower, upper, embedding)
}
