//! Finite simple graphs, the graph families studied here, and the structural
//! predicates that certify dimension bounds without any geometry.

mod canon;
mod clique;
mod family;

pub use canon::{canonical_code, canonical_form, is_isomorphic, CanonicalCode};
pub use clique::{clique_number, max_clique, EXHAUSTIVE_CLIQUE_LIMIT};
pub use family::{build_join_clique_cycle, build_multipartite, JoinSpec, PartitionSpec};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected edge stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Self-loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
        }
        Ok(Edge {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.lo, e.hi]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(pair: [usize; 2]) -> Result<Self> {
        Edge::new(pair[0], pair[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// A finite simple graph on the vertices `0..vertex_count`.
///
/// Edges are kept sorted lexicographically, which is also the order used
/// whenever an operation walks "every edge in deterministic order".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<Edge>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::new(raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    /// Builds a graph, rejecting duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for e in edges {
            if e.hi >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} out of range for {n} vertices"
                )));
            }
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge {e}")));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    /// Convenience constructor from raw pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.lo].push(e.hi);
            adj[e.hi].push(e.lo);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| Edge { lo: i, hi: j }))
            .collect();
        Self::from_sorted(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| Edge { lo: i - 1, hi: i }).collect();
        Self::from_sorted(n, edges)
    }

    /// The cycle `0-1-…-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "cycle needs 3 vertices, got {n}"
            )));
        }
        let mut pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        pairs.push((0, n - 1));
        Self::from_pairs(n, &pairs)
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges = (1..=k).map(|i| Edge { lo: 0, hi: i }).collect();
        Self::from_sorted(k + 1, edges)
    }

    /// The wheel `W_m`: hub 0 joined to the rim cycle `1..=m`.
    pub fn wheel(m: usize) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = (1..=m).map(|i| (0, i)).collect();
        if m < 3 {
            return Err(Error::InvalidGraph(format!(
                "wheel rim needs 3 vertices, got {m}"
            )));
        }
        pairs.extend((1..m).map(|i| (i, i + 1)));
        pairs.push((1, m));
        Self::from_pairs(m + 1, &pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && a != b && self.adj[a].binary_search(&b).is_ok()
    }

    /// Adjacency rows as bitmasks. Only meaningful for graphs with at most
    /// 64 vertices; the small-graph algorithms check this before calling.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        let mut rows = vec![0u64; self.n];
        for e in &self.edges {
            rows[e.lo] |= 1 << e.hi;
            rows[e.hi] |= 1 << e.lo;
        }
        rows
    }

    pub fn delete_edge(&self, a: usize, b: usize) -> Result<Self> {
        let target = Edge::new(a, b).map_err(|_| Error::MissingEdge(a, b))?;
        let Ok(pos) = self.edges.binary_search(&target) else {
            return Err(Error::MissingEdge(a, b));
        };
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Self::from_sorted(self.n, edges))
    }

    /// Removes `v` and its incident edges. Remaining vertices keep their
    /// relative order: vertex `u > v` becomes `u - 1`.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::MissingVertex(v));
        }
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(v))
            .map(|e| Edge {
                lo: shift(e.lo),
                hi: shift(e.hi),
            })
            .collect();
        Ok(Self::from_sorted(self.n - 1, edges))
    }

    /// Subgraph induced on `keep`, relabelled in the order given.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            if old >= self.n {
                return Err(Error::MissingVertex(old));
            }
            if index[old] != usize::MAX {
                return Err(Error::InvalidGraph(format!("vertex {old} repeated")));
            }
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.lo] != usize::MAX && index[e.hi] != usize::MAX)
            .map(|e| Edge::new(index[e.lo], index[e.hi]).expect("distinct endpoints"));
        Self::new(keep.len(), edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
        }
        let edges = self.edges.iter().map(|e| {
            Edge::new(perm[e.lo], perm[e.hi]).expect("permutation keeps endpoints distinct")
        });
        Self::new(self.n, edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// True iff every component is a path: the graph is acyclic with
    /// maximum degree at most 2. Exactly the graphs representable in R.
    pub fn is_path_forest(&self) -> bool {
        if self.adj.iter().any(|a| a.len() > 2) {
            return false;
        }
        // A forest has n - c edges.
        self.edges.len() + self.components().len() == self.n
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// Lower bound on the unit-distance dimension from structure alone:
/// distinct points need R^1 once there are two vertices, non-path-forests
/// need the plane, and a clique on ω vertices needs R^(ω-1).
pub fn dimension_lower_bound(g: &Graph) -> usize {
    let mut bound = 0;
    if g.vertex_count() >= 2 {
        bound = 1;
    }
    if !g.is_path_forest() {
        bound = bound.max(2);
    }
    bound.max(clique_number(g).saturating_sub(1))
}

/// Upper bound from the regular simplex (every graph on n vertices is a
/// subgraph of K_n), sharpened to 1 for path forests.
pub fn dimension_upper_bound_trivial(g: &Graph) -> usize {
    match g.vertex_count() {
        0 | 1 => 0,
        _ if g.is_path_forest() => 1,
        n => n - 1,
    }
}
