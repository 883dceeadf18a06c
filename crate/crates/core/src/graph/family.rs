use serde::{Deserialize, Serialize};

use super::{Edge, Graph};
use crate::error::{Error, Result};

/// Part sizes of a complete multipartite graph, kept in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartsJson", into = "PartsJson")]
pub struct PartitionSpec {
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartsJson {
    parts: Vec<usize>,
}

impl TryFrom<PartsJson> for PartitionSpec {
    type Error = Error;

    fn try_from(raw: PartsJson) -> Result<Self> {
        PartitionSpec::new(raw.parts)
    }
}

impl From<PartitionSpec> for PartsJson {
    fn from(spec: PartitionSpec) -> Self {
        PartsJson { parts: spec.parts }
    }
}

impl PartitionSpec {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionSpec { parts })
    }

    /// `G(alpha, beta, gamma)`: parts of sizes 1, 2 and 3.
    pub fn from_counts(alpha: usize, beta: usize, gamma: usize) -> Result<Self> {
        let parts = std::iter::repeat_n(3, gamma)
            .chain(std::iter::repeat_n(2, beta))
            .chain(std::iter::repeat_n(1, alpha))
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn alpha(&self) -> usize {
        self.count_where(|s| s == 1)
    }

    pub fn beta(&self) -> usize {
        self.count_where(|s| s == 2)
    }

    pub fn gamma_3plus(&self) -> usize {
        self.count_where(|s| s >= 3)
    }

    pub fn gamma_exact3(&self) -> usize {
        self.count_where(|s| s == 3)
    }

    pub fn max_part(&self) -> usize {
        self.parts[0]
    }

    fn count_where(&self, pred: impl Fn(usize) -> bool) -> usize {
        self.parts.iter().filter(|&&s| pred(s)).count()
    }

    /// Vertex ranges of the realized graph, one per part, in part order.
    pub fn part_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }

    /// The spec with one vertex removed from part `index`.
    pub fn without_vertex_in_part(&self, index: usize) -> Option<Self> {
        let mut parts = self.parts.clone();
        let slot = parts.get_mut(index)?;
        *slot -= 1;
        parts.retain(|&s| s > 0);
        Self::new(parts).ok()
    }
}

impl std::fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sizes: Vec<String> = self.parts.iter().map(|s| s.to_string()).collect();
        write!(f, "K[{}]", sizes.join(","))
    }
}

/// The join `K_n + C_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JoinSpec {
    clique_size: usize,
    cycle_length: usize,
}

impl JoinSpec {
    pub fn new(clique_size: usize, cycle_length: usize) -> Result<Self> {
        if clique_size < 1 || cycle_length < 3 {
            return Err(Error::InvalidJoin {
                clique_size,
                cycle_length,
            });
        }
        Ok(JoinSpec {
            clique_size,
            cycle_length,
        })
    }

    pub fn clique_size(&self) -> usize {
        self.clique_size
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle_length
    }

    pub fn vertex_count(&self) -> usize {
        self.clique_size + self.cycle_length
    }

    /// Graph index of cycle vertex `w_k` (`k` counted from 1).
    pub fn cycle_vertex(&self, k: usize) -> usize {
        self.clique_size + k - 1
    }
}

/// Complete multipartite graph: vertices are numbered part by part (largest
/// part first) and joined exactly when they lie in different parts.
pub fn build_multipartite(spec: &PartitionSpec) -> Graph {
    let ranges = spec.part_ranges();
    let mut part_of = vec![0; spec.vertex_count()];
    for (p, r) in ranges.iter().enumerate() {
        for v in r.clone() {
            part_of[v] = p;
        }
    }
    let n = part_of.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .map(|(u, v)| Edge { lo: u, hi: v })
        .collect();
    Graph::from_sorted(n, edges)
}

/// `K_n + C_m`: clique vertices `0..n`, then the cycle `w_1..w_m` in order.
pub fn build_join_clique_cycle(spec: &JoinSpec) -> Graph {
    let n = spec.clique_size;
    let m = spec.cycle_length;
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2 + m + n * m);
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
        for k in 1..=m {
            pairs.push((a, spec.cycle_vertex(k)));
        }
    }
    for k in 1..m {
        pairs.push((spec.cycle_vertex(k), spec.cycle_vertex(k + 1)));
    }
    pairs.push((spec.cycle_vertex(1), spec.cycle_vertex(m)));
    Graph::from_pairs(n + m, &pairs).expect("join construction is a simple graph")
}
