use serde::{Deserialize, Serialize};

use super::Graph;

/// Largest vertex count accepted by the brute-force canonical form.
pub const CANONICAL_LIMIT: usize = 8;

/// Canonical code of a small graph: the upper triangle of the
/// lexicographically smallest adjacency matrix over all vertex orders,
/// read row by row with the first entry as the most significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub n: usize,
    pub bits: u64,
}

fn pair_shift(n: usize, i: usize, j: usize) -> u32 {
    let len = n * (n - 1) / 2;
    let pos = i * n - i * (i + 1) / 2 + (j - i - 1);
    (len - 1 - pos) as u32
}

fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.vertex_count();
    g.edges().iter().fold(0u64, |acc, e| {
        let (a, b) = (perm[e.lo()], perm[e.hi()]);
        acc | 1 << pair_shift(n, a.min(b), a.max(b))
    })
}

/// Returns the canonical code and a permutation (`old -> new`) achieving it.
///
/// # Panics
/// If the graph has more than [`CANONICAL_LIMIT`] vertices.
pub fn canonical_form(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let n = g.vertex_count();
    assert!(
        n <= CANONICAL_LIMIT,
        "canonical form limited to {CANONICAL_LIMIT} vertices"
    );
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = (code_under(g, &perm), perm.clone());
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let code = code_under(g, &perm);
            if code < best.0 {
                best = (code, perm.clone());
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    (CanonicalCode { n, bits: best.0 }, best.1)
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_form(g).0
}

/// Brute-force isomorphism test for graphs with at most eight vertices.
///
/// # Panics
/// If either graph exceeds [`CANONICAL_LIMIT`] vertices.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_code(a) == canonical_code(b)
}

impl CanonicalCode {
    /// Rebuilds the canonically labelled graph.
    pub fn to_graph(self) -> Graph {
        let n = self.n;
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.bits >> pair_shift(n, i, j) & 1 == 1 {
                    pairs.push((i, j));
                }
            }
        }
        Graph::from_pairs(n, &pairs).expect("code encodes a simple graph")
    }
}
