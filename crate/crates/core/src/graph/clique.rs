use super::Graph;

/// Graphs up to this many vertices get an exact maximum clique; larger
/// graphs fall back to a greedy search (still a genuine clique).
pub const EXHAUSTIVE_CLIQUE_LIMIT: usize = 12;

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A largest clique for small graphs, a greedy clique otherwise.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    if g.vertex_count() <= EXHAUSTIVE_CLIQUE_LIMIT {
        exact_clique(g)
    } else {
        greedy_clique(g)
    }
}

fn exact_clique(g: &Graph) -> Vec<usize> {
    let adj = g.adjacency_masks();
    let all = if g.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.vertex_count()) - 1
    };
    let mut best = 0u64;
    expand(&adj, 0, all, &mut best);
    (0..g.vertex_count())
        .filter(|&v| best >> v & 1 == 1)
        .collect()
}

fn expand(adj: &[u64], current: u64, mut candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    while candidates != 0 {
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= !(1 << v);
        expand(adj, current | 1 << v, candidates & adj[v], best);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = Vec::new();
    for &start in order.iter().take(16) {
        let mut clique = vec![start];
        for &v in &order {
            if v != start && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}
