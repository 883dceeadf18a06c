//! Library routines against brute-force reimplementations that share no
//! code with them.

use proptest::prelude::*;

use dimcrit::geometry::{verify_embedding, Embedding};
use dimcrit::graph::{
    build_multipartite, canonical_code, clique_number, dimension_lower_bound, Edge, Graph,
    PartitionSpec,
};
use dimcrit::multipartite::{integer_partitions, multipartite_dimension};
use dimcrit::search::{connected_graphs, estimate_dimension, SearchConfig};

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &(a, b))| Edge::new(a, b).unwrap());
    Graph::new(n, edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << pairs)).prop_map(|(n, m)| graph_from_mask(n, m))
    })
}

fn adjacent(g: &Graph, a: usize, b: usize) -> bool {
    g.edges()
        .iter()
        .any(|e| e.endpoints() == (a.min(b), a.max(b)))
}

fn brute_clique(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|s| {
            (0..n).all(|a| {
                (a + 1..n).all(|b| s >> a & 1 == 0 || s >> b & 1 == 0 || adjacent(g, a, b))
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn brute_path_forest(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut Vec<usize>, v: usize) -> usize {
        if root[v] != v {
            let r = find(root, root[v]);
            root[v] = r;
        }
        root[v]
    }
    for e in g.edges() {
        let (a, b) = (find(&mut root, e.lo()), find(&mut root, e.hi()));
        if a == b {
            return false;
        }
        root[a] = b;
    }
    (0..n).all(|v| {
        g.edges()
            .iter()
            .filter(|e| e.lo() == v || e.hi() == v)
            .count()
            <= 2
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    n == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && permutations(n)
            .iter()
            .any(|p| a.edges().iter().all(|e| adjacent(b, p[e.lo()], p[e.hi()])))
}

/// The dimension formula written directly from the part sizes.
fn formula(parts: &[usize]) -> usize {
    let singles = parts.iter().filter(|&&p| p == 1).count();
    let pairs = parts.iter().filter(|&&p| p == 2).count();
    let large = parts.iter().filter(|&&p| p >= 3).count();
    let base = singles + pairs + 2 * large;
    if pairs + large <= 1 {
        base - 1
    } else {
        base
    }
}

proptest! {
    #[test]
    fn clique_number_matches_subset_search(g in graphs(9)) {
        prop_assert_eq!(clique_number(&g), brute_clique(&g));
    }

    #[test]
    fn path_forest_matches_definition(g in graphs(8)) {
        prop_assert_eq!(g.is_path_forest(), brute_path_forest(&g));
    }

    #[test]
    fn canonical_codes_decide_isomorphism(n in 1usize..=6, a in any::<u64>(), b in any::<u64>()) {
        let m = 1u64 << (n * (n - 1) / 2);
        let (ga, gb) = (graph_from_mask(n, a % m), graph_from_mask(n, b % m));
        prop_assert_eq!(canonical_code(&ga) == canonical_code(&gb), brute_isomorphic(&ga, &gb));
    }

    #[test]
    fn relabelling_keeps_the_code(g in graphs(7), seed in any::<u64>()) {
        let n = g.vertex_count();
        let perms = permutations(n);
        let p = &perms[(seed % perms.len() as u64) as usize];
        prop_assert_eq!(canonical_code(&g), canonical_code(&g.relabel(p).unwrap()));
    }
}

#[test]
fn formula_matches_direct_count() {
    for n in 2..=12 {
        for parts in integer_partitions(n).into_iter().filter(|p| p.len() >= 2) {
            let spec = PartitionSpec::new(parts.clone()).unwrap();
            assert_eq!(
                multipartite_dimension(&spec).unwrap(),
                formula(&parts),
                "{parts:?}"
            );
        }
    }
}

#[test]
fn connected_graph_counts_through_seven() {
    let mut counts = [0usize; 8];
    for g in connected_graphs(7).unwrap() {
        counts[g.vertex_count()] += 1;
    }
    assert_eq!(&counts[1..], &[1, 1, 2, 6, 21, 112, 853]);
}

fn max_residual(g: &Graph, emb: &Embedding) -> f64 {
    g.edges()
        .iter()
        .map(|e| {
            let (p, q) = (emb.point(e.lo()), emb.point(e.hi()));
            let d: f64 = p
                .iter()
                .zip(q)
                .map(|(x, y)| (x - y).powi(2))
                .sum::<f64>()
                .sqrt();
            (d - 1.0).abs()
        })
        .fold(0.0, f64::max)
}

#[test]
fn estimates_on_known_families() {
    let cfg = SearchConfig::with_seed(4);
    let mut cases: Vec<(Graph, usize)> = Vec::new();
    for n in 2..=7 {
        cases.push((Graph::path(n), 1));
        cases.push((Graph::complete(n), n - 1));
    }
    for m in 3..=8 {
        cases.push((Graph::cycle(m).unwrap(), 2));
    }
    cases.push((
        build_multipartite(&PartitionSpec::new(vec![3, 3]).unwrap()),
        4,
    ));
    for (g, dim) in cases {
        let e = estimate_dimension(&g, &cfg);
        assert_eq!(e.exact(), Some(dim), "{g:?}: {e:?}");
        assert!(dimension_lower_bound(&g) <= dim);
        if let Some(emb) = &e.embedding {
            assert!(max_residual(&g, emb) <= 1e-7);
            assert!(verify_embedding(&g, emb, 1e-7).unwrap().passed);
        }
    }
}
