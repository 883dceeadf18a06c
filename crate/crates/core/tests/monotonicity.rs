//! Deleting an edge or a vertex never raises the dimension. Checked on
//! seeded random graphs with the parent drawing passed down as a hint, so
//! the smaller graph's upper bound can never exceed the parent's.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dimcrit::geometry::{verify_embedding, Embedding, VERIFY_TOL};
use dimcrit::graph::{Edge, Graph};
use dimcrit::search::{
    estimate_dimension, estimate_dimension_with_hint, DimensionEstimate, SearchConfig,
};

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.random_range(2..=6);
    let p = rng.random_range(0.3..0.9);
    let edges: Vec<Edge> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.random_bool(p))
        .map(|(a, b)| Edge::new(a, b).unwrap())
        .collect();
    Graph::new(n, edges).unwrap()
}

fn sound(g: &Graph, e: &DimensionEstimate) {
    assert!(e.lower <= e.upper, "{g:?}: {e:?}");
    if let Some(emb) = &e.embedding {
        assert!(emb.dimension() <= e.upper);
        assert!(
            verify_embedding(g, emb, VERIFY_TOL).unwrap().passed,
            "{g:?}"
        );
    }
}

fn without_point(emb: &Embedding, v: usize) -> Embedding {
    let keep: Vec<usize> = (0..emb.len()).filter(|&u| u != v).collect();
    emb.reorder(&keep)
}

#[test]
fn deletions_never_raise_the_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cfg = SearchConfig {
        restarts: 20,
        ..SearchConfig::with_seed(5)
    };
    for _ in 0..200 {
        let g = random_graph(&mut rng);
        let whole = estimate_dimension(&g, &cfg);
        sound(&g, &whole);

        if g.edge_count() > 0 {
            let e = g.edges()[rng.random_range(0..g.edge_count())];
            let h = g.delete_edge(e.lo(), e.hi()).unwrap();
            let part = estimate_dimension_with_hint(&h, &cfg, whole.embedding.as_ref());
            sound(&h, &part);
            assert!(
                part.upper <= whole.upper,
                "{g:?} - {e}: {part:?} vs {whole:?}"
            );
            assert!(
                part.lower <= whole.upper,
                "{g:?} - {e}: certified bounds disagree"
            );
        }

        let v = rng.random_range(0..g.vertex_count());
        let h = g.delete_vertex(v).unwrap();
        let hint = whole.embedding.as_ref().map(|emb| without_point(emb, v));
        let part = estimate_dimension_with_hint(&h, &cfg, hint.as_ref());
        sound(&h, &part);
        assert!(part.upper <= whole.upper, "{g:?} - vertex {v}");
        assert!(
            part.lower <= whole.upper,
            "{g:?} - vertex {v}: certified bounds disagree"
        );
    }
}
