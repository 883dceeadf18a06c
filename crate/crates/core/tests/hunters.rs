use dimcrit::graph::Graph;
use dimcrit::search::{
    estimate_dimension, hunt_edge_drop, hunt_vertex_drop, SearchConfig, VertexDropCandidate,
};

fn cfg() -> SearchConfig {
    SearchConfig::with_seed(21)
}

fn exact(g: &Graph) -> usize {
    estimate_dimension(g, &cfg()).exact().expect("exact")
}

#[test]
fn single_deletion_examples() {
    let c4 = Graph::cycle(4).unwrap();
    assert_eq!(exact(&c4) - exact(&c4.delete_edge(0, 1).unwrap()), 1);
    let k5 = Graph::complete(5);
    assert_eq!(exact(&k5) - exact(&k5.delete_vertex(2).unwrap()), 1);
    // Three isolated leaves still need a line.
    let claw = Graph::star(3);
    assert_eq!(exact(&claw), 2);
    assert_eq!(exact(&claw.delete_vertex(0).unwrap()), 1);
}

#[test]
fn vertex_hunt_finds_the_join_witness_and_no_alarms() {
    let r = hunt_vertex_drop(5, &cfg()).unwrap();
    assert_eq!(r.graphs, 1 + 1 + 2 + 6 + 21);
    assert!(r.alarms.is_empty());
    let w: &VertexDropCandidate = &r.witnesses[0];
    assert_eq!(w.graph.vertex_count(), 8);
    assert_eq!((w.bounds.before_lower, w.bounds.after_upper), (4, 2));
    assert_eq!(w.bounds.certified_drop, 2);
    assert!(r.certified.iter().all(|c| c.bounds.certified_drop >= 2));
}

#[test]
fn edge_hunt_on_five_vertices() {
    let r = hunt_edge_drop(5, &cfg()).unwrap();
    assert_eq!(r.graphs, 31);
    assert!(r.certified.is_empty());
    assert_eq!(r.undecided_count, r.undecided.len());
    assert!(r.deletions > r.graphs);
}
