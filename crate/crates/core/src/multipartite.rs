//! Complete multipartite graphs: the exact dimension formula, the full
//! dimension-criticality decision, and formula-certified bounds for graphs
//! that merely sit inside (or contain) a complete multipartite graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_multipartite, Edge, Graph, PartitionSpec};

/// Vertex counts above this skip the exhaustive partition searches behind
/// [`subgraph_lower_bound`] and [`supergraph_upper_bound`].
pub const FAMILY_BOUND_LIMIT: usize = 10;

/// Dimension from part-size counts; `gamma` counts parts of size >= 3.
fn formula(alpha: usize, beta: usize, gamma: usize) -> usize {
    let base = alpha + beta + 2 * gamma;
    if beta + gamma <= 1 {
        base.saturating_sub(1)
    } else {
        base
    }
}

fn formula_of_sizes(sizes: impl IntoIterator<Item = usize>) -> usize {
    let (mut a, mut b, mut c) = (0, 0, 0);
    for s in sizes {
        match s {
            0 => {}
            1 => a += 1,
            2 => b += 1,
            _ => c += 1,
        }
    }
    formula(a, b, c)
}

/// Exact unit-distance dimension of the complete multipartite graph.
///
/// A single part of size >= 2 is an edgeless graph; the formula is not
/// claimed there and the call fails.
pub fn multipartite_dimension(spec: &PartitionSpec) -> Result<usize> {
    if spec.part_count() == 1 && spec.max_part() >= 2 {
        return Err(Error::FormulaNotApplicable(format!(
            "{spec}: a single part of size {} has no edges",
            spec.max_part()
        )));
    }
    Ok(formula(spec.alpha(), spec.beta(), spec.gamma_3plus()))
}

/// Which clause of the classification decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalityRule {
    /// `K_alpha`, alpha >= 3.
    CompleteGraph,
    /// `C_4 = G(0,2,0)`.
    FourCycle,
    /// `K_{1,3} = G(1,0,1)`.
    Star13,
    /// `K_{2,3} = G(0,1,1)`.
    Bipartite23,
    /// `G(alpha,0,gamma)`, gamma >= 2.
    TriplePartsOnly,
    /// Some part has size >= 4.
    PartAtLeastFour,
    /// `K_2`.
    SingleEdge,
    /// `G(alpha,1,0)`, alpha >= 1.
    OnePairNoTriple,
    /// `G(alpha,1,1)`, alpha >= 1.
    OnePairOneTriple,
    /// `G(alpha,2,0)`, alpha >= 1.
    TwoPairsWithSingletons,
    /// `G(alpha,0,1)`, alpha >= 2.
    OneTripleWithSingletons,
    /// beta >= 1 and beta + gamma >= 3.
    PairsAndManyLargeParts,
}

impl CriticalityRule {
    pub fn is_critical(self) -> bool {
        matches!(
            self,
            Self::CompleteGraph
                | Self::FourCycle
                | Self::Star13
                | Self::Bipartite23
                | Self::TriplePartsOnly
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityVerdict {
    pub is_critical: bool,
    pub rule: CriticalityRule,
    pub witness: Option<String>,
}

/// Decides dimension-criticality of a complete multipartite graph.
pub fn classify_multipartite_criticality(spec: &PartitionSpec) -> Result<CriticalityVerdict> {
    use CriticalityRule::*;
    if spec.part_count() < 2 {
        return Err(Error::Precondition(format!(
            "{spec}: criticality needs at least two parts"
        )));
    }
    let dim = multipartite_dimension(spec)?;

    if spec.max_part() >= 4 {
        let reduced = spec.without_vertex_in_part(0).expect("part of size >= 4");
        let witness = format!(
            "delete a vertex of a part of size {}: {reduced} still has dimension {dim}",
            spec.max_part()
        );
        return Ok(verdict(PartAtLeastFour, Some(witness)));
    }

    let (a, b, c) = (spec.alpha(), spec.beta(), spec.gamma_exact3());
    let rule = match (a, b, c) {
        (_, 0, 0) if a >= 3 => CompleteGraph,
        (0, 2, 0) => FourCycle,
        (1, 0, 1) => Star13,
        (0, 1, 1) => Bipartite23,
        (_, 0, _) if c >= 2 => TriplePartsOnly,
        (2, 0, 0) => SingleEdge,
        (_, 1, 0) => OnePairNoTriple,
        (_, 1, 1) => OnePairOneTriple,
        (_, 2, 0) => TwoPairsWithSingletons,
        (_, 0, 1) => OneTripleWithSingletons,
        _ => PairsAndManyLargeParts,
    };
    let witness = match rule {
        SingleEdge => Some("delete the edge: two isolated vertices still need R^1".to_string()),
        OnePairNoTriple => Some(format!(
            "delete a vertex of the size-2 part: K_{} still has dimension {dim}",
            a + 1
        )),
        OnePairOneTriple => Some(format!(
            "delete both edges from a singleton to the size-2 part: G({},0,2) still has dimension {dim}",
            a - 1
        )),
        TwoPairsWithSingletons => Some(format!(
            "delete both edges from a singleton to one size-2 part: G({},1,1) still has dimension {dim}",
            a - 1
        )),
        OneTripleWithSingletons => Some(format!(
            "delete an edge between two singletons: G({},1,1) still has dimension {dim}",
            a - 2
        )),
        PairsAndManyLargeParts => Some(format!(
            "delete a vertex of a size-2 part: G({},{},{}) still has dimension {dim}",
            a + 1,
            b - 1,
            c
        )),
        _ => None,
    };
    Ok(verdict(rule, witness))
}

fn verdict(rule: CriticalityRule, witness: Option<String>) -> CriticalityVerdict {
    CriticalityVerdict {
        is_critical: rule.is_critical(),
        rule,
        witness,
    }
}

/// Edges of a complete multipartite graph grouped by the sizes of the two
/// parts they join; each group is one orbit of the automorphism group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeOrbit {
    /// Part sizes of the endpoints, larger first.
    pub part_sizes: (usize, usize),
    /// Lexicographically first edge of the orbit.
    pub representative: Edge,
    pub members: Vec<Edge>,
}

/// Edge orbits of `g`, whose vertices are split into `parts`.
pub fn edge_orbits(g: &Graph, parts: &[Vec<usize>]) -> Vec<EdgeOrbit> {
    let mut size_of = vec![0; g.vertex_count()];
    for p in parts {
        for &v in p {
            size_of[v] = p.len();
        }
    }
    let mut orbits: Vec<EdgeOrbit> = Vec::new();
    for &e in g.edges() {
        let (x, y) = (size_of[e.lo()], size_of[e.hi()]);
        let key = (x.max(y), x.min(y));
        match orbits.iter_mut().find(|o| o.part_sizes == key) {
            Some(o) => o.members.push(e),
            None => orbits.push(EdgeOrbit {
                part_sizes: key,
                representative: e,
                members: vec![e],
            }),
        }
    }
    orbits.sort_by_key(|o| std::cmp::Reverse(o.part_sizes));
    orbits
}

/// One row of the deletion table: the bounds on `dim(G - e)` for an edge
/// orbit, each certified by the formula applied to a multipartite graph
/// containing, or contained in, `G - e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionRow {
    pub orbit: EdgeOrbit,
    /// Multipartite graph on the same vertices containing `G - e`.
    pub containing: PartitionSpec,
    /// Best of the `containing` formula and the graph-level upper bound.
    pub upper: usize,
    /// Multipartite subgraph of `G - e`.
    pub contained: PartitionSpec,
    /// Best of the `contained` formula and the graph-level lower bound.
    pub lower: usize,
    /// Exact dimension of `G - e` when the two bounds meet.
    pub dimension: Option<usize>,
}

/// Dimension of `G - e` for every edge orbit of the multipartite graph.
pub fn multipartite_deletion_table(spec: &PartitionSpec) -> Result<Vec<DeletionRow>> {
    if spec.part_count() < 2 {
        return Err(Error::Precondition(format!(
            "{spec}: deletion table needs at least two parts"
        )));
    }
    if spec.vertex_count() > FAMILY_BOUND_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "{spec} has more than {FAMILY_BOUND_LIMIT} vertices"
        )));
    }
    let g = build_multipartite(spec);
    let parts: Vec<Vec<usize>> = spec
        .part_ranges()
        .into_iter()
        .map(|r| r.collect())
        .collect();
    edge_orbits(&g, &parts)
        .into_iter()
        .map(|orbit| {
            let e = orbit.representative;
            let h = g.delete_edge(e.lo(), e.hi())?;
            let sup = supergraph_upper_bound(&h).expect("within size limit");
            let sub = subgraph_lower_bound(&h).expect("within size limit");
            // The graph-level bounds cover what no multipartite family sees,
            // e.g. the distinct-point value 1 for an edgeless pair.
            let upper = sup
                .dimension
                .min(crate::graph::dimension_upper_bound_trivial(&h));
            let lower = sub.dimension.max(crate::graph::dimension_lower_bound(&h));
            Ok(DeletionRow {
                dimension: (lower == upper).then_some(upper),
                orbit,
                containing: sup.spec,
                upper,
                contained: sub.spec,
                lower,
            })
        })
        .collect()
}

/// Splits `g` into parts if it is complete multipartite: non-adjacency must
/// be an equivalence relation and every cross pair an edge.
pub fn recognize_multipartite(g: &Graph) -> Option<(PartitionSpec, Vec<Vec<usize>>)> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (v..n).filter(|&u| u == v || !g.has_edge(u, v)).collect();
        for &u in &members {
            if part_of[u] != usize::MAX {
                return None;
            }
            part_of[u] = parts.len();
        }
        parts.push(members);
    }
    let expected: usize = {
        let total = n * (n - 1) / 2;
        total
            - parts
                .iter()
                .map(|p| p.len() * (p.len() - 1) / 2)
                .sum::<usize>()
    };
    // With no edge inside a part, the count matches only if every cross
    // pair is present.
    if g.edges().iter().any(|e| part_of[e.lo()] == part_of[e.hi()]) || g.edge_count() != expected {
        return None;
    }
    let spec = PartitionSpec::new(parts.iter().map(Vec::len).collect()).ok()?;
    Some((spec, parts))
}

/// A formula-certified bound together with the multipartite graph behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBound {
    pub dimension: usize,
    pub spec: PartitionSpec,
    /// Vertices of `g` in each part of `spec`.
    pub parts: Vec<Vec<usize>>,
}

/// Best upper bound `dim(H)` over complete multipartite graphs `H` on the
/// same vertex set with `g ⊆ H`, i.e. over partitions of the vertices into
/// independent sets of `g`. `None` above [`FAMILY_BOUND_LIMIT`] vertices or
/// for the graph with no vertices.
pub fn supergraph_upper_bound(g: &Graph) -> Option<FamilyBound> {
    let n = g.vertex_count();
    if n == 0 || n > FAMILY_BOUND_LIMIT {
        return None;
    }
    if n == 1 {
        return Some(FamilyBound {
            dimension: 0,
            spec: PartitionSpec::new(vec![1]).expect("valid"),
            parts: vec![vec![0]],
        });
    }
    let adj = g.adjacency_masks();
    let mut blocks: Vec<u64> = Vec::new();
    let mut best: Option<(usize, Vec<u64>)> = None;
    independent_partitions(&adj, 0, n, &mut blocks, &mut best);
    best.map(|(dimension, blocks)| family_bound(dimension, &blocks))
}

fn block_formula(blocks: &[u64]) -> usize {
    formula_of_sizes(blocks.iter().map(|b| b.count_ones() as usize))
}

fn independent_partitions(
    adj: &[u64],
    v: usize,
    n: usize,
    blocks: &mut Vec<u64>,
    best: &mut Option<(usize, Vec<u64>)>,
) {
    // The formula never decreases as vertices are added, so a partial
    // partition already at the incumbent cannot improve it.
    let partial = block_formula(blocks);
    if let Some((b, _)) = best {
        if partial >= *b {
            return;
        }
    }
    if v == n {
        if blocks.len() >= 2 {
            *best = Some((partial, blocks.clone()));
        }
        return;
    }
    for i in 0..blocks.len() {
        if blocks[i] & adj[v] == 0 {
            blocks[i] |= 1 << v;
            independent_partitions(adj, v + 1, n, blocks, best);
            blocks[i] &= !(1 << v);
        }
    }
    blocks.push(1 << v);
    independent_partitions(adj, v + 1, n, blocks, best);
    blocks.pop();
}

/// Best lower bound `dim(H)` over complete multipartite subgraphs `H` of
/// `g` (not necessarily induced or spanning). `None` above
/// [`FAMILY_BOUND_LIMIT`] vertices or for the graph with no vertices.
pub fn subgraph_lower_bound(g: &Graph) -> Option<FamilyBound> {
    let n = g.vertex_count();
    if n == 0 || n > FAMILY_BOUND_LIMIT {
        return None;
    }
    let adj = g.adjacency_masks();
    let mut blocks: Vec<u64> = Vec::new();
    // K_1 is always available.
    let mut best = (0usize, vec![1u64]);
    complete_subpartitions(&adj, 0, n, 0, &mut blocks, &mut best);
    Some(family_bound(best.0, &best.1))
}

fn complete_subpartitions(
    adj: &[u64],
    v: usize,
    n: usize,
    assigned: u64,
    blocks: &mut Vec<u64>,
    best: &mut (usize, Vec<u64>),
) {
    if blocks.len() >= 2 {
        let value = block_formula(blocks);
        if value > best.0 {
            *best = (value, blocks.clone());
        }
    }
    if v == n {
        return;
    }
    // Each further vertex raises the formula by at most one.
    let optimistic = if blocks.len() >= 2 {
        block_formula(blocks)
    } else {
        blocks.len()
    };
    if optimistic + (n - v) <= best.0 {
        return;
    }
    for i in 0..blocks.len() {
        let others = assigned & !blocks[i];
        if adj[v] & others == others {
            blocks[i] |= 1 << v;
            complete_subpartitions(adj, v + 1, n, assigned | 1 << v, blocks, best);
            blocks[i] &= !(1 << v);
        }
    }
    if adj[v] & assigned == assigned {
        blocks.push(1 << v);
        complete_subpartitions(adj, v + 1, n, assigned | 1 << v, blocks, best);
        blocks.pop();
    }
    complete_subpartitions(adj, v + 1, n, assigned, blocks, best);
}

fn family_bound(dimension: usize, blocks: &[u64]) -> FamilyBound {
    let mut parts: Vec<Vec<usize>> = blocks
        .iter()
        .map(|&b| (0..64).filter(|&v| b >> v & 1 == 1).collect())
        .collect();
    parts.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    FamilyBound {
        dimension,
        spec: PartitionSpec::new(parts.iter().map(Vec::len).collect()).expect("non-empty parts"),
        parts,
    }
}

/// Part-size lists summing to `n`, each in descending order, listed with
/// larger first parts first.
pub fn integer_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, JoinSpec};

    fn spec(parts: &[usize]) -> PartitionSpec {
        PartitionSpec::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn formula_values() {
        assert_eq!(multipartite_dimension(&spec(&[2, 3])).unwrap(), 3);
        assert_eq!(multipartite_dimension(&spec(&[1; 5])).unwrap(), 4);
        assert_eq!(multipartite_dimension(&spec(&[3, 3])).unwrap(), 4);
        assert_eq!(multipartite_dimension(&spec(&[2, 2])).unwrap(), 2);
        assert_eq!(multipartite_dimension(&spec(&[3, 1])).unwrap(), 2);
        assert_eq!(multipartite_dimension(&spec(&[1])).unwrap(), 0);
        for a in 2..=8 {
            assert_eq!(multipartite_dimension(&spec(&vec![1; a])).unwrap(), a - 1);
        }
        assert!(matches!(
            multipartite_dimension(&spec(&[3])),
            Err(Error::FormulaNotApplicable(_))
        ));
    }

    #[test]
    fn adding_a_singleton_adds_one_once_two_large_parts_exist() {
        for parts in [vec![2, 2], vec![3, 2], vec![3, 3, 1], vec![5, 2, 2]] {
            let before = multipartite_dimension(&spec(&parts)).unwrap();
            let mut more = parts.clone();
            more.push(1);
            assert_eq!(multipartite_dimension(&spec(&more)).unwrap(), before + 1);
        }
    }

    #[test]
    fn classifier_examples() {
        let v = classify_multipartite_criticality(&spec(&[3, 3])).unwrap();
        assert!(v.is_critical);
        assert_eq!(v.rule, CriticalityRule::TriplePartsOnly);

        let v = classify_multipartite_criticality(&spec(&[2, 2, 2])).unwrap();
        assert!(!v.is_critical);
        assert_eq!(v.rule, CriticalityRule::PairsAndManyLargeParts);
        assert!(v.witness.unwrap().contains("size-2 part"));

        let v = classify_multipartite_criticality(&spec(&[4, 1])).unwrap();
        assert_eq!(
            (v.is_critical, v.rule),
            (false, CriticalityRule::PartAtLeastFour)
        );

        let v = classify_multipartite_criticality(&spec(&[1, 1])).unwrap();
        assert_eq!(
            (v.is_critical, v.rule),
            (false, CriticalityRule::SingleEdge)
        );

        assert!(classify_multipartite_criticality(&spec(&[3])).is_err());
    }

    #[test]
    fn classifier_named_families() {
        let cases: &[(&[usize], bool)] = &[
            (&[1, 1, 1], true),
            (&[1, 1, 1, 1, 1, 1, 1], true),
            (&[2, 2], true),
            (&[3, 1], true),
            (&[3, 2], true),
            (&[3, 3, 1, 1], true),
            (&[3, 3, 3], true),
            (&[2, 1], false),
            (&[2, 1, 1, 1], false),
            (&[3, 2, 1], false),
            (&[2, 2, 1], false),
            (&[3, 1, 1], false),
            (&[3, 3, 2], false),
            (&[5, 3], false),
        ];
        for (parts, critical) in cases {
            let v = classify_multipartite_criticality(&spec(parts)).unwrap();
            assert_eq!(v.is_critical, *critical, "{parts:?}");
        }
    }

    /// Witnesses for non-critical verdicts keep the dimension: an edge
    /// touching the deleted vertex (or one of the deleted edges) is then
    /// not critical, since `G - e` contains the reduced graph.
    #[test]
    fn non_critical_witnesses_preserve_dimension() {
        for total in 2..=9 {
            for parts in integer_partitions(total) {
                if parts.len() < 2 {
                    continue;
                }
                let s = spec(&parts);
                let v = classify_multipartite_criticality(&s).unwrap();
                let dim = multipartite_dimension(&s).unwrap();
                let g = build_multipartite(&s);
                let best_deletion = g
                    .edges()
                    .iter()
                    .map(|e| {
                        subgraph_lower_bound(&g.delete_edge(e.lo(), e.hi()).unwrap())
                            .unwrap()
                            .dimension
                    })
                    .max()
                    .unwrap();
                if v.is_critical {
                    assert!(best_deletion < dim, "{s}");
                } else if v.rule != CriticalityRule::SingleEdge {
                    assert_eq!(best_deletion, dim, "{s}");
                }
            }
        }
    }

    #[test]
    fn deletion_table_examples() {
        let rows =
            multipartite_deletion_table(&PartitionSpec::from_counts(1, 0, 2).unwrap()).unwrap();
        let b1b2 = rows.iter().find(|r| r.orbit.part_sizes == (3, 3)).unwrap();
        assert_eq!(
            b1b2.containing,
            PartitionSpec::from_counts(1, 3, 0).unwrap()
        );
        assert_eq!(b1b2.dimension, Some(4));

        // G(alpha,0,gamma) with alpha = 2, gamma = 2: the singleton edge drops to alpha + 2 gamma - 1.
        let rows =
            multipartite_deletion_table(&PartitionSpec::from_counts(2, 0, 2).unwrap()).unwrap();
        let a1a2 = rows.iter().find(|r| r.orbit.part_sizes == (1, 1)).unwrap();
        assert_eq!(a1a2.dimension, Some(5));
        assert_eq!(rows.len(), 3);

        let rows = multipartite_deletion_table(&spec(&[1, 1, 1])).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].dimension, Some(1));
        assert_eq!(rows[0].orbit.members.len(), 3);
    }

    #[test]
    fn deletion_rows_agree_with_classifier() {
        for total in 2..=7 {
            for parts in integer_partitions(total) {
                if parts.len() < 2 {
                    continue;
                }
                let s = spec(&parts);
                let dim = multipartite_dimension(&s).unwrap();
                let rows = multipartite_deletion_table(&s).unwrap();
                let critical = classify_multipartite_criticality(&s).unwrap().is_critical;
                // Formula bounds cannot always show a drop (K_{2,3} - e has
                // dimension 2 but only a 3-dimensional family supergraph).
                if critical {
                    assert!(rows.iter().all(|r| r.lower < dim), "{s}");
                } else {
                    assert!(rows.iter().any(|r| r.lower == dim), "{s}");
                }
                for r in &rows {
                    assert!(r.lower <= r.upper);
                    assert!(r.upper <= dim);
                }
            }
        }
    }

    #[test]
    fn recognition() {
        let g = build_multipartite(&spec(&[3, 2, 1]));
        let relabelled = g.relabel(&[5, 2, 0, 4, 1, 3]).unwrap();
        let (found, parts) = recognize_multipartite(&relabelled).unwrap();
        assert_eq!(found, spec(&[3, 2, 1]));
        assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), 6);
        assert!(recognize_multipartite(&Graph::cycle(5).unwrap()).is_none());
        assert!(recognize_multipartite(&Graph::path(4)).is_none());
        let c4 = recognize_multipartite(&Graph::cycle(4).unwrap()).unwrap().0;
        assert_eq!(c4, spec(&[2, 2]));
        let join = crate::graph::build_join_clique_cycle(&JoinSpec::new(2, 4).unwrap());
        assert_eq!(
            recognize_multipartite(&join).unwrap().0,
            spec(&[2, 2, 1, 1])
        );
        assert_eq!(
            recognize_multipartite(&Graph::empty(3)).unwrap().0,
            spec(&[3])
        );
    }

    #[test]
    fn family_bounds_bracket_known_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        let up = supergraph_upper_bound(&c5).unwrap();
        // C_5 sits inside K_{2,2,1}, dimension 1 + 2 = 3.
        assert_eq!(up.dimension, 3);
        let low = subgraph_lower_bound(&c5).unwrap();
        assert_eq!(low.dimension, 1);

        let k33 = build_multipartite(&spec(&[3, 3]));
        assert_eq!(supergraph_upper_bound(&k33).unwrap().dimension, 4);
        assert_eq!(subgraph_lower_bound(&k33).unwrap().dimension, 4);

        let h = k33.delete_edge(0, 3).unwrap();
        assert_eq!(supergraph_upper_bound(&h).unwrap().dimension, 3);
        assert_eq!(subgraph_lower_bound(&h).unwrap().dimension, 3);

        let star = Graph::star(3);
        let low = subgraph_lower_bound(&star).unwrap();
        assert_eq!(low.dimension, 2);
        assert!(is_isomorphic(&build_multipartite(&low.spec), &star));
        assert_eq!(subgraph_lower_bound(&Graph::empty(1)).unwrap().dimension, 0);
        assert_eq!(
            supergraph_upper_bound(&Graph::empty(3)).unwrap().dimension,
            1
        );
    }

    proptest::proptest! {
        #[test]
        fn family_bounds_are_ordered(n in 2usize..8, bits in proptest::prelude::any::<u32>()) {
            let mut pairs = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits >> (k % 32) & 1 == 1 {
                        pairs.push((a, b));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_pairs(n, &pairs).unwrap();
            let low = subgraph_lower_bound(&g).unwrap();
            let up = supergraph_upper_bound(&g).unwrap();
            proptest::prop_assert!(low.dimension <= up.dimension);
            proptest::prop_assert!(up.dimension < n);
            // The witnesses really are a subgraph and a supergraph.
            for (i, p) in low.parts.iter().enumerate() {
                for q in &low.parts[i + 1..] {
                    for &a in p {
                        for &b in q {
                            proptest::prop_assert!(g.has_edge(a, b));
                        }
                    }
                }
            }
            for p in &up.parts {
                for &a in p {
                    for &b in p {
                        proptest::prop_assert!(!g.has_edge(a, b));
                    }
                }
            }
        }
    }
}
