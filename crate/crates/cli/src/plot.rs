//! Plain-text dumps of embeddings for external plotting tools.

use std::fmt::Write;

use dimcrit::geometry::Embedding;
use dimcrit::graph::Edge;
use dimcrit::{Error, Result};

/// Parses an axis pair written `i,j`.
pub fn parse_axes(text: &str) -> Option<(usize, usize)> {
    let (a, b) = text.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Projects `emb` onto coordinates `axes` and writes one `x y` row per
/// vertex, a blank line, then one `u v` row per edge.
pub fn emit_plot_data(emb: &Embedding, axes: (usize, usize), edges: &[Edge]) -> Result<String> {
    let (i, j) = axes;
    let d = emb.dimension();
    if i >= d || j >= d {
        return Err(Error::OutOfRange(format!(
            "projection ({i}, {j}) needs coordinates below {d}"
        )));
    }
    if let Some(e) = edges.iter().find(|e| e.hi() >= emb.len()) {
        return Err(Error::MissingVertex(e.hi()));
    }
    let mut out = format!("# x{i} x{j}\n");
    for p in emb.points() {
        writeln!(out, "{} {}", p[i], p[j]).unwrap();
    }
    out.push_str("\n# edges\n");
    for e in edges {
        writeln!(out, "{} {}", e.lo(), e.hi()).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dimcrit::geometry::{embed_join_clique_cycle, regular_simplex};
    use dimcrit::graph::{build_join_clique_cycle, Graph, JoinSpec};

    fn rows(text: &str) -> Vec<(f64, f64)> {
        text.split("\n\n")
            .next()
            .unwrap()
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| {
                let (x, y) = l.split_once(' ').unwrap();
                (x.parse().unwrap(), y.parse().unwrap())
            })
            .collect()
    }

    fn edge_rows(text: &str) -> usize {
        text.split("\n\n")
            .nth(1)
            .unwrap()
            .lines()
            .filter(|l| !l.starts_with('#'))
            .count()
    }

    #[test]
    fn hexagon() {
        let g = Graph::cycle(6).unwrap();
        let points = (0..6)
            .map(|k| {
                let t = k as f64 * std::f64::consts::PI / 3.0;
                vec![t.cos(), t.sin()]
            })
            .collect();
        let emb = Embedding::new(2, points).unwrap();
        let text = emit_plot_data(&emb, (0, 1), g.edges()).unwrap();
        let r = rows(&text);
        assert_eq!(r.len(), 6);
        assert_eq!(r[0], (1.0, 0.0));
        assert_eq!(edge_rows(&text), 6);
    }

    #[test]
    fn simplex() {
        let emb = regular_simplex(3);
        let text = emit_plot_data(&emb, (0, 1), Graph::complete(3).edges()).unwrap();
        let r = rows(&text);
        assert_eq!(r.len(), 3);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let d = ((r[a].0 - r[b].0).powi(2) + (r[a].1 - r[b].1).powi(2)).sqrt();
            assert!((d - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn join_projection_matches_coordinates() {
        let spec = JoinSpec::new(2, 6).unwrap();
        let emb = embed_join_clique_cycle(&spec).unwrap();
        let g = build_join_clique_cycle(&spec);
        let text = emit_plot_data(&emb, (2, 3), g.edges()).unwrap();
        let r = rows(&text);
        assert_eq!(r.len(), 8);
        for (v, &(x, y)) in r.iter().enumerate() {
            assert_eq!(x, emb.point(v)[2]);
            assert_eq!(y, emb.point(v)[3]);
        }
        assert_eq!(edge_rows(&text), g.edge_count());
    }

    #[test]
    fn bad_axes() {
        let emb = regular_simplex(3);
        assert!(emit_plot_data(&emb, (0, 2), &[]).is_err());
        assert_eq!(parse_axes("2, 3"), Some((2, 3)));
        assert_eq!(parse_axes("2"), None);
        assert_eq!(parse_axes("a,1"), None);
    }
}
