//! Coordinates for unit-distance drawings: the embedding type and its
//! checker, exact rational-angle arithmetic, regular simplices, and the
//! sphere and circle constructions for joins `K_n + C_m`.

mod angle;
mod join;
mod simplex;
mod sphere;

pub use angle::{
    cycle_on_circle_feasible, parse_rational, rational_arcsin_sqrt, CircleCycle, Obstruction,
    RationalAngle,
};
pub use join::{embed_join_clique_cycle, embed_join_minus_edge, join_cycle_radius};
pub use simplex::{regular_simplex, simplex_circumradius};
pub use sphere::{apex_point, apex_points, embed_cycle_on_sphere, SphereSpec};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Residual accepted from the closed-form constructions.
pub const CONSTRUCTION_TOL: f64 = 1e-9;
/// Default edge-length tolerance for [`verify_embedding`].
pub const VERIFY_TOL: f64 = 1e-7;
/// Two vertices closer than this count as the same point.
pub const SEPARATION_TOL: f64 = 1e-6;
/// Discriminants below this (in magnitude) are treated as zero.
pub const DISCRIMINANT_FLOOR: f64 = 1e-12;

/// One point of R^d per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    dimension: usize,
    points: Vec<Vec<f64>>,
}

impl Embedding {
    pub fn new(dimension: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if let Some((i, p)) = points
            .iter()
            .enumerate()
            .find(|(_, p)| p.len() != dimension)
        {
            return Err(Error::DimensionMismatch(format!(
                "point {i} has {} coordinates, expected {dimension}",
                p.len()
            )));
        }
        if points.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::OutOfRange("non-finite coordinate".into()));
        }
        Ok(Embedding { dimension, points })
    }

    /// Builds `count` points from a flat row-major buffer.
    pub fn from_flat(dimension: usize, count: usize, flat: &[f64]) -> Result<Self> {
        if flat.len() != dimension * count {
            return Err(Error::DimensionMismatch("flat buffer length".into()));
        }
        let points = (0..count)
            .map(|v| flat[v * dimension..(v + 1) * dimension].to_vec())
            .collect();
        Self::new(dimension, points)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, v: usize) -> &[f64] {
        &self.points[v]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        distance(&self.points[a], &self.points[b])
    }

    /// Reorders points so that vertex `v` of the result is old vertex `order[v]`.
    pub fn reorder(&self, order: &[usize]) -> Self {
        Embedding {
            dimension: self.dimension,
            points: order.iter().map(|&v| self.points[v].clone()).collect(),
        }
    }

    /// Pads every point with zeros up to `dimension` coordinates.
    pub fn lifted(&self, dimension: usize) -> Self {
        assert!(dimension >= self.dimension);
        Embedding {
            dimension,
            points: self
                .points
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q.resize(dimension, 0.0);
                    q
                })
                .collect(),
        }
    }
}

pub(crate) fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Seventeen significant digits: enough to round-trip any `f64`.
fn exact_decimal(x: f64) -> Box<RawValue> {
    RawValue::from_string(format!("{x:.16e}")).expect("scientific notation is valid JSON")
}

impl Serialize for Embedding {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let points: Vec<Vec<Box<RawValue>>> = self
            .points
            .iter()
            .map(|p| p.iter().map(|&x| exact_decimal(x)).collect())
            .collect();
        let mut st = s.serialize_struct("Embedding", 2)?;
        st.serialize_field("d", &self.dimension)?;
        st.serialize_field("points", &points)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Embedding {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            d: usize,
            points: Vec<Vec<f64>>,
        }
        let raw = Raw::deserialize(d)?;
        Embedding::new(raw.d, raw.points).map_err(serde::de::Error::custom)
    }
}

/// Outcome of checking an embedding against a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_edge_residual: f64,
    pub worst_edge: Option<Edge>,
    /// `None` when there are fewer than two vertices.
    pub min_separation: Option<f64>,
    pub closest_pair: Option<(usize, usize)>,
    pub tolerance: f64,
    pub separation_tolerance: f64,
    pub edges_ok: bool,
    pub separation_ok: bool,
    pub passed: bool,
}

/// Checks that every edge has length 1 within `tol` and that all vertices
/// sit at pairwise distinct points.
pub fn verify_embedding(g: &Graph, emb: &Embedding, tol: f64) -> Result<VerificationReport> {
    if emb.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "embedding has {} points for {} vertices",
            emb.len(),
            g.vertex_count()
        )));
    }
    let mut max_edge_residual = 0.0f64;
    let mut worst_edge = None;
    for &e in g.edges() {
        let r = (emb.distance(e.lo(), e.hi()) - 1.0).abs();
        if worst_edge.is_none() || r > max_edge_residual {
            max_edge_residual = r;
            worst_edge = Some(e);
        }
    }
    let mut min_separation: Option<f64> = None;
    let mut closest_pair = None;
    for a in 0..emb.len() {
        for b in a + 1..emb.len() {
            let d = emb.distance(a, b);
            if min_separation.is_none_or(|m| d < m) {
                min_separation = Some(d);
                closest_pair = Some((a, b));
            }
        }
    }
    let edges_ok = max_edge_residual <= tol;
    let separation_ok = min_separation.is_none_or(|m| m > SEPARATION_TOL);
    Ok(VerificationReport {
        max_edge_residual,
        worst_edge,
        min_separation,
        closest_pair,
        tolerance: tol,
        separation_tolerance: SEPARATION_TOL,
        edges_ok,
        separation_ok,
        passed: edges_ok && separation_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(scale_last: f64) -> Embedding {
        let h = 3f64.sqrt() / 2.0;
        Embedding::new(
            2,
            vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![0.5 * scale_last, h * scale_last],
            ],
        )
        .unwrap()
    }

    #[test]
    fn unit_triangle_passes() {
        let report = verify_embedding(&Graph::complete(3), &triangle(1.0), 1e-9).unwrap();
        assert!(report.passed);
        assert!(report.max_edge_residual < 1e-15);
    }

    #[test]
    fn stretched_edge_fails() {
        let emb = Embedding::new(
            2,
            vec![
                vec![0.0, 0.0],
                vec![1.01, 0.0],
                vec![0.5, 3f64.sqrt() / 2.0],
            ],
        )
        .unwrap();
        let report = verify_embedding(&Graph::complete(3), &emb, 1e-9).unwrap();
        assert!(!report.passed);
        assert!((report.max_edge_residual - 0.01).abs() < 1e-12);
        assert_eq!(report.worst_edge, Some(Edge::new(0, 1).unwrap()));
    }

    #[test]
    fn coincident_points_fail() {
        let emb = Embedding::new(1, vec![vec![0.0], vec![1.0], vec![1.0]]).unwrap();
        let g = Graph::from_pairs(3, &[(0, 1), (0, 2)]).unwrap();
        let report = verify_embedding(&g, &emb, 1e-9).unwrap();
        assert!(report.edges_ok);
        assert!(!report.separation_ok);
        assert_eq!(report.closest_pair, Some((1, 2)));
    }

    #[test]
    fn size_mismatches_are_errors() {
        assert!(Embedding::new(2, vec![vec![0.0]]).is_err());
        let emb = Embedding::new(1, vec![vec![0.0]]).unwrap();
        assert!(verify_embedding(&Graph::complete(2), &emb, 1e-9).is_err());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let emb = Embedding::new(
            3,
            vec![
                vec![0.1, -1.0 / 3.0, 2f64.sqrt()],
                vec![0.0, -0.0, 1e-300],
                vec![f64::MAX, f64::MIN_POSITIVE, 123456.789],
            ],
        )
        .unwrap();
        let text = serde_json::to_string(&emb).unwrap();
        assert!(text.starts_with(r#"{"d":3,"points":[["#));
        let back: Embedding = serde_json::from_str(&text).unwrap();
        for (p, q) in emb.points().iter().zip(back.points()) {
            for (x, y) in p.iter().zip(q) {
                assert_eq!(x.to_bits() & !(1 << 63), y.to_bits() & !(1 << 63));
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn zero_dimensional_embedding() {
        let emb = Embedding::from_flat(0, 2, &[]).unwrap();
        assert_eq!(emb.len(), 2);
        assert!(Embedding::from_flat(2, 2, &[0.0; 3]).is_err());
        let one = Embedding::new(0, vec![vec![]]).unwrap();
        assert!(
            verify_embedding(&Graph::empty(1), &one, 1e-9)
                .unwrap()
                .passed
        );
        let text = serde_json::to_string(&one).unwrap();
        assert_eq!(text, r#"{"d":0,"points":[[]]}"#);
    }
}
