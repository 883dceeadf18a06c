//! Unit-edge cycles drawn on a 2-sphere in R^3.

use nalgebra::Vector3;

use super::{Embedding, CONSTRUCTION_TOL, DISCRIMINANT_FLOOR, SEPARATION_TOL};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereSpec {
    pub center: Vector3<f64>,
    pub radius: f64,
}

impl SphereSpec {
    pub fn new(center: Vector3<f64>, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::OutOfRange(format!("sphere radius {radius}")));
        }
        Ok(SphereSpec { center, radius })
    }

    pub fn centered(radius: f64) -> Result<Self> {
        Self::new(Vector3::zeros(), radius)
    }

    fn check_on(&self, p: &Vector3<f64>) -> Result<()> {
        let off = ((p - self.center).norm() - self.radius).abs();
        if off > CONSTRUCTION_TOL {
            return Err(Error::Degenerate(format!(
                "point is {off:e} off the sphere"
            )));
        }
        Ok(())
    }
}

/// Both points of the sphere at distance 1 from `p1` and `p2`.
///
/// The first returned point lies on the side of `(p1 - c) × (p2 - c)`.
/// Requires `0 < |p1 - p2| <= 1`; fails with the discriminant when the
/// three constraint spheres do not meet.
pub fn apex_points(
    sphere: &SphereSpec,
    p1: &Vector3<f64>,
    p2: &Vector3<f64>,
) -> Result<[Vector3<f64>; 2]> {
    sphere.check_on(p1)?;
    sphere.check_on(p2)?;
    let chord = (p1 - p2).norm();
    if chord <= SEPARATION_TOL {
        return Err(Error::Degenerate("apex of coincident points".into()));
    }
    if chord > 1.0 + CONSTRUCTION_TOL {
        return Err(Error::Degenerate(format!("chord {chord} exceeds 1")));
    }
    let q1 = p1 - sphere.center;
    let q2 = p2 - sphere.center;
    let r2 = sphere.radius * sphere.radius;
    // |p3 - p_i|² = 1 with |p3 - c|² = r² gives (p3 - c)·q_i = r² - 1/2.
    let k = r2 - 0.5;
    let (n1, n2, g) = (q1.norm_squared(), q2.norm_squared(), q1.dot(&q2));
    let det = n1 * n2 - g * g;
    let normal = q1.cross(&q2);
    if det <= DISCRIMINANT_FLOOR || normal.norm() <= DISCRIMINANT_FLOOR {
        return Err(Error::Degenerate(
            "points are collinear with the centre".into(),
        ));
    }
    let a = k * (n2 - g) / det;
    let b = k * (n1 - g) / det;
    let base = q1 * a + q2 * b;
    let discriminant = r2 - base.norm_squared();
    if discriminant < -DISCRIMINANT_FLOOR {
        return Err(Error::NoApex { discriminant });
    }
    let offset = normal.normalize() * discriminant.max(0.0).sqrt();
    Ok([sphere.center + base + offset, sphere.center + base - offset])
}

/// The apex on the `(p1 - c) × (p2 - c)` side.
pub fn apex_point(
    sphere: &SphereSpec,
    p1: &Vector3<f64>,
    p2: &Vector3<f64>,
) -> Result<Vector3<f64>> {
    apex_points(sphere, p1, p2).map(|[up, _]| up)
}

/// Picks the apex on the preferred side unless it lands on a point already
/// placed, in which case the mirror solution is used.
fn place_apex(
    sphere: &SphereSpec,
    p1: &Vector3<f64>,
    p2: &Vector3<f64>,
    prefer_up: bool,
    placed: &[Vector3<f64>],
) -> Result<Vector3<f64>> {
    let [up, down] = apex_points(sphere, p1, p2)?;
    let (first, second) = if prefer_up { (up, down) } else { (down, up) };
    let clashes = |p: &Vector3<f64>| placed.iter().any(|q| (p - q).norm() < SEPARATION_TOL);
    if !clashes(&first) {
        Ok(first)
    } else if !clashes(&second) {
        Ok(second)
    } else {
        Err(Error::Degenerate(
            "both apex solutions coincide with placed vertices".into(),
        ))
    }
}

/// Odd cycle: anchors `w_1, w_3, …, w_m` on the equator, `w_1` and `w_m` a
/// unit chord apart with the rest evenly spaced on the short arc between
/// them; apexes fill the even positions, alternating hemispheres.
fn odd_cycle(m: usize, sphere: &SphereSpec) -> Result<Vec<Vector3<f64>>> {
    debug_assert!(m % 2 == 1 && m >= 3);
    let r = sphere.radius;
    let span = 2.0 * (1.0 / (2.0 * r)).asin();
    let anchors = m.div_ceil(2);
    let anchor = |j: usize| {
        let phi = span * j as f64 / (anchors - 1) as f64;
        Vector3::new(r * phi.cos(), r * phi.sin(), 0.0)
    };
    let mut cycle: Vec<Vector3<f64>> = Vec::with_capacity(m);
    let anchor_points: Vec<Vector3<f64>> = (0..anchors).map(anchor).collect();
    let mut placed = anchor_points.clone();
    for j in 0..anchors {
        cycle.push(anchor_points[j]);
        if j + 1 < anchors {
            let apex = place_apex(
                sphere,
                &anchor_points[j],
                &anchor_points[j + 1],
                j % 2 == 0,
                &placed,
            )?;
            placed.push(apex);
            cycle.push(apex);
        }
    }
    Ok(cycle)
}

/// Unit-edge drawing of `C_m` on the origin-centred sphere of radius `r`,
/// with `r` in `(sqrt(2)/2, 1)`. Points come back in cycle order.
///
/// Even `m` reuses the odd construction for `C_{m-1}` and replaces its
/// direct unit chord `w_{m-1} w_1` by a detour through one more apex.
pub fn embed_cycle_on_sphere(m: usize, r: f64) -> Result<Embedding> {
    if m < 3 {
        return Err(Error::OutOfRange(format!("cycle length {m} is below 3")));
    }
    if !(r > std::f64::consts::FRAC_1_SQRT_2 && r < 1.0) {
        return Err(Error::OutOfRange(format!(
            "sphere radius {r} outside (sqrt(2)/2, 1)"
        )));
    }
    let sphere = SphereSpec::centered(r)?;
    let cycle = if m % 2 == 1 {
        odd_cycle(m, &sphere)?
    } else {
        let mut cycle = odd_cycle(m - 1, &sphere)?;
        let gaps = (m - 1) / 2;
        let last = *cycle.last().expect("non-empty");
        let detour = place_apex(&sphere, &last, &cycle[0], gaps.is_multiple_of(2), &cycle)?;
        cycle.push(detour);
        cycle
    };
    Embedding::new(3, cycle.iter().map(|p| vec![p.x, p.y, p.z]).collect())
}
