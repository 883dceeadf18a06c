use super::Embedding;

/// Distance from the centroid of a unit-edge regular simplex on `n`
/// vertices to each vertex: `sqrt((n-1) / (2n))`.
pub fn simplex_circumradius(n: usize) -> f64 {
    assert!(n >= 1);
    ((n - 1) as f64 / (2 * n) as f64).sqrt()
}

/// `n` points of R^(n-1) at mutual distance 1, centred at the origin.
///
/// Vertex `i` is `e_i / sqrt(2)` written in the Helmert basis of the
/// hyperplane orthogonal to `(1, …, 1)`, so every coordinate comes from a
/// single closed-form expression.
pub fn regular_simplex(n: usize) -> Embedding {
    assert!(n >= 1, "a simplex needs at least one vertex");
    let d = n - 1;
    let mut points = vec![vec![0.0; d]; n];
    for k in 1..=d {
        // Basis row k: k ones, then -k, normalised by sqrt(k (k + 1)).
        let norm = ((2 * k * (k + 1)) as f64).sqrt();
        for p in points.iter_mut().take(k) {
            p[k - 1] = 1.0 / norm;
        }
        points[k][k - 1] = -(k as f64) / norm;
    }
    Embedding::new(d, points).expect("rows have n - 1 coordinates")
}
