//! Local minimisation of the unit-edge stress
//! `f(x) = Σ_{uv ∈ E} (‖x_u − x_v‖² − 1)²` over flat row-major coordinates.

use nalgebra::{DMatrix, DVector};

const LBFGS_MEMORY: usize = 8;
const ARMIJO_C1: f64 = 1e-4;
const MAX_BACKTRACKS: usize = 50;
const GRADIENT_FLOOR: f64 = 1e-12;
const VALUE_FLOOR: f64 = 1e-24;
const POLISH_ITERATIONS: usize = 200;
const STALL_RELATIVE: f64 = 1e-13;
const STALL_ITERATIONS: usize = 20;

/// Edge list of the graph being drawn in R^d.
#[derive(Debug, Clone)]
pub(crate) struct Stress {
    pub d: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Stress {
    pub fn value(&self, x: &[f64]) -> f64 {
        self.edges
            .iter()
            .map(|&(u, v)| {
                let r = self.squared_distance(x, u, v) - 1.0;
                r * r
            })
            .sum()
    }

    /// Value and gradient; the gradient of one term is
    /// `4 (‖x_u − x_v‖² − 1)(x_u − x_v)` at `u` and its negative at `v`.
    pub fn value_and_gradient(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        let d = self.d;
        grad.iter_mut().for_each(|g| *g = 0.0);
        let mut f = 0.0;
        for &(u, v) in &self.edges {
            let r = self.squared_distance(x, u, v) - 1.0;
            f += r * r;
            let c = 4.0 * r;
            for k in 0..d {
                let diff = x[u * d + k] - x[v * d + k];
                grad[u * d + k] += c * diff;
                grad[v * d + k] -= c * diff;
            }
        }
        f
    }

    fn squared_distance(&self, x: &[f64], u: usize, v: usize) -> f64 {
        let d = self.d;
        (0..d)
            .map(|k| {
                let diff = x[u * d + k] - x[v * d + k];
                diff * diff
            })
            .sum()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Limited-memory BFGS with Armijo backtracking. Stops on a gradient norm
/// below 1e-12, a value below 1e-24, a failed line search, 20 steps in a
/// row that gain less than 1e-13 relative, or the iteration cap. Returns
/// the final value.
pub(crate) fn lbfgs(stress: &Stress, x: &mut [f64], max_iterations: usize) -> f64 {
    minimize(|x, g| stress.value_and_gradient(x, g), x, max_iterations)
}

fn minimize<F>(mut objective: F, x: &mut [f64], max_iterations: usize) -> f64
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    let len = x.len();
    let mut grad = vec![0.0; len];
    let mut f = objective(x, &mut grad);
    let mut history: Vec<(Vec<f64>, Vec<f64>, f64)> = Vec::with_capacity(LBFGS_MEMORY);
    let mut dir = vec![0.0; len];
    let mut trial = vec![0.0; len];
    let mut trial_grad = vec![0.0; len];
    let mut alpha = [0.0; LBFGS_MEMORY];

    let mut stalled = 0;
    for _ in 0..max_iterations {
        let gnorm = dot(&grad, &grad).sqrt();
        if gnorm < GRADIENT_FLOOR || f <= VALUE_FLOOR {
            break;
        }
        // Two-loop recursion.
        dir.copy_from_slice(&grad);
        for (i, (s, y, rho)) in history.iter().enumerate().rev() {
            alpha[i] = rho * dot(s, &dir);
            dir.iter_mut()
                .zip(y)
                .for_each(|(q, yk)| *q -= alpha[i] * yk);
        }
        let scale = match history.last() {
            Some((s, y, _)) => dot(s, y) / dot(y, y),
            None => 1.0 / gnorm.max(1.0),
        };
        dir.iter_mut().for_each(|q| *q *= scale);
        for (i, (s, y, rho)) in history.iter().enumerate() {
            let beta = rho * dot(y, &dir);
            dir.iter_mut()
                .zip(s)
                .for_each(|(r, sk)| *r += (alpha[i] - beta) * sk);
        }
        dir.iter_mut().for_each(|q| *q = -*q);
        let mut slope = dot(&grad, &dir);
        if slope >= 0.0 {
            history.clear();
            dir.iter_mut()
                .zip(&grad)
                .for_each(|(q, g)| *q = -g / gnorm.max(1.0));
            slope = dot(&grad, &dir);
        }

        let mut step = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_BACKTRACKS {
            trial
                .iter_mut()
                .zip(x.iter().zip(&dir))
                .for_each(|(t, (xi, di))| *t = xi + step * di);
            let ft = objective(&trial, &mut trial_grad);
            if ft < f && ft <= f + ARMIJO_C1 * step * slope {
                accepted = Some(ft);
                break;
            }
            step *= 0.5;
        }
        let Some(ft) = accepted else { break };
        // Decrease lost in rounding: the gradient test can no longer fire.
        if f - ft <= STALL_RELATIVE * f {
            stalled += 1;
            if stalled >= STALL_ITERATIONS {
                f = ft;
                x.copy_from_slice(&trial);
                break;
            }
        } else {
            stalled = 0;
        }

        let s: Vec<f64> = trial.iter().zip(x.iter()).map(|(t, xi)| t - xi).collect();
        let y: Vec<f64> = trial_grad.iter().zip(&grad).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-18 * dot(&y, &y).sqrt() * dot(&s, &s).sqrt() && sy > 0.0 {
            if history.len() == LBFGS_MEMORY {
                history.remove(0);
            }
            history.push((s, y, 1.0 / sy));
        }
        x.copy_from_slice(&trial);
        grad.copy_from_slice(&trial_grad);
        f = ft;
    }
    f
}

/// Levenberg–Marquardt on the residuals `‖x_u − x_v‖² − 1`, run until no
/// step reduces the stress. Near-solutions that only close up by merging
/// two vertices collapse here instead of stalling at a small residual.
pub(crate) fn polish(stress: &Stress, x: &mut [f64]) -> f64 {
    let (d, len) = (stress.d, x.len());
    let m = stress.edges.len();
    let mut f = stress.value(x);
    if m == 0 || len == 0 {
        return f;
    }
    let mut lambda = 1e-9;
    let mut trial = vec![0.0; len];
    for _ in 0..POLISH_ITERATIONS {
        if f == 0.0 {
            break;
        }
        let mut jac = DMatrix::<f64>::zeros(m, len);
        let mut res = DVector::<f64>::zeros(m);
        for (row, &(u, v)) in stress.edges.iter().enumerate() {
            res[row] = stress.squared_distance(x, u, v) - 1.0;
            for k in 0..d {
                let diff = 2.0 * (x[u * d + k] - x[v * d + k]);
                jac[(row, u * d + k)] = diff;
                jac[(row, v * d + k)] = -diff;
            }
        }
        let jtj = jac.transpose() * &jac;
        let rhs = -(jac.transpose() * res);
        let mut improved = false;
        while lambda < 1e12 {
            let mut a = jtj.clone();
            for i in 0..len {
                a[(i, i)] += lambda * (1.0 + jtj[(i, i)]);
            }
            let Some(chol) = a.cholesky() else {
                lambda *= 10.0;
                continue;
            };
            let step = chol.solve(&rhs);
            trial
                .iter_mut()
                .enumerate()
                .for_each(|(i, t)| *t = x[i] + step[i]);
            let ft = stress.value(&trial);
            if ft < f {
                x.copy_from_slice(&trial);
                f = ft;
                lambda = (lambda / 10.0).max(1e-15);
                improved = true;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Stress {
        Stress {
            d: 2,
            edges: vec![(0, 1), (0, 2), (1, 2)],
        }
    }

    /// Central differences against the analytic gradient.
    #[test]
    fn gradient_matches_finite_differences() {
        let s = Stress {
            d: 3,
            edges: vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
        };
        let x: Vec<f64> = (0..12)
            .map(|i| ((i * 7 % 5) as f64 - 2.0) * 0.37 + 0.01 * i as f64)
            .collect();
        let mut g = vec![0.0; 12];
        s.value_and_gradient(&x, &mut g);
        let h = 1e-6;
        for i in 0..12 {
            let mut plus = x.clone();
            let mut minus = x.clone();
            plus[i] += h;
            minus[i] -= h;
            let fd = (s.value(&plus) - s.value(&minus)) / (2.0 * h);
            assert!((fd - g[i]).abs() < 1e-6, "coordinate {i}: {fd} vs {}", g[i]);
        }
    }

    #[test]
    fn triangle_converges() {
        let s = triangle();
        let mut x = vec![0.0, 0.0, 2.0, 0.1, 0.3, 1.5];
        let f = lbfgs(&s, &mut x, 1000);
        assert!(f < 1e-20, "{f}");
        let f = polish(&s, &mut x);
        assert!(f < 1e-28, "{f}");
    }

    #[test]
    fn polish_keeps_a_rhombus_apart() {
        // Unit rhombus 0-1-2-3 with the short diagonal 0-2.
        let s = Stress {
            d: 2,
            edges: vec![(0, 1), (1, 2), (0, 3), (2, 3), (0, 2)],
        };
        let h = 3f64.sqrt() / 2.0;
        let mut x = vec![0.0, 0.0, 0.5, h + 1e-4, 1.0, 0.0, 0.5, -h];
        let f = polish(&s, &mut x);
        assert!(f < 1e-26);
        assert!((x[3] - x[7]).abs() > 1.0);
    }
}
