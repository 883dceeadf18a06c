use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;

use super::descent::{lbfgs, polish, Stress};
use super::SearchConfig;
use crate::geometry::{verify_embedding, Embedding};
use crate::graph::Graph;

/// Environment variable capping the number of restart threads.
pub const THREADS_ENV: &str = "DIMCRIT_THREADS";

const HOPS: usize = 20;
const SHAKE: f64 = 0.5;
const SOLVED: f64 = 1e-20;
/// Vertices closer than this after descent are treated as merged.
const MERGED: f64 = 1e-3;

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let available = std::thread::available_parallelism().map_or(1, |n| n.get());
        let threads = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&t| t > 0)
            .map_or(available, |t| t.min(available.max(1)));
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of restart `index` under `master`.
pub fn restart_seed(master: u64, index: usize) -> u64 {
    splitmix64(splitmix64(master) ^ (index as u64).wrapping_mul(0xD1B5_4A32_D192_ED03))
}

fn closest_pair(x: &[f64], d: usize) -> Option<(f64, usize, usize)> {
    let n = x.len() / d;
    let mut best: Option<(f64, usize, usize)> = None;
    for a in 0..n {
        for b in a + 1..n {
            let q: f64 = (0..d).map(|k| (x[a * d + k] - x[b * d + k]).powi(2)).sum();
            if best.is_none_or(|(m, _, _)| q < m) {
                best = Some((q, a, b));
            }
        }
    }
    best.map(|(q, a, b)| (q.sqrt(), a, b))
}

/// One restart: a random start, then up to [`HOPS`] repairs. A start stuck
/// at positive stress is shaken and kept only if the shake helps; a
/// zero-stress drawing that merges two vertices (a folded cycle, say) has
/// one of the pair thrown to a fresh random position.
fn attempt(
    g: &Graph,
    stress: &Stress,
    d: usize,
    cfg: &SearchConfig,
    index: usize,
) -> Option<Embedding> {
    let mut rng = ChaCha8Rng::seed_from_u64(restart_seed(cfg.seed, index));
    let start = Normal::new(0.0, cfg.scale).expect("positive scale");
    let shake = Normal::new(0.0, SHAKE).expect("positive");
    let n = g.vertex_count();
    let mut x: Vec<f64> = (0..n * d).map(|_| start.sample(&mut rng)).collect();
    let mut f = lbfgs(stress, &mut x, cfg.max_iterations);
    for _ in 0..HOPS {
        if f > SOLVED {
            let mut y: Vec<f64> = x.iter().map(|v| v + shake.sample(&mut rng)).collect();
            let fy = lbfgs(stress, &mut y, cfg.max_iterations);
            if fy < f {
                x = y;
                f = fy;
            }
            continue;
        }
        match closest_pair(&x, d) {
            Some((gap, a, b)) if gap < MERGED => {
                let v = if rng.random::<bool>() { a } else { b };
                for k in 0..d {
                    x[v * d + k] = start.sample(&mut rng);
                }
                f = lbfgs(stress, &mut x, cfg.max_iterations);
            }
            _ => break,
        }
    }
    // Only near-solutions are worth the dense polish.
    if f > 4.0 * cfg.tolerance * stress.edges.len() as f64 {
        return None;
    }
    polish(stress, &mut x);
    let emb = Embedding::from_flat(d, n, &x).ok()?;
    let report = verify_embedding(g, &emb, cfg.tolerance).ok()?;
    report.passed.then_some(emb)
}

/// Multi-start search for a unit-distance drawing of `g` in R^d.
///
/// Restarts run in batches on the search pool; the lowest-index success
/// wins, so the answer does not depend on the number of threads.
pub fn find_embedding(g: &Graph, d: usize, cfg: &SearchConfig) -> Option<Embedding> {
    let n = g.vertex_count();
    if n <= 1 {
        return Some(Embedding::new(d, vec![vec![0.0; d]; n]).expect("zero points"));
    }
    if d == 0 {
        return None;
    }
    let stress = Stress {
        d,

        edges: g.edges().iter().map(|e| e.endpoints()).collect(),
    };
    let pool = pool();
    let batch = pool.current_num_threads().max(1);
    let mut start = 0;
    while start < cfg.restarts {
        let end = (start + batch).min(cfg.restarts);
        let found = if batch == 1 {
            attempt(g, &stress, d, cfg, start)
        } else {
            let results: Vec<Option<Embedding>> = pool.install(|| {
                (start..end)
                    .into_par_iter()
                    .map(|i| attempt(g, &stress, d, cfg, i))
                    .collect()
            });
            results.into_iter().flatten().next()
        };
        if found.is_some() {
            return found;
        }
        start = end;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_multipartite, PartitionSpec};

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn seeds_differ_and_repeat() {
        assert_eq!(restart_seed(7, 3), restart_seed(7, 3));
        assert_ne!(restart_seed(7, 3), restart_seed(7, 4));
        assert_ne!(restart_seed(7, 3), restart_seed(8, 3));
    }

    #[test]
    fn small_cases() {
        let c4 = Graph::cycle(4).unwrap();
        let emb = find_embedding(&c4, 2, &cfg()).unwrap();
        assert!(verify_embedding(&c4, &emb, 1e-7).unwrap().passed);
        assert!(find_embedding(&Graph::complete(4), 2, &cfg()).is_none());
        assert!(find_embedding(&Graph::complete(2), 0, &cfg()).is_none());
        assert_eq!(
            find_embedding(&Graph::empty(1), 0, &cfg()).unwrap().len(),
            1
        );
        assert!(find_embedding(&Graph::empty(3), 1, &cfg()).is_some());
    }

    #[test]
    fn k23_dimension_three() {
        let g = build_multipartite(&PartitionSpec::new(vec![2, 3]).unwrap());
        assert!(find_embedding(&g, 3, &cfg()).is_some());
        assert!(find_embedding(&g, 2, &cfg()).is_none());
    }

    #[test]
    fn deterministic_output() {
        let g = Graph::wheel(5).unwrap();
        let a = find_embedding(&g, 3, &cfg()).unwrap();
        let b = find_embedding(&g, 3, &cfg()).unwrap();
        assert_eq!(a, b);
    }
}
