//! Random graph sampling for tests and benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Erdős–Rényi G(n, p): each pair becomes an edge independently with
/// probability `p`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("sampled edges are simple")
}

/// Deterministic G(n, p) from a seed.
pub fn gnp_seeded(n: usize, p: f64, seed: u64) -> Graph {
    gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_is_reproducible() {
        let a = gnp_seeded(30, 0.3, 7);
        let b = gnp_seeded(30, 0.3, 7);
        assert_eq!(a, b);
        assert_eq!(a.vertex_count(), 30);
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp_seeded(10, 0.0, 1).edge_count(), 0);
        assert_eq!(gnp_seeded(10, 1.0, 1).edge_count(), 45);
    }
}
