//! Seeded, reproducible random graph generators for test corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::outerplanar::OuterplanarEmbedding;
use super::Graph;
use crate::error::{Error, Result};

/// Uniform random labelled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::parameter("tree needs n >= 1"));
    }
    if n == 1 {
        return Graph::from_edges(1, &[]);
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();

    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // standard Prüfer decoding with a pointer over the smallest leaf
    let mut ptr = 0;
    let mut leaf = usize::MAX;
    for &v in &seq {
        if leaf == usize::MAX {
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            leaf = usize::MAX;
            ptr += 1;
        }
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    assert_eq!(remaining.len(), 2);
    edges.push((remaining[0], remaining[1]));
    let g = Graph::from_edges(n, &edges)?;
    debug_assert!(g.is_connected() && g.edge_count() == n - 1);
    Ok(g)
}

/// Random connected graph: G(n, p) edge sampling, rejected until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::parameter("random connected graph needs n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::parameter("edge probability must be in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::parameter(format!(
        "no connected sample found for n={n}, p={p} (p too small?)"
    )))
}

/// Uniform random maximal outerplanar graph on `n >= 3` vertices: a uniform
/// triangulation of the convex polygon 0-1-...-(n-1), so the result has
/// exactly `2n - 3` edges.
pub fn random_maximal_outerplanar(
    n: usize,
    seed: u64,
) -> Result<(Graph, OuterplanarEmbedding)> {
    if n < 3 {
        return Err(Error::parameter("maximal outerplanar generator needs n >= 3"));
    }
    if n > 35 {
        return Err(Error::parameter(
            "maximal outerplanar generator supports n <= 35 (exact Catalan weights)",
        ));
    }
    let catalan = catalan_table(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chords = Vec::new();
    // Recursively triangulate the range of polygon positions [lo, hi]; the
    // boundary edge (lo, hi) picks its triangle apex with Catalan weights,
    // which makes the triangulation uniform.
    let mut stack = vec![(0usize, n - 1)];
    while let Some((lo, hi)) = stack.pop() {
        let m = hi - lo + 1;
        if m < 3 {
            continue;
        }
        // apex at position i in (lo, hi), weight Cat(i-lo-1) * Cat(hi-i-1)
        let total = catalan[m - 2];
        let mut draw = rng.gen_range(0..total);
        let mut apex = lo + 1;
        for i in (lo + 1)..hi {
            let w = catalan[i - lo - 1] * catalan[hi - i - 1];
            if draw < w {
                apex = i;
                break;
            }
            draw -= w;
        }
        if apex - lo >= 2 {
            chords.push((lo, apex));
        }
        if hi - apex >= 2 {
            chords.push((apex, hi));
        }
        stack.push((lo, apex));
        stack.push((apex, hi));
    }
    // positions equal vertex ids: the outer cycle is 0..n
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend(chords.iter().copied());
    let g = Graph::from_edges(n, &edges)?;
    let emb = OuterplanarEmbedding {
        outer_cycle: (0..n).collect(),
        chords,
    };
    emb.validate(&g)?;
    debug_assert_eq!(g.edge_count(), 2 * n - 3);
    Ok((g, emb))
}

/// Catalan numbers 0..=n-2 (enough to weight all sub-polygons of an n-gon).
fn catalan_table(n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n.max(2)];
    c[0] = 1;
    c[1] = 1;
    for m in 2..c.len() {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_on_two_vertices_is_k2() {
        for seed in 0..5 {
            let g = random_tree(2, seed).unwrap();
            assert_eq!(g.edge_count(), 1);
        }
    }

    #[test]
    fn trees_are_connected_with_n_minus_1_edges() {
        for n in [1, 2, 3, 5, 8, 12] {
            for seed in 0..10 {
                let g = random_tree(n, seed).unwrap();
                assert_eq!(g.vertex_count(), n);
                assert_eq!(g.edge_count(), n - 1);
                assert!(g.is_connected());
                g.check_invariants().unwrap();
            }
        }
    }

    #[test]
    fn generators_are_deterministic_given_seed() {
        assert_eq!(random_tree(9, 7).unwrap(), random_tree(9, 7).unwrap());
        assert_eq!(
            random_connected(7, 0.4, 3).unwrap(),
            random_connected(7, 0.4, 3).unwrap()
        );
        let (g1, e1) = random_maximal_outerplanar(10, 5).unwrap();
        let (g2, e2) = random_maximal_outerplanar(10, 5).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(e1, e2);
    }

    #[test]
    fn connected_sampler_respects_connectivity() {
        for seed in 0..20 {
            let g = random_connected(7, 0.3, seed).unwrap();
            assert!(g.is_connected());
        }
    }

    #[test]
    fn maximal_outerplanar_edge_count() {
        for n in 3..=14 {
            for seed in 0..5 {
                let (g, emb) = random_maximal_outerplanar(n, seed).unwrap();
                assert_eq!(g.edge_count(), 2 * n - 3);
                emb.validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn triangulation_spread_over_seeds() {
        // different seeds should produce several distinct triangulations
        let mut distinct = std::collections::HashSet::new();
        for seed in 0..30 {
            let (g, _) = random_maximal_outerplanar(8, seed).unwrap();
            distinct.insert(g.edges());
        }
        assert!(distinct.len() > 5, "got {} distinct", distinct.len());
    }
}
