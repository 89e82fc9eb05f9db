//! Standard graph families.

use super::{cartesian_product, Graph};
use crate::error::{Error, Result};

/// Path on `n` vertices (0-1-2-...-(n-1)). `path(1)` is a single vertex.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::parameter("path needs n >= 1"));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::parameter("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::parameter("complete graph needs n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete bipartite graph with sides of size `m` and `n` (both >= 1).
/// Vertices `0..m` form one side, `m..m+n` the other.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::parameter("complete bipartite needs m, n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..m {
        for v in 0..n {
            edges.push((u, m + v));
        }
    }
    Graph::from_edges(m + n, &edges)
}

/// The `dim`-dimensional hypercube as the `dim`-fold product of single edges.
pub fn hypercube(dim: usize) -> Result<Graph> {
    if dim < 1 {
        return Err(Error::parameter("hypercube needs dimension >= 1"));
    }
    let factors: Vec<Graph> = (0..dim).map(|_| path(2)).collect::<Result<_>>()?;
    Ok(cartesian_product(&factors)?.into_graph())
}

/// The Petersen graph (outer 5-cycle 0..4, inner pentagram 5..9).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("fixed edge list")
}

/// Gadget separating the passive and fully active games: vertex set
/// `{v} ∪ A ∪ B` where `v` is joined to all of `A`, `A` is completely
/// joined to `B`, and `B` is a clique. Requires `|A| >= 2` and `|B| >= 2`.
///
/// Vertex 0 is `v`, `1..=a` is `A`, `a+1..=a+b` is `B`.
pub fn vab_graph(a: usize, b: usize) -> Result<Graph> {
    if a < 2 || b < 2 {
        return Err(Error::parameter("vab graph needs |A| >= 2 and |B| >= 2"));
    }
    let mut edges = Vec::new();
    for x in 1..=a {
        edges.push((0, x));
        for y in (a + 1)..=(a + b) {
            edges.push((x, y));
        }
    }
    for y in (a + 1)..=(a + b) {
        for z in (y + 1)..=(a + b) {
            edges.push((y, z));
        }
    }
    Graph::from_edges(1 + a + b, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_path_is_single_vertex() {
        let g = path(1).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn cycle_is_two_regular() {
        let g = cycle(4).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn hypercube_counts() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!(super::super::Bipartition::compute(&q3).unwrap().is_some());
    }

    #[test]
    fn vab_edge_count_matches_definition() {
        // a + a*b + C(b,2) edges
        let g = vab_graph(2, 2).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 7);
        assert!(vab_graph(1, 2).is_err());
        assert!(vab_graph(2, 1).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert_eq!(g.diameter(), 2);
    }
}
