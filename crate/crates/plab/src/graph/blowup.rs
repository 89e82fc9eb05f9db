//! Blowups: each vertex becomes an independent set of copies, each edge a
//! complete join between the copy sets.

use super::{Graph, VertexLabel};
use crate::error::{Error, Result};

/// A blowup together with its base structure. Copy `c` of base vertex `v`
/// has index `v * t + c`.
#[derive(Debug, Clone)]
pub struct BlowupStructure {
    base: Graph,
    t: usize,
    graph: Graph,
}

/// Builds the `t`-blowup of `base` (`t >= 1`). Copies of one base vertex are
/// independent; copies of adjacent base vertices are completely joined, so
/// every copy of `v` has degree `t * deg(v)`.
pub fn blowup(base: &Graph, t: usize) -> Result<BlowupStructure> {
    if t < 1 {
        return Err(Error::parameter("blowup needs t >= 1"));
    }
    let n = base.vertex_count();
    let mut edges = Vec::new();
    for u in base.vertices() {
        for &v in base.neighbors(u) {
            if v > u {
                for cu in 0..t {
                    for cv in 0..t {
                        edges.push((u * t + cu, v * t + cv));
                    }
                }
            }
        }
    }
    let mut graph = Graph::from_edges(n * t, &edges)?;
    graph.set_labels(
        (0..n * t)
            .map(|x| VertexLabel::BlowupLabel {
                shadow: x / t,
                copy: x % t,
            })
            .collect(),
    );
    Ok(BlowupStructure {
        base: base.clone(),
        t,
        graph,
    })
}

impl BlowupStructure {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn shadow(&self, v: usize) -> usize {
        v / self.t
    }

    pub fn copy_index(&self, v: usize) -> usize {
        v % self.t
    }

    pub fn copies_of(&self, base_vertex: usize) -> std::ops::Range<usize> {
        base_vertex * self.t..(base_vertex + 1) * self.t
    }
}

#[cfg(test)]
mod tests {
    use super::super::{complete, hypercube};
    use super::*;

    #[test]
    fn blowup_of_k2_is_complete_bipartite() {
        let b = blowup(&complete(2).unwrap(), 3).unwrap();
        let g = b.graph();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        // copies of one vertex are independent
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(0, 3));
    }

    #[test]
    fn degree_law_holds() {
        let base = hypercube(3).unwrap();
        let b = blowup(&base, 4).unwrap();
        assert_eq!(b.graph().vertex_count(), 32);
        for v in b.graph().vertices() {
            assert_eq!(b.graph().degree(v), 4 * base.degree(b.shadow(v)));
        }
    }

    #[test]
    fn labels_carry_shadow_and_copy() {
        let b = blowup(&complete(3).unwrap(), 2).unwrap();
        assert_eq!(
            b.graph().label(5),
            Some(&VertexLabel::BlowupLabel { shadow: 2, copy: 1 })
        );
    }
}
