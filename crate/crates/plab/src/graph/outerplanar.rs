//! Outerplanar embeddings: a Hamiltonian outer cycle plus non-crossing chords.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Embedding of a 2-connected outerplanar graph: the outer face is a
/// Hamiltonian cycle and all chords lie inside it, pairwise non-crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplanarEmbedding {
    pub outer_cycle: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
}

impl OuterplanarEmbedding {
    /// Validates the embedding against `g`:
    /// - `outer_cycle` is a Hamiltonian cycle of `g`,
    /// - chords are pairwise non-crossing in the cyclic order,
    /// - chords plus cycle edges are exactly the edge set of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        if self.outer_cycle.len() != n {
            return Err(Error::InvalidEmbedding(format!(
                "outer cycle has {} vertices, graph has {n}",
                self.outer_cycle.len()
            )));
        }
        if n < 3 {
            return Err(Error::InvalidEmbedding("outer cycle needs n >= 3".into()));
        }
        let mut seen = vec![false; n];
        for &v in &self.outer_cycle {
            if v >= n || seen[v] {
                return Err(Error::InvalidEmbedding(format!(
                    "outer cycle is not a permutation (vertex {v})"
                )));
            }
            seen[v] = true;
        }
        let pos = self.position_map(n);
        for i in 0..n {
            let u = self.outer_cycle[i];
            let v = self.outer_cycle[(i + 1) % n];
            if !g.has_edge(u, v) {
                return Err(Error::InvalidEmbedding(format!(
                    "outer cycle edge ({u},{v}) missing from graph"
                )));
            }
        }
        // chords exist, are not cycle edges, and do not cross
        let mut chord_pos = Vec::with_capacity(self.chords.len());
        for &(u, v) in &self.chords {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEmbedding(format!("bad chord ({u},{v})")));
            }
            if !g.has_edge(u, v) {
                return Err(Error::InvalidEmbedding(format!(
                    "chord ({u},{v}) missing from graph"
                )));
            }
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            if b - a == 1 || (a == 0 && b == n - 1) {
                return Err(Error::InvalidEmbedding(format!(
                    "chord ({u},{v}) is an outer cycle edge"
                )));
            }
            chord_pos.push((a, b));
        }
        for i in 0..chord_pos.len() {
            for j in (i + 1)..chord_pos.len() {
                let (a, b) = chord_pos[i];
                let (c, d) = chord_pos[j];
                let crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if crossing {
                    return Err(Error::InvalidEmbedding(format!(
                        "chords {:?} and {:?} cross",
                        self.chords[i], self.chords[j]
                    )));
                }
            }
        }
        if n + self.chords.len() != g.edge_count() {
            return Err(Error::InvalidEmbedding(format!(
                "cycle + {} chords != {} graph edges",
                self.chords.len(),
                g.edge_count()
            )));
        }
        Ok(())
    }

    /// Cycle position of each vertex.
    pub fn position_map(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.outer_cycle.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn len(&self) -> usize {
        self.outer_cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outer_cycle.is_empty()
    }
}

/// The fan: a path 1-2-...-(n-1) plus a hub 0 joined to every path vertex.
/// Maximal outerplanar; handy as a test instance.
pub fn fan(n: usize) -> Result<(Graph, OuterplanarEmbedding)> {
    if n < 3 {
        return Err(Error::parameter("fan needs n >= 3"));
    }
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((0, v));
    }
    for v in 1..n - 1 {
        edges.push((v, v + 1));
    }
    let g = Graph::from_edges(n, &edges)?;
    let emb = OuterplanarEmbedding {
        outer_cycle: (0..n).collect(),
        chords: (2..n - 1).map(|v| (0, v)).collect(),
    };
    emb.validate(&g)?;
    Ok((g, emb))
}

#[cfg(test)]
mod tests {
    use super::super::cycle;
    use super::*;

    #[test]
    fn plain_cycle_validates() {
        let g = cycle(6).unwrap();
        let emb = OuterplanarEmbedding {
            outer_cycle: (0..6).collect(),
            chords: vec![],
        };
        emb.validate(&g).unwrap();
    }

    #[test]
    fn crossing_chords_rejected() {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        edges.push((1, 4));
        let g = Graph::from_edges(6, &edges).unwrap();
        let emb = OuterplanarEmbedding {
            outer_cycle: (0..6).collect(),
            chords: vec![(0, 3), (1, 4)],
        };
        let err = emb.validate(&g).unwrap_err();
        assert!(err.to_string().contains("cross"));
    }

    #[test]
    fn missing_chord_in_edge_set_rejected() {
        let g = cycle(5).unwrap();
        let emb = OuterplanarEmbedding {
            outer_cycle: (0..5).collect(),
            chords: vec![(0, 2)],
        };
        assert!(emb.validate(&g).is_err());
    }

    #[test]
    fn fan_is_maximal_outerplanar() {
        let (g, emb) = fan(5).unwrap();
        assert_eq!(g.edge_count(), 2 * 5 - 3);
        emb.validate(&g).unwrap();
    }
}
