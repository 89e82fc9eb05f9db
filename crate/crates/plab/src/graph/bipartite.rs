//! Two-coloring of connected bipartite graphs.

use super::Graph;
use crate::error::{Error, Result};

/// The unique bipartition of a connected bipartite graph, with side X
/// containing vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side_of: Vec<u8>,
}

impl Bipartition {
    /// Returns `Ok(None)` when the graph contains an odd cycle. Disconnected
    /// input is an error (the partition would be ambiguous).
    pub fn compute(g: &Graph) -> Result<Option<Bipartition>> {
        if !g.is_connected() {
            return Err(Error::Disconnected("bipartition".into()));
        }
        let n = g.vertex_count();
        let mut side_of = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        side_of[0] = 0;
        queue.push_back(0usize);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if side_of[v] == u8::MAX {
                    side_of[v] = 1 - side_of[u];
                    queue.push_back(v);
                } else if side_of[v] == side_of[u] {
                    return Ok(None);
                }
            }
        }
        Ok(Some(Bipartition { side_of }))
    }

    /// 0 for the side containing vertex 0, 1 for the other.
    pub fn side(&self, v: usize) -> u8 {
        self.side_of[v]
    }

    pub fn same_side(&self, u: usize, v: usize) -> bool {
        self.side_of[u] == self.side_of[v]
    }

    pub fn x_side(&self) -> Vec<usize> {
        self.members(0)
    }

    pub fn y_side(&self) -> Vec<usize> {
        self.members(1)
    }

    fn members(&self, side: u8) -> Vec<usize> {
        (0..self.side_of.len())
            .filter(|&v| self.side_of[v] == side)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{cycle, hypercube, path};
    use super::*;

    #[test]
    fn even_cycle_splits_by_parity() {
        let b = Bipartition::compute(&cycle(4).unwrap()).unwrap().unwrap();
        assert_eq!(b.x_side(), vec![0, 2]);
        assert_eq!(b.y_side(), vec![1, 3]);
    }

    #[test]
    fn odd_cycle_has_no_bipartition() {
        assert!(Bipartition::compute(&cycle(5).unwrap()).unwrap().is_none());
    }

    #[test]
    fn hypercube_sides_are_balanced() {
        let b = Bipartition::compute(&hypercube(3).unwrap()).unwrap().unwrap();
        assert_eq!(b.x_side().len(), 4);
        assert_eq!(b.y_side().len(), 4);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(Bipartition::compute(&g).is_err());
        let _ = path(2);
    }
}
