//! Biconnected components (blocks) and cut vertices.

use super::Graph;
use crate::error::{Error, Result};

/// Block-cut decomposition of a connected graph. Every edge lies in exactly
/// one block; a bridge forms a two-vertex block.
#[derive(Debug, Clone)]
pub struct BlockCutTree {
    blocks: Vec<Block>,
    cut_vertices: Vec<usize>,
    /// blocks containing each vertex, sorted
    blocks_of: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl BlockCutTree {
    pub fn compute(g: &Graph) -> Result<BlockCutTree> {
        if !g.is_connected() {
            return Err(Error::Disconnected("block-cut tree".into()));
        }
        let n = g.vertex_count();
        let mut state = Dfs {
            g,
            depth: vec![usize::MAX; n],
            low: vec![0; n],
            parent: vec![usize::MAX; n],
            edge_stack: Vec::new(),
            blocks: Vec::new(),
            is_cut: vec![false; n],
        };
        if n == 1 {
            // single vertex: one degenerate block, no cut vertices
            return Ok(BlockCutTree {
                blocks: vec![Block {
                    vertices: vec![0],
                    edges: vec![],
                }],
                cut_vertices: vec![],
                blocks_of: vec![vec![0]],
            });
        }
        state.run(0);
        let Dfs { blocks, is_cut, .. } = state;
        let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
        let mut blocks_of = vec![Vec::new(); n];
        for (bi, b) in blocks.iter().enumerate() {
            for &v in &b.vertices {
                blocks_of[v].push(bi);
            }
        }
        Ok(BlockCutTree {
            blocks,
            cut_vertices,
            blocks_of,
        })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.blocks_of[v]
    }

    /// Some block containing `v` (the lowest-indexed one).
    pub fn any_block_of(&self, v: usize) -> usize {
        self.blocks_of[v][0]
    }

    /// Walks the block-cut tree from `from_block` toward vertex `target`,
    /// returning the cut vertex of `from_block` that separates it from
    /// `target`, together with the next block through that cut vertex.
    /// Returns `None` when `target` already lies in `from_block`.
    pub fn toward(&self, from_block: usize, target: usize) -> Option<(usize, usize)> {
        if self.blocks[from_block].vertices.contains(&target) {
            return None;
        }
        // BFS over the bipartite block/cut-vertex incidence structure.
        let mut prev: std::collections::HashMap<usize, (usize, usize)> =
            std::collections::HashMap::new();
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from_block);
        let mut seen = vec![false; self.blocks.len()];
        seen[from_block] = true;
        while let Some(b) = queue.pop_front() {
            for &v in &self.blocks[b].vertices {
                if !self.is_cut_vertex(v) {
                    continue;
                }
                for &nb in self.blocks_of(v) {
                    if !seen[nb] {
                        seen[nb] = true;
                        prev.insert(nb, (b, v));
                        queue.push_back(nb);
                    }
                }
            }
        }
        // find the block containing target, walk back to from_block
        let mut b = (0..self.blocks.len())
            .find(|&b| seen[b] && self.blocks[b].vertices.contains(&target))
            .expect("connected graph: target reachable");
        loop {
            let &(pb, via) = prev.get(&b).expect("walk reaches start");
            if pb == from_block {
                return Some((via, b));
            }
            b = pb;
        }
    }
}

struct Dfs<'a> {
    g: &'a Graph,
    depth: Vec<usize>,
    low: Vec<usize>,
    parent: Vec<usize>,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Block>,
    is_cut: Vec<bool>,
}

impl Dfs<'_> {
    // Iterative Hopcroft-Tarjan with an explicit stack of (vertex, neighbor
    // cursor) frames so deep graphs cannot overflow the call stack.
    fn run(&mut self, root: usize) {
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        self.depth[root] = 0;
        self.low[root] = 0;
        let mut root_children = 0usize;

        while let Some(&mut (u, ref mut cursor)) = frames.last_mut() {
            if *cursor < self.g.degree(u) {
                let v = self.g.neighbors(u)[*cursor];
                *cursor += 1;
                if self.depth[v] == usize::MAX {
                    self.parent[v] = u;
                    self.depth[v] = self.depth[u] + 1;
                    self.low[v] = self.depth[v];
                    self.edge_stack.push((u, v));
                    if u == root {
                        root_children += 1;
                    }
                    frames.push((v, 0));
                } else if v != self.parent[u] && self.depth[v] < self.depth[u] {
                    self.edge_stack.push((u, v));
                    self.low[u] = self.low[u].min(self.depth[v]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _)) = frames.last() {
                    self.low[p] = self.low[p].min(self.low[u]);
                    if self.low[u] >= self.depth[p] {
                        // p closes a block: everything pushed after the tree
                        // edge (p, u) belongs to it
                        let mut edges = Vec::new();
                        while let Some((a, b)) = self.edge_stack.pop() {
                            edges.push((a.min(b), a.max(b)));
                            if a == p && b == u {
                                break;
                            }
                        }
                        let mut vertices: Vec<usize> =
                            edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                        vertices.sort_unstable();
                        vertices.dedup();
                        edges.sort_unstable();
                        self.blocks.push(Block { vertices, edges });
                        if p != root {
                            self.is_cut[p] = true;
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            self.is_cut[root] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{cycle, path};
    use super::*;

    #[test]
    fn path_splits_into_edge_blocks() {
        let t = BlockCutTree::compute(&path(3).unwrap()).unwrap();
        assert_eq!(t.blocks().len(), 2);
        assert_eq!(t.cut_vertices(), &[1]);
        let mut vs: Vec<_> = t.blocks().iter().map(|b| b.vertices.clone()).collect();
        vs.sort();
        assert_eq!(vs, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn cycle_is_one_block() {
        let t = BlockCutTree::compute(&cycle(5).unwrap()).unwrap();
        assert_eq!(t.blocks().len(), 1);
        assert!(t.cut_vertices().is_empty());
        assert_eq!(t.blocks()[0].edges.len(), 5);
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let t = BlockCutTree::compute(&g).unwrap();
        assert_eq!(t.blocks().len(), 2);
        assert_eq!(t.cut_vertices(), &[2]);
        // every edge in exactly one block
        let mut all: Vec<_> = t.blocks().iter().flat_map(|b| b.edges.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, g.edges());
    }

    #[test]
    fn toward_walks_the_tree() {
        // path 0-1-2-3: blocks {01},{12},{23}
        let t = BlockCutTree::compute(&path(4).unwrap()).unwrap();
        let b0 = t
            .blocks()
            .iter()
            .position(|b| b.vertices == vec![0, 1])
            .unwrap();
        let (via, next) = t.toward(b0, 3).unwrap();
        assert_eq!(via, 1);
        assert_eq!(t.blocks()[next].vertices, vec![1, 2]);
        assert!(t.toward(b0, 0).is_none());
    }
}
