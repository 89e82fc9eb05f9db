//! Two fully active cops on a connected outerplanar graph.
//!
//! Within a 2-connected block the cops guard two outer-cycle vertices, the
//! territory endpoints. The robber is confined to the arc between them: his
//! exits lead only to the endpoints (suicide) because every edge out of his
//! arc would cross a chord the cops advanced over. Each round either an
//! endpoint advances one cycle step (no chords from the endpoints into the
//! robber arc), or a cop crosses the extremal chord from her endpoint, or
//! one cop pins both ends of a chord by bouncing on it while her partner
//! walks around to take over the far end. When the robber hides in another
//! block, the cut vertex separating him plays the role of the robber; once
//! both cops control it they move to the next block, and the abandoned
//! region stays sealed behind that vertex.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{BlockCutTree, Graph, OuterplanarEmbedding};
use crate::strategy::{push_positions, CopMove, CopStrategy, MemoKey};

/// Per-block embeddings for a connected outerplanar graph: every block with
/// three or more vertices needs a supplied embedding; bridges embed
/// implicitly.
pub struct BlockEmbeddings {
    tree: BlockCutTree,
    cycles: Vec<Vec<usize>>,
    chords: Vec<HashMap<usize, Vec<usize>>>,
}

impl BlockEmbeddings {
    pub fn new(g: &Graph, embeddings: &[OuterplanarEmbedding]) -> Result<BlockEmbeddings> {
        let tree = BlockCutTree::compute(g)?;
        let mut cycles = Vec::with_capacity(tree.blocks().len());
        let mut chords = Vec::with_capacity(tree.blocks().len());
        for block in tree.blocks() {
            if block.vertices.len() <= 2 {
                cycles.push(block.vertices.clone());
                chords.push(HashMap::new());
                continue;
            }
            let emb = embeddings
                .iter()
                .find(|e| {
                    let mut vs = e.outer_cycle.clone();
                    vs.sort_unstable();
                    vs == block.vertices
                })
                .ok_or_else(|| {
                    Error::InvalidEmbedding(format!(
                        "no embedding supplied for block {:?}",
                        block.vertices
                    ))
                })?;
            validate_block(emb, &block.edges)?;
            cycles.push(emb.outer_cycle.clone());
            let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
            for &(u, v) in &emb.chords {
                map.entry(u).or_default().push(v);
                map.entry(v).or_default().push(u);
            }
            for list in map.values_mut() {
                list.sort_unstable();
            }
            chords.push(map);
        }
        Ok(BlockEmbeddings {
            tree,
            cycles,
            chords,
        })
    }

    /// Single 2-connected block.
    pub fn two_connected(g: &Graph, emb: OuterplanarEmbedding) -> Result<BlockEmbeddings> {
        let be = BlockEmbeddings::new(g, std::slice::from_ref(&emb))?;
        if be.tree.blocks().len() != 1 {
            return Err(Error::InvalidEmbedding(
                "graph has cut vertices; supply per-block embeddings".into(),
            ));
        }
        Ok(be)
    }

    /// Graphs whose blocks are all single edges (trees) need no embeddings.
    pub fn edges_only(g: &Graph) -> Result<BlockEmbeddings> {
        BlockEmbeddings::new(g, &[])
    }

    pub fn tree(&self) -> &BlockCutTree {
        &self.tree
    }
}

fn validate_block(emb: &OuterplanarEmbedding, block_edges: &[(usize, usize)]) -> Result<()> {
    let m = emb.outer_cycle.len();
    let has = |u: usize, v: usize| {
        let e = (u.min(v), u.max(v));
        block_edges.binary_search(&e).is_ok()
    };
    for i in 0..m {
        let u = emb.outer_cycle[i];
        let v = emb.outer_cycle[(i + 1) % m];
        if !has(u, v) {
            return Err(Error::InvalidEmbedding(format!(
                "cycle edge ({u},{v}) missing from block"
            )));
        }
    }
    let mut pos = HashMap::new();
    for (i, &v) in emb.outer_cycle.iter().enumerate() {
        pos.insert(v, i);
    }
    let mut chord_pos = Vec::new();
    for &(u, v) in &emb.chords {
        if !has(u, v) {
            return Err(Error::InvalidEmbedding(format!(
                "chord ({u},{v}) missing from block"
            )));
        }
        let (a, b) = (pos[&u].min(pos[&v]), pos[&u].max(pos[&v]));
        if b - a == 1 || (a == 0 && b == m - 1) {
            return Err(Error::InvalidEmbedding(format!(
                "chord ({u},{v}) is a cycle edge"
            )));
        }
        chord_pos.push((a, b));
    }
    for i in 0..chord_pos.len() {
        for j in (i + 1)..chord_pos.len() {
            let (a, b) = chord_pos[i];
            let (c, d) = chord_pos[j];
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return Err(Error::InvalidEmbedding("crossing chords in block".into()));
            }
        }
    }
    if m + emb.chords.len() != block_edges.len() {
        return Err(Error::InvalidEmbedding(
            "block edges not covered by cycle plus chords".into(),
        ));
    }
    Ok(())
}

const COP_A: usize = 0;
const COP_B: usize = 1;

#[derive(Clone)]
pub struct OuterplanarCops {
    g: Arc<Graph>,
    be: Arc<BlockEmbeddings>,
    pos: [usize; 2],
    bounce: [usize; 2],
    block: usize,
    end_k: usize,
    end_l: usize,
    /// travel mode: (walking cop, destination cycle position)
    walk: Option<(usize, usize)>,
    robber: Option<usize>,
}

impl OuterplanarCops {
    pub fn new(g: Arc<Graph>, be: Arc<BlockEmbeddings>) -> Result<OuterplanarCops> {
        if !g.is_connected() {
            return Err(Error::Disconnected("outerplanar strategy".into()));
        }
        Ok(OuterplanarCops {
            g,
            be,
            pos: [0, 0],
            bounce: [0, 0],
            block: 0,
            end_k: 0,
            end_l: 0,
            walk: None,
            robber: None,
        })
    }

    fn cycle(&self) -> &[usize] {
        &self.be.cycles[self.block]
    }

    fn cycle_pos(&self, v: usize) -> Option<usize> {
        self.cycle().iter().position(|&x| x == v)
    }

    fn chord_partners(&self, v: usize) -> &[usize] {
        self.be.chords[self.block]
            .get(&v)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Steps from `end_k` to `p` walking in direction `dir`.
    fn arc_index(&self, p: usize, dir: isize) -> usize {
        let m = self.cycle().len() as isize;
        let mut i = self.end_k as isize;
        let mut steps = 0;
        while i as usize != p {
            i = (i + dir).rem_euclid(m);
            steps += 1;
        }
        steps
    }

    /// Direction (+1/-1) such that walking from end_k reaches `target_pos`
    /// before reaching end_l; with equal endpoints the direction is +1.
    fn robber_dir(&self, target_pos: usize) -> Result<isize> {
        if target_pos == self.end_k || target_pos == self.end_l {
            return Err(Error::StrategyPrecondition(format!(
                "target sits on a territory endpoint (position {target_pos})"
            )));
        }
        if self.end_k == self.end_l {
            return Ok(1);
        }
        let m = self.cycle().len() as isize;
        let mut i = self.end_k as isize;
        loop {
            i = (i + 1).rem_euclid(m);
            if i as usize == target_pos {
                return Ok(1);
            }
            if i as usize == self.end_l {
                return Ok(-1);
            }
        }
    }

    /// Cycle positions strictly inside the robber arc.
    fn robber_interior(&self, dir: isize) -> Vec<usize> {
        let m = self.cycle().len() as isize;
        let mut out = Vec::new();
        let mut i = (self.end_k as isize + dir).rem_euclid(m);
        while i as usize != self.end_l && i as usize != self.end_k {
            out.push(i as usize);
            i = (i + dir).rem_euclid(m);
        }
        out
    }

    /// The current in-block objective: the robber himself, or the cut vertex
    /// separating the current block from him.
    fn current_target(&self, robber: usize) -> (usize, bool) {
        if self.be.tree.blocks()[self.block].vertices.contains(&robber) {
            (robber, true)
        } else {
            let (via, _) = self
                .be
                .tree
                .toward(self.block, robber)
                .expect("robber outside block has a separating cut vertex");
            (via, false)
        }
    }

    fn oscillate(&mut self, c: usize) -> CopMove {
        let mv = (self.pos[c], self.bounce[c]);
        self.bounce[c] = self.pos[c];
        self.pos[c] = mv.1;
        mv
    }

    fn step(&mut self, c: usize, dest: usize) -> CopMove {
        debug_assert!(self.g.has_edge(self.pos[c], dest), "cop step must use an edge");
        let mv = (self.pos[c], dest);
        self.bounce[c] = self.pos[c];
        self.pos[c] = dest;
        mv
    }

    /// Lowest-tie BFS step from `from` toward `to` inside `allowed`.
    fn bfs_step(&self, allowed: &[bool], from: usize, to: usize) -> Result<usize> {
        let n = self.g.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        dist[to] = 0;
        queue.push_back(to);
        while let Some(u) = queue.pop_front() {
            for &v in self.g.neighbors(u) {
                if allowed[v] && dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.g
            .neighbors(from)
            .iter()
            .copied()
            .find(|&w| dist[w] != usize::MAX && dist[w] + 1 == dist[from])
            .ok_or_else(|| {
                Error::StrategyPrecondition(format!(
                    "no safe path from {from} to {to}; territory bookkeeping broken"
                ))
            })
    }

    /// Chord partner of `endpoint` inside the robber arc that is farthest
    /// from `end_k` when `from_k` is set, nearest otherwise.
    fn extremal_chord(
        &self,
        endpoint: usize,
        dir: isize,
        interior: &[usize],
        from_k: bool,
    ) -> Option<usize> {
        let candidates = self
            .chord_partners(endpoint)
            .iter()
            .filter_map(|&w| {
                let p = self.cycle_pos(w)?;
                interior.contains(&p).then_some(p)
            });
        if from_k {
            candidates.max_by_key(|&p| self.arc_index(p, dir))
        } else {
            candidates.min_by_key(|&p| self.arc_index(p, dir))
        }
    }

    /// No edge may join the target to the cop-side arc interior.
    fn assert_territory(&self, target: usize, dir: isize) -> Result<()> {
        let interior = self.robber_interior(dir);
        let tp = self.cycle_pos(target).expect("target lies in current block");
        if !interior.contains(&tp) {
            return Err(Error::StrategyPrecondition(format!(
                "target {target} escaped the robber territory"
            )));
        }
        let cycle = self.cycle();
        let in_block: Vec<usize> = (0..cycle.len()).collect();
        for p in in_block {
            if p == self.end_k || p == self.end_l || interior.contains(&p) {
                continue;
            }
            if self.g.has_edge(target, cycle[p]) {
                return Err(Error::StrategyPrecondition(format!(
                    "edge joins target {target} to cop territory vertex {}",
                    cycle[p]
                )));
            }
        }
        Ok(())
    }
}

impl CopStrategy for OuterplanarCops {
    fn name(&self) -> String {
        "outerplanar".into()
    }

    /// Both cops on the ends of the first chord of the first block, or on
    /// adjacent cycle vertices when the block is chordless.
    fn place(&mut self) -> Result<Vec<usize>> {
        self.block = 0;
        let cycle = self.be.cycles[0].clone();
        if cycle.len() == 1 {
            self.pos = [cycle[0], cycle[0]];
            self.bounce = self.pos;
            self.end_k = 0;
            self.end_l = 0;
            return Ok(self.pos.to_vec());
        }
        let mut first_chord: Option<(usize, usize)> = None;
        for (i, &v) in cycle.iter().enumerate() {
            for &w in self.chord_partners(v) {
                let j = self.cycle_pos(w).unwrap();
                if i < j {
                    first_chord = Some((i, j));
                    break;
                }
            }
            if first_chord.is_some() {
                break;
            }
        }
        let (pk, pl) = first_chord.unwrap_or((0, 1));
        self.end_k = pk;
        self.end_l = pl;
        self.pos = [cycle[pk], cycle[pl]];
        self.bounce = [cycle[pl], cycle[pk]];
        Ok(self.pos.to_vec())
    }

    fn place_fixed(&mut self, _cops: &[usize]) -> Result<()> {
        Err(Error::StrategyPrecondition(
            "outerplanar strategy chooses its own chord placement".into(),
        ))
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        Ok(())
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        let robber = self
            .robber
            .ok_or_else(|| Error::UnknownState("robber not placed".into()))?;

        // immediate capture when adjacent to the real robber
        for c in [COP_A, COP_B] {
            if self.g.has_edge(self.pos[c], robber) {
                let capture = self.step(c, robber);
                let filler = self.oscillate(1 - c);
                return Ok(if c == COP_A {
                    vec![capture, filler]
                } else {
                    vec![filler, capture]
                });
            }
        }

        // move to the block holding (or leading to) the robber while both
        // cops control the separating cut vertex
        loop {
            let (target, is_robber) = self.current_target(robber);
            if is_robber {
                break;
            }
            let both_control = [COP_A, COP_B]
                .iter()
                .all(|&c| self.pos[c] == target || self.g.has_edge(self.pos[c], target));
            if !both_control {
                break;
            }
            let (_, next_block) = self
                .be
                .tree
                .toward(self.block, robber)
                .expect("phantom target implies a next block");
            self.block = next_block;
            let p = self
                .cycle_pos(target)
                .expect("cut vertex lies on the next block's cycle");
            self.end_k = p;
            self.end_l = p;
            self.walk = None;
            for c in [COP_A, COP_B] {
                self.bounce[c] = if self.pos[c] == target {
                    *self
                        .g
                        .neighbors(target)
                        .iter()
                        .find(|&&w| self.be.tree.blocks()[self.block].vertices.contains(&w))
                        .expect("block vertex has a neighbor inside the block")
                } else {
                    target
                };
            }
        }

        let (target, is_robber) = self.current_target(robber);
        let target_pos = self.cycle_pos(target).ok_or_else(|| {
            Error::StrategyPrecondition(format!("target {target} not on the block cycle"))
        })?;

        // a gateway cut vertex can sit on a territory endpoint right after
        // placement; converge on it directly (its block side is robber-free)
        if !is_robber && (target_pos == self.end_k || target_pos == self.end_l) {
            let block_vertices = &self.be.tree.blocks()[self.block].vertices;
            let mut allowed = vec![false; self.g.vertex_count()];
            for &v in block_vertices {
                allowed[v] = true;
            }
            let mut moves = Vec::with_capacity(2);
            for c in [COP_A, COP_B] {
                if self.pos[c] == target {
                    moves.push(self.oscillate(c));
                } else if self.g.has_edge(self.pos[c], target) {
                    moves.push(self.step(c, target));
                } else {
                    let mut allowed = allowed.clone();
                    allowed[self.pos[c]] = true;
                    let next = self.bfs_step(&allowed, self.pos[c], target)?;
                    moves.push(self.step(c, next));
                }
            }
            return Ok(moves);
        }

        let dir = self.robber_dir(target_pos)?;
        self.assert_territory(target, dir)?;

        // finish or continue a partner walk
        if let Some((walker, dest_pos)) = self.walk {
            let dest = self.cycle()[dest_pos];
            if self.pos[walker] == dest || self.g.has_edge(self.pos[walker], dest) {
                self.walk = None;
            } else {
                let guard = 1 - walker;
                let interior = self.robber_interior(dir);
                let cycle = self.cycle().to_vec();
                let mut allowed = vec![false; self.g.vertex_count()];
                for (p, &v) in cycle.iter().enumerate() {
                    allowed[v] = !interior.contains(&p);
                }
                allowed[self.pos[walker]] = true;
                let next = self.bfs_step(&allowed, self.pos[walker], dest)?;
                let walker_mv = self.step(walker, next);
                let guard_mv = self.oscillate(guard);
                return Ok(if walker == COP_A {
                    vec![walker_mv, guard_mv]
                } else {
                    vec![guard_mv, walker_mv]
                });
            }
        }

        let cycle = self.cycle().to_vec();
        let v_k = cycle[self.end_k];
        let v_l = cycle[self.end_l];
        let interior = self.robber_interior(dir);
        let target_arc = self.arc_index(target_pos, dir);

        if let Some(vr_pos) = self.extremal_chord(v_k, dir, &interior, true) {
            // a chord leaves the near endpoint: the guard must stand on it
            if self.pos[COP_A] != v_k {
                let a = self.step(COP_A, v_k);
                let b = self.oscillate(COP_B);
                return Ok(vec![a, b]);
            }
            let vr = cycle[vr_pos];
            if target_arc >= self.arc_index(vr_pos, dir) {
                // robber is beyond the chord: jump it, territory grows
                let a = self.step(COP_A, vr);
                let b = self.oscillate(COP_B);
                self.end_k = vr_pos;
                return Ok(vec![a, b]);
            }
            // robber trapped between the endpoint and the chord: pin both
            // chord ends by bouncing while the partner walks around
            self.end_l = vr_pos;
            self.walk = Some((COP_B, vr_pos));
            let a = self.step(COP_A, vr);
            let interior2 = self.robber_interior(dir);
            let mut allowed = vec![false; self.g.vertex_count()];
            for (p, &v) in cycle.iter().enumerate() {
                allowed[v] = !interior2.contains(&p);
            }
            allowed[self.pos[COP_B]] = true;
            let next = self.bfs_step(&allowed, self.pos[COP_B], vr)?;
            let b = self.step(COP_B, next);
            return Ok(vec![a, b]);
        }

        if let Some(vr_pos) = self.extremal_chord(v_l, dir, &interior, false) {
            if self.pos[COP_B] != v_l {
                let b = self.step(COP_B, v_l);
                let a = self.oscillate(COP_A);
                return Ok(vec![a, b]);
            }
            let vr = cycle[vr_pos];
            if target_arc <= self.arc_index(vr_pos, dir) {
                // robber is beyond the chord (toward end_k): jump it
                let b = self.step(COP_B, vr);
                let a = self.oscillate(COP_A);
                self.end_l = vr_pos;
                return Ok(vec![a, b]);
            }
            // robber trapped between the chord and this endpoint
            self.end_k = vr_pos;
            self.walk = Some((COP_A, vr_pos));
            let b = self.step(COP_B, vr);
            let interior2 = self.robber_interior(dir);
            let mut allowed = vec![false; self.g.vertex_count()];
            for (p, &v) in cycle.iter().enumerate() {
                allowed[v] = !interior2.contains(&p);
            }
            allowed[self.pos[COP_A]] = true;
            let next = self.bfs_step(&allowed, self.pos[COP_A], vr)?;
            let a = self.step(COP_A, next);
            return Ok(vec![a, b]);
        }

        // no chords from either endpoint: both sides advance one cycle step
        // unless the target sits right there
        let m = cycle.len() as isize;
        let next_k = (self.end_k as isize + dir).rem_euclid(m) as usize;
        let next_l = (self.end_l as isize - dir).rem_euclid(m) as usize;
        let a = if cycle[next_k] == target {
            if self.pos[COP_A] == v_k {
                self.step(COP_A, target) // bounce onto the waiting point
            } else {
                self.step(COP_A, v_k)
            }
        } else if self.pos[COP_A] == v_k {
            self.end_k = next_k;
            self.step(COP_A, cycle[next_k])
        } else {
            self.end_k = next_k;
            self.step(COP_A, v_k)
        };
        let b = if cycle[next_l] == target {
            if self.pos[COP_B] == v_l {
                self.step(COP_B, target)
            } else {
                self.step(COP_B, v_l)
            }
        } else if self.pos[COP_B] == v_l {
            self.end_l = next_l;
            self.step(COP_B, cycle[next_l])
        } else {
            self.end_l = next_l;
            self.step(COP_B, v_l)
        };
        Ok(vec![a, b])
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        Ok(())
    }

    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b'O'];
        push_positions(&mut key, &self.pos);
        push_positions(&mut key, &self.bounce);
        key.extend_from_slice(&(self.block as u16).to_le_bytes());
        key.extend_from_slice(&(self.end_k as u16).to_le_bytes());
        key.extend_from_slice(&(self.end_l as u16).to_le_bytes());
        match self.walk {
            None => key.push(0),
            Some((c, d)) => {
                key.push(1);
                key.push(c as u8);
                key.extend_from_slice(&(d as u16).to_le_bytes());
            }
        }
        key
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}
