//! Exact game solving by backward fixed-point (attractor) computation.
//!
//! Every state of the decomposed game is classified as a cop win or a robber
//! win; cop-win states additionally record the optimal number of remaining
//! individual moves until capture. Capture times count individual moves, not
//! rounds: a full cop round contributes k and a robber move contributes 1.
//! Divide the cop-move share by k when reporting rounds.

pub mod cache;
pub mod joint;
pub mod multiset;
mod state;

pub use state::{
    cop_stay_allowed, cop_step_allowed, for_each_successor, robber_stay_allowed, successor_count,
    GameState, StateLayout,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rules::MovementRule;

pub const ROBBER_WIN_TIME: u16 = u16::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Status {
    CopWin,
    RobberWin,
}

/// Full classification of a (graph, cop count, rule) instance.
#[derive(Debug, Clone)]
pub struct SolveTable {
    graph_hash: u64,
    n: usize,
    k: usize,
    rule: MovementRule,
    layout: StateLayout,
    win: Vec<u64>,
    time: Vec<u16>,
}

impl SolveTable {
    pub fn graph_hash(&self) -> u64 {
        self.graph_hash
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rule(&self) -> MovementRule {
        self.rule
    }

    pub fn layout(&self) -> &StateLayout {
        &self.layout
    }

    pub fn total_states(&self) -> u64 {
        self.layout.total_states()
    }

    pub fn status_by_index(&self, idx: u64) -> Status {
        if self.win[(idx / 64) as usize] >> (idx % 64) & 1 == 1 {
            Status::CopWin
        } else {
            Status::RobberWin
        }
    }

    /// Optimal remaining individual moves from a cop-win state.
    pub fn time_by_index(&self, idx: u64) -> u16 {
        self.time[idx as usize]
    }

    pub fn status(&self, state: &GameState) -> Status {
        self.status_by_index(self.layout.encode(state))
    }

    pub fn time(&self, state: &GameState) -> u16 {
        self.time_by_index(self.layout.encode(state))
    }

    /// State after both placements: cops first, robber second, cops to move.
    /// A robber placed on a cop is immediately captured.
    pub fn initial_state(&self, cops: &[usize], robber: usize) -> GameState {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        GameState::round_start(sorted, robber)
    }

    pub fn initial_status(&self, cops: &[usize], robber: usize) -> Status {
        self.status(&self.initial_state(cops, robber))
    }

    /// True iff this cop placement wins against every robber placement.
    pub fn placement_wins(&self, cops: &[usize]) -> bool {
        (0..self.n).all(|r| self.initial_status(cops, r) == Status::CopWin)
    }

    /// Lexicographically smallest winning placement, if any.
    pub fn best_placement(&self) -> Option<Vec<usize>> {
        let mut found = None;
        self.layout.codec(self.k).for_each(|_, cops| {
            if found.is_none() && self.placement_wins(cops) {
                found = Some(cops.to_vec());
            }
        });
        found
    }

    /// True iff every initial configuration (all cop multisets, all robber
    /// vertices) is a cop win.
    pub fn wins_from_all_placements(&self) -> bool {
        let mut all = true;
        self.layout.codec(self.k).for_each(|_, cops| {
            if all && !self.placement_wins(cops) {
                all = false;
            }
        });
        all
    }

    pub(crate) fn from_raw(
        graph_hash: u64,
        n: usize,
        k: usize,
        rule: MovementRule,
        win: Vec<u64>,
        time: Vec<u16>,
    ) -> SolveTable {
        let layout = StateLayout::new(n, k, rule);
        assert_eq!(time.len() as u64, layout.total_states());
        SolveTable {
            graph_hash,
            n,
            k,
            rule,
            layout,
            win,
            time,
        }
    }

    pub(crate) fn win_words(&self) -> &[u64] {
        &self.win
    }

    pub(crate) fn times(&self) -> &[u16] {
        &self.time
    }
}

pub(crate) fn solve_preconditions(g: &Graph, k: usize, rule: MovementRule) -> Result<()> {
    if k == 0 {
        return Err(Error::parameter("cop count must be at least 1"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("solver input".into()));
    }
    if rule.has_must_move() && g.vertex_count() < 2 {
        return Err(Error::parameter(
            "must-move rules need at least 2 vertices so a legal move always exists",
        ));
    }
    Ok(())
}

/// Classifies every game state exactly by backward induction.
///
/// The capture set seeds the attractor at level 0; cop-choice states enter
/// when any successor is in, robber-choice states when all successors are in
/// (tracked by per-state counters). The BFS level of a state is its optimal
/// capture time in individual moves.
pub fn solve(g: &Graph, k: usize, rule: MovementRule) -> Result<SolveTable> {
    solve_preconditions(g, k, rule)?;
    let n = g.vertex_count();
    let layout = StateLayout::new(n, k, rule);
    let total = layout.total_states();
    assert!(total < u32::MAX as u64, "state space too large: {total}");
    assert!(
        g.vertices().all(|v| g.degree(v) + 1 < 256),
        "degree too large for one-byte successor counters"
    );
    let total_usize = total as usize;

    let mut win = vec![0u64; total_usize.div_ceil(64)];
    let mut time = vec![ROBBER_WIN_TIME; total_usize];
    // successor counters for the universal (robber-to-move) block, which the
    // layout places first
    let robber_block = layout.codec(k).count() as usize * n;
    let mut counter = vec![0u8; robber_block];

    let mut queue = std::collections::VecDeque::new();

    // Seed captures and initialize counters. States are visited in index
    // order so the result is reproducible by construction.
    let visit_all = |f: &mut dyn FnMut(u64, &GameState)| {
        for idx in 0..total {
            let st = layout.decode(idx);
            f(idx, &st);
        }
    };
    visit_all(&mut |idx, st| {
        if st.is_capture() {
            win[(idx / 64) as usize] |= 1 << (idx % 64);
            time[idx as usize] = 0;
            queue.push_back(idx as u32);
        } else if let GameState::RobberToMove { .. } = st {
            let c = successor_count(g, rule, st);
            assert!(c > 0, "robber has no legal move; precondition violated");
            counter[idx as usize] = u8::try_from(c).expect("counter fits in u8");
        }
    });

    // Reverse adjacency in CSR form, built by counting then filling.
    let mut indeg = vec![0u32; total_usize];
    for idx in 0..total {
        let st = layout.decode(idx);
        if st.is_capture() {
            continue;
        }
        for_each_successor(g, rule, &st, |succ| {
            indeg[layout.encode(&succ) as usize] += 1;
        });
    }
    let mut offsets = vec![0u64; total_usize + 1];
    for i in 0..total_usize {
        offsets[i + 1] = offsets[i] + indeg[i] as u64;
    }
    let edge_count = offsets[total_usize];
    let mut rev = vec![0u32; edge_count as usize];
    let mut fill = offsets.clone();
    for idx in 0..total {
        let st = layout.decode(idx);
        if st.is_capture() {
            continue;
        }
        for_each_successor(g, rule, &st, |succ| {
            let t = layout.encode(&succ) as usize;
            rev[fill[t] as usize] = idx as u32;
            fill[t] += 1;
        });
    }
    drop(indeg);

    // Attractor BFS. Edges all have weight one, so a FIFO queue processes
    // states in nondecreasing level order; a universal state is finalized by
    // its worst successor and therefore gets level 1 + max, an existential
    // state by its first and gets 1 + min.
    while let Some(sidx) = queue.pop_front() {
        let t = time[sidx as usize];
        let level = t
            .checked_add(1)
            .expect("capture time exceeds u16 at desk scale");
        for e in offsets[sidx as usize]..offsets[sidx as usize + 1] {
            let p = rev[e as usize] as usize;
            if time[p] != ROBBER_WIN_TIME {
                continue;
            }
            let classified = if p < robber_block {
                counter[p] -= 1;
                counter[p] == 0
            } else {
                true
            };
            if classified {
                win[p / 64] |= 1 << (p % 64);
                time[p] = level;
                queue.push_back(p as u32);
            }
        }
    }

    Ok(SolveTable {
        graph_hash: g.adjacency_hash(),
        n,
        k,
        rule,
        layout,
        win,
        time,
    })
}

/// Result of a bounded cop-number search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopNumber {
    Exact(usize),
    /// No k <= k_max admits a winning placement.
    Unknown { k_max: usize },
}

impl CopNumber {
    pub fn exact(&self) -> Option<usize> {
        match self {
            CopNumber::Exact(k) => Some(*k),
            CopNumber::Unknown { .. } => None,
        }
    }
}

/// Smallest k <= k_max for which some cop placement beats every robber
/// placement.
pub fn cop_number(g: &Graph, rule: MovementRule, k_max: usize) -> Result<CopNumber> {
    for k in 1..=k_max {
        let table = solve(g, k, rule)?;
        if table.best_placement().is_some() {
            return Ok(CopNumber::Exact(k));
        }
    }
    Ok(CopNumber::Unknown { k_max })
}

/// True iff k cops win from every initial configuration.
pub fn wins_from_all_placements(g: &Graph, k: usize, rule: MovementRule) -> Result<bool> {
    Ok(solve(g, k, rule)?.wins_from_all_placements())
}

#[cfg(test)]
mod tests;
