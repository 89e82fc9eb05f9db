//! Controllers extracted from a solve table. Both are memoryless: their
//! behavior is a function of the current game state alone.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{
    cop_stay_allowed, cop_step_allowed, robber_stay_allowed, GameState, SolveTable, Status,
    ROBBER_WIN_TIME,
};
use crate::strategy::{CopMove, CopStrategy, MemoKey, RobberStrategy};

/// Plays the table-optimal cop side: at each individual move, the legal
/// destination minimizing the successor capture time, ties to the lowest
/// vertex id.
#[derive(Clone)]
pub struct OptimalCop {
    g: Arc<Graph>,
    table: Arc<SolveTable>,
    cops: Vec<usize>,
    robber: Option<usize>,
}

impl OptimalCop {
    pub fn new(g: Arc<Graph>, table: Arc<SolveTable>) -> Result<OptimalCop> {
        check_table(&g, &table)?;
        Ok(OptimalCop {
            g,
            table,
            cops: Vec::new(),
            robber: None,
        })
    }
}

fn check_table(g: &Graph, table: &SolveTable) -> Result<()> {
    if table.graph_hash() != g.adjacency_hash() || table.n() != g.vertex_count() {
        return Err(Error::UnknownState(
            "solve table does not belong to this graph".into(),
        ));
    }
    Ok(())
}

impl CopStrategy for OptimalCop {
    fn name(&self) -> String {
        format!("optimal:rule={},k={}", self.table.rule(), self.table.k())
    }

    /// The lexicographically smallest winning placement; when none exists the
    /// all-zeros placement (the game is then lost from some robber reply).
    fn place(&mut self) -> Result<Vec<usize>> {
        self.cops = self
            .table
            .best_placement()
            .unwrap_or_else(|| vec![0; self.table.k()]);
        Ok(self.cops.clone())
    }

    fn place_fixed(&mut self, cops: &[usize]) -> Result<()> {
        if cops.len() != self.table.k() {
            return Err(Error::parameter(format!(
                "placement has {} cops, table solved for {}",
                cops.len(),
                self.table.k()
            )));
        }
        self.cops = cops.to_vec();
        self.cops.sort_unstable();
        Ok(())
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        Ok(())
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        let robber = self.robber.ok_or_else(|| Error::UnknownState("robber not placed".into()))?;
        let rule = self.table.rule();
        let mut moves = Vec::with_capacity(self.cops.len());
        let mut moved: Vec<usize> = Vec::new();
        let mut pending = self.cops.clone();
        let mut any_moved = false;
        while !pending.is_empty() {
            let mover = pending[0];
            let is_last = pending.len() == 1;
            let mut candidates: Vec<usize> = Vec::new();
            if cop_step_allowed(rule, any_moved) {
                candidates.extend_from_slice(self.g.neighbors(mover));
            }
            if cop_stay_allowed(rule, any_moved, is_last) {
                candidates.push(mover);
            }
            candidates.sort_unstable();
            let mut best: Option<(u16, usize)> = None;
            for &dest in &candidates {
                let mut next_moved = moved.clone();
                let pos = next_moved.binary_search(&dest).unwrap_or_else(|p| p);
                next_moved.insert(pos, dest);
                let succ = if is_last {
                    GameState::RobberToMove {
                        cops: next_moved,
                        robber,
                    }
                } else {
                    GameState::CopRound {
                        moved: next_moved,
                        pending: pending[1..].to_vec(),
                        robber,
                        any_moved: (any_moved || dest != mover) && rule.uses_moved_flag(),
                    }
                };
                let t = self.table.time(&succ);
                if best.is_none() || t < best.unwrap().0 {
                    best = Some((t, dest));
                }
            }
            let (_, dest) = best.ok_or_else(|| Error::IllegalMove {
                side: "cops",
                detail: format!("cop on {mover} has no legal destination"),
            })?;
            moves.push((mover, dest));
            any_moved |= dest != mover;
            pending.remove(0);
            let pos = moved.binary_search(&dest).unwrap_or_else(|p| p);
            moved.insert(pos, dest);
        }
        self.cops = moved;
        Ok(moves)
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        Ok(())
    }

    /// Behavior is a function of the tracked positions; they are included
    /// here because adapters may run this controller on an imagined graph
    /// whose state the real game does not determine.
    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b'o'];
        crate::strategy::push_positions(&mut key, &self.cops);
        push_opt(&mut key, self.robber);
        key
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}

fn push_opt(key: &mut MemoKey, v: Option<usize>) {
    match v {
        None => key.push(0),
        Some(v) => {
            key.push(1);
            key.extend_from_slice(&(v as u16).to_le_bytes());
        }
    }
}

/// Plays the table-optimal robber: a robber-win successor when one exists,
/// otherwise the successor maximizing capture time; ties to the lowest id.
#[derive(Clone)]
pub struct OptimalRobber {
    g: Arc<Graph>,
    table: Arc<SolveTable>,
    cops: Vec<usize>,
    robber: Option<usize>,
}

impl OptimalRobber {
    pub fn new(g: Arc<Graph>, table: Arc<SolveTable>) -> Result<OptimalRobber> {
        check_table(&g, &table)?;
        Ok(OptimalRobber {
            g,
            table,
            cops: Vec::new(),
            robber: None,
        })
    }

    fn pick(&self, candidates: &[usize], state_of: impl Fn(usize) -> GameState) -> usize {
        let mut best: Option<(bool, u16, usize)> = None;
        for &dest in candidates {
            let st = state_of(dest);
            let (is_win, t) = match self.table.status(&st) {
                Status::RobberWin => (true, ROBBER_WIN_TIME),
                Status::CopWin => (false, self.table.time(&st)),
            };
            let better = match best {
                None => true,
                Some((bw, bt, _)) => (is_win && !bw) || (is_win == bw && !is_win && t > bt),
            };
            if better {
                best = Some((is_win, t, dest));
            }
        }
        best.expect("robber always has a candidate").2
    }
}

impl RobberStrategy for OptimalRobber {
    fn name(&self) -> String {
        format!(
            "optimal-robber:rule={},k={}",
            self.table.rule(),
            self.table.k()
        )
    }

    fn place(&mut self, cops: &[usize]) -> Result<usize> {
        self.cops = cops.to_vec();
        self.cops.sort_unstable();
        let free: Vec<usize> = self
            .g
            .vertices()
            .filter(|v| self.cops.binary_search(v).is_err())
            .collect();
        if free.is_empty() {
            self.robber = Some(0);
            return Ok(0); // every vertex is covered; any placement loses
        }
        let cops = self.cops.clone();
        let choice = self.pick(&free, |r| GameState::round_start(cops.clone(), r));
        self.robber = Some(choice);
        Ok(choice)
    }

    fn place_fixed(&mut self, cops: &[usize], robber: usize) -> Result<()> {
        self.cops = cops.to_vec();
        self.cops.sort_unstable();
        self.robber = Some(robber);
        Ok(())
    }

    fn observe_cop_round(&mut self, moves: &[CopMove]) -> Result<()> {
        for &(from, to) in moves {
            let pos = self
                .cops
                .iter()
                .position(|&c| c == from)
                .ok_or_else(|| Error::UnknownState(format!("no cop on {from}")))?;
            self.cops.remove(pos);
            let ins = self.cops.binary_search(&to).unwrap_or_else(|p| p);
            self.cops.insert(ins, to);
        }
        Ok(())
    }

    fn robber_move(&mut self) -> Result<usize> {
        let robber = self.robber.ok_or_else(|| Error::UnknownState("not placed".into()))?;
        let mut candidates: Vec<usize> = self.g.neighbors(robber).to_vec();
        if robber_stay_allowed(self.table.rule()) {
            let pos = candidates.binary_search(&robber).unwrap_or_else(|p| p);
            candidates.insert(pos, robber);
        }
        let cops = self.cops.clone();
        let choice = self.pick(&candidates, |r| GameState::round_start(cops.clone(), r));
        self.robber = Some(choice);
        Ok(choice)
    }

    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b'r'];
        crate::strategy::push_positions(&mut key, &self.cops);
        push_opt(&mut key, self.robber);
        key
    }

    fn clone_box(&self) -> Box<dyn RobberStrategy> {
        Box::new(self.clone())
    }
}
