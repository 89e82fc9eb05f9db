//! Converts a passive strategy that wins from arbitrary placements into a
//! fully active strategy on a bipartite graph, provided all cops start in
//! the robber's partite set.
//!
//! The adapter replays the passive game in imagination. After t rounds each
//! real cop stands on her imagined vertex or one of its neighbors: a cop off
//! the imagined vertex steps onto it, a cop on it follows the imagined step,
//! and a cop on an imagined vertex that stays steps to any neighbor. Since
//! everyone started in one partite set, an imagined capture on a cop turn
//! forces the real cop onto the robber's vertex, and an imagined capture on
//! a robber turn leaves the real cop adjacent, capturing next round.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::strategy::{push_positions, CopMove, CopStrategy, MemoKey};

pub struct SamePartiteCops {
    g: std::sync::Arc<Graph>,
    bip: Bipartition,
    inner: Box<dyn CopStrategy>,
    imagined: Vec<usize>,
    real: Vec<usize>,
    robber: Option<usize>,
    /// Set when the robber stepped onto imagined cop i: the real cop is a
    /// neighbor of that vertex and walks in to capture.
    finish: Option<(usize, usize)>,
}

impl SamePartiteCops {
    pub fn new(g: std::sync::Arc<Graph>, inner: Box<dyn CopStrategy>) -> Result<SamePartiteCops> {
        let bip = Bipartition::compute(&g)?.ok_or_else(|| {
            Error::StrategyPrecondition("same-partite adapter needs a bipartite graph".into())
        })?;
        Ok(SamePartiteCops {
            g,
            bip,
            inner,
            imagined: Vec::new(),
            real: Vec::new(),
            robber: None,
            finish: None,
        })
    }
}

impl Clone for SamePartiteCops {
    fn clone(&self) -> Self {
        SamePartiteCops {
            g: self.g.clone(),
            bip: self.bip.clone(),
            inner: self.inner.clone_box(),
            imagined: self.imagined.clone(),
            real: self.real.clone(),
            robber: self.robber,
            finish: self.finish,
        }
    }
}

impl CopStrategy for SamePartiteCops {
    fn name(&self) -> String {
        format!("same-partite({})", self.inner.name())
    }

    fn place(&mut self) -> Result<Vec<usize>> {
        self.imagined = self.inner.place()?;
        self.real = self.imagined.clone();
        Ok(self.real.clone())
    }

    fn place_fixed(&mut self, cops: &[usize]) -> Result<()> {
        self.inner.place_fixed(cops)?;
        self.imagined = cops.to_vec();
        self.real = cops.to_vec();
        Ok(())
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        if let Some(&offside) = self
            .real
            .iter()
            .find(|&&c| !self.bip.same_side(c, robber))
        {
            return Err(Error::StrategyPrecondition(format!(
                "cop on {offside} is not in the robber's partite set"
            )));
        }
        self.robber = Some(robber);
        self.inner.observe_robber_placement(robber)
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        if self.robber.is_none() {
            return Err(Error::UnknownState("robber not placed".into()));
        }
        let mut out = Vec::with_capacity(self.real.len());
        if let Some((winner, target)) = self.finish {
            // imagined game already won; walk the adjacent cop in first
            out.push((self.real[winner], target));
            self.real[winner] = target;
            for i in 0..self.real.len() {
                if i == winner {
                    continue;
                }
                let dest = self.g.neighbors(self.real[i])[0];
                out.push((self.real[i], dest));
                self.real[i] = dest;
            }
            return Ok(out);
        }

        let before = self.imagined.clone();
        let inner_moves = self.inner.cop_round()?;
        let mut moved = vec![false; self.imagined.len()];
        for &(from, to) in &inner_moves {
            let i = self
                .imagined
                .iter()
                .enumerate()
                .position(|(i, &p)| !moved[i] && p == from)
                .ok_or_else(|| Error::IllegalMove {
                    side: "cops",
                    detail: format!("inner strategy moved a cop from {from} where none stands"),
                })?;
            moved[i] = true;
            self.imagined[i] = to;
        }
        for i in 0..self.real.len() {
            let p = self.real[i];
            let dest = if p != before[i] {
                before[i] // step back onto the previous imagined vertex
            } else if before[i] != self.imagined[i] {
                self.imagined[i] // follow the imagined step
            } else {
                self.g.neighbors(p)[0] // imagined cop stayed: tread water
            };
            out.push((p, dest));
            self.real[i] = dest;
            debug_assert!(
                self.real[i] == self.imagined[i]
                    || self.g.has_edge(self.real[i], self.imagined[i]),
                "real cop {i} strayed from its imagined vertex"
            );
        }
        Ok(out)
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        if self.finish.is_some() {
            return Ok(());
        }
        if let Some(i) = self.imagined.iter().position(|&v| v == robber) {
            // capture in the imagined game on a robber turn; the real cop
            // (a neighbor, else the arena would have ended the game) closes
            self.finish = Some((i, robber));
            return Ok(());
        }
        self.inner.observe_robber_move(robber)
    }

    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b'p'];
        key.extend(self.inner.memo_key());
        key.push(0xFE);
        push_positions(&mut key, &self.imagined);
        push_positions(&mut key, &self.real);
        match self.finish {
            None => key.push(0),
            Some((i, v)) => {
                key.push(1);
                key.push(i as u8);
                key.extend_from_slice(&(v as u16).to_le_bytes());
            }
        }
        key
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}
