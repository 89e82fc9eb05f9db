//! Doubles a winning passive strategy into a fully active one: every
//! strategy cop gets a partner on an adjacent vertex. When the strategy cop
//! steps, the partner steps into the vacated vertex; when she stays, the
//! pair swap vertices (and labels, so the bookkeeping is position-stable).
//! Every vertex the passive strategy occupies is occupied in the real game.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::strategy::{push_positions, CopMove, CopStrategy, MemoKey};

pub struct DoublingCops {
    g: std::sync::Arc<Graph>,
    inner: Box<dyn CopStrategy>,
    /// imagined passive-game cop positions, by identity
    imagined: Vec<usize>,
    /// partner positions, by identity; partner[i] is adjacent to imagined[i]
    partner: Vec<usize>,
}

impl DoublingCops {
    /// `inner` is a passive-game controller for k cops; the adapter plays 2k.
    pub fn new(g: std::sync::Arc<Graph>, inner: Box<dyn CopStrategy>) -> DoublingCops {
        DoublingCops {
            g,
            inner,
            imagined: Vec::new(),
            partner: Vec::new(),
        }
    }

    /// Matches an emitted (from, to) to the lowest unmoved imagined identity
    /// standing on `from`.
    fn match_identity(&self, from: usize, moved: &[bool]) -> Result<usize> {
        self.imagined
            .iter()
            .enumerate()
            .position(|(i, &p)| !moved[i] && p == from)
            .ok_or_else(|| Error::IllegalMove {
                side: "cops",
                detail: format!("inner strategy moved a cop from {from} where none stands"),
            })
    }
}

impl Clone for DoublingCops {
    fn clone(&self) -> Self {
        DoublingCops {
            g: self.g.clone(),
            inner: self.inner.clone_box(),
            imagined: self.imagined.clone(),
            partner: self.partner.clone(),
        }
    }
}

impl CopStrategy for DoublingCops {
    fn name(&self) -> String {
        format!("doubling({})", self.inner.name())
    }

    fn place(&mut self) -> Result<Vec<usize>> {
        self.imagined = self.inner.place()?;
        self.partner = self
            .imagined
            .iter()
            .map(|&v| self.g.neighbors(v)[0])
            .collect();
        let mut all = self.imagined.clone();
        all.extend_from_slice(&self.partner);
        Ok(all)
    }

    fn place_fixed(&mut self, _cops: &[usize]) -> Result<()> {
        Err(Error::StrategyPrecondition(
            "doubling adapter derives its placement from the wrapped strategy".into(),
        ))
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        self.inner.observe_robber_placement(robber)
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        let inner_moves = self.inner.cop_round()?;
        if inner_moves.len() != self.imagined.len() {
            return Err(Error::IllegalMove {
                side: "cops",
                detail: format!(
                    "inner strategy emitted {} moves for {} cops",
                    inner_moves.len(),
                    self.imagined.len()
                ),
            });
        }
        let mut moved = vec![false; self.imagined.len()];
        let mut out = Vec::with_capacity(2 * self.imagined.len());
        for &(from, to) in &inner_moves {
            let i = self.match_identity(from, &moved)?;
            moved[i] = true;
            if to != from {
                if !self.g.has_edge(from, to) {
                    return Err(Error::IllegalMove {
                        side: "cops",
                        detail: format!("inner strategy step {from} -> {to} is not an edge"),
                    });
                }
                // strategy cop follows, partner takes the vacated vertex
                out.push((self.imagined[i], to));
                out.push((self.partner[i], self.imagined[i]));
                self.partner[i] = self.imagined[i];
                self.imagined[i] = to;
            } else {
                // passive stay: the pair swap vertices and labels, which
                // leaves the bookkeeping unchanged
                out.push((self.imagined[i], self.partner[i]));
                out.push((self.partner[i], self.imagined[i]));
            }
        }
        debug_assert!(moved.iter().all(|&m| m));
        Ok(out)
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        self.inner.observe_robber_move(robber)
    }

    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b'd'];
        key.extend(self.inner.memo_key());
        key.push(0xFE);
        push_positions(&mut key, &self.imagined);
        push_positions(&mut key, &self.partner);
        key
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}
