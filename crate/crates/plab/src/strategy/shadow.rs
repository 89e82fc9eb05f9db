//! Turns a winning fully active strategy into a passive one with a single
//! extra cop. The strategy cops mirror the wrapped controller, but only when
//! the robber actually moved; on a pass they hold, which is legal in the
//! passive game. The extra cop walks down a shortest path to the robber
//! every round, so the robber cannot pass forever: once she is adjacent, a
//! pass is capture, and forced movement is exactly the game the wrapped
//! strategy wins.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::strategy::{push_positions, CopMove, CopStrategy, MemoKey};

pub struct ShadowPassiveCops {
    g: std::sync::Arc<Graph>,
    inner: Box<dyn CopStrategy>,
    mirrors: Vec<usize>,
    star: usize,
    robber: Option<usize>,
    robber_moved: bool,
    first_round: bool,
}

impl ShadowPassiveCops {
    /// `inner` is a fully-active-game controller for t cops; the adapter
    /// plays t + 1 in the passive game.
    pub fn new(g: std::sync::Arc<Graph>, inner: Box<dyn CopStrategy>) -> ShadowPassiveCops {
        ShadowPassiveCops {
            g,
            inner,
            mirrors: Vec::new(),
            star: 0,
            robber: None,
            robber_moved: false,
            first_round: true,
        }
    }
}

impl Clone for ShadowPassiveCops {
    fn clone(&self) -> Self {
        ShadowPassiveCops {
            g: self.g.clone(),
            inner: self.inner.clone_box(),
            mirrors: self.mirrors.clone(),
            star: self.star,
            robber: self.robber,
            robber_moved: self.robber_moved,
            first_round: self.first_round,
        }
    }
}

impl CopStrategy for ShadowPassiveCops {
    fn name(&self) -> String {
        format!("shadow-passive({})", self.inner.name())
    }

    fn place(&mut self) -> Result<Vec<usize>> {
        self.mirrors = self.inner.place()?;
        self.star = 0;
        let mut all = self.mirrors.clone();
        all.push(self.star);
        Ok(all)
    }

    fn place_fixed(&mut self, _cops: &[usize]) -> Result<()> {
        Err(Error::StrategyPrecondition(
            "shadow adapter derives its placement from the wrapped strategy".into(),
        ))
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        self.inner.observe_robber_placement(robber)
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        let robber = self
            .robber
            .ok_or_else(|| Error::UnknownState("robber not placed".into()))?;
        let mut out = Vec::with_capacity(self.mirrors.len() + 1);
        if self.first_round || self.robber_moved {
            self.first_round = false;
            let inner_moves = self.inner.cop_round()?;
            let mut moved = vec![false; self.mirrors.len()];
            for &(from, to) in &inner_moves {
                let i = self
                    .mirrors
                    .iter()
                    .enumerate()
                    .position(|(i, &p)| !moved[i] && p == from)
                    .ok_or_else(|| Error::IllegalMove {
                        side: "cops",
                        detail: format!("inner strategy moved a cop from {from} where none stands"),
                    })?;
                moved[i] = true;
                out.push((self.mirrors[i], to));
                self.mirrors[i] = to;
            }
        } else {
            // robber passed: hold the mirrored cops, imagined game frozen
            for &p in &self.mirrors {
                out.push((p, p));
            }
        }
        // the extra cop closes in every round; adjacent means capture
        let step = self
            .g
            .step_toward(self.star, robber)
            .unwrap_or(robber); // distance zero cannot happen in play
        out.push((self.star, step));
        self.star = step;
        Ok(out)
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        let prev = self.robber.replace(robber);
        self.robber_moved = prev != Some(robber);
        if self.robber_moved {
            self.inner.observe_robber_move(robber)?;
        }
        Ok(())
    }

    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b's'];
        key.extend(self.inner.memo_key());
        key.push(0xFE);
        push_positions(&mut key, &self.mirrors);
        push_positions(&mut key, &[self.star]);
        key.push(self.robber_moved as u8);
        key.push(self.first_round as u8);
        key
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}
