//! Lifts a winning strategy through a covering map: cops play an imagined
//! game on the covering (source) graph, robber moves lift uniquely through
//! the local bijection, cop moves project down. A capture upstairs is a
//! capture downstairs because images coincide.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::CoveringMap;
use crate::strategy::{push_positions, CopMove, CopStrategy, MemoKey};

type PlacementPick =
    Arc<dyn Fn(&CoveringMap, usize) -> Result<(Vec<usize>, usize)> + Send + Sync>;

/// How the imagined game is set up.
pub enum CoverInit {
    /// The wrapped strategy places itself upstairs; real cops stand on the
    /// images; the robber lifts to his lowest-id preimage.
    InnerPlaces,
    /// Fixed real placement; the imagined cop placement and robber lift are
    /// chosen together once the robber has placed (cops imposed on the inner
    /// controller via `place_fixed`).
    Custom {
        real_cops: Vec<usize>,
        pick: PlacementPick,
    },
}

pub struct CoverLiftCops {
    map: Arc<CoveringMap>,
    inner: Box<dyn CopStrategy>,
    init: Arc<CoverInit>,
    imagined_robber: Option<usize>,
}

impl CoverLiftCops {
    pub fn new(
        map: Arc<CoveringMap>,
        inner: Box<dyn CopStrategy>,
        init: CoverInit,
    ) -> CoverLiftCops {
        CoverLiftCops {
            map,
            inner,
            init: Arc::new(init),
            imagined_robber: None,
        }
    }
}

impl Clone for CoverLiftCops {
    fn clone(&self) -> Self {
        CoverLiftCops {
            map: self.map.clone(),
            inner: self.inner.clone_box(),
            init: self.init.clone(),
            imagined_robber: self.imagined_robber,
        }
    }
}

impl CopStrategy for CoverLiftCops {
    fn name(&self) -> String {
        format!("cover-lift({})", self.inner.name())
    }

    fn place(&mut self) -> Result<Vec<usize>> {
        match &*self.init {
            CoverInit::InnerPlaces => {
                let upstairs = self.inner.place()?;
                Ok(upstairs.iter().map(|&v| self.map.image_of(v)).collect())
            }
            CoverInit::Custom { real_cops, .. } => Ok(real_cops.clone()),
        }
    }

    fn place_fixed(&mut self, _cops: &[usize]) -> Result<()> {
        Err(Error::StrategyPrecondition(
            "cover lift derives its placement from the imagined game".into(),
        ))
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        match &*self.init {
            CoverInit::InnerPlaces => {
                let lift = self.map.any_preimage(robber)?;
                self.imagined_robber = Some(lift);
                self.inner.observe_robber_placement(lift)
            }
            CoverInit::Custom { pick, .. } => {
                let (imagined_cops, lift) = pick(&self.map, robber)?;
                self.inner.place_fixed(&imagined_cops)?;
                self.imagined_robber = Some(lift);
                self.inner.observe_robber_placement(lift)
            }
        }
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        let upstairs = self.inner.cop_round()?;
        Ok(upstairs
            .iter()
            .map(|&(f, t)| (self.map.image_of(f), self.map.image_of(t)))
            .collect())
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        let at = self
            .imagined_robber
            .ok_or_else(|| Error::UnknownState("robber not placed".into()))?;
        let lift = if robber == self.map.image_of(at) {
            at // stays lift to stays
        } else {
            self.map.lift_step(at, robber)?
        };
        self.imagined_robber = Some(lift);
        self.inner.observe_robber_move(lift)
    }

    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b'c'];
        key.extend(self.inner.memo_key());
        key.push(0xFE);
        match self.imagined_robber {
            None => key.push(0),
            Some(v) => push_positions(&mut key, &[v]),
        }
        key
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}
