//! k+1 fully active cops on a product of cycles with at least one odd
//! factor. The play is guided by an imagined passive game on the product of
//! doubled cycles, which covers the target by coordinatewise reduction. All
//! real cops start on the all-zeros vertex; the imagined start is either the
//! all-zeros vertex of the cover or its antipode in the odd coordinate,
//! whichever shares the robber lift's partite set. The passive optimal
//! controller then goes through the same-partite adapter and the covering
//! lift.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cycle, doubled_cycle_cover, Bipartition, Graph};
use crate::solver::cache::solve_cached;
use crate::solver::{GameState, Status};
use crate::strategy::cover::{CoverInit, CoverLiftCops};
use crate::strategy::{CopMove, CopStrategy, MemoKey, OptimalCop, SamePartiteCops};
use crate::MovementRule;

pub struct OddCycleProductCops {
    sizes: Vec<usize>,
    inner: CoverLiftCops,
}

impl OddCycleProductCops {
    /// `sizes` are the cycle lengths; at least one must be odd. Solving the
    /// doubled cover passively dominates construction time, so a cache
    /// directory can be supplied.
    pub fn new(sizes: &[usize], cache_dir: Option<&Path>) -> Result<OddCycleProductCops> {
        let odd_coord = sizes
            .iter()
            .position(|&n| n % 2 == 1)
            .ok_or_else(|| Error::StrategyPrecondition("every cycle length is even".into()))?;
        let k = sizes.len();
        let map = Arc::new(doubled_cycle_cover(sizes)?);
        let source = Arc::new(map.source.clone());
        let table = Arc::new(solve_cached(
            cache_dir,
            &source,
            k + 1,
            MovementRule::PASSIVE,
        )?);
        let bip = Bipartition::compute(&source)?
            .expect("products of doubled (even) cycles are bipartite");

        // antipode of the all-zeros start: the odd coordinate set to its
        // original length, which also reduces to zero under the covering
        let doubled: Vec<Graph> = sizes.iter().map(|&n| cycle(2 * n)).collect::<Result<_>>()?;
        let doubled_product = cartesian_product(&doubled)?;
        let mut antipode_coords = vec![0usize; k];
        antipode_coords[odd_coord] = sizes[odd_coord];
        let antipode = doubled_product.index(&antipode_coords);

        let g_src = source.clone();
        let tbl = table.clone();
        let cop_count = k + 1;
        let pick = move |map: &crate::graph::CoveringMap, robber: usize| {
            let lift = map.any_preimage(robber)?;
            let start = if bip.same_side(0, lift) { 0 } else { antipode };
            debug_assert!(bip.same_side(start, lift));
            let cops = vec![start; cop_count];
            let table: &crate::solver::SolveTable = &tbl;
            if table.status(&GameState::round_start(cops.clone(), lift)) != Status::CopWin {
                return Err(Error::StrategyPrecondition(format!(
                    "imagined passive game is not won from the stacked start {start}"
                )));
            }
            Ok((cops, lift))
        };

        let optimal = OptimalCop::new(source.clone(), table)?;
        let adapted = SamePartiteCops::new(g_src, Box::new(optimal))?;
        let inner = CoverLiftCops::new(
            map,
            Box::new(adapted),
            CoverInit::Custom {
                real_cops: vec![0; k + 1],
                pick: Arc::new(pick),
            },
        );
        Ok(OddCycleProductCops {
            sizes: sizes.to_vec(),
            inner,
        })
    }
}

impl Clone for OddCycleProductCops {
    fn clone(&self) -> Self {
        OddCycleProductCops {
            sizes: self.sizes.clone(),
            inner: self.inner.clone(),
        }
    }
}

impl CopStrategy for OddCycleProductCops {
    fn name(&self) -> String {
        let sizes: Vec<String> = self.sizes.iter().map(|n| n.to_string()).collect();
        format!("odd-cycle-product:{}", sizes.join("x"))
    }

    fn place(&mut self) -> Result<Vec<usize>> {
        self.inner.place()
    }

    fn place_fixed(&mut self, cops: &[usize]) -> Result<()> {
        self.inner.place_fixed(cops)
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        self.inner.observe_robber_placement(robber)
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        self.inner.cop_round()
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        self.inner.observe_robber_move(robber)
    }

    fn memo_key(&self) -> MemoKey {
        self.inner.memo_key()
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}
