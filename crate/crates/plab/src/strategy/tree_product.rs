//! Both sides of the fully active game on a Cartesian product of k
//! nontrivial trees, where the cop number is ceil(2k/3).
//!
//! Cop side: the cops split into two groups on a vertex and a neighbor, so
//! after the robber places there are c cops at even distance and d at odd
//! distance, and those counts never change. Even cops receive one inactive
//! coordinate, odd cops two; coordinate indices past the last coordinate are
//! clamped to it, and c + 2d >= k makes every coordinate inactive for
//! somebody. A cop first closes disagreements in her active coordinates,
//! then plays the restriction to her inactive ones (single tree: step
//! closer; pair: the tree-pair rule, legal because her restricted distance
//! is odd).
//!
//! Robber side: against fewer cops, some coordinate always agrees with every
//! cop at distance at most two, and a step in that coordinate keeps him
//! unoccupied and unadjacent.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, ProductStructure};
use crate::strategy::{push_positions, CopMove, CopStrategy, MemoKey, RobberStrategy};

/// ceil(2k/3) for k factors.
pub fn tree_product_cop_count(k: usize) -> usize {
    (2 * k).div_ceil(3)
}

fn check_tree_factors(product: &ProductStructure) -> Result<()> {
    for (i, f) in product.factors().iter().enumerate() {
        if f.vertex_count() < 2 {
            return Err(Error::StrategyPrecondition(format!(
                "factor {i} is a trivial tree"
            )));
        }
        if !f.is_connected() || f.edge_count() != f.vertex_count() - 1 {
            return Err(Error::StrategyPrecondition(format!("factor {i} is not a tree")));
        }
    }
    Ok(())
}

#[derive(Clone)]
pub struct TreeProductCops {
    product: Arc<ProductStructure>,
    cops: Vec<usize>,
    /// per-cop inactive coordinates (one or two entries, deduplicated)
    inactive: Vec<Vec<usize>>,
    robber: Option<usize>,
}

impl TreeProductCops {
    pub fn new(product: Arc<ProductStructure>) -> Result<TreeProductCops> {
        check_tree_factors(&product)?;
        Ok(TreeProductCops {
            product,
            cops: Vec::new(),
            inactive: Vec::new(),
            robber: None,
        })
    }

    fn distance(&self, u: usize, v: usize) -> usize {
        (0..self.product.factor_count())
            .map(|i| self.product.factor_distance(i, u, v))
            .sum()
    }

    /// Assigns inactive coordinates given the robber's placement: even cops
    /// get coordinates 0..c, odd cops the pairs after them, all clamped to
    /// the last coordinate.
    fn assign(&mut self, robber: usize) {
        let k = self.product.factor_count();
        let clamp = |c: usize| c.min(k - 1);
        let mut even_ids: Vec<usize> = Vec::new();
        let mut odd_ids: Vec<usize> = Vec::new();
        for (i, &c) in self.cops.iter().enumerate() {
            if self.distance(c, robber) % 2 == 0 {
                even_ids.push(i);
            } else {
                odd_ids.push(i);
            }
        }
        self.inactive = vec![Vec::new(); self.cops.len()];
        for (j, &i) in even_ids.iter().enumerate() {
            self.inactive[i] = vec![clamp(j)];
        }
        let c = even_ids.len();
        for (j, &i) in odd_ids.iter().enumerate() {
            let a = clamp(c + 2 * j);
            let b = clamp(c + 2 * j + 1);
            self.inactive[i] = if a == b { vec![a] } else { vec![a, b] };
        }
        let d = odd_ids.len();
        debug_assert!(c + 2 * d >= k, "coordinate coverage violated: c={c} d={d} k={k}");
    }

    fn cop_move(&self, cop: usize, inactive: &[usize], robber: usize) -> Result<usize> {
        let my = self.product.coords(cop);
        let his = self.product.coords(robber);
        // close an active disagreement first (lowest coordinate)
        for i in 0..self.product.factor_count() {
            if inactive.contains(&i) || my[i] == his[i] {
                continue;
            }
            let step = self.product.factors()[i].step_toward(my[i], his[i]).unwrap();
            return Ok(self.product.with_coord(cop, i, step));
        }
        // all active coordinates agree: play the inactive-coordinate game
        match inactive.len() {
            1 => {
                let i = inactive[0];
                let step = self.product.factors()[i].step_toward(my[i], his[i]).ok_or_else(
                    || Error::StrategyPrecondition("cop shares the robber's vertex".into()),
                )?;
                Ok(self.product.with_coord(cop, i, step))
            }
            2 => {
                let (a, b) = (inactive[0], inactive[1]);
                let da = self.product.factor_distance(a, cop, robber);
                let db = self.product.factor_distance(b, cop, robber);
                if da == db {
                    return Err(Error::StrategyPrecondition(format!(
                        "pair distances equal ({da}); odd-distance invariant broken"
                    )));
                }
                let i = if da > db { a } else { b };
                let step = self.product.factors()[i].step_toward(my[i], his[i]).unwrap();
                Ok(self.product.with_coord(cop, i, step))
            }
            _ => unreachable!("one or two inactive coordinates"),
        }
    }
}

impl CopStrategy for TreeProductCops {
    fn name(&self) -> String {
        "tree-product".into()
    }

    /// One group on vertex 0, the other on its lowest neighbor, sizes
    /// differing by at most one.
    fn place(&mut self) -> Result<Vec<usize>> {
        let m = tree_product_cop_count(self.product.factor_count());
        let anchor = 0usize;
        let neighbor = self.product.graph().neighbors(anchor)[0];
        let first = m.div_ceil(2);
        let mut cops = vec![anchor; first];
        cops.extend(std::iter::repeat(neighbor).take(m - first));
        self.cops = cops.clone();
        Ok(cops)
    }

    fn place_fixed(&mut self, _cops: &[usize]) -> Result<()> {
        Err(Error::StrategyPrecondition(
            "tree-product cops choose their own split placement".into(),
        ))
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        self.assign(robber);
        Ok(())
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        let robber = self
            .robber
            .ok_or_else(|| Error::UnknownState("robber not placed".into()))?;
        let mut moves = Vec::with_capacity(self.cops.len());
        for i in 0..self.cops.len() {
            let dest = self.cop_move(self.cops[i], &self.inactive[i], robber)?;
            moves.push((self.cops[i], dest));
            self.cops[i] = dest;
        }
        Ok(moves)
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        Ok(())
    }

    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b'T'];
        push_positions(&mut key, &self.cops);
        for set in &self.inactive {
            key.push(set.len() as u8);
            for &c in set {
                key.push(c as u8);
            }
        }
        key
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}

/// The evading robber against at most ceil(2k/3) - 1 cops. Against more
/// cops than the guarantee covers it keeps playing best-effort legal moves
/// (and gets captured); the safety assertions are hard errors only within
/// the guaranteed strength, where a violation would falsify the bound.
#[derive(Clone)]
pub struct TreeProductRobber {
    product: Arc<ProductStructure>,
    bip: Bipartition,
    cops: Vec<usize>,
    robber: Option<usize>,
    outnumbered: bool,
}

impl TreeProductRobber {
    pub fn new(product: Arc<ProductStructure>) -> Result<TreeProductRobber> {
        check_tree_factors(&product)?;
        let bip = Bipartition::compute(product.graph())?
            .expect("tree products are bipartite");
        Ok(TreeProductRobber {
            product,
            bip,
            cops: Vec::new(),
            robber: None,
            outnumbered: false,
        })
    }

    fn distance(&self, u: usize, v: usize) -> usize {
        (0..self.product.factor_count())
            .map(|i| self.product.factor_distance(i, u, v))
            .sum()
    }

    fn dominated(&self, v: usize) -> bool {
        self.cops.contains(&v)
            || self
                .cops
                .iter()
                .any(|&c| self.product.graph().has_edge(c, v))
    }

    fn assert_safe(&self, v: usize) -> Result<()> {
        if self.dominated(v) {
            return Err(Error::StrategyPrecondition(format!(
                "safety assertion failed: vertex {v} is occupied or dominated"
            )));
        }
        Ok(())
    }
}

impl RobberStrategy for TreeProductRobber {
    fn name(&self) -> String {
        "tree-product-robber".into()
    }

    /// Starts in the partite set initially holding at least half the cops
    /// (they will be on the other side whenever it is his turn), on the
    /// lowest undominated vertex there.
    fn place(&mut self, cops: &[usize]) -> Result<usize> {
        let allowed = tree_product_cop_count(self.product.factor_count()) - 1;
        self.outnumbered = cops.len() > allowed;
        self.cops = cops.to_vec();
        let on_x = cops.iter().filter(|&&c| self.bip.side(c) == 0).count();
        let target_side = if on_x <= cops.len() - on_x { 1 } else { 0 };
        let on_side = self
            .product
            .graph()
            .vertices()
            .find(|&v| self.bip.side(v) == target_side && !self.dominated(v));
        let choice = match on_side {
            Some(v) => v,
            None if self.outnumbered => self
                .product
                .graph()
                .vertices()
                .find(|&v| !self.dominated(v))
                .or_else(|| self.product.graph().vertices().find(|v| !self.cops.contains(v)))
                .unwrap_or(0),
            None => {
                return Err(Error::StrategyPrecondition(
                    "no safe starting vertex; the counting bound fails at this scale".into(),
                ))
            }
        };
        self.robber = Some(choice);
        Ok(choice)
    }

    fn place_fixed(&mut self, cops: &[usize], robber: usize) -> Result<()> {
        let allowed = tree_product_cop_count(self.product.factor_count()) - 1;
        self.outnumbered = cops.len() > allowed;
        self.cops = cops.to_vec();
        if !self.outnumbered {
            self.assert_safe(robber)?;
        }
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
            self.cops[pos] = to;
        }
        Ok(())
    }

    fn robber_move(&mut self) -> Result<usize> {
        let robber = self
            .robber
            .ok_or_else(|| Error::UnknownState("not placed".into()))?;
        let k = self.product.factor_count();
        let my = self.product.coords(robber);
        let threats: Vec<usize> = self
            .cops
            .iter()
            .copied()
            .filter(|&c| self.distance(c, robber) <= 2)
            .collect();
        let coord = (0..k).find(|&i| {
            threats
                .iter()
                .all(|&c| self.product.coords(c)[i] == my[i])
        });
        let dest = match coord {
            Some(i) => {
                let step = self.product.factors()[i].neighbors(my[i])[0];
                self.product.with_coord(robber, i, step)
            }
            None if self.outnumbered => {
                // beyond the guaranteed strength: flee to the best neighbor
                let ns = self.product.graph().neighbors(robber);
                ns.iter()
                    .copied()
                    .find(|&v| !self.dominated(v))
                    .or_else(|| ns.iter().copied().find(|v| !self.cops.contains(v)))
                    .unwrap_or(ns[0])
            }
            None => {
                return Err(Error::StrategyPrecondition(
                    "no coordinate agrees with every nearby cop; evasion argument fails".into(),
                ))
            }
        };
        if !self.outnumbered {
            self.assert_safe(dest)?;
        }
        self.robber = Some(dest);
        Ok(dest)
    }

    fn memo_key(&self) -> MemoKey {
        Vec::new() // memoryless: behavior is a function of positions alone
    }

    fn clone_box(&self) -> Box<dyn RobberStrategy> {
        Box::new(self.clone())
    }
}
