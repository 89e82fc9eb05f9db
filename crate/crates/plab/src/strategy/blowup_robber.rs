//! The evading robber on a blowup of a product of 2k-1 nontrivial trees,
//! against 2k-1 fully active cops, for t >= 2k copies.
//!
//! Placement goes to the partite set initially holding at most k-1 cops, on
//! an unoccupied, undominated vertex. On each turn at most k-1 cops are at
//! distance two; their shadows differ from the robber's in at most two
//! coordinates each, so some coordinate agrees with all of them. One tree
//! step in that coordinate leaves every nearby shadow nonadjacent, and with
//! at least 2k copies against 2k-1 cops some copy of the new shadow is free.
//! Rather than trusting the counting argument, the controller searches for
//! the safe vertex directly and asserts safety after every move.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{blowup, cartesian_product, Bipartition, BlowupStructure, Graph, ProductStructure};
use crate::strategy::{CopMove, MemoKey, RobberStrategy};

#[derive(Clone)]
pub struct BlowupRobber {
    product: Arc<ProductStructure>,
    structure: Arc<BlowupStructure>,
    bip: Bipartition,
    k: usize,
    cops: Vec<usize>,
    robber: Option<usize>,
}

impl BlowupRobber {
    /// Builds the arena graph (the t-blowup of the product of the given
    /// trees) together with the controller. Requires 2k-1 nontrivial trees
    /// and t >= 2k.
    pub fn new(trees: &[Graph], t: usize, k: usize) -> Result<BlowupRobber> {
        if k < 2 {
            return Err(Error::StrategyPrecondition(
                "the tight construction needs k >= 2".into(),
            ));
        }
        if trees.len() != 2 * k - 1 {
            return Err(Error::StrategyPrecondition(format!(
                "expected {} tree factors, got {}",
                2 * k - 1,
                trees.len()
            )));
        }
        if t < 2 * k {
            return Err(Error::StrategyPrecondition(format!(
                "evasion needs t >= 2k (t={t}, k={k})"
            )));
        }
        for (i, f) in trees.iter().enumerate() {
            if f.vertex_count() < 2 || !f.is_connected() || f.edge_count() != f.vertex_count() - 1
            {
                return Err(Error::StrategyPrecondition(format!(
                    "factor {i} is not a nontrivial tree"
                )));
            }
        }
        let product = Arc::new(cartesian_product(trees)?);
        let structure = Arc::new(blowup(product.graph(), t)?);
        let bip = Bipartition::compute(structure.graph())?
            .expect("blowups of bipartite graphs are bipartite");
        Ok(BlowupRobber {
            product,
            structure,
            bip,
            k,
            cops: Vec::new(),
            robber: None,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.structure.graph()
    }

    pub fn structure(&self) -> &BlowupStructure {
        &self.structure
    }

    fn dominated(&self, v: usize) -> bool {
        self.cops.contains(&v)
            || self
                .cops
                .iter()
                .any(|&c| self.structure.graph().has_edge(c, v))
    }

    fn assert_safe(&self, v: usize) -> Result<()> {
        if self.dominated(v) {
            return Err(Error::StrategyPrecondition(format!(
                "safety assertion failed: vertex {v} occupied or dominated"
            )));
        }
        Ok(())
    }
}

impl RobberStrategy for BlowupRobber {
    fn name(&self) -> String {
        format!("blowup-robber:k={}", self.k)
    }

    fn place(&mut self, cops: &[usize]) -> Result<usize> {
        if cops.len() != 2 * self.k - 1 {
            return Err(Error::StrategyPrecondition(format!(
                "evasion designed against {} cops, got {}",
                2 * self.k - 1,
                cops.len()
            )));
        }
        self.cops = cops.to_vec();
        let on_x = cops.iter().filter(|&&c| self.bip.side(c) == 0).count();
        // exactly one side holds at most k-1 of the 2k-1 cops
        let target_side = if on_x <= self.k - 1 { 0 } else { 1 };
        let choice = self
            .structure
            .graph()
            .vertices()
            .find(|&v| self.bip.side(v) == target_side && !self.dominated(v))
            .ok_or_else(|| {
                Error::StrategyPrecondition(
                    "no safe starting vertex; the counting bound fails at this scale".into(),
                )
            })?;
        self.robber = Some(choice);
        Ok(choice)
    }

    fn place_fixed(&mut self, cops: &[usize], robber: usize) -> Result<()> {
        self.cops = cops.to_vec();
        self.assert_safe(robber)?;
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
        let g = self.structure.graph();
        let dist = g.bfs_distances(robber);
        let my_shadow = self.structure.shadow(robber);
        let my_coords = self.product.coords(my_shadow);

        // cops exactly two away are the ones whose shadows could become
        // adjacent; shadows of same-shadow cops agree in every coordinate
        let threat_shadows: Vec<Vec<usize>> = self
            .cops
            .iter()
            .filter(|&&c| dist[c] == 2)
            .map(|&c| self.product.coords(self.structure.shadow(c)))
            .collect();
        let coord = (0..self.product.factor_count())
            .find(|&i| threat_shadows.iter().all(|s| s[i] == my_coords[i]))
            .ok_or_else(|| {
                Error::StrategyPrecondition(
                    "no coordinate agrees with every cop at distance two".into(),
                )
            })?;
        let step = self.product.factors()[coord].neighbors(my_coords[coord])[0];
        let new_shadow = self.product.with_coord(my_shadow, coord, step);
        let copy = self
            .structure
            .copies_of(new_shadow)
            .find(|&v| !self.cops.contains(&v))
            .ok_or_else(|| {
                Error::StrategyPrecondition("every copy of the target shadow holds a cop".into())
            })?;
        self.assert_safe(copy)?;
        self.robber = Some(copy);
        Ok(copy)
    }

    /// Memoryless: every decision is a function of the current positions.
    fn memo_key(&self) -> MemoKey {
        Vec::new()
    }

    fn clone_box(&self) -> Box<dyn RobberStrategy> {
        Box::new(self.clone())
    }
}
