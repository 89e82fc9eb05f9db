//! Single fully active cop on a product of two trees, winning from any
//! start at odd distance: always step closer in the coordinate where the
//! distance is larger. Parity keeps the two distances unequal, and the
//! larger one never recovers what the robber gains.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::ProductStructure;
use crate::strategy::{push_positions, CopMove, CopStrategy, MemoKey};

#[derive(Clone)]
pub struct TreePairCop {
    product: Arc<ProductStructure>,
    cop: usize,
    robber: Option<usize>,
    placed: bool,
}

impl TreePairCop {
    pub fn new(product: Arc<ProductStructure>) -> Result<TreePairCop> {
        if product.factor_count() != 2 {
            return Err(Error::StrategyPrecondition(
                "tree pair strategy needs exactly two factors".into(),
            ));
        }
        for (i, f) in product.factors().iter().enumerate() {
            if !f.is_connected() || f.edge_count() != f.vertex_count() - 1 {
                return Err(Error::StrategyPrecondition(format!(
                    "factor {i} is not a tree"
                )));
            }
            if f.vertex_count() < 2 {
                return Err(Error::StrategyPrecondition(format!("factor {i} is trivial")));
            }
        }
        Ok(TreePairCop {
            product,
            cop: 0,
            robber: None,
            placed: false,
        })
    }

    fn check_parity(&self, robber: usize) -> Result<()> {
        let d = self.product.factor_distance(0, self.cop, robber)
            + self.product.factor_distance(1, self.cop, robber);
        if d % 2 == 0 {
            return Err(Error::StrategyPrecondition(format!(
                "cop and robber at even distance {d}; odd distance required"
            )));
        }
        Ok(())
    }
}

impl CopStrategy for TreePairCop {
    fn name(&self) -> String {
        "tree-pair".into()
    }

    fn place(&mut self) -> Result<Vec<usize>> {
        self.cop = 0;
        self.placed = true;
        Ok(vec![0])
    }

    fn place_fixed(&mut self, cops: &[usize]) -> Result<()> {
        if cops.len() != 1 {
            return Err(Error::parameter("tree pair strategy plays one cop"));
        }
        self.cop = cops[0];
        self.placed = true;
        Ok(())
    }

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()> {
        self.check_parity(robber)?;
        self.robber = Some(robber);
        Ok(())
    }

    fn cop_round(&mut self) -> Result<Vec<CopMove>> {
        let robber = self
            .robber
            .ok_or_else(|| Error::UnknownState("robber not placed".into()))?;
        let d0 = self.product.factor_distance(0, self.cop, robber);
        let d1 = self.product.factor_distance(1, self.cop, robber);
        if d0 == d1 {
            return Err(Error::StrategyPrecondition(format!(
                "equal coordinate distances {d0}; parity invariant broken"
            )));
        }
        let coord = if d0 > d1 { 0 } else { 1 };
        let my = self.product.coords(self.cop)[coord];
        let his = self.product.coords(robber)[coord];
        let step = self.product.factors()[coord]
            .step_toward(my, his)
            .expect("distance positive in chosen coordinate");
        let dest = self.product.with_coord(self.cop, coord, step);
        let mv = (self.cop, dest);
        self.cop = dest;
        Ok(vec![mv])
    }

    fn observe_robber_move(&mut self, robber: usize) -> Result<()> {
        self.robber = Some(robber);
        Ok(())
    }

    fn memo_key(&self) -> MemoKey {
        let mut key = vec![b't'];
        push_positions(&mut key, &[self.cop]);
        key
    }

    fn clone_box(&self) -> Box<dyn CopStrategy> {
        Box::new(self.clone())
    }
}
