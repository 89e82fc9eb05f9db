//! Deterministic, stateful controllers for one side of the game, plus the
//! adapters that transform winning strategies between movement rules.
//!
//! Controllers are state machines driven by the arena: placement, then
//! alternating rounds of emitting their own moves and observing the
//! opponent's. Every controller exposes a canonical `memo_key` over its
//! internal state; equal key plus equal game state implies equal future
//! behavior, which is what lets the arena memoize exhaustive verification.

mod blowup_robber;
pub mod cover;
mod doubling;
mod odd_cycle;
mod optimal;
mod outerplanar;
mod partite;
mod registry;
mod shadow;
mod tree_pair;
mod tree_product;

pub use blowup_robber::BlowupRobber;
pub use cover::{CoverInit, CoverLiftCops};
pub use doubling::DoublingCops;
pub use odd_cycle::OddCycleProductCops;
pub use optimal::{OptimalCop, OptimalRobber};
pub use outerplanar::{BlockEmbeddings, OuterplanarCops};
pub use partite::SamePartiteCops;
pub use registry::{build_cop_controller, build_robber_controller, registry_help};
pub use shadow::ShadowPassiveCops;
pub use tree_pair::TreePairCop;
pub use tree_product::{tree_product_cop_count, TreeProductCops, TreeProductRobber};

use crate::error::Result;

/// Canonical encoding of a controller's internal state.
pub type MemoKey = Vec<u8>;

/// An individual cop move: (current vertex, destination). A round is a
/// sequence of exactly k of these, one per cop, applied in order with
/// capture checked after each.
pub type CopMove = (usize, usize);

pub trait CopStrategy: Send {
    fn name(&self) -> String;

    /// The controller's own choice of initial cop positions.
    fn place(&mut self) -> Result<Vec<usize>>;

    /// Imposes an initial placement. Controllers whose strategy depends on
    /// choosing their own placement return an error.
    fn place_fixed(&mut self, cops: &[usize]) -> Result<()>;

    fn observe_robber_placement(&mut self, robber: usize) -> Result<()>;

    /// The round's individual moves, in emission order.
    fn cop_round(&mut self) -> Result<Vec<CopMove>>;

    fn observe_robber_move(&mut self, robber: usize) -> Result<()>;

    fn memo_key(&self) -> MemoKey;

    fn clone_box(&self) -> Box<dyn CopStrategy>;
}

pub trait RobberStrategy: Send {
    fn name(&self) -> String;

    /// The controller's own choice of starting vertex, after seeing the cops.
    fn place(&mut self, cops: &[usize]) -> Result<usize>;

    /// Imposes a starting vertex.
    fn place_fixed(&mut self, cops: &[usize], robber: usize) -> Result<()>;

    fn observe_cop_round(&mut self, moves: &[CopMove]) -> Result<()>;

    fn robber_move(&mut self) -> Result<usize>;

    fn memo_key(&self) -> MemoKey;

    fn clone_box(&self) -> Box<dyn RobberStrategy>;
}

impl Clone for Box<dyn CopStrategy> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

impl Clone for Box<dyn RobberStrategy> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

pub(crate) fn push_positions(key: &mut Vec<u8>, positions: &[usize]) {
    key.push(positions.len() as u8);
    for &p in positions {
        key.extend_from_slice(&(p as u16).to_le_bytes());
    }
}
