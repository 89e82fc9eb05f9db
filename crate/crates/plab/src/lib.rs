//! Exact solving and strategy verification for cops-and-robbers games.
//!
//! The crate has four layers:
//!
//! - [`graph`]: compact undirected graphs plus the constructions the games
//!   are played on (families, Cartesian products, blowups, outerplanar
//!   embeddings, covering maps, seeded random generators).
//! - [`solver`]: exact classification of every game state for a given graph,
//!   cop count and movement rule, by backward fixed-point computation, with
//!   optimal controllers extracted from the solved table.
//! - [`strategy`]: constructive pursuit/evasion strategies and the adapters
//!   that transform winning strategies between movement rules.
//! - [`arena`]: plays controllers against each other and exhaustively
//!   verifies one side against every behavior of the opponent.
//!
//! [`suite`] wires everything into a reproducible verification suite with
//! report emission; the `plab` binary exposes it all on the command line.

pub mod arena;
pub mod error;
pub mod graph;
pub mod rules;
pub mod solver;
pub mod strategy;
pub mod suite;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rules::MovementRule;
