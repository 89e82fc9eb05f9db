//! Plays controllers against each other and records transcripts.

mod verify;

pub use verify::{
    exhaustive_verify_cop, exhaustive_verify_robber, verify_robber_unmemoized_for_tests,
    CopPlacementMode, CopPlacements, CopVerification, RobberPlacementFilter, RobberPlacementMode,
    RobberVerification, VerifyCopOptions,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rules::MovementRule;
use crate::solver::{cop_stay_allowed, cop_step_allowed, robber_stay_allowed};
use crate::strategy::{CopMove, CopStrategy, RobberStrategy};

/// How a play-out ended.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Outcome {
    /// A cop shares the robber's vertex; `round` 0 means at placement.
    Capture { round: u32 },
    /// The round bound elapsed without capture.
    Survived { bound: u32 },
    /// A repeated (controller, state) pair proves indefinite evasion.
    CycleProven,
    /// A controller emitted an illegal move.
    Invalid { culprit: String, detail: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct RoundRecord {
    pub cop_moves: Vec<CopMove>,
    /// Absent when the cops captured mid-round.
    pub robber_move: Option<usize>,
}

/// Full record of one play-out.
#[derive(Debug, Clone, Serialize)]
pub struct Transcript {
    pub graph_hash: String,
    pub rule: String,
    pub k: usize,
    pub cop_controller: String,
    pub robber_controller: String,
    pub cop_placement: Vec<usize>,
    pub robber_placement: usize,
    pub rounds: Vec<RoundRecord>,
    pub outcome: Outcome,
}

impl Transcript {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcript serialization")
    }
}

/// Applies one emitted cop round to `cops`, validating each individual move
/// against the rule and checking capture after each. Returns the index of
/// the capturing move, if any. `cops` ends sorted.
pub(crate) fn apply_cop_round(
    g: &Graph,
    rule: MovementRule,
    cops: &mut Vec<usize>,
    robber: usize,
    moves: &[CopMove],
) -> Result<Option<usize>> {
    let k = cops.len();
    if moves.len() > k {
        return Err(Error::IllegalMove {
            side: "cops",
            detail: format!("{} moves emitted for {k} cops", moves.len()),
        });
    }
    let mut pending = cops.clone();
    let mut moved: Vec<usize> = Vec::with_capacity(k);
    let mut any_moved = false;
    for (i, &(from, to)) in moves.iter().enumerate() {
        let slot = pending.iter().position(|&p| p == from).ok_or_else(|| {
            Error::IllegalMove {
                side: "cops",
                detail: format!("move {i}: no unmoved cop stands on {from}"),
            }
        })?;
        let stepping = to != from;
        if stepping {
            if !g.has_edge(from, to) {
                return Err(Error::IllegalMove {
                    side: "cops",
                    detail: format!("move {i}: {from} -> {to} is not an edge"),
                });
            }
            if !cop_step_allowed(rule, any_moved) {
                return Err(Error::IllegalMove {
                    side: "cops",
                    detail: format!("move {i}: a second cop stepped under the at-most-one rule"),
                });
            }
        } else {
            let is_last = pending.len() == 1;
            if !cop_stay_allowed(rule, any_moved, is_last) {
                return Err(Error::IllegalMove {
                    side: "cops",
                    detail: format!("move {i}: cop on {from} may not stay under rule {rule}"),
                });
            }
        }
        pending.swap_remove(slot);
        moved.push(to);
        any_moved |= stepping;
        if to == robber {
            // capture ends the round; remaining cops do not move
            let mut all: Vec<usize> = moved.iter().chain(pending.iter()).copied().collect();
            all.sort_unstable();
            *cops = all;
            return Ok(Some(i));
        }
    }
    if !pending.is_empty() {
        return Err(Error::IllegalMove {
            side: "cops",
            detail: format!("round ended with {} cops unmoved", pending.len()),
        });
    }
    moved.sort_unstable();
    *cops = moved;
    Ok(None)
}

pub(crate) fn validate_robber_move(
    g: &Graph,
    rule: MovementRule,
    from: usize,
    to: usize,
) -> Result<()> {
    if to == from {
        if !robber_stay_allowed(rule) {
            return Err(Error::IllegalMove {
                side: "robber",
                detail: format!("robber must move but stayed on {from}"),
            });
        }
        return Ok(());
    }
    if !g.has_edge(from, to) {
        return Err(Error::IllegalMove {
            side: "robber",
            detail: format!("robber move {from} -> {to} is not an edge"),
        });
    }
    Ok(())
}

/// Runs one game. Cops place, the robber places, then rounds alternate
/// (cop round, robber move) with capture checks after every individual move.
pub fn play(
    g: &Graph,
    rule: MovementRule,
    cop_controller: &mut dyn CopStrategy,
    robber_controller: &mut dyn RobberStrategy,
    round_bound: u32,
) -> Result<Transcript> {
    let mut transcript = Transcript {
        graph_hash: format!("{:016x}", g.adjacency_hash()),
        rule: rule.name().to_string(),
        k: 0,
        cop_controller: cop_controller.name(),
        robber_controller: robber_controller.name(),
        cop_placement: Vec::new(),
        robber_placement: usize::MAX,
        rounds: Vec::new(),
        outcome: Outcome::Survived { bound: round_bound },
    };

    let mut cops = cop_controller.place()?;
    cops.sort_unstable();
    for &c in &cops {
        if c >= g.vertex_count() {
            transcript.outcome = Outcome::Invalid {
                culprit: cop_controller.name(),
                detail: format!("placement vertex {c} out of range"),
            };
            return Ok(transcript);
        }
    }
    transcript.k = cops.len();
    transcript.cop_placement = cops.clone();

    let robber = robber_controller.place(&cops)?;
    transcript.robber_placement = robber;
    if robber >= g.vertex_count() {
        transcript.outcome = Outcome::Invalid {
            culprit: robber_controller.name(),
            detail: format!("placement vertex {robber} out of range"),
        };
        return Ok(transcript);
    }
    if cops.binary_search(&robber).is_ok() {
        transcript.outcome = Outcome::Capture { round: 0 };
        return Ok(transcript);
    }
    cop_controller.observe_robber_placement(robber)?;
    let mut robber = robber;

    for round in 1..=round_bound {
        let moves = cop_controller.cop_round()?;
        match apply_cop_round(g, rule, &mut cops, robber, &moves) {
            Ok(Some(capture_idx)) => {
                transcript.rounds.push(RoundRecord {
                    cop_moves: moves[..=capture_idx].to_vec(),
                    robber_move: None,
                });
                transcript.outcome = Outcome::Capture { round };
                return Ok(transcript);
            }
            Ok(None) => {}
            Err(Error::IllegalMove { side, detail }) => {
                transcript.rounds.push(RoundRecord {
                    cop_moves: moves,
                    robber_move: None,
                });
                transcript.outcome = Outcome::Invalid {
                    culprit: side.to_string(),
                    detail,
                };
                return Ok(transcript);
            }
            Err(e) => return Err(e),
        }
        robber_controller.observe_cop_round(&moves)?;

        let reply = robber_controller.robber_move()?;
        if let Err(Error::IllegalMove { side, detail }) =
            validate_robber_move(g, rule, robber, reply)
        {
            transcript.rounds.push(RoundRecord {
                cop_moves: moves,
                robber_move: Some(reply),
            });
            transcript.outcome = Outcome::Invalid {
                culprit: side.to_string(),
                detail,
            };
            return Ok(transcript);
        }
        robber = reply;
        transcript.rounds.push(RoundRecord {
            cop_moves: moves,
            robber_move: Some(reply),
        });
        if cops.binary_search(&robber).is_ok() {
            transcript.outcome = Outcome::Capture { round };
            return Ok(transcript);
        }
        cop_controller.observe_robber_move(robber)?;
    }
    transcript.outcome = Outcome::Survived { bound: round_bound };
    Ok(transcript)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn apply_round_validates_and_captures() {
        let g = cycle(4).unwrap();
        let rule = MovementRule::FULLY_ACTIVE;
        let mut cops = vec![0, 2];
        // capture on the first individual move
        let hit = apply_cop_round(&g, rule, &mut cops, 1, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(hit, Some(0));
        assert_eq!(cops, vec![1, 2]); // second cop never moved

        let mut cops = vec![0, 2];
        let err = apply_cop_round(&g, rule, &mut cops, 1, &[(0, 0), (2, 3)]).unwrap_err();
        assert!(matches!(err, Error::IllegalMove { side: "cops", .. }));

        let mut cops = vec![0, 2];
        let err = apply_cop_round(&g, rule, &mut cops, 1, &[(0, 2), (2, 3)]).unwrap_err();
        assert!(err.to_string().contains("not an edge"));
    }

    #[test]
    fn lazy_round_allows_single_step() {
        let g = cycle(5).unwrap();
        let mut cops = vec![0, 2];
        apply_cop_round(&g, MovementRule::LAZY, &mut cops, 4, &[(0, 1), (2, 2)]).unwrap();
        assert_eq!(cops, vec![1, 2]);
        let mut cops = vec![0, 2];
        assert!(
            apply_cop_round(&g, MovementRule::LAZY, &mut cops, 4, &[(0, 1), (2, 3)]).is_err()
        );
    }
}
