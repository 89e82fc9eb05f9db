//! Naive joint-move solver, kept as an independent oracle for the
//! micro-move engine.
//!
//! States are (cop multiset, robber, side to move); a cop turn is a single
//! joint assignment of destinations to all cops, enumerated directly, with
//! the round constraints applied to the whole assignment. Values are
//! computed by monotone value-iteration sweeps rather than the attractor
//! BFS, so the two engines share no solving machinery.

use std::collections::HashMap;

use crate::error::Result;
use crate::graph::Graph;
use crate::rules::{CopRule, MovementRule, RobberRule};

use super::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Turn {
    Cops,
    Robber,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JointState {
    pub cops: Vec<usize>, // sorted
    pub robber: usize,
    pub turn: Turn,
}

pub struct JointTable {
    /// time in joint moves; u16::MAX = robber win
    values: HashMap<JointState, u16>,
}

const INF: u16 = u16::MAX;

impl JointTable {
    pub fn status(&self, state: &JointState) -> Status {
        if self.values[state] == INF {
            Status::RobberWin
        } else {
            Status::CopWin
        }
    }

    pub fn time(&self, state: &JointState) -> u16 {
        self.values[state]
    }

    pub fn states(&self) -> impl Iterator<Item = (&JointState, &u16)> {
        self.values.iter()
    }
}

/// Visits every joint destination assignment for the cop multiset,
/// lexicographic over per-cop choices (each cop's sorted neighbors, then
/// staying), filtered by the whole-round constraint.
pub fn for_each_joint_cop_move(
    g: &Graph,
    rule: MovementRule,
    cops: &[usize],
    f: &mut impl FnMut(&[usize]),
) {
    let per_cop: Vec<Vec<usize>> = cops
        .iter()
        .map(|&v| {
            let mut d = g.neighbors(v).to_vec();
            if rule.cop != CopRule::MustMoveAll {
                d.push(v); // staying listed after steps
            }
            d
        })
        .collect();
    let mut current = vec![0usize; cops.len()];
    enumerate(&per_cop, 0, &mut current, &mut |assignment| {
        let moved = assignment
            .iter()
            .zip(cops)
            .filter(|(d, v)| d != v)
            .count();
        let ok = match rule.cop {
            CopRule::FreeAll | CopRule::MustMoveAll => true,
            CopRule::AtLeastOne => moved >= 1,
            CopRule::AtMostOne => moved <= 1,
        };
        if ok {
            f(assignment);
        }
    });
}

/// Collected form of [`for_each_joint_cop_move`].
pub fn joint_cop_moves(g: &Graph, rule: MovementRule, cops: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_joint_cop_move(g, rule, cops, &mut |a| out.push(a.to_vec()));
    out
}

fn enumerate(
    per_cop: &[Vec<usize>],
    i: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if i == per_cop.len() {
        f(current);
        return;
    }
    for &d in &per_cop[i] {
        current[i] = d;
        enumerate(per_cop, i + 1, current, f);
    }
    // leave current[i] in a harmless state for reuse
}

pub fn robber_moves(g: &Graph, rule: MovementRule, robber: usize) -> Vec<usize> {
    let mut d = g.neighbors(robber).to_vec();
    if rule.robber == RobberRule::Free {
        d.push(robber);
    }
    d
}

fn is_capture(s: &JointState) -> bool {
    s.cops.binary_search(&s.robber).is_ok()
}

/// Solves the joint-move game exactly. Intended for small instances
/// (the assignment enumeration is exponential in k).
pub fn solve_joint(g: &Graph, k: usize, rule: MovementRule) -> Result<JointTable> {
    super::solve_preconditions(g, k, rule)?;
    let n = g.vertex_count();

    // enumerate all sorted multisets of size k over 0..n
    let mut multisets = Vec::new();
    let mut buf = Vec::new();
    gen_multisets(n, k, 0, &mut buf, &mut multisets);

    let mut values: HashMap<JointState, u16> = HashMap::new();
    for cops in &multisets {
        for robber in 0..n {
            for turn in [Turn::Cops, Turn::Robber] {
                let s = JointState {
                    cops: cops.clone(),
                    robber,
                    turn,
                };
                let v = if is_capture(&s) { 0 } else { INF };
                values.insert(s, v);
            }
        }
    }

    // monotone sweeps from the all-infinite start; values only decrease and
    // converge to the exact optimal capture times
    loop {
        let mut changed = false;
        for cops in &multisets {
            for robber in 0..n {
                for turn in [Turn::Cops, Turn::Robber] {
                    let s = JointState {
                        cops: cops.clone(),
                        robber,
                        turn,
                    };
                    if is_capture(&s) {
                        continue;
                    }
                    let new = match turn {
                        Turn::Cops => {
                            let mut best = INF;
                            for assignment in joint_cop_moves(g, rule, cops) {
                                let mut dest = assignment;
                                dest.sort_unstable();
                                let succ = JointState {
                                    cops: dest,
                                    robber,
                                    turn: Turn::Robber,
                                };
                                best = best.min(values[&succ]);
                            }
                            bump(best)
                        }
                        Turn::Robber => {
                            let mut worst = 0u16;
                            for r2 in robber_moves(g, rule, robber) {
                                let succ = JointState {
                                    cops: cops.clone(),
                                    robber: r2,
                                    turn: Turn::Cops,
                                };
                                worst = worst.max(values[&succ]);
                            }
                            bump(worst)
                        }
                    };
                    let slot = values.get_mut(&s).unwrap();
                    if new < *slot {
                        *slot = new;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(JointTable { values })
}

fn bump(v: u16) -> u16 {
    if v == INF {
        INF
    } else {
        v + 1
    }
}

fn gen_multisets(n: usize, k: usize, min: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if buf.len() == k {
        out.push(buf.clone());
        return;
    }
    for v in min..n {
        buf.push(v);
        gen_multisets(n, k, v, buf, out);
        buf.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn joint_moves_respect_round_constraints() {
        let g = cycle(4).unwrap();
        let cops = vec![0, 2];
        let lazy = joint_cop_moves(&g, MovementRule::LAZY, &cops);
        assert!(lazy
            .iter()
            .all(|a| a.iter().zip(&cops).filter(|(d, v)| d != v).count() <= 1));
        let active = joint_cop_moves(&g, MovementRule::ACTIVE, &cops);
        assert!(active
            .iter()
            .all(|a| a.iter().zip(&cops).filter(|(d, v)| d != v).count() >= 1));
        let fully = joint_cop_moves(&g, MovementRule::FULLY_ACTIVE, &cops);
        assert_eq!(fully.len(), 4); // 2 neighbors each
    }

    #[test]
    fn single_passive_cop_wins_on_a_path() {
        let g = path(4).unwrap();
        let t = solve_joint(&g, 1, MovementRule::PASSIVE).unwrap();
        // from cop at 1, robber at 3, cops to move: capture is forced
        let s = JointState {
            cops: vec![1],
            robber: 3,
            turn: Turn::Cops,
        };
        assert_eq!(t.status(&s), Status::CopWin);
    }

    #[test]
    fn fully_active_cop_loses_on_c4_antipodal() {
        let g = cycle(4).unwrap();
        let t = solve_joint(&g, 1, MovementRule::FULLY_ACTIVE).unwrap();
        let s = JointState {
            cops: vec![0],
            robber: 2,
            turn: Turn::Cops,
        };
        assert_eq!(t.status(&s), Status::RobberWin);
    }
}
