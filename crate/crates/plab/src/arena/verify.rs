//! Exhaustive one-sided verification: a deterministic controller against
//! every behavior of its opponent, memoized on (controller state, game
//! state).

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rules::MovementRule;
use crate::solver::joint::for_each_joint_cop_move;
use crate::solver::robber_stay_allowed;
use crate::strategy::{CopMove, CopStrategy, RobberStrategy};

use super::{apply_cop_round, validate_robber_move, Outcome, RoundRecord, Transcript};

/// How the cops are placed before verification.
#[derive(Clone)]
pub enum CopPlacementMode {
    /// Ask the controller.
    Controller,
    /// Impose a placement via `place_fixed`.
    Fixed(Vec<usize>),
}

/// Which robber placements the adversary may use.
#[derive(Clone)]
pub enum RobberPlacementFilter {
    All,
    Fixed(usize),
    /// Keep placements for which the predicate holds (cops, robber).
    Predicate(Arc<dyn Fn(&[usize], usize) -> bool + Send + Sync>),
}

impl RobberPlacementFilter {
    fn allows(&self, cops: &[usize], r: usize) -> bool {
        match self {
            RobberPlacementFilter::All => true,
            RobberPlacementFilter::Fixed(v) => *v == r,
            RobberPlacementFilter::Predicate(p) => p(cops, r),
        }
    }
}

#[derive(Clone)]
pub struct VerifyCopOptions {
    pub placement: CopPlacementMode,
    pub robber_placements: RobberPlacementFilter,
    pub round_bound: u32,
}

impl VerifyCopOptions {
    pub fn bounded(round_bound: u32) -> VerifyCopOptions {
        VerifyCopOptions {
            placement: CopPlacementMode::Controller,
            robber_placements: RobberPlacementFilter::All,
            round_bound,
        }
    }

    /// The default bound used by the verification suite.
    pub fn default_bound(g: &Graph) -> u32 {
        20 * (g.vertex_count() as u32).pow(2)
    }
}

#[derive(Debug)]
pub enum CopVerification {
    /// Every robber behavior is captured within the bound.
    Verified { worst_rounds: u32, explored: u64 },
    Counterexample {
        transcript: Box<Transcript>,
        reason: String,
    },
}

impl CopVerification {
    pub fn is_verified(&self) -> bool {
        matches!(self, CopVerification::Verified { .. })
    }
}

#[derive(Debug)]
pub enum RobberVerification {
    /// No cop behavior ever captures: every branch closes a cycle.
    Verified { explored: u64 },
    Captured { transcript: Box<Transcript> },
}

impl RobberVerification {
    pub fn is_verified(&self) -> bool {
        matches!(self, RobberVerification::Verified { .. })
    }
}

fn node_key(memo: &[u8], cops: &[usize], robber: usize) -> Vec<u8> {
    let mut key = Vec::with_capacity(memo.len() + 2 * cops.len() + 4);
    key.extend_from_slice(memo);
    key.push(0xFF);
    for &c in cops {
        key.extend_from_slice(&(c as u16).to_le_bytes());
    }
    key.extend_from_slice(&(robber as u16).to_le_bytes());
    key
}

enum Mark {
    InProgress,
    /// Worst-case rounds to capture from this round-start node.
    Done(u32),
}

struct CopVerifyCtx<'a> {
    g: &'a Graph,
    rule: MovementRule,
    memo_enabled: bool,
    memo: HashMap<Vec<u8>, Mark>,
    explored: u64,
}

enum Fail {
    Cycle,
    Illegal { culprit: String, detail: String },
}

/// Verifies a deterministic cop controller against all robber behaviors.
///
/// Depth-first over robber placements and replies; each (controller memo
/// key, game state) node is explored once. A node revisited while still on
/// the exploration path means the robber can loop forever. After
/// exploration, exceeding the round bound on the worst branch is reported
/// as a counterexample with that branch.
pub fn exhaustive_verify_cop(
    g: &Graph,
    rule: MovementRule,
    factory: &dyn Fn() -> Result<Box<dyn CopStrategy>>,
    opts: &VerifyCopOptions,
) -> Result<CopVerification> {
    exhaustive_verify_cop_impl(g, rule, factory, opts, true)
}

pub(crate) fn exhaustive_verify_cop_impl(
    g: &Graph,
    rule: MovementRule,
    factory: &dyn Fn() -> Result<Box<dyn CopStrategy>>,
    opts: &VerifyCopOptions,
    memo_enabled: bool,
) -> Result<CopVerification> {
    let mut proto = factory()?;
    let cops = match &opts.placement {
        CopPlacementMode::Controller => {
            let mut c = proto.place()?;
            c.sort_unstable();
            c
        }
        CopPlacementMode::Fixed(c) => {
            let mut c = c.clone();
            c.sort_unstable();
            proto.place_fixed(&c)?;
            c
        }
    };
    let mut ctx = CopVerifyCtx {
        g,
        rule,
        memo_enabled,
        memo: HashMap::new(),
        explored: 0,
    };
    let mut worst = 0u32;
    let mut worst_start = None;
    for r in g.vertices() {
        if !opts.robber_placements.allows(&cops, r) {
            continue;
        }
        if cops.binary_search(&r).is_ok() {
            continue; // placing on a cop is immediate capture
        }
        let mut controller = proto.clone_box();
        if let Err(e) = controller.observe_robber_placement(r) {
            return Err(Error::StrategyPrecondition(format!(
                "controller refused robber placement {r}: {e}"
            )));
        }
        let mut path = Vec::new();
        match explore_cop(&mut ctx, controller, cops.clone(), r, &mut path)? {
            Ok(rounds) => {
                if rounds > worst {
                    worst = rounds;
                    worst_start = Some(r);
                }
            }
            Err((fail, path)) => {
                let (outcome, reason) = match fail {
                    Fail::Cycle => (
                        Outcome::CycleProven,
                        "robber can force a repeated (controller, state) pair".to_string(),
                    ),
                    Fail::Illegal { culprit, detail } => (
                        Outcome::Invalid {
                            culprit: culprit.clone(),
                            detail: detail.clone(),
                        },
                        format!("illegal move by {culprit}: {detail}"),
                    ),
                };
                let transcript = Transcript {
                    graph_hash: format!("{:016x}", g.adjacency_hash()),
                    rule: rule.name().to_string(),
                    k: cops.len(),
                    cop_controller: proto.name(),
                    robber_controller: "exhaustive-adversary".to_string(),
                    cop_placement: cops.clone(),
                    robber_placement: r,
                    rounds: path,
                    outcome,
                };
                return Ok(CopVerification::Counterexample {
                    transcript: Box::new(transcript),
                    reason,
                });
            }
        }
    }
    if worst > opts.round_bound {
        // materialize the longest branch for the report
        let r = worst_start.expect("worst branch exists");
        let mut controller = proto.clone_box();
        controller.observe_robber_placement(r)?;
        let rounds = reconstruct_longest(&mut ctx, controller, cops.clone(), r)?;
        let transcript = Transcript {
            graph_hash: format!("{:016x}", g.adjacency_hash()),
            rule: rule.name().to_string(),
            k: cops.len(),
            cop_controller: proto.name(),
            robber_controller: "exhaustive-adversary".to_string(),
            cop_placement: cops,
            robber_placement: r,
            rounds,
            outcome: Outcome::Survived {
                bound: opts.round_bound,
            },
        };
        return Ok(CopVerification::Counterexample {
            transcript: Box::new(transcript),
            reason: format!(
                "capture takes {worst} rounds, exceeding the bound {}",
                opts.round_bound
            ),
        });
    }
    Ok(CopVerification::Verified {
        worst_rounds: worst,
        explored: ctx.explored,
    })
}

type CopExploreResult = std::result::Result<u32, (Fail, Vec<RoundRecord>)>;

/// Worst-case rounds to capture from a round-start node, or the failing
/// branch. `path` holds the rounds played so far and is restored on return.
fn explore_cop(
    ctx: &mut CopVerifyCtx,
    controller: Box<dyn CopStrategy>,
    cops: Vec<usize>,
    robber: usize,
    path: &mut Vec<RoundRecord>,
) -> Result<CopExploreResult> {
    let key = node_key(&controller.memo_key(), &cops, robber);
    if ctx.memo_enabled {
        match ctx.memo.get(&key) {
            Some(Mark::Done(rounds)) => return Ok(Ok(*rounds)),
            Some(Mark::InProgress) => return Ok(Err((Fail::Cycle, path.clone()))),
            None => {}
        }
        ctx.memo.insert(key.clone(), Mark::InProgress);
    }
    ctx.explored += 1;

    let mut me = controller;
    let moves = match me.cop_round() {
        Ok(m) => m,
        Err(Error::IllegalMove { side, detail }) => {
            return Ok(Err((
                Fail::Illegal {
                    culprit: side.to_string(),
                    detail,
                },
                path.clone(),
            )))
        }
        Err(e) => return Err(e),
    };
    let mut new_cops = cops;
    match apply_cop_round(ctx.g, ctx.rule, &mut new_cops, robber, &moves) {
        Ok(Some(_hit)) => {
            if ctx.memo_enabled {
                ctx.memo.insert(key, Mark::Done(1));
            }
            return Ok(Ok(1));
        }
        Ok(None) => {}
        Err(Error::IllegalMove { side, detail }) => {
            path.push(RoundRecord {
                cop_moves: moves,
                robber_move: None,
            });
            let p = path.clone();
            path.pop();
            return Ok(Err((
                Fail::Illegal {
                    culprit: side.to_string(),
                    detail,
                },
                p,
            )));
        }
        Err(e) => return Err(e),
    }

    let mut worst = 0u32;
    let mut replies: Vec<usize> = ctx.g.neighbors(robber).to_vec();
    if robber_stay_allowed(ctx.rule) {
        replies.push(robber);
    }
    for reply in replies {
        path.push(RoundRecord {
            cop_moves: moves.clone(),
            robber_move: Some(reply),
        });
        let value = if new_cops.binary_search(&reply).is_ok() {
            // forced or foolish move onto a cop: captured this round
            path.pop();
            0
        } else {
            let mut child = me.clone_box();
            child.observe_robber_move(reply)?;
            let res = explore_cop(ctx, child, new_cops.clone(), reply, path)?;
            path.pop();
            match res {
                Ok(rounds) => rounds,
                Err(fail) => return Ok(Err(fail)),
            }
        };
        worst = worst.max(value);
    }
    let rounds = worst + 1;
    if ctx.memo_enabled {
        ctx.memo.insert(key, Mark::Done(rounds));
    }
    Ok(Ok(rounds))
}

/// Replays the game following the robber replies that maximize rounds, using
/// the filled memo table. Used only to report bound-exceeding branches.
fn reconstruct_longest(
    ctx: &mut CopVerifyCtx,
    controller: Box<dyn CopStrategy>,
    cops: Vec<usize>,
    robber: usize,
) -> Result<Vec<RoundRecord>> {
    let mut rounds = Vec::new();
    let mut me = controller;
    let mut cops = cops;
    let mut robber = robber;
    loop {
        let moves = me.cop_round()?;
        if let Some(hit) = apply_cop_round(ctx.g, ctx.rule, &mut cops, robber, &moves)? {
            rounds.push(RoundRecord {
                cop_moves: moves[..=hit].to_vec(),
                robber_move: None,
            });
            return Ok(rounds);
        }
        let mut replies: Vec<usize> = ctx.g.neighbors(robber).to_vec();
        if robber_stay_allowed(ctx.rule) {
            replies.push(robber);
        }
        let mut best: Option<(u32, usize)> = None;
        for reply in replies {
            if cops.binary_search(&reply).is_ok() {
                continue;
            }
            let mut child = me.clone_box();
            child.observe_robber_move(reply)?;
            let key = node_key(&child.memo_key(), &cops, reply);
            if let Some(Mark::Done(r)) = ctx.memo.get(&key) {
                if best.is_none() || *r > best.unwrap().0 {
                    best = Some((*r, reply));
                }
            }
        }
        let Some((_, reply)) = best else {
            return Ok(rounds); // capture next round whatever happens
        };
        rounds.push(RoundRecord {
            cop_moves: moves,
            robber_move: Some(reply),
        });
        me.observe_robber_move(reply)?;
        robber = reply;
    }
}

/// Which cop placements the adversary tries in robber verification.
#[derive(Clone)]
pub enum CopPlacements {
    AllMultisets,
    List(Vec<Vec<usize>>),
}

/// How the robber is placed.
#[derive(Clone)]
pub enum RobberPlacementMode {
    Controller,
    Fixed(usize),
}

/// Verifies a deterministic robber controller against all cop behaviors:
/// all placements from `placements`, all legal joint rounds (lexicographic).
/// A revisited (controller, state) node closes a safe cycle; verification
/// succeeds when every branch closes or exhausts.
pub fn exhaustive_verify_robber(
    g: &Graph,
    rule: MovementRule,
    k: usize,
    factory: &dyn Fn() -> Result<Box<dyn RobberStrategy>>,
    placements: CopPlacements,
    robber_placement: RobberPlacementMode,
) -> Result<RobberVerification> {
    exhaustive_verify_robber_impl(g, rule, k, factory, placements, robber_placement, true, None)
}

/// Depth-bounded exploration without the visited set, used to test that
/// memoization does not change verdicts.
#[doc(hidden)]
#[allow(clippy::too_many_arguments)]
pub fn verify_robber_unmemoized_for_tests(
    g: &Graph,
    rule: MovementRule,
    k: usize,
    factory: &dyn Fn() -> Result<Box<dyn RobberStrategy>>,
    placements: CopPlacements,
    robber_placement: RobberPlacementMode,
    depth_limit: u32,
) -> Result<RobberVerification> {
    exhaustive_verify_robber_impl(
        g,
        rule,
        k,
        factory,
        placements,
        robber_placement,
        false,
        Some(depth_limit),
    )
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn exhaustive_verify_robber_impl(
    g: &Graph,
    rule: MovementRule,
    k: usize,
    factory: &dyn Fn() -> Result<Box<dyn RobberStrategy>>,
    placements: CopPlacements,
    robber_placement: RobberPlacementMode,
    memo_enabled: bool,
    depth_limit: Option<u32>,
) -> Result<RobberVerification> {
    // parent links for transcript reconstruction
    struct NodeInfo {
        parent: Option<Vec<u8>>,
        via: Option<(Vec<CopMove>, usize)>,
        root: Option<(Vec<usize>, usize)>,
        depth: u32,
    }
    let mut visited: HashMap<Vec<u8>, NodeInfo> = HashMap::new();
    let mut stack: Vec<(Box<dyn RobberStrategy>, Vec<usize>, usize, Vec<u8>)> = Vec::new();
    let mut explored = 0u64;

    let placement_list: Vec<Vec<usize>> = match placements {
        CopPlacements::AllMultisets => {
            let mut out = Vec::new();
            let mut buf = Vec::new();
            gen_multisets(g.vertex_count(), k, 0, &mut buf, &mut out);
            out
        }
        CopPlacements::List(list) => list
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect(),
    };

    let name = factory()?.name();
    let mk_transcript = |visited: &HashMap<Vec<u8>, NodeInfo>,
                         leaf_key: Option<&Vec<u8>>,
                         extra: Option<(Vec<CopMove>, Option<usize>)>,
                         root_fallback: Option<(Vec<usize>, usize)>|
     -> Transcript {
        let mut rounds = Vec::new();
        let mut placement = root_fallback;
        if let Some(mut key) = leaf_key.cloned() {
            loop {
                let info = &visited[&key];
                if let Some((moves, reply)) = &info.via {
                    rounds.push(RoundRecord {
                        cop_moves: moves.clone(),
                        robber_move: Some(*reply),
                    });
                }
                if let Some(root) = &info.root {
                    placement = Some(root.clone());
                    break;
                }
                key = info.parent.clone().expect("non-root has parent");
            }
            rounds.reverse();
        }
        if let Some((moves, reply)) = extra {
            rounds.push(RoundRecord {
                cop_moves: moves,
                robber_move: reply,
            });
        }
        let (cop_placement, robber_placement) = placement.expect("placement recorded");
        let round_count = rounds.len() as u32;
        Transcript {
            graph_hash: format!("{:016x}", g.adjacency_hash()),
            rule: rule.name().to_string(),
            k,
            cop_controller: "exhaustive-adversary".to_string(),
            robber_controller: name.clone(),
            cop_placement,
            robber_placement,
            rounds,
            outcome: Outcome::Capture { round: round_count },
        }
    };

    for cops in &placement_list {
        let mut controller = factory()?;
        let r = match robber_placement {
            RobberPlacementMode::Controller => controller.place(cops)?,
            RobberPlacementMode::Fixed(r) => {
                controller.place_fixed(cops, r)?;
                r
            }
        };
        if r >= g.vertex_count() {
            return Err(Error::StrategyPrecondition(format!(
                "robber placement {r} out of range"
            )));
        }
        if cops.binary_search(&r).is_ok() {
            return Ok(RobberVerification::Captured {
                transcript: Box::new(mk_transcript(
                    &visited,
                    None,
                    None,
                    Some((cops.clone(), r)),
                )),
            });
        }
        let key = node_key(&controller.memo_key(), cops, r);
        if !visited.contains_key(&key) {
            visited.insert(
                key.clone(),
                NodeInfo {
                    parent: None,
                    via: None,
                    root: Some((cops.clone(), r)),
                    depth: 0,
                },
            );
            stack.push((controller, cops.clone(), r, key));
        }
    }

    while let Some((controller, cops, robber, key)) = stack.pop() {
        explored += 1;
        let depth = visited[&key].depth;
        if let Some(limit) = depth_limit {
            if depth >= limit {
                continue;
            }
        }
        let mut failure: Option<Error> = None;
        let mut captured: Option<Transcript> = None;
        let mut pushes: Vec<(Box<dyn RobberStrategy>, Vec<usize>, usize, Vec<u8>)> = Vec::new();
        for_each_joint_cop_move(g, rule, &cops, &mut |assignment| {
            if failure.is_some() || captured.is_some() {
                return;
            }
            let moves: Vec<CopMove> =
                cops.iter().copied().zip(assignment.iter().copied()).collect();
            if let Some(hit) = moves.iter().position(|&(_, to)| to == robber) {
                captured = Some(mk_transcript(
                    &visited,
                    Some(&key),
                    Some((moves[..=hit].to_vec(), None)),
                    None,
                ));
                return;
            }
            let mut new_cops = assignment.to_vec();
            new_cops.sort_unstable();
            let mut child = controller.clone_box();
            if let Err(e) = child.observe_cop_round(&moves) {
                failure = Some(e);
                return;
            }
            let reply = match child.robber_move() {
                Ok(r2) => r2,
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            };
            if let Err(e) = validate_robber_move(g, rule, robber, reply) {
                failure = Some(e);
                return;
            }
            if new_cops.binary_search(&reply).is_ok() {
                captured = Some(mk_transcript(
                    &visited,
                    Some(&key),
                    Some((moves, Some(reply))),
                    None,
                ));
                return;
            }
            let child_key = node_key(&child.memo_key(), &new_cops, reply);
            let known = if memo_enabled {
                visited.contains_key(&child_key)
            } else {
                false
            };
            if !known {
                visited.insert(
                    child_key.clone(),
                    NodeInfo {
                        parent: Some(key.clone()),
                        via: Some((moves, reply)),
                        root: None,
                        depth: depth + 1,
                    },
                );
                pushes.push((child, new_cops, reply, child_key));
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if let Some(t) = captured {
            return Ok(RobberVerification::Captured {
                transcript: Box::new(t),
            });
        }
        stack.extend(pushes);
    }
    Ok(RobberVerification::Verified { explored })
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
