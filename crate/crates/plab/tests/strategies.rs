//! Exhaustive verification of the constructive strategies and adapters, and
//! agreement between the arena and the solver.

use std::sync::Arc;

use plab::arena::{
    exhaustive_verify_cop, exhaustive_verify_robber, play, CopPlacementMode, CopPlacements,
    CopVerification, Outcome, RobberPlacementFilter, RobberPlacementMode, RobberVerification,
    VerifyCopOptions,
};
use plab::graph::{
    cartesian_product, complete, cycle, fan, hypercube, path, random_connected,
    random_maximal_outerplanar, random_tree, vab_graph, Bipartition, CoveringMap, Graph,
    OuterplanarEmbedding, ProductStructure,
};
use plab::solver::{cop_number, solve, GameState, Status};
use plab::strategy::{
    BlockEmbeddings, CopStrategy, CoverLiftCops, DoublingCops, OddCycleProductCops, OptimalCop,
    OptimalRobber, OuterplanarCops, RobberStrategy, SamePartiteCops, ShadowPassiveCops,
    TreePairCop, TreeProductCops, TreeProductRobber,
};
use plab::strategy::cover::CoverInit;
use plab::MovementRule;

fn product_of(factors: &[Graph]) -> Arc<ProductStructure> {
    Arc::new(cartesian_product(factors).unwrap())
}

fn paths(sizes: &[usize]) -> Vec<Graph> {
    sizes.iter().map(|&n| path(n).unwrap()).collect()
}

fn verify_cop_ok(
    g: &Graph,
    rule: MovementRule,
    factory: &dyn Fn() -> plab::Result<Box<dyn CopStrategy>>,
    opts: &VerifyCopOptions,
) -> u32 {
    match exhaustive_verify_cop(g, rule, factory, opts).unwrap() {
        CopVerification::Verified { worst_rounds, .. } => worst_rounds,
        CopVerification::Counterexample { transcript, reason } => {
            panic!("counterexample ({reason}): {}", transcript.to_json())
        }
    }
}

/// The arena and the solver must agree about who wins every initial
/// configuration when both sides play the table-optimal controllers.
#[test]
fn arena_agrees_with_solver_on_small_corpus() {
    for seed in [0u64, 1, 2] {
        let g = random_connected(5, 0.5, 40 + seed).unwrap();
        let ga = Arc::new(g.clone());
        for rule in MovementRule::ALL_PRESETS {
            for k in 1..=2usize {
                let table = Arc::new(solve(&g, k, rule).unwrap());
                let mut placements: Vec<Vec<usize>> = Vec::new();
                table.layout().codec(k).for_each(|_, c| placements.push(c.to_vec()));
                for cops in &placements {
                    for r in g.vertices() {
                        if cops.binary_search(&r).is_ok() {
                            continue;
                        }
                        let want =
                            table.status(&GameState::round_start(cops.clone(), r));
                        let ga2 = ga.clone();
                        let t2 = table.clone();
                        let opts = VerifyCopOptions {
                            placement: CopPlacementMode::Fixed(cops.clone()),
                            robber_placements: RobberPlacementFilter::Fixed(r),
                            round_bound: 10_000,
                        };
                        let cop_res = exhaustive_verify_cop(
                            &g,
                            rule,
                            &move || Ok(Box::new(OptimalCop::new(ga2.clone(), t2.clone())?) as _),
                            &opts,
                        )
                        .unwrap();
                        assert_eq!(
                            cop_res.is_verified(),
                            want == Status::CopWin,
                            "cop-side mismatch: seed={seed} rule={rule} k={k} cops={cops:?} r={r}"
                        );

                        let ga3 = ga.clone();
                        let t3 = table.clone();
                        let rob_res = exhaustive_verify_robber(
                            &g,
                            rule,
                            k,
                            &move || {
                                Ok(Box::new(OptimalRobber::new(ga3.clone(), t3.clone())?) as _)
                            },
                            CopPlacements::List(vec![cops.clone()]),
                            RobberPlacementMode::Fixed(r),
                        )
                        .unwrap();
                        assert_eq!(
                            rob_res.is_verified(),
                            want == Status::RobberWin,
                            "robber-side mismatch: seed={seed} rule={rule} k={k} cops={cops:?} r={r}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn optimal_play_transcripts_are_deterministic_and_consistent() {
    let g = Arc::new(path(3).unwrap());
    let table = Arc::new(solve(&g, 1, MovementRule::PASSIVE).unwrap());
    let run = || {
        let mut cop = OptimalCop::new(g.clone(), table.clone()).unwrap();
        let mut rob = OptimalRobber::new(g.clone(), table.clone()).unwrap();
        play(&g, MovementRule::PASSIVE, &mut cop, &mut rob, 100).unwrap()
    };
    let t1 = run();
    let t2 = run();
    assert_eq!(t1.to_json(), t2.to_json());
    match t1.outcome {
        Outcome::Capture { round } => assert!(round <= 2, "domination capture within 2 rounds"),
        ref other => panic!("expected capture, got {other:?}"),
    }
}

#[test]
fn optimal_robber_survives_forever_on_c4_against_one_active_cop() {
    let g = Arc::new(cycle(4).unwrap());
    let rule = MovementRule::FULLY_ACTIVE;
    let table = Arc::new(solve(&g, 1, rule).unwrap());
    let mut cop = OptimalCop::new(g.clone(), table.clone()).unwrap();
    let mut rob = OptimalRobber::new(g.clone(), table.clone()).unwrap();
    let t = play(&g, rule, &mut cop, &mut rob, 1000).unwrap();
    assert!(matches!(t.outcome, Outcome::Survived { bound: 1000 }), "{:?}", t.outcome);
}

#[test]
fn optimal_cop_pair_captures_on_c4_within_time_bound() {
    let g = Arc::new(cycle(4).unwrap());
    let rule = MovementRule::FULLY_ACTIVE;
    let table = Arc::new(solve(&g, 2, rule).unwrap());
    let mut cop = OptimalCop::new(g.clone(), table.clone()).unwrap();
    let mut rob = OptimalRobber::new(g.clone(), table.clone()).unwrap();
    let t = play(&g, rule, &mut cop, &mut rob, 100).unwrap();
    match t.outcome {
        Outcome::Capture { round } => assert!(round <= 4, "round {round}"),
        ref other => panic!("expected capture, got {other:?}"),
    }
}

// ---- tree pair -----------------------------------------------------------

#[test]
fn tree_pair_captures_from_every_odd_start() {
    let product = product_of(&paths(&[3, 3]));
    let g = product.graph().clone();
    let parity = {
        let p = product.clone();
        move |cops: &[usize], r: usize| {
            let d = p.factor_distance(0, cops[0], r) + p.factor_distance(1, cops[0], r);
            d % 2 == 1
        }
    };
    let opts = VerifyCopOptions {
        placement: CopPlacementMode::Controller,
        robber_placements: RobberPlacementFilter::Predicate(Arc::new(parity)),
        round_bound: VerifyCopOptions::default_bound(&g),
    };
    let p2 = product.clone();
    verify_cop_ok(
        &g,
        MovementRule::FULLY_ACTIVE,
        &move || Ok(Box::new(TreePairCop::new(p2.clone())?) as _),
        &opts,
    );
}

#[test]
fn tree_pair_rejects_even_starts_and_non_trees() {
    let product = product_of(&paths(&[3, 3]));
    let mut ctrl = TreePairCop::new(product).unwrap();
    ctrl.place().unwrap();
    // vertex 0 to vertex 4 (coords (1,1)) has distance 2
    assert!(ctrl.observe_robber_placement(4).is_err());
    let with_cycle = product_of(&[path(3).unwrap(), cycle(4).unwrap()]);
    assert!(TreePairCop::new(with_cycle).is_err());
}

/// The pair potential max(d1, d2) never increases over a full round.
#[test]
fn tree_pair_potential_is_monotone() {
    let product = product_of(&paths(&[4, 3]));
    let g = Arc::new(product.graph().clone());
    let rule = MovementRule::FULLY_ACTIVE;
    let table = Arc::new(solve(&g, 1, rule).unwrap());
    let mut cop = TreePairCop::new(product.clone()).unwrap();
    let mut rob = OptimalRobber::new(g.clone(), table).unwrap();
    // choose an odd-distance start by hand: cop at 0, robber at coords (1,0)
    let cop_start = cop.place().unwrap();
    let r0 = product.index(&[1, 0]);
    rob.place_fixed(&cop_start, r0).unwrap();
    cop.observe_robber_placement(r0).unwrap();

    let mut cop_pos = cop_start[0];
    let mut rob_pos = r0;
    let potential = |c: usize, r: usize| {
        product
            .factor_distance(0, c, r)
            .max(product.factor_distance(1, c, r))
    };
    let mut before = potential(cop_pos, rob_pos);
    for _ in 0..50 {
        let moves = cop.cop_round().unwrap();
        cop_pos = moves[0].1;
        if cop_pos == rob_pos {
            return; // captured
        }
        rob.observe_cop_round(&moves).unwrap();
        rob_pos = rob.robber_move().unwrap();
        if rob_pos == cop_pos {
            return;
        }
        cop.observe_robber_move(rob_pos).unwrap();
        let after = potential(cop_pos, rob_pos);
        assert!(after <= before, "potential rose {before} -> {after}");
        before = after;
    }
    panic!("no capture within 50 rounds on P4xP3");
}

// ---- tree product, both sides --------------------------------------------

#[test]
fn tree_product_cops_verified_on_p3p3_and_q3() {
    for factors in [paths(&[3, 3]), paths(&[2, 2, 2])] {
        let product = product_of(&factors);
        let g = product.graph().clone();
        let opts = VerifyCopOptions::bounded(VerifyCopOptions::default_bound(&g));
        let p2 = product.clone();
        verify_cop_ok(
            &g,
            MovementRule::FULLY_ACTIVE,
            &move || Ok(Box::new(TreeProductCops::new(p2.clone())?) as _),
            &opts,
        );
    }
}

#[test]
fn tree_product_robber_survives_under_strength_and_falls_over_it() {
    // k = 2 factors: evades 1 cop, is captured by an optimal pair
    let product = product_of(&paths(&[3, 3]));
    let g = product.graph().clone();
    let p2 = product.clone();
    let res = exhaustive_verify_robber(
        &g,
        MovementRule::FULLY_ACTIVE,
        1,
        &move || Ok(Box::new(TreeProductRobber::new(p2.clone())?) as _),
        CopPlacements::AllMultisets,
        RobberPlacementMode::Controller,
    )
    .unwrap();
    assert!(res.is_verified(), "robber should evade a single cop");

    // two optimal cops beat him: play out one game
    let ga = Arc::new(g.clone());
    let table = Arc::new(solve(&g, 2, MovementRule::FULLY_ACTIVE).unwrap());
    let mut cop = OptimalCop::new(ga.clone(), table).unwrap();
    let mut rob = TreeProductRobber::new(product.clone()).unwrap();
    let t = play(&g, MovementRule::FULLY_ACTIVE, &mut cop, &mut rob, 500).unwrap();
    assert!(matches!(t.outcome, Outcome::Capture { .. }), "{:?}", t.outcome);

    // k = 3 (Q3): evades 1 cop
    let product = product_of(&paths(&[2, 2, 2]));
    let g = product.graph().clone();
    let p3 = product.clone();
    let res = exhaustive_verify_robber(
        &g,
        MovementRule::FULLY_ACTIVE,
        1,
        &move || Ok(Box::new(TreeProductRobber::new(p3.clone())?) as _),
        CopPlacements::AllMultisets,
        RobberPlacementMode::Controller,
    )
    .unwrap();
    assert!(res.is_verified());
}

#[test]
fn one_optimal_cop_on_q3_yields_a_counterexample() {
    let g = hypercube(3).unwrap();
    let ga = Arc::new(g.clone());
    let rule = MovementRule::FULLY_ACTIVE;
    let table = Arc::new(solve(&g, 1, rule).unwrap());
    let opts = VerifyCopOptions::bounded(500);
    let res = exhaustive_verify_cop(
        &g,
        rule,
        &move || Ok(Box::new(OptimalCop::new(ga.clone(), table.clone())?) as _),
        &opts,
    )
    .unwrap();
    match res {
        CopVerification::Counterexample { transcript, .. } => {
            assert!(matches!(transcript.outcome, Outcome::CycleProven));
        }
        CopVerification::Verified { .. } => panic!("one cop cannot clear Q3"),
    }
}

/// The placement split puts (c, d) cops at even/odd distance with
/// c + 2d >= k, for every k and either parity of the robber's side.
#[test]
fn tree_product_coverage_inequality_by_enumeration() {
    for k in 2..=12 {
        let m = plab::strategy::tree_product_cop_count(k);
        for (c, d) in [(m.div_ceil(2), m / 2), (m / 2, m.div_ceil(2))] {
            assert!(c + 2 * d >= k, "k={k} c={c} d={d}");
        }
    }
    // and the robber-side threat count stays under k
    for k in 2..=12 {
        let m = plab::strategy::tree_product_cop_count(k) - 1;
        for c in 0..=m / 2 {
            let d = m - c;
            assert!(2 * c + d < k, "k={k} c={c} d={d}");
        }
    }
}

// ---- doubling adapter ------------------------------------------------------

#[test]
fn doubling_adapter_verified_on_p4_and_c5() {
    for (g, passive_k) in [(path(4).unwrap(), 1usize), (cycle(5).unwrap(), 2)] {
        let ga = Arc::new(g.clone());
        let table = Arc::new(solve(&g, passive_k, MovementRule::PASSIVE).unwrap());
        let opts = VerifyCopOptions::bounded(VerifyCopOptions::default_bound(&g));
        let ga2 = ga.clone();
        verify_cop_ok(
            &g,
            MovementRule::FULLY_ACTIVE,
            &move || {
                let inner = OptimalCop::new(ga2.clone(), table.clone())?;
                Ok(Box::new(DoublingCops::new(ga2.clone(), Box::new(inner))) as _)
            },
            &opts,
        );
    }
}

// ---- shadow adapter --------------------------------------------------------

#[test]
fn shadow_adapter_turns_active_wins_into_passive_wins() {
    // vab(2,2): one fully active cop wins, so two passive cops win
    for (g, active_k) in [
        (vab_graph(2, 2).unwrap(), 1usize),
        (complete(2).unwrap(), 1),
        (cycle(4).unwrap(), 2),
    ] {
        let ga = Arc::new(g.clone());
        let table = Arc::new(solve(&g, active_k, MovementRule::FULLY_ACTIVE).unwrap());
        let opts = VerifyCopOptions::bounded(VerifyCopOptions::default_bound(&g));
        let ga2 = ga.clone();
        verify_cop_ok(
            &g,
            MovementRule::PASSIVE,
            &move || {
                let inner = OptimalCop::new(ga2.clone(), table.clone())?;
                Ok(Box::new(ShadowPassiveCops::new(ga2.clone(), Box::new(inner))) as _)
            },
            &opts,
        );
    }
}

// ---- same partite adapter --------------------------------------------------

#[test]
fn same_partite_adapter_verified_from_every_same_side_start() {
    for g in [cycle(4).unwrap(), cycle(6).unwrap(), hypercube(3).unwrap()] {
        let k = cop_number(&g, MovementRule::PASSIVE, 3)
            .unwrap()
            .exact()
            .unwrap();
        let ga = Arc::new(g.clone());
        let table = Arc::new(solve(&g, k, MovementRule::PASSIVE).unwrap());
        let bip = Bipartition::compute(&g).unwrap().unwrap();
        let mut placements: Vec<Vec<usize>> = Vec::new();
        table.layout().codec(k).for_each(|_, cops| {
            if cops.iter().all(|&c| bip.side(c) == bip.side(cops[0])) {
                placements.push(cops.to_vec());
            }
        });
        assert!(!placements.is_empty());
        for cops in placements {
            let side = bip.side(cops[0]);
            let bip2 = bip.clone();
            let filter = move |_c: &[usize], r: usize| bip2.side(r) == side;
            let opts = VerifyCopOptions {
                placement: CopPlacementMode::Fixed(cops.clone()),
                robber_placements: RobberPlacementFilter::Predicate(Arc::new(filter)),
                round_bound: VerifyCopOptions::default_bound(&g),
            };
            let ga2 = ga.clone();
            let t2 = table.clone();
            verify_cop_ok(
                &g,
                MovementRule::FULLY_ACTIVE,
                &move || {
                    let inner = OptimalCop::new(ga2.clone(), t2.clone())?;
                    Ok(Box::new(SamePartiteCops::new(ga2.clone(), Box::new(inner))?) as _)
                },
                &opts,
            );
        }
    }
}

#[test]
fn same_partite_adapter_refuses_mixed_starts() {
    let g = Arc::new(cycle(4).unwrap());
    let table = Arc::new(solve(&g, 2, MovementRule::PASSIVE).unwrap());
    let inner = OptimalCop::new(g.clone(), table).unwrap();
    let mut ctrl = SamePartiteCops::new(g.clone(), Box::new(inner)).unwrap();
    ctrl.place_fixed(&[0, 2]).unwrap();
    assert!(ctrl.observe_robber_placement(1).is_err());
}

// ---- covering lift ---------------------------------------------------------

#[test]
fn identity_cover_plays_like_the_wrapped_strategy() {
    let g = cycle(5).unwrap();
    let ga = Arc::new(g.clone());
    let rule = MovementRule::FULLY_ACTIVE;
    let table = Arc::new(solve(&g, 2, rule).unwrap());
    let map = Arc::new(CoveringMap::identity(&g));

    let mut direct_cop = OptimalCop::new(ga.clone(), table.clone()).unwrap();
    let mut direct_rob = OptimalRobber::new(ga.clone(), table.clone()).unwrap();
    let direct = play(&g, rule, &mut direct_cop, &mut direct_rob, 200).unwrap();

    let inner = OptimalCop::new(ga.clone(), table.clone()).unwrap();
    let mut lifted_cop = CoverLiftCops::new(map, Box::new(inner), CoverInit::InnerPlaces);
    let mut rob = OptimalRobber::new(ga.clone(), table.clone()).unwrap();
    let lifted = play(&g, rule, &mut lifted_cop, &mut rob, 200).unwrap();

    assert_eq!(direct.cop_placement, lifted.cop_placement);
    assert_eq!(direct.robber_placement, lifted.robber_placement);
    assert_eq!(direct.outcome, lifted.outcome);
    assert_eq!(direct.rounds.len(), lifted.rounds.len());
    for (a, b) in direct.rounds.iter().zip(&lifted.rounds) {
        assert_eq!(a.cop_moves, b.cop_moves);
        assert_eq!(a.robber_move, b.robber_move);
    }
}

#[test]
fn doubled_cycle_cover_lifts_capture_to_c3() {
    let map = Arc::new(plab::graph::doubled_cycle_cover(&[3]).unwrap());
    let target = map.target.clone();
    let source = Arc::new(map.source.clone());
    let rule = MovementRule::FULLY_ACTIVE;
    // two cops win C6 from their chosen placement against any robber
    let table = Arc::new(solve(&source, 2, rule).unwrap());
    let opts = VerifyCopOptions::bounded(VerifyCopOptions::default_bound(&target));
    verify_cop_ok(
        &target,
        rule,
        &move || {
            let inner = OptimalCop::new(source.clone(), table.clone())?;
            Ok(Box::new(CoverLiftCops::new(
                map.clone(),
                Box::new(inner),
                CoverInit::InnerPlaces,
            )) as _)
        },
        &opts,
    );
}

// ---- odd cycle products ----------------------------------------------------

#[test]
fn odd_cycle_composition_on_c5_and_c3xc3() {
    // k = 1: two cops on C5
    let g = cycle(5).unwrap();
    let opts = VerifyCopOptions::bounded(VerifyCopOptions::default_bound(&g));
    verify_cop_ok(
        &g,
        MovementRule::FULLY_ACTIVE,
        &move || Ok(Box::new(OddCycleProductCops::new(&[5], None)?) as _),
        &opts,
    );

    // k = 2: three cops on C3 x C3
    let product = cartesian_product(&[cycle(3).unwrap(), cycle(3).unwrap()]).unwrap();
    let g = product.graph().clone();
    let opts = VerifyCopOptions::bounded(VerifyCopOptions::default_bound(&g));
    verify_cop_ok(
        &g,
        MovementRule::FULLY_ACTIVE,
        &move || Ok(Box::new(OddCycleProductCops::new(&[3, 3], None)?) as _),
        &opts,
    );
}

#[test]
fn odd_cycle_composition_refuses_all_even() {
    assert!(OddCycleProductCops::new(&[4, 4], None).is_err());
}

// ---- outerplanar -----------------------------------------------------------

fn verify_outerplanar(g: &Graph, embeddings: &[OuterplanarEmbedding]) -> u32 {
    let ga = Arc::new(g.clone());
    let be = Arc::new(BlockEmbeddings::new(g, embeddings).unwrap());
    let opts = VerifyCopOptions::bounded(VerifyCopOptions::default_bound(g));
    verify_cop_ok(
        g,
        MovementRule::FULLY_ACTIVE,
        &move || Ok(Box::new(OuterplanarCops::new(ga.clone(), be.clone())?) as _),
        &opts,
    )
}

#[test]
fn outerplanar_cops_clear_cycles_fans_and_random_triangulations() {
    let c6 = cycle(6).unwrap();
    let emb = OuterplanarEmbedding {
        outer_cycle: (0..6).collect(),
        chords: vec![],
    };
    let rounds = verify_outerplanar(&c6, &[emb]);
    assert!(rounds <= 18, "C6 capture took {rounds} rounds"); // within 3n

    let (g, emb) = fan(5).unwrap();
    verify_outerplanar(&g, &[emb]);

    for seed in [3u64, 7, 11] {
        for n in [6usize, 8, 9] {
            let (g, emb) = random_maximal_outerplanar(n, seed).unwrap();
            verify_outerplanar(&g, &[emb]);
        }
    }
}

#[test]
fn outerplanar_cops_handle_cut_vertices() {
    // two triangles sharing a vertex
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    let e1 = OuterplanarEmbedding {
        outer_cycle: vec![0, 1, 2],
        chords: vec![],
    };
    let e2 = OuterplanarEmbedding {
        outer_cycle: vec![2, 3, 4],
        chords: vec![],
    };
    verify_outerplanar(&g, &[e1, e2]);

    // trees need no embeddings at all
    for seed in 0..4u64 {
        let g = random_tree(7, seed).unwrap();
        verify_outerplanar(&g, &[]);
    }

    // a triangle with a pendant path: mixed block sizes
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
    let e = OuterplanarEmbedding {
        outer_cycle: vec![0, 1, 2],
        chords: vec![],
    };
    verify_outerplanar(&g, &[e]);
}

// ---- memoization soundness -------------------------------------------------

#[test]
fn robber_verification_verdicts_survive_disabling_memoization() {
    let g = cycle(4).unwrap();
    let ga = Arc::new(g.clone());
    let rule = MovementRule::FULLY_ACTIVE;
    let table = Arc::new(solve(&g, 1, rule).unwrap());
    let factory = move || Ok(Box::new(OptimalRobber::new(ga.clone(), table.clone())?) as _);
    let with_memo = exhaustive_verify_robber(
        &g,
        rule,
        1,
        &factory,
        CopPlacements::List(vec![vec![0]]),
        RobberPlacementMode::Fixed(2),
    )
    .unwrap();
    assert!(with_memo.is_verified());
    // without memoization the exploration is bounded; identical verdict
    let bounded = plab::arena::verify_robber_unmemoized_for_tests(
        &g,
        rule,
        1,
        &factory,
        CopPlacements::List(vec![vec![0]]),
        RobberPlacementMode::Fixed(2),
        12,
    )
    .unwrap();
    assert!(matches!(bounded, RobberVerification::Verified { .. }));
}
