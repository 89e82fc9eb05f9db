use plab::graph::*;
use plab::solver::*;
use plab::MovementRule;

fn main() {
    let g = hypercube(3).unwrap();
    let t = solve(&g, 2, MovementRule::PASSIVE).unwrap();
    let s = GameState::round_start(vec![0,0], 3);
    println!("round_start([0,0],3): {:?} time={}", t.status(&s), t.time(&s));
    // walk the optimal micro decisions by hand
    let mut st = s.clone();
    for step in 0..6 {
        if let GameState::CopRound { moved, pending, robber, any_moved } = &st {
            let mover = pending[0];
            let mut cands: Vec<usize> = g.neighbors(mover).to_vec();
            cands.push(mover);
            cands.sort();
            for &d in &cands {
                let mut nm = moved.clone();
                let pos = nm.binary_search(&d).unwrap_or_else(|p| p);
                nm.insert(pos, d);
                let succ = if pending.len() == 1 {
                    GameState::RobberToMove { cops: nm, robber: *robber }
                } else {
                    GameState::CopRound { moved: nm, pending: pending[1..].to_vec(), robber: *robber, any_moved: *any_moved }
                };
                println!("  step{step} mover={mover} dest={d}: {:?} t={}", t.status(&succ), t.time(&succ));
            }
            // take the best
            let best = cands.iter().min_by_key(|&&d| {
                let mut nm = moved.clone();
                let pos = nm.binary_search(&d).unwrap_or_else(|p| p);
                nm.insert(pos, d);
                let succ = if pending.len() == 1 {
                    GameState::RobberToMove { cops: nm, robber: *robber }
                } else {
                    GameState::CopRound { moved: nm, pending: pending[1..].to_vec(), robber: *robber, any_moved: *any_moved }
                };
                t.time(&succ)
            }).unwrap();
            println!("  -> takes {best}");
            let mut nm = moved.clone();
            let pos = nm.binary_search(best).unwrap_or_else(|p| p);
            nm.insert(pos, *best);
            st = if pending.len() == 1 {
                GameState::RobberToMove { cops: nm, robber: *robber }
            } else {
                GameState::CopRound { moved: nm, pending: pending[1..].to_vec(), robber: *robber, any_moved: *any_moved }
            };
        } else {
            println!("robber to move; time={}", t.time(&st));
            break;
        }
    }
}
