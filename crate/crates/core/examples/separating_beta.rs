//! The separating β strategy against a random α on the Sorgenfrey line.

use baire_lab::combinators::theorem2_beta_strategy;
use baire_lab::finite_topology::FiniteSpace;
use baire_lab::diagonal::minimal_semi_nbhd;
use baire_lab::games::{evaluate, referee_run, CopyAlpha, GameKind, RandomAlpha, WinRule};
use baire_lab::sorgenfrey::{unit_strip, SorgenfreyArena};

fn main() {
    let arena = SorgenfreyArena::default();
    let beta = theorem2_beta_strategy(&arena, unit_strip());
    let play = referee_run(&arena, GameKind::OD, &beta, &RandomAlpha { seed: 1, kind: GameKind::OD }, 8).unwrap();
    for (n, r) in play.rounds.iter().enumerate() {
        println!("round {n}: V = {}  W = {}  U = {}", r.v, r.w.as_ref().unwrap(), r.u);
    }
    println!("{}", serde_json::to_string(&evaluate(&arena, &play, WinRule::B).unwrap()).unwrap());

    // no separation exists on a finite space
    let s = FiniteSpace::sierpinski();
    let beta = theorem2_beta_strategy(&s, minimal_semi_nbhd(&s).into_relation());
    println!("{}", referee_run(&s, GameKind::OD, &beta, &CopyAlpha { kind: GameKind::OD }, 3).unwrap_err());
}
