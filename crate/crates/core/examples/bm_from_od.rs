//! A BM β strategy built from an OD β and an OD α, with its two shadow plays.

use baire_lab::combinators::{prop3_beta_bm, theorem2_beta_strategy};
use baire_lab::games::{referee_run, CopyAlpha, GameKind, RandomAlpha};
use baire_lab::sorgenfrey::{unit_strip, SorgenfreyArena};

fn main() {
    let arena = SorgenfreyArena::default();
    let beta = prop3_beta_bm::<SorgenfreyArena>(
        Box::new(theorem2_beta_strategy(&arena, unit_strip())),
        Box::new(CopyAlpha { kind: GameKind::OD }),
    );
    let play = referee_run(&arena, GameKind::BM, &beta, &RandomAlpha { seed: 4, kind: GameKind::BM }, 5).unwrap();
    let shadow = beta.shadow(&arena, &play.rounds).unwrap();
    for (n, r) in play.rounds.iter().enumerate() {
        let xi = &shadow.xi[n];
        println!("round {n}: V = {}  U = {}", r.v, r.u);
        println!("  xi: V' = {}  W = {}  U = {}", xi.v, xi.w.as_ref().unwrap(), xi.u);
        println!("  zeta answers V' with {}", shadow.zeta[n].u);
    }
    println!("failed notes: {:?}", play.failed_notes());
}
