//! Runs refereed plays and checks their certificates.

use baire_lab::finite_topology::FiniteSpace;
use baire_lab::games::{
    check_certificate, evaluate, referee_run, BetaMove, CopyAlpha, GameKind, RandomBeta, ScriptedBeta, Verdict,
    WinRule,
};

fn main() {
    let x = FiniteSpace::chain(4);
    let play = referee_run(&x, GameKind::OD, &RandomBeta { seed: 7, kind: GameKind::OD }, &CopyAlpha { kind: GameKind::OD }, 6).unwrap();
    for (n, r) in play.rounds.iter().enumerate() {
        println!("round {n}: V = {}  W = {}  U = {}", r.v, r.w.unwrap(), r.u);
    }
    for rule in [WinRule::I, WinRule::B, WinRule::K] {
        let verdict = evaluate(&x, &play, rule).unwrap();
        let checked = match &verdict {
            Verdict::AlphaWins { certificate } | Verdict::BetaWins { certificate } => {
                check_certificate(&x, &play, rule, certificate).unwrap()
            }
            _ => false,
        };
        println!("rule {rule}: {}  (certificate accepted: {checked})", serde_json::to_string(&verdict).unwrap());
    }

    // {1} is not open in the Sierpinski space
    let s = FiniteSpace::sierpinski();
    let bad = ScriptedBeta { moves: vec![BetaMove::bm(baire_lab::finite_topology::PointSet::from([1]))], kind: GameKind::BM };
    let err = referee_run(&s, GameKind::BM, &bad, &CopyAlpha { kind: GameKind::BM }, 3).unwrap_err();
    println!("rejected: {err}");
}
