//! Moving strategies between a space and a dense subspace.

use baire_lab::combinators::{e_operator, subspace_lift_alpha, subspace_lift_beta, EmbeddingKind};
use baire_lab::finite_topology::{FiniteSpace, PointSet};
use baire_lab::games::{referee_run, CopyBeta, GameKind, RandomAlpha, RandomBeta};

fn main() {
    let x = FiniteSpace::partition(4, &[PointSet::from([0, 1]), PointSet::from([2, 3])]).unwrap();
    let y = PointSet::from([0, 2]);
    println!("E({{2}}) = {}", e_operator(&x, y, PointSet::from([2])));

    let beta = subspace_lift_beta(Box::new(CopyBeta { kind: GameKind::OD }), &x, y, EmbeddingKind::CDense).unwrap();
    let play = referee_run(&x, GameKind::OD, &beta, &RandomAlpha { seed: 1, kind: GameKind::OD }, 4).unwrap();
    let (shadow, _) = beta.shadow(&x, &play.rounds).unwrap();
    for (r, s) in play.rounds.iter().zip(&shadow) {
        println!("X: V = {}  U = {}   Y: V = {}  U = {}", r.v, r.u, s.v, s.u);
    }

    let alpha = subspace_lift_alpha(Box::new(RandomAlpha { seed: 2, kind: GameKind::OD }), &x, y, EmbeddingKind::CDense).unwrap();
    let sub = alpha.subspace().clone();
    let play = referee_run(&sub, GameKind::OD, &RandomBeta { seed: 3, kind: GameKind::OD }, &alpha, 4).unwrap();
    println!("alpha on Y: {:?}", play.u_sequence().iter().map(|u| u.to_string()).collect::<Vec<_>>());
    println!("failed notes: {:?}", play.failed_notes());
}
