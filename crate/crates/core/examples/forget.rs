//! Forgetful wrappers: a BM α that ignores W, and k* read as b*.

use baire_lab::combinators::{prop4_forget, ForgetDirection};
use baire_lab::finite_topology::FiniteSpace;
use baire_lab::games::{referee_run, AlphaStrategy, GameKind, RandomAlpha, RandomBeta};

fn main() {
    let x = FiniteSpace::discrete(3);
    let blind = prop4_forget::<FiniteSpace>(Box::new(RandomAlpha { seed: 2, kind: GameKind::BM }), ForgetDirection::IgnoreW).unwrap();
    let play = referee_run(&x, GameKind::OD, &RandomBeta { seed: 9, kind: GameKind::OD }, &blind, 5).unwrap();
    println!("{}: {:?}", blind.info().name, play.u_sequence().iter().map(|u| u.to_string()).collect::<Vec<_>>());

    let weak = prop4_forget::<FiniteSpace>(Box::new(RandomAlpha { seed: 2, kind: GameKind::OD }), "k*->b*".parse().unwrap()).unwrap();
    println!("{} claims {:?}", weak.info().name, weak.info().claim);
}
