//! α strategies driven by dense open families.

use baire_lab::combinators::{gammas_from_pspace, gammas_from_sigma, lemma_alpha_strategy, GammaSequence, SigmaData};
use baire_lab::finite_topology::{FiniteSpace, PointSet};
use baire_lab::games::{referee_run, GameKind, RandomBeta};

fn main() {
    let s = FiniteSpace::sierpinski();
    let alpha = lemma_alpha_strategy(&s, GammaSequence::new(&s, vec![vec![PointSet::from([0])]]).unwrap());
    let play = referee_run(&s, GameKind::BM, &RandomBeta { seed: 0, kind: GameKind::BM }, &alpha, 5).unwrap();
    println!("gamma = {{{{0}}}}: U = {:?}", play.u_sequence().iter().map(|u| u.to_string()).collect::<Vec<_>>());

    let x = FiniteSpace::partition(3, &[PointSet::from([0, 1]), PointSet::from([2])]).unwrap();
    let sigma = SigmaData { families: vec![vec![PointSet::from([0, 1]), PointSet::from([2])]], cover: vec![x.carrier()], strong: false };
    let g = gammas_from_sigma(&x, &sigma).unwrap();
    println!("from sigma data: {:?} claim {:?}", g.level(0).iter().map(|u| u.to_string()).collect::<Vec<_>>(), g.claim());
    let g = gammas_from_pspace(&x, vec![x.min_nbhds().to_vec()]).unwrap();
    println!("from covers: claim {:?}", g.claim());

    let alpha = lemma_alpha_strategy(&x, g);
    let play = referee_run(&x, GameKind::BM, &RandomBeta { seed: 5, kind: GameKind::BM }, &alpha, 5).unwrap();
    println!("failed notes: {:?}", play.failed_notes());
}
