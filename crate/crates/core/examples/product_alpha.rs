//! α on finite products from one α per factor.

use baire_lab::combinators::{prop7_product_alpha, prop8_pair_alpha};
use baire_lab::finite_topology::{FiniteSpace, ProductLayout};
use baire_lab::games::{evaluate, referee_run, CopyAlpha, GameKind, RandomBeta, WinRule};

fn main() {
    let s = FiniteSpace::sierpinski();
    let d = FiniteSpace::discrete(2);
    let factors = vec![s.clone(), d.clone(), s.clone()];
    let (px, _) = ProductLayout::product_space(&factors).unwrap();
    let strategies = factors.iter().map(|_| Box::new(CopyAlpha { kind: GameKind::OD }) as _).collect();
    let alpha = prop7_product_alpha(strategies, factors).unwrap();
    let play = referee_run(&px, GameKind::OD, &RandomBeta { seed: 3, kind: GameKind::OD }, &alpha, 6).unwrap();
    let (rounds, traces) = alpha.replay(&px, &play.rounds).unwrap();
    for (n, r) in rounds.iter().enumerate() {
        println!("round {n}: joined {:?}  U = {}", r.joined, r.u);
    }
    for t in &traces {
        println!("factor {} joined at round {}", t.factor, t.start);
    }
    println!("k*: {}", serde_json::to_string(&evaluate(&px, &play, WinRule::KStar).unwrap()).unwrap());

    let pair = prop8_pair_alpha(Box::new(CopyAlpha { kind: GameKind::OD }), s.clone(), Box::new(CopyAlpha { kind: GameKind::OD }), s.clone()).unwrap();
    let (sq, _) = ProductLayout::product_space(&[s.clone(), s]).unwrap();
    let play = referee_run(&sq, GameKind::OD, &RandomBeta { seed: 8, kind: GameKind::OD }, &pair, 6).unwrap();
    println!("b*: {}", serde_json::to_string(&evaluate(&sq, &play, WinRule::BStar).unwrap()).unwrap());
}
