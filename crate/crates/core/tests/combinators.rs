mod common;

use baire_lab::combinators::{
    bounded_family_check, converges_to_check, e_operator, gammas_from_pspace, gammas_from_sigma,
    lemma_alpha_strategy, meets_finitely_many, prop3_beta_bm, prop4_forget, prop7_product_alpha, prop8_pair_alpha,
    subspace_lift, subspace_lift_alpha, subspace_lift_beta, theorem2_beta_strategy, EmbeddingKind, ForgetDirection,
    GammaError, GammaSequence, Lifted, PeriodicFamily, SigmaData,
};
use baire_lab::diagonal::{minimal_semi_nbhd, Relation};
use baire_lab::finite_topology::{FiniteSpace, PointSet, ProductLayout};
use baire_lab::games::{
    evaluate, referee_run, AlphaStrategy, BetaMove, BetaStrategy, BoxAlpha, BoxBeta, CopyAlpha, CopyBeta, GameError,
    GameKind, RandomAlpha, RandomBeta, ScriptedBeta, StrategyError, WinRule,
};
use baire_lab::sorgenfrey::{int, theorem2_beta_strategy_sorgenfrey, unit_strip, SorgenfreyArena};
use common::{closure, is_open, opens, spaces_upto, subsets};
use proptest::prelude::*;

fn ps<const N: usize>(a: [usize; N]) -> PointSet {
    PointSet::from(a)
}

fn copy_od() -> BoxAlpha<FiniteSpace> {
    Box::new(CopyAlpha { kind: GameKind::OD })
}

fn strategy_error(e: GameError) -> StrategyError {
    match e {
        GameError::Strategy { source, .. } => source,
        other => panic!("expected a strategy failure, got {other}"),
    }
}

#[test]
fn separation_fails_on_finite_delta_baire_spaces() {
    let s = FiniteSpace::sierpinski();
    let beta = theorem2_beta_strategy(&s, minimal_semi_nbhd(&s).into_relation());
    let e = referee_run(&s, GameKind::OD, &beta, &CopyAlpha { kind: GameKind::OD }, 3).unwrap_err();
    assert!(matches!(strategy_error(e), StrategyError::NoSeparation { round: 0 }));

    let d = FiniteSpace::discrete(3);
    let full = theorem2_beta_strategy(&d, Relation::full(d.clone()));
    let e = referee_run(&d, GameKind::OD, &full, &CopyAlpha { kind: GameKind::OD }, 3).unwrap_err();
    assert!(matches!(strategy_error(e), StrategyError::NoSeparation { round: 0 }));
}

#[test]
fn sorgenfrey_separation_is_the_midpoint_split() {
    let arena = SorgenfreyArena::default();
    let generic = theorem2_beta_strategy(&arena, unit_strip());
    let named = theorem2_beta_strategy_sorgenfrey();
    for seed in 0..5 {
        let alpha = RandomAlpha { seed, kind: GameKind::OD };
        let a = referee_run(&arena, GameKind::OD, &generic, &alpha, 20).unwrap();
        let b = referee_run(&arena, GameKind::OD, &named, &alpha, 20).unwrap();
        assert_eq!(a.rounds, b.rounds);
        let mut prev = arena.root.clone();
        for r in &a.rounds {
            let w = r.w.as_ref().unwrap();
            assert_eq!(r.v.a(), &prev.midpoint());
            assert_eq!((w.a(), w.b()), (prev.a(), &prev.midpoint()));
            // differences y - x lie in [-(len), 0): below the strip
            assert!(unit_strip().misses_box(&r.v, w));
            prev = r.u.clone();
        }
    }
}

#[test]
fn bm_from_od_wiring() {
    let x = FiniteSpace::discrete(2);
    for seed in 0..30 {
        let t1: BoxBeta<FiniteSpace> = Box::new(RandomBeta { seed, kind: GameKind::OD });
        let beta = prop3_beta_bm(t1, copy_od());
        let play = referee_run(&x, GameKind::BM, &beta, &RandomAlpha { seed: seed + 7, kind: GameKind::BM }, 10).unwrap();
        assert!(play.failed_notes().is_empty());
        let sh = beta.shadow(&x, &play.rounds).unwrap();
        assert_eq!(sh.xi.len(), play.rounds.len());
        for (k, r) in play.rounds.iter().enumerate() {
            let (xi, zeta) = (&sh.xi[k], &sh.zeta[k]);
            // xi_k = (V'_k, W_k, U_k) and zeta_k = (V'_k, W_k, V_k)
            assert_eq!((xi.v, xi.w, xi.u), (zeta.v, zeta.w, r.u));
            assert_eq!(zeta.u, r.v);
            assert!(r.v.is_subset(xi.v));
            let prev = if k == 0 { x.carrier() } else { play.rounds[k - 1].u };
            assert!(xi.v.is_subset(prev) && xi.w.unwrap().is_subset(prev));
        }
    }
}

#[test]
fn bm_from_od_on_sorgenfrey_shrinks() {
    let arena = SorgenfreyArena::default();
    let beta = prop3_beta_bm::<SorgenfreyArena>(
        Box::new(theorem2_beta_strategy(&arena, unit_strip())),
        Box::new(CopyAlpha { kind: GameKind::OD }),
    );
    let play = referee_run(&arena, GameKind::BM, &beta, &CopyAlpha { kind: GameKind::BM }, 12).unwrap();
    assert!(play.failed_notes().is_empty());
    for pair in play.rounds.windows(2) {
        assert!(pair[1].v.length() * int(2) <= pair[0].v.length());
    }
}

#[test]
fn bm_from_od_rejects_foreign_history() {
    let x = FiniteSpace::discrete(2);
    let beta = prop3_beta_bm::<FiniteSpace>(Box::new(CopyBeta { kind: GameKind::OD }), copy_od());
    let foreign = vec![baire_lab::games::Round { v: ps([0]), w: None, u: ps([0]) }];
    assert!(matches!(beta.respond(&x, &foreign), Err(StrategyError::Input(_))));
}

#[test]
fn forgetting_w_makes_alpha_blind() {
    let x = FiniteSpace::discrete(3);
    for seed in 0..40 {
        let inner: BoxAlpha<FiniteSpace> = Box::new(RandomAlpha { seed, kind: GameKind::BM });
        let f = prop4_forget(inner, ForgetDirection::IgnoreW).unwrap();
        let first = referee_run(&x, GameKind::OD, &RandomBeta { seed, kind: GameKind::OD }, &f, 8).unwrap();
        let moves = first.rounds.iter().map(|r| BetaMove::od(r.v, r.v)).collect();
        let second = referee_run(&x, GameKind::OD, &ScriptedBeta { moves, kind: GameKind::OD }, &f, 8).unwrap();
        assert_eq!(first.u_sequence(), second.u_sequence());
    }
}

#[test]
fn rule_weakening_keeps_moves() {
    let x = FiniteSpace::chain(3);
    for seed in 0..20 {
        let beta = RandomBeta { seed, kind: GameKind::OD };
        let plain = RandomAlpha { seed: seed + 1, kind: GameKind::OD };
        let f = prop4_forget(Box::new(plain), ForgetDirection::RuleWeakening).unwrap();
        let a = referee_run(&x, GameKind::OD, &beta, &plain, 10).unwrap();
        let b = referee_run(&x, GameKind::OD, &beta, &f, 10).unwrap();
        assert_eq!(a.rounds, b.rounds);
        assert_eq!(f.info().claim, Some(WinRule::BStar));
    }
}

#[test]
fn forgetting_rejects_wrong_inputs() {
    let od = prop4_forget::<FiniteSpace>(copy_od(), ForgetDirection::IgnoreW);
    assert!(matches!(od, Err(StrategyError::Unsupported(_))));
    let pair = prop8_pair_alpha(copy_od(), FiniteSpace::sierpinski(), copy_od(), FiniteSpace::sierpinski()).unwrap();
    let b_star = prop4_forget::<FiniteSpace>(Box::new(pair), ForgetDirection::RuleWeakening);
    assert!(matches!(b_star, Err(StrategyError::Unsupported(_))));
    assert_eq!("k*->b*".parse::<ForgetDirection>().unwrap(), ForgetDirection::RuleWeakening);
    assert!("sideways".parse::<ForgetDirection>().is_err());
}

#[test]
fn lemma_alpha_with_minimal_neighborhoods_is_legal() {
    for x in spaces_upto(3) {
        let gammas = GammaSequence::new(&x, vec![x.min_nbhds().to_vec()]).unwrap();
        let alpha = lemma_alpha_strategy(&x, gammas);
        for seed in 0..10 {
            let play = referee_run(&x, GameKind::BM, &RandomBeta { seed, kind: GameKind::BM }, &alpha, 10).unwrap();
            assert!(play.failed_notes().is_empty());
        }
    }
}

#[test]
fn lemma_alpha_pins_the_open_point() {
    let s = FiniteSpace::sierpinski();
    let alpha = lemma_alpha_strategy(&s, GammaSequence::new(&s, vec![vec![ps([0])]]).unwrap());
    let play = referee_run(&s, GameKind::BM, &RandomBeta { seed: 3, kind: GameKind::BM }, &alpha, 10).unwrap();
    assert_eq!(play.u_sequence(), vec![ps([0]); 10]);
}

#[test]
fn lemma_alpha_needs_density() {
    let x = FiniteSpace::discrete(2);
    assert!(matches!(
        GammaSequence::new(&x, vec![vec![ps([0])]]),
        Err(GammaError::NotDense { level: 0, .. })
    ));
    let alpha = lemma_alpha_strategy(&x, GammaSequence::unchecked(vec![vec![ps([0])]]));
    let beta = ScriptedBeta { moves: vec![BetaMove::bm(ps([1]))], kind: GameKind::BM };
    let e = referee_run(&x, GameKind::BM, &beta, &alpha, 2).unwrap_err();
    assert!(matches!(strategy_error(e), StrategyError::DensityViolation { round: 0 }));
}

#[test]
fn gammas_from_sigma_examples() {
    let x = FiniteSpace::partition(3, &[ps([0, 1]), ps([2])]).unwrap();
    let blocks = SigmaData { families: vec![vec![ps([0, 1]), ps([2])]], cover: vec![x.carrier()], strong: false };
    let g = gammas_from_sigma(&x, &blocks).unwrap();
    assert_eq!(g.level(0), &[ps([0, 1]), ps([2])]);
    assert_eq!(g.claim(), Some(WinRule::BStar));

    let nonempty: Vec<PointSet> = x.opens().into_iter().filter(|o| !o.is_empty()).collect();
    let whole = SigmaData { families: vec![vec![x.carrier()]], cover: vec![x.carrier()], strong: true };
    let g = gammas_from_sigma(&x, &whole).unwrap();
    assert_eq!(g.level(0), nonempty.as_slice());
    assert_eq!(g.claim(), Some(WinRule::KStar));
    let vacuous = SigmaData { families: vec![vec![PointSet::EMPTY]], cover: vec![x.carrier()], strong: false };
    assert_eq!(gammas_from_sigma(&x, &vacuous).unwrap().level(0), nonempty.as_slice());

    let s = FiniteSpace::sierpinski();
    let open_only = SigmaData { families: vec![vec![ps([0])]], cover: vec![s.carrier()], strong: false };
    assert!(matches!(gammas_from_sigma(&s, &open_only), Err(GammaError::NotClosed { .. })));
    let short = SigmaData { families: vec![vec![]], cover: vec![ps([0])], strong: false };
    assert!(matches!(gammas_from_sigma(&s, &short), Err(GammaError::CoverIncomplete(_))));
}

#[test]
fn gammas_from_pspace_examples() {
    let x = FiniteSpace::chain(3);
    assert!(gammas_from_pspace(&x, vec![vec![x.carrier()]; 3]).is_ok());
    assert!(gammas_from_pspace(&x, vec![x.min_nbhds().to_vec()]).is_ok());
    assert!(matches!(gammas_from_pspace(&x, vec![vec![ps([0, 1])]]), Err(GammaError::NotACover { .. })));
}

#[test]
fn product_of_two_sierpinski_factors() {
    let s = FiniteSpace::sierpinski();
    let (sq, _) = ProductLayout::product_space(&[s.clone(), s.clone()]).unwrap();
    let alpha = prop7_product_alpha(vec![copy_od(), copy_od()], vec![s.clone(), s.clone()]).unwrap();
    for seed in 0..20 {
        let play = referee_run(&sq, GameKind::OD, &RandomBeta { seed, kind: GameKind::OD }, &alpha, 10).unwrap();
        assert!(play.failed_notes().is_empty(), "{:?}", play.failed_notes());
        let (rounds, traces) = alpha.replay(&sq, &play.rounds).unwrap();
        assert_eq!(traces.len(), 2);
        for (r, real) in rounds.iter().zip(&play.rounds) {
            assert_eq!(r.u, real.u);
            assert!(r.u.is_subset(real.v));
        }
    }
}

#[test]
fn product_of_one_factor_plays_the_factor_strategy_on_minimal_boxes() {
    for x in spaces_upto(3) {
        let (px, layout) = ProductLayout::product_space(&[x.clone()]).unwrap();
        for seed in 0..5 {
            let inner = RandomAlpha { seed, kind: GameKind::OD };
            let pa = prop7_product_alpha(vec![Box::new(inner)], vec![x.clone()]).unwrap();
            let beta = RandomBeta { seed: seed + 100, kind: GameKind::OD };
            let play = referee_run(&px, GameKind::OD, &beta, &pa, 8).unwrap();
            assert!(play.failed_notes().is_empty());
            let (rounds, traces) = pa.replay(&px, &play.rounds).unwrap();
            let trace = &traces[0];
            if trace.start == usize::MAX {
                assert!(rounds.iter().all(|r| r.u == px.carrier()));
                continue;
            }
            for (k, r) in trace.rounds.iter().enumerate() {
                let n = trace.start + k;
                let least = play.rounds[n].v.least().unwrap();
                assert_eq!(r.v, x.min_nbhd(layout.decode(least)[0]));
                assert_eq!(layout.project(play.rounds[n].u, 0), r.u);
                let again = inner.respond(&x, &trace.rounds[..k], &BetaMove::od(r.v, r.w.unwrap())).unwrap();
                assert_eq!(again.mv, r.u);
            }
            assert!(rounds[..trace.start].iter().all(|r| r.u == px.carrier()));
        }
    }
}

#[test]
fn product_of_three_discrete_pairs() {
    let d = FiniteSpace::discrete(2);
    let factors = vec![d.clone(), d.clone(), d.clone()];
    let (px, _) = ProductLayout::product_space(&factors).unwrap();
    for seed in 0..100 {
        let strategies: Vec<BoxAlpha<FiniteSpace>> =
            (0..3).map(|j| Box::new(RandomAlpha { seed: seed * 3 + j, kind: GameKind::OD }) as BoxAlpha<FiniteSpace>).collect();
        let pa = prop7_product_alpha(strategies, factors.clone()).unwrap();
        let play = referee_run(&px, GameKind::OD, &RandomBeta { seed, kind: GameKind::OD }, &pa, 10).unwrap();
        assert!(play.failed_notes().is_empty());
    }
}

#[test]
fn pair_alpha_against_full_boxes() {
    let s = FiniteSpace::sierpinski();
    let (sq, _) = ProductLayout::product_space(&[s.clone(), s.clone()]).unwrap();
    let pa = prop8_pair_alpha(copy_od(), s.clone(), copy_od(), s.clone()).unwrap();
    let play = referee_run(&sq, GameKind::OD, &CopyBeta { kind: GameKind::OD }, &pa, 10).unwrap();
    assert!(play.failed_notes().is_empty());
    let us = play.u_sequence();
    assert!(us.windows(2).all(|w| w[0] == w[1]));
    assert!(evaluate(&sq, &play, WinRule::K).unwrap().is_alpha_win());
    for seed in 0..20 {
        let play = referee_run(&sq, GameKind::OD, &RandomBeta { seed, kind: GameKind::OD }, &pa, 10).unwrap();
        assert!(play.failed_notes().is_empty());
    }
    let other = FiniteSpace::discrete(4);
    let e = referee_run(&other, GameKind::OD, &CopyBeta { kind: GameKind::OD }, &pa, 1).unwrap_err();
    assert!(matches!(strategy_error(e), StrategyError::BackendMismatch(_)));
}

#[test]
fn trivial_open_embedding_changes_nothing() {
    for x in spaces_upto(3) {
        for seed in 0..5 {
            let inner = RandomBeta { seed, kind: GameKind::OD };
            let lifted = subspace_lift_beta(Box::new(inner), &x, x.carrier(), EmbeddingKind::Open).unwrap();
            let alpha = RandomAlpha { seed: seed + 1, kind: GameKind::OD };
            let a = referee_run(&x, GameKind::OD, &inner, &alpha, 8).unwrap();
            let b = referee_run(&x, GameKind::OD, &lifted, &alpha, 8).unwrap();
            assert_eq!(a.rounds, b.rounds);
            assert!(b.failed_notes().is_empty());
        }
    }
}

#[test]
fn open_block_passes_through() {
    let x = FiniteSpace::partition(4, &[ps([0, 1]), ps([2, 3])]).unwrap();
    let block = ps([2, 3]);
    let sub = x.subspace(block).unwrap();
    for seed in 0..10 {
        let lifted = subspace_lift_beta(Box::new(RandomBeta { seed, kind: GameKind::OD }), &x, block, EmbeddingKind::Open).unwrap();
        let play = referee_run(&x, GameKind::OD, &lifted, &RandomAlpha { seed, kind: GameKind::OD }, 8).unwrap();
        assert!(play.failed_notes().is_empty());
        let (shadow, _) = lifted.shadow(&x, &play.rounds).unwrap();
        for (r, s) in play.rounds.iter().zip(&shadow) {
            assert!(r.v.is_subset(block));
            assert_eq!(sub.to_parent(s.v), r.v);
            assert_eq!(sub.to_parent(s.u), r.u);
        }
    }
}

#[test]
fn dense_lift_meets_y_in_the_inner_moves() {
    let x = FiniteSpace::partition(4, &[ps([0, 1]), ps([2, 3])]).unwrap();
    let y = ps([0, 2]);
    let sub = x.subspace(y).unwrap();
    for seed in 0..20 {
        let lifted = subspace_lift_beta(Box::new(RandomBeta { seed, kind: GameKind::OD }), &x, y, EmbeddingKind::CDense).unwrap();
        let play = referee_run(&x, GameKind::OD, &lifted, &RandomAlpha { seed, kind: GameKind::OD }, 8).unwrap();
        assert!(play.failed_notes().is_empty());
        let (shadow, _) = lifted.shadow(&x, &play.rounds).unwrap();
        for (r, s) in play.rounds.iter().zip(&shadow) {
            assert_eq!(r.v.intersection(y), sub.to_parent(s.v));
            assert!(closure(&x, sub.to_parent(s.u)).is_subset(r.u));
        }
        let alpha = subspace_lift_alpha(Box::new(RandomAlpha { seed, kind: GameKind::OD }), &x, y, EmbeddingKind::CDense).unwrap();
        let ys = alpha.subspace().clone();
        let play = referee_run(&ys, GameKind::OD, &RandomBeta { seed, kind: GameKind::OD }, &alpha, 8).unwrap();
        assert!(play.failed_notes().is_empty());
        assert_eq!(alpha.shadow(&ys, &play.rounds).unwrap().len(), 8);
    }
}

#[test]
fn embedding_preconditions() {
    let x = FiniteSpace::discrete(3);
    let copy: BoxBeta<FiniteSpace> = Box::new(CopyBeta { kind: GameKind::OD });
    assert!(subspace_lift_beta(copy, &x, ps([0]), EmbeddingKind::CDense).is_err());
    let s = FiniteSpace::sierpinski();
    assert!(EmbeddingKind::Open.check(&s, ps([1])).is_err());
    assert!(EmbeddingKind::CDense.check(&s, ps([0])).is_ok());
    assert!(EmbeddingKind::DenseGDelta { g: vec![ps([0])] }.check(&s, ps([0])).is_ok());
    assert!(EmbeddingKind::DenseGDelta { g: vec![] }.check(&s, ps([0])).is_err());
    let bm: BoxBeta<FiniteSpace> = Box::new(CopyBeta { kind: GameKind::BM });
    assert!(matches!(subspace_lift(Lifted::Beta(bm), &s, ps([0]), EmbeddingKind::CDense), Err(StrategyError::Unsupported(_))));
    let lifted = subspace_lift(Lifted::Alpha(copy_od()), &s, ps([0]), EmbeddingKind::CDense).unwrap();
    assert!(matches!(lifted, Lifted::Alpha(_)));
}

#[test]
fn e_operator_examples() {
    let s = FiniteSpace::sierpinski();
    // Y = {0} dense; E({0}) = X minus closure(empty)
    assert_eq!(e_operator(&s, ps([0]), ps([0])), s.carrier());
    assert_eq!(e_operator(&s, ps([0]), PointSet::EMPTY), PointSet::EMPTY);
    let x = FiniteSpace::partition(4, &[ps([0, 1]), ps([2, 3])]).unwrap();
    assert_eq!(e_operator(&x, ps([0, 2]), ps([2])), ps([2, 3]));
}

fn oracle_converges(x: &FiniteSpace, f: &PeriodicFamily, k: PointSet) -> bool {
    opens(x)
        .into_iter()
        .filter(|u| k.is_subset(*u))
        .all(|u| f.cycle.iter().all(|c| c.is_subset(u)))
}

fn oracle_locally_finite(x: &FiniteSpace, f: &PeriodicFamily) -> bool {
    (0..x.len()).all(|p| f.cycle.iter().all(|c| !x.min_nbhd(p).meets(*c)))
}

#[test]
fn family_examples() {
    let s = FiniteSpace::sierpinski();
    assert!(converges_to_check(&s, &PeriodicFamily::constant(ps([0])), ps([0])).unwrap());
    assert!(!converges_to_check(&s, &PeriodicFamily::constant(ps([1])), ps([0])).unwrap());
    let d = FiniteSpace::discrete(3);
    let once = PeriodicFamily::new(vec![ps([0]), ps([1]), ps([2])], vec![PointSet::EMPTY]).unwrap();
    assert!(once.is_locally_finite());
    for k in subsets(3) {
        assert!(converges_to_check(&d, &once, k).unwrap());
    }
    assert!(bounded_family_check(&d, &once).unwrap());
    assert!(meets_finitely_many(ps([0]), &once));
    assert!(PeriodicFamily::new(vec![], vec![]).is_err());
    assert!(converges_to_check(&s, &PeriodicFamily::constant(ps([4])), ps([0])).is_err());
}

proptest! {
    #[test]
    fn family_checks_match_oracles(
        space in 0usize..34,
        prefix in proptest::collection::vec(0u64..8, 0..4),
        cycle in proptest::collection::vec(0u64..8, 1..4),
        k in 0u64..8,
    ) {
        let x = spaces_upto(3).swap_remove(space);
        let mask = x.carrier().bits();
        let f = PeriodicFamily::new(
            prefix.into_iter().map(|b| PointSet::from_bits(b & mask)).collect(),
            cycle.into_iter().map(|b| PointSet::from_bits(b & mask)).collect(),
        ).unwrap();
        let k = PointSet::from_bits(k & mask);
        prop_assert_eq!(converges_to_check(&x, &f, k).unwrap(), oracle_converges(&x, &f, k));
        prop_assert_eq!(f.is_locally_finite(), oracle_locally_finite(&x, &f));
        if f.is_locally_finite() {
            // some member (indeed every one) meets only finitely many members
            let any = f.prefix.iter().chain(&f.cycle).any(|&m| meets_finitely_many(m, &f));
            prop_assert!(any);
        }
        prop_assert!(bounded_family_check(&x, &f).unwrap());
    }

    #[test]
    fn e_operator_is_open_extension(space in 0usize..34, ybits in 1u64..8, obits in 0u64..8) {
        let x = spaces_upto(3).swap_remove(space);
        let y = PointSet::from_bits(ybits & x.carrier().bits());
        prop_assume!(!y.is_empty() && common::is_dense(&x, y));
        let o = PointSet::from_bits(obits & x.carrier().bits());
        prop_assume!(is_open(&x, o));
        let u = o.intersection(y);
        let e = e_operator(&x, y, u);
        prop_assert!(is_open(&x, e));
        prop_assert_eq!(e.intersection(y), u);
        prop_assert!(o.is_subset(e));
    }
}

#[test]
fn lifted_alpha_info_names() {
    let s = FiniteSpace::sierpinski();
    let a = subspace_lift_alpha(copy_od(), &s, ps([0]), EmbeddingKind::CDense).unwrap();
    assert_eq!(a.info().name, "restrict[c-dense](copy)");
    let b = subspace_lift_beta(Box::new(CopyBeta { kind: GameKind::OD }), &s, ps([0]), EmbeddingKind::Open).unwrap();
    assert_eq!(b.info().name, "lift[open](copy)");
}

/// Small periodic families: prefixes of length at most `p`, cycles of length 1.
fn small_families(n: usize, p: usize) -> Vec<PeriodicFamily> {
    let sets: Vec<PointSet> = subsets(n).collect();
    let mut prefixes: Vec<Vec<PointSet>> = vec![vec![]];
    let mut last = prefixes.clone();
    for _ in 0..p {
        last = last.iter().flat_map(|pre| sets.iter().map(move |&s| [pre.clone(), vec![s]].concat())).collect();
        prefixes.extend(last.iter().cloned());
    }
    prefixes
        .into_iter()
        .flat_map(|pre| sets.iter().map(move |&c| PeriodicFamily::new(pre.clone(), vec![c]).unwrap()))
        .collect()
}

#[test]
fn bounded_agrees_with_enumeration() {
    for x in spaces_upto(3) {
        let gammas: Vec<PeriodicFamily> =
            small_families(x.len(), 2).into_iter().filter(|g| oracle_locally_finite(&x, g)).collect();
        for f in small_families(x.len(), 1) {
            let members: Vec<PointSet> = f.prefix.iter().chain(&f.cycle).copied().collect();
            // a member meets finitely many entries iff it misses the recurring ones
            let bounded = gammas.iter().all(|g| members.iter().any(|m| g.cycle.iter().all(|c| !c.meets(*m))));
            assert_eq!(bounded_family_check(&x, &f).unwrap(), bounded);
        }
    }
}
