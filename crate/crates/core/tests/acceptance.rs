//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS or FAIL line.

mod common;

use std::time::{Duration, Instant};

use baire_lab::combinators::{
    e_operator, lemma_alpha_strategy, prop3_beta_bm, prop4_forget, prop7_product_alpha, prop8_pair_alpha,
    subspace_lift_alpha, subspace_lift_beta, theorem2_beta_strategy, EmbeddingKind, ForgetDirection, GammaSequence,
};
use baire_lab::diagonal::{is_delta_baire, is_delta_baire_bruteforce};
use baire_lab::finite_topology::{enumerate_spaces, FiniteSpace, PointSet, ProductLayout};
use baire_lab::games::{
    check_certificate, evaluate, referee_run, Arena, BetaMove, BoxAlpha, BoxBeta,
    CopyAlpha, CopyBeta, GameError, GameKind, Play, StrategyError, RandomAlpha, RandomBeta, ScriptedBeta, WinRule,
};
use baire_lab::groups::{catalog, theorem1_harness, FiniteTopoGroup, GroupSource, HarnessConfig};
use baire_lab::sorgenfrey::{
    delta_baire_failure_witness, int, inversion_discontinuity_witness, rat, strip_closure, unit_strip, Rat,
    SInterval, SorgenfreyArena,
};
use common::{closure, is_dense, is_open, opens, random_space, set_partitions, spaces_upto};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const HARNESS_BUDGET: Duration = Duration::from_secs(300);
const BRUTEFORCE_LIMIT: u64 = 1 << 24;
const SAMPLES_4: u64 = 500;
const BELL: [usize; 5] = [1, 2, 5, 15, 52];
const LABELED: [usize; 3] = [4, 29, 355];
const GAME_PLAYS: u64 = 200;
const COMBINATOR_PLAYS: u64 = 100;
const COMBINATOR_HORIZON: usize = 20;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut spaces = Vec::new();
    for (n, expect) in [(2, 4), (3, 29)] {
        let s = enumerate_spaces(n).map_err(|e| e.to_string())?;
        ensure(s.len() == expect, || format!("{} topologies on {n} points", s.len()))?;
        spaces.extend(s);
    }
    spaces.extend((0..SAMPLES_4).map(|seed| random_space(4, seed)));
    for x in &spaces {
        let fast = is_delta_baire(x);
        let slow = is_delta_baire_bruteforce(x, BRUTEFORCE_LIMIT).map_err(|e| e.to_string())?;
        ensure(fast == slow, || format!("disagree on {x:?}: {fast} vs {slow}"))?;
    }
    let t = start.elapsed();
    ensure(t < ORACLE_BUDGET, || format!("took {t:?}"))?;
    Ok(format!("{} spaces agree in {t:.2?}", spaces.len()))
}

fn regular_delta_baire() -> Outcome {
    let mut total = 0;
    for n in 1..=5 {
        let parts = set_partitions(n);
        ensure(parts.len() == BELL[n - 1], || format!("{} partitions of {n}", parts.len()))?;
        let regular = enumerate_spaces(n)
            .map_err(|e| e.to_string())?
            .iter()
            .filter(|x| x.is_regular())
            .count();
        ensure(regular == BELL[n - 1], || format!("{regular} regular spaces on {n} points"))?;
        for blocks in &parts {
            let x = FiniteSpace::partition(n, blocks).map_err(|e| e.to_string())?;
            ensure(is_delta_baire(&x), || format!("{blocks:?} is not Delta-Baire"))?;
            total += 1;
        }
    }
    Ok(format!("{total} partition spaces, counts 1 2 5 15 52"))
}

fn group_harness() -> Outcome {
    let start = Instant::now();
    let report = theorem1_harness(&HarnessConfig {
        max_order: 4,
        max_space_points: 4,
        groups: GroupSource::Catalog,
        max_instances: 2_000_000,
    })
    .map_err(|e| e.to_string())?;
    for o in &report.orders {
        if o.order >= 2 {
            ensure(o.spaces == LABELED[o.order - 2], || format!("{} spaces at order {}", o.spaces, o.order))?;
        }
    }
    ensure(report.violations.is_empty() && report.passed(), || {
        format!("{} violations", report.violations.len())
    })?;

    // Independent re-check of the witness contract.
    let mut checked = 0u64;
    for order in 1..=4 {
        for (_, g) in catalog(order) {
            for x in enumerate_spaces(order).map_err(|e| e.to_string())? {
                let tg = FiniteTopoGroup::new(g.clone(), x.clone()).map_err(|e| e.to_string())?;
                let c = tg.classify();
                ensure(!(c.paratopological && is_delta_baire(&x)) || c.topological, || {
                    format!("paratopological, Delta-Baire, not topological: {x:?}")
                })?;
                if !c.paratopological {
                    continue;
                }
                let e = g.identity();
                for u in opens(&x).into_iter().filter(|u| u.contains(e)) {
                    let w = tg.inverse_continuity_witness(u).map_err(|e| e.to_string())?;
                    let p = w.p;
                    ensure(g.set_inv(p) == p && p.is_subset(g.set_inv(u)) && p.contains(e), || {
                        format!("bad P = {p} for U = {u} on {x:?}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    ensure(t < HARNESS_BUDGET, || format!("took {t:?}"))?;
    Ok(format!(
        "{} instances, 0 violations, {checked} witnesses rechecked in {t:.2?}",
        report.total.instances
    ))
}

fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    rat(rng.gen_range(lo..hi), rng.gen_range(1..100))
}

fn sorgenfrey_witnesses() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let closed = strip_closure(&unit_strip());
    for _ in 0..100 {
        let a = random_rat(&mut rng, -1000, 1000);
        let b = &a + random_rat(&mut rng, 1, 1000);
        let w = SInterval::new(a, b).map_err(|e| e.to_string())?;
        let (x, y) = delta_baire_failure_witness(&w);
        let d = &y - &x;
        ensure(w.contains(&x) && w.contains(&y), || format!("pair outside {w}"))?;
        ensure(d < int(0) || d > int(1), || format!("difference {d} lies in [0, 1]"))?;
        ensure(!closed.contains(&x, &y), || format!("pair inside the closed strip for {w}"))?;
    }
    for _ in 0..100 {
        let r = random_rat(&mut rng, 1, 1000);
        let u = vec![SInterval::new(int(0), r).map_err(|e| e.to_string())?];
        let wit = inversion_discontinuity_witness(&u).map_err(|e| e.to_string())?;
        for _ in 0..5 {
            let eps = random_rat(&mut rng, 1, 1000);
            let t = wit.counterexample(&eps);
            ensure(t >= int(0) && t < eps && !u[0].contains(&-t.clone()), || {
                format!("t = {t} for eps = {eps}, u = {}", u[0])
            })?;
            ensure(wit.validates(&u, &eps), || "validates disagrees".into())?;
        }
    }
    let arena = SorgenfreyArena::default();
    let beta = theorem2_beta_strategy(&arena, unit_strip());
    for seed in 0..20 {
        let alpha = RandomAlpha { seed, kind: GameKind::OD };
        let play = referee_run(&arena, GameKind::OD, &beta, &alpha, 50).map_err(|e| e.to_string())?;
        ensure(play.failed_notes().is_empty(), || format!("seed {seed}: {:?}", play.failed_notes()))?;
        let mut prev = arena.root();
        for (n, r) in play.rounds.iter().enumerate() {
            let w = r.w.as_ref().unwrap();
            // differences y - x over V x W fill (w.a - v.b, w.b - v.a)
            let misses = w.b() - r.v.a() <= int(0) || w.a() - r.v.b() >= int(1);
            ensure(misses && r.v.is_subset(&prev), || format!("seed {seed} round {n}"))?;
            prev = r.u.clone();
        }
        let verdict = evaluate(&arena, &play, WinRule::B).map_err(|e| e.to_string())?;
        ensure(verdict.is_beta_win(), || format!("seed {seed}: {verdict:?}"))?;
        let ok = check_certificate(&arena, &play, WinRule::B, verdict.certificate().unwrap()).map_err(|e| e.to_string())?;
        ensure(ok, || format!("seed {seed}: certificate rejected"))?;
    }
    Ok("100 failure pairs, 100 inversion witnesses, 20 x 50 separating rounds".into())
}

fn finite_game_exactness() -> Outcome {
    let spaces = enumerate_spaces(3).map_err(|e| e.to_string())?;
    let mut plays = 0;
    for x in &spaces {
        for (rule, kind) in [(WinRule::I, GameKind::BM), (WinRule::B, GameKind::OD), (WinRule::K, GameKind::OD)] {
            for seed in 0..GAME_PLAYS {
                let beta = RandomBeta { seed, kind };
                let alpha = RandomAlpha { seed: seed ^ 0x5eed, kind };
                let horizon = 1 + (seed as usize % 12);
                let play = referee_run(x, kind, &beta, &alpha, horizon).map_err(|e| e.to_string())?;
                let meet = play.rounds.iter().fold(x.carrier(), |a, r| a.intersection(r.u));
                ensure(!meet.is_empty(), || "nested opens with empty meet".into())?;
                let v = evaluate(x, &play, rule).map_err(|e| e.to_string())?;
                ensure(v.is_alpha_win(), || format!("{rule} seed {seed}: {v:?}"))?;
                let ok = check_certificate(x, &play, rule, v.certificate().unwrap()).map_err(|e| e.to_string())?;
                ensure(ok, || format!("{rule} seed {seed}: certificate rejected on {x:?}"))?;
                plays += 1;
            }
        }
    }
    Ok(format!("{plays} plays, all alpha wins, all certificates accepted"))
}

fn clean<A: Arena>(what: &str, play: Result<Play<A>, impl std::fmt::Display>) -> Result<Play<A>, String> {
    let play = play.map_err(|e| format!("{what}: {e}"))?;
    ensure(play.failed_notes().is_empty(), || format!("{what}: {:?}", play.failed_notes()))?;
    Ok(play)
}

fn od_alpha(seed: u64) -> BoxAlpha<FiniteSpace> {
    if seed % 10 == 0 {
        Box::new(CopyAlpha { kind: GameKind::OD })
    } else {
        Box::new(RandomAlpha { seed, kind: GameKind::OD })
    }
}

fn beta_for(seed: u64, kind: GameKind) -> BoxBeta<FiniteSpace> {
    if seed % 10 == 0 {
        Box::new(CopyBeta { kind })
    } else {
        Box::new(RandomBeta { seed, kind })
    }
}

fn combinator_legality() -> Outcome {
    let spaces = spaces_upto(3);
    let h = COMBINATOR_HORIZON;
    let mut plays = 0u64;
    let mut obstructed = 0u64;
    for (i, x) in spaces.iter().enumerate() {
        for seed in 0..COMBINATOR_PLAYS {
            let tag = |name: &str| format!("{name} on space {i} seed {seed}");

            // BM beta from an OD beta and an OD alpha
            let b = prop3_beta_bm::<FiniteSpace>(beta_for(seed + 1, GameKind::OD), od_alpha(seed + 2));
            let a = RandomAlpha { seed, kind: GameKind::BM };
            clean(&tag("prop3"), referee_run(x, GameKind::BM, &b, &a, h))?;

            // forgetting: rule weakening, then W-blindness with a paired play
            let f = prop4_forget(od_alpha(seed), ForgetDirection::RuleWeakening).map_err(|e| e.to_string())?;
            clean(&tag("prop4 k*->b*"), referee_run(x, GameKind::OD, beta_for(seed, GameKind::OD).as_ref(), &f, h))?;
            let inner: BoxAlpha<FiniteSpace> = Box::new(RandomAlpha { seed, kind: GameKind::BM });
            let f = prop4_forget(inner, ForgetDirection::IgnoreW).map_err(|e| e.to_string())?;
            let first = clean(&tag("prop4 BM->OD"), referee_run(x, GameKind::OD, beta_for(seed, GameKind::OD).as_ref(), &f, h))?;
            let moves = first.rounds.iter().map(|r| BetaMove::od(r.v, r.v)).collect();
            let twin = ScriptedBeta { moves, kind: GameKind::OD };
            let second = clean(&tag("prop4 paired"), referee_run(x, GameKind::OD, &twin, &f, h))?;
            ensure(first.u_sequence() == second.u_sequence(), || tag("prop4 answers depend on W"))?;

            // products of up to three factors
            let k = 1 + (seed as usize % 3);
            let factors: Vec<FiniteSpace> = (0..k).map(|j| spaces[(i + 7 * j) % spaces.len()].clone()).collect();
            let (px, _) = ProductLayout::product_space(&factors).map_err(|e| e.to_string())?;
            let strategies = (0..k as u64).map(|j| od_alpha(seed * 3 + j)).collect();
            let pa = prop7_product_alpha(strategies, factors).map_err(|e| e.to_string())?;
            clean(&tag("prop7"), referee_run(&px, GameKind::OD, beta_for(seed, GameKind::OD).as_ref(), &pa, h))?;

            let y = spaces[(i * 5 + seed as usize) % spaces.len()].clone();
            let (pxy, _) = ProductLayout::product_space(&[x.clone(), y.clone()]).map_err(|e| e.to_string())?;
            let pa = prop8_pair_alpha(od_alpha(seed + 5), x.clone(), od_alpha(seed + 6), y).map_err(|e| e.to_string())?;
            clean(&tag("prop8"), referee_run(&pxy, GameKind::OD, beta_for(seed, GameKind::OD).as_ref(), &pa, h))?;

            // gamma refinement
            let levels = vec![x.min_nbhds().to_vec(), x.minimal_opens()];
            let gammas = GammaSequence::new(x, levels).map_err(|e| e.to_string())?;
            let la = lemma_alpha_strategy(x, gammas);
            clean(&tag("lemma"), referee_run(x, GameKind::BM, beta_for(seed, GameKind::BM).as_ref(), &la, h))?;

            // subspace lifts
            let cands = embeddings(x);
            let (y, kind) = cands[seed as usize % cands.len()].clone();
            let sb = subspace_lift_beta(beta_for(seed, GameKind::OD), x, y, kind.clone()).map_err(|e| e.to_string())?;
            let first = referee_run(x, GameKind::OD, &sb, od_alpha(seed).as_ref(), h);
            obstructed += lift_outcome(x, &tag("subspace beta"), first)?;
            let sa = subspace_lift_alpha(od_alpha(seed), x, y, kind).map_err(|e| e.to_string())?;
            let ys = sa.subspace().clone();
            let second = referee_run(&ys, GameKind::OD, beta_for(seed, GameKind::OD).as_ref(), &sa, h);
            obstructed += lift_outcome(x, &tag("subspace alpha"), second)?;
            plays += 9;
        }
    }
    Ok(format!(
        "{plays} plays at horizon {h}, no illegal moves, no failed invariants; \
         {obstructed} subspace-lift plays on non-regular spaces stopped at the closed-shrink obstruction"
    ))
}

/// A lifted play either runs clean or, on a non-regular `X` only, stops
/// because no closed shrink exists. Returns 1 for the latter.
fn lift_outcome(x: &FiniteSpace, what: &str, play: Result<Play<FiniteSpace>, GameError>) -> Result<u64, String> {
    match play {
        Err(GameError::Strategy {
            source: StrategyError::ShrinkFailure { .. },
            ..
        }) if !regular(x) => Ok(1),
        other => clean(what, other).map(|_| 0),
    }
}

/// Regularity straight from the definition.
fn regular(x: &FiniteSpace) -> bool {
    let os = opens(x);
    (0..x.len()).all(|p| {
        os.iter()
            .filter(|u| u.contains(p))
            .all(|&u| os.iter().any(|&v| v.contains(p) && closure(x, v).is_subset(u)))
    })
}

fn embeddings(x: &FiniteSpace) -> Vec<(PointSet, EmbeddingKind)> {
    let mut out = Vec::new();
    for y in common::subsets(x.len()).filter(|y| !y.is_empty()) {
        if is_dense(x, y) {
            out.push((y, EmbeddingKind::CDense));
            if is_open(x, y) {
                out.push((y, EmbeddingKind::DenseGDelta { g: vec![y] }));
            }
        }
        if is_open(x, y) {
            out.push((y, EmbeddingKind::Open));
        }
    }
    out
}

fn e_operator_identities() -> Outcome {
    let mut cases = 0;
    for x in spaces_upto(3) {
        for y in common::subsets(x.len()).filter(|&y| !y.is_empty() && is_dense(&x, y)) {
            let mut rel: Vec<PointSet> = opens(&x).into_iter().map(|o| o.intersection(y)).collect();
            rel.sort();
            rel.dedup();
            for u in rel {
                let e = e_operator(&x, y, u);
                let expect = x.carrier().difference(closure(&x, y.difference(u)));
                ensure(e == expect, || format!("E({u}) = {e}, expected {expect}"))?;
                ensure(is_open(&x, e), || format!("E({u}) = {e} not open"))?;
                ensure(e.intersection(y) == u, || format!("E({u}) meets Y = {y} in {}", e.intersection(y)))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (X, Y, U) cases"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("oracle equivalence", oracle_equivalence),
        ("regular spaces are Delta-Baire", regular_delta_baire),
        ("group harness", group_harness),
        ("Sorgenfrey witnesses", sorgenfrey_witnesses),
        ("finite game exactness", finite_game_exactness),
        ("combinator legality and invariants", combinator_legality),
        ("E-operator identities", e_operator_identities),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

