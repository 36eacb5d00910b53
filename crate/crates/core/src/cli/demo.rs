use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

use super::play::{finish_play, parse_interval};
use super::{emit_json, CliError, Config, Format, EXIT_FALSIFIED, EXIT_OK};
use crate::combinators::{
    lemma_alpha_strategy, prop3_beta_bm, prop7_product_alpha, prop8_pair_alpha, subspace_lift_beta,
    theorem2_beta_strategy, EmbeddingKind, GammaSequence,
};
use crate::finite_topology::{product, FiniteSpace, PointSet};
use crate::games::{
    Arena, BetaStrategy, CopyAlpha, CopyBeta, GameError, GameKind, Play, RandomAlpha, RandomBeta, Referee, WinRule,
};
use crate::presets::catalog_space;
use crate::sorgenfrey::{
    delta_baire_failure_witness, fmt_rat, interval_closure, inversion_discontinuity_witness, rat,
    strip_closure, unit_interval, unit_strip, SorgenfreyArena,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Separating β on the Sorgenfrey line, rule b.
    Theorem2,
    /// BM β assembled from an OD β and an OD α, with both shadow plays.
    Prop3,
    /// Product α on Sierpiński × Sierpiński, rule k*.
    Prop7,
    /// Pair α on Sierpiński × Sierpiński, rule b*.
    Prop8,
    /// γ-refining α on the Sierpiński space.
    Lemma,
    /// β lifted from a dense subspace of a 4-point partition space.
    Subspace,
}

fn run<A: Arena>(
    arena: &A,
    kind: GameKind,
    beta: &dyn BetaStrategy<A>,
    alpha: &dyn crate::games::AlphaStrategy<A>,
    horizon: usize,
) -> Result<Play<A>, CliError> {
    Referee::default()
        .run(arena, kind, beta, alpha, horizon)
        .map_err(|e: GameError| CliError {
            code: EXIT_FALSIFIED,
            message: e.to_string(),
        })
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError {
        code: EXIT_FALSIFIED,
        message: e.to_string(),
    }
}

fn sierpinski_pair() -> (FiniteSpace, FiniteSpace) {
    let s = FiniteSpace::sierpinski();
    let sq = product(&s, &s).expect("4 points");
    (s, sq)
}

pub(super) fn cmd_demo(cfg: &Config, c: Construction, out: &mut dyn Write) -> Result<i32, CliError> {
    let h = cfg.horizon;
    let seed = cfg.seed;
    match c {
        Construction::Theorem2 => {
            let arena = SorgenfreyArena::default();
            let beta = theorem2_beta_strategy(&arena, unit_strip());
            let alpha = RandomAlpha {
                seed,
                kind: GameKind::OD,
            };
            let play = run(&arena, GameKind::OD, &beta, &alpha, h)?;
            finish_play(cfg, &arena, play, WinRule::B, json!("sorgenfrey"), out, None, None)
        }
        Construction::Prop3 => {
            let arena = SorgenfreyArena::default();
            let beta = prop3_beta_bm::<SorgenfreyArena>(
                Box::new(theorem2_beta_strategy(&arena, unit_strip())),
                Box::new(CopyAlpha { kind: GameKind::OD }),
            );
            let alpha = RandomAlpha {
                seed,
                kind: GameKind::BM,
            };
            let play = run(&arena, GameKind::BM, &beta, &alpha, h)?;
            let sh = beta.shadow(&arena, &play.rounds).map_err(failed)?;
            if cfg.format == Format::Text {
                writeln!(out, "shadow play xi (OD, inner beta vs copy):")?;
                for (n, r) in sh.xi.iter().enumerate() {
                    writeln!(out, "  {n}: V' = {}  W = {}  U = {}", r.v, r.w.as_ref().expect("OD"), r.u)?;
                }
                writeln!(out, "shadow play zeta (OD, inner alpha answers):")?;
                for (n, r) in sh.zeta.iter().enumerate() {
                    writeln!(out, "  {n}: V' = {}  W = {}  V = {}", r.v, r.w.as_ref().expect("OD"), r.u)?;
                }
            }
            let extra = json!({ "xi": sh.xi, "zeta": sh.zeta });
            finish_play(cfg, &arena, play, WinRule::I, json!("sorgenfrey"), out, None, Some(extra))
        }
        Construction::Prop7 | Construction::Prop8 => {
            let (s, sq) = sierpinski_pair();
            let copy = || -> crate::games::BoxAlpha<FiniteSpace> { Box::new(CopyAlpha { kind: GameKind::OD }) };
            let (alpha, rule) = if c == Construction::Prop7 {
                (prop7_product_alpha(vec![copy(), copy()], vec![s.clone(), s.clone()]), WinRule::KStar)
            } else {
                (prop8_pair_alpha(copy(), s.clone(), copy(), s.clone()), WinRule::BStar)
            };
            let alpha = alpha.map_err(failed)?;
            let beta = RandomBeta {
                seed,
                kind: GameKind::OD,
            };
            let play = run(&sq, GameKind::OD, &beta, &alpha, h)?;
            let (rounds, traces) = alpha.replay(&sq, &play.rounds).map_err(failed)?;
            if cfg.format == Format::Text {
                for (n, r) in rounds.iter().enumerate() {
                    writeln!(
                        out,
                        "product round {n}: joined {:?}, V box {}, W box {}, U {}",
                        r.joined, r.v_box, r.w_box, r.u
                    )?;
                }
            }
            let extra = json!({ "rounds": rounds, "factors": traces });
            finish_play(cfg, &sq, play, rule, json!("sierpinski-squared"), out, None, Some(extra))
        }
        Construction::Lemma => {
            let s = FiniteSpace::sierpinski();
            let gammas = GammaSequence::new(&s, vec![vec![PointSet::from([0])]]).map_err(failed)?;
            let alpha = lemma_alpha_strategy(&s, gammas);
            let beta = RandomBeta {
                seed,
                kind: GameKind::BM,
            };
            let play = run(&s, GameKind::BM, &beta, &alpha, h)?;
            let chosen: Vec<Value> = play
                .rounds
                .iter()
                .enumerate()
                .map(|(n, r)| json!(alpha.chosen(n, r.v)))
                .collect();
            finish_play(cfg, &s, play, WinRule::I, json!("sierpinski"), out, None, Some(json!({ "chosen": chosen })))
        }
        Construction::Subspace => {
            let x = catalog_space("partition-4").expect("catalog entry");
            let y = PointSet::from([0, 2]);
            let beta = subspace_lift_beta(Box::new(CopyBeta { kind: GameKind::OD }), &x, y, EmbeddingKind::CDense)
                .map_err(failed)?;
            let alpha = RandomAlpha {
                seed,
                kind: GameKind::OD,
            };
            let play = run(&x, GameKind::OD, &beta, &alpha, h)?;
            let (shadow, _) = beta.shadow(&x, &play.rounds).map_err(failed)?;
            if cfg.format == Format::Text {
                writeln!(out, "shadow play on Y = {y} (local indices):")?;
                for (n, r) in shadow.iter().enumerate() {
                    writeln!(out, "  {n}: V = {}  W = {}  U = {}", r.v, r.w.as_ref().expect("OD"), r.u)?;
                }
            }
            let extra = json!({ "y": y, "shadow": shadow });
            finish_play(cfg, &x, play, WinRule::I, json!("partition-4"), out, None, Some(extra))
        }
    }
}

pub(super) fn cmd_sorgenfrey(cfg: &Config, w: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let w = parse_interval(w).map_err(CliError::input)?;
    let mut ok = true;

    let u = vec![unit_interval()];
    let inv = inversion_discontinuity_witness(&u).map_err(|e| CliError::input(e.to_string()))?;
    let eps: Vec<_> = [rat(1, 1), rat(1, 10), rat(1, 1000)].into_iter().collect();
    let inversion: Vec<Value> = eps
        .iter()
        .map(|e| {
            let valid = inv.validates(&u, e);
            ok &= valid;
            json!({ "epsilon": fmt_rat(e), "t": fmt_rat(&inv.counterexample(e)), "valid": valid })
        })
        .collect();

    let (x, y) = delta_baire_failure_witness(&w);
    let closed = strip_closure(&unit_strip());
    let outside = !closed.contains(&x, &y);
    ok &= outside;

    let arena = SorgenfreyArena::new(w.clone());
    let (v0, w0) = arena
        .separation_candidates(&w)
        .into_iter()
        .next()
        .expect("one candidate");
    let separates = unit_strip().misses_box(&v0, &w0);
    let closure = interval_closure(&v0);
    ok &= separates && closure.value.is_subset(&w);

    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "format": 1,
                "inversion": { "u": u, "point": fmt_rat(&inv.point()), "cases": inversion },
                "delta_baire_failure": { "w": w, "x": fmt_rat(&x), "y": fmt_rat(&y), "outside_closure": outside },
                "separation": { "v": v0, "w": w0, "misses_strip": separates, "closure_trace": closure.trace },
            }),
        )?,
        Format::Text => {
            writeln!(out, "inversion at 0, U = {}:", u[0])?;
            for (e, case) in eps.iter().zip(&inversion) {
                writeln!(
                    out,
                    "  eps = {}: t = {} in [0, eps) but -t not in U [{}]",
                    fmt_rat(e),
                    case["t"].as_str().unwrap_or_default(),
                    if case["valid"] == true { "ok" } else { "FAIL" }
                )?;
            }
            writeln!(
                out,
                "Delta-Baire failure in {w}: ({}, {}) lies outside closure(I([0, 1))) = {{y - x in [0, 1]}} [{}]",
                fmt_rat(&x),
                fmt_rat(&y),
                if outside { "ok" } else { "FAIL" }
            )?;
            writeln!(
                out,
                "separation from {w}: V = {v0}, W = {w0}, V x W misses I([0, 1)) [{}]",
                if separates { "ok" } else { "FAIL" }
            )?;
            for line in &closure.trace {
                writeln!(out, "  {line}")?;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FALSIFIED })
}
