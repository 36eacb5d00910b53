//! Named spaces and strategies shared by the CLI and the session service.

use crate::combinators::{lemma_alpha_strategy, theorem2_beta_strategy, GammaSequence};
use crate::diagonal::minimal_semi_nbhd;
use crate::finite_topology::{FiniteSpace, PointSet};
use crate::games::{BoxAlpha, BoxBeta, CopyAlpha, CopyBeta, GameKind, RandomAlpha, RandomBeta};
use crate::sorgenfrey::{unit_strip, SorgenfreyArena};

/// Small spaces addressable by name.
pub fn space_catalog() -> Vec<(&'static str, FiniteSpace)> {
    let ps = |pts: &[usize]| pts.iter().copied().collect::<PointSet>();
    vec![
        ("point", FiniteSpace::discrete(1)),
        ("sierpinski", FiniteSpace::sierpinski()),
        ("discrete-2", FiniteSpace::discrete(2)),
        ("indiscrete-2", FiniteSpace::indiscrete(2)),
        ("discrete-3", FiniteSpace::discrete(3)),
        ("indiscrete-3", FiniteSpace::indiscrete(3)),
        ("chain-3", FiniteSpace::chain(3)),
        (
            "partition-3",
            FiniteSpace::partition(3, &[ps(&[0, 1]), ps(&[2])]).expect("valid blocks"),
        ),
        ("chain-4", FiniteSpace::chain(4)),
        (
            "partition-4",
            FiniteSpace::partition(4, &[ps(&[0, 1]), ps(&[2, 3])]).expect("valid blocks"),
        ),
        (
            "sierpinski-squared",
            crate::finite_topology::product(&FiniteSpace::sierpinski(), &FiniteSpace::sierpinski())
                .expect("4 points"),
        ),
    ]
}

pub fn catalog_space(name: &str) -> Option<FiniteSpace> {
    space_catalog().into_iter().find(|(n, _)| *n == name).map(|(_, s)| s)
}

/// `random` uses `default_seed`; `random:N` uses `N`.
fn parse_random(name: &str, default_seed: u64) -> Option<Result<u64, String>> {
    if name == "random" {
        return Some(Ok(default_seed));
    }
    name.strip_prefix("random:")
        .map(|s| s.parse().map_err(|_| format!("bad seed in {name:?}")))
}

pub const FINITE_BETA: &[&str] = &["copy", "random", "random:N", "separating"];
pub const FINITE_ALPHA: &[&str] = &["copy", "random", "random:N", "lemma"];
pub const SORGENFREY_BETA: &[&str] = &["copy", "random", "random:N", "separating"];
pub const SORGENFREY_ALPHA: &[&str] = &["copy", "random", "random:N"];

fn unknown(name: &str, known: &[&str]) -> String {
    format!("unknown strategy {name:?}; known: {}", known.join(", "))
}

pub fn finite_beta(name: &str, space: &FiniteSpace, kind: GameKind, seed: u64) -> Result<BoxBeta<FiniteSpace>, String> {
    if let Some(seed) = parse_random(name, seed) {
        return Ok(Box::new(RandomBeta { seed: seed?, kind }));
    }
    match name {
        "copy" => Ok(Box::new(CopyBeta { kind })),
        // the minimal semi-neighborhood: on a finite space the search fails at once
        "separating" if kind == GameKind::OD => Ok(Box::new(theorem2_beta_strategy(
            space,
            minimal_semi_nbhd(space).into_relation(),
        ))),
        _ => Err(unknown(name, FINITE_BETA)),
    }
}

pub fn finite_alpha(name: &str, space: &FiniteSpace, kind: GameKind, seed: u64) -> Result<BoxAlpha<FiniteSpace>, String> {
    if let Some(seed) = parse_random(name, seed) {
        return Ok(Box::new(RandomAlpha { seed: seed?, kind }));
    }
    match name {
        "copy" => Ok(Box::new(CopyAlpha { kind })),
        "lemma" if kind == GameKind::BM => {
            let gammas = GammaSequence::new(space, vec![space.min_nbhds().to_vec()]).map_err(|e| e.to_string())?;
            Ok(Box::new(lemma_alpha_strategy(space, gammas)))
        }
        _ => Err(unknown(name, FINITE_ALPHA)),
    }
}

pub fn sorgenfrey_beta(
    name: &str,
    arena: &SorgenfreyArena,
    kind: GameKind,
    seed: u64,
) -> Result<BoxBeta<SorgenfreyArena>, String> {
    if let Some(seed) = parse_random(name, seed) {
        return Ok(Box::new(RandomBeta { seed: seed?, kind }));
    }
    match name {
        "copy" => Ok(Box::new(CopyBeta { kind })),
        "separating" if kind == GameKind::OD => Ok(Box::new(theorem2_beta_strategy(arena, unit_strip()))),
        _ => Err(unknown(name, SORGENFREY_BETA)),
    }
}

pub fn sorgenfrey_alpha(name: &str, kind: GameKind, seed: u64) -> Result<BoxAlpha<SorgenfreyArena>, String> {
    if let Some(seed) = parse_random(name, seed) {
        return Ok(Box::new(RandomAlpha { seed: seed?, kind }));
    }
    match name {
        "copy" => Ok(Box::new(CopyAlpha { kind })),
        _ => Err(unknown(name, SORGENFREY_ALPHA)),
    }
}
