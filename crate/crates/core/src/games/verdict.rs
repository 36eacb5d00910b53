//! Finite-horizon verdicts with re-checkable certificates.
//!
//! On a finite carrier α's three win conditions hold for every legal
//! continuation of every play, so the verdicts there are exact:
//! - `(i)`: the `U_n` form a decreasing chain of nonempty subsets of a
//!   finite set, so they stabilize at a nonempty set.
//! - `(b)`: infinitely many `W_n` drawn from finitely many sets means some
//!   set recurs forever, and each of its points is an accumulation point.
//! - `(k)`: any finite set is compact, and the representatives of the
//!   distinct `W_n` meet every `W_n`.
//!
//! Infinite arenas only get verdicts from certificates a strategy attaches.

use serde::{Deserialize, Serialize};

use super::{Arena, BetaClaim, GameError, GameKind, Play, WinRule};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate<A: Arena> {
    /// A point common to every `U_n`.
    Stabilized { point: A::Point },
    /// A point of a `W` value that recurs at the listed rounds; every
    /// neighborhood of the point meets each of those `W_n`.
    Accumulation {
        point: A::Point,
        recurring: A::Set,
        rounds: Vec<usize>,
    },
    /// A finite (hence compact) set meeting every `W_n`.
    CompactMeets { compact: Vec<A::Point> },
    /// β's separation data: `V_n x W_n ∩ P = ∅`, `closure(V_n) ⊆ U_{n-1}`.
    Separation { relation: A::Relation },
}

impl<A: Arena> Certificate<A> {
    fn describe(&self) -> &'static str {
        match self {
            Certificate::Stabilized { .. } => "stabilized",
            Certificate::Accumulation { .. } => "accumulation",
            Certificate::CompactMeets { .. } => "compact_meets",
            Certificate::Separation { .. } => "separation",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
#[serde(tag = "winner", rename_all = "snake_case")]
pub enum Verdict<A: Arena> {
    AlphaWins { certificate: Certificate<A> },
    BetaWins { certificate: Certificate<A> },
    Undetermined { reason: String },
}

impl<A: Arena> Verdict<A> {
    pub fn is_alpha_win(&self) -> bool {
        matches!(self, Verdict::AlphaWins { .. })
    }

    pub fn is_beta_win(&self) -> bool {
        matches!(self, Verdict::BetaWins { .. })
    }

    pub fn certificate(&self) -> Option<&Certificate<A>> {
        match self {
            Verdict::AlphaWins { certificate } | Verdict::BetaWins { certificate } => Some(certificate),
            Verdict::Undetermined { .. } => None,
        }
    }
}

fn check_rule(kind: GameKind, rule: WinRule) -> Result<(), GameError> {
    if rule.needs_side_sets() && kind == GameKind::BM {
        return Err(GameError::RuleMismatch { rule, kind });
    }
    Ok(())
}

fn side_sets<A: Arena>(play: &Play<A>) -> Result<Vec<&A::Set>, GameError> {
    play.rounds
        .iter()
        .enumerate()
        .map(|(n, r)| {
            r.w.as_ref()
                .ok_or_else(|| GameError::MalformedCertificate(format!("round {n} has no W")))
        })
        .collect()
}

pub fn evaluate<A: Arena>(arena: &A, play: &Play<A>, rule: WinRule) -> Result<Verdict<A>, GameError> {
    check_rule(play.kind, rule)?;
    let Some(last) = play.rounds.last() else {
        return Ok(Verdict::Undetermined {
            reason: "empty play".into(),
        });
    };
    if arena.is_finite() {
        let certificate = match rule.unstarred() {
            WinRule::I => Certificate::Stabilized {
                point: arena.representative(&last.u),
            },
            WinRule::B => {
                let ws = side_sets(play)?;
                // most frequent value; ties go to the earliest first occurrence
                let mut best: Option<(usize, Vec<usize>)> = None;
                for (first, w) in ws.iter().enumerate() {
                    if ws[..first].contains(w) {
                        continue;
                    }
                    let rounds: Vec<usize> = (first..ws.len()).filter(|&n| ws[n] == *w).collect();
                    if best.as_ref().is_none_or(|(_, r)| rounds.len() > r.len()) {
                        best = Some((first, rounds));
                    }
                }
                let (first, rounds) = best.expect("nonempty play");
                let recurring = ws[first].clone();
                Certificate::Accumulation {
                    point: arena.representative(&recurring),
                    recurring,
                    rounds,
                }
            }
            _ => {
                let ws = side_sets(play)?;
                let mut compact: Vec<A::Point> = Vec::new();
                for w in ws {
                    let p = arena.representative(w);
                    if !compact.contains(&p) {
                        compact.push(p);
                    }
                }
                Certificate::CompactMeets { compact }
            }
        };
        return Ok(Verdict::AlphaWins { certificate });
    }

    if let Some(BetaClaim::Separation { relation }) = &play.beta_claim {
        let certificate = Certificate::Separation {
            relation: relation.clone(),
        };
        if !rule.is_starred()
            && rule.needs_side_sets()
            && check_certificate(arena, play, rule, &certificate)?
        {
            return Ok(Verdict::BetaWins { certificate });
        }
    }
    Ok(Verdict::Undetermined {
        reason: format!("infinite carrier and no certificate for rule {rule}"),
    })
}

/// Re-derives a verdict from the certificate and the recorded play alone.
pub fn check_certificate<A: Arena>(
    arena: &A,
    play: &Play<A>,
    rule: WinRule,
    certificate: &Certificate<A>,
) -> Result<bool, GameError> {
    check_rule(play.kind, rule)?;
    let mismatch = || {
        GameError::MalformedCertificate(format!(
            "{} certificate does not apply to rule {rule}",
            certificate.describe()
        ))
    };
    match certificate {
        Certificate::Stabilized { point } => {
            if rule.unstarred() != WinRule::I {
                return Err(mismatch());
            }
            Ok(!play.rounds.is_empty() && play.rounds.iter().all(|r| arena.contains_point(&r.u, point)))
        }
        Certificate::Accumulation {
            point,
            recurring,
            rounds,
        } => {
            if rule.unstarred() != WinRule::B {
                return Err(mismatch());
            }
            let ws = side_sets(play)?;
            if rounds.is_empty() {
                return Err(GameError::MalformedCertificate("no recurrence rounds listed".into()));
            }
            if let Some(&bad) = rounds.iter().find(|&&n| n >= ws.len()) {
                return Err(GameError::MalformedCertificate(format!(
                    "round {bad} is beyond the play's {} rounds",
                    ws.len()
                )));
            }
            // pigeonhole over the continuation needs a finite carrier
            Ok(arena.is_finite()
                && arena.contains_point(recurring, point)
                && rounds
                    .iter()
                    .all(|&n| ws[n] == recurring && arena.nbhd_meets(point, ws[n])))
        }
        Certificate::CompactMeets { compact } => {
            if rule.unstarred() != WinRule::K {
                return Err(mismatch());
            }
            let ws = side_sets(play)?;
            Ok(arena.is_finite()
                && ws
                    .iter()
                    .all(|w| compact.iter().any(|p| arena.contains_point(w, p))))
        }
        Certificate::Separation { relation } => {
            if rule.is_starred() || !rule.needs_side_sets() {
                return Err(mismatch());
            }
            if !arena.is_semi_nbhd(relation) {
                return Ok(false);
            }
            let ws = side_sets(play)?;
            let mut prev = arena.root();
            for (r, w) in play.rounds.iter().zip(ws) {
                // x outside some V_k is cut off by the complement of closure(V_{k+1});
                // x inside every V_n has the neighborhood P_x missing every W_n
                let ok = arena.separates(relation, &r.v, w)
                    && arena.closure_within(&r.v, &prev)
                    && arena.is_subset(w, &prev)
                    && arena.is_subset(&r.u, &r.v);
                if !ok {
                    return Ok(false);
                }
                prev = r.u.clone();
            }
            Ok(true)
        }
    }
}
