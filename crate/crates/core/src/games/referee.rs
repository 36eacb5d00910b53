use serde::{Deserialize, Serialize};

use super::{
    constraint, AlphaStrategy, Arena, BetaClaim, BetaMove, BetaStrategy, GameError, GameKind, Note, Role, Round,
    StrategyInfo,
};

/// Annotations recorded for one round.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundNotes {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub beta: Vec<Note>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alpha: Vec<Note>,
}

impl RoundNotes {
    pub fn all(&self) -> impl Iterator<Item = &Note> {
        self.beta.iter().chain(&self.alpha)
    }
}

/// Checks β's move against the rules: nonempty open sets inside
/// `U_{n-1}`, with `W_n` present exactly in OD.
pub fn validate_beta<A: Arena>(
    arena: &A,
    kind: GameKind,
    history: &[Round<A::Set>],
    mv: &BetaMove<A::Set>,
) -> Result<(), String> {
    let prev = constraint(arena, history);
    arena.validate(&mv.v).map_err(|e| format!("V: {e}"))?;
    if !arena.is_subset(&mv.v, &prev) {
        return Err(format!("V = {} is not inside U = {prev}", mv.v));
    }
    match (kind, &mv.w) {
        (GameKind::BM, Some(_)) => Err("BM moves have no W".into()),
        (GameKind::OD, None) => Err("OD moves need W".into()),
        (GameKind::OD, Some(w)) => {
            arena.validate(w).map_err(|e| format!("W: {e}"))?;
            if arena.is_subset(w, &prev) {
                Ok(())
            } else {
                Err(format!("W = {w} is not inside U = {prev}"))
            }
        }
        (GameKind::BM, None) => Ok(()),
    }
}

/// Checks α's answer: a nonempty open set inside `V_n`.
pub fn validate_alpha<A: Arena>(arena: &A, beta: &BetaMove<A::Set>, u: &A::Set) -> Result<(), String> {
    arena.validate(u).map_err(|e| format!("U: {e}"))?;
    if arena.is_subset(u, &beta.v) {
        Ok(())
    } else {
        Err(format!("U = {u} is not inside V = {}", beta.v))
    }
}

/// A play in progress; moves are validated as they are submitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match<S> {
    kind: GameKind,
    rounds: Vec<Round<S>>,
    notes: Vec<RoundNotes>,
    pending: Option<(BetaMove<S>, Vec<Note>)>,
}

impl<S: Clone> Match<S> {
    pub fn new(kind: GameKind) -> Self {
        Match {
            kind,
            rounds: Vec::new(),
            notes: Vec::new(),
            pending: None,
        }
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn rounds(&self) -> &[Round<S>] {
        &self.rounds
    }

    pub fn notes(&self) -> &[RoundNotes] {
        &self.notes
    }

    pub fn pending(&self) -> Option<&BetaMove<S>> {
        self.pending.as_ref().map(|(m, _)| m)
    }

    pub fn to_move(&self) -> Role {
        if self.pending.is_some() {
            Role::Alpha
        } else {
            Role::Beta
        }
    }

    pub fn submit_beta<A: Arena<Set = S>>(
        &mut self,
        arena: &A,
        mv: BetaMove<S>,
        notes: Vec<Note>,
    ) -> Result<(), GameError> {
        if self.pending.is_some() {
            return Err(GameError::OutOfTurn("it is alpha's turn".into()));
        }
        validate_beta(arena, self.kind, &self.rounds, &mv).map_err(|reason| GameError::IllegalMove {
            player: Role::Beta,
            round: self.rounds.len(),
            reason,
        })?;
        self.pending = Some((mv, notes));
        Ok(())
    }

    pub fn submit_alpha<A: Arena<Set = S>>(&mut self, arena: &A, u: S, notes: Vec<Note>) -> Result<(), GameError> {
        let Some((beta, _)) = &self.pending else {
            return Err(GameError::OutOfTurn("it is beta's turn".into()));
        };
        validate_alpha(arena, beta, &u).map_err(|reason| GameError::IllegalMove {
            player: Role::Alpha,
            round: self.rounds.len(),
            reason,
        })?;
        let (beta, beta_notes) = self.pending.take().expect("checked above");
        self.rounds.push(Round {
            v: beta.v,
            w: beta.w,
            u,
        });
        self.notes.push(RoundNotes {
            beta: beta_notes,
            alpha: notes,
        });
        Ok(())
    }
}

/// A finished (finite-horizon) play.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
pub struct Play<A: Arena> {
    pub kind: GameKind,
    pub beta: StrategyInfo,
    pub alpha: StrategyInfo,
    pub rounds: Vec<Round<A::Set>>,
    pub notes: Vec<RoundNotes>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_claim: Option<BetaClaim<A>>,
}

impl<A: Arena> Play<A> {
    /// Replays every move through the referee checks.
    pub fn revalidate(&self, arena: &A) -> Result<(), GameError> {
        let mut m = Match::new(self.kind);
        for r in &self.rounds {
            m.submit_beta(arena, r.beta_move(), Vec::new())?;
            m.submit_alpha(arena, r.u.clone(), Vec::new())?;
        }
        Ok(())
    }

    /// Annotations that did not hold, as `(round, check)`.
    pub fn failed_notes(&self) -> Vec<(usize, String)> {
        self.notes
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.all().filter(|n| !n.holds).map(move |n| (i, n.check.clone())))
            .collect()
    }

    pub fn u_sequence(&self) -> Vec<A::Set> {
        self.rounds.iter().map(|r| r.u.clone()).collect()
    }
}

/// Runs strategies against each other under the referee.
#[derive(Debug, Clone, Copy)]
pub struct Referee {
    /// Query each strategy twice per move and reject differing answers.
    pub check_determinism: bool,
}

impl Default for Referee {
    fn default() -> Self {
        Referee {
            check_determinism: true,
        }
    }
}

impl Referee {
    pub fn run<A: Arena>(
        &self,
        arena: &A,
        kind: GameKind,
        beta: &dyn BetaStrategy<A>,
        alpha: &dyn AlphaStrategy<A>,
        horizon: usize,
    ) -> Result<Play<A>, GameError> {
        if horizon == 0 {
            return Err(GameError::ZeroHorizon);
        }
        let mut m = Match::new(kind);
        for round in 0..horizon {
            let b = beta
                .respond(arena, m.rounds())
                .map_err(|source| GameError::Strategy {
                    player: Role::Beta,
                    round,
                    source,
                })?;
            if self.check_determinism {
                let again = beta.respond(arena, m.rounds()).ok();
                if again.as_ref().map(|r| &r.mv) != Some(&b.mv) {
                    return Err(GameError::Nondeterministic {
                        player: Role::Beta,
                        round,
                    });
                }
            }
            m.submit_beta(arena, b.mv.clone(), b.notes)?;

            let a = alpha
                .respond(arena, m.rounds(), &b.mv)
                .map_err(|source| GameError::Strategy {
                    player: Role::Alpha,
                    round,
                    source,
                })?;
            if self.check_determinism {
                let again = alpha.respond(arena, m.rounds(), &b.mv).ok();
                if again.as_ref().map(|r| &r.mv) != Some(&a.mv) {
                    return Err(GameError::Nondeterministic {
                        player: Role::Alpha,
                        round,
                    });
                }
            }
            m.submit_alpha(arena, a.mv, a.notes)?;
        }
        Ok(Play {
            kind,
            beta: beta.info(),
            alpha: alpha.info(),
            rounds: m.rounds,
            notes: m.notes,
            beta_claim: beta.claim(),
        })
    }
}

/// [`Referee::run`] with determinism checking on.
pub fn referee_run<A: Arena>(
    arena: &A,
    kind: GameKind,
    beta: &dyn BetaStrategy<A>,
    alpha: &dyn AlphaStrategy<A>,
    horizon: usize,
) -> Result<Play<A>, GameError> {
    Referee::default().run(arena, kind, beta, alpha, horizon)
}
