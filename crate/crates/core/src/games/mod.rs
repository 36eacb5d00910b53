//! The OD and BM games: move types, strategies, referee, and verdicts.
//!
//! OD: at round `n`, β picks nonempty open `V_n, W_n ⊆ U_{n-1}` and α
//! answers with nonempty open `U_n ⊆ V_n`. BM is the same without `W_n`.
//! `U_{-1}` is the arena root.

mod arena;
mod referee;
mod strategies;
mod verdict;

pub use arena::{Arena, FINITE_UNIFORM_LIMIT};
pub use referee::{referee_run, validate_alpha, validate_beta, Match, Play, Referee, RoundNotes};
pub use strategies::{
    history_rng, random_alpha, random_beta, CopyAlpha, CopyBeta, RandomAlpha, RandomBeta, ScriptedAlpha,
    ScriptedBeta,
};
pub use verdict::{check_certificate, evaluate, Certificate, Verdict};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GameKind {
    BM,
    OD,
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GameKind::BM => "BM",
            GameKind::OD => "OD",
        })
    }
}

impl FromStr for GameKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "BM" => Ok(GameKind::BM),
            "OD" => Ok(GameKind::OD),
            _ => Err(format!("unknown game kind {s:?} (expected BM or OD)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Alpha,
    Beta,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Alpha => "alpha",
            Role::Beta => "beta",
        })
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "alpha" | "α" => Ok(Role::Alpha),
            "beta" | "β" => Ok(Role::Beta),
            _ => Err(format!("unknown player {s:?} (expected alpha or beta)")),
        }
    }
}

/// Win rules for α. `(i)`: the `U_n` have a common point. `(b)`: the
/// `W_n` accumulate at some point. `(k)`: some compact set meets every
/// `W_n`. A starred rule is also won by α when the `U_n` have empty
/// intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WinRule {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "k")]
    K,
    #[serde(rename = "i*")]
    IStar,
    #[serde(rename = "b*")]
    BStar,
    #[serde(rename = "k*")]
    KStar,
}

impl WinRule {
    pub const ALL: [WinRule; 6] = [
        WinRule::I,
        WinRule::B,
        WinRule::K,
        WinRule::IStar,
        WinRule::BStar,
        WinRule::KStar,
    ];

    pub fn is_starred(self) -> bool {
        matches!(self, WinRule::IStar | WinRule::BStar | WinRule::KStar)
    }

    pub fn unstarred(self) -> WinRule {
        match self {
            WinRule::IStar => WinRule::I,
            WinRule::BStar => WinRule::B,
            WinRule::KStar => WinRule::K,
            r => r,
        }
    }

    pub fn starred(self) -> WinRule {
        match self {
            WinRule::I => WinRule::IStar,
            WinRule::B => WinRule::BStar,
            WinRule::K => WinRule::KStar,
            r => r,
        }
    }

    /// `b` and `k` read the side sets `W_n`, which only OD has.
    pub fn needs_side_sets(self) -> bool {
        matches!(self.unstarred(), WinRule::B | WinRule::K)
    }
}

impl fmt::Display for WinRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WinRule::I => "i",
            WinRule::B => "b",
            WinRule::K => "k",
            WinRule::IStar => "i*",
            WinRule::BStar => "b*",
            WinRule::KStar => "k*",
        })
    }
}

impl FromStr for WinRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WinRule::ALL
            .into_iter()
            .find(|r| r.to_string() == s)
            .ok_or_else(|| format!("unknown win rule {s:?} (expected one of i, b, k, i*, b*, k*)"))
    }
}

/// β's move: `V_n`, plus `W_n` in OD.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaMove<S> {
    pub v: S,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<S>,
}

impl<S> BetaMove<S> {
    pub fn bm(v: S) -> Self {
        BetaMove { v, w: None }
    }

    pub fn od(v: S, w: S) -> Self {
        BetaMove { v, w: Some(w) }
    }
}

/// One completed round `(V_n, W_n, U_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Round<S> {
    pub v: S,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<S>,
    pub u: S,
}

impl<S: Clone> Round<S> {
    pub fn beta_move(&self) -> BetaMove<S> {
        BetaMove {
            v: self.v.clone(),
            w: self.w.clone(),
        }
    }

    pub fn without_side_set(&self) -> Round<S> {
        Round {
            v: self.v.clone(),
            w: None,
            u: self.u.clone(),
        }
    }
}

/// `U_{n-1}` for the round following `history`.
pub fn constraint<A: Arena>(arena: &A, history: &[Round<A::Set>]) -> A::Set {
    history.last().map_or_else(|| arena.root(), |r| r.u.clone())
}

/// A per-round invariant annotation emitted by an instrumented strategy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Note {
    pub check: String,
    pub holds: bool,
}

impl Note {
    pub fn new(check: impl Into<String>, holds: bool) -> Self {
        Note {
            check: check.into(),
            holds,
        }
    }
}

/// A move together with the annotations computed while choosing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response<M> {
    pub mv: M,
    pub notes: Vec<Note>,
}

impl<M> Response<M> {
    pub fn plain(mv: M) -> Self {
        Response { mv, notes: Vec::new() }
    }

    pub fn with_notes(mv: M, notes: Vec<Note>) -> Self {
        Response { mv, notes }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyInfo {
    pub name: String,
    pub role: Role,
    pub kind: GameKind,
    /// Win rule the strategy is advertised for, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim: Option<WinRule>,
}

impl StrategyInfo {
    pub fn new(name: impl Into<String>, role: Role, kind: GameKind) -> Self {
        StrategyInfo {
            name: name.into(),
            role,
            kind,
            claim: None,
        }
    }

    pub fn claiming(mut self, rule: WinRule) -> Self {
        self.claim = Some(rule);
        self
    }
}

/// Certificate data a β strategy attaches to every play it takes part in.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound(serialize = "", deserialize = ""))]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BetaClaim<A: Arena> {
    /// `V_n x W_n ∩ P = ∅` and `closure(V_n) ⊆ U_{n-1}` every round.
    Separation { relation: A::Relation },
}

/// A β strategy: a deterministic map from completed rounds to the next move.
pub trait BetaStrategy<A: Arena>: Send + Sync {
    fn info(&self) -> StrategyInfo;

    fn respond(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Response<BetaMove<A::Set>>, StrategyError>;

    fn claim(&self) -> Option<BetaClaim<A>> {
        None
    }
}

/// An α strategy: sees the completed rounds and β's current move.
pub trait AlphaStrategy<A: Arena>: Send + Sync {
    fn info(&self) -> StrategyInfo;

    fn respond(
        &self,
        arena: &A,
        history: &[Round<A::Set>],
        beta: &BetaMove<A::Set>,
    ) -> Result<Response<A::Set>, StrategyError>;
}

pub type BoxBeta<A> = Box<dyn BetaStrategy<A>>;
pub type BoxAlpha<A> = Box<dyn AlphaStrategy<A>>;

impl<A: Arena, T: BetaStrategy<A> + ?Sized> BetaStrategy<A> for Box<T> {
    fn info(&self) -> StrategyInfo {
        (**self).info()
    }

    fn respond(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Response<BetaMove<A::Set>>, StrategyError> {
        (**self).respond(arena, history)
    }

    fn claim(&self) -> Option<BetaClaim<A>> {
        (**self).claim()
    }
}

impl<A: Arena, T: AlphaStrategy<A> + ?Sized> AlphaStrategy<A> for Box<T> {
    fn info(&self) -> StrategyInfo {
        (**self).info()
    }

    fn respond(
        &self,
        arena: &A,
        history: &[Round<A::Set>],
        beta: &BetaMove<A::Set>,
    ) -> Result<Response<A::Set>, StrategyError> {
        (**self).respond(arena, history, beta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("no separating pair V, W exists at round {round}")]
    NoSeparation { round: usize },
    #[error("no closed shrink exists at round {round}: {detail}")]
    ShrinkFailure { round: usize, detail: String },
    #[error("no member of the round-{round} family meets V")]
    DensityViolation { round: usize },
    #[error("strategy is bound to a different arena: {0}")]
    BackendMismatch(String),
    #[error("inner strategy {which} made an illegal move at round {round}: {detail}")]
    InnerIllegal { which: String, round: usize, detail: String },
    #[error("inner strategy {which} failed at round {round}: {source}")]
    Inner {
        which: String,
        round: usize,
        source: Box<StrategyError>,
    },
    #[error("no legal move at round {round}")]
    NoLegalMove { round: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("input: {0}")]
    Input(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("illegal move by {player} at round {round}: {reason}")]
    IllegalMove { player: Role, round: usize, reason: String },
    #[error("{player} strategy answered the same history differently at round {round}")]
    Nondeterministic { player: Role, round: usize },
    #[error("{player} strategy failed at round {round}: {source}")]
    Strategy {
        player: Role,
        round: usize,
        source: StrategyError,
    },
    #[error("rule {rule} is not defined for {kind} plays")]
    RuleMismatch { rule: WinRule, kind: GameKind },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("horizon must be at least 1")]
    ZeroHorizon,
    #[error("{0}")]
    OutOfTurn(String),
}

impl GameError {
    pub fn is_illegal_move(&self) -> bool {
        matches!(self, GameError::IllegalMove { .. })
    }
}
