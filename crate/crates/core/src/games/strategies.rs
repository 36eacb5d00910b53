//! Baseline strategies used as opponents and test adversaries.

use std::hash::{DefaultHasher, Hash, Hasher};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    constraint, AlphaStrategy, Arena, BetaMove, BetaStrategy, GameKind, Response, Role, Round, StrategyError,
    StrategyInfo,
};

/// RNG keyed by the seed and the full history, so a seeded strategy is a
/// pure function of what it has seen.
pub fn history_rng<S: Hash>(seed: u64, tag: &str, history: &[Round<S>], extra: Option<&BetaMove<S>>) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    seed.hash(&mut h);
    tag.hash(&mut h);
    history.hash(&mut h);
    extra.hash(&mut h);
    ChaCha8Rng::seed_from_u64(h.finish())
}

/// β plays `V_n = W_n = U_{n-1}`.
#[derive(Debug, Clone, Copy)]
pub struct CopyBeta {
    pub kind: GameKind,
}

impl<A: Arena> BetaStrategy<A> for CopyBeta {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new("copy", Role::Beta, self.kind)
    }

    fn respond(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Response<BetaMove<A::Set>>, StrategyError> {
        let u = constraint(arena, history);
        Ok(Response::plain(match self.kind {
            GameKind::BM => BetaMove::bm(u),
            GameKind::OD => BetaMove::od(u.clone(), u),
        }))
    }
}

/// α plays `U_n = V_n`.
#[derive(Debug, Clone, Copy)]
pub struct CopyAlpha {
    pub kind: GameKind,
}

impl<A: Arena> AlphaStrategy<A> for CopyAlpha {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new("copy", Role::Alpha, self.kind)
    }

    fn respond(
        &self,
        _arena: &A,
        _history: &[Round<A::Set>],
        beta: &BetaMove<A::Set>,
    ) -> Result<Response<A::Set>, StrategyError> {
        Ok(Response::plain(beta.v.clone()))
    }
}

/// β picks seeded random legal sets inside `U_{n-1}`.
#[derive(Debug, Clone, Copy)]
pub struct RandomBeta {
    pub seed: u64,
    pub kind: GameKind,
}

impl<A: Arena> BetaStrategy<A> for RandomBeta {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new(format!("random:{}", self.seed), Role::Beta, self.kind)
    }

    fn respond(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Response<BetaMove<A::Set>>, StrategyError> {
        let mut rng = history_rng(self.seed, "beta", history, None);
        let u = constraint(arena, history);
        let v = arena.random_subset(&u, &mut rng);
        Ok(Response::plain(match self.kind {
            GameKind::BM => BetaMove::bm(v),
            GameKind::OD => BetaMove::od(v, arena.random_subset(&u, &mut rng)),
        }))
    }
}

/// α picks a seeded random legal set inside `V_n`.
#[derive(Debug, Clone, Copy)]
pub struct RandomAlpha {
    pub seed: u64,
    pub kind: GameKind,
}

impl<A: Arena> AlphaStrategy<A> for RandomAlpha {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new(format!("random:{}", self.seed), Role::Alpha, self.kind)
    }

    fn respond(
        &self,
        arena: &A,
        history: &[Round<A::Set>],
        beta: &BetaMove<A::Set>,
    ) -> Result<Response<A::Set>, StrategyError> {
        let mut rng = history_rng(self.seed, "alpha", history, Some(beta));
        Ok(Response::plain(arena.random_subset(&beta.v, &mut rng)))
    }
}

pub fn random_beta<A: Arena>(seed: u64, kind: GameKind) -> Box<dyn BetaStrategy<A>> {
    Box::new(RandomBeta { seed, kind })
}

pub fn random_alpha<A: Arena>(seed: u64, kind: GameKind) -> Box<dyn AlphaStrategy<A>> {
    Box::new(RandomAlpha { seed, kind })
}

/// Replays a fixed list of β moves, then copies the constraint set.
#[derive(Debug, Clone)]
pub struct ScriptedBeta<S> {
    pub moves: Vec<BetaMove<S>>,
    pub kind: GameKind,
}

impl<A: Arena> BetaStrategy<A> for ScriptedBeta<A::Set> {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new("scripted", Role::Beta, self.kind)
    }

    fn respond(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Response<BetaMove<A::Set>>, StrategyError> {
        match self.moves.get(history.len()) {
            Some(mv) => Ok(Response::plain(mv.clone())),
            None => CopyBeta { kind: self.kind }.respond(arena, history),
        }
    }
}

/// Replays a fixed list of α moves, then answers `U = V`.
#[derive(Debug, Clone)]
pub struct ScriptedAlpha<S> {
    pub moves: Vec<S>,
    pub kind: GameKind,
}

impl<A: Arena> AlphaStrategy<A> for ScriptedAlpha<A::Set> {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new("scripted", Role::Alpha, self.kind)
    }

    fn respond(
        &self,
        _arena: &A,
        history: &[Round<A::Set>],
        beta: &BetaMove<A::Set>,
    ) -> Result<Response<A::Set>, StrategyError> {
        Ok(Response::plain(
            self.moves.get(history.len()).cloned().unwrap_or_else(|| beta.v.clone()),
        ))
    }
}
