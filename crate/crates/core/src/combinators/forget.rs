use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::games::{
    AlphaStrategy, Arena, BetaMove, BoxAlpha, GameKind, Response, Role, Round, StrategyError, StrategyInfo, WinRule,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForgetDirection {
    /// `k*` to `b*` in the same game: same moves, weaker claim.
    RuleWeakening,
    /// BM to OD: the inner BM strategy never sees `W_n`.
    IgnoreW,
}

impl fmt::Display for ForgetDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForgetDirection::RuleWeakening => "k*->b*",
            ForgetDirection::IgnoreW => "BM->OD",
        })
    }
}

impl FromStr for ForgetDirection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "k*->b*" | "rule_weakening" => Ok(ForgetDirection::RuleWeakening),
            "BM->OD" | "bm->od" | "ignore_w" => Ok(ForgetDirection::IgnoreW),
            _ => Err(format!("unknown direction {s:?}")),
        }
    }
}

pub struct Forget<A: Arena> {
    inner: BoxAlpha<A>,
    direction: ForgetDirection,
}

pub fn prop4_forget<A: Arena>(strategy: BoxAlpha<A>, direction: ForgetDirection) -> Result<Forget<A>, StrategyError> {
    let info = strategy.info();
    if info.role != Role::Alpha {
        return Err(StrategyError::Unsupported("only alpha strategies transfer".into()));
    }
    match direction {
        ForgetDirection::RuleWeakening => {
            if !matches!(info.claim, None | Some(WinRule::KStar)) {
                return Err(StrategyError::Unsupported(format!(
                    "{direction} needs a k* strategy, got {}",
                    info.claim.map_or("?".into(), |r| r.to_string())
                )));
            }
        }
        ForgetDirection::IgnoreW => {
            if info.kind != GameKind::BM {
                return Err(StrategyError::Unsupported(format!(
                    "{direction} needs a BM strategy, got {}",
                    info.kind
                )));
            }
        }
    }
    Ok(Forget {
        inner: strategy,
        direction,
    })
}

impl<A: Arena> Forget<A> {
    pub fn direction(&self) -> ForgetDirection {
        self.direction
    }
}

impl<A: Arena> AlphaStrategy<A> for Forget<A> {
    fn info(&self) -> StrategyInfo {
        let inner = self.inner.info();
        let mut info = StrategyInfo::new(format!("forget[{}]({})", self.direction, inner.name), Role::Alpha, inner.kind);
        match self.direction {
            ForgetDirection::RuleWeakening => info.claim = Some(WinRule::BStar),
            ForgetDirection::IgnoreW => {
                info.kind = GameKind::OD;
                info.claim = inner.claim;
            }
        }
        info
    }

    fn respond(
        &self,
        arena: &A,
        history: &[Round<A::Set>],
        beta: &BetaMove<A::Set>,
    ) -> Result<Response<A::Set>, StrategyError> {
        match self.direction {
            ForgetDirection::RuleWeakening => self.inner.respond(arena, history, beta),
            ForgetDirection::IgnoreW => {
                let trace: Vec<Round<A::Set>> = history.iter().map(Round::without_side_set).collect();
                self.inner.respond(arena, &trace, &BetaMove::bm(beta.v.clone()))
            }
        }
    }
}
