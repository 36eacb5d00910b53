use crate::games::{
    validate_alpha, validate_beta, AlphaStrategy, Arena, BetaMove, BetaStrategy, BoxAlpha, BoxBeta, GameKind, Note,
    Response, Role, Round, StrategyError, StrategyInfo,
};

use super::{inner_failed, inner_illegal};

/// β in BM built from an OD β-strategy `t1` and an OD α-strategy `t2`.
///
/// Two shadow OD plays run alongside the BM play:
/// - `xi` has rounds `(V'_k, W_k, U_k)`: `t1` as β, the real α's `U_k`.
/// - `zeta` has rounds `(V'_k, W_k, V_k)`: `t2` answers `t1`'s move with `V_k`.
///
/// The BM move is `V_n`.
pub struct BmFromOd<A: Arena> {
    t1: BoxBeta<A>,
    t2: BoxAlpha<A>,
}

/// Both shadow plays for a BM history, plus the pending round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop3Shadow<S> {
    pub xi: Vec<Round<S>>,
    pub zeta: Vec<Round<S>>,
    /// `(V'_n, W_n)` for the next round.
    pub od_move: BetaMove<S>,
    /// `V_n`.
    pub v: S,
}

pub fn prop3_beta_bm<A: Arena>(t1: BoxBeta<A>, t2: BoxAlpha<A>) -> BmFromOd<A> {
    BmFromOd { t1, t2 }
}

impl<A: Arena> BmFromOd<A> {
    /// Replays the wiring over `history` (a BM history) and returns the
    /// shadow plays.
    pub fn shadow(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Prop3Shadow<A::Set>, StrategyError> {
        let mut xi: Vec<Round<A::Set>> = Vec::with_capacity(history.len());
        let mut zeta: Vec<Round<A::Set>> = Vec::with_capacity(history.len());
        for n in 0..=history.len() {
            let od = self
                .t1
                .respond(arena, &xi)
                .map_err(|e| inner_failed("t1", n, e))?
                .mv;
            validate_beta(arena, GameKind::OD, &xi, &od).map_err(|e| inner_illegal("t1", n, e))?;
            let v = self
                .t2
                .respond(arena, &zeta, &od)
                .map_err(|e| inner_failed("t2", n, e))?
                .mv;
            validate_alpha(arena, &od, &v).map_err(|e| inner_illegal("t2", n, e))?;
            if n == history.len() {
                return Ok(Prop3Shadow {
                    xi,
                    zeta,
                    od_move: od,
                    v,
                });
            }
            let real = &history[n];
            if real.v != v {
                return Err(StrategyError::Input(format!(
                    "round {n}: history has V = {} but the wiring gives {v}",
                    real.v
                )));
            }
            let w = od.w.clone();
            xi.push(Round {
                v: od.v.clone(),
                w: w.clone(),
                u: real.u.clone(),
            });
            zeta.push(Round { v: od.v, w, u: v });
        }
        unreachable!("loop returns at n == history.len()")
    }
}

impl<A: Arena> BetaStrategy<A> for BmFromOd<A> {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new(
            format!("bm-from-od({}, {})", self.t1.info().name, self.t2.info().name),
            Role::Beta,
            GameKind::BM,
        )
    }

    fn respond(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Response<BetaMove<A::Set>>, StrategyError> {
        let sh = self.shadow(arena, history)?;
        let prev = crate::games::constraint(arena, &sh.xi);
        let notes = vec![
            Note::new("V' and W inside U_{n-1}", {
                arena.is_subset(&sh.od_move.v, &prev)
                    && sh.od_move.w.as_ref().is_some_and(|w| arena.is_subset(w, &prev))
            }),
            Note::new("V inside V'", arena.is_subset(&sh.v, &sh.od_move.v)),
        ];
        Ok(Response::with_notes(BetaMove::bm(sh.v), notes))
    }
}
