use crate::games::{
    constraint, Arena, BetaClaim, BetaMove, BetaStrategy, GameKind, Note, Response, Role, Round, StrategyError,
    StrategyInfo, WinRule,
};

/// β in OD: each round, the first candidate pair `V, W ⊆ U_{n-1}` with
/// `V x W ∩ P = ∅` and `closure(V) ⊆ U_{n-1}`.
///
/// Meant for a `P` that is a counterexample to the Δ-Baire property; when
/// it is not, the search eventually comes up empty.
#[derive(Debug, Clone)]
pub struct SeparatingBeta<A: Arena> {
    relation: A::Relation,
}

impl<A: Arena> SeparatingBeta<A> {
    pub fn relation(&self) -> &A::Relation {
        &self.relation
    }
}

pub fn theorem2_beta_strategy<A: Arena>(_arena: &A, p: A::Relation) -> SeparatingBeta<A> {
    SeparatingBeta { relation: p }
}

impl<A: Arena> BetaStrategy<A> for SeparatingBeta<A> {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new("separating", Role::Beta, GameKind::OD).claiming(WinRule::B)
    }

    fn respond(&self, arena: &A, history: &[Round<A::Set>]) -> Result<Response<BetaMove<A::Set>>, StrategyError> {
        let u = constraint(arena, history);
        let found = arena
            .separation_candidates(&u)
            .into_iter()
            .find(|(v, w)| arena.separates(&self.relation, v, w) && arena.closure_within(v, &u));
        let Some((v, w)) = found else {
            return Err(StrategyError::NoSeparation { round: history.len() });
        };
        let notes = vec![
            Note::new("V x W misses P", arena.separates(&self.relation, &v, &w)),
            Note::new("closure(V) inside U", arena.closure_within(&v, &u)),
        ];
        Ok(Response::with_notes(BetaMove::od(v, w), notes))
    }

    fn claim(&self) -> Option<BetaClaim<A>> {
        Some(BetaClaim::Separation {
            relation: self.relation.clone(),
        })
    }
}
