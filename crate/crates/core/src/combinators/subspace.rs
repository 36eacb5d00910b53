//! Moving strategies between a finite space `X` and a subspace `Y`.
//!
//! `E(U) = X ∖ closure(Y ∖ U)` turns a `Y`-open set into an `X`-open one
//! with `E(U) ∩ Y = U` when `Y` is dense. In a finite space a countable
//! family of opens is locally finite iff all but finitely many members are
//! empty, so C-density is plain density here.

use serde::{Deserialize, Serialize};

use crate::finite_topology::{FiniteSpace, PointSet, Subspace};
use crate::games::{
    validate_alpha, validate_beta, AlphaStrategy, BetaMove, BetaStrategy, BoxAlpha, BoxBeta, GameKind, Note, Response,
    Role, Round, StrategyError, StrategyInfo,
};

use super::{inner_failed, inner_illegal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EmbeddingKind {
    /// `Y = ⋂ G_n` with every `G_n` open and dense; the last `G` repeats.
    DenseGDelta { g: Vec<PointSet> },
    CDense,
    Open,
}

impl EmbeddingKind {
    pub fn check(&self, x: &FiniteSpace, y: PointSet) -> Result<(), StrategyError> {
        let bad = |m: String| Err(StrategyError::Input(m));
        if x.check_set(y).is_err() || y.is_empty() {
            return bad(format!("{y} is not a nonempty subset of the carrier"));
        }
        match self {
            EmbeddingKind::Open => {
                if !x.open(y) {
                    return bad(format!("{y} is not open"));
                }
            }
            EmbeddingKind::CDense => {
                if !x.dense(y) {
                    return bad(format!("{y} is not dense"));
                }
            }
            EmbeddingKind::DenseGDelta { g } => {
                if g.is_empty() {
                    return bad("no G_n given".into());
                }
                for &gn in g {
                    if x.check_set(gn).is_err() || !x.open(gn) || !x.dense(gn) {
                        return bad(format!("G = {gn} is not open and dense"));
                    }
                }
                let meet = g.iter().fold(x.carrier(), |a, &b| a.intersection(b));
                if meet != y {
                    return bad(format!("the G_n meet in {meet}, not {y}"));
                }
            }
        }
        Ok(())
    }

    fn g(&self, x: &FiniteSpace, n: usize) -> PointSet {
        match self {
            EmbeddingKind::DenseGDelta { g } => g.get(n).or(g.last()).copied().unwrap_or(x.carrier()),
            _ => x.carrier(),
        }
    }
}

/// `X ∖ closure(Y ∖ u)`, all sets in `X`'s indices.
pub fn e_operator(x: &FiniteSpace, y: PointSet, u: PointSet) -> PointSet {
    x.carrier().difference(x.cl(y.difference(u)))
}

/// First nonempty `Y`-open `U' ⊆ within ∩ Y` (bit order on `X` indices)
/// whose `X`-closure lies in `target`.
fn closed_shrink(x: &FiniteSpace, sub: &Subspace, within: PointSet, target: PointSet) -> Option<PointSet> {
    sub.space
        .opens_within(sub.from_parent(within))
        .into_iter()
        .filter(|o| !o.is_empty())
        .map(|o| sub.to_parent(o))
        .filter(|&o| x.cl(o).is_subset(target))
        .min()
}

struct Embedding {
    x: FiniteSpace,
    sub: Subspace,
    kind: EmbeddingKind,
}

impl Embedding {
    fn new(x: &FiniteSpace, y: PointSet, kind: EmbeddingKind) -> Result<Self, StrategyError> {
        kind.check(x, y)?;
        let sub = x.subspace(y).map_err(|e| StrategyError::Input(e.to_string()))?;
        Ok(Embedding { x: x.clone(), sub, kind })
    }

    fn y(&self) -> PointSet {
        self.sub.image()
    }

    fn check_arena(&self, arena: &FiniteSpace, expected: &FiniteSpace) -> Result<(), StrategyError> {
        if arena == expected {
            Ok(())
        } else {
            Err(StrategyError::BackendMismatch("strategy was lifted for a different space".into()))
        }
    }

    fn local(&self, s: PointSet) -> PointSet {
        self.sub.from_parent(s)
    }

    fn parent(&self, s: PointSet) -> PointSet {
        self.sub.to_parent(s)
    }

    fn e(&self, local: PointSet) -> PointSet {
        e_operator(&self.x, self.y(), self.parent(local))
    }

    /// `U'` with `closure(U') ⊆ u ∩ G_n`, in local indices.
    fn shrink(&self, n: usize, u: PointSet) -> Result<PointSet, StrategyError> {
        let target = u.intersection(self.kind.g(&self.x, n));
        let target = match self.kind {
            EmbeddingKind::Open => u,
            _ => target,
        };
        closed_shrink(&self.x, &self.sub, u, target)
            .map(|o| self.local(o))
            .ok_or_else(|| StrategyError::ShrinkFailure {
                round: n,
                detail: format!("no open piece of {} in Y has closure inside {target}", u.intersection(self.y())),
            })
    }
}

/// β on `X` from a β-strategy `t` on `Y`.
pub struct SubspaceBeta {
    emb: Embedding,
    inner: BoxBeta<FiniteSpace>,
}

/// α on `Y` from an α-strategy `t` on `X`.
pub struct SubspaceAlpha {
    emb: Embedding,
    inner: BoxAlpha<FiniteSpace>,
}

pub enum Lifted {
    Beta(BoxBeta<FiniteSpace>),
    Alpha(BoxAlpha<FiniteSpace>),
}

/// For a β-strategy `t` on `Y`, a β-strategy on `x_space`. For an
/// α-strategy `t` on `x_space`, an α-strategy on `Y`.
pub fn subspace_lift(t: Lifted, x_space: &FiniteSpace, y: PointSet, kind: EmbeddingKind) -> Result<Lifted, StrategyError> {
    Ok(match t {
        Lifted::Beta(b) => Lifted::Beta(Box::new(subspace_lift_beta(b, x_space, y, kind)?)),
        Lifted::Alpha(a) => Lifted::Alpha(Box::new(subspace_lift_alpha(a, x_space, y, kind)?)),
    })
}

pub fn subspace_lift_beta(
    t: BoxBeta<FiniteSpace>,
    x_space: &FiniteSpace,
    y: PointSet,
    kind: EmbeddingKind,
) -> Result<SubspaceBeta, StrategyError> {
    if t.info().kind != GameKind::OD {
        return Err(StrategyError::Unsupported("subspace lifting needs an OD strategy".into()));
    }
    Ok(SubspaceBeta {
        emb: Embedding::new(x_space, y, kind)?,
        inner: t,
    })
}

pub fn subspace_lift_alpha(
    t: BoxAlpha<FiniteSpace>,
    x_space: &FiniteSpace,
    y: PointSet,
    kind: EmbeddingKind,
) -> Result<SubspaceAlpha, StrategyError> {
    if t.info().kind != GameKind::OD {
        return Err(StrategyError::Unsupported("subspace lifting needs an OD strategy".into()));
    }
    Ok(SubspaceAlpha {
        emb: Embedding::new(x_space, y, kind)?,
        inner: t,
    })
}

impl SubspaceBeta {
    pub fn subspace(&self) -> &FiniteSpace {
        &self.emb.sub.space
    }

    /// The shadow play on `Y` (local indices) behind an `X` history, and
    /// the inner strategy's next move there.
    pub fn shadow(
        &self,
        arena: &FiniteSpace,
        history: &[Round<PointSet>],
    ) -> Result<(Vec<Round<PointSet>>, BetaMove<PointSet>), StrategyError> {
        self.emb.check_arena(arena, &self.emb.x)?;
        let y_space = &self.emb.sub.space;
        let mut shadow: Vec<Round<PointSet>> = Vec::new();
        let mut pending: Option<BetaMove<PointSet>> = None;
        for n in 0..=history.len() {
            if let Some(mv) = pending.take() {
                let u_prev = history[n - 1].u;
                let u_local = if matches!(self.emb.kind, EmbeddingKind::Open) {
                    self.emb.local(u_prev)
                } else {
                    self.emb.shrink(n, u_prev)?
                };
                validate_alpha(y_space, &mv, &u_local).map_err(|e| inner_illegal("shrink", n - 1, e))?;
                shadow.push(Round {
                    v: mv.v,
                    w: mv.w,
                    u: u_local,
                });
            }
            let mv = self
                .inner
                .respond(y_space, &shadow)
                .map_err(|e| inner_failed("t", n, e))?
                .mv;
            validate_beta(y_space, GameKind::OD, &shadow, &mv).map_err(|e| inner_illegal("t", n, e))?;
            pending = Some(mv);
        }
        Ok((shadow, pending.expect("loop runs at least once")))
    }
}

impl BetaStrategy<FiniteSpace> for SubspaceBeta {
    fn info(&self) -> StrategyInfo {
        let inner = self.inner.info();
        let mut info = StrategyInfo::new(format!("lift[{}]({})", kind_name(&self.emb.kind), inner.name), Role::Beta, GameKind::OD);
        info.claim = inner.claim;
        info
    }

    fn respond(
        &self,
        arena: &FiniteSpace,
        history: &[Round<PointSet>],
    ) -> Result<Response<BetaMove<PointSet>>, StrategyError> {
        let (shadow, mv) = self.shadow(arena, history)?;
        let w = mv.w.expect("validated OD move");
        let (v_x, w_x) = match self.emb.kind {
            EmbeddingKind::Open => (self.emb.parent(mv.v), self.emb.parent(w)),
            _ => (self.emb.e(mv.v), self.emb.e(w)),
        };
        let mut notes = vec![Note::new(
            "E(V') and E(W') meet Y in V' and W'",
            self.emb.local(v_x) == mv.v && self.emb.local(w_x) == w,
        )];
        if let (Some(last), Some(real)) = (shadow.last(), history.last()) {
            let u_x = self.emb.parent(last.u);
            notes.push(match self.emb.kind {
                EmbeddingKind::Open => Note::new("U' = U_{n-1} ∩ Y", u_x == real.u.intersection(self.emb.y())),
                _ => {
                    let target = real.u.intersection(self.emb.kind.g(&self.emb.x, history.len()));
                    Note::new("closure(U') inside U_{n-1}", self.emb.x.cl(u_x).is_subset(target))
                }
            });
        }
        Ok(Response::with_notes(BetaMove::od(v_x, w_x), notes))
    }
}

impl SubspaceAlpha {
    pub fn subspace(&self) -> &FiniteSpace {
        &self.emb.sub.space
    }

    /// The shadow play on `X` behind a `Y` history (local indices).
    pub fn shadow(&self, arena: &FiniteSpace, history: &[Round<PointSet>]) -> Result<Vec<Round<PointSet>>, StrategyError> {
        self.emb.check_arena(arena, &self.emb.sub.space)?;
        let mut shadow = Vec::new();
        for (n, r) in history.iter().enumerate() {
            let (mv, u_x, u_local) = self.answer(n, &shadow, &r.beta_move())?;
            if u_local != r.u {
                return Err(StrategyError::Input(format!(
                    "round {n}: history has U = {} but the strategy gives {u_local}",
                    r.u
                )));
            }
            shadow.push(Round { v: mv.v, w: mv.w, u: u_x });
        }
        Ok(shadow)
    }

    fn lift_move(&self, beta: &BetaMove<PointSet>) -> BetaMove<PointSet> {
        let lift = |s: PointSet| match self.emb.kind {
            EmbeddingKind::Open => self.emb.parent(s),
            _ => self.emb.e(s),
        };
        BetaMove {
            v: lift(beta.v),
            w: beta.w.map(lift),
        }
    }

    fn answer(
        &self,
        n: usize,
        shadow: &[Round<PointSet>],
        beta: &BetaMove<PointSet>,
    ) -> Result<(BetaMove<PointSet>, PointSet, PointSet), StrategyError> {
        let x = &self.emb.x;
        let mv = self.lift_move(beta);
        validate_beta(x, GameKind::OD, shadow, &mv).map_err(|e| inner_illegal("lifted beta", n, e))?;
        let u_x = self
            .inner
            .respond(x, shadow, &mv)
            .map_err(|e| inner_failed("t", n, e))?
            .mv;
        validate_alpha(x, &mv, &u_x).map_err(|e| inner_illegal("t", n, e))?;
        let u_local = match self.emb.kind {
            EmbeddingKind::Open => self.emb.local(u_x),
            _ => self.emb.shrink(n + 1, u_x)?,
        };
        Ok((mv, u_x, u_local))
    }
}

impl AlphaStrategy<FiniteSpace> for SubspaceAlpha {
    fn info(&self) -> StrategyInfo {
        let inner = self.inner.info();
        let mut info = StrategyInfo::new(format!("restrict[{}]({})", kind_name(&self.emb.kind), inner.name), Role::Alpha, GameKind::OD);
        info.claim = inner.claim;
        info
    }

    fn respond(
        &self,
        arena: &FiniteSpace,
        history: &[Round<PointSet>],
        beta: &BetaMove<PointSet>,
    ) -> Result<Response<PointSet>, StrategyError> {
        let shadow = self.shadow(arena, history)?;
        let (_, u_x, u_local) = self.answer(history.len(), &shadow, beta)?;
        let u_parent = self.emb.parent(u_local);
        let first = match self.emb.kind {
            EmbeddingKind::Open => Note::new("U' = U ∩ Y", u_parent == u_x.intersection(self.emb.y())),
            _ => {
                let target = u_x.intersection(self.emb.kind.g(&self.emb.x, history.len() + 1));
                Note::new("closure(U') inside U", self.emb.x.cl(u_parent).is_subset(target))
            }
        };
        let notes = vec![first, Note::new("U' inside V'", u_local.is_subset(beta.v))];
        Ok(Response::with_notes(u_local, notes))
    }
}

fn kind_name(k: &EmbeddingKind) -> &'static str {
    match k {
        EmbeddingKind::DenseGDelta { .. } => "dense-g-delta",
        EmbeddingKind::CDense => "c-dense",
        EmbeddingKind::Open => "open",
    }
}
