use serde::{Deserialize, Serialize};

use crate::finite_topology::{FiniteSpace, PointSet, ProductLayout};
use crate::games::{
    validate_alpha, validate_beta, AlphaStrategy, BetaMove, BoxAlpha, GameKind, Note, Response, Role, Round,
    StrategyError, StrategyInfo, WinRule,
};

use super::{inner_failed, inner_illegal};

/// α in OD on a finite product, driven by one OD α-strategy per factor.
///
/// Each round β's `V_n, W_n` are shrunk to boxes around their least
/// points. Coordinates not yet in play are widened to the whole factor
/// where the box still fits; the rest join play this round (the set `A_n`)
/// and start their own factor game. `U_n` is the box of the factors'
/// answers, whole factors elsewhere.
pub struct ProductAlpha {
    name: String,
    claim: WinRule,
    factors: Vec<FiniteSpace>,
    strategies: Vec<BoxAlpha<FiniteSpace>>,
    product: FiniteSpace,
    layout: ProductLayout,
    widen: bool,
}

/// Bookkeeping of one product round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRound {
    /// Coordinates that joined play this round.
    pub joined: Vec<usize>,
    pub v_box: PointSet,
    pub w_box: PointSet,
    pub u: PointSet,
    pub v_sides: Vec<PointSet>,
    pub w_sides: Vec<PointSet>,
    pub u_sides: Vec<PointSet>,
}

/// The OD play a factor strategy has seen; its round 0 is product round `start`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorTrace {
    pub factor: usize,
    pub start: usize,
    pub rounds: Vec<Round<PointSet>>,
}

pub fn prop7_product_alpha(
    factor_strategies: Vec<BoxAlpha<FiniteSpace>>,
    factors: Vec<FiniteSpace>,
) -> Result<ProductAlpha, StrategyError> {
    ProductAlpha::build("product", WinRule::KStar, factor_strategies, factors, true)
}

/// `p` plays on `x`, `q` on `y`; both coordinates are in play from the start.
pub fn prop8_pair_alpha(
    p: BoxAlpha<FiniteSpace>,
    x: FiniteSpace,
    q: BoxAlpha<FiniteSpace>,
    y: FiniteSpace,
) -> Result<ProductAlpha, StrategyError> {
    ProductAlpha::build("pair", WinRule::BStar, vec![p, q], vec![x, y], false)
}

impl ProductAlpha {
    fn build(
        name: &str,
        claim: WinRule,
        strategies: Vec<BoxAlpha<FiniteSpace>>,
        factors: Vec<FiniteSpace>,
        widen: bool,
    ) -> Result<Self, StrategyError> {
        if strategies.len() != factors.len() || factors.is_empty() {
            return Err(StrategyError::Input(format!(
                "{} strategies for {} factors",
                strategies.len(),
                factors.len()
            )));
        }
        if factors.iter().any(FiniteSpace::is_empty) {
            return Err(StrategyError::Input("empty factor".into()));
        }
        if let Some(bad) = strategies.iter().map(|s| s.info()).find(|i| i.kind != GameKind::OD) {
            return Err(StrategyError::Unsupported(format!("factor strategy {} is not an OD strategy", bad.name)));
        }
        let (product, layout) = ProductLayout::product_space(&factors).map_err(|e| StrategyError::Input(e.to_string()))?;
        let names: Vec<String> = strategies.iter().map(|s| s.info().name).collect();
        Ok(ProductAlpha {
            name: format!("{name}({})", names.join(", ")),
            claim,
            factors,
            strategies,
            product,
            layout,
            widen,
        })
    }

    pub fn product(&self) -> &FiniteSpace {
        &self.product
    }

    pub fn layout(&self) -> &ProductLayout {
        &self.layout
    }

    pub fn factors(&self) -> &[FiniteSpace] {
        &self.factors
    }

    /// Replays a completed history and returns the per-round bookkeeping
    /// and each factor's play.
    pub fn replay(
        &self,
        arena: &FiniteSpace,
        history: &[Round<PointSet>],
    ) -> Result<(Vec<ProductRound>, Vec<FactorTrace>), StrategyError> {
        self.check_arena(arena)?;
        let mut traces = self.fresh_traces();
        let mut rounds = Vec::new();
        for (n, r) in history.iter().enumerate() {
            let pr = self.step(n, &r.beta_move(), &mut traces)?;
            if pr.u != r.u {
                return Err(StrategyError::Input(format!(
                    "round {n}: history has U = {} but the strategy gives {}",
                    r.u, pr.u
                )));
            }
            rounds.push(pr);
        }
        Ok((rounds, traces))
    }

    fn check_arena(&self, arena: &FiniteSpace) -> Result<(), StrategyError> {
        if *arena == self.product {
            Ok(())
        } else {
            Err(StrategyError::BackendMismatch(format!(
                "expected the {}-point product of factors of sizes {:?}",
                self.product.len(),
                self.layout.dims()
            )))
        }
    }

    fn fresh_traces(&self) -> Vec<FactorTrace> {
        (0..self.factors.len())
            .map(|factor| FactorTrace {
                factor,
                start: usize::MAX,
                rounds: Vec::new(),
            })
            .collect()
    }

    fn step(
        &self,
        n: usize,
        beta: &BetaMove<PointSet>,
        traces: &mut [FactorTrace],
    ) -> Result<ProductRound, StrategyError> {
        let w = beta
            .w
            .ok_or_else(|| StrategyError::Input(format!("round {n}: OD move without W")))?;
        let x = self.layout.decode(beta.v.least().ok_or(StrategyError::NoLegalMove { round: n })?);
        let y = self.layout.decode(w.least().ok_or(StrategyError::NoLegalMove { round: n })?);
        let mut v_sides: Vec<PointSet> = x.iter().zip(&self.factors).map(|(&c, f)| f.min_nbhd(c)).collect();
        let mut w_sides: Vec<PointSet> = y.iter().zip(&self.factors).map(|(&c, f)| f.min_nbhd(c)).collect();

        let mut joined = Vec::new();
        for a in 0..self.factors.len() {
            if traces[a].start != usize::MAX {
                continue;
            }
            if self.widen {
                let (sv, sw) = (v_sides[a], w_sides[a]);
                v_sides[a] = self.factors[a].carrier();
                w_sides[a] = self.factors[a].carrier();
                if self.layout.boxed(&v_sides).is_subset(beta.v) && self.layout.boxed(&w_sides).is_subset(w) {
                    continue;
                }
                v_sides[a] = sv;
                w_sides[a] = sw;
            }
            traces[a].start = n;
            joined.push(a);
        }

        let mut u_sides: Vec<PointSet> = self.factors.iter().map(FiniteSpace::carrier).collect();
        for (a, trace) in traces.iter_mut().enumerate() {
            if trace.start == usize::MAX {
                continue;
            }
            let which = format!("factor {a}");
            let k = trace.rounds.len();
            let mv = BetaMove::od(v_sides[a], w_sides[a]);
            validate_beta(&self.factors[a], GameKind::OD, &trace.rounds, &mv)
                .map_err(|e| inner_illegal(&which, k, format!("box side rejected: {e}")))?;
            let ua = self.strategies[a]
                .respond(&self.factors[a], &trace.rounds, &mv)
                .map_err(|e| inner_failed(&which, k, e))?
                .mv;
            validate_alpha(&self.factors[a], &mv, &ua).map_err(|e| inner_illegal(&which, k, e))?;
            trace.rounds.push(Round {
                v: mv.v,
                w: mv.w,
                u: ua,
            });
            u_sides[a] = ua;
        }
        Ok(ProductRound {
            joined,
            v_box: self.layout.boxed(&v_sides),
            w_box: self.layout.boxed(&w_sides),
            u: self.layout.boxed(&u_sides),
            v_sides,
            w_sides,
            u_sides,
        })
    }

    fn notes(&self, beta: &BetaMove<PointSet>, pr: &ProductRound, traces: &[FactorTrace]) -> Vec<Note> {
        let w = beta.w.unwrap_or(PointSet::EMPTY);
        let projections_match = (0..self.factors.len()).all(|a| self.layout.project(pr.u, a) == pr.u_sides[a]);
        let factor_nesting = traces.iter().filter(|t| !t.rounds.is_empty()).all(|t| {
            let k = t.rounds.len() - 1;
            let prev = if k == 0 {
                self.factors[t.factor].carrier()
            } else {
                t.rounds[k - 1].u
            };
            let r = &t.rounds[k];
            r.v.is_subset(prev) && r.w.is_some_and(|w| w.is_subset(prev)) && r.u.is_subset(r.v)
        });
        let mut notes = vec![
            Note::new("(1) U_n inside V_n", pr.u.is_subset(beta.v)),
            Note::new(
                "(2) U_n is the box of factor answers",
                projections_match && pr.u == self.layout.boxed(&pr.u_sides),
            ),
            Note::new(
                "(3) box refinements inside V_n and W_n",
                pr.v_box.is_subset(beta.v) && pr.w_box.is_subset(w),
            ),
            Note::new("(4) factor moves nested", factor_nesting),
        ];
        if !pr.joined.is_empty() {
            notes.push(Note::new(format!("A_n = {:?}", pr.joined), true));
        }
        notes
    }
}

impl AlphaStrategy<FiniteSpace> for ProductAlpha {
    fn info(&self) -> StrategyInfo {
        StrategyInfo::new(self.name.clone(), Role::Alpha, GameKind::OD).claiming(self.claim)
    }

    fn respond(
        &self,
        arena: &FiniteSpace,
        history: &[Round<PointSet>],
        beta: &BetaMove<PointSet>,
    ) -> Result<Response<PointSet>, StrategyError> {
        let (_, mut traces) = self.replay(arena, history)?;
        let pr = self.step(history.len(), beta, &mut traces)?;
        let notes = self.notes(beta, &pr, &traces);
        Ok(Response::with_notes(pr.u, notes))
    }
}
