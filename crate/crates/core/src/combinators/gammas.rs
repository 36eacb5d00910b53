use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::finite_topology::{FiniteSpace, PointSet};
use crate::games::{AlphaStrategy, BetaMove, GameKind, Note, Response, Role, Round, StrategyError, StrategyInfo, WinRule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("no levels given")]
    NoLevels,
    #[error("level {level}: {set} is not an open subset of the space")]
    NotOpen { level: usize, set: PointSet },
    #[error("level {level}: union {union} is not dense")]
    NotDense { level: usize, union: PointSet },
    #[error("level {level}: union {union} misses part of the carrier")]
    NotACover { level: usize, union: PointSet },
    #[error("family {level}: {set} is not closed")]
    NotClosed { level: usize, set: PointSet },
    #[error("family {level} is not contained in family {next}", next = level + 1)]
    NotIncreasing { level: usize },
    #[error("the compact cover misses points {0}")]
    CoverIncomplete(PointSet),
}

/// Families `γ_0, γ_1, ..` of open sets with dense unions. Levels past the
/// end repeat the last one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSequence {
    levels: Vec<Vec<PointSet>>,
    /// What the sequence is advertised to give α in BM, if anything.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    claim: Option<WinRule>,
}

impl GammaSequence {
    pub fn new(space: &FiniteSpace, levels: Vec<Vec<PointSet>>) -> Result<Self, GammaError> {
        if levels.is_empty() {
            return Err(GammaError::NoLevels);
        }
        for (level, fam) in levels.iter().enumerate() {
            for &set in fam {
                if space.check_set(set).is_err() || !space.open(set) {
                    return Err(GammaError::NotOpen { level, set });
                }
            }
            let union = fam.iter().fold(PointSet::EMPTY, |a, &b| a.union(b));
            if !space.dense(union) {
                return Err(GammaError::NotDense { level, union });
            }
        }
        Ok(GammaSequence { levels, claim: None })
    }

    /// No density check; for exercising the strategy's error path.
    pub fn unchecked(levels: Vec<Vec<PointSet>>) -> Self {
        GammaSequence { levels, claim: None }
    }

    pub fn with_claim(mut self, rule: WinRule) -> Self {
        self.claim = Some(rule);
        self
    }

    pub fn claim(&self) -> Option<WinRule> {
        self.claim
    }

    pub fn level(&self, n: usize) -> &[PointSet] {
        match self.levels.get(n) {
            Some(l) => l,
            None => self.levels.last().map_or(&[], Vec::as_slice),
        }
    }

    pub fn levels(&self) -> &[Vec<PointSet>] {
        &self.levels
    }
}

/// `F = ⋃ F_n` and the cover `K` of a Σ-space presentation. On a finite
/// space every family is locally finite and every set compact, so only
/// closedness, monotonicity and covering are checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaData {
    pub families: Vec<Vec<PointSet>>,
    pub cover: Vec<PointSet>,
    #[serde(default)]
    pub strong: bool,
}

impl SigmaData {
    pub fn validate(&self, space: &FiniteSpace) -> Result<(), GammaError> {
        if self.families.is_empty() {
            return Err(GammaError::NoLevels);
        }
        for (level, fam) in self.families.iter().enumerate() {
            for &set in fam {
                if space.check_set(set).is_err() || space.cl(set) != set {
                    return Err(GammaError::NotClosed { level, set });
                }
            }
            if let Some(next) = self.families.get(level + 1) {
                if !fam.iter().all(|f| next.contains(f)) {
                    return Err(GammaError::NotIncreasing { level });
                }
            }
        }
        let covered = self.cover.iter().fold(PointSet::EMPTY, |a, &b| a.union(b));
        let missing = space.carrier().difference(covered);
        if !missing.is_empty() {
            return Err(GammaError::CoverIncomplete(missing));
        }
        Ok(())
    }
}

/// `γ_n`: nonempty opens `U` such that `U ⊆ F` for every `F ∈ F_n` it meets.
pub fn gammas_from_sigma(space: &FiniteSpace, d: &SigmaData) -> Result<GammaSequence, GammaError> {
    d.validate(space)?;
    let opens = space.opens();
    let levels = d
        .families
        .iter()
        .map(|fam| {
            opens
                .iter()
                .copied()
                .filter(|u| !u.is_empty() && fam.iter().all(|&f| !u.meets(f) || u.is_subset(f)))
                .collect()
        })
        .collect();
    let rule = if d.strong { WinRule::KStar } else { WinRule::BStar };
    Ok(GammaSequence::new(space, levels)?.with_claim(rule))
}

/// A sequence of open covers, passed through unchanged.
pub fn gammas_from_pspace(space: &FiniteSpace, covers: Vec<Vec<PointSet>>) -> Result<GammaSequence, GammaError> {
    for (level, fam) in covers.iter().enumerate() {
        let union = fam.iter().fold(PointSet::EMPTY, |a, &b| a.union(b));
        if union != space.carrier() {
            return Err(GammaError::NotACover { level, union });
        }
    }
    Ok(GammaSequence::new(space, covers)?.with_claim(WinRule::KStar))
}

/// α in BM: `U_n` is the minimal neighborhood of the least point of
/// `V_n ∩ W_n`, for the first `W_n ∈ γ_n` meeting `V_n`.
#[derive(Debug, Clone)]
pub struct LemmaAlpha {
    gammas: GammaSequence,
}

pub fn lemma_alpha_strategy(_space: &FiniteSpace, gammas: GammaSequence) -> LemmaAlpha {
    LemmaAlpha { gammas }
}

impl LemmaAlpha {
    /// The `W_n` the strategy picks against `v` at round `n`.
    pub fn chosen(&self, n: usize, v: PointSet) -> Option<PointSet> {
        self.gammas.level(n).iter().copied().find(|w| w.meets(v))
    }

    pub fn gammas(&self) -> &GammaSequence {
        &self.gammas
    }
}

impl AlphaStrategy<FiniteSpace> for LemmaAlpha {
    fn info(&self) -> StrategyInfo {
        let info = StrategyInfo::new("gamma-refine", Role::Alpha, GameKind::BM);
        match self.gammas.claim() {
            Some(r) => info.claiming(r),
            None => info,
        }
    }

    fn respond(
        &self,
        space: &FiniteSpace,
        history: &[Round<PointSet>],
        beta: &BetaMove<PointSet>,
    ) -> Result<Response<PointSet>, StrategyError> {
        let n = history.len();
        let w = self
            .chosen(n, beta.v)
            .ok_or(StrategyError::DensityViolation { round: n })?;
        let x = beta.v.intersection(w).least().expect("W meets V");
        let u = space.min_nbhd(x);
        let notes = vec![
            Note::new(format!("W_n = {w} from gamma_n meets V"), true),
            Note::new("U inside V and W", u.is_subset(beta.v.intersection(w))),
        ];
        Ok(Response::with_notes(u, notes))
    }
}
