//! Strategy transformers. Each wraps inner strategies and recomputes any
//! shadow play from the history it is given, so outputs stay pure.

mod families;
mod forget;
mod gammas;
mod product;
mod separation;
mod shadow;
mod subspace;

pub use families::{bounded_family_check, converges_to_check, meets_finitely_many, FamilyError, PeriodicFamily};
pub use forget::{prop4_forget, Forget, ForgetDirection};
pub use gammas::{
    gammas_from_pspace, gammas_from_sigma, lemma_alpha_strategy, GammaError, GammaSequence, LemmaAlpha, SigmaData,
};
pub use product::{prop7_product_alpha, prop8_pair_alpha, FactorTrace, ProductAlpha, ProductRound};
pub use separation::{theorem2_beta_strategy, SeparatingBeta};
pub use shadow::{prop3_beta_bm, BmFromOd, Prop3Shadow};
pub use subspace::{
    e_operator, subspace_lift, subspace_lift_alpha, subspace_lift_beta, EmbeddingKind, Lifted, SubspaceAlpha,
    SubspaceBeta,
};

use crate::games::StrategyError;

pub(crate) fn inner_illegal(which: &str, round: usize, detail: impl Into<String>) -> StrategyError {
    StrategyError::InnerIllegal {
        which: which.to_string(),
        round,
        detail: detail.into(),
    }
}

pub(crate) fn inner_failed(which: &str, round: usize, source: StrategyError) -> StrategyError {
    StrategyError::Inner {
        which: which.to_string(),
        round,
        source: Box::new(source),
    }
}
