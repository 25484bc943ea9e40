//! Schur elements of the Ariki-Koike algebra: three independent formulas,
//! supporting identities, and semisimplicity analysis.

mod factored;
mod gim;
mod identities;
mod mathas;
mod semisimple;

pub use factored::{schur_factored, HookFactor, SchurFactored};
pub use gim::{schur_gim, schur_gim_default};
pub use identities::{lemma_conj_cont_check, lemma_nbar_check, x_st_closed};
pub use mathas::{alpha_conj, schur_mathas, x_st_mathas};
pub use semisimple::{
    semisimple_at, semisimplicity_poly, vanishing_report, SemisimpleVerdict, VanishingReport,
};

use crate::combinatorics::CombinatoricsError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurError {
    #[error("require 0 <= s < t < d, got s={s}, t={t}")]
    InvalidPair { s: usize, t: usize },
    #[error("column index k={k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}
