//! Reduction of a system by the moves that decrease the weighted order,
//! and the h-invariants that decide when to stop.

mod hinv;
mod moves;
pub mod quadratic;

pub use hinv::{
    essential_space, gaussian_binomial, h_invariant, h_invariant_shifted, h_invariant_system,
    HCertificate, HMode, DEFAULT_BUDGET,
};
pub use moves::{
    apply_move, check_reduced, reduce_fully, AppliedMove, MoveKind, OmegaWeights, ReduceOptions,
    ReducedReport, Reduction, ReductionMove,
};

use thiserror::Error;

use crate::forms::FormError;
use crate::padic::PadicError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimizeError {
    #[error("transformed system is not integral; the witness was wrong")]
    NonIntegralResult,
    #[error("precision exhausted after {moves} moves")]
    PrecisionExhausted { moves: usize },
    #[error("needs {needed} digits of precision but only {available} remain")]
    Precision { needed: usize, available: usize },
    #[error("witness has {rows} forms, the move scales only {max}")]
    WitnessTooLarge { rows: usize, max: usize },
    #[error(transparent)]
    Padic(PadicError),
}

impl MinimizeError {
    fn from_padic(e: PadicError) -> Self {
        match e {
            PadicError::NonIntegral | PadicError::NotDivisible => MinimizeError::NonIntegralResult,
            PadicError::PrecisionExhausted { needed, available } => {
                MinimizeError::Precision { needed, available }
            }
            e => MinimizeError::Padic(e),
        }
    }
}

impl From<FormError> for MinimizeError {
    fn from(e: FormError) -> Self {
        MinimizeError::Padic(PadicError::Form(e))
    }
}

impl From<PadicError> for MinimizeError {
    fn from(e: PadicError) -> Self {
        Self::from_padic(e)
    }
}
