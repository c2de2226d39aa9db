//! Univariate and bivariate polynomials over `F_q`, with factorization.

mod bivariate;
mod factor;
mod uni;

pub use bivariate::BiPoly;
pub use factor::{
    factor_bivariate, is_absolutely_irreducible, is_irreducible, radical, unit, MAX_ABS_DEGREE,
};
pub use uni::UniPoly;

use thiserror::Error;

use crate::ff::FfError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error(transparent)]
    Field(#[from] FfError),
}
