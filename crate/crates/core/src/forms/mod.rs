//! Sparse polynomials and homogeneous forms over any `Scalar` ring.

mod form;
mod polar;
mod poly;
mod slice;
mod text;

pub use form::{homogenize, monomials, Form, FqForm, MAX_DEGREE};
pub use polar::MultilinearForm;
pub use poly::{Monomial, Poly, MAX_VARS};
pub use slice::{to_bipoly, SliceParams};
pub use text::parse_monomial_line;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("terms are not all of degree {0}")]
    NotHomogeneous(usize),
    #[error("degree {0} exceeds the supported maximum")]
    DegreeTooLarge(usize),
    #[error("{0}! is not invertible in the coefficient ring")]
    SmallCharacteristic(usize),
    #[error("slice needs {expected} parameters, found {found}")]
    SliceLength { expected: usize, found: usize },
}
