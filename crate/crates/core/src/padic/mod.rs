//! Fixed-precision arithmetic in the ring of integers of an unramified
//! extension of `Q_p`, and the cubic-plus-quadratic system over it.

mod int;
pub mod matrix;
mod ring;
mod system;

pub use int::PadicInt;
pub use ring::{PadicRing, DEFAULT_PRECISION};
pub use system::{content_valuation, lift_form, reduce_form, PadicForm, PadicSystem};

use thiserror::Error;

use crate::forms::FormError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("expected {expected} coordinates, got {found}")]
    CoordinateCount { expected: usize, found: usize },
    #[error("needs {needed} digits of precision but only {available} remain")]
    PrecisionExhausted { needed: usize, available: usize },
    #[error("element is not divisible by the requested power of p")]
    NotDivisible,
    #[error("element is not a unit")]
    NotUnit,
    #[error("expected a form of degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("forms live over different rings")]
    RingMismatch,
    #[error("matrix is singular modulo p")]
    SingularMatrix,
    #[error("transformed system is not integral")]
    NonIntegral,
    #[error(transparent)]
    Form(#[from] FormError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FqField;
    use crate::forms::Form;

    #[test]
    fn evaluate_example_system() {
        let field = FqField::prime(7).unwrap();
        let r = PadicRing::new(&field, 4).unwrap();
        let f = Form::from_terms(&r, 3, 3, [([3u8, 0, 0], r.one())]).unwrap();
        let g = Form::from_terms(&r, 3, 2, [([1u8, 1, 0], r.one())]).unwrap();
        let s = PadicSystem::new(f, g).unwrap();
        let (a, b) = s.evaluate(&[r.int(7), r.int(1), r.int(0)]).unwrap();
        assert_eq!(a, r.int(343));
        assert_eq!(b, r.int(7));
        let (a0, b0) = s.evaluate(&[r.zero(), r.zero(), r.zero()]).unwrap();
        assert!(a0.is_zero() && b0.is_zero());
    }

    #[test]
    fn multiples_of_p_reduce_to_zero() {
        let field = FqField::prime(7).unwrap();
        let r = PadicRing::new(&field, 3).unwrap();
        let f = Form::from_terms(&r, 2, 3, [([3u8, 0], r.int(14)), ([1, 2], r.int(49))]).unwrap();
        let g = Form::from_terms(&r, 2, 2, [([1u8, 1], r.int(3))]).unwrap();
        let s = PadicSystem::new(f, g).unwrap();
        let (fr, gr) = s.reduce_mod_p();
        assert!(fr.is_zero());
        assert_eq!(gr.coeff(&[1, 1]), field.int(3));
        assert_eq!(content_valuation(s.f()), 1);
    }

    #[test]
    fn matrix_inverse_over_zp() {
        let field = FqField::prime(5).unwrap();
        let r = PadicRing::new(&field, 6).unwrap();
        let m = vec![
            vec![r.int(1), r.int(5), r.int(2)],
            vec![r.int(0), r.int(3), r.int(25)],
            vec![r.int(7), r.int(1), r.int(1)],
        ];
        let inv = matrix::inverse(&m).unwrap();
        assert_eq!(matrix::mat_mul(&m, &inv), matrix::identity(&r, 3));
        let sing = vec![vec![r.int(5), r.int(0)], vec![r.int(0), r.int(1)]];
        assert!(matches!(
            matrix::inverse(&sing),
            Err(PadicError::SingularMatrix)
        ));
    }
}
