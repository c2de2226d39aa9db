//! Lifting a nonsingular residue zero to a zero modulo `p^N`.
//!
//! Two coordinates whose 2×2 Jacobian minor is invertible mod `p` are
//! refined by Newton's method; the others stay at their canonical lifts.

use std::sync::Arc;

use thiserror::Error;

use crate::ff::Fq;
use crate::linalg;
use crate::padic::{PadicError, PadicForm, PadicInt, PadicRing, PadicSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HenselError {
    #[error("the Jacobian has rank < 2 at the residue point")]
    SingularJacobian,
    #[error("expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("target precision {target} exceeds the system's {available}")]
    Precision { target: usize, available: usize },
    #[error("Newton iteration did not converge after {steps} steps")]
    NonConvergence { steps: usize },
    #[error(transparent)]
    Padic(#[from] PadicError),
}

#[derive(Debug, Clone)]
pub struct LiftResult {
    pub x: Vec<PadicInt>,
    pub pivot: (usize, usize),
    /// `(v(F(x)), v(G(x)))`, both equal to the precision on success.
    pub residual_valuations: (usize, usize),
    /// `min(v(F), v(G))` before each Newton step and after the last one.
    pub step_valuations: Vec<usize>,
}

/// The lexicographically first pair of coordinates with an invertible
/// Jacobian minor mod `p`.
pub fn pivot(
    f: &crate::forms::FqForm,
    g: &crate::forms::FqForm,
    x0: &[Fq],
) -> Option<(usize, usize)> {
    let a = f.gradient(x0).ok()?;
    let b = g.gradient(x0).ok()?;
    let n = a.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| !(&a[i] * &b[j] - &a[j] * &b[i]).is_zero())
}

/// Lifts `x0` to a zero of `s` modulo `p^target`.
pub fn lift(s: &PadicSystem, x0: &[Fq], target: usize) -> Result<LiftResult, HenselError> {
    let n = s.nvars();
    if x0.len() != n {
        return Err(HenselError::DimensionMismatch {
            expected: n,
            found: x0.len(),
        });
    }
    if target > s.precision() || target == 0 {
        return Err(HenselError::Precision {
            target,
            available: s.precision(),
        });
    }
    let ring: Arc<PadicRing> = s.ring().with_precision(target)?;
    let s = s.with_ring(&ring);
    let (fr, gr) = s.reduce_mod_p();
    let (i, j) = pivot(&fr, &gr, x0).ok_or(HenselError::SingularJacobian)?;
    debug_assert_eq!(
        linalg::rank(&vec![fr.gradient(x0).unwrap(), gr.gradient(x0).unwrap()]),
        2
    );

    let partials: [[PadicForm; 2]; 2] = [
        [s.f().partial(i), s.f().partial(j)],
        [s.g().partial(i), s.g().partial(j)],
    ];
    let mut x: Vec<PadicInt> = x0.iter().map(|c| ring.lift(c)).collect();
    let mut steps = Vec::new();
    let max_steps = usize::BITS as usize - target.leading_zeros() as usize + 2;
    for _ in 0..=max_steps {
        let (fv, gv) = s.evaluate(&x)?;
        let v = fv.valuation().min(gv.valuation());
        steps.push(v);
        if v >= target {
            return Ok(LiftResult {
                residual_valuations: (fv.valuation(), gv.valuation()),
                x,
                pivot: (i, j),
                step_valuations: steps,
            });
        }
        let e = |k: usize, l: usize| partials[k][l].evaluate(&x).expect("dimension");
        let (a, b, c, d) = (e(0, 0), e(0, 1), e(1, 0), e(1, 1));
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        let inv = det.inv().map_err(|_| HenselError::SingularJacobian)?;
        // [a b; c d]^{-1} = [d -b; -c a] / det
        let di = (d * fv.clone() - b * gv.clone()) * inv.clone();
        let dj = (a * gv - c * fv) * inv;
        x[i] = x[i].clone() - di;
        x[j] = x[j].clone() - dj;
    }
    Err(HenselError::NonConvergence { steps: max_steps })
}
