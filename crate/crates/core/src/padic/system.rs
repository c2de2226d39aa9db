use std::sync::Arc;

use super::{PadicError, PadicInt, PadicRing};
use crate::ff::Fq;
use crate::forms::{Form, FqForm};

pub type PadicForm = Form<PadicInt>;

/// A cubic form `F` and a quadratic form `G` over `O_K` at a common
/// precision.
#[derive(Debug, Clone, PartialEq)]
pub struct PadicSystem {
    f: PadicForm,
    g: PadicForm,
}

impl PadicSystem {
    pub fn new(f: PadicForm, g: PadicForm) -> Result<Self, PadicError> {
        if f.degree() != 3 {
            return Err(PadicError::DegreeMismatch {
                expected: 3,
                found: f.degree(),
            });
        }
        if g.degree() != 2 {
            return Err(PadicError::DegreeMismatch {
                expected: 2,
                found: g.degree(),
            });
        }
        if f.nvars() != g.nvars() {
            return Err(PadicError::DimensionMismatch {
                expected: f.nvars(),
                found: g.nvars(),
            });
        }
        if f.ctx() != g.ctx() {
            return Err(PadicError::RingMismatch);
        }
        Ok(PadicSystem { f, g })
    }

    /// Lifts residue forms coefficientwise by canonical representatives.
    pub fn lift(ring: &Arc<PadicRing>, f: &FqForm, g: &FqForm) -> Result<Self, PadicError> {
        Self::new(lift_form(ring, f), lift_form(ring, g))
    }

    pub fn f(&self) -> &PadicForm {
        &self.f
    }

    pub fn g(&self) -> &PadicForm {
        &self.g
    }

    pub fn ring(&self) -> &Arc<PadicRing> {
        self.f.ctx()
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    pub fn precision(&self) -> usize {
        self.ring().precision()
    }

    pub fn reduce_mod_p(&self) -> (FqForm, FqForm) {
        (reduce_form(&self.f), reduce_form(&self.g))
    }

    pub fn evaluate(&self, x: &[PadicInt]) -> Result<(PadicInt, PadicInt), PadicError> {
        Ok((self.f.evaluate(x)?, self.g.evaluate(x)?))
    }

    /// `(F(τx), G(τx))`.
    pub fn substitute_linear(&self, tau: &[Vec<PadicInt>]) -> Result<Self, PadicError> {
        Ok(PadicSystem {
            f: self.f.substitute_linear(tau)?,
            g: self.g.substitute_linear(tau)?,
        })
    }

    /// Both forms reinterpreted at another precision.
    pub fn with_ring(&self, ring: &Arc<PadicRing>) -> Self {
        PadicSystem {
            f: self.f.map_coeffs(ring, |c| c.with_ring(ring)),
            g: self.g.map_coeffs(ring, |c| c.with_ring(ring)),
        }
    }

    /// `(F / p^a, G / p^b)` at precision `N - max(a, b)`.
    pub fn divide_p_powers(&self, a: usize, b: usize) -> Result<Self, PadicError> {
        let e = a.max(b);
        if e >= self.precision() {
            return Err(PadicError::PrecisionExhausted {
                needed: e + 1,
                available: self.precision(),
            });
        }
        let ring = self.ring().with_precision(self.precision() - e)?;
        Ok(PadicSystem {
            f: div_form(&self.f, a, &ring)?,
            g: div_form(&self.g, b, &ring)?,
        })
    }
}

/// Smallest coefficient valuation; `N` for the zero form.
pub fn content_valuation(f: &PadicForm) -> usize {
    f.terms()
        .map(|(_, c)| c.valuation())
        .min()
        .unwrap_or(f.ctx().precision())
}

pub fn reduce_form(f: &PadicForm) -> FqForm {
    let field = f.ctx().residue_field().clone();
    f.map_coeffs::<Fq>(&field, |c| c.reduce())
}

pub fn lift_form(ring: &Arc<PadicRing>, f: &FqForm) -> PadicForm {
    f.map_coeffs(ring, |c| ring.lift(c))
}

fn div_form(f: &PadicForm, e: usize, ring: &Arc<PadicRing>) -> Result<PadicForm, PadicError> {
    let mut terms = Vec::with_capacity(f.poly().num_terms());
    for (m, c) in f.terms() {
        let v = c.div_p_pow(e).map_err(|x| match x {
            PadicError::NotDivisible => PadicError::NonIntegral,
            x => x,
        })?;
        terms.push((m.clone(), v.with_ring(ring)));
    }
    Ok(Form::from_terms(ring, f.nvars(), f.degree(), terms)?)
}
