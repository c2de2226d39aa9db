use super::form::Form;
use super::FormError;
use crate::scalar::Scalar;

/// The symmetric `d`-linear form `M_F` with `M_F(x, …, x) = F(x)`.
#[derive(Debug, Clone)]
pub struct MultilinearForm<R: Scalar> {
    form: Form<R>,
    inv_factorial: R,
}

impl<R: Scalar> Form<R> {
    /// Requires `d!` to be invertible in the coefficient ring.
    pub fn polarize(&self) -> Result<MultilinearForm<R>, FormError> {
        let d = self.degree();
        let fact: u64 = (1..=d as u64).product();
        let inv_factorial =
            R::inv_int(self.ctx(), fact).ok_or(FormError::SmallCharacteristic(d))?;
        Ok(MultilinearForm {
            form: self.clone(),
            inv_factorial,
        })
    }
}

impl<R: Scalar> MultilinearForm<R> {
    pub fn form(&self) -> &Form<R> {
        &self.form
    }

    pub fn arity(&self) -> usize {
        self.form.degree()
    }

    /// `(1/d!) Σ_{S ⊆ [d]} (-1)^{d-|S|} F(Σ_{i∈S} a_i)`.
    pub fn evaluate(&self, args: &[&[R]]) -> Result<R, FormError> {
        let d = self.arity();
        if args.len() != d {
            return Err(FormError::DimensionMismatch {
                expected: d,
                found: args.len(),
            });
        }
        let n = self.form.nvars();
        let ctx = self.form.ctx();
        let mut acc = R::zero(ctx);
        for mask in 0u32..(1 << d) {
            let mut v = vec![R::zero(ctx); n];
            for (i, a) in args.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if a.len() != n {
                        return Err(FormError::DimensionMismatch {
                            expected: n,
                            found: a.len(),
                        });
                    }
                    for (vj, aj) in v.iter_mut().zip(a.iter()) {
                        *vj = vj.clone() + aj.clone();
                    }
                }
            }
            let val = self.form.evaluate(&v)?;
            if (d - mask.count_ones() as usize) % 2 == 0 {
                acc = acc + val;
            } else {
                acc = acc - val;
            }
        }
        Ok(acc * self.inv_factorial.clone())
    }
}
