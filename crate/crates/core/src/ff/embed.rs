use std::sync::Arc;

use super::field::fp_poly;
use super::{FfError, Fq, FqField};
use crate::poly::UniPoly;

/// The inclusion `F_q -> F_{q^r}`, realised by sending the generator of the
/// small field to a root of its modulus in the big field.
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    small: Arc<FqField>,
    big: Arc<FqField>,
    /// `theta^j` for `j < k_small`.
    powers: Vec<Fq>,
}

impl FieldEmbedding {
    /// Embeds `small` into a freshly built field of degree `r` over it.
    pub fn new(small: &Arc<FqField>, r: usize) -> Result<Self, FfError> {
        let big = FqField::new(small.characteristic(), small.degree() * r, None)?;
        Self::into_field(small, &big)
    }

    /// Embeds `small` into an existing `big` of the same characteristic.
    pub fn into_field(small: &Arc<FqField>, big: &Arc<FqField>) -> Result<Self, FfError> {
        if small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0 {
            return Err(FfError::FieldMismatch);
        }
        let k = small.degree();
        let theta = if k == 1 {
            big.one()
        } else {
            let m = UniPoly::new(
                big,
                small.modulus().iter().map(|&c| big.int(c as i64)).collect(),
            );
            m.roots()
                .into_iter()
                .next()
                .expect("an irreducible of degree k splits in F_{p^{k r}}")
        };
        let mut powers = Vec::with_capacity(k);
        let mut acc = big.one();
        for _ in 0..k {
            powers.push(acc.clone());
            acc = &acc * &theta;
        }
        Ok(FieldEmbedding {
            small: small.clone(),
            big: big.clone(),
            powers,
        })
    }

    pub fn small(&self) -> &Arc<FqField> {
        &self.small
    }

    pub fn big(&self) -> &Arc<FqField> {
        &self.big
    }

    pub fn map(&self, a: &Fq) -> Fq {
        debug_assert_eq!(a.field(), &self.small);
        let mut acc = self.big.zero();
        for (c, t) in a.coords().iter().zip(&self.powers) {
            if *c != 0 {
                acc += t * &self.big.int(*c as i64);
            }
        }
        acc
    }

    /// The element of the small field mapping to `b`, if there is one.
    pub fn try_preimage(&self, b: &Fq) -> Option<Fq> {
        let p = self.big.characteristic();
        let k = self.small.degree();
        let rows = self.big.degree();
        // augmented system: columns theta^j, right-hand side b
        let mut m: Vec<Vec<u64>> = (0..rows)
            .map(|i| {
                let mut row: Vec<u64> = self.powers.iter().map(|t| t.coords()[i]).collect();
                row.push(b.coords()[i]);
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..k {
            let Some(piv) = (r..rows).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = fp_poly::inv(m[r][col], p);
            for x in m[r].iter_mut() {
                *x = *x * inv % p;
            }
            for i in 0..rows {
                if i != r && m[i][col] != 0 {
                    let f = m[i][col];
                    for j in 0..=k {
                        m[i][j] = (m[i][j] + p * p - f * m[r][j]) % p;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        if m[r..].iter().any(|row| row[k] != 0) {
            return None;
        }
        let mut coords = vec![0i64; k];
        for (i, &col) in pivots.iter().enumerate() {
            coords[col] = m[i][k] as i64;
        }
        self.small.element(&coords).ok()
    }
}
