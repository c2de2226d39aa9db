use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use super::{PadicError, PadicInt};
use crate::ff::{Fq, FqField};

/// Default number of `p`-adic digits carried.
pub const DEFAULT_PRECISION: usize = 64;

/// `O_K / p^N O_K` for `K` unramified of degree `k` over `Q_p`, presented
/// as `(Z/p^N)[t] / (m(t))` with `m` a monic lift of the residue modulus.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicRing {
    residue: Arc<FqField>,
    precision: usize,
    modulus_pn: BigUint,
}

impl fmt::Debug for PadicRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({:?}) mod p^{}", self.residue, self.precision)
    }
}

impl PadicRing {
    pub fn new(residue: &Arc<FqField>, precision: usize) -> Result<Arc<Self>, PadicError> {
        if precision == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        let modulus_pn = BigUint::from(residue.characteristic()).pow(precision as u32);
        Ok(Arc::new(PadicRing {
            residue: residue.clone(),
            precision,
            modulus_pn,
        }))
    }

    pub fn residue_field(&self) -> &Arc<FqField> {
        &self.residue
    }

    pub fn p(&self) -> u64 {
        self.residue.characteristic()
    }

    pub fn degree(&self) -> usize {
        self.residue.degree()
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// `p^N`.
    pub fn modulus(&self) -> &BigUint {
        &self.modulus_pn
    }

    /// The same ring at another precision.
    pub fn with_precision(&self, precision: usize) -> Result<Arc<Self>, PadicError> {
        Self::new(&self.residue, precision)
    }

    pub fn zero(self: &Arc<Self>) -> PadicInt {
        PadicInt::from_coords(self, vec![BigUint::default(); self.degree()])
    }

    pub fn one(self: &Arc<Self>) -> PadicInt {
        self.int(1)
    }

    pub fn int(self: &Arc<Self>, v: i64) -> PadicInt {
        let mut c = vec![BigUint::default(); self.degree()];
        let m = &self.modulus_pn;
        let mag = BigUint::from(v.unsigned_abs()) % m;
        c[0] = if v < 0 && mag != BigUint::default() {
            m - mag
        } else {
            mag
        };
        PadicInt::from_coords(self, c)
    }

    /// `p^e` (zero once `e >= N`).
    pub fn p_power(self: &Arc<Self>, e: usize) -> PadicInt {
        let mut c = vec![BigUint::default(); self.degree()];
        if e < self.precision {
            c[0] = BigUint::from(self.p()).pow(e as u32);
        }
        PadicInt::from_coords(self, c)
    }

    /// The canonical lift of a residue (coordinates in `[0, p)`).
    pub fn lift(self: &Arc<Self>, a: &Fq) -> PadicInt {
        assert_eq!(a.field(), &self.residue, "residue field mismatch");
        PadicInt::from_coords(self, a.coords().iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Element from integer coordinates, each reduced modulo `p^N`.
    pub fn from_coords(self: &Arc<Self>, coords: Vec<BigUint>) -> Result<PadicInt, PadicError> {
        if coords.len() != self.degree() {
            return Err(PadicError::CoordinateCount {
                expected: self.degree(),
                found: coords.len(),
            });
        }
        let c = coords.into_iter().map(|x| x % &self.modulus_pn).collect();
        Ok(PadicInt::from_coords(self, c))
    }
}
