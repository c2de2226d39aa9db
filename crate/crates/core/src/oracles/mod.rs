//! Brute-force point counts and checks of the counting lemmas used by the
//! residue search: Warning's lower bound, Schmidt's upper bound, the
//! Leep–Yeomans bound for plane curves and the Cafure–Matera bound on bad
//! plane slices.

mod count;
pub mod suites;

pub use count::{count_affine_zeros, count_naive, DEFAULT_BUDGET};

use std::fmt;
use std::sync::Arc;

use num_integer::Roots;
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ff::{Fq, FqField};
use crate::forms::{homogenize, FqForm, Poly, SliceParams};
use crate::poly::{is_absolutely_irreducible, BiPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("q^m = {q}^{m} points exceeds the enumeration budget {budget}")]
    BudgetExceeded { q: u128, m: usize, budget: u128 },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("the curve is not absolutely irreducible")]
    NotAbsolutelyIrreducible,
    #[error("polynomials must live in the given field and have m variables")]
    DimensionMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma {
    Warning,
    Schmidt,
    LeepYeomans,
    CafureMatera,
}

impl Lemma {
    pub fn name(&self) -> &'static str {
        match self {
            Lemma::Warning => "warning",
            Lemma::Schmidt => "schmidt",
            Lemma::LeepYeomans => "leep-yeomans",
            Lemma::CafureMatera => "cafure-matera",
        }
    }
}

/// One checked instance. For Cafure–Matera `count` is the number of bad
/// slices out of `trials` and `bound` is the bound on their fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub lemma: Lemma,
    pub q: u128,
    pub params: String,
    pub count: u128,
    pub bound: Ratio<i128>,
    pub trials: Option<u64>,
    pub pass: bool,
}

impl CountReport {
    pub const CSV_HEADER: &'static str = "lemma,q,params,count,bound,pass";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.lemma.name(),
            self.q,
            self.params,
            self.count,
            self.bound,
            self.pass
        )
    }

    /// `count / trials`, when sampled.
    pub fn fraction(&self) -> Option<Ratio<i128>> {
        self.trials
            .map(|t| Ratio::new(self.count as i128, t.max(1) as i128))
    }
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.csv_row())
    }
}

fn pow(q: u128, e: usize) -> u128 {
    q.saturating_pow(e as u32)
}

/// Warning: `m > Σ d_i` forms have at least `q^{m - Σ d_i}` common zeros.
pub fn verify_warning(
    field: &Arc<FqField>,
    system: &[FqForm],
    m: usize,
) -> Result<CountReport, OracleError> {
    let delta: usize = system.iter().map(|f| f.degree()).sum();
    if m <= delta {
        return Err(OracleError::HypothesisNotMet(format!(
            "m = {m} <= delta = {delta}"
        )));
    }
    let polys: Vec<Poly<Fq>> = system.iter().map(|f| f.poly().clone()).collect();
    let count = count_affine_zeros(field, &polys, m, DEFAULT_BUDGET)?;
    let q = field.order();
    let bound = pow(q, m - delta);
    Ok(CountReport {
        lemma: Lemma::Warning,
        q,
        params: format!("m={m} delta={delta}"),
        count,
        bound: Ratio::from_integer(bound as i128),
        trials: None,
        pass: count >= bound,
    })
}

/// Schmidt: a nonzero polynomial of degree `<= d` has at most `d q^{m-1}`
/// zeros in `F_q^m`.
pub fn verify_schmidt(f: &Poly<Fq>, m: usize, d: usize) -> Result<CountReport, OracleError> {
    let deg = match f.total_degree() {
        Some(deg) if !f.is_zero() => deg,
        _ => {
            return Err(OracleError::HypothesisNotMet(
                "the polynomial is zero".into(),
            ))
        }
    };
    if deg > d || m == 0 {
        return Err(OracleError::HypothesisNotMet(format!(
            "degree {deg} > d = {d} or m = 0"
        )));
    }
    let field = f.ctx().clone();
    let count = count_affine_zeros(&field, std::slice::from_ref(f), m, DEFAULT_BUDGET)?;
    let q = field.order();
    let bound = (d as u128).saturating_mul(pow(q, m - 1));
    Ok(CountReport {
        lemma: Lemma::Schmidt,
        q,
        params: format!("m={m} d={d}"),
        count,
        bound: Ratio::from_integer(bound as i128),
        trials: None,
        pass: count <= bound,
    })
}

/// `floor(2 sqrt(q))`, computed as the integer square root of `4q`.
pub fn floor_two_sqrt(q: u128) -> u128 {
    (4 * q).sqrt()
}

/// `q + 1 - (d-1)(d-2)/2 · floor(2 sqrt(q))`.
pub fn leep_yeomans_bound(q: u128, d: usize) -> i128 {
    let g = ((d.max(1) - 1) * (d.max(2) - 2) / 2) as i128;
    q as i128 + 1 - g * floor_two_sqrt(q) as i128
}

/// Nonsingular points of the projective curve `F = 0`, `F` a ternary form.
pub fn count_projective_nonsingular(f: &FqForm) -> u128 {
    assert_eq!(f.nvars(), 3);
    let field = f.field();
    let (zero, one) = (field.zero(), field.one());
    let elems: Vec<Fq> = field.elements().collect();
    let mut reps: Vec<[Fq; 3]> = Vec::with_capacity(elems.len() * elems.len() + elems.len() + 1);
    for x in &elems {
        for y in &elems {
            reps.push([x.clone(), y.clone(), one.clone()]);
        }
    }
    for x in &elems {
        reps.push([x.clone(), one.clone(), zero.clone()]);
    }
    reps.push([one.clone(), zero.clone(), zero]);
    reps.iter()
        .filter(|p| {
            f.evaluate(&p[..]).expect("ternary").is_zero()
                && f.gradient(&p[..])
                    .expect("ternary")
                    .iter()
                    .any(|c| !c.is_zero())
        })
        .count() as u128
}

/// Leep–Yeomans: an absolutely irreducible plane curve of degree `d` has
/// at least `q + 1 - (d-1)(d-2)/2 · floor(2 sqrt(q))` nonsingular points.
pub fn verify_leep_yeomans(p: &BiPoly) -> Result<CountReport, OracleError> {
    if !is_absolutely_irreducible(p)? {
        return Err(OracleError::NotAbsolutelyIrreducible);
    }
    let d = p.total_degree();
    let q = p.field().order();
    let count = count_projective_nonsingular(&homogenize(p, d));
    let bound = leep_yeomans_bound(q, d);
    Ok(CountReport {
        lemma: Lemma::LeepYeomans,
        q,
        params: format!("d={d}"),
        count,
        bound: Ratio::from_integer(bound),
        trials: None,
        pass: count as i128 >= bound,
    })
}

/// `(3d^4 - 4d^3 + 5d^2) / 2`.
pub fn cafure_matera_numerator(d: usize) -> u128 {
    let d = d as u128;
    (3 * d.pow(4) - 4 * d.pow(3) + 5 * d.pow(2)) / 2
}

/// Samples `trials` plane slices of `p` (in `n + 1` variables) and counts
/// those that are not absolutely irreducible. Passes when the observed
/// fraction is at most `B + 3σ`, with `B = numerator / q` and
/// `σ² = B(1 - B) / trials`; the comparison is exact.
pub fn cafure_matera_fraction(
    p: &Poly<Fq>,
    trials: u64,
    seed: u64,
) -> Result<CountReport, OracleError> {
    let field = p.ctx().clone();
    let d = p.total_degree().unwrap_or(0);
    let n = p
        .nvars()
        .checked_sub(1)
        .ok_or(OracleError::DimensionMismatch)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0u64;
    for _ in 0..trials {
        let xi = SliceParams::random(&field, n, &mut rng);
        let c = p
            .slice_bipoly(&xi)
            .map_err(|_| OracleError::DimensionMismatch)?;
        if !is_absolutely_irreducible(&c)? {
            bad += 1;
        }
    }
    let q = field.order();
    let b = Ratio::new(cafure_matera_numerator(d) as i128, q as i128);
    let pass = within_three_sigma(bad, trials, b);
    Ok(CountReport {
        lemma: Lemma::CafureMatera,
        q,
        params: format!("d={d} n={n} trials={trials}"),
        count: bad as u128,
        bound: b,
        trials: Some(trials),
        pass,
    })
}

fn within_three_sigma(bad: u64, trials: u64, b: Ratio<i128>) -> bool {
    let one = Ratio::from_integer(1);
    if trials == 0 || b >= one {
        return true;
    }
    let t = Ratio::from_integer(trials as i128);
    let excess = Ratio::new(bad as i128, trials as i128) - b;
    if excess <= Ratio::from_integer(0) {
        return true;
    }
    excess * excess <= Ratio::from_integer(9) * b * (one - b) / t
}
