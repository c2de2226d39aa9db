//! Seeded random instances for each lemma.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    cafure_matera_fraction, verify_leep_yeomans, verify_schmidt, verify_warning, CountReport,
    OracleError,
};
use crate::ff::{Fq, FqField};
use crate::forms::{monomials, Form, FqForm, Poly};
use crate::poly::{is_absolutely_irreducible, BiPoly};
use crate::residue::{build_h, NormalizedSystem, Shape};

fn rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8..16].copy_from_slice(&trial.to_le_bytes());
    ChaCha8Rng::from_seed(bytes)
}

pub fn random_form<R: Rng>(field: &Arc<FqField>, n: usize, d: usize, rng: &mut R) -> FqForm {
    let terms: Vec<(Vec<u8>, Fq)> = monomials(n, d)
        .into_iter()
        .map(|m| (m, field.random(rng)))
        .collect();
    Form::from_terms(field, n, d, terms).expect("homogeneous")
}

/// Dense random polynomial of degree `<= d`, resampled until nonzero.
pub fn random_poly<R: Rng>(field: &Arc<FqField>, n: usize, d: usize, rng: &mut R) -> Poly<Fq> {
    loop {
        let mut p = Poly::zero(field, n);
        for e in 0..=d {
            let monos = if e == 0 {
                vec![vec![0u8; n]]
            } else {
                monomials(n, e)
            };
            for m in monos {
                p.add_term(m.into(), field.random(rng));
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random absolutely irreducible plane curve of total degree exactly `d`.
pub fn random_curve<R: Rng>(
    field: &Arc<FqField>,
    d: usize,
    rng: &mut R,
) -> Result<BiPoly, OracleError> {
    loop {
        let mut terms = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                terms.push((i, j, field.random(rng)));
            }
        }
        let p = BiPoly::from_terms(field, &terms);
        if p.total_degree() == d && is_absolutely_irreducible(&p)? {
            return Ok(p);
        }
    }
}

/// The quartic `x2 f3 - f2 g2` of a random system `x1 f2 + f3`,
/// `x1 x2 + g2` in `n` variables, as a form in `x2, …, xn`.
pub fn random_step3_quartic<R: Rng>(field: &Arc<FqField>, n: usize, rng: &mut R) -> FqForm {
    let tail: Vec<usize> = (2..n).collect();
    let f2 = random_form(field, n - 2, 2, rng).embed_vars(n, &tail);
    let f3 = random_form(field, n - 1, 3, rng).embed_vars(n, &(1..n).collect::<Vec<_>>());
    let g2 = random_form(field, n - 2, 2, rng).embed_vars(n, &tail);
    let mut m = vec![0u8; n];
    m[0] = 1;
    let x1 = Form::from_terms(field, n, 1, [(m.clone(), field.one())]).expect("linear");
    m[1] = 1;
    let x1x2 = Form::from_terms(field, n, 2, [(m, field.one())]).expect("quadratic");
    let ns = NormalizedSystem {
        tau: crate::linalg::identity(field, n),
        shape: Shape::Deg1,
        f: x1.mul(&f2).add(&f3),
        g: x1x2.add(&g2),
        f2,
        f3,
        g2,
    };
    let h = build_h(&ns);
    let terms: Vec<(Vec<u8>, Fq)> = h
        .terms()
        .map(|(m, c)| (m[1..].to_vec(), c.clone()))
        .collect();
    Form::from_terms(field, n - 1, 4, terms).expect("homogeneous")
}

/// Random cubic plus quadratic forms in `m` variables.
pub fn warning_suite(
    q: u128,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<CountReport>, OracleError> {
    let field = field(q)?;
    (0..trials)
        .map(|t| {
            let mut r = rng(seed, t as u64);
            let f = random_form(&field, m, 3, &mut r);
            let g = random_form(&field, m, 2, &mut r);
            verify_warning(&field, &[f, g], m)
        })
        .collect()
}

pub fn schmidt_suite(
    q: u128,
    m: usize,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<CountReport>, OracleError> {
    let field = field(q)?;
    (0..trials)
        .map(|t| {
            let mut r = rng(seed, t as u64);
            let p = random_poly(&field, m, d, &mut r);
            verify_schmidt(&p, m, d)
        })
        .collect()
}

pub fn leep_yeomans_suite(
    q: u128,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<CountReport>, OracleError> {
    let field = field(q)?;
    (0..trials)
        .map(|t| {
            let mut r = rng(seed, t as u64);
            verify_leep_yeomans(&random_curve(&field, d, &mut r)?)
        })
        .collect()
}

/// One row: a quartic `H` of a random six-variable system when `d = 4`,
/// a random form of degree `d` in four variables otherwise.
pub fn cafure_matera_suite(
    q: u128,
    d: usize,
    trials: u64,
    seed: u64,
) -> Result<Vec<CountReport>, OracleError> {
    let field = field(q)?;
    let mut r = rng(seed, u64::MAX);
    let p = if d == 4 {
        random_step3_quartic(&field, 6, &mut r)
    } else {
        random_form(&field, 4, d, &mut r)
    };
    Ok(vec![cafure_matera_fraction(p.poly(), trials, seed)?])
}

fn field(q: u128) -> Result<Arc<FqField>, OracleError> {
    FqField::with_order(q).map_err(|e| OracleError::HypothesisNotMet(e.to_string()))
}
