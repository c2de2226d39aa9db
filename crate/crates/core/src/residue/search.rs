//! Seeded trials run in parallel batches. The winner is the lowest index
//! that succeeds, so results do not depend on the number of threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::ff::{Fq, FqField};
use crate::forms::FqForm;
use crate::linalg;
use crate::poly::UniPoly;

use std::sync::Arc;

pub(crate) const BATCH: usize = 8;

pub(crate) fn trial_rng(seed: u64, stage: u64, index: u64) -> ChaCha8Rng {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8..16].copy_from_slice(&stage.to_le_bytes());
    bytes[16..24].copy_from_slice(&index.to_le_bytes());
    bytes[24..].copy_from_slice(b"cubquad!");
    ChaCha8Rng::from_seed(bytes)
}

/// Runs `trial(0), trial(1), …` up to `cap`, returning the first success
/// and the failures that precede it.
pub(crate) fn first_success<T, E>(
    cap: usize,
    trial: impl Fn(usize) -> Result<T, E> + Sync,
) -> (Option<(usize, T)>, Vec<E>)
where
    T: Send,
    E: Send,
{
    let mut failures = Vec::new();
    let mut start = 0;
    while start < cap {
        let end = (start + BATCH).min(cap);
        let results: Vec<Result<T, E>> = (start..end).into_par_iter().map(&trial).collect();
        for (i, r) in results.into_iter().enumerate() {
            match r {
                Ok(t) => return (Some((start + i, t)), failures),
                Err(e) => failures.push(e),
            }
        }
        start = end;
    }
    (None, failures)
}

pub(crate) fn random_vector<R: rand::Rng>(field: &Arc<FqField>, n: usize, rng: &mut R) -> Vec<Fq> {
    (0..n).map(|_| field.random(rng)).collect()
}

pub(crate) fn is_zero_vec(v: &[Fq]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Rank of the Jacobian `(∇f; ∇g)` at `x`.
pub fn jacobian_rank(f: &FqForm, g: &FqForm, x: &[Fq]) -> usize {
    let a = f.gradient(x).expect("dimension");
    let b = g.gradient(x).expect("dimension");
    linalg::rank(&vec![a, b])
}

/// `f(t a + b)` as a polynomial in `t`.
pub(crate) fn line_poly(f: &FqForm, a: &[Fq], b: &[Fq]) -> UniPoly {
    let field = f.field();
    let n = f.nvars();
    let m: Vec<Vec<Fq>> = (0..n).map(|i| vec![a[i].clone(), b[i].clone()]).collect();
    let r = f.restrict(&m).expect("dimension");
    let d = f.degree();
    let mut c = vec![field.zero(); d + 1];
    for (mono, v) in r.terms() {
        c[mono[0] as usize] = v.clone();
    }
    UniPoly::new(field, c)
}

/// Nonzero points of `{f = 0}` on a random line, if the line meets it.
pub(crate) fn zeros_on_line(f: &FqForm, a: &[Fq], b: &[Fq]) -> Vec<Vec<Fq>> {
    let p = line_poly(f, a, b);
    let mut out = Vec::new();
    if p.is_zero() {
        out.push(b.to_vec());
        return out;
    }
    for t in p.roots() {
        out.push(a.iter().zip(b).map(|(x, y)| &t * x + y).collect());
    }
    if p.deg() < f.degree() {
        // the point at infinity of the line
        out.push(a.to_vec());
    }
    out.retain(|v| !is_zero_vec(v));
    out
}

/// The univariate polynomial obtained from a form in `k` variables by
/// fixing all variables but `var`.
pub(crate) fn univariate_in(f: &FqForm, values: &[Fq], var: usize) -> UniPoly {
    let field = f.field();
    let mut c = vec![field.zero(); f.degree() + 1];
    for (mono, v) in f.terms() {
        let mut t = v.clone();
        for (i, &e) in mono.iter().enumerate() {
            if i != var && e > 0 {
                t = t * values[i].pow(e as u128);
            }
        }
        let k = mono[var] as usize;
        c[k] = &c[k] + &t;
    }
    UniPoly::new(field, c)
}
