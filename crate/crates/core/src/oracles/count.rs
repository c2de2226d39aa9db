//! Exhaustive zero counting over `F_q^m`.

use rayon::prelude::*;

use super::OracleError;
use crate::ff::{FieldTables, Fq, FqField};
use crate::forms::Poly;

use std::sync::Arc;

/// Default cap on the number of points enumerated.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// A polynomial compiled to element indices.
struct Compiled {
    terms: Vec<(u16, Vec<(usize, u8)>)>,
}

impl Compiled {
    fn new(p: &Poly<Fq>, t: &FieldTables) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| {
                let vars = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (i, e))
                    .collect();
                (t.index_of(c), vars)
            })
            .collect();
        Compiled { terms }
    }

    #[inline]
    fn eval(&self, t: &FieldTables, pows: &[Vec<u16>], x: &[u16]) -> u16 {
        let mut acc = 0u16;
        for (c, vars) in &self.terms {
            let mut v = *c;
            for &(i, e) in vars {
                v = t.mul(v, pows[x[i] as usize][e as usize]);
            }
            acc = t.add(acc, v);
        }
        acc
    }
}

fn check(field: &Arc<FqField>, system: &[Poly<Fq>], m: usize) -> Result<(), OracleError> {
    if system.iter().any(|p| p.nvars() != m || p.ctx() != field) {
        return Err(OracleError::DimensionMismatch);
    }
    Ok(())
}

fn points(q: u128, m: usize, budget: u128) -> Result<u128, OracleError> {
    match q.checked_pow(m as u32) {
        Some(n) if n <= budget => Ok(n),
        _ => Err(OracleError::BudgetExceeded { q, m, budget }),
    }
}

/// Number of common zeros in `F_q^m`. Uses index tables and splits the
/// enumeration on the first coordinate across threads.
pub fn count_affine_zeros(
    field: &Arc<FqField>,
    system: &[Poly<Fq>],
    m: usize,
    budget: u128,
) -> Result<u128, OracleError> {
    check(field, system, m)?;
    let q = field.order();
    let total = points(q, m, budget)?;
    if system.is_empty() || system.iter().all(|p| p.is_zero()) {
        return Ok(total);
    }
    if m == 0 {
        let ok = system
            .iter()
            .all(|p| p.evaluate(&[]).map(|v| v.is_zero()).unwrap_or(false));
        return Ok(ok as u128);
    }
    let Some(t) = FieldTables::new(field) else {
        return count_naive(field, system, m, budget);
    };
    let qs = q as usize;
    let maxdeg = system
        .iter()
        .filter_map(|p| p.total_degree())
        .max()
        .unwrap_or(0)
        .max(1);
    let pows: Vec<Vec<u16>> = (0..qs)
        .map(|a| {
            let mut row = vec![1u16; maxdeg + 1];
            for e in 1..=maxdeg {
                row[e] = t.mul(row[e - 1], a as u16);
            }
            row
        })
        .collect();
    let compiled: Vec<Compiled> = system.iter().map(|p| Compiled::new(p, &t)).collect();
    let count = (0..qs)
        .into_par_iter()
        .map(|first| {
            let mut x = vec![0u16; m];
            x[0] = first as u16;
            let mut c: u128 = 0;
            loop {
                if compiled.iter().all(|p| p.eval(&t, &pows, &x) == 0) {
                    c += 1;
                }
                // odometer over x[1..], last coordinate fastest
                let mut k = m;
                loop {
                    if k == 1 {
                        return c;
                    }
                    k -= 1;
                    x[k] += 1;
                    if (x[k] as usize) < qs {
                        break;
                    }
                    x[k] = 0;
                }
            }
        })
        .sum();
    Ok(count)
}

/// The same count by straightforward evaluation, first coordinate fastest.
pub fn count_naive(
    field: &Arc<FqField>,
    system: &[Poly<Fq>],
    m: usize,
    budget: u128,
) -> Result<u128, OracleError> {
    check(field, system, m)?;
    let q = field.order();
    let total = points(q, m, budget)?;
    let elems: Vec<Fq> = field.elements().collect();
    let mut count = 0;
    for idx in 0..total {
        let mut r = idx;
        let x: Vec<Fq> = (0..m)
            .map(|_| {
                let e = elems[(r % q) as usize].clone();
                r /= q;
                e
            })
            .collect();
        if system
            .iter()
            .all(|p| p.evaluate(&x).map(|v| v.is_zero()).unwrap_or(false))
        {
            count += 1;
        }
    }
    Ok(count)
}
