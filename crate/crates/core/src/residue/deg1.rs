//! Step 3: `f = x1 f2(x3, …) + f3(x2, …)`, `g = x1 x2 + g2(x3, …)`.
//!
//! Eliminating `x1 = -g2/x2` turns `f` into `H/x2` with the quartic
//! `H = x2 f3 - f2 g2`. Nonsingular points of `H` with `x2 ≠ 0` come back
//! as nonsingular zeros of the system, and are found on random plane
//! slices of `{H = 0}` that are absolutely irreducible curves.

use super::normal::NormalizedSystem;
use super::search::{first_success, jacobian_rank, trial_rng};
use super::{ResidueError, ResidueOptions, Stage};
use crate::ff::Fq;
use crate::forms::{Form, FqForm, SliceParams};
use crate::poly::is_absolutely_irreducible;

const STAGE_SLICE: u64 = 4;

/// `x2 f3 - f2 g2`, a quartic free of `x1`.
pub fn build_h(ns: &NormalizedSystem) -> FqForm {
    let n = ns.f.nvars();
    let field = ns.f.field();
    let mut m = vec![0u8; n];
    m[1] = 1;
    let x2 = Form::from_terms(field, n, 1, [(m, field.one())]).expect("linear");
    x2.mul(&ns.f3).sub(&ns.f2.mul(&ns.g2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceRejection {
    Reducible,
    X2Vanishing,
    NoPoint,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SliceStats {
    pub slices: usize,
    pub reducible: usize,
    pub x2_vanishing: usize,
    pub no_point: usize,
}

/// `H` as a form in `x2, …, xn` (slot 0 is `x2`).
fn drop_x1(h: &FqForm) -> FqForm {
    let n = h.nvars();
    let terms: Vec<(Vec<u8>, Fq)> = h
        .terms()
        .map(|(m, c)| (m[1..].to_vec(), c.clone()))
        .collect();
    Form::from_terms(h.field(), n - 1, h.degree(), terms).expect("homogeneous")
}

/// One slice: the first nonsingular system zero over it, scanning `X` then
/// the roots in `Y`.
pub fn try_slice(
    ns: &NormalizedSystem,
    h: &FqForm,
    xi: &SliceParams<Fq>,
) -> Result<Vec<Fq>, SliceRejection> {
    let field = h.field().clone();
    let n = ns.f.nvars();
    let curve = h.poly().slice_bipoly(xi).expect("slice length");
    if !matches!(is_absolutely_irreducible(&curve), Ok(true)) {
        return Err(SliceRejection::Reducible);
    }
    let (c0, c1, c2) = xi.coordinate(0);
    if c0.is_zero() && c1.is_zero() && c2.is_zero() {
        return Err(SliceRejection::X2Vanishing);
    }
    for xv in field.elements() {
        let u = curve.eval_x(&xv);
        if u.is_zero() {
            continue;
        }
        for yv in u.roots() {
            let z = xi.point(&xv, &yv);
            if z[0].is_zero() {
                continue;
            }
            let mut x = Vec::with_capacity(n);
            x.push(field.zero());
            x.extend(z);
            let g2 = ns.g2.evaluate(&x).expect("dimension");
            x[0] = -(g2 * x[1].inv().expect("x2 ≠ 0"));
            if jacobian_rank(&ns.f, &ns.g, &x) == 2 {
                debug_assert!(ns.f.evaluate(&x).unwrap().is_zero());
                return Ok(x);
            }
        }
    }
    Err(SliceRejection::NoPoint)
}

pub fn solve_deg1(
    ns: &NormalizedSystem,
    opts: &ResidueOptions,
) -> Result<(Vec<Fq>, SliceStats), ResidueError> {
    let n = ns.f.nvars();
    let field = ns.f.field().clone();
    let h = drop_x1(&build_h(ns));
    let (found, fails) = first_success(opts.slice_cap, |i| {
        let mut rng = trial_rng(opts.seed, STAGE_SLICE, i as u64);
        let xi = SliceParams::random(&field, n - 2, &mut rng);
        try_slice(ns, &h, &xi)
    });
    let mut stats = SliceStats::default();
    for e in &fails {
        match e {
            SliceRejection::Reducible => stats.reducible += 1,
            SliceRejection::X2Vanishing => stats.x2_vanishing += 1,
            SliceRejection::NoPoint => stats.no_point += 1,
        }
    }
    match found {
        Some((i, x)) => {
            stats.slices = i + 1;
            Ok((x, stats))
        }
        None => {
            stats.slices = opts.slice_cap;
            let hint = if stats.reducible == opts.slice_cap {
                "; every slice of H is reducible, as happens when h(f) <= 3"
            } else {
                ""
            };
            Err(ResidueError::SearchExhausted {
                stage: Stage::Step3,
                trials: stats.slices,
                detail: format!(
                    "slices rejected: {} reducible, {} x2-vanishing, {} no-point{}",
                    stats.reducible, stats.x2_vanishing, stats.no_point, hint
                ),
            })
        }
    }
}
