//! Step 2: `g = x1 x2 + g2(x3, …)` and `f` free of `x1`. A nonsingular
//! zero `z` of `f` with `z2 ≠ 0` extends by `x1 = -g2(z)/z2`.

use rand::Rng;

use super::normal::{unit, NormalizedSystem};
use super::search::{is_zero_vec, random_vector, trial_rng, zeros_on_line};
use super::{ResidueError, ResidueOptions, Stage};
use crate::ff::Fq;
use crate::forms::{Form, FqForm};
use crate::poly::factor_bivariate;

const STAGE_DEG0: u64 = 3;

pub(crate) fn dot(a: &[Fq], b: &[Fq]) -> Fq {
    a.iter()
        .zip(b)
        .fold(a[0].field().zero(), |acc, (x, y)| acc + x * y)
}

/// A random vector supported on the coordinates in `support`.
fn supported<R: Rng>(n: usize, support: &[usize], f: &FqForm, rng: &mut R) -> Vec<Fq> {
    let field = f.field();
    let r = random_vector(field, support.len(), rng);
    let mut v = vec![field.zero(); n];
    for (k, &i) in support.iter().enumerate() {
        v[i] = r[k].clone();
    }
    v
}

/// A zero `z` of `f` supported on `support` with `∇f(z) ≠ 0` and
/// `accept(z)`. Singular zeros of a cubic are pushed off the singular
/// locus: if `f(e) = 0` and `∇f(e) = 0` then `f(te + w) = t ∂_e f(w) + f(w)`.
pub(crate) fn nonsingular_zero<R: Rng>(
    f: &FqForm,
    support: &[usize],
    accept: &dyn Fn(&[Fq]) -> bool,
    tries: usize,
    rng: &mut R,
) -> Option<Vec<Fq>> {
    let n = f.nvars();
    if f.is_zero() {
        return None;
    }
    for _ in 0..tries {
        let a = supported(n, support, f, rng);
        let b = supported(n, support, f, rng);
        for e in zeros_on_line(f, &a, &b) {
            let grad = f.gradient(&e).expect("dimension");
            if !is_zero_vec(&grad) {
                if accept(&e) {
                    return Some(e);
                }
                continue;
            }
            if f.degree() != 3 {
                continue;
            }
            for _ in 0..8 {
                let w = supported(n, support, f, rng);
                let c2 = dot(&f.gradient(&w).expect("dimension"), &e);
                if c2.is_zero() {
                    continue;
                }
                let t = -(f.evaluate(&w).expect("dimension") * c2.inv().expect("nonzero"));
                let x: Vec<Fq> = e.iter().zip(&w).map(|(ei, wi)| &t * ei + wi).collect();
                if accept(&x) && !is_zero_vec(&f.gradient(&x).expect("dimension")) {
                    return Some(x);
                }
            }
        }
    }
    None
}

pub fn solve_deg0(ns: &NormalizedSystem, opts: &ResidueOptions) -> Result<Vec<Fq>, ResidueError> {
    let f = &ns.f;
    let n = f.nvars();
    let field = f.field().clone();
    let mut rng = trial_rng(opts.seed, STAGE_DEG0, 0);
    let tries = opts.point_tries;
    let fail = |detail: String| ResidueError::SearchExhausted {
        stage: Stage::Step2,
        trials: tries,
        detail,
    };
    let delta = f.poly().degree_in(1);
    let from_x2: Vec<usize> = (1..n).collect();
    let from_x3: Vec<usize> = (2..n).collect();
    let z = match delta {
        0 => {
            let mut z = nonsingular_zero(f, &from_x3, &|_| true, tries, &mut rng)
                .ok_or_else(|| fail("δ = 0: no nonsingular zero of f(x3, …)".into()))?;
            z[1] = field.one();
            z
        }
        1 => {
            let a = Form::new(f.poly().coeff_in(1, 1), 2).expect("homogeneous");
            let b = Form::new(f.poly().coeff_in(1, 0), 3).expect("homogeneous");
            if b.is_zero() {
                // f = x2 a(x3, …): a nonsingular zero of a with x2 = 1
                let mut z = nonsingular_zero(&a, &from_x3, &|_| true, tries, &mut rng)
                    .ok_or_else(|| fail("δ = 1: f2 has no nonsingular zero".into()))?;
                z[1] = field.one();
                z
            } else {
                let mut found = None;
                for _ in 0..tries * 8 {
                    let w = supported(n, &from_x3, f, &mut rng);
                    let (av, bv) = (a.evaluate(&w).unwrap(), b.evaluate(&w).unwrap());
                    if !av.is_zero() && !bv.is_zero() {
                        let mut z = w;
                        z[1] = -(bv * av.inv().expect("nonzero"));
                        found = Some(z);
                        break;
                    }
                }
                found.ok_or_else(|| fail("δ = 1: f2 f3 vanished at every sample".into()))?
            }
        }
        2 => unit(&field, n, 1),
        _ => {
            let x2_nonzero = |z: &[Fq]| !z[1].is_zero();
            match nonsingular_zero(f, &from_x2, &x2_nonzero, tries, &mut rng) {
                Some(z) => z,
                None => {
                    let a = nonsingular_zero(f, &from_x3, &|_| true, tries, &mut rng)
                        .ok_or_else(|| fail("δ = 3: no nonsingular zero".into()))?;
                    t_slice(f, &a, tries, &mut rng)
                        .ok_or_else(|| fail("δ = 3: T-slice without nonsingular point".into()))?
                }
            }
        }
    };
    debug_assert!(f.evaluate(&z).unwrap().is_zero());
    let mut x = z;
    x[0] = field.zero();
    let g2 = ns.g2.evaluate(&x).expect("dimension");
    x[0] = -(g2 * x[1].inv().map_err(|_| fail("x2 vanished".into()))?);
    Ok(x)
}

/// `T(X, Y, Z) = f(X a + Y w + Z e2)` for a nonsingular zero `a` with
/// `a2 = 0`: its nonsingular points with `Z ≠ 0` have `x2 ≠ 0`. The affine
/// curve `Z = 1` is split into its components and each is walked.
fn t_slice<R: Rng>(f: &FqForm, a: &[Fq], tries: usize, rng: &mut R) -> Option<Vec<Fq>> {
    let n = f.nvars();
    let field = f.field().clone();
    let e2 = unit(&field, n, 1);
    let from_x3: Vec<usize> = (2..n).collect();
    for _ in 0..tries.min(16) {
        let w = supported(n, &from_x3, f, rng);
        let t = f.ternary(a, &w, &e2).ok()?;
        let curve = t.dehomogenize_ternary();
        if curve.is_zero() {
            continue;
        }
        for (factor, mult) in factor_bivariate(&curve) {
            if mult > 1 {
                continue;
            }
            for xv in field.elements() {
                let u = factor.eval_x(&xv);
                if u.is_zero() {
                    continue;
                }
                for yv in u.roots() {
                    let x: Vec<Fq> = (0..n).map(|i| &xv * &a[i] + &yv * &w[i] + &e2[i]).collect();
                    if !is_zero_vec(&f.gradient(&x).expect("dimension")) {
                        return Some(x);
                    }
                }
            }
        }
    }
    None
}
