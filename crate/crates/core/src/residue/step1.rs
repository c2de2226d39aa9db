//! A common zero of `f` and `g` at which `∇g` does not vanish.
//!
//! Random planes first: on a plane the system is a cubic and a conic, and
//! their common points are read off from the conic one vertical line at a
//! time. If that keeps failing we widen to random 3-spaces.

use std::sync::Arc;

use super::search::{first_success, is_zero_vec, random_vector, trial_rng, univariate_in};
use super::{ResidueError, ResidueOptions, Stage, Step1Failure};
use crate::ff::{Fq, FqField};
use crate::forms::FqForm;

const STAGE_PLANE: u64 = 1;
const STAGE_SPACE: u64 = 2;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Step1Stats {
    pub planes: usize,
    pub spaces: usize,
    pub no_common_zero: usize,
    pub all_singular: usize,
}

pub fn find_zero_with_gradient(
    f: &FqForm,
    g: &FqForm,
    opts: &ResidueOptions,
) -> Result<(Vec<Fq>, Step1Stats), ResidueError> {
    let n = f.nvars();
    let field = f.field().clone();
    let mut stats = Step1Stats::default();
    let tally = |stats: &mut Step1Stats, fails: &[Step1Failure]| {
        for e in fails {
            match e {
                Step1Failure::NoCommonZero => stats.no_common_zero += 1,
                Step1Failure::AllSingular => stats.all_singular += 1,
            }
        }
    };

    let (found, fails) = first_success(opts.plane_cap, |i| {
        let mut rng = trial_rng(opts.seed, STAGE_PLANE, i as u64);
        let basis: Vec<Vec<Fq>> = (0..3).map(|_| random_vector(&field, n, &mut rng)).collect();
        search_subspace(f, g, &basis, &field)
    });
    tally(&mut stats, &fails);
    if let Some((i, x)) = found {
        stats.planes = i + 1;
        return Ok((x, stats));
    }
    stats.planes = opts.plane_cap;

    let (found, fails) = first_success(opts.space_cap, |i| {
        let mut rng = trial_rng(opts.seed, STAGE_SPACE, i as u64);
        let basis: Vec<Vec<Fq>> = (0..4).map(|_| random_vector(&field, n, &mut rng)).collect();
        search_subspace(f, g, &basis, &field)
    });
    tally(&mut stats, &fails);
    if let Some((i, x)) = found {
        stats.spaces = i + 1;
        return Ok((x, stats));
    }
    stats.spaces = opts.space_cap;
    Err(ResidueError::SearchExhausted {
        stage: Stage::Step1,
        trials: stats.planes + stats.spaces,
        detail: format!(
            "{} planes without common zero, {} with only ∇g = 0 zeros",
            stats.no_common_zero, stats.all_singular
        ),
    })
}

/// Affine points (last coordinate 1) of the projective span of `basis`
/// where both forms vanish and `∇g ≠ 0`; the first one in enumeration order.
fn search_subspace(
    f: &FqForm,
    g: &FqForm,
    basis: &[Vec<Fq>],
    field: &Arc<FqField>,
) -> Result<Vec<Fq>, Step1Failure> {
    let n = f.nvars();
    let k = basis.len();
    let m: Vec<Vec<Fq>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    let fr = f.restrict(&m).expect("dimension");
    let gr = g.restrict(&m).expect("dimension");
    let (rooted, other) = if gr.is_zero() { (&fr, &gr) } else { (&gr, &fr) };
    let solve_var = k - 2;
    let elems: Vec<Fq> = field.elements().collect();
    let free = k - 2;
    let mut idx = vec![0usize; free];
    let mut any_zero = false;
    loop {
        let mut values = vec![field.zero(); k];
        for (j, &t) in idx.iter().enumerate() {
            values[j] = elems[t].clone();
        }
        values[k - 1] = field.one();
        let u = univariate_in(rooted, &values, solve_var);
        let roots: Vec<Fq> = if u.is_zero() {
            elems.clone()
        } else {
            u.roots()
        };
        for r in roots {
            values[solve_var] = r;
            if !other.evaluate(&values).expect("dimension").is_zero() {
                continue;
            }
            let x: Vec<Fq> = (0..n)
                .map(|i| (0..k).fold(field.zero(), |acc, j| acc + &values[j] * &basis[j][i]))
                .collect();
            if is_zero_vec(&x) {
                continue;
            }
            any_zero = true;
            if !is_zero_vec(&g.gradient(&x).expect("dimension")) {
                debug_assert!(
                    f.evaluate(&x).unwrap().is_zero() && g.evaluate(&x).unwrap().is_zero()
                );
                return Ok(x);
            }
        }
        let mut j = 0;
        while j < free {
            idx[j] += 1;
            if idx[j] < elems.len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == free {
            break;
        }
    }
    Err(if any_zero {
        Step1Failure::AllSingular
    } else {
        Step1Failure::NoCommonZero
    })
}
