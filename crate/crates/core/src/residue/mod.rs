//! Nonsingular common zeros of a cubic and a quadratic form over `F_q`.
//!
//! Find a common zero with `∇g ≠ 0`, normalize `g` to `x1 x2 + g2` around
//! it, then either the zero is already nonsingular, or `f` has degree 0 or
//! 1 in `x1` and a nonsingular zero is built from a suitable zero of `f`
//! (degree 0) or of the quartic `H` (degree 1).

mod deg0;
mod deg1;
mod normal;
mod search;
mod step1;

pub use deg0::solve_deg0;
pub use deg1::{build_h, solve_deg1, try_slice, SliceRejection, SliceStats};
pub use normal::{normalize, Normalized, NormalizedSystem, Shape};
pub use search::jacobian_rank;
pub use step1::{find_zero_with_gradient, Step1Stats};

use serde::Serialize;
use thiserror::Error;

use crate::ff::Fq;
use crate::forms::FqForm;
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stage {
    #[serde(rename = "step1_direct")]
    Step1,
    #[serde(rename = "step2")]
    Step2,
    #[serde(rename = "step3")]
    Step3,
}

impl Stage {
    pub fn name(&self) -> &'static str {
        match self {
            Stage::Step1 => "step1_direct",
            Stage::Step2 => "step2",
            Stage::Step3 => "step3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step1Failure {
    NoCommonZero,
    AllSingular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("residue characteristic {0} is not supported (need p > 3)")]
    Characteristic(u64),
    #[error("the forms must be a nonzero cubic and quadratic in the same variables")]
    BadInput,
    #[error("{} search exhausted after {trials} trials: {detail}", stage.name())]
    SearchExhausted {
        stage: Stage,
        trials: usize,
        detail: String,
    },
    #[error("internal error: returned point failed verification")]
    Verification,
}

#[derive(Debug, Clone)]
pub struct ResidueOptions {
    pub seed: u64,
    pub plane_cap: usize,
    pub space_cap: usize,
    pub slice_cap: usize,
    /// Random lines or points tried in the Step 2 searches.
    pub point_tries: usize,
}

impl Default for ResidueOptions {
    fn default() -> Self {
        ResidueOptions {
            seed: 0,
            plane_cap: 64,
            space_cap: 4,
            slice_cap: 64,
            point_tries: 256,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResidueDiagnostics {
    pub step1: Step1Stats,
    pub shape: Option<&'static str>,
    pub slices: SliceStats,
}

impl ResidueDiagnostics {
    pub fn lines(&self) -> Vec<String> {
        let s = &self.step1;
        let mut out = vec![format!(
            "step1 planes={} spaces={} no_common_zero={} all_singular={}",
            s.planes, s.spaces, s.no_common_zero, s.all_singular
        )];
        if let Some(shape) = self.shape {
            out.push(format!("normalize shape={shape}"));
        }
        if self.slices.slices > 0 {
            let t = &self.slices;
            out.push(format!(
                "step3 slices={} reducible={} x2_vanishing={} no_point={}",
                t.slices, t.reducible, t.x2_vanishing, t.no_point
            ));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct ResidueSolution {
    pub x: Vec<Fq>,
    pub jacobian_rank: usize,
    pub stage: Stage,
    pub diagnostics: ResidueDiagnostics,
}

pub fn solve_residue(
    f: &FqForm,
    g: &FqForm,
    opts: &ResidueOptions,
) -> Result<ResidueSolution, ResidueError> {
    let field = f.field().clone();
    let p = field.characteristic();
    if p <= 3 {
        return Err(ResidueError::Characteristic(p));
    }
    if f.degree() != 3 || g.degree() != 2 || f.nvars() != g.nvars() || f.ctx() != g.ctx() {
        return Err(ResidueError::BadInput);
    }
    if f.is_zero() && g.is_zero() {
        return Err(ResidueError::BadInput);
    }
    let mut diag = ResidueDiagnostics::default();
    let (e1, stats) = find_zero_with_gradient(f, g, opts)?;
    diag.step1 = stats;
    let (x, stage) = match normalize(f, g, &e1) {
        Normalized::Nonsingular(x) => (x, Stage::Step1),
        Normalized::System(ns) => {
            let (y, stage) = match ns.shape {
                Shape::Deg0 => {
                    diag.shape = Some("deg0");
                    (solve_deg0(&ns, opts)?, Stage::Step2)
                }
                Shape::Deg1 => {
                    diag.shape = Some("deg1");
                    let (y, st) = solve_deg1(&ns, opts)?;
                    diag.slices = st;
                    (y, Stage::Step3)
                }
            };
            (linalg::mat_vec(&ns.tau, &y), stage)
        }
    };
    let rank = jacobian_rank(f, g, &x);
    let ok = !search::is_zero_vec(&x)
        && f.evaluate(&x).expect("dimension").is_zero()
        && g.evaluate(&x).expect("dimension").is_zero()
        && rank == 2;
    if !ok {
        return Err(ResidueError::Verification);
    }
    Ok(ResidueSolution {
        x,
        jacobian_rank: rank,
        stage,
        diagnostics: diag,
    })
}

#[cfg(test)]
mod tests;
