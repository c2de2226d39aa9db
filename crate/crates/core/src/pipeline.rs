//! Reduce, solve mod p, lift, transport back, verify.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::forms::{monomials, Form};
use crate::hensel::{self, HenselError, LiftResult};
use crate::minimize::{self, MinimizeError, ReduceOptions, Reduction};
use crate::padic::{PadicError, PadicInt, PadicRing, PadicSystem};
use crate::residue::{self, ResidueError, ResidueOptions, ResidueSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("reduction failed: {0}")]
    Reduce(#[from] MinimizeError),
    #[error("residue search failed: {0}")]
    Residue(#[from] ResidueError),
    #[error("lifting failed: {0}")]
    Hensel(#[from] HenselError),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error("the transported point is not a zero to {target} digits ({reached} reached)")]
    Precision { target: usize, reached: usize },
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub seed: u64,
    pub max_moves: usize,
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            seed: 0,
            max_moves: ReduceOptions::default().max_moves,
            budget: minimize::DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    /// Primitive zero modulo `p^N`.
    pub x: Vec<PadicInt>,
    pub reduction: Reduction,
    pub residue: ResidueSolution,
    pub lift: LiftResult,
    pub working_precision: usize,
    /// `v(x)` before the final division by a power of `p`.
    pub content: usize,
    /// Digits consumed by the moves and the final division.
    pub loss: usize,
    pub residual_valuations: (usize, usize),
}

/// Guarantees advertised by the main theorem: `n >= 14` and `q > 293`.
pub fn theorem_applies(s: &PadicSystem) -> bool {
    s.nvars() >= 14 && s.ring().residue_field().order() > 293
}

fn attempt(s: &PadicSystem, pad: usize, opts: &SolveOptions) -> Result<Solution, SolveError> {
    let target = s.precision();
    let work = PadicRing::new(s.ring().residue_field(), target + pad)?;
    let ws = s.with_ring(&work);
    let reduction = minimize::reduce_fully(
        &ws,
        &ReduceOptions {
            budget: opts.budget,
            max_moves: opts.max_moves,
        },
    )?;
    let (f, g) = reduction.system.reduce_mod_p();
    let res = residue::solve_residue(
        &f,
        &g,
        &ResidueOptions {
            seed: opts.seed,
            ..Default::default()
        },
    )?;
    let lift = hensel::lift(&reduction.system, &res.x, reduction.system.precision())?;
    let x = reduction.transport(&lift.x);
    let content = x.iter().map(|c| c.valuation()).min().unwrap_or(0);
    let x: Vec<PadicInt> = x
        .iter()
        .map(|c| c.div_p_pow(content).map(|c| c.with_ring(s.ring())))
        .collect::<Result<_, _>>()?;
    let (fv, gv) = s.evaluate(&x)?;
    let reached = fv.valuation().min(gv.valuation());
    if reached < target || x.iter().all(|c| !c.is_unit()) {
        return Err(SolveError::Precision { target, reached });
    }
    let moved: usize = reduction
        .moves
        .iter()
        .map(|m| m.reduction.c.0.max(m.reduction.c.1) as usize)
        .sum();
    Ok(Solution {
        x,
        working_precision: target + pad,
        content,
        loss: moved + 3 * content,
        residual_valuations: (fv.valuation(), gv.valuation()),
        reduction,
        residue: res,
        lift,
    })
}

/// A primitive zero of `s` modulo `p^N`, `N = s.precision()`. Runs with a
/// small precision margin first and retries with the worst-case margin.
pub fn solve(s: &PadicSystem, opts: &SolveOptions) -> Result<Solution, SolveError> {
    let p = s.ring().residue_field().characteristic();
    if p <= 3 {
        return Err(ResidueError::Characteristic(p).into());
    }
    let worst = 4 * opts.max_moves + 4;
    match attempt(s, 8.min(worst), opts) {
        Err(SolveError::Precision { .. })
        | Err(SolveError::Reduce(MinimizeError::PrecisionExhausted { .. }))
        | Err(SolveError::Reduce(MinimizeError::Precision { .. }))
            if worst > 8 =>
        {
            attempt(s, worst, opts)
        }
        r => r,
    }
}

/// Checks a claimed zero by direct substitution.
pub fn check_zero(s: &PadicSystem, x: &[PadicInt]) -> Result<bool, PadicError> {
    let (a, b) = s.evaluate(x)?;
    Ok(a.is_zero() && b.is_zero() && x.iter().any(|c| c.is_unit()))
}

/// A system with independent uniform coefficients modulo `p^N`.
pub fn random_system(ring: &Arc<PadicRing>, n: usize, seed: u64) -> PadicSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = ring.residue_field().clone();
    let digit = |rng: &mut ChaCha8Rng| {
        // base-p digits of each coordinate, high to low
        let mut c = ring.zero();
        let p = ring.p_power(1);
        for _ in 0..ring.precision() {
            c = c * p.clone() + ring.lift(&field.random(rng));
        }
        c
    };
    let mut form = |d: usize| {
        let terms: Vec<_> = monomials(n, d)
            .into_iter()
            .map(|m| (m, digit(&mut rng)))
            .collect();
        Form::from_terms(ring, n, d, terms).expect("homogeneous")
    };
    let f = form(3);
    let g = form(2);
    PadicSystem::new(f, g).expect("degrees")
}

/// Report shared by the text and JSON outputs.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub status: &'static str,
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub precision: usize,
    pub seed: u64,
    pub theorem_applies: bool,
    pub stage: &'static str,
    pub pivot: (usize, usize),
    pub residual_valuations: (usize, usize),
    pub step_valuations: Vec<usize>,
    pub working_precision: usize,
    pub loss: usize,
    pub moves: Vec<String>,
    pub residue_x: Vec<String>,
    pub diagnostics: Vec<String>,
    pub x: Vec<String>,
}

impl SolveReport {
    pub fn new(s: &PadicSystem, seed: u64, sol: &Solution) -> Self {
        let ring = s.ring();
        SolveReport {
            status: "solved",
            p: ring.p(),
            k: ring.degree(),
            n: s.nvars(),
            precision: ring.precision(),
            seed,
            theorem_applies: theorem_applies(s),
            stage: sol.residue.stage.name(),
            pivot: sol.lift.pivot,
            residual_valuations: sol.residual_valuations,
            step_valuations: sol.lift.step_valuations.clone(),
            working_precision: sol.working_precision,
            loss: sol.loss,
            moves: sol.reduction.lines(),
            residue_x: sol.residue.x.iter().map(|c| c.to_string()).collect(),
            diagnostics: sol.residue.diagnostics.lines(),
            x: sol.x.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            out.push_str(k);
            out.push(' ');
            out.push_str(&v);
            out.push('\n');
        };
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        kv("status", self.status.into());
        kv("p", self.p.to_string());
        kv("k", self.k.to_string());
        kv("n", self.n.to_string());
        kv("N", self.precision.to_string());
        kv("seed", self.seed.to_string());
        kv("theorem_applies", self.theorem_applies.to_string());
        kv("stage", self.stage.into());
        kv("pivot", format!("{} {}", self.pivot.0, self.pivot.1));
        kv(
            "residual_valuations",
            format!(
                "{} {}",
                self.residual_valuations.0, self.residual_valuations.1
            ),
        );
        kv("step_valuations", join(&self.step_valuations));
        kv("working_precision", self.working_precision.to_string());
        kv("loss", self.loss.to_string());
        kv("moves", self.moves.len().to_string());
        for m in &self.moves {
            kv("move", m.clone());
        }
        for d in &self.diagnostics {
            kv("diag", d.clone());
        }
        kv("residue_x", self.residue_x.join(" "));
        for (i, c) in self.x.iter().enumerate() {
            kv(&format!("x{}", i + 1), c.clone());
        }
        out
    }
}
