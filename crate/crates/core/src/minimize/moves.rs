use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::hinv::{self, HCertificate};
use super::MinimizeError;
use crate::ff::Fq;
use crate::forms::Form;
use crate::linalg::{self, Matrix};
use crate::padic::matrix::{self as pm, PadicMatrix};
use crate::padic::{lift_form, PadicInt, PadicSystem};

/// The weights of the order on systems; a move is progress when
/// `c1 ω1 + c2 ω2 - s > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaWeights {
    pub omega1: BigRational,
    pub omega2: BigRational,
}

impl Default for OmegaWeights {
    fn default() -> Self {
        OmegaWeights {
            omega1: BigRational::new(BigInt::from(19), BigInt::from(6)),
            omega2: BigRational::new(BigInt::from(13), BigInt::from(6)),
        }
    }
}

impl OmegaWeights {
    pub fn progress(&self, c: (u32, u32), s: u32) -> BigRational {
        &self.omega1 * BigInt::from(c.0) + &self.omega2 * BigInt::from(c.1) - BigInt::from(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    /// Divides out a power of `p` common to all coefficients of a form.
    Content,
    QuadMove,
    CubicMove,
    BothMove,
}

impl MoveKind {
    pub fn name(&self) -> &'static str {
        match self {
            MoveKind::Content => "content",
            MoveKind::QuadMove => "quad",
            MoveKind::CubicMove => "cubic",
            MoveKind::BothMove => "both",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionMove {
    pub kind: MoveKind,
    /// Linear forms over `F_q` cutting out the subspace where the relevant
    /// forms vanish mod `p`.
    pub witness: Matrix,
    /// `L` in `F - LG`, lifted by canonical representatives.
    pub l: Option<Vec<Fq>>,
    pub scaled_vars: Vec<usize>,
    pub c: (u32, u32),
    pub s: u32,
}

impl ReductionMove {
    fn build(
        kind: MoveKind,
        witness: Matrix,
        l: Option<Vec<Fq>>,
        n: usize,
        r: usize,
        c: (u32, u32),
    ) -> Self {
        let r = r.min(n);
        let m = ReductionMove {
            kind,
            witness,
            l,
            scaled_vars: (0..r).collect(),
            c,
            s: r as u32,
        };
        assert!(
            m.progress(&OmegaWeights::default()) > BigRational::from_integer(0.into()),
            "move must decrease the order"
        );
        m
    }

    pub fn content(c: (u32, u32)) -> Self {
        Self::build(MoveKind::Content, Vec::new(), None, 0, 0, c)
    }

    /// `G` vanishes mod `p` on the subspace cut out by `witness` (at most 2
    /// forms).
    pub fn quad(witness: Matrix, n: usize) -> Self {
        Self::build(MoveKind::QuadMove, witness, None, n, 2, (0, 1))
    }

    /// `F - LG` vanishes mod `p` on the subspace cut out by `witness` (at
    /// most 3 forms).
    pub fn cubic(witness: Matrix, l: Vec<Fq>, n: usize) -> Self {
        let l = l.iter().any(|x| !x.is_zero()).then_some(l);
        Self::build(MoveKind::CubicMove, witness, l, n, 3, (1, 0))
    }

    /// `F` and `G` both vanish mod `p` on the subspace cut out by `witness`
    /// (at most 5 forms).
    pub fn both(witness: Matrix, n: usize) -> Self {
        Self::build(MoveKind::BothMove, witness, None, n, 5, (1, 1))
    }

    pub fn progress(&self, w: &OmegaWeights) -> BigRational {
        w.progress(self.c, self.s)
    }
}

/// Applies a move, returning the new system and the matrix `τ` with
/// `x = τ y` carrying zeros of the new system to zeros of the old one.
pub fn apply_move(
    s: &PadicSystem,
    m: &ReductionMove,
) -> Result<(PadicSystem, PadicMatrix), MinimizeError> {
    let ring = s.ring().clone();
    let n = s.nvars();
    if m.kind == MoveKind::Content {
        let out = s
            .divide_p_powers(m.c.0 as usize, m.c.1 as usize)
            .map_err(MinimizeError::from_padic)?;
        return Ok((out, pm::identity(&ring, n)));
    }
    let r = m.scaled_vars.len();
    if m.witness.len() > r {
        return Err(MinimizeError::WitnessTooLarge {
            rows: m.witness.len(),
            max: r,
        });
    }
    let field = ring.residue_field().clone();
    let full = linalg::complete_basis(&m.witness, n, &field);
    let tau0 = pm::inverse(&pm::lift_matrix(&ring, &full))?;
    let p = ring.p_power(1);
    let tau: PadicMatrix = tau0
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .map(|(j, x)| if j < r { x * p.clone() } else { x })
                .collect()
        })
        .collect();
    let mut t = s.substitute_linear(&tau)?;
    if let Some(l) = &m.l {
        let lf = Form::from_terms(
            &field,
            n,
            1,
            (0..n).map(|i| {
                let mut e = vec![0u8; n];
                e[i] = 1;
                (e, l[i].clone())
            }),
        )
        .expect("linear");
        let lt = lift_form(&ring, &lf).substitute_linear(&tau)?;
        let f = t.f().sub(&lt.mul(t.g()));
        t = PadicSystem::new(f, t.g().clone())?;
    }
    let out = t
        .divide_p_powers(m.c.0 as usize, m.c.1 as usize)
        .map_err(MinimizeError::from_padic)?;
    Ok((out, tau))
}

/// The three conditions on the residue system.
#[derive(Debug, Clone)]
pub struct ReducedReport {
    pub h_g: HCertificate,
    pub h_f_shift: HCertificate,
    pub h_system: HCertificate,
}

impl ReducedReport {
    pub const THRESHOLDS: [usize; 3] = [2, 3, 5];

    fn certs(&self) -> [&HCertificate; 3] {
        [&self.h_g, &self.h_f_shift, &self.h_system]
    }

    /// `h(g) > 2`, `min_l h(f - lg) > 3`, `h(f, g) > 5`, as far as the
    /// witnesses show.
    pub fn satisfied(&self) -> [bool; 3] {
        let c = self.certs();
        std::array::from_fn(|i| c[i].value > Self::THRESHOLDS[i])
    }

    /// Whether each entry of `satisfied` is proven rather than the absence
    /// of a witness.
    pub fn decided(&self) -> [bool; 3] {
        let c = self.certs();
        std::array::from_fn(|i| c[i].decides(Self::THRESHOLDS[i]))
    }

    pub fn all_satisfied(&self) -> bool {
        self.satisfied().iter().all(|&b| b)
    }
}

pub fn check_reduced(s: &PadicSystem, budget: u64) -> ReducedReport {
    let (f, g) = s.reduce_mod_p();
    ReducedReport {
        h_g: hinv::h_invariant(&g, budget),
        h_f_shift: hinv::h_invariant_shifted(&f, &g, budget),
        h_system: hinv::h_invariant_system(&f, &g, budget),
    }
}

#[derive(Debug, Clone)]
pub struct ReduceOptions {
    pub budget: u64,
    pub max_moves: usize,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            budget: hinv::DEFAULT_BUDGET,
            max_moves: 32,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AppliedMove {
    pub reduction: ReductionMove,
    pub tau: PadicMatrix,
    /// `v(det τ)` as actually applied.
    pub det_valuation: u32,
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub system: PadicSystem,
    pub moves: Vec<AppliedMove>,
    pub report: ReducedReport,
}

impl Reduction {
    /// Pulls a zero of the reduced system back to the original coordinates.
    pub fn transport(&self, y: &[PadicInt]) -> Vec<PadicInt> {
        let mut x = y.to_vec();
        for m in self.moves.iter().rev() {
            let ring = m.tau[0][0].ring().clone();
            let lifted: Vec<PadicInt> = x.iter().map(|c| c.with_ring(&ring)).collect();
            x = pm::mat_vec(&m.tau, &lifted);
        }
        x
    }

    /// One line per move: `kind c1 c2 s det_valuation`.
    pub fn lines(&self) -> Vec<String> {
        self.moves
            .iter()
            .map(|m| {
                let r = &m.reduction;
                format!(
                    "{} {} {} {} {}",
                    r.kind.name(),
                    r.c.0,
                    r.c.1,
                    r.s,
                    m.det_valuation
                )
            })
            .collect()
    }
}

/// Applies moves until the residue system meets the three conditions or no
/// nontrivial witness is known.
pub fn reduce_fully(s: &PadicSystem, opts: &ReduceOptions) -> Result<Reduction, MinimizeError> {
    let mut cur = s.clone();
    let mut moves = Vec::new();
    let n = s.nvars();
    loop {
        let (f, g) = cur.reduce_mod_p();
        let m = if f.is_zero() || g.is_zero() {
            Some(ReductionMove::content((
                f.is_zero() as u32,
                g.is_zero() as u32,
            )))
        } else {
            let report = check_reduced(&cur, opts.budget);
            let proper = |c: &HCertificate, t: usize| c.value <= t && c.value < n;
            if proper(&report.h_g, 2) {
                Some(ReductionMove::quad(report.h_g.witness.clone(), n))
            } else if proper(&report.h_f_shift, 3) {
                let l = report
                    .h_f_shift
                    .shift
                    .clone()
                    .expect("shifted search reports l");
                Some(ReductionMove::cubic(report.h_f_shift.witness.clone(), l, n))
            } else if proper(&report.h_system, 5) {
                Some(ReductionMove::both(report.h_system.witness.clone(), n))
            } else {
                return Ok(Reduction {
                    system: cur,
                    moves,
                    report,
                });
            }
        };
        let m = m.expect("a move was chosen");
        if moves.len() >= opts.max_moves {
            return Err(MinimizeError::PrecisionExhausted { moves: moves.len() });
        }
        let (next, tau) = apply_move(&cur, &m).map_err(|e| match e {
            MinimizeError::Precision { .. } => {
                MinimizeError::PrecisionExhausted { moves: moves.len() }
            }
            e => e,
        })?;
        let det_valuation = m.s;
        moves.push(AppliedMove {
            reduction: m,
            tau,
            det_valuation,
        });
        cur = next;
    }
}
