use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use cubquad::minimize::{self, HCertificate, ReduceOptions};
use cubquad::oracles::{suites, CountReport, OracleError};
use cubquad::pipeline::{self, SolveError, SolveOptions, SolveReport};
use cubquad::residue::{self, ResidueError, ResidueOptions};
use cubquad::{FqField, PadicInt, PadicRing, PadicSystem, SystemFile};

/// Nontrivial p-adic zeros of a cubic and a quadratic form.
#[derive(Parser)]
#[command(name = "cubquad", version)]
struct Cli {
    /// Worker threads (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find a primitive zero modulo p^N.
    Solve {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        precision: Option<usize>,
        #[arg(long, default_value_t = 32)]
        max_moves: usize,
        /// Instead of solving, re-verify the x reported in a previous output.
        #[arg(long, value_name = "REPORT")]
        check: Option<PathBuf>,
    },
    /// Apply reduction moves and print the transcript.
    Reduce {
        file: PathBuf,
        #[arg(long, default_value_t = 32)]
        max_moves: usize,
    },
    /// Nonsingular common zero of the residue forms.
    ResidueSolve {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check a counting lemma on random instances; CSV on stdout.
    VerifyBounds {
        suite: String,
        #[arg(long, default_value_t = 5)]
        q: u128,
        #[arg(long, default_value_t = 6)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a random system file.
    Generate {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        precision: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Exhausted(String),
    Budget(String),
    Rejected(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Exhausted(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Rejected(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m)
            | Failure::Exhausted(m)
            | Failure::Budget(m)
            | Failure::Rejected(m) => m,
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match &e {
            SolveError::Residue(r) => residue_failure(r),
            SolveError::Padic(_) => Failure::Input(e.to_string()),
            _ => Failure::Exhausted(e.to_string()),
        }
    }
}

fn residue_failure(e: &ResidueError) -> Failure {
    match e {
        ResidueError::SearchExhausted { .. } | ResidueError::Verification => {
            Failure::Exhausted(e.to_string())
        }
        _ => Failure::Input(e.to_string()),
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn load(path: &PathBuf) -> Result<SystemFile, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    SystemFile::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn system(file: &SystemFile, precision: Option<usize>) -> Result<PadicSystem, Failure> {
    let s = file
        .system(None)
        .map_err(|e| Failure::Input(e.to_string()))?;
    match precision {
        Some(n) if n != file.precision => {
            let ring = PadicRing::new(s.ring().residue_field(), n)
                .map_err(|e| Failure::Input(e.to_string()))?;
            Ok(s.with_ring(&ring))
        }
        _ => Ok(s),
    }
}

fn warn_guarantee(s: &PadicSystem) {
    if !pipeline::theorem_applies(s) {
        eprintln!(
            "warning: n = {}, q = {}; existence is only guaranteed for n >= 14 and q > 293, trying anyway",
            s.nvars(),
            s.ring().residue_field().order()
        );
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        );
    } else {
        print!("{}", text(value));
    }
}

/// Reads `x1 … xn` from a text or JSON solve report.
fn reported_x(
    text: &str,
    ring: &std::sync::Arc<PadicRing>,
    n: usize,
) -> Result<Vec<PadicInt>, Failure> {
    let values: Vec<String> = if text.trim_start().starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Report {
            x: Vec<String>,
        }
        serde_json::from_str::<Report>(text)
            .map_err(|e| Failure::Input(format!("report: {e}")))?
            .x
    } else {
        (1..=n)
            .map(|i| {
                let key = format!("x{i} ");
                text.lines()
                    .find_map(|l| l.strip_prefix(&key).map(|v| v.trim().to_string()))
                    .ok_or_else(|| Failure::Input(format!("report: missing x{i}")))
            })
            .collect::<Result<_, _>>()?
    };
    if values.len() != n {
        return Err(Failure::Input(format!(
            "report: expected {n} coordinates, found {}",
            values.len()
        )));
    }
    values
        .iter()
        .map(|v| {
            let coords = v
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse()
                        .map_err(|_| Failure::Input(format!("report: bad coordinate `{v}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            ring.from_coords(coords)
                .map_err(|e| Failure::Input(format!("report: {e}")))
        })
        .collect()
}

#[derive(Serialize)]
struct CheckReport {
    check: &'static str,
    precision: usize,
}

#[derive(Serialize)]
struct HSummary {
    value: usize,
    lower: usize,
    mode: minimize::HMode,
}

impl From<&HCertificate> for HSummary {
    fn from(c: &HCertificate) -> Self {
        HSummary {
            value: c.value,
            lower: c.lower,
            mode: c.mode,
        }
    }
}

#[derive(Serialize)]
struct ReduceReport {
    moves: Vec<String>,
    precision: usize,
    reduced: bool,
    h_g: HSummary,
    h_f_shift: HSummary,
    h_system: HSummary,
}

#[derive(Serialize)]
struct ResidueReport {
    stage: &'static str,
    jacobian_rank: usize,
    x: Vec<String>,
    diagnostics: Vec<String>,
}

fn h_line(name: &str, h: &HSummary) -> String {
    let mode = match h.mode {
        minimize::HMode::Exact => "exact",
        minimize::HMode::UpperBound => "upper_bound",
    };
    format!("{name} {} {} {mode}\n", h.value, h.lower)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.cmd {
        Cmd::Solve {
            file,
            seed,
            precision,
            max_moves,
            check,
        } => {
            let f = load(&file)?;
            let s = system(&f, precision)?;
            if let Some(report) = check {
                let text = fs::read_to_string(&report)
                    .map_err(|e| Failure::Input(format!("{}: {e}", report.display())))?;
                let x = reported_x(&text, s.ring(), s.nvars())?;
                let ok = pipeline::check_zero(&s, &x).map_err(|e| Failure::Input(e.to_string()))?;
                let r = CheckReport {
                    check: if ok { "ok" } else { "failed" },
                    precision: s.precision(),
                };
                emit(json, &r, |r| {
                    format!("check {}\nN {}\n", r.check, r.precision)
                });
                return if ok {
                    Ok(())
                } else {
                    Err(Failure::Rejected(
                        "reported x is not a primitive zero".into(),
                    ))
                };
            }
            warn_guarantee(&s);
            let seed = seed.unwrap_or(f.seed);
            let sol = pipeline::solve(
                &s,
                &SolveOptions {
                    seed,
                    max_moves,
                    ..Default::default()
                },
            )?;
            let report = SolveReport::new(&s, seed, &sol);
            emit(json, &report, |r| r.to_text());
            Ok(())
        }
        Cmd::Reduce { file, max_moves } => {
            let f = load(&file)?;
            let s = system(&f, None)?;
            let red = minimize::reduce_fully(
                &s,
                &ReduceOptions {
                    max_moves,
                    ..Default::default()
                },
            )
            .map_err(|e| Failure::Exhausted(e.to_string()))?;
            let r = ReduceReport {
                moves: red.lines(),
                precision: red.system.precision(),
                reduced: red.report.all_satisfied(),
                h_g: (&red.report.h_g).into(),
                h_f_shift: (&red.report.h_f_shift).into(),
                h_system: (&red.report.h_system).into(),
            };
            emit(json, &r, |r| {
                let mut out = format!("moves {}\n", r.moves.len());
                for m in &r.moves {
                    out.push_str(&format!("move {m}\n"));
                }
                out.push_str(&format!(
                    "precision {}\nreduced {}\n",
                    r.precision, r.reduced
                ));
                out.push_str(&h_line("h_g", &r.h_g));
                out.push_str(&h_line("h_f_shift", &r.h_f_shift));
                out.push_str(&h_line("h_system", &r.h_system));
                out
            });
            Ok(())
        }
        Cmd::ResidueSolve { file, seed } => {
            let f = load(&file)?;
            let s = system(&f, None)?;
            warn_guarantee(&s);
            let (fr, gr) = s.reduce_mod_p();
            let opts = ResidueOptions {
                seed: seed.unwrap_or(f.seed),
                ..Default::default()
            };
            let sol = residue::solve_residue(&fr, &gr, &opts).map_err(|e| residue_failure(&e))?;
            let r = ResidueReport {
                stage: sol.stage.name(),
                jacobian_rank: sol.jacobian_rank,
                x: sol.x.iter().map(|c| c.to_string()).collect(),
                diagnostics: sol.diagnostics.lines(),
            };
            emit(json, &r, |r| {
                let mut out = format!("stage {}\njacobian_rank {}\n", r.stage, r.jacobian_rank);
                for d in &r.diagnostics {
                    out.push_str(&format!("diag {d}\n"));
                }
                out.push_str(&format!("x {}\n", r.x.join(" ")));
                out
            });
            Ok(())
        }
        Cmd::VerifyBounds {
            suite,
            q,
            m,
            d,
            trials,
            seed,
        } => {
            let rows: Vec<CountReport> = match suite.as_str() {
                "warning" => suites::warning_suite(q, m, trials, seed)?,
                "schmidt" => suites::schmidt_suite(q, m, d, trials, seed)?,
                "leep-yeomans" => suites::leep_yeomans_suite(q, d, trials, seed)?,
                "cafure-matera" => suites::cafure_matera_suite(q, d, trials as u64, seed)?,
                other => {
                    return Err(Failure::Input(format!(
                        "unknown suite `{other}` (warning, schmidt, leep-yeomans, cafure-matera)"
                    )))
                }
            };
            println!("{}", CountReport::CSV_HEADER);
            for r in &rows {
                println!("{}", r.csv_row());
            }
            let failed = rows.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                return Err(Failure::Rejected(format!(
                    "{failed} of {} instances failed",
                    rows.len()
                )));
            }
            Ok(())
        }
        Cmd::Generate {
            p,
            k,
            n,
            precision,
            seed,
        } => {
            let field = FqField::new(p, k, None).map_err(|e| Failure::Input(e.to_string()))?;
            let ring =
                PadicRing::new(&field, precision).map_err(|e| Failure::Input(e.to_string()))?;
            let s = pipeline::random_system(&ring, n, seed);
            print!("{}", SystemFile::from_system(&s, seed));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
