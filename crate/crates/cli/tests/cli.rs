use std::path::PathBuf;
use std::process::{Command, Output};

use num_bigint::BigInt;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cubquad"))
}

fn example() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/p307_n14.txt")
}

fn write(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn generate(p: u64, n: usize, prec: usize, seed: u64) -> String {
    let out = bin()
        .args([
            "generate",
            "--p",
            &p.to_string(),
            "--n",
            &n.to_string(),
            "--N",
            &prec.to_string(),
        ])
        .args(["--seed", &seed.to_string()])
        .output()
        .unwrap();
    assert!(out.status.success());
    text(&out)
}

#[test]
fn solve_then_check() {
    let out = bin().arg("solve").arg(example()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = text(&out);
    assert!(report.starts_with("status solved\n"));
    assert!(report.contains("\ntheorem_applies true\n"));
    let saved = write("report.txt", &report);
    let out = bin()
        .arg("solve")
        .arg(example())
        .arg("--check")
        .arg(&saved)
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let json = bin()
        .args(["--json", "solve"])
        .arg(example())
        .output()
        .unwrap();
    let saved = write("report.json", &text(&json));
    let out = bin()
        .arg("solve")
        .arg(example())
        .arg("--check")
        .arg(&saved)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn tampered_report_is_rejected() {
    let report = text(&bin().arg("solve").arg(example()).output().unwrap());
    let tampered: String = report
        .lines()
        .map(|l| {
            if l.starts_with("x3 ") {
                "x3 1".to_string()
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let saved = write("tampered.txt", &tampered);
    let out = bin()
        .arg("solve")
        .arg(example())
        .arg("--check")
        .arg(&saved)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn small_system_warns_and_solves() {
    let path = write("small.txt", &generate(7, 6, 6, 1));
    let out = bin().arg("solve").arg(&path).output().unwrap();
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("warning"), "{err}");
    assert!(text(&out).contains("theorem_applies false"));
}

/// Multiplying every cubic coefficient by `p` forces a content move.
#[test]
fn scaled_cubic_needs_a_move() {
    let file = std::fs::read_to_string(example()).unwrap();
    let mut cubic = false;
    let mut lines = Vec::new();
    for l in file.lines() {
        match l.trim() {
            "cubic:" => cubic = true,
            "quadratic:" => cubic = false,
            _ => {}
        }
        match l.split_once(" : ") {
            Some((m, c)) if cubic => {
                let c: BigInt = c.trim().parse().unwrap();
                lines.push(format!("{m} : {}", c * 307));
            }
            _ => lines.push(l.to_string()),
        }
    }
    let path = write("scaled.txt", &lines.join("\n"));
    let out = bin().arg("reduce").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = text(&out);
    assert!(!report.starts_with("moves 0\n"), "{report}");
    assert!(report.contains("\nmove content"), "{report}");
    assert!(report.contains("\nreduced true\n"));

    let out = bin().arg("solve").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reduced_system_has_empty_transcript() {
    let out = bin().arg("reduce").arg(example()).output().unwrap();
    assert!(text(&out).starts_with("moves 0\nprecision 16\nreduced true\n"));
}

#[test]
fn residue_solve_at_precision_one() {
    let path = write("n1.txt", &generate(307, 10, 1, 4));
    let out = bin().arg("residue-solve").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = text(&out);
    assert!(report.contains("jacobian_rank 2\n"));
    assert!(report.lines().any(|l| l.starts_with("x ")));
}

#[test]
fn exit_codes() {
    let out = bin().args(["verify-bounds", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let mut file = generate(7, 4, 3, 2);
    file.push_str("1 1 1 1 : 3\n");
    let bad = write("bad.txt", &file);
    let out = bin().arg("solve").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains(&format!("line {}", file.lines().count())),
        "{err}"
    );

    let out = bin()
        .arg("solve")
        .arg("/nonexistent/system.txt")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin()
        .args([
            "verify-bounds",
            "warning",
            "--q",
            "7",
            "--m",
            "12",
            "--trials",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let p3 = write(
        "p3.txt",
        "p = 3\nn = 2\nN = 2\nseed = 0\ncubic:\n3 0 : 1\nquadratic:\n0 2 : 1\n",
    );
    let out = bin().arg("solve").arg(&p3).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_bounds_prints_csv() {
    let out = bin()
        .args([
            "verify-bounds",
            "schmidt",
            "--q",
            "5",
            "--m",
            "2",
            "--d",
            "3",
            "--trials",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = text(&out);
    let mut lines = report.lines();
    assert_eq!(lines.next(), Some("lemma,q,params,count,bound,pass"));
    assert_eq!(
        lines
            .filter(|l| l.starts_with("schmidt,5,") && l.ends_with(",true"))
            .count(),
        4
    );
}

#[test]
fn seeds_are_reproducible() {
    assert_eq!(generate(11, 5, 4, 9), generate(11, 5, 4, 9));
    assert_ne!(generate(11, 5, 4, 9), generate(11, 5, 4, 10));
    let run = |seed: &str| {
        text(
            &bin()
                .args(["solve", "--seed", seed])
                .arg(example())
                .output()
                .unwrap(),
        )
    };
    assert_eq!(run("3"), run("3"));
}
