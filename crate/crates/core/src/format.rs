//! The plain-text system file.
//!
//! ```text
//! # comments and blank lines are ignored
//! p = 307
//! k = 1
//! n = 3
//! N = 16
//! seed = 1
//! cubic:
//! 3 0 0 : 1
//! 0 1 2 : -5
//! quadratic:
//! 1 1 0 : 1
//! ```
//!
//! For `k > 1` an optional `modulus = m0,m1,…,mk` gives the monic residue
//! modulus low-to-high, and coefficients are `c0,c1,…` in the basis
//! `1, t, …, t^{k-1}`. Coefficients are reduced modulo `p^N` on load.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use thiserror::Error;

use crate::ff::FqField;
use crate::forms::{parse_monomial_line, Form, Monomial};
use crate::padic::{PadicInt, PadicRing, PadicSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    /// 1-based; 0 for problems not tied to a line.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

pub type Coefficient = Vec<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub p: u64,
    pub k: usize,
    pub modulus: Option<Vec<u64>>,
    pub n: usize,
    pub precision: usize,
    pub seed: u64,
    pub cubic: Vec<(Monomial, Coefficient)>,
    pub quadratic: Vec<(Monomial, Coefficient)>,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Header,
    Cubic,
    Quadratic,
}

fn parse_coefficient(text: &str, k: usize) -> Result<Coefficient, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() > k {
        return Err(format!(
            "coefficient has {} coordinates, k = {k}",
            parts.len()
        ));
    }
    let mut c = parts
        .iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| format!("bad coefficient `{s}`"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    c.resize(k, BigInt::default());
    Ok(c)
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut p = None;
        let mut k = None;
        let mut n = None;
        let mut prec = None;
        let mut seed = None;
        let mut modulus = None;
        let mut section = Section::Header;
        let mut cubic = Vec::new();
        let mut quadratic = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match line {
                "cubic:" => {
                    section = Section::Cubic;
                    continue;
                }
                "quadratic:" => {
                    section = Section::Quadratic;
                    continue;
                }
                _ => {}
            }
            if section == Section::Header {
                let (key, value) = line
                    .split_once('=')
                    .ok_or_else(|| err(ln, "expected `key = value` or a section header"))?;
                let value = value.trim();
                let num = |v: &str| {
                    v.parse::<u64>()
                        .map_err(|_| err(ln, format!("bad value `{v}`")))
                };
                match key.trim() {
                    "p" => p = Some(num(value)?),
                    "k" => k = Some(num(value)? as usize),
                    "n" => n = Some(num(value)? as usize),
                    "N" => prec = Some(num(value)? as usize),
                    "seed" => seed = Some(num(value)?),
                    "modulus" => {
                        modulus = Some(
                            value
                                .split(',')
                                .map(|v| num(v.trim()))
                                .collect::<Result<Vec<_>, _>>()?,
                        )
                    }
                    other => return Err(err(ln, format!("unknown key `{other}`"))),
                }
                continue;
            }
            let (nv, kk) = match (n, k) {
                (Some(nv), Some(kk)) => (nv, kk),
                (Some(nv), None) => (nv, 1),
                _ => return Err(err(ln, "`n` must be declared before the monomials")),
            };
            let (m, c) = parse_monomial_line(line, nv).map_err(|e| err(ln, e))?;
            let deg: usize = m.iter().map(|&e| e as usize).sum();
            let want = if section == Section::Cubic { 3 } else { 2 };
            if deg != want {
                return Err(err(
                    ln,
                    format!("monomial has degree {deg}, expected {want}"),
                ));
            }
            let c = parse_coefficient(c, kk).map_err(|e| err(ln, e))?;
            if section == Section::Cubic {
                cubic.push((m, c));
            } else {
                quadratic.push((m, c));
            }
        }
        let missing = |name: &str| err(0, format!("missing header `{name}`"));
        let file = SystemFile {
            p: p.ok_or_else(|| missing("p"))?,
            k: k.unwrap_or(1),
            modulus,
            n: n.ok_or_else(|| missing("n"))?,
            precision: prec.ok_or_else(|| missing("N"))?,
            seed: seed.ok_or_else(|| missing("seed"))?,
            cubic,
            quadratic,
        };
        if file.n == 0 || file.precision == 0 || file.k == 0 {
            return Err(err(0, "n, k and N must be positive"));
        }
        file.field()?;
        Ok(file)
    }

    pub fn field(&self) -> Result<Arc<FqField>, FormatError> {
        FqField::new(self.p, self.k, self.modulus.as_deref()).map_err(|e| err(0, e.to_string()))
    }

    /// The system at the file's precision, or at `precision` if given
    /// (coefficients are then their canonical lifts).
    pub fn system(&self, precision: Option<usize>) -> Result<PadicSystem, FormatError> {
        let field = self.field()?;
        let ring = PadicRing::new(&field, precision.unwrap_or(self.precision))
            .map_err(|e| err(0, e.to_string()))?;
        let file_mod = BigUint::from(self.p).pow(self.precision as u32);
        let conv = |c: &Coefficient| -> PadicInt {
            let coords = c
                .iter()
                .map(|x| {
                    let r = x.mod_floor(&BigInt::from(file_mod.clone()));
                    r.to_biguint().expect("nonnegative")
                })
                .collect();
            ring.from_coords(coords).expect("k coordinates")
        };
        let form = |terms: &[(Monomial, Coefficient)], d| {
            Form::from_terms(
                &ring,
                self.n,
                d,
                terms.iter().map(|(m, c)| (m.clone(), conv(c))),
            )
            .map_err(|e| err(0, e.to_string()))
        };
        PadicSystem::new(form(&self.cubic, 3)?, form(&self.quadratic, 2)?)
            .map_err(|e| err(0, e.to_string()))
    }

    pub fn from_system(s: &PadicSystem, seed: u64) -> Self {
        let ring = s.ring();
        let terms = |f: &crate::padic::PadicForm| -> Vec<(Monomial, Coefficient)> {
            f.terms()
                .rev()
                .map(|(m, c)| {
                    (
                        m.clone(),
                        c.coords()
                            .iter()
                            .map(|x| BigInt::from_biguint(Sign::Plus, x.clone()))
                            .collect(),
                    )
                })
                .collect()
        };
        let field = ring.residue_field();
        SystemFile {
            p: ring.p(),
            k: ring.degree(),
            modulus: (ring.degree() > 1).then(|| field.modulus().to_vec()),
            n: s.nvars(),
            precision: ring.precision(),
            seed,
            cubic: terms(s.f()),
            quadratic: terms(s.g()),
        }
    }
}

fn coefficient_text(c: &Coefficient) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}

impl fmt::Display for SystemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p = {}", self.p)?;
        writeln!(f, "k = {}", self.k)?;
        if let Some(m) = &self.modulus {
            let parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
            writeln!(f, "modulus = {}", parts.join(","))?;
        }
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "N = {}", self.precision)?;
        writeln!(f, "seed = {}", self.seed)?;
        for (name, terms) in [("cubic:", &self.cubic), ("quadratic:", &self.quadratic)] {
            writeln!(f, "{name}")?;
            for (m, c) in terms {
                let exps: Vec<String> = m.iter().map(|e| e.to_string()).collect();
                writeln!(f, "{} : {}", exps.join(" "), coefficient_text(c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# sample
p = 7
k = 1
n = 3
N = 4
seed = 5
cubic:
3 0 0 : 1
0 1 2 : -1
quadratic:
1 1 0 : 1
0 0 2 : 2402
";

    #[test]
    fn parse_and_roundtrip() {
        let f = SystemFile::parse(SAMPLE).unwrap();
        assert_eq!((f.p, f.k, f.n, f.precision, f.seed), (7, 1, 3, 4, 5));
        let s = f.system(None).unwrap();
        let r = s.ring().clone();
        assert_eq!(s.f().coeff(&[0, 1, 2]), r.int(-1));
        assert_eq!(s.g().coeff(&[0, 0, 2]), r.int(2402));
        let again = SystemFile::parse(&SystemFile::from_system(&s, 5).to_string()).unwrap();
        assert_eq!(again.system(None).unwrap(), s);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = SAMPLE.replace("0 1 2 : -1", "0 1 : -1");
        assert_eq!(SystemFile::parse(&bad).unwrap_err().line, 9);
        let bad = SAMPLE.replace("1 1 0 : 1", "1 1 1 : 1");
        let e = SystemFile::parse(&bad).unwrap_err();
        assert_eq!(e.line, 11);
        assert!(e.message.contains("degree"));
        let bad = SAMPLE.replace("seed = 5\n", "");
        assert_eq!(SystemFile::parse(&bad).unwrap_err().line, 0);
    }

    #[test]
    fn extension_coefficients() {
        let text = "p = 5\nk = 2\nmodulus = 2,0,1\nn = 2\nN = 3\nseed = 0\ncubic:\n3 0 : 1,2\nquadratic:\n1 1 : 0,1\n";
        let f = SystemFile::parse(text).unwrap();
        let s = f.system(Some(6)).unwrap();
        assert_eq!(s.precision(), 6);
        let c = s.f().coeff(&[3, 0]);
        assert_eq!(c.coords(), &[BigUint::from(1u8), BigUint::from(2u8)]);
    }
}
