use std::fmt::Display;

use super::poly::{Monomial, Poly};
use crate::scalar::Scalar;

impl<R: Scalar + Display> Poly<R> {
    /// One line `e_1 … e_n : c` per term, in decreasing monomial order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms().rev() {
            let exps: Vec<String> = m.iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("{} : {}\n", exps.join(" "), c));
        }
        out
    }
}

/// Splits a monomial line into its exponent vector and the coefficient
/// text. Errors are plain messages; callers add the location.
pub fn parse_monomial_line(line: &str, n: usize) -> Result<(Monomial, &str), String> {
    let (lhs, rhs) = line
        .split_once(':')
        .ok_or_else(|| "expected `e1 … en : c`".to_string())?;
    let exps: Vec<&str> = lhs.split_whitespace().collect();
    if exps.len() != n {
        return Err(format!("expected {n} exponents, found {}", exps.len()));
    }
    let mut m = Monomial::new();
    for e in exps {
        let v: u8 = e.parse().map_err(|_| format!("bad exponent `{e}`"))?;
        m.push(v);
    }
    let c = rhs.trim();
    if c.is_empty() {
        return Err("missing coefficient".into());
    }
    Ok((m, c))
}
