//! Factorization in `F_q[X, Y]`: shear to a monic polynomial, specialise
//! `X` at a point where the fibre is square-free, lift the univariate
//! factors `X`-adically and recombine by trial division.

use std::sync::Arc;

use super::bivariate::{bipoly_order, BiPoly};
use super::uni::UniPoly;
use super::PolyError;
use crate::ff::{FieldEmbedding, Fq, FqField};

/// Largest total degree accepted by the absolute irreducibility test.
pub const MAX_ABS_DEGREE: usize = 8;

/// Irreducible factors of `p` over `F_q`, normalized and sorted, with
/// multiplicities. The product of the factors times `unit(p)` is `p`.
pub fn factor_bivariate(p: &BiPoly) -> Vec<(BiPoly, usize)> {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut irr = factor_squarefree(&radical(p));
    irr.sort_by(bipoly_order);
    let mut rest = p.clone();
    let mut out = Vec::with_capacity(irr.len());
    for f in irr {
        let mut m = 0;
        while let Some(q) = rest.div_exact(&f) {
            rest = q;
            m += 1;
        }
        debug_assert!(m > 0);
        out.push((f, m));
    }
    debug_assert!(rest.is_constant());
    out
}

/// The constant `u` with `p = u · ∏ f_i^{m_i}` for the factors above.
pub fn unit(p: &BiPoly) -> Fq {
    p.lc_y().lc()
}

pub fn is_irreducible(p: &BiPoly) -> bool {
    let f = factor_bivariate(p);
    f.len() == 1 && f[0].1 == 1 && !f[0].0.is_constant()
}

/// True iff `p` stays irreducible over an algebraic closure of `F_q`.
/// Conjugate factors of an `F_q`-irreducible polynomial of degree `d` are
/// defined over `F_{q^r}` with `r | d`, so those extensions suffice.
pub fn is_absolutely_irreducible(p: &BiPoly) -> Result<bool, PolyError> {
    let d = p.total_degree();
    if d > MAX_ABS_DEGREE {
        return Err(PolyError::DegreeTooLarge {
            degree: d,
            max: MAX_ABS_DEGREE,
        });
    }
    if p.is_zero() || !is_irreducible(p) {
        return Ok(false);
    }
    for r in 2..=d {
        if d % r != 0 {
            continue;
        }
        let emb = FieldEmbedding::new(p.field(), r).map_err(PolyError::Field)?;
        let big = p.map_coeffs(emb.big(), |c| emb.map(c));
        if !is_irreducible(&big) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Product of the distinct irreducible factors.
pub fn radical(p: &BiPoly) -> BiPoly {
    if p.is_constant() {
        return BiPoly::one(p.field());
    }
    let px = p.partial_x();
    let py = p.partial_y();
    if px.is_zero() && py.is_zero() {
        return radical(&p.pth_root());
    }
    let g = p.gcd(&px).gcd(&py);
    // p / g keeps the factors whose multiplicity is prime to the characteristic
    let b = p.div_exact(&g).expect("gcd divides").normalize();
    let mut rest = g;
    loop {
        let common = rest.gcd(&b);
        if common.is_constant() {
            break;
        }
        rest = rest.div_exact(&common).expect("gcd divides");
    }
    b.mul(&radical(&rest)).normalize()
}

fn factor_squarefree(r: &BiPoly) -> Vec<BiPoly> {
    if r.is_constant() {
        return Vec::new();
    }
    let cont = r.content_x();
    let mut out: Vec<BiPoly> = if cont.deg() > 0 {
        cont.factor()
            .1
            .into_iter()
            .map(|(g, _)| BiPoly::from_x(&g).normalize())
            .collect()
    } else {
        Vec::new()
    };
    let pp = r.div_x_poly(&cont);
    if pp.deg_y() > 0 {
        out.extend(factor_primitive(&pp));
    }
    out
}

/// Factors a square-free polynomial that is primitive of positive degree
/// in `Y`.
fn factor_primitive(pp: &BiPoly) -> Vec<BiPoly> {
    if pp.deg_y() == 1 {
        return vec![pp.normalize()];
    }
    if pp.deg_x() == 0 {
        return pp
            .eval_x(&pp.field().zero())
            .factor()
            .1
            .into_iter()
            .map(|(g, _)| BiPoly::from_y(&g).normalize())
            .collect();
    }
    match factor_in_field(pp) {
        Some(fs) => fs,
        None => factor_via_extension(pp),
    }
}

/// Candidate specialisation values, enough to beat any bad set of the
/// sizes that arise here.
fn candidates(field: &Arc<FqField>, limit: u128) -> impl Iterator<Item = Fq> + '_ {
    (0..field.order().min(limit)).map(move |i| field.from_index(i))
}

const CANDIDATE_LIMIT: u128 = 4096;

fn factor_in_field(pp: &BiPoly) -> Option<Vec<BiPoly>> {
    let field = pp.field().clone();
    let d = pp.total_degree();
    // shear so the Y^d coefficient is a nonzero constant
    let c = if pp.deg_y() == d {
        field.zero()
    } else {
        let top: Vec<(usize, usize, Fq)> = pp.terms().filter(|t| t.0 + t.1 == d).collect();
        candidates(&field, CANDIDATE_LIMIT).find(|c| {
            let mut v = field.zero();
            for (i, _, coef) in &top {
                v += coef * &c.pow(*i as u128);
            }
            !v.is_zero()
        })?
    };
    let s = pp.shear(&c);
    debug_assert_eq!(s.deg_y(), d);
    let s = s.normalize();
    let a = candidates(&field, CANDIDATE_LIMIT).find(|a| {
        let b = s.eval_x(a);
        b.gcd(&b.derivative()).is_one()
    })?;
    let t = s.translate_x(&a);
    let fibre = t.eval_x(&field.zero());
    let (_, local) = fibre.factor();
    let back = |f: BiPoly| f.translate_x(&(-&a)).shear(&(-&c)).normalize();
    if local.len() == 1 {
        return Some(vec![pp.normalize()]);
    }
    let k = t.deg_x() + 1;
    let locals: Vec<UniPoly> = local.into_iter().map(|(g, _)| g).collect();
    let lifted = hensel_lift(&t, &locals, k);
    Some(recombine(&t, lifted, k).into_iter().map(back).collect())
}

/// Lifts `t ≡ ∏ g_i (mod X)` to a factorization modulo `X^k`. All the
/// `g_i` are monic in `Y`, pairwise coprime, and `t` is monic in `Y`.
fn hensel_lift(t: &BiPoly, gs: &[UniPoly], k: usize) -> Vec<BiPoly> {
    if gs.len() == 1 {
        return vec![t.trunc_x(k)];
    }
    let g0 = &gs[0];
    let h0 = gs[1..]
        .iter()
        .fold(UniPoly::one(t.field()), |acc, g| acc.mul(g));
    let (one, _s, tt) = g0.ext_gcd(&h0);
    debug_assert!(one.is_one());
    let mut g = BiPoly::from_y(g0);
    let mut h = BiPoly::from_y(&h0);
    for j in 1..k {
        let e = t.sub(&g.mul(&h).trunc_x(j + 1)).x_coeff(j);
        if e.is_zero() {
            continue;
        }
        let dg = tt.mul(&e).rem(g0);
        let dh = e.sub(&dg.mul(&h0)).div_exact(g0).expect("Bezout identity");
        g = g.add_x_layer(j, &dg);
        h = h.add_x_layer(j, &dh);
    }
    let mut out = vec![g];
    out.extend(hensel_lift(&h, &gs[1..], k));
    out
}

/// Groups lifted local factors into true factors by trial division.
fn recombine(t: &BiPoly, mut local: Vec<BiPoly>, k: usize) -> Vec<BiPoly> {
    let mut rest = t.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= local.len() {
        let mut found = None;
        for subset in Combinations::new(local.len(), size) {
            let cand = subset.iter().fold(BiPoly::one(t.field()), |acc, &i| {
                acc.mul(&local[i]).trunc_x(k)
            });
            if let Some(q) = rest.div_exact(&cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                rest = q;
                for &i in subset.iter().rev() {
                    local.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if !rest.is_constant() {
        out.push(rest);
    }
    out
}

/// Factors over `F_{q^r}` and multiplies Frobenius orbits back together.
fn factor_via_extension(pp: &BiPoly) -> Vec<BiPoly> {
    let field = pp.field().clone();
    let q = field.order();
    let d = pp.total_degree() as u128;
    let need = 4 * d * (d + pp.deg_x() as u128) + 16;
    let mut r = 2;
    while q.saturating_pow(r as u32) < need {
        r += 1;
    }
    let emb = FieldEmbedding::new(&field, r).expect("extension of a supported field");
    let big = pp.map_coeffs(emb.big(), |c| emb.map(c));
    let mut pending = factor_in_field(&big).expect("extension is large enough");
    let mut out = Vec::new();
    while let Some(phi) = pending.pop() {
        let mut prod = phi.clone();
        let mut psi = phi.pow_coeffs(q).normalize();
        while psi != phi {
            let pos = pending
                .iter()
                .position(|x| *x == psi)
                .expect("orbit is closed");
            pending.remove(pos);
            prod = prod.mul(&psi);
            psi = psi.pow_coeffs(q).normalize();
        }
        let down = BiPoly::from_terms(
            &field,
            &prod
                .terms()
                .map(|(i, j, c)| {
                    (
                        i,
                        j,
                        emb.try_preimage(&c).expect("orbit product is rational"),
                    )
                })
                .collect::<Vec<_>>(),
        );
        out.push(down.normalize());
    }
    out
}

/// Lexicographic `size`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, size: usize) -> Self {
        Combinations {
            n,
            idx: (0..size).collect(),
            done: size > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(f: &Arc<FqField>, t: &[(usize, usize, i64)]) -> BiPoly {
        let terms: Vec<_> = t.iter().map(|&(i, j, c)| (i, j, f.int(c))).collect();
        BiPoly::from_terms(f, &terms)
    }

    fn product(fs: &[(BiPoly, usize)], f: &Arc<FqField>) -> BiPoly {
        fs.iter()
            .fold(BiPoly::one(f), |acc, (g, m)| acc.mul(&g.pow(*m)))
    }

    #[test]
    fn sum_of_squares_splits_mod_5() {
        let f = FqField::prime(5).unwrap();
        let p = bp(&f, &[(2, 0, 1), (0, 2, 1)]);
        let fs = factor_bivariate(&p);
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs, &f).normalize(), p.normalize());
        let expect = [
            bp(&f, &[(1, 0, 1), (0, 1, 2)]),
            bp(&f, &[(1, 0, 1), (0, 1, 3)]),
        ];
        for e in expect {
            assert!(fs.iter().any(|(g, _)| *g == e.normalize()));
        }
    }

    #[test]
    fn sum_of_squares_irreducible_mod_7_but_not_absolutely() {
        let f = FqField::prime(7).unwrap();
        let p = bp(&f, &[(2, 0, 1), (0, 2, 1)]);
        assert!(is_irreducible(&p));
        assert!(!is_absolutely_irreducible(&p).unwrap());
    }

    #[test]
    fn fermat_cubic_is_absolutely_irreducible() {
        let f = FqField::prime(7).unwrap();
        let p = bp(&f, &[(3, 0, 1), (0, 3, 1), (0, 0, 1)]);
        assert!(is_absolutely_irreducible(&p).unwrap());
    }

    #[test]
    fn product_of_line_and_conic() {
        let f = FqField::prime(7).unwrap();
        let a = bp(&f, &[(1, 0, 1), (0, 1, 1)]);
        let b = bp(&f, &[(2, 0, 1), (0, 2, 1), (0, 0, 1)]);
        let fs = factor_bivariate(&a.mul(&b));
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&(a.normalize(), 1)));
        assert!(fs.contains(&(b.normalize(), 1)));
    }

    #[test]
    fn repeated_factors_have_multiplicity() {
        let f = FqField::prime(3).unwrap();
        let a = bp(&f, &[(1, 0, 1), (0, 1, 1), (0, 0, 1)]);
        let b = bp(&f, &[(2, 1, 1), (0, 0, 1)]);
        let p = a.pow(3).mul(&b.pow(2));
        let fs = factor_bivariate(&p);
        assert!(fs.contains(&(a.normalize(), 3)));
        assert!(fs.contains(&(b.normalize(), 2)));
        assert!(!is_absolutely_irreducible(&a.mul(&a)).unwrap());
    }

    #[test]
    fn tiny_field_uses_extension() {
        // over F_2 no specialisation of x^2 y + x y^2 + ... may be square-free
        let f = FqField::prime(2).unwrap();
        let a = bp(&f, &[(2, 0, 1), (1, 1, 1), (0, 2, 1)]);
        let b = bp(&f, &[(1, 0, 1), (0, 0, 1)]);
        let p = a.mul(&b);
        let fs = factor_bivariate(&p);
        assert_eq!(product(&fs, &f), p);
        assert!(fs.contains(&(a.normalize(), 1)));
        assert!(!is_absolutely_irreducible(&a).unwrap());
    }

    #[test]
    fn degree_guard() {
        let f = FqField::prime(7).unwrap();
        let p = bp(&f, &[(9, 0, 1), (0, 1, 1)]);
        assert!(matches!(
            is_absolutely_irreducible(&p),
            Err(PolyError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn combinations_enumerate_all_subsets() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(4, 4).count(), 1);
        assert_eq!(Combinations::new(3, 4).count(), 0);
    }
}
