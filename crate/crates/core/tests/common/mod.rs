//! Test-side oracles, written without the library's search code.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use rand::Rng;

use cubquad::forms::{monomials, Form};
use cubquad::linalg::{self, Matrix};
use cubquad::{Fq, FqField, FqForm};

pub fn random_form<R: Rng>(
    field: &Arc<FqField>,
    n: usize,
    d: usize,
    density: f64,
    rng: &mut R,
) -> FqForm {
    let mut terms: Vec<(Vec<u8>, Fq)> = Vec::new();
    for m in monomials(n, d) {
        if rng.gen_bool(density) {
            terms.push((m, field.random(rng)));
        }
    }
    Form::from_terms(field, n, d, terms).unwrap()
}

pub fn random_invertible<R: Rng>(field: &Arc<FqField>, n: usize, rng: &mut R) -> Matrix {
    loop {
        let a: Matrix = (0..n)
            .map(|_| (0..n).map(|_| field.random(rng)).collect())
            .collect();
        if linalg::rank(&a) == n {
            return a;
        }
    }
}

fn encode(x: &[Fq], q: u128) -> u32 {
    x.iter().rev().fold(0u128, |a, c| a * q + c.index()) as u32
}

/// Every vector of `F_q^n`, indexed by `encode`.
pub fn all_points(field: &Arc<FqField>, n: usize) -> Vec<Vec<Fq>> {
    let q = field.order();
    (0..q.pow(n as u32))
        .map(|mut i| {
            (0..n)
                .map(|_| {
                    let e = field.from_index(i % q);
                    i /= q;
                    e
                })
                .collect()
        })
        .collect()
}

/// Largest dimension of a linear subspace contained in the point set
/// `zero` (given as a membership table over `all_points`), grown one
/// vector at a time.
pub fn max_subspace_dim(field: &Arc<FqField>, n: usize, zero: &[bool]) -> usize {
    let q = field.order();
    let pts = all_points(field, n);
    let elems: Vec<Fq> = field.elements().collect();
    let origin = vec![field.zero(); n];
    let mut frontier: HashSet<BTreeSet<u32>> = HashSet::new();
    frontier.insert([encode(&origin, q)].into_iter().collect());
    let mut dim = 0;
    loop {
        let mut next: HashSet<BTreeSet<u32>> = HashSet::new();
        for v in &frontier {
            for (zi, z) in pts.iter().enumerate() {
                if !zero[zi] || v.contains(&(zi as u32)) {
                    continue;
                }
                let mut w = BTreeSet::new();
                let mut ok = true;
                'grow: for &vi in v {
                    for c in &elems {
                        let s: Vec<Fq> = pts[vi as usize]
                            .iter()
                            .zip(z)
                            .map(|(a, b)| a + &(c * b))
                            .collect();
                        let si = encode(&s, q);
                        if !zero[si as usize] {
                            ok = false;
                            break 'grow;
                        }
                        w.insert(si);
                    }
                }
                if ok {
                    next.insert(w);
                }
            }
        }
        if next.is_empty() {
            return dim;
        }
        dim += 1;
        frontier = next;
    }
}

/// `h` by points: valid when every form has degree below `q`, so that a
/// form vanishing at every point of a subspace vanishes on it identically.
pub fn brute_h(forms: &[&FqForm]) -> usize {
    let field = forms[0].field().clone();
    let n = forms[0].nvars();
    assert!(forms.iter().all(|f| (f.degree() as u128) < field.order()));
    let zero: Vec<bool> = all_points(&field, n)
        .iter()
        .map(|x| forms.iter().all(|f| f.evaluate(x).unwrap().is_zero()))
        .collect();
    n - max_subspace_dim(&field, n, &zero)
}

/// `min_l h(f - l g)` by trying every linear `l`.
pub fn brute_h_shifted(f: &FqForm, g: &FqForm) -> usize {
    let field = f.field().clone();
    let n = f.nvars();
    let mut best = n;
    for l in all_points(&field, n) {
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
        .unwrap();
        best = best.min(brute_h(&[&f.sub(&lf.mul(g))]));
        if best == 0 {
            break;
        }
    }
    best
}
