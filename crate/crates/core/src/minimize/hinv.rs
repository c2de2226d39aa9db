//! The h-invariant: the least codimension of a linear subspace on which a
//! form (or a system) vanishes identically.
//!
//! Small cases are settled by walking every subspace through its reduced
//! row echelon representative, codimension by codimension. Beyond the
//! budget only witnesses found by cheap constructions are reported, and the
//! proven lower bound is whatever the exhaustive part reached.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::quadratic;
use crate::ff::{Fq, FqField};
use crate::forms::{monomials, Form, FqForm};
use crate::linalg::{self, Matrix};

/// Default number of subspaces the exhaustive search may visit.
pub const DEFAULT_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HMode {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone)]
pub struct HCertificate {
    /// Codimension of the witness subspace; the invariant itself in exact
    /// mode.
    pub value: usize,
    /// Proven lower bound.
    pub lower: usize,
    /// `value` independent linear forms cutting out the witness subspace.
    pub witness: Matrix,
    /// Coefficients of `l` in `f - l g` (shifted search only).
    pub shift: Option<Vec<Fq>>,
    pub mode: HMode,
}

impl HCertificate {
    /// Whether `h > t` is known to hold or fail, rather than guessed.
    pub fn decides(&self, t: usize) -> bool {
        self.value <= t || self.lower > t
    }
}

#[derive(Clone, Copy)]
enum Target<'a> {
    Single(&'a FqForm),
    System(&'a FqForm, &'a FqForm),
    Shifted(&'a FqForm, &'a FqForm),
}

impl<'a> Target<'a> {
    fn lead(&self) -> &'a FqForm {
        match *self {
            Target::Single(f) | Target::System(f, _) | Target::Shifted(f, _) => f,
        }
    }

    /// Checks restrictions `f|_V`, `g|_V` given in coordinates on `V`; on
    /// success returns the quotient `l|_V` for the shifted target.
    fn accepts(&self, fv: &FqForm, gv: Option<&FqForm>) -> Option<Option<FqForm>> {
        match self {
            Target::Single(_) => fv.is_zero().then_some(None),
            Target::System(..) => (fv.is_zero() && gv?.is_zero()).then_some(None),
            Target::Shifted(..) => {
                let gv = gv?;
                if fv.is_zero() {
                    return Some(None);
                }
                if gv.is_zero() || !additive_quotient(fv, gv) {
                    return None;
                }
                fv.divide_exact(gv).map(Some)
            }
        }
    }

    fn second(&self) -> Option<&'a FqForm> {
        match *self {
            Target::Single(_) => None,
            Target::System(_, g) | Target::Shifted(_, g) => Some(g),
        }
    }
}

/// `h(f)` for a single nonzero form.
pub fn h_invariant(f: &FqForm, budget: u64) -> HCertificate {
    certify(Target::Single(f), budget)
}

/// Necessary for `f = l g` with `l` linear: `f/g` is additive at two fixed
/// points where `g` does not vanish. Inconclusive points pass.
fn additive_quotient(f: &FqForm, g: &FqForm) -> bool {
    let field = f.field();
    let m = f.nvars();
    let y: Vec<Fq> = (0..m).map(|j| field.int(j as i64 + 1)).collect();
    let z: Vec<Fq> = (0..m)
        .map(|j| field.int((j * j) as i64 + 2 * j as i64 + 3))
        .collect();
    let s: Vec<Fq> = y.iter().zip(&z).map(|(a, b)| a + b).collect();
    let q = |x: &[Fq]| {
        let gv = g.evaluate(x).expect("dimension");
        gv.inv().ok().map(|i| f.evaluate(x).expect("dimension") * i)
    };
    match (q(&y), q(&z), q(&s)) {
        (Some(a), Some(b), Some(c)) => a + b == c,
        _ => true,
    }
}

/// The least codimension of a subspace on which `f - l g` and `g` both
/// vanish for some linear `l`; on such a subspace `l` plays no role.
pub fn h_invariant_system(f: &FqForm, g: &FqForm, budget: u64) -> HCertificate {
    assert_eq!(f.nvars(), g.nvars());
    certify(Target::System(f, g), budget)
}

/// `min_l h(f - l g)` over linear forms `l`.
pub fn h_invariant_shifted(f: &FqForm, g: &FqForm, budget: u64) -> HCertificate {
    assert_eq!(f.nvars(), g.nvars());
    certify(Target::Shifted(f, g), budget)
}

fn certify(target: Target<'_>, budget: u64) -> HCertificate {
    let f = target.lead();
    let n = f.nvars();
    let field = f.field().clone();

    // h = 0: the whole space
    let ident = linalg::identity(&field, n);
    if let Some(shift) = check_subspace(&target, &ident) {
        return HCertificate {
            value: 0,
            lower: 0,
            witness: Vec::new(),
            shift: lift_shift(&target, shift, &(0..n).collect::<Vec<_>>(), &field),
            mode: HMode::Exact,
        };
    }

    let mut best = upper_bound(&target);
    if best.mode == HMode::Exact {
        return best;
    }
    let mut lower = 1;
    let mut spent: u128 = 0;
    let q = field.order();
    for h in 1..best.value {
        let count = gaussian_binomial(n, h, q);
        if spent.saturating_add(count) > budget as u128 {
            break;
        }
        if let Some((w, shift)) = search_codim(&target, h, &field) {
            return HCertificate {
                value: h,
                lower: h,
                witness: w,
                shift,
                mode: HMode::Exact,
            };
        }
        spent += count;
        lower = h + 1;
    }
    best.lower = lower.min(best.value);
    if best.lower == best.value {
        best.mode = HMode::Exact;
    }
    best
}

/// Number of `h`-dimensional subspaces of `F_q^n`, saturating.
pub fn gaussian_binomial(n: usize, h: usize, q: u128) -> u128 {
    if h > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..h {
        let a = q.checked_pow((n - i) as u32).map(|x| x - 1);
        let b = q.checked_pow((i + 1) as u32).map(|x| x - 1);
        match (
            a.and_then(|a| num.checked_mul(a)),
            b.and_then(|b| den.checked_mul(b)),
        ) {
            (Some(x), Some(y)) => {
                let g = num_integer::gcd(x, y);
                num = x / g;
                den = y / g;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

/// Restricts to the column space `V` of `basis` and applies the target
/// test. The shift comes back in coordinates on `V`.
fn check_subspace(target: &Target<'_>, basis: &Matrix) -> Option<Option<FqForm>> {
    check_with(target, |f| f.restrict(basis).expect("dimension"))
}

fn check_with(target: &Target<'_>, restrict: impl Fn(&FqForm) -> FqForm) -> Option<Option<FqForm>> {
    let fv = restrict(target.lead());
    if matches!(target, Target::Single(_) | Target::System(..)) && !fv.is_zero() {
        return None;
    }
    let gv = target.second().map(&restrict);
    target.accepts(&fv, gv.as_ref())
}

/// `f` on the coordinate subspace spanned by `e_i`, `i ∈ free`, in the
/// coordinates `x_{free[j]}`.
fn restrict_coords(f: &FqForm, free: &[usize]) -> FqForm {
    let n = f.nvars();
    let mut keep = vec![None; n];
    for (j, &i) in free.iter().enumerate() {
        keep[i] = Some(j);
    }
    let terms = f.terms().filter_map(|(m, c)| {
        let mut e = vec![0u8; free.len()];
        for (i, &k) in m.iter().enumerate() {
            if k > 0 {
                e[keep[i]?] = k;
            }
        }
        Some((e, c.clone()))
    });
    Form::from_terms(f.field(), free.len(), f.degree(), terms).expect("homogeneous")
}

/// Lifts a shift found on `V`, in coordinates `x_{free[j]}`, to all
/// coordinates; a missing shift means `l = 0`.
fn lift_shift(
    target: &Target<'_>,
    l: Option<FqForm>,
    free: &[usize],
    field: &Arc<FqField>,
) -> Option<Vec<Fq>> {
    if !matches!(target, Target::Shifted(..)) {
        return None;
    }
    let mut out = vec![field.zero(); target.lead().nvars()];
    for (m, c) in l.iter().flat_map(|l| l.terms()) {
        let j = m.iter().position(|&e| e == 1).expect("linear form");
        out[free[j]] = c.clone();
    }
    Some(out)
}

/// Exhausts the codimension-`h` subspaces in lexicographic order of their
/// echelon representatives.
fn search_codim(
    target: &Target<'_>,
    h: usize,
    field: &Arc<FqField>,
) -> Option<(Matrix, Option<Vec<Fq>>)> {
    let n = target.lead().nvars();
    let elems: Vec<Fq> = field.elements().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a11);
    for pivots in Combinations::new(n, h) {
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        // open positions: (row, column) right of the row's pivot, not a pivot column
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| free.iter().filter(move |&&c| c > p).map(move |&c| (r, c)))
            .collect();
        let mut idx = vec![0usize; slots.len()];
        loop {
            let mut w = vec![vec![field.zero(); n]; h];
            for (r, &p) in pivots.iter().enumerate() {
                w[r][p] = field.one();
            }
            for (k, &(r, c)) in slots.iter().enumerate() {
                w[r][c] = elems[idx[k]].clone();
            }
            // basis of V = ker w: free coordinate j is e_j, pivots solved
            let basis: Matrix = (0..n)
                .map(|i| {
                    if let Some(r) = pivots.iter().position(|&p| p == i) {
                        free.iter().map(|&c| -&w[r][c]).collect()
                    } else {
                        free.iter()
                            .map(|&c| if c == i { field.one() } else { field.zero() })
                            .collect()
                    }
                })
                .collect();
            if quick_reject(target, &basis, field, &mut rng) {
                // f does not vanish at a sampled point of V
            } else if let Some(shift) = check_subspace(target, &basis) {
                return Some((w, lift_shift(target, shift, &free, field)));
            }
            // odometer
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    None
}

/// Pointwise test at a few random points of `V` (only for targets that
/// require `f|_V = 0`).
fn quick_reject(
    target: &Target<'_>,
    basis: &Matrix,
    field: &Arc<FqField>,
    rng: &mut ChaCha8Rng,
) -> bool {
    if matches!(target, Target::Shifted(..)) {
        return false;
    }
    let m = basis.first().map_or(0, |r| r.len());
    if m == 0 {
        return false;
    }
    for _ in 0..3 {
        let y: Vec<Fq> = (0..m).map(|_| field.random(rng)).collect();
        let x = linalg::mat_vec(basis, &y);
        if !target.lead().evaluate(&x).expect("dimension").is_zero() {
            return true;
        }
        if let Some(g) = target.second() {
            if !g.evaluate(&x).expect("dimension").is_zero() {
                return true;
            }
        }
    }
    false
}

/// Witnesses from structure: the trivial subspace, maximal isotropic
/// subspaces of quadratics, essential variables and coordinate subspaces.
fn upper_bound(target: &Target<'_>) -> HCertificate {
    let f = target.lead();
    let n = f.nvars();
    let field = f.field().clone();
    let p = field.characteristic();
    let mut best = HCertificate {
        value: n,
        lower: 1,
        witness: linalg::identity(&field, n),
        shift: None,
        mode: HMode::UpperBound,
    };
    let offer = |w: Matrix, shift: Option<Vec<Fq>>, best: &mut HCertificate| {
        let (w, _) = if w.is_empty() {
            (w, Vec::new())
        } else {
            linalg::rref(&w)
        };
        if w.len() < best.value {
            best.value = w.len();
            best.witness = w;
            best.shift = shift;
        }
    };

    match *target {
        Target::Single(f) if f.degree() == 2 && p % 2 == 1 => {
            // exact by Witt decomposition
            let iso = quadratic::maximal_isotropic(f);
            let w = annihilator(&iso, n, &field);
            let h = w.len();
            return HCertificate {
                value: h,
                lower: h,
                witness: w,
                shift: None,
                mode: HMode::Exact,
            };
        }
        Target::Single(f) => {
            if let Some(u) = essential_space(f) {
                offer(u, None, &mut best);
            }
        }
        Target::System(f, g) | Target::Shifted(f, g) => {
            if p % 2 == 1 {
                if let Some(w) = isotropic_then_essential(f, g) {
                    let zero = matches!(target, Target::Shifted(..)).then(|| vec![field.zero(); n]);
                    offer(w, zero, &mut best);
                }
            }
            let mut both = Vec::new();
            if let (Some(a), Some(b)) = (essential_space(f), essential_space(g)) {
                both.extend(a);
                both.extend(b);
                let zero = matches!(target, Target::Shifted(..)).then(|| vec![field.zero(); n]);
                offer(both, zero, &mut best);
            }
            if let Target::Shifted(..) = target {
                if let Some(u) = essential_space(f) {
                    offer(u, Some(vec![field.zero(); n]), &mut best);
                }
            }
        }
    }

    // coordinate subspaces x_S = 0
    let filter = CoordFilter::new(target);
    let max_size = 5.min(best.value.saturating_sub(1));
    'sizes: for size in 1..=max_size {
        if size >= best.value {
            break;
        }
        for s in Combinations::new(n, size) {
            if filter.rejects(target, &s) {
                continue;
            }
            let free: Vec<usize> = (0..n).filter(|c| !s.contains(c)).collect();
            if let Some(shift) = check_with(target, |f| restrict_coords(f, &free)) {
                let w: Matrix = s
                    .iter()
                    .map(|&i| {
                        (0..n)
                            .map(|j| if i == j { field.one() } else { field.zero() })
                            .collect()
                    })
                    .collect();
                offer(w, lift_shift(target, shift, &free, &field), &mut best);
                break 'sizes;
            }
        }
    }
    if matches!(target, Target::Shifted(..)) && best.shift.is_none() {
        best.shift = Some(vec![field.zero(); n]);
    }
    best
}

/// Terms of a form as variable masks with their values at fixed points.
/// At the point with the coordinates in `S` set to zero, a form's value is
/// the sum over the terms that avoid `S`.
struct TermTable {
    masks: Vec<u64>,
    vals: Vec<Vec<Vec<u64>>>,
    npts: usize,
}

impl TermTable {
    fn new(f: &FqForm, pts: &[Vec<Fq>]) -> Self {
        let k = f.field().degree();
        let mut masks = Vec::new();
        let mut vals = Vec::new();
        for (m, c) in f.terms() {
            masks.push(
                m.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u64, |a, (i, _)| a | 1 << i),
            );
            let mono = Form::from_terms(f.field(), f.nvars(), f.degree(), [(m.clone(), c.clone())])
                .expect("one term");
            vals.push(
                pts.iter()
                    .map(|x| {
                        let mut v = mono.evaluate(x).expect("dimension").coords().to_vec();
                        v.resize(k, 0);
                        v
                    })
                    .collect(),
            );
        }
        TermTable {
            masks,
            vals,
            npts: pts.len(),
        }
    }

    fn vanishes(&self, zeroed: u64) -> bool {
        self.masks.iter().all(|m| m & zeroed != 0)
    }

    fn values(&self, zeroed: u64, field: &Arc<FqField>) -> Vec<Fq> {
        let k = field.degree();
        let p = field.characteristic();
        let mut acc = vec![vec![0u64; k]; self.npts];
        for (m, v) in self.masks.iter().zip(&self.vals) {
            if m & zeroed != 0 {
                continue;
            }
            for (a, t) in acc.iter_mut().zip(v) {
                for (x, y) in a.iter_mut().zip(t) {
                    *x = (*x + y) % p;
                }
            }
        }
        acc.iter()
            .map(|a| {
                field
                    .element(&a.iter().map(|&x| x as i64).collect::<Vec<_>>())
                    .expect("k coordinates")
            })
            .collect()
    }
}

/// Cheap necessary tests for coordinate subspaces.
struct CoordFilter {
    f: TermTable,
    g: Option<TermTable>,
}

impl CoordFilter {
    fn new(target: &Target<'_>) -> Self {
        let f = target.lead();
        let field = f.field();
        let n = f.nvars();
        let y: Vec<Fq> = (0..n).map(|j| field.int(j as i64 + 1)).collect();
        let z: Vec<Fq> = (0..n)
            .map(|j| field.int((j * j) as i64 + 2 * j as i64 + 3))
            .collect();
        let s: Vec<Fq> = y.iter().zip(&z).map(|(a, b)| a + b).collect();
        let pts = [y, z, s];
        CoordFilter {
            f: TermTable::new(f, &pts),
            g: target.second().map(|g| TermTable::new(g, &pts)),
        }
    }

    fn rejects(&self, target: &Target<'_>, zeroed: &[usize]) -> bool {
        let mask = zeroed.iter().fold(0u64, |a, &i| a | 1 << i);
        let fz = self.f.vanishes(mask);
        match target {
            Target::Single(_) => !fz,
            Target::System(..) => !fz || !self.g.as_ref().expect("system").vanishes(mask),
            Target::Shifted(..) => {
                if fz {
                    return false;
                }
                let field = target.lead().field();
                let fv = self.f.values(mask, field);
                let gv = self.g.as_ref().expect("system").values(mask, field);
                let mut quot = Vec::with_capacity(3);
                for (a, b) in fv.iter().zip(&gv) {
                    match b.inv() {
                        Ok(i) => quot.push(a * &i),
                        Err(_) => return !a.is_zero(),
                    }
                }
                &quot[0] + &quot[1] != quot[2]
            }
        }
    }
}

/// Rows spanning the annihilator of the span of `vs`, so that the subspace
/// they cut out is exactly that span.
fn annihilator(vs: &[Vec<Fq>], n: usize, field: &Arc<FqField>) -> Matrix {
    let k = linalg::kernel(&vs.to_vec(), n, field);
    if k.is_empty() {
        k
    } else {
        linalg::rref(&k).0
    }
}

/// The span of all `(d-1)`-fold partial derivatives of `f`, as rows; `f`
/// is a polynomial in these linear forms. Needs `p > d`.
pub fn essential_space(f: &FqForm) -> Option<Matrix> {
    let d = f.degree();
    let n = f.nvars();
    let field = f.field();
    if (field.characteristic() as usize) <= d || d == 0 {
        return None;
    }
    let mut layer = vec![f.clone()];
    for _ in 1..d {
        let mut next = Vec::new();
        for h in &layer {
            for i in 0..n {
                let p = h.partial(i);
                if !p.is_zero() {
                    next.push(p);
                }
            }
        }
        let (rows, _) = if next.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            // deduplicate by the span of coefficient vectors
            let vecs: Matrix = next.iter().map(|p| coeff_vector(p)).collect();
            linalg::rref(&vecs)
        };
        layer = rows
            .iter()
            .map(|r| from_coeff_vector(r, &next[0]))
            .collect();
    }
    let rows: Matrix = layer.iter().map(linear_coeffs).collect();
    Some(if rows.is_empty() {
        rows
    } else {
        linalg::rref(&rows).0
    })
}

fn coeff_vector(p: &FqForm) -> Vec<Fq> {
    let monos = monomials(p.nvars(), p.degree());
    monos.iter().map(|m| p.coeff(m)).collect()
}

fn from_coeff_vector(v: &[Fq], like: &FqForm) -> FqForm {
    let monos = monomials(like.nvars(), like.degree());
    Form::from_terms(
        like.field(),
        like.nvars(),
        like.degree(),
        monos.into_iter().zip(v.iter().cloned()),
    )
    .expect("homogeneous")
}

fn linear_coeffs(l: &FqForm) -> Vec<Fq> {
    let n = l.nvars();
    (0..n)
        .map(|i| {
            let mut m = vec![0u8; n];
            m[i] = 1;
            l.coeff(&m)
        })
        .collect()
}

/// A maximal isotropic subspace `W` of `g` cut down to where `f|_W`'s
/// essential forms vanish.
fn isotropic_then_essential(f: &FqForm, g: &FqForm) -> Option<Matrix> {
    let n = f.nvars();
    let field = f.field().clone();
    let iso = quadratic::maximal_isotropic(g);
    if iso.is_empty() {
        return None;
    }
    let basis: Matrix = (0..n)
        .map(|i| iso.iter().map(|b| b[i].clone()).collect())
        .collect();
    let fw = f.restrict(&basis).ok()?;
    let mut rows = annihilator(&iso, n, &field);
    if !fw.is_zero() {
        let u = essential_space(&fw)?;
        // a linear form u on W (coordinates along iso) vanishing on a subspace
        // of W; cut W further by the vectors of W it kills
        let sub: Matrix = linalg::kernel(&u, iso.len(), &field)
            .iter()
            .map(|c| {
                (0..n)
                    .map(|i| {
                        c.iter()
                            .zip(&iso)
                            .fold(field.zero(), |acc, (a, v)| acc + a * &v[i])
                    })
                    .collect()
            })
            .collect();
        rows = if sub.is_empty() {
            linalg::identity(&field, n)
        } else {
            annihilator(&sub, n, &field)
        };
    }
    Some(rows)
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            cur: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let k = out.len();
        let mut c = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if c[i] < self.n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                self.cur = Some(c);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(field: &Arc<FqField>, n: usize, d: usize, terms: &[(&[u8], i64)]) -> FqForm {
        Form::from_terms(
            field,
            n,
            d,
            terms.iter().map(|(m, c)| (m.to_vec(), field.int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2, 5), 806);
        assert_eq!(gaussian_binomial(4, 1, 2), 15);
        assert_eq!(gaussian_binomial(3, 0, 7), 1);
        assert_eq!(gaussian_binomial(60, 30, 307), u128::MAX);
    }

    #[test]
    fn linear_factor_gives_one() {
        let f5 = FqField::prime(5).unwrap();
        let f = form(&f5, 3, 3, &[(&[1, 2, 0], 1), (&[1, 0, 2], 2)]);
        let c = h_invariant(&f, DEFAULT_BUDGET);
        assert_eq!((c.value, c.mode), (1, HMode::Exact));
        let cube = form(&f5, 2, 3, &[(&[3, 0], 1)]);
        assert_eq!(h_invariant(&cube, DEFAULT_BUDGET).value, 1);
    }

    #[test]
    fn hyperbolic_quaternary_over_f3() {
        let f3 = FqField::prime(3).unwrap();
        let f = form(&f3, 4, 2, &[(&[1, 1, 0, 0], 1), (&[0, 0, 1, 1], 1)]);
        let c = h_invariant(&f, DEFAULT_BUDGET);
        assert_eq!((c.value, c.mode), (2, HMode::Exact));
    }

    #[test]
    fn cubic_exhaustive_search() {
        // x1 x2 x3 + x4^3 over F_5: vanishes on x1 = x4 = 0, not on a hyperplane
        let f5 = FqField::prime(5).unwrap();
        let f = form(&f5, 4, 3, &[(&[1, 1, 1, 0], 1), (&[0, 0, 0, 3], 1)]);
        let c = h_invariant(&f, DEFAULT_BUDGET);
        assert_eq!((c.value, c.lower, c.mode), (2, 2, HMode::Exact));
    }

    #[test]
    fn system_examples() {
        let f3 = FqField::prime(3).unwrap();
        let g = form(&f3, 3, 2, &[(&[1, 1, 0], 1)]);
        let f = form(&f3, 3, 3, &[(&[0, 0, 3], 1)]);
        let c = h_invariant_system(&f, &g, DEFAULT_BUDGET);
        assert_eq!((c.value, c.mode), (2, HMode::Exact));
        // f = x1 g
        let f = form(&f3, 3, 3, &[(&[2, 1, 0], 1)]);
        assert_eq!(h_invariant_system(&f, &g, DEFAULT_BUDGET).value, 1);
        assert_eq!(h_invariant_shifted(&f, &g, DEFAULT_BUDGET).value, 0);
    }

    #[test]
    fn shifted_quotient_lifts() {
        // f = x3 g + x1^3, with l = x3 the shift leaves x1^3
        let f5 = FqField::prime(5).unwrap();
        let g = form(
            &f5,
            3,
            2,
            &[(&[0, 2, 0], 1), (&[0, 0, 2], 1), (&[1, 1, 0], 1)],
        );
        let f = form(
            &f5,
            3,
            3,
            &[
                (&[0, 2, 1], 1),
                (&[0, 0, 3], 1),
                (&[1, 1, 1], 1),
                (&[3, 0, 0], 1),
            ],
        );
        let c = h_invariant_shifted(&f, &g, DEFAULT_BUDGET);
        assert_eq!(c.value, 1);
        let l = c.shift.unwrap();
        let lf = Form::from_terms(
            &f5,
            3,
            1,
            (0..3).map(|i| {
                let mut m = vec![0u8; 3];
                m[i] = 1;
                (m, l[i].clone())
            }),
        )
        .unwrap();
        let r = f.sub(&lf.mul(&g));
        let basis = linalg::kernel(&c.witness, 3, &f5);
        let bm: Matrix = (0..3)
            .map(|i| basis.iter().map(|b| b[i].clone()).collect())
            .collect();
        assert!(r.restrict(&bm).unwrap().is_zero());
    }

    #[test]
    fn essential_space_of_binary_cubic_in_more_variables() {
        let f7 = FqField::prime(7).unwrap();
        let f = form(
            &f7,
            4,
            3,
            &[(&[3, 0, 0, 0], 1), (&[0, 3, 0, 0], 1), (&[1, 1, 1, 0], 0)],
        );
        assert_eq!(essential_space(&f).unwrap().len(), 2);
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(14, 3).len(), 560);
        assert_eq!(monomials(3, 2).len(), 6);
    }
}
