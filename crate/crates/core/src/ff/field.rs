use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::SmallVec;

use super::{FfError, Fq};

/// The finite field of `q = p^k` elements, presented as `F_p[t]/(m(t))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqField {
    p: u64,
    k: usize,
    /// Monic, low-to-high, length `k + 1`. For `k = 1` this is `t`.
    modulus: Vec<u64>,
    q: u128,
}

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}[{:?}]", self.p, self.k, self.modulus)
        }
    }
}

/// Largest characteristic accepted; keeps every product inside a `u64`.
pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

impl FqField {
    /// Builds `F_{p^k}`. Without a modulus, an irreducible one is found by a
    /// seeded search, so repeated calls give the same field.
    pub fn new(p: u64, k: usize, modulus: Option<&[u64]>) -> Result<Arc<Self>, FfError> {
        if !is_prime(p) || p > MAX_CHARACTERISTIC {
            return Err(FfError::NotPrime(p));
        }
        if k == 0 {
            return Err(FfError::ModulusDegree {
                expected: 1,
                found: 0,
            });
        }
        let q = checked_order(p, k).ok_or(FfError::OrderOverflow { p, k })?;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u64> = m.iter().map(|c| c % p).collect();
                let deg = m.iter().rposition(|&c| c != 0);
                if deg != Some(k) {
                    return Err(FfError::ModulusDegree {
                        expected: k,
                        found: deg.unwrap_or(0),
                    });
                }
                if m[k] != 1 {
                    return Err(FfError::ModulusNotMonic);
                }
                if k > 1 && !is_irreducible_mod_p(&m, p) {
                    return Err(FfError::ReducibleModulus);
                }
                if k == 1 {
                    vec![0, 1]
                } else {
                    m[..=k].to_vec()
                }
            }
            None if k == 1 => vec![0, 1],
            None => find_irreducible(p, k),
        };
        Ok(Arc::new(FqField { p, k, modulus, q }))
    }

    pub fn prime(p: u64) -> Result<Arc<Self>, FfError> {
        Self::new(p, 1, None)
    }

    /// The field with `q` elements (`q` must be a prime power).
    pub fn with_order(q: u128) -> Result<Arc<Self>, FfError> {
        let (p, k) = prime_power(q).ok_or(FfError::NotPrimePower(q))?;
        Self::new(p, k, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u128 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    pub fn zero(self: &Arc<Self>) -> Fq {
        Fq::from_parts(self.clone(), SmallVec::from_elem(0, self.k))
    }

    pub fn one(self: &Arc<Self>) -> Fq {
        self.int(1)
    }

    pub fn int(self: &Arc<Self>, v: i64) -> Fq {
        let mut rep: SmallVec<[u64; 4]> = SmallVec::from_elem(0, self.k);
        rep[0] = v.rem_euclid(self.p as i64) as u64;
        Fq::from_parts(self.clone(), rep)
    }

    /// Element from its coordinates in the basis `1, t, …, t^{k-1}`.
    pub fn element(self: &Arc<Self>, coords: &[i64]) -> Result<Fq, FfError> {
        if coords.len() != self.k {
            return Err(FfError::CoordinateCount {
                expected: self.k,
                found: coords.len(),
            });
        }
        let rep = coords
            .iter()
            .map(|c| c.rem_euclid(self.p as i64) as u64)
            .collect();
        Ok(Fq::from_parts(self.clone(), rep))
    }

    /// The generator `t` of the polynomial basis (equals 0 for prime fields).
    pub fn gen(self: &Arc<Self>) -> Fq {
        if self.k == 1 {
            return self.int(0);
        }
        let mut rep: SmallVec<[u64; 4]> = SmallVec::from_elem(0, self.k);
        rep[1] = 1;
        Fq::from_parts(self.clone(), rep)
    }

    /// Bijection `[0, q) -> F_q` via base-`p` digits of the index.
    pub fn from_index(self: &Arc<Self>, mut idx: u128) -> Fq {
        let mut rep: SmallVec<[u64; 4]> = SmallVec::from_elem(0, self.k);
        for c in rep.iter_mut() {
            *c = (idx % self.p as u128) as u64;
            idx /= self.p as u128;
        }
        Fq::from_parts(self.clone(), rep)
    }

    pub fn random<R: Rng + ?Sized>(self: &Arc<Self>, rng: &mut R) -> Fq {
        let rep = (0..self.k).map(|_| rng.gen_range(0..self.p)).collect();
        Fq::from_parts(self.clone(), rep)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(self: &Arc<Self>, rng: &mut R) -> Fq {
        loop {
            let a = self.random(rng);
            if !a.is_zero() {
                return a;
            }
        }
    }

    /// All elements in index order. Only sensible for small fields.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = Fq> + '_ {
        (0..self.q).map(move |i| self.from_index(i))
    }

    /// Reduces a coefficient vector of arbitrary length modulo the modulus.
    pub(crate) fn reduce_poly(&self, mut c: Vec<u64>) -> SmallVec<[u64; 4]> {
        let k = self.k;
        if k == 1 {
            debug_assert!(c.iter().skip(1).all(|&x| x == 0));
            return SmallVec::from_elem(c.first().copied().unwrap_or(0) % self.p, 1);
        }
        let p = self.p;
        for i in (k..c.len()).rev() {
            let lead = c[i] % p;
            if lead == 0 {
                continue;
            }
            c[i] = 0;
            for j in 0..k {
                let sub = lead * self.modulus[j] % p;
                c[i - k + j] = (c[i - k + j] + p - sub) % p;
            }
        }
        c.resize(k, 0);
        c.into_iter().map(|x| x % p).collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `q = p^k` decomposition.
pub fn prime_power(q: u128) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = None;
    let mut d = 2u128;
    while d * d <= q {
        if q % d == 0 {
            p = Some(d);
            break;
        }
        d += 1;
    }
    let p = p.unwrap_or(q);
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1 && p <= u64::MAX as u128).then_some((p as u64, k))
}

fn checked_order(p: u64, k: usize) -> Option<u128> {
    let mut q: u128 = 1;
    for _ in 0..k {
        q = q.checked_mul(p as u128)?;
    }
    Some(q)
}

fn find_irreducible(p: u64, k: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6972_7265_6475_6369 ^ (p << 8) ^ k as u64);
    loop {
        let mut m: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if m[0] == 0 {
            continue;
        }
        m.push(1);
        if is_irreducible_mod_p(&m, p) {
            return m;
        }
    }
}

/// Rabin's test: `f` of degree `k` is irreducible over `F_p` iff
/// `t^{p^k} = t mod f` and `gcd(t^{p^{k/r}} - t, f) = 1` for every prime `r | k`.
pub(crate) fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    let frob = |j: usize| {
        let mut h = x.clone();
        for _ in 0..j {
            h = fp_poly::powmod(&h, p as u128, f, p);
        }
        h
    };
    if fp_poly::trim(fp_poly::sub(&frob(k), &x, p)) != Vec::<u64>::new() {
        return false;
    }
    for r in prime_factors(k as u64) {
        let h = fp_poly::sub(&frob(k / r as usize), &x, p);
        let g = fp_poly::gcd(&fp_poly::trim(h), &fp_poly::trim(f.to_vec()), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over `F_p` as coefficient vectors, low to high. Only used
/// while a field is being built, before `Fq` elements exist.
pub(crate) mod fp_poly {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect()
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        let (mut t, mut nt, mut r, mut nr) = (0i64, 1i64, p as i64, (a % p) as i64);
        while nr != 0 {
            let q = r / nr;
            (t, nt) = (nt, t - q * nt);
            (r, nr) = (nr, r - q * nr);
        }
        t.rem_euclid(p as i64) as u64
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let m = trim(m.to_vec());
        let dm = m.len() - 1;
        let lc_inv = inv(m[dm], p);
        while a.len() > dm {
            let da = a.len() - 1;
            let c = a[da] * lc_inv % p;
            for j in 0..=dm {
                let s = c * m[j] % p;
                a[da - dm + j] = (a[da - dm + j] + p - s) % p;
            }
            a = trim(a);
        }
        a
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut c = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                c[i + j] = (c[i + j] + x * y) % p;
            }
        }
        rem(&c, m, p)
    }

    pub fn powmod(a: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(a, m, p);
        let mut acc = vec![1u64];
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &base, m, p);
            }
            e >>= 1;
            if e > 0 {
                base = mulmod(&base, &base, m, p);
            }
        }
        acc
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_needs_no_modulus() {
        let f = FqField::new(7, 1, None).unwrap();
        assert_eq!(f.order(), 7);
        assert!(f.is_prime_field());
    }

    #[test]
    fn f9_from_x2_plus_1() {
        let f = FqField::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f.order(), 9);
    }

    #[test]
    fn modulus_arity_mismatch_rejected() {
        let e = FqField::new(7, 1, Some(&[1, 0, 1])).unwrap_err();
        assert!(matches!(
            e,
            FfError::ModulusDegree {
                expected: 1,
                found: 2
            }
        ));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 2)(x + 3) over F_5
        let e = FqField::new(5, 2, Some(&[1, 0, 1])).unwrap_err();
        assert_eq!(e, FfError::ReducibleModulus);
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(FqField::new(9, 1, None).unwrap_err(), FfError::NotPrime(9));
    }

    #[test]
    fn seeded_search_is_reproducible() {
        let a = FqField::new(5, 3, None).unwrap();
        let b = FqField::new(5, 3, None).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert!(is_irreducible_mod_p(a.modulus(), 5));
    }

    #[test]
    fn rabin_matches_root_search_for_quadratics() {
        // a monic quadratic over F_p is irreducible iff it has no root
        for p in [3u64, 5, 7, 11] {
            for b in 0..p {
                for c in 0..p {
                    let has_root = (0..p).any(|x| (x * x + b * x + c) % p == 0);
                    assert_eq!(is_irreducible_mod_p(&[c, b, 1], p), !has_root);
                }
            }
        }
    }

    #[test]
    fn prime_power_decomposition() {
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(307), Some((307, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
