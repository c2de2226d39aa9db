mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{brute_h, brute_h_shifted, random_form, random_invertible};
use cubquad::minimize::{
    apply_move, h_invariant, h_invariant_shifted, h_invariant_system, HMode, ReductionMove,
    DEFAULT_BUDGET,
};
use cubquad::padic::lift_form;
use cubquad::{Form, FqField, PadicRing, PadicSystem};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(60))]

    #[test]
    fn quadratic_h_matches_points(q in prop::sample::select(vec![3u128, 4, 5, 7]), n in 1usize..=4, seed: u64) {
        let field = FqField::with_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&field, n, 2, 0.6, &mut rng);
        let c = h_invariant(&f, DEFAULT_BUDGET);
        prop_assert_eq!(c.mode, HMode::Exact);
        prop_assert_eq!(c.value, brute_h(&[&f]));
    }

    #[test]
    fn cubic_h_matches_points(q in prop::sample::select(vec![4u128, 5]), n in 1usize..=4, seed: u64) {
        let field = FqField::with_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&field, n, 3, 0.4, &mut rng);
        let c = h_invariant(&f, DEFAULT_BUDGET);
        prop_assert_eq!(c.mode, HMode::Exact);
        prop_assert_eq!(c.value, brute_h(&[&f]));
        // the witness really cuts out a subspace where f vanishes
        let n_ = f.nvars();
        let basis = cubquad::linalg::kernel(&c.witness, n_, &field);
        let cols = cubquad::linalg::transpose(&basis);
        if !basis.is_empty() {
            prop_assert!(f.restrict(&cols).unwrap().is_zero());
        }
    }

    #[test]
    fn system_h_matches_points(n in 1usize..=4, seed: u64) {
        let field = FqField::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&field, n, 3, 0.3, &mut rng);
        let g = random_form(&field, n, 2, 0.4, &mut rng);
        let c = h_invariant_system(&f, &g, DEFAULT_BUDGET);
        prop_assert_eq!(c.mode, HMode::Exact);
        prop_assert_eq!(c.value, brute_h(&[&f, &g]));
    }

    #[test]
    fn h_is_invariant_under_substitution(q in prop::sample::select(vec![3u128, 5, 7]), n in 2usize..=4, seed: u64) {
        let field = FqField::with_order(q).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&field, n, 2, 0.5, &mut rng);
        let a = random_invertible(&field, n, &mut rng);
        let fa = f.substitute_linear(&a).unwrap();
        prop_assert_eq!(h_invariant(&f, DEFAULT_BUDGET).value, h_invariant(&fa, DEFAULT_BUDGET).value);
        let c = random_form(&field, n, 3, 0.5, &mut rng);
        let ca = c.substitute_linear(&a).unwrap();
        prop_assert_eq!(h_invariant(&c, DEFAULT_BUDGET).value, h_invariant(&ca, DEFAULT_BUDGET).value);
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn shifted_h_matches_points(n in 1usize..=3, seed: u64) {
        let field = FqField::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&field, n, 3, 0.5, &mut rng);
        let g = random_form(&field, n, 2, 0.5, &mut rng);
        let c = h_invariant_shifted(&f, &g, DEFAULT_BUDGET);
        prop_assert_eq!(c.mode, HMode::Exact);
        prop_assert_eq!(c.value, brute_h_shifted(&f, &g));
    }
}

/// `G = p G0 + x1 L` reduces to `x1 L`, whose `h` is 1; the quadratic move
/// must give an integral system with the same precision bookkeeping.
#[test]
fn planted_low_h_round_trip() {
    let field = FqField::prime(7).unwrap();
    let ring = PadicRing::new(&field, 10).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let n = 6;
    for _ in 0..10 {
        let f0 = random_form(&field, n, 3, 0.8, &mut rng);
        let g0 = random_form(&field, n, 2, 0.8, &mut rng);
        let l = random_form(&field, n, 1, 1.0, &mut rng);
        let x1 = Form::from_terms(&field, n, 1, [(vec![1u8, 0, 0, 0, 0, 0], field.one())]).unwrap();
        let g = lift_form(&ring, &g0)
            .scale(&ring.int(7))
            .add(&lift_form(&ring, &x1.mul(&l)));
        let s = PadicSystem::new(lift_form(&ring, &f0), g).unwrap();
        let (_, gr) = s.reduce_mod_p();
        let c = h_invariant(&gr, DEFAULT_BUDGET);
        assert_eq!(c.value, if l.is_zero() { 0 } else { 1 });
        let m = ReductionMove::quad(c.witness.clone(), n);
        let (t, tau) = apply_move(&s, &m).unwrap();
        assert_eq!(t.precision(), 9);
        // G(tau y) = p G'(y) identically
        let y: Vec<_> = (0..n).map(|i| ring.int(i as i64 * 3 + 1)).collect();
        let x = cubquad::padic::matrix::mat_vec(&tau, &y);
        let (_, gx) = s.evaluate(&x).unwrap();
        let y9: Vec<_> = y.iter().map(|c| c.with_ring(t.ring())).collect();
        let (_, gy) = t.evaluate(&y9).unwrap();
        assert_eq!(gx.div_p_pow(1).unwrap().with_ring(t.ring()), gy);
    }
}

/// Planted cubic: `F = p F0 + x1 Q - L G` has `h(f - l g) <= 1`.
#[test]
fn planted_shifted_cubic_is_detected() {
    let field = FqField::prime(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let n = 4;
    for _ in 0..10 {
        let g = random_form(&field, n, 2, 1.0, &mut rng);
        let q = random_form(&field, n, 2, 1.0, &mut rng);
        let l = random_form(&field, n, 1, 1.0, &mut rng);
        let x1 = Form::from_terms(&field, n, 1, [(vec![1u8, 0, 0, 0], field.one())]).unwrap();
        let f = x1.mul(&q).add(&l.mul(&g));
        let c = h_invariant_shifted(&f, &g, DEFAULT_BUDGET);
        assert!(c.value <= 1);
        assert_eq!(c.mode, HMode::Exact);
    }
}
