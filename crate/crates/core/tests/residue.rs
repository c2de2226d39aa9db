mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::random_form;
use cubquad::pipeline::random_system;
use cubquad::residue::{jacobian_rank, solve_residue, ResidueOptions};
use cubquad::{FqField, PadicRing, SystemFile};

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    #[test]
    fn residue_solutions_are_nonsingular(p in prop::sample::select(vec![5u64, 7, 11, 13, 307]), n in 4usize..=10, density in 0.2f64..1.0, seed: u64) {
        let field = FqField::prime(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&field, n, 3, density, &mut rng);
        let g = random_form(&field, n, 2, density, &mut rng);
        prop_assume!(!f.is_zero() || !g.is_zero());
        match solve_residue(&f, &g, &ResidueOptions { seed, ..Default::default() }) {
            Ok(sol) => {
                prop_assert!(f.evaluate(&sol.x).unwrap().is_zero());
                prop_assert!(g.evaluate(&sol.x).unwrap().is_zero());
                prop_assert_eq!(jacobian_rank(&f, &g, &sol.x), 2);
                prop_assert!(sol.x.iter().any(|c| !c.is_zero()));
            }
            Err(e) => prop_assert!(p < 307 || n < 8, "unexpected failure {}", e),
        }
    }

    #[test]
    fn same_seed_same_answer(n in 6usize..=12, seed: u64) {
        let field = FqField::prime(307).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&field, n, 3, 0.5, &mut rng);
        let g = random_form(&field, n, 2, 0.5, &mut rng);
        let opts = ResidueOptions { seed, ..Default::default() };
        let a = solve_residue(&f, &g, &opts).map(|s| s.x);
        let b = solve_residue(&f, &g, &opts).map(|s| s.x);
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, ..ProptestConfig::default() })]

    #[test]
    fn system_file_round_trip(p in prop::sample::select(vec![5u64, 7, 307]), k in 1usize..=2, n in 1usize..=5, prec in 1usize..=6, seed: u64) {
        let field = FqField::new(p, k, None).unwrap();
        let ring = PadicRing::new(&field, prec).unwrap();
        let s = random_system(&ring, n, seed);
        let text = SystemFile::from_system(&s, seed).to_string();
        let back = SystemFile::parse(&text).unwrap();
        prop_assert_eq!(back.seed, seed);
        prop_assert_eq!(back.system(None).unwrap(), s);
    }
}
