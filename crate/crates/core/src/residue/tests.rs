use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::ff::FqField;
use crate::forms::Form;

fn form(field: &Arc<FqField>, n: usize, d: usize, terms: &[(&[u8], i64)]) -> FqForm {
    Form::from_terms(
        field,
        n,
        d,
        terms.iter().map(|(m, c)| (m.to_vec(), field.int(*c))),
    )
    .unwrap()
}

fn random_form(field: &Arc<FqField>, n: usize, d: usize, rng: &mut ChaCha8Rng) -> FqForm {
    let monos = crate::forms::monomials(n, d);
    Form::from_terms(
        field,
        n,
        d,
        monos.into_iter().map(|m| (m, field.random(rng))),
    )
    .unwrap()
}

fn check(f: &FqForm, g: &FqForm, x: &[Fq]) {
    assert!(f.evaluate(x).unwrap().is_zero());
    assert!(g.evaluate(x).unwrap().is_zero());
    assert_eq!(jacobian_rank(f, g, x), 2);
}

fn deg_shape(f: FqForm, g2: FqForm, g: FqForm, shape: Shape) -> NormalizedSystem {
    let n = f.nvars();
    let field = f.field().clone();
    let f2 = Form::new(f.poly().coeff_in(0, 1), 2).unwrap();
    let f3 = Form::new(f.poly().coeff_in(0, 0), 3).unwrap();
    NormalizedSystem {
        tau: crate::linalg::identity(&field, n),
        shape,
        f,
        g,
        f2,
        f3,
        g2,
    }
}

#[test]
fn step1_on_diagonal_cubic() {
    let f7 = FqField::prime(7).unwrap();
    let f = form(
        &f7,
        6,
        3,
        &[
            (&[3, 0, 0, 0, 0, 0], 1),
            (&[0, 3, 0, 0, 0, 0], 1),
            (&[0, 0, 3, 0, 0, 0], 1),
            (&[0, 0, 0, 3, 0, 0], 1),
            (&[0, 0, 0, 0, 3, 0], 1),
            (&[0, 0, 0, 0, 0, 3], 1),
        ],
    );
    let g = form(
        &f7,
        6,
        2,
        &[(&[1, 1, 0, 0, 0, 0], 1), (&[0, 0, 1, 1, 0, 0], -1)],
    );
    let (x, _) = find_zero_with_gradient(&f, &g, &ResidueOptions::default()).unwrap();
    assert!(f.evaluate(&x).unwrap().is_zero() && g.evaluate(&x).unwrap().is_zero());
    assert!(g.gradient(&x).unwrap().iter().any(|c| !c.is_zero()));
    let sol = solve_residue(&f, &g, &ResidueOptions::default()).unwrap();
    check(&f, &g, &sol.x);
}

#[test]
fn deg0_delta3_example() {
    // f = x2^3 + x3^3 + 2 x4^3, g = x1 x2 + x3 x4 over F_7
    let f7 = FqField::prime(7).unwrap();
    let f = form(
        &f7,
        4,
        3,
        &[(&[0, 3, 0, 0], 1), (&[0, 0, 3, 0], 1), (&[0, 0, 0, 3], 2)],
    );
    let g2 = form(&f7, 4, 2, &[(&[0, 0, 1, 1], 1)]);
    let g = form(&f7, 4, 2, &[(&[1, 1, 0, 0], 1)]).add(&g2);
    let ns = deg_shape(f.clone(), g2, g.clone(), Shape::Deg0);
    let x = solve_deg0(&ns, &ResidueOptions::default()).unwrap();
    assert!(!x[1].is_zero());
    check(&f, &g, &x);
}

#[test]
fn deg0_delta2_returns_e2() {
    let f7 = FqField::prime(7).unwrap();
    let f = form(&f7, 4, 3, &[(&[0, 2, 1, 0], 1), (&[0, 0, 0, 3], 1)]);
    let g2 = form(&f7, 4, 2, &[(&[0, 0, 1, 1], 1)]);
    let g = form(&f7, 4, 2, &[(&[1, 1, 0, 0], 1)]).add(&g2);
    let ns = deg_shape(f.clone(), g2, g.clone(), Shape::Deg0);
    let x = solve_deg0(&ns, &ResidueOptions::default()).unwrap();
    assert_eq!(x, normal::unit(&f7, 4, 1));
    check(&f, &g, &x);
}

#[test]
fn deg0_delta1_and_delta0() {
    let f11 = FqField::prime(11).unwrap();
    let g2 = form(&f11, 5, 2, &[(&[0, 0, 1, 1, 0], 1), (&[0, 0, 0, 0, 2], 1)]);
    let g = form(&f11, 5, 2, &[(&[1, 1, 0, 0, 0], 1)]).add(&g2);
    // δ = 1: x2 x3^2 + x4^3 + x5^3
    let f = form(
        &f11,
        5,
        3,
        &[
            (&[0, 1, 2, 0, 0], 1),
            (&[0, 0, 0, 3, 0], 1),
            (&[0, 0, 0, 0, 3], 1),
        ],
    );
    let x = solve_deg0(
        &deg_shape(f.clone(), g2.clone(), g.clone(), Shape::Deg0),
        &ResidueOptions::default(),
    )
    .unwrap();
    assert!(!x[1].is_zero());
    check(&f, &g, &x);
    // δ = 0: x3^3 + x4^3 + x5^3
    let f = form(
        &f11,
        5,
        3,
        &[
            (&[0, 0, 3, 0, 0], 1),
            (&[0, 0, 0, 3, 0], 1),
            (&[0, 0, 0, 0, 3], 1),
        ],
    );
    let x = solve_deg0(
        &deg_shape(f.clone(), g2, g.clone(), Shape::Deg0),
        &ResidueOptions::default(),
    )
    .unwrap();
    check(&f, &g, &x);
}

#[test]
fn build_h_example_and_identity() {
    let f7 = FqField::prime(7).unwrap();
    let f2 = form(&f7, 4, 2, &[(&[0, 0, 2, 0], 1)]);
    let f3 = form(&f7, 4, 3, &[(&[0, 0, 3, 0], 1)]);
    let g2 = form(&f7, 4, 2, &[(&[0, 0, 0, 2], 1)]);
    let x1 = form(&f7, 4, 1, &[(&[1, 0, 0, 0], 1)]);
    let f = x1.mul(&f2).add(&f3);
    let g = form(&f7, 4, 2, &[(&[1, 1, 0, 0], 1)]).add(&g2);
    let ns = deg_shape(f.clone(), g2.clone(), g, Shape::Deg1);
    let h = build_h(&ns);
    assert_eq!(
        h,
        form(&f7, 4, 4, &[(&[0, 1, 3, 0], 1), (&[0, 0, 2, 2], -1)])
    );

    // H(x) = x2 f(-g2/x2, x2, …) at random points
    let p307 = FqField::prime(307).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 7;
    let f2 = random_form(&p307, n - 2, 2, &mut rng).embed_vars(n, &(2..n).collect::<Vec<_>>());
    let f3 = random_form(&p307, n - 1, 3, &mut rng).embed_vars(n, &(1..n).collect::<Vec<_>>());
    let g2 = random_form(&p307, n - 2, 2, &mut rng).embed_vars(n, &(2..n).collect::<Vec<_>>());
    let x1 = form(&p307, n, 1, &[(&[1, 0, 0, 0, 0, 0, 0], 1)]);
    let x1x2 = form(&p307, n, 2, &[(&[1, 1, 0, 0, 0, 0, 0], 1)]);
    let f = x1.mul(&f2).add(&f3);
    let g = x1x2.add(&g2);
    let ns = deg_shape(f.clone(), g2.clone(), g, Shape::Deg1);
    let h = build_h(&ns);
    for _ in 0..100 {
        let mut x: Vec<Fq> = (0..n).map(|_| p307.random(&mut rng)).collect();
        if x[1].is_zero() {
            continue;
        }
        let hv = h.evaluate(&x).unwrap();
        x[0] = -(g2.evaluate(&x).unwrap() * x[1].inv().unwrap());
        assert_eq!(hv, &x[1] * &f.evaluate(&x).unwrap());
    }
}

#[test]
fn deg1_random_system_over_f307() {
    let p307 = FqField::prime(307).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 8;
    let f2 = random_form(&p307, n - 2, 2, &mut rng).embed_vars(n, &(2..n).collect::<Vec<_>>());
    let f3 = random_form(&p307, n - 1, 3, &mut rng).embed_vars(n, &(1..n).collect::<Vec<_>>());
    let g2 = random_form(&p307, n - 2, 2, &mut rng).embed_vars(n, &(2..n).collect::<Vec<_>>());
    let mut m1 = vec![0u8; n];
    m1[0] = 1;
    let x1 = Form::from_terms(&p307, n, 1, [(m1.clone(), p307.one())]).unwrap();
    m1[1] = 1;
    let x1x2 = Form::from_terms(&p307, n, 2, [(m1, p307.one())]).unwrap();
    let f = x1.mul(&f2).add(&f3);
    let g = x1x2.add(&g2);
    let ns = deg_shape(f.clone(), g2, g.clone(), Shape::Deg1);
    let (x, stats) = solve_deg1(&ns, &ResidueOptions::default()).unwrap();
    check(&f, &g, &x);
    assert!(stats.slices >= 1);
}

#[test]
fn small_characteristic_rejected() {
    let f3 = FqField::prime(3).unwrap();
    let f = form(&f3, 3, 3, &[(&[3, 0, 0], 1)]);
    let g = form(&f3, 3, 2, &[(&[1, 1, 0], 1)]);
    assert_eq!(
        solve_residue(&f, &g, &ResidueOptions::default()).unwrap_err(),
        ResidueError::Characteristic(3)
    );
}

#[test]
fn random_dense_system_is_deterministic() {
    let p307 = FqField::prime(307).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let f = random_form(&p307, 14, 3, &mut rng);
    let g = random_form(&p307, 14, 2, &mut rng);
    let opts = ResidueOptions {
        seed: 9,
        ..Default::default()
    };
    let a = solve_residue(&f, &g, &opts).unwrap();
    let b = solve_residue(&f, &g, &opts).unwrap();
    check(&f, &g, &a.x);
    assert_eq!(a.x, b.x);
}
