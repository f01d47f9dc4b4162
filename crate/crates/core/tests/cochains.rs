use std::sync::Arc;

use pinquad::cochain::{cup, sq, Cochain, CohomologySolver, Int, Z2};
use pinquad::gf2::BitVec;
use pinquad::identities::{random_complex, random_int_cochain, random_z2_cochain, run_suite, IdentityConfig, Suite};
use pinquad::scx::{catalog, ComplexPair};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIXTURES: &[&str] = &["rp2", "torus", "klein", "mobius", "annulus", "solid_torus", "sphere3"];

fn relative_cochain(rng: &mut ChaCha8Rng, pair: &ComplexPair, k: usize) -> Cochain<Z2> {
    let mut c = Cochain::zero(pair.ambient().clone(), k);
    for j in pair.relative_indices(k) {
        if rng.gen_bool(0.5) {
            c.set(j, Z2::ONE);
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn decomposition_rebuilds_the_cocycle(fixture in 0..FIXTURES.len(), k in 0usize..3, seed in any::<u64>()) {
        let m = catalog(FIXTURES[fixture]).unwrap();
        let solver = CohomologySolver::new(m.pair(), k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coords = BitVec::from_bools((0..solver.dim()).map(|_| rng.gen_bool(0.5)));
        let mut p = solver.reconstruct(&coords);
        if k > 0 {
            p = &p + &relative_cochain(&mut rng, m.pair(), k - 1).d();
        }
        let dec = solver.decompose(&p).unwrap();
        prop_assert_eq!(&dec.coords, &coords);
        let mut rebuilt = solver.reconstruct(&dec.coords);
        if k > 0 {
            rebuilt = &rebuilt + &dec.certificate.d();
        }
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn cup_coboundary_formula_over_integers(seed in any::<u64>(), dim in 1usize..5, p in 0usize..3, q in 0usize..3, i in 0i64..3) {
        prop_assume!(i as usize <= p.min(q));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&mut rng, dim);
        let (u, v) = (random_int_cochain(&mut rng, &x, p), random_int_cochain(&mut rng, &x, q));
        let sign = |e: i64| if e.rem_euclid(2) == 0 { Int(1) } else { Int(-1) };
        let lhs = cup(&u, &v, i).unwrap().d();
        let (p, q) = (p as i64, q as i64);
        let scaled = |c: Cochain<Int>, e: i64| c.map(|x| x * sign(e));
        let inner = &(&cup(&u.d(), &v, i).unwrap() + &scaled(cup(&u, &v.d(), i).unwrap(), p))
            - &(&cup(&u, &v, i - 1).unwrap() + &scaled(cup(&v, &u, i - 1).unwrap(), i + p * q));
        let rhs = scaled(inner, i);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squares_commute_with_d(seed in any::<u64>(), dim in 1usize..5, k in 0usize..4, i in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&mut rng, dim);
        let c = random_z2_cochain(&mut rng, &x, k);
        prop_assert_eq!(sq(i, &c).d(), sq(i, &c.d()));
    }

    #[test]
    fn identity_suites_pass_for_any_seed(seed in any::<u64>()) {
        let cfg = IdentityConfig { seed, trials: 4, ..IdentityConfig::default() };
        for s in Suite::ALL {
            let r = run_suite(s, &cfg);
            prop_assert!(r.passed(), "{}: {:?}", s.name(), r.first_failure);
        }
    }
}

#[test]
fn cochains_on_a_shared_complex_compare_by_content() {
    let a = catalog("torus").unwrap();
    let b = catalog("torus").unwrap();
    let ca: Cochain<Z2> = Cochain::zero(a.complex().clone(), 1);
    let cb: Cochain<Z2> = Cochain::zero(Arc::clone(b.complex()), 1);
    assert_eq!(ca, cb);
}
