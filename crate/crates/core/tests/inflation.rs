mod common;

use proptest::prelude::*;
use quadalg::inflate::{construct5, inflate, r31_seed, r32_seed, BiSeed};
use quadalg::FieldSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seeds() -> [BiSeed; 2] {
    [r31_seed(FieldSpec::rationals()).unwrap(), r32_seed(FieldSpec::rationals()).unwrap()]
}

#[test]
fn count_grid() {
    for seed in seeds() {
        let (gx, gy) = (seed.g_x(), seed.g_y());
        let (rxx, ryy, rxy) = (seed.r_xx(), seed.r_yy(), seed.r_xy());
        for alpha in 0..=4u32 {
            for beta in 0..=4u32 {
                if alpha + beta == 0 {
                    assert!(inflate(&seed, 0, 0).is_err());
                    continue;
                }
                let r = inflate(&seed, alpha, beta).unwrap();
                let (a, b) = (alpha as usize, beta as usize);
                assert_eq!(r.generator_count(), gx * a + gy * b);
                assert_eq!(r.relation_count(), rxx * a * a + ryy * b * b + rxy * a * b);
                assert_eq!(r.ids.len(), r.relation_count());
                assert!(r.presentation.is_quadratic());
            }
        }
    }
}

#[test]
fn construct5_counts_through_30() {
    for n in 1..=30u32 {
        for field in [FieldSpec::rationals(), FieldSpec::new(2).unwrap()] {
            let r = construct5(n, field).unwrap();
            assert_eq!(r.generator_count() as u32, n);
            assert_eq!(r.relation_count() as u32, (n * n).div_ceil(3), "n = {n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hom_identities(seed_ix in 0usize..2, alpha in 1u32..4, beta in 1u32..4, rng_seed in any::<u64>()) {
        let seed = &seeds()[seed_ix];
        let big = seed.alphabet(alpha, beta).unwrap();
        let small = seed.alphabet(1, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let w = common::random_word(&mut rng, big.len(), 8);
        prop_assert_eq!(common::hom_identities(&big, &small, &w), Ok(()));
    }

    #[test]
    fn lift_round_trip(seed_ix in 0usize..2, alpha in 1u32..5, beta in 1u32..5, rng_seed in any::<u64>()) {
        let seed = &seeds()[seed_ix];
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let case = common::random_lift(&mut rng, seed, alpha, beta);
        prop_assert_eq!(common::lift_round_trip(seed, alpha, beta, &case), Ok(()));
    }
}
