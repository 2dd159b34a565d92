use garnir::eigen::{alternating_condition, spectral_trace, trace_identity_check};
use garnir::tabloid::permute;
use garnir::{
    binomial, eta_apply, eta_matrix_closed_form, omega, Permutation, TabloidBasis, TabloidVector,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn triple(n_max: usize) -> impl Strategy<Value = (usize, usize, usize)> {
    (1..=n_max)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, m)| (Just(n), Just(m), 1..=m))
}

fn small_shape() -> impl Strategy<Value = (usize, usize, usize)> {
    (1usize..=5)
        .prop_flat_map(|m| (m..=(8 - m).max(m), Just(m)))
        .prop_filter("n + m <= 8", |(n, m)| n + m <= 8)
        .prop_flat_map(|(n, m)| (Just(n), Just(m), 1..=m))
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn top_component_is_always_killed((n, m, l) in triple(60)) {
        prop_assert!(omega(n, m, l, m).unwrap().is_zero());
    }

    #[test]
    fn spectral_trace_equals_diagonal_sum((n, m, l) in triple(40)) {
        prop_assert!(trace_identity_check(n, m, l).unwrap());
        prop_assert_eq!(
            spectral_trace(n, m, l).unwrap(),
            binomial(m, l as i64) * binomial(n + m, n as i64)
        );
    }

    #[test]
    fn nonvanishing_matches_alternating_sums((n, m, l) in triple(60)) {
        let omega_ok = (0..m).all(|i| !omega(n, m, l, i).unwrap().is_zero());
        prop_assert_eq!(omega_ok, alternating_condition(n, m, l).unwrap());
    }

    #[test]
    fn single_exchange_never_vanishes_below_top((n, m, _) in triple(60)) {
        for i in 0..m {
            prop_assert!(omega(n, m, 1, i).unwrap() > BigInt::zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn operator_matrix_agrees_with_direct_application(
        (n, m, l) in small_shape(),
        picks in proptest::collection::vec((any::<prop::sample::Index>(), -4i64..=4), 1..5),
    ) {
        let basis = TabloidBasis::two_column(n, m).unwrap();
        let mut v = TabloidVector::zero(basis.shape().clone());
        for (idx, c) in &picks {
            v.add_term(basis.tabloid_at(idx.index(basis.len())).clone(), q(*c));
        }
        let h = eta_matrix_closed_form(n, m, l).unwrap().to_exact();
        let coords = basis.coordinates(&v).unwrap();
        let via_matrix = basis.vector(&h.mul_vec(&coords));
        prop_assert_eq!(via_matrix, eta_apply(&v, l).unwrap());
    }

    #[test]
    fn eta_is_linear_and_equivariant(
        (n, m, l) in small_shape(),
        seed in any::<u64>(),
        a in -3i64..=3,
    ) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let basis = TabloidBasis::two_column(n, m).unwrap();
        let mut images: Vec<usize> = (1..=n + m).collect();
        images.shuffle(&mut rng);
        let sigma = Permutation::new(images).unwrap();
        let x = TabloidVector::basis_vector(basis.tabloid_at(0).clone());
        let y = TabloidVector::basis_vector(basis.tabloid_at(basis.len() - 1).clone());
        let combo = x.scale(&q(a)).add(&y);
        let lhs = eta_apply(&combo, l).unwrap();
        let rhs = eta_apply(&x, l).unwrap().scale(&q(a)).add(&eta_apply(&y, l).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(
            eta_apply(&permute(&sigma, &combo).unwrap(), l).unwrap(),
            permute(&sigma, &lhs).unwrap()
        );
    }
}
