mod common;

use common::prime;
use proptest::prelude::*;
use quiverhall::hallfq::{
    flag_pair_gram, hall_product, l_function, n_i_of_point, tabulated_gram, HallFunction, RepSpace, DEFAULT_BUDGET,
    DEFAULT_TWIST,
};
use quiverhall::quiverlab::{enumerate_flag_types, presets, DimensionVector, FlagMode, FlagType};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn induction_is_associative() {
    for q in [presets::jordan(), presets::a2(), presets::mixed(1)] {
        let n = q.vertex_count();
        let p = prime(2);
        let f = |v: usize, m: u32| l_function(&q, &FlagType::single(v, m), p, DEFAULT_BUDGET).unwrap();
        let (a, b, c) = (f(0, 1), f(n - 1, 1), f(0, 1));
        let ab_c = hall_product(&hall_product(&a, &b, DEFAULT_TWIST, DEFAULT_BUDGET).unwrap(), &c, DEFAULT_TWIST, DEFAULT_BUDGET).unwrap();
        let a_bc = hall_product(&a, &hall_product(&b, &c, DEFAULT_TWIST, DEFAULT_BUDGET).unwrap(), DEFAULT_TWIST, DEFAULT_BUDGET).unwrap();
        assert_eq!(ab_c, a_bc);
    }
}

#[test]
fn flag_pair_gram_equals_tabulated_pairing() {
    let q = presets::two_loop();
    let nu = DimensionVector::new(vec![2]);
    let types = enumerate_flag_types(&q, &nu, FlagMode::All);
    for p in [2, 3] {
        assert_eq!(flag_pair_gram(&q, &nu, prime(p), &types).unwrap(), tabulated_gram(&q, prime(p), &types, DEFAULT_BUDGET).unwrap());
    }
}

#[test]
fn gram_matrices_are_positive_semidefinite() {
    for q in [presets::jordan(), presets::two_loop(), presets::a2(), presets::mixed(2)] {
        for nu in DimensionVector::all_up_to_total(q.vertex_count(), 3) {
            let types = enumerate_flag_types(&q, &nu, FlagMode::All);
            assert!(flag_pair_gram(&q, &nu, prime(3), &types).unwrap().is_positive_semidefinite(), "{nu}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn flag_functions_are_constant_on_orbits(seed in any::<u64>(), which in 0usize..4) {
        let q = presets::mixed(1);
        let nu = DimensionVector::new(vec![1, 2]);
        let types = enumerate_flag_types(&q, &nu, FlagMode::All);
        let f: HallFunction = l_function(&q, &types[which % types.len()], prime(3), DEFAULT_BUDGET).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(f.orbit_counterexample(50, &mut rng), None);
    }

    #[test]
    fn sink_codimension_is_orbit_invariant_and_bounded(seed in any::<u64>()) {
        let q = presets::mixed(2);
        let s = RepSpace::new(&q, &DimensionVector::new(vec![1, 2]), prime(3)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = s.random_point(&mut rng);
        let g = s.random_group_element(&mut rng);
        let n = n_i_of_point(&s, &x, 1).unwrap();
        prop_assert!(n <= 2);
        prop_assert_eq!(n_i_of_point(&s, &s.act(&g, &x), 1).unwrap(), n);
        prop_assert_eq!(n_i_of_point(&s, &s.zero_point(), 1).unwrap(), 2);
    }
}
