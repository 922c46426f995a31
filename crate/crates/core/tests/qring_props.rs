mod common;

use common::prime;
use num_bigint::BigInt;
use proptest::prelude::*;
use quiverhall::hallfq::fq::{enumerate_subspaces, Fq};
use quiverhall::qring::{
    evaluate_at_sqrt_q, gaussian_binomial, quantum_integer, ExactMatrix, LaurentPolynomial, QuadraticFieldElement,
    RationalFunction,
};

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (-4i64..=4, prop::collection::vec(-5i64..=5, 0..5))
        .prop_map(|(low, cs)| LaurentPolynomial::from_coeffs(low, cs.into_iter().map(BigInt::from).collect()))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(n, d)| {
        (!d.is_zero()).then(|| RationalFunction::new(n, d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bar_is_an_involutive_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let q = prime(p);
        prop_assert_eq!(evaluate_at_sqrt_q(&(&a * &b), q), &evaluate_at_sqrt_q(&a, q) * &evaluate_at_sqrt_q(&b, q));
        prop_assert_eq!(evaluate_at_sqrt_q(&(&a + &b), q), &evaluate_at_sqrt_q(&a, q) + &evaluate_at_sqrt_q(&b, q));
    }

    #[test]
    fn rational_functions_form_a_field(a in ratfunc(), b in ratfunc()) {
        let s = &a + &b;
        prop_assert_eq!(&s - &b, a.clone());
        if let Some(inv) = b.inv() {
            prop_assert!((&b * &inv).is_one());
            prop_assert_eq!(&(&a * &b) * &inv, a.clone());
        }
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in prop::collection::vec(prop::collection::vec(ratfunc(), 4), 1..4)) {
        let m = ExactMatrix::from_rows(rows, 4, &RationalFunction::one()).unwrap();
        let k = m.kernel();
        prop_assert_eq!(k.len() + m.rank(), 4);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(RationalFunction::is_zero));
        }
    }

    #[test]
    fn rank_ignores_row_order(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 1..5), seed in any::<u64>()) {
        let q = prime(3);
        let conv = |r: &Vec<i64>| r.iter().map(|&c| QuadraticFieldElement::from_int(c, q)).collect::<Vec<_>>();
        let a: Vec<_> = rows.iter().map(conv).collect();
        let mut b = a.clone();
        let k = b.len();
        b.rotate_left((seed as usize) % k);
        b.reverse();
        let one = QuadraticFieldElement::one(q);
        let ma = ExactMatrix::from_rows(a, 3, &one).unwrap();
        let mb = ExactMatrix::from_rows(b, 3, &one).unwrap();
        prop_assert_eq!(ma.rank(), mb.rank());
        prop_assert_eq!(ma.reduced_echelon().rows, mb.reduced_echelon().rows);
    }

    #[test]
    fn quantum_integers_are_bar_invariant(n in -6i64..=6) {
        prop_assert_eq!(quantum_integer(n).bar(), quantum_integer(n));
    }
}

#[test]
fn subspace_counts_match_gaussian_binomials() {
    for p in [2u64, 3] {
        let f = Fq::new(prime(p));
        for n in 0..=4usize {
            for k in 0..=n {
                let count = enumerate_subspaces(f, n, k).len() as i64;
                let b = gaussian_binomial(n as i64, k as i64).unwrap();
                let shift = QuadraticFieldElement::sqrt_q_pow((k * (n - k)) as i64, prime(p));
                assert_eq!(&evaluate_at_sqrt_q(&b, prime(p)) * &shift, QuadraticFieldElement::from_int(count, prime(p)));
            }
        }
    }
}
