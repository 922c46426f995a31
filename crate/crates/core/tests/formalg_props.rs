mod common;

use std::collections::BTreeMap;

use common::small_quiver;
use proptest::prelude::*;
use quiverhall::formalg::{
    coproduct_r, multiply, pair, pair_tensor, radical_quotient_dim, relations, AlgebraElement, GeneratorSet, Word,
};
use quiverhall::qring::RationalFunction;
use quiverhall::quiverlab::{cartan_matrix, Quiver};

fn word(q: &Quiver, len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..q.vertex_count(), 0..=len).prop_map(Word)
}

fn quiver_and_words() -> impl Strategy<Value = (Quiver, Word, Word, Word)> {
    small_quiver().prop_flat_map(|q| {
        let w = (word(&q, 2), word(&q, 2), word(&q, 2));
        (Just(q), w).prop_map(|(q, (a, b, c))| (q, a, b, c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_is_symmetric((q, a, b, _) in quiver_and_words()) {
        let gs = GeneratorSet::standard(&q);
        let x = AlgebraElement::word(&gs, a);
        let y = AlgebraElement::word(&gs, b);
        prop_assert_eq!(pair(&gs, &x, &y).unwrap(), pair(&gs, &y, &x).unwrap());
    }

    #[test]
    fn form_is_adjoint_to_coproduct((q, a, b, c) in quiver_and_words()) {
        let gs = GeneratorSet::standard(&q);
        let (x, y) = (AlgebraElement::word(&gs, a), AlgebraElement::word(&gs, b));
        let z = AlgebraElement::word(&gs, c.concat(&Word(vec![0])));
        let lhs = pair(&gs, &multiply(&x, &y).unwrap(), &z).unwrap();
        let rhs = pair_tensor(&gs, &coproduct_r(&gs, &z).unwrap(), &x, &y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_coassociative((q, a, b, _) in quiver_and_words()) {
        let gs = GeneratorSet::standard(&q);
        let z = AlgebraElement::word(&gs, a.concat(&b));
        let r = coproduct_r(&gs, &z).unwrap();
        let mut left: BTreeMap<(Word, Word, Word), RationalFunction> = BTreeMap::new();
        let mut right = left.clone();
        for ((u, w), c) in r.terms() {
            for ((u1, u2), d) in coproduct_r(&gs, &AlgebraElement::word(&gs, u.clone())).unwrap().terms() {
                let e = left.entry((u1.clone(), u2.clone(), w.clone())).or_insert_with(RationalFunction::zero);
                *e = &*e + &(c * d);
            }
            for ((w1, w2), d) in coproduct_r(&gs, &AlgebraElement::word(&gs, w.clone())).unwrap().terms() {
                let e = right.entry((u.clone(), w1.clone(), w2.clone())).or_insert_with(RationalFunction::zero);
                *e = &*e + &(c * d);
            }
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn relations_lie_in_the_radical(q in small_quiver()) {
        let gs = GeneratorSet::standard(&q);
        for rho in relations(&gs, &cartan_matrix(&q)).unwrap() {
            let Some(d) = rho.degree(&gs).unwrap() else { continue };
            if d.total() > 4 {
                continue;
            }
            for w in gs.words_of_degree(&d) {
                prop_assert!(pair(&gs, &rho, &AlgebraElement::word(&gs, w)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rescaling_constants_keeps_the_radical((q, a, _, _) in quiver_and_words(), k in 1i64..4) {
        let gs = GeneratorSet::standard(&q);
        let scaled: Vec<RationalFunction> = gs.generators().iter().map(|g| &g.c * &RationalFunction::from_int(k)).collect();
        let gs2 = gs.with_constants(scaled).unwrap();
        let nu = gs.word_degree(&a.concat(&Word(vec![0])));
        prop_assert_eq!(radical_quotient_dim(&gs, &nu).0, radical_quotient_dim(&gs2, &nu).0);
    }
}
