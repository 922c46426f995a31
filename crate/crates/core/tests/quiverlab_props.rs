mod common;

use common::{prime, small_quiver};
use proptest::prelude::*;
use quiverhall::hallfq::{enumerate_flags, RepSpace};
use quiverhall::qring::{evaluate_at_sqrt_q, QuadraticFieldElement};
use quiverhall::quiverlab::{
    bridge_type, cartan_matrix, enumerate_flag_types, flag_dims, symmetric_form, DimensionVector, FlagMode, Quiver,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cartan_is_borcherds_and_orientation_free(q in small_quiver()) {
        let c = cartan_matrix(&q);
        prop_assert!(c.is_borcherds());
        for k in q.non_loop_arrows() {
            prop_assert_eq!(&cartan_matrix(&q.flip_arrow(k)).entries, &c.entries);
        }
        for i in 0..q.vertex_count() {
            prop_assert_eq!(c.real[i], !q.is_imaginary(i));
        }
    }

    #[test]
    fn symmetric_form_is_symmetric(q in small_quiver(), a in prop::collection::vec(0u32..3, 3), b in prop::collection::vec(0u32..3, 3)) {
        let n = q.vertex_count();
        let a = DimensionVector::new(a[..n].to_vec());
        let b = DimensionVector::new(b[..n].to_vec());
        prop_assert_eq!(symmetric_form(&q, &a, &b).unwrap(), symmetric_form(&q, &b, &a).unwrap());
    }

    #[test]
    fn bridge_is_idempotent_and_lands_in_full_flags(q in small_quiver(), nu in prop::collection::vec(0u32..3, 3)) {
        let nu = DimensionVector::new(nu[..q.vertex_count()].to_vec());
        prop_assume!(!nu.is_zero());
        for f in enumerate_flag_types(&q, &nu, FlagMode::All) {
            let b = bridge_type(&q, &f);
            prop_assert!(b.is_full_flag(&q));
            prop_assert_eq!(bridge_type(&q, &b), b.clone());
            prop_assert_eq!(b.degree(q.vertex_count()), nu.clone());
        }
    }

    #[test]
    fn json_round_trips(q in small_quiver()) {
        let back = Quiver::from_json(&q.to_json()).unwrap();
        prop_assert_eq!(back.content_hash(), q.content_hash());
        prop_assert_eq!(back, q);
    }
}

#[test]
fn flag_point_counts_match_enumeration() {
    for q in [quiverhall::quiverlab::presets::mixed(1), quiverhall::quiverlab::presets::jordan()] {
        for nu in DimensionVector::all_up_to_total(q.vertex_count(), 3) {
            for p in [2, 3] {
                let s = RepSpace::new(&q, &nu, prime(p)).unwrap();
                for f in enumerate_flag_types(&q, &nu, FlagMode::All) {
                    let d = flag_dims(&q, &f);
                    let closed = &evaluate_at_sqrt_q(&d.flag_point_count, prime(p)) * &QuadraticFieldElement::sqrt_q_pow(d.dim_flag, prime(p));
                    assert_eq!(closed, QuadraticFieldElement::from_int(enumerate_flags(&s, &f).len() as i64, prime(p)));
                }
            }
        }
    }
}

#[test]
fn file_errors_are_located() {
    let err = Quiver::from_json("{\"vertices\": [\"1\"],\n \"arrows\": [}").unwrap_err().to_string();
    assert!(err.contains("line 2"), "{err}");
    let err = Quiver::from_json(r#"{"vertices":["1"],"arrows":[{"src":"1","tgt":"9"}]}"#).unwrap_err().to_string();
    assert!(err.contains('9'), "{err}");
    assert!(Quiver::from_json(r#"{"vertices":["1","1"],"arrows":[]}"#).is_err());
    let k = Quiver::from_json(r#"{"vertices":["1","2"],"arrows":[{"src":"1","tgt":"2"},{"src":"1","tgt":"2"}]}"#).unwrap();
    assert_eq!(cartan_matrix(&k).get(0, 1), -2);
}
