//! Named verification suites tying both engines together, each producing a
//! machine-readable [`VerificationReport`].

pub mod report;
pub mod suites;

pub use report::{Instance, Status, VerificationReport};
pub use suites::{
    calibrate_twist, concatenation_data, verify_c_equiv, verify_concatenation, verify_engine_cross, verify_m_dims,
    verify_orientation, verify_primitive_dims, verify_serre_in_radical, verify_vector_bundle, Calibration,
    ConcatenationData, DegreeBound, SuiteConfig, VSign,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hallfq::{Twist, DEFAULT_TWIST};
    use crate::qring::Prime;
    use crate::quiverlab::{cartan_matrix, presets};

    fn primes(ps: &[u64]) -> Vec<Prime> {
        ps.iter().map(|&p| Prime::new(p).unwrap()).collect()
    }

    #[test]
    fn concatenation_small() {
        let cfg = SuiteConfig::default();
        let data = concatenation_data(&presets::a2(), &DegreeBound::Total(2), &primes(&[2]), &cfg).unwrap();
        assert!(data.evaluate(DEFAULT_TWIST, VSign::Plus).passed());
        let bad = data.evaluate(Twist { offset: 1, ..DEFAULT_TWIST }, VSign::Plus);
        assert!(!bad.passed());
        assert!(bad.counterexample.is_some());
    }

    #[test]
    fn serre_and_cross() {
        let a2 = presets::a2();
        let r = verify_serre_in_radical(&a2, &DegreeBound::Total(3)).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_engine_cross(&a2, &DegreeBound::Total(3), &primes(&[2]), None).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let wrong = cartan_matrix(&a2).with_entry(0, 1, -2);
        let r = verify_engine_cross(&a2, &DegreeBound::Total(3), &primes(&[2]), Some(&wrong)).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn c_equiv_precondition() {
        let err = verify_c_equiv(&presets::mixed(1), &presets::a2(), &DegreeBound::Total(1), &primes(&[2]));
        assert!(err.is_err());
        let ok = verify_c_equiv(&presets::mixed(1), &presets::mixed(2), &DegreeBound::Total(2), &primes(&[2])).unwrap();
        assert!(ok.passed() && ok.preamble.is_some());
    }

    #[test]
    fn report_json_round_trip() {
        let r = verify_orientation(&presets::a2(), &DegreeBound::Total(2), &primes(&[2])).unwrap();
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
