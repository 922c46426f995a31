//! Run verification suites from code and print their JSON reports.

use quiverhall::hallfq::{Twist, DEFAULT_TWIST};
use quiverhall::qring::Prime;
use quiverhall::quiverlab::{cartan_matrix, presets};
use quiverhall::theorems::{verify_concatenation, verify_engine_cross, DegreeBound, SuiteConfig};

fn main() -> quiverhall::Result<()> {
    let qs = [Prime::new(2)?];
    let a2 = presets::a2();
    let cfg = SuiteConfig::default();
    let ok = verify_concatenation(&a2, &DegreeBound::Total(3), &qs, DEFAULT_TWIST, &cfg)?;
    println!("{}", ok.to_text());
    let bad = verify_concatenation(&a2, &DegreeBound::Total(3), &qs, Twist { offset: 1, ..DEFAULT_TWIST }, &cfg)?;
    println!("corrupted twist: {:?}\n{}", bad.status, serde_json::to_string_pretty(&bad.counterexample).unwrap());
    let wrong = cartan_matrix(&a2).with_entry(0, 1, -2);
    let r = verify_engine_cross(&a2, &DegreeBound::Total(3), &qs, Some(&wrong))?;
    println!("{}", r.to_json());
    Ok(())
}
