//! Search the twist grid for the `v`-power that makes the concatenation
//! identity hold on all preset quivers.

use quiverhall::qring::Prime;
use quiverhall::quiverlab::presets;
use quiverhall::theorems::{calibrate_twist, DegreeBound, SuiteConfig};

fn main() -> quiverhall::Result<()> {
    let quivers: Vec<_> = presets::NAMES.iter().map(|n| presets::by_name(n).unwrap()).collect();
    let qs = [Prime::new(2)?, Prime::new(3)?];
    let cal = calibrate_twist(&quivers, &DegreeBound::Total(3), &qs, &SuiteConfig::default())?;
    for t in &cal.passing {
        println!("passes with v = +sqrt q: {t}");
    }
    for t in &cal.passing_negative {
        println!("passes with v = -sqrt q: {t}");
    }
    Ok(())
}
