//! Ranks and kernel fingerprints of monomial spans, against the symbolic
//! dimensions, for every preset quiver.

use quiverhall::formalg::{radical_quotient_dim, GeneratorSet};
use quiverhall::hallfq::span_analysis_mode;
use quiverhall::qring::Prime;
use quiverhall::quiverlab::{presets, DimensionVector, FlagMode};

fn main() -> quiverhall::Result<()> {
    let p = Prime::new(3)?;
    for name in presets::NAMES {
        let q = presets::by_name(name).unwrap();
        let gs = GeneratorSet::standard(&q);
        for nu in DimensionVector::all_up_to_total(q.vertex_count(), 3) {
            let r = span_analysis_mode(&q, &nu, p, FlagMode::FullFlag)?;
            let all = span_analysis_mode(&q, &nu, p, FlagMode::All)?;
            println!(
                "{name:<9} {nu:<8} full-flag rank {} (symbolic {}), all-monomial rank {}, {} relations",
                r.rank,
                radical_quotient_dim(&gs, &nu).0,
                all.rank,
                all.fingerprint.len()
            );
        }
    }
    Ok(())
}
