//! Primitive elements at `m e_i` from both engines.

use quiverhall::formalg::{primitive_space_symbolic, GeneratorSet};
use quiverhall::hallfq::primitive_space_fq;
use quiverhall::qring::Prime;
use quiverhall::quiverlab::presets;

fn main() -> quiverhall::Result<()> {
    for (name, q) in [("jordan", presets::jordan()), ("two_loop", presets::two_loop())] {
        for m in 1..=3u32 {
            let gs = GeneratorSet::extended(&q, m);
            let sym = primitive_space_symbolic(&gs, "1", m as i64)?;
            println!("{name} m={m}: symbolic dim {}, xi = {}", sym.dim, sym.xi.display(&gs));
            if name == "two_loop" && m == 3 {
                continue;
            }
            let fq = primitive_space_fq(&q, 0, m, Prime::new(2)?)?;
            let terms: Vec<String> = fq.monomials.iter().zip(&fq.xi).map(|(f, c)| format!("{c}·{}", f.display(&q))).collect();
            println!("    q=2: dim {}, xi = {}", fq.dim, terms.join(" + "));
        }
    }
    Ok(())
}
