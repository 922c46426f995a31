//! Load a quiver file, print its Borcherds-Cartan matrix, its flag types at
//! one degree and the bridge of a flag type.

use quiverhall::quiverlab::{bridge_type, cartan_matrix, enumerate_flag_types, flag_dims, DimensionVector, FlagMode, FlagType, Quiver};

fn main() -> quiverhall::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quivers/mixed_rs.json").into());
    let q = Quiver::load(&path)?;
    println!("{}", cartan_matrix(&q));
    let nu = DimensionVector::parse(&q, "r:1,s:2")?;
    for f in enumerate_flag_types(&q, &nu, FlagMode::All) {
        let d = flag_dims(&q, &f);
        println!("{:<24} dim F = {}, dim F~ = {}, |F| ~ {}", f.display(&q), d.dim_flag, d.dim_tilde, d.flag_point_count);
    }
    let f = FlagType::parse(&q, "r:2,s:3")?;
    println!("bridge of {} is {}", f.display(&q), bridge_type(&q, &f).display(&q));
    Ok(())
}
