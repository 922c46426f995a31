//! The symbolic engine on A2: Serre element, its pairing against all words,
//! and the radical quotient next to the relation quotient.

use quiverhall::formalg::{pair, radical_quotient_dim, serre_element, serre_ideal_dim, AlgebraElement, GeneratorSet};
use quiverhall::quiverlab::{cartan_matrix, presets, DimensionVector};

fn main() -> quiverhall::Result<()> {
    let q = presets::a2();
    let gs = GeneratorSet::standard(&q);
    let c = cartan_matrix(&q);
    let s = serre_element(&gs, "1", "2", &c)?;
    println!("Serre element: {}", s.display(&gs));
    let nu = DimensionVector::new(vec![2, 1]);
    for w in gs.words_of_degree(&nu) {
        let val = pair(&gs, &s, &AlgebraElement::word(&gs, w.clone()))?;
        println!("  ({}, S) = {val}", gs.display_word(&w));
    }
    let (rad, _) = radical_quotient_dim(&gs, &nu);
    println!("dim at {nu}: radical quotient {rad}, relation quotient {}", serre_ideal_dim(&gs, &c, &nu)?);
    Ok(())
}
