#![allow(dead_code)]

use proptest::prelude::*;
use quiverhall::qring::Prime;
use quiverhall::quiverlab::Quiver;

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

/// Quivers on one to three vertices with at most three arrows.
pub fn small_quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=3)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..=3)))
        .prop_map(|(n, arrows)| {
            let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            Quiver::new(labels, arrows).unwrap()
        })
}
