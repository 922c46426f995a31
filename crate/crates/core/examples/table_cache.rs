//! Flag-count tables cached on disk, keyed by quiver content, flag type and q.

use quiverhall::hallfq::cache::TableCache;
use quiverhall::hallfq::DEFAULT_BUDGET;
use quiverhall::qring::Prime;
use quiverhall::quiverlab::{presets, FlagType};

fn main() -> quiverhall::Result<()> {
    let dir = std::env::temp_dir().join("quiverhall-example-cache");
    let cache = TableCache::new(&dir);
    let q = presets::two_loop();
    let f = FlagType::new(vec![0, 0], vec![1, 1])?;
    for _ in 0..2 {
        let (table, status) = cache.l_counts(&q, &f, Prime::new(3)?, DEFAULT_BUDGET)?;
        println!("{status:?}: {} points, v^{} scaling", table.counts.len(), table.vexp);
    }
    println!("entries live in {}", dir.display());
    Ok(())
}
