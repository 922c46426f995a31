//! Flag-count functions on `E_V(F_q)` for the Jordan quiver, their induction
//! product and Green pairing.

use quiverhall::hallfq::{green_pairing, hall_product, l_function, DEFAULT_BUDGET, DEFAULT_TWIST};
use quiverhall::qring::Prime;
use quiverhall::quiverlab::{presets, FlagType};

fn main() -> quiverhall::Result<()> {
    let q = presets::jordan();
    let p = Prime::new(2)?;
    let l1 = l_function(&q, &FlagType::single(0, 1), p, DEFAULT_BUDGET)?;
    let l2 = l_function(&q, &FlagType::single(0, 2), p, DEFAULT_BUDGET)?;
    let l11 = hall_product(&l1, &l1, DEFAULT_TWIST, DEFAULT_BUDGET)?;
    let direct = l_function(&q, &FlagType::new(vec![0, 0], vec![1, 1])?, p, DEFAULT_BUDGET)?;
    println!("l1 * l1 equals l_(1,1): {}", l11 == direct);
    println!("values of l_(1,1) on the 16 points: {:?}", l11.values.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("(l2, l2) = {}", green_pairing(&l2, &l2)?);
    println!("(l11, l2) = {}", green_pairing(&l11, &l2)?);
    Ok(())
}
