//! Semidirect products from explicit automorphism actions.
//!
//! cargo run --example semidirect

use minfaith::error::Result;
use minfaith::group::*;

fn main() -> Result<()> {
    // C7 ⋊ C3 with the generator acting as x -> x^2
    let f21 = cyclic_semidirect(7, 3, 2)?;
    println!("C7:C3 order {}, abelian {}", f21.order(), f21.is_abelian());

    // SL(2,3) as Q8 ⋊ C3 rotating i -> j -> k
    let q = quaternion8();
    let (i, j) = (q.generator("i").unwrap(), q.generator("j").unwrap());
    let action = AutomorphismAction {
        images: vec![vec![j, q.mul(i, j)]],
    };
    let sl23 = semidirect_product(&q, &cyclic(3)?, &action)?;
    println!(
        "Q8:C3 order {}, |Z| = {}",
        sl23.order(),
        sl23.center().order()
    );

    // an assignment that does not extend to an automorphism is rejected
    let bad = AutomorphismAction {
        images: vec![vec![i, i]],
    };
    match semidirect_product(&q, &cyclic(3)?, &bad) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
