//! Build a few groups, compare them, and print basic invariants.
//!
//! cargo run --example group_basics

use minfaith::error::Result;
use minfaith::group::*;

fn main() -> Result<()> {
    let s4 = group_from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])?;
    let q8 = quaternion8();
    let d8 = dihedral(8)?;
    for (name, g) in [("S4", &s4), ("Q8", &q8), ("D8", &d8)] {
        let z = g.center();
        let derived: Vec<usize> = g.derived_series().iter().map(|h| h.order()).collect();
        println!(
            "{name}: order {}, exponent {}, |Z| = {}, derived series {:?}, hash {}",
            g.order(),
            g.exponent(),
            z.order(),
            derived,
            g.content_hash()
        );
        let minimal: Vec<usize> = g
            .minimal_normal_subgroups()
            .iter()
            .map(|h| h.order())
            .collect();
        println!("  minimal normal subgroups of order {minimal:?}");
    }
    println!("Q8 ~ D8: {}", is_isomorphic(&q8, &d8));
    println!("Q8 ~ Dic8: {}", is_isomorphic(&q8, &dicyclic(8)?));

    let v4 = direct_product(&cyclic(2)?, &cyclic(2)?)?;
    println!("C2 x C2 invariants {:?}", abelian_invariants(&v4)?);
    println!(
        "C6 x C4 invariants {:?}",
        abelian_invariants(&direct_product(&cyclic(6)?, &cyclic(4)?)?)?
    );
    Ok(())
}
