//! Print the character table of a group given as permutations.
//!
//! cargo run --example chartab

use minfaith::chartab::{character_kernel, character_table};
use minfaith::error::Result;
use minfaith::group::*;

fn main() -> Result<()> {
    let a4 = group_from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])?;
    let t = character_table(&a4)?;
    let part = &t.partition;
    let sizes: Vec<usize> = part.sizes().collect();
    let orders: Vec<u32> = part
        .representatives
        .iter()
        .map(|&x| a4.element_order(x))
        .collect();
    println!("class sizes   {sizes:?}");
    println!("element order {orders:?}");
    for (i, chi) in t.irreducibles.iter().enumerate() {
        let row: Vec<String> = chi.values.iter().map(|v| v.to_string()).collect();
        let ker = character_kernel(&a4, part, chi)?;
        println!("chi{i}: [{}]  kernel order {}", row.join(", "), ker.order());
    }
    Ok(())
}
