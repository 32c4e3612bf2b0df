//! Monomial matrix models induced from linear characters of subgroups.
//!
//! cargo run --example induced_model

use minfaith::chartab::{character_table, conjugacy_partition};
use minfaith::error::Result;
use minfaith::group::*;
use minfaith::repmodel::{induced_matrix_representation, is_faithful, trace_character};

fn main() -> Result<()> {
    // C7 ⋊ C3: induce a nontrivial character of C7 to get a faithful 3-dim model
    let g = cyclic_semidirect(7, 3, 2)?;
    let x = g.generators()[0];
    let h = g.cyclic_subgroup(x);
    let (hg, _) = g.subgroup_group(&h)?;
    let ht = character_table(&hg)?;
    let chi = ht
        .irreducibles
        .iter()
        .find(|c| !c.is_trivial())
        .expect("C7 has nontrivial characters");
    let rho = induced_matrix_representation(&g, &h, &ht.partition, chi)?;
    println!("dimension {}, faithful {}", rho.dim, is_faithful(&rho));
    for (label, s) in g.gen_labels() {
        let m = rho.image(s);
        println!("rho({label}) =");
        for i in 0..m.dim {
            let row: Vec<String> = (0..m.dim).map(|j| m.get(i, j).to_string()).collect();
            println!("  [{}]", row.join(", "));
        }
    }
    let gpart = conjugacy_partition(&g);
    let trace = trace_character(&gpart, &rho)?;
    let table = character_table(&g)?;
    let idx = table
        .irreducibles
        .iter()
        .position(|c| c.values == trace.values);
    println!("trace is irreducible character {idx:?}");
    Ok(())
}
