//! Minimal-faithfulness reports: rdim of the group against its maximal subgroups.
//!
//! cargo run --example minimality

use minfaith::error::Result;
use minfaith::group::*;
use minfaith::repdim::is_minimally_faithful;

fn main() -> Result<()> {
    let groups = [
        ("Q8", quaternion8()),
        ("D8", dihedral(8)?),
        (
            "A4",
            group_from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])?,
        ),
        ("C7:C3", cyclic_semidirect(7, 3, 2)?),
        ("C3 x C3", direct_product(&cyclic(3)?, &cyclic(3)?)?),
        ("C6", cyclic(6)?),
    ];
    for (name, g) in &groups {
        let r = is_minimally_faithful(g)?;
        println!(
            "{name:<8} rdim {} maximal subgroups {:?} -> {}",
            r.rdim_g,
            r.max_subgroup_rdims,
            match r.degree {
                Some(d) => format!("minimally faithful of degree {d}"),
                None => "not minimally faithful".into(),
            }
        );
    }
    Ok(())
}
