//! Representation dimension with a witness, checked against exhaustive search.
//!
//! cargo run --example rdim

use minfaith::chartab::character_table;
use minfaith::error::Result;
use minfaith::group::*;
use minfaith::repdim::{rdim_bruteforce_for_table, rdim_for_table, BRUTEFORCE_LIMIT};

fn main() -> Result<()> {
    let groups = [
        (
            "C2 x C2 x C2",
            direct_product(&direct_product(&cyclic(2)?, &cyclic(2)?)?, &cyclic(2)?)?,
        ),
        ("S3", dihedral(6)?),
        ("D8 x C2", direct_product(&dihedral(8)?, &cyclic(2)?)?),
        ("Heis27", heisenberg27()),
        (
            "C3 x C3 x C3",
            direct_product(&direct_product(&cyclic(3)?, &cyclic(3)?)?, &cyclic(3)?)?,
        ),
    ];
    for (name, g) in &groups {
        let t = character_table(g)?;
        let cert = rdim_for_table(g, &t)?;
        let brute = if t.len() <= BRUTEFORCE_LIMIT {
            rdim_bruteforce_for_table(g, &t)?.value.to_string()
        } else {
            format!("skipped, {} classes", t.len())
        };
        println!(
            "{name:<14} rdim {} witness degrees {:?} (exhaustive {brute})",
            cert.value,
            cert.witness_degrees(&t)
        );
        assert!(cert.verify(&t));
    }
    Ok(())
}
