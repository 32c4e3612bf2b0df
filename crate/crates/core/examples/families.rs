//! Construct members of every family and recognise them again.
//!
//! cargo run --release --example families

use minfaith::error::Result;
use minfaith::families::*;
use minfaith::group::cyclic_semidirect;

fn main() -> Result<()> {
    let specs = [
        FamilySpec::new(FamilyTag::Deg2PP).with("p", 5),
        FamilySpec::new(FamilyTag::Deg2Q8),
        FamilySpec::new(FamilyTag::Deg2PCyc2m)
            .with("p", 5)
            .with("m", 2),
        FamilySpec::new(FamilyTag::A).with("p", 3),
        FamilySpec::new(FamilyTag::B).with("p", 2).with("k", 1),
        FamilySpec::new(FamilyTag::C).with("p", 7).with("k", 1),
        FamilySpec::new(FamilyTag::D).with("k", 2),
        FamilySpec::new(FamilyTag::E),
        FamilySpec::new(FamilyTag::F).with("p", 3),
        FamilySpec::new(FamilyTag::G).with("k", 2).with("p", 7),
        FamilySpec::new(FamilyTag::H)
            .with("q", 3)
            .with("m", 1)
            .with("p", 7),
        FamilySpec::new(FamilyTag::I).with("p", 5).with("m", 2),
        FamilySpec::new(FamilyTag::J),
        FamilySpec::new(FamilyTag::K),
    ];
    for spec in &specs {
        let g = construct_family(spec)?;
        let found = identify_family(&g)?;
        println!(
            "{:<22} order {:>4}  identified as {}",
            spec.to_string(),
            g.order(),
            found.map_or("nothing".into(), |s| s.to_string())
        );
    }

    let bad = FamilySpec::new(FamilyTag::B).with("p", 7).with("k", 1);
    println!("{bad}: {}", construct_family(&bad).unwrap_err());

    // C8 ⋊ C4 with x -> x^5 is a family k group without being the named member
    let g = cyclic_semidirect(8, 4, 5)?;
    println!("C8:C4 has the k shape: {}", is_family_k_shape(&g)?);
    Ok(())
}
