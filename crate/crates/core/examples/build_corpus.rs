//! Writes the bundled corpus: every group of order at most 16 and of orders
//! 18, 20, 21, 24 and 27, one entry per isomorphism class, as regular
//! permutation generators.
//!
//! cargo run --release --example build_corpus [-- OUT]

use minfaith::error::Result;
use minfaith::group::*;
use minfaith::io::{save_corpus, CorpusEntry, Expected};

fn c(n: usize) -> Group {
    cyclic(n).unwrap()
}

fn x(a: &Group, b: &Group) -> Group {
    direct_product(a, b).unwrap()
}

fn abelian(factors: &[usize]) -> Group {
    factors[1..]
        .iter()
        .fold(c(factors[0]), |acc, &n| x(&acc, &c(n)))
}

fn perms(degree: usize, gens: &[&[usize]]) -> Group {
    let gens: Vec<Vec<usize>> = gens.iter().map(|g| g.to_vec()).collect();
    group_from_permutations(degree, &gens).unwrap()
}

fn a4() -> Group {
    perms(4, &[&[1, 2, 0, 3], &[1, 0, 3, 2]])
}

fn s4() -> Group {
    perms(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]])
}

/// `Q8 ⋊ C3` with `i -> j -> k`.
fn sl23() -> Group {
    let q = quaternion8();
    let (i, j) = (q.generator("i").unwrap(), q.generator("j").unwrap());
    let action = AutomorphismAction {
        images: vec![vec![j, q.mul(i, j)]],
    };
    semidirect_product(&q, &c(3), &action).unwrap()
}

/// `C2^2 ⋊ C4`, the generator swapping the two factors.
fn c2sq_c4() -> Group {
    let v = abelian(&[2, 2]);
    let (a, b) = (v.generators()[0], v.generators()[1]);
    semidirect_product(
        &v,
        &c(4),
        &AutomorphismAction {
            images: vec![vec![b, a]],
        },
    )
    .unwrap()
}

/// Central product `C4 ∘ D8`: `(C4 x C2) ⋊ C2` with `z -> i^2 z`.
fn pauli() -> Group {
    let n = abelian(&[4, 2]);
    let (i, z) = (n.generators()[0], n.generators()[1]);
    let i2 = n.mul(i, i);
    semidirect_product(
        &n,
        &c(2),
        &AutomorphismAction {
            images: vec![vec![i, n.mul(i2, z)]],
        },
    )
    .unwrap()
}

/// `C3 ⋊ D8` where the rotation inverts and the reflection centralizes.
fn c3_d8() -> Group {
    let d8 = dihedral(8).unwrap();
    semidirect_product(
        &c(3),
        &d8,
        &AutomorphismAction {
            images: vec![vec![2], vec![1]],
        },
    )
    .unwrap()
}

/// `(C3 x C3) ⋊ C2` by inversion.
fn gen_dihedral18() -> Group {
    let n = abelian(&[3, 3]);
    let inv: Vec<u32> = n.generators().iter().map(|&g| n.inv(g)).collect();
    semidirect_product(&n, &c(2), &AutomorphismAction { images: vec![inv] }).unwrap()
}

fn catalog() -> Vec<(&'static str, Group)> {
    let s3 = dihedral(6).unwrap();
    let q8 = quaternion8();
    let d8 = dihedral(8).unwrap();
    let dic12 = dicyclic(12).unwrap();
    vec![
        ("C1", c(1)),
        ("C2", c(2)),
        ("C3", c(3)),
        ("C4", c(4)),
        ("C2^2", abelian(&[2, 2])),
        ("C5", c(5)),
        ("C6", c(6)),
        ("S3", s3.clone()),
        ("C7", c(7)),
        ("C8", c(8)),
        ("C4xC2", abelian(&[4, 2])),
        ("C2^3", abelian(&[2, 2, 2])),
        ("D8", d8.clone()),
        ("Q8", q8.clone()),
        ("C9", c(9)),
        ("C3^2", abelian(&[3, 3])),
        ("C10", c(10)),
        ("D10", dihedral(10).unwrap()),
        ("C11", c(11)),
        ("C12", c(12)),
        ("C6xC2", abelian(&[6, 2])),
        ("A4", a4()),
        ("D12", dihedral(12).unwrap()),
        ("Dic12", dic12.clone()),
        ("C13", c(13)),
        ("C14", c(14)),
        ("D14", dihedral(14).unwrap()),
        ("C15", c(15)),
        ("C16", c(16)),
        ("C8xC2", abelian(&[8, 2])),
        ("C4xC4", abelian(&[4, 4])),
        ("C4xC2^2", abelian(&[4, 2, 2])),
        ("C2^4", abelian(&[2, 2, 2, 2])),
        ("D16", dihedral(16).unwrap()),
        ("Q16", dicyclic(16).unwrap()),
        ("SD16", cyclic_semidirect(8, 2, 3).unwrap()),
        ("M16", cyclic_semidirect(8, 2, 5).unwrap()),
        ("C4:C4", cyclic_semidirect(4, 4, 3).unwrap()),
        ("C2^2:C4", c2sq_c4()),
        ("D8xC2", x(&d8, &c(2))),
        ("Q8xC2", x(&q8, &c(2))),
        ("C4oD8", pauli()),
        ("C18", c(18)),
        ("C6xC3", abelian(&[6, 3])),
        ("D18", dihedral(18).unwrap()),
        ("S3xC3", x(&s3, &c(3))),
        ("C3^2:C2", gen_dihedral18()),
        ("C20", c(20)),
        ("C10xC2", abelian(&[10, 2])),
        ("D20", dihedral(20).unwrap()),
        ("Dic20", dicyclic(20).unwrap()),
        ("C5:C4", cyclic_semidirect(5, 4, 2).unwrap()),
        ("C21", c(21)),
        ("C7:C3", cyclic_semidirect(7, 3, 2).unwrap()),
        ("C24", c(24)),
        ("C12xC2", abelian(&[12, 2])),
        ("C6xC2^2", abelian(&[6, 2, 2])),
        ("C3:C8", cyclic_semidirect(3, 8, 2).unwrap()),
        ("SL(2,3)", sl23()),
        ("Dic24", dicyclic(24).unwrap()),
        ("C4xS3", x(&c(4), &s3)),
        ("D24", dihedral(24).unwrap()),
        ("C2xDic12", x(&c(2), &dic12)),
        ("C3:D8", c3_d8()),
        ("C3xD8", x(&c(3), &d8)),
        ("C3xQ8", x(&c(3), &q8)),
        ("S4", s4()),
        ("C2xA4", x(&c(2), &a4())),
        ("C2^2xS3", x(&abelian(&[2, 2]), &s3)),
        ("C27", c(27)),
        ("C9xC3", abelian(&[9, 3])),
        ("C3^3", abelian(&[3, 3, 3])),
        ("Heis27", heisenberg27()),
        ("C9:C3", cyclic_semidirect(9, 3, 4).unwrap()),
    ]
}

fn main() -> Result<()> {
    let out = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/bundled.json").to_string());
    let groups = catalog();
    for (i, (a, g)) in groups.iter().enumerate() {
        for (b, h) in &groups[..i] {
            assert!(!is_isomorphic(g, h), "{a} and {b} are isomorphic");
        }
    }
    let entries: Vec<CorpusEntry> = groups
        .iter()
        .map(|(id, g)| {
            let mut e = CorpusEntry::from_group(*id, g);
            e.expected = Some(Expected {
                order: Some(g.order()),
                ..Default::default()
            });
            e
        })
        .collect();
    save_corpus(&out, &entries)?;
    println!(
        "{} pairwise non-isomorphic groups written to {out}",
        entries.len()
    );
    Ok(())
}
