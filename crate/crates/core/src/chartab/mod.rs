//! Conjugacy classes and exact complex character tables.

mod dixon;
mod ops;

use std::cmp::Reverse;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{ContentHash, Group, TABLE_CAP};

pub use ops::{
    character_kernel, induce_character, inner_product, is_irreducible, restrict_character,
};

/// Orbits of the conjugation action, ordered by least element; the least
/// element of each class is its representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyPartition {
    pub group_hash: ContentHash,
    pub order: usize,
    /// Conductor for the group's characters (the group exponent).
    pub exponent: u32,
    pub classes: Vec<Vec<u32>>,
    pub class_of: Vec<u32>,
    pub representatives: Vec<u32>,
    /// `inverse_class[j]` is the class of `g^-1` for `g` in class `j`.
    pub inverse_class: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().map(Vec::len)
    }

    pub fn class_size(&self, j: usize) -> usize {
        self.classes[j].len()
    }

    pub fn class(&self, g: u32) -> usize {
        self.class_of[g as usize] as usize
    }
}

pub fn conjugacy_partition(g: &Group) -> ConjugacyPartition {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for x in g.elements() {
        if class_of[x as usize] != u32::MAX {
            continue;
        }
        let id = classes.len() as u32;
        let mut members = vec![x];
        class_of[x as usize] = id;
        // orbit under conjugation by the generators
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            for &s in g.generators() {
                let z = g.conj(s, y);
                if class_of[z as usize] == u32::MAX {
                    class_of[z as usize] = id;
                    members.push(z);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        debug_assert_eq!(n % members.len(), 0);
        classes.push(members);
    }
    let representatives = classes.iter().map(|c| c[0]).collect();
    let inverse_class = classes
        .iter()
        .map(|c| class_of[g.inv(c[0]) as usize] as usize)
        .collect();
    ConjugacyPartition {
        group_hash: g.content_hash(),
        order: n,
        exponent: g.exponent() as u32,
        classes,
        class_of,
        representatives,
        inverse_class,
    }
}

/// A class function with a positive integer value at the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Character {
    pub group_hash: ContentHash,
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn new(group_hash: ContentHash, values: Vec<Cyclotomic>) -> Result<Self> {
        let degree = values
            .first()
            .and_then(Cyclotomic::to_integer)
            .filter(|&d| d > 0)
            .ok_or_else(|| {
                Error::Mismatch("value at the identity is not a positive integer".into())
            })?;
        Ok(Character {
            group_hash,
            degree: degree as u64,
            values,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.values[0].conductor()
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    /// `true` when class `j` lies in the kernel.
    pub fn kernel_contains_class(&self, j: usize) -> bool {
        self.values[j].to_integer() == Some(self.degree as i128)
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.values.len()).all(|j| self.kernel_contains_class(j))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub group_hash: ContentHash,
    pub partition: ConjugacyPartition,
    pub irreducibles: Vec<Character>,
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree).collect()
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn conductor(&self) -> u32 {
        self.partition.exponent
    }
}

/// Exact character table. Irreducibles are ordered by degree, with the
/// trivial character first and ties broken by descending lexicographic
/// order of the reduced coefficient sequences.
pub fn character_table(g: &Group) -> Result<CharacterTable> {
    if g.order() > TABLE_CAP {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap: TABLE_CAP,
        });
    }
    let partition = conjugacy_partition(g);
    let rows = if g.is_abelian() {
        dixon::abelian_characters(g, &partition)?
    } else {
        dixon::dixon_characters(g, &partition)?
    };
    let e = partition.exponent;
    let mut irreducibles: Vec<Character> = rows
        .into_iter()
        .map(|row| {
            let values = row
                .iter()
                .map(|exps| Cyclotomic::sum_of_roots(e, exps))
                .collect();
            Character::new(g.content_hash(), values)
        })
        .collect::<Result<_>>()?;
    irreducibles.sort_by(|a, b| {
        (a.degree, !a.is_trivial(), Reverse(&a.values)).cmp(&(
            b.degree,
            !b.is_trivial(),
            Reverse(&b.values),
        ))
    });
    Ok(CharacterTable {
        group_hash: g.content_hash(),
        partition,
        irreducibles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::int;
    use crate::group::*;

    #[test]
    fn partitions() {
        let c = conjugacy_partition(&quaternion8());
        let mut sizes: Vec<usize> = c.sizes().collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(conjugacy_partition(&dihedral(6).unwrap()).len(), 3);
        assert_eq!(conjugacy_partition(&cyclic(10).unwrap()).len(), 10);
        assert_eq!(c.classes[0], vec![0]);
    }

    #[test]
    fn c2_table() {
        let t = character_table(&cyclic(2).unwrap()).unwrap();
        assert_eq!(t.degrees(), vec![1, 1]);
        assert_eq!(t.irreducibles[0].values, vec![int(2, 1), int(2, 1)]);
        assert_eq!(t.irreducibles[1].values, vec![int(2, 1), int(2, -1)]);
    }

    #[test]
    fn small_degrees() {
        let deg = |g: &Group| character_table(g).unwrap().degrees();
        assert_eq!(deg(&quaternion8()), vec![1, 1, 1, 1, 2]);
        assert_eq!(deg(&dihedral(6).unwrap()), vec![1, 1, 2]);
        let mut h = vec![1; 9];
        h.extend([3, 3]);
        assert_eq!(deg(&heisenberg27()), h);
        let s4 = group_from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(deg(&s4), vec![1, 1, 2, 3, 3]);
        let a5 = group_from_permutations(5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]]).unwrap();
        assert_eq!(deg(&a5), vec![1, 3, 3, 4, 5]);
        assert_eq!(deg(&cyclic(1).unwrap()), vec![1]);
    }

    #[test]
    fn golden_ratio_values_of_a5() {
        let a5 = group_from_permutations(5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]]).unwrap();
        let t = character_table(&a5).unwrap();
        // a degree-3 character takes (1 ± sqrt 5)/2 on 5-cycles: x^2 = x + 1
        let chi = &t.irreducibles[1];
        let five = t
            .partition
            .classes
            .iter()
            .position(|c| a5.element_order(c[0]) == 5)
            .unwrap();
        let x = &chi.values[five];
        assert!(!x.is_rational());
        assert_eq!(x * x, x + &int(x.conductor(), 1));
    }
}
