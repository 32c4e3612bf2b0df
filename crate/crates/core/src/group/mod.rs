//! Finite groups stored as explicit multiplication tables.
//!
//! Elements are indices `0..order` with the identity at index 0. Every
//! constructor produces a deterministic enumeration, so the row-major table
//! (and therefore [`ContentHash`]) is reproducible across runs.

mod abelian;
mod build;
mod iso;
mod subgroup;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::arith::lcm;
use crate::error::{Error, Result};

pub use abelian::abelian_invariants;
pub(crate) use build::{closure_table, extend_homomorphism};
pub use build::{
    cyclic, cyclic_semidirect, dicyclic, dihedral, direct_product, group_from_permutations,
    group_from_permutations_with_cap, heisenberg27, quaternion8, semidirect_product,
    AutomorphismAction,
};
pub use iso::{find_isomorphism, is_isomorphic};
pub use subgroup::Subgroup;

/// Maximum order accepted when building a multiplication table.
pub const TABLE_CAP: usize = 2000;
/// Maximum order for which the full subgroup lattice is computed.
pub const LATTICE_CAP: usize = 512;

/// Truncated SHA-256 of a group's multiplication table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContentHash(pub [u8; 16]);

impl ContentHash {
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        if s.len() != 32 {
            return None;
        }
        let mut out = [0u8; 16];
        for (i, byte) in out.iter_mut().enumerate() {
            *byte = u8::from_str_radix(s.get(2 * i..2 * i + 2)?, 16).ok()?;
        }
        Some(ContentHash(out))
    }
}

impl fmt::Display for ContentHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for ContentHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ContentHash({})", self.to_hex())
    }
}

impl Serialize for ContentHash {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for ContentHash {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        ContentHash::from_hex(&s).ok_or_else(|| serde::de::Error::custom("bad content hash"))
    }
}

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct Group {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<u32>,
    labels: Vec<String>,
    hash: ContentHash,
    orders: OnceLock<Vec<u32>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .field("labels", &self.labels)
            .field("hash", &self.hash)
            .finish()
    }
}

impl Group {
    /// Wraps a row-major table. Index 0 must be the identity and every row
    /// and column must be a permutation; associativity is not re-checked
    /// here (see [`Group::verify_associativity`]).
    pub fn from_table(
        order: usize,
        mul: Vec<u32>,
        generators: Vec<u32>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if order == 0 || mul.len() != order * order {
            return Err(Error::BadParameter(format!(
                "table of length {} does not match order {order}",
                mul.len()
            )));
        }
        if order > TABLE_CAP {
            return Err(Error::ClosureExceedsCap { cap: TABLE_CAP });
        }
        if generators.len() != labels.len() {
            return Err(Error::BadParameter(
                "one label per generator required".into(),
            ));
        }
        let n = order as u32;
        for i in 0..order {
            if mul[i] != i as u32 || mul[i * order] != i as u32 {
                return Err(Error::BadParameter("index 0 is not the identity".into()));
            }
        }
        let mut seen_col = vec![0u32; order * order];
        let mut inv = vec![u32::MAX; order];
        for i in 0..order {
            let mut seen_row = vec![false; order];
            for j in 0..order {
                let x = mul[i * order + j];
                if x >= n || seen_row[x as usize] {
                    return Err(Error::BadParameter("table is not a Latin square".into()));
                }
                seen_row[x as usize] = true;
                let slot = &mut seen_col[j * order + x as usize];
                if *slot != 0 {
                    return Err(Error::BadParameter("table is not a Latin square".into()));
                }
                *slot = 1;
                if x == 0 {
                    inv[i] = j as u32;
                }
            }
        }
        for (i, &j) in inv.iter().enumerate() {
            if mul[j as usize * order + i] != 0 {
                return Err(Error::BadParameter("left and right inverses differ".into()));
            }
        }
        let hash = hash_table(order, &mul);
        Ok(Group {
            order,
            mul,
            inv,
            generators,
            labels,
            hash,
            orders: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.order as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn gen_labels(&self) -> impl Iterator<Item = (&str, u32)> {
        self.labels
            .iter()
            .map(String::as_str)
            .zip(self.generators.iter().copied())
    }

    pub fn generator(&self, label: &str) -> Option<u32> {
        self.gen_labels().find(|(l, _)| *l == label).map(|(_, g)| g)
    }

    pub fn content_hash(&self) -> ContentHash {
        self.hash
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`
    #[inline]
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, g: u32, k: u64) -> u32 {
        let ord = self.element_order(g) as u64;
        let mut k = k % ord;
        let mut base = g;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            self.elements()
                .map(|g| {
                    let mut x = g;
                    let mut k = 1;
                    while x != 0 {
                        x = self.mul(x, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    #[inline]
    pub fn element_order(&self, g: u32) -> u32 {
        self.element_orders()[g as usize]
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.element_orders()
            .iter()
            .fold(1u64, |acc, &o| lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Order is a power of `p` (the trivial group counts for every `p`).
    pub fn is_p_group(&self, p: u64) -> bool {
        crate::arith::log_exact(self.order as u64, p).is_some()
    }

    /// Exhaustive associativity check, `O(order^3)`.
    pub fn verify_associativity(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                let ab = self.mul(a, b);
                self.elements()
                    .all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// Multiset of element orders, sorted.
    pub fn order_statistics(&self) -> Vec<u32> {
        let mut v = self.element_orders().to_vec();
        v.sort_unstable();
        v
    }

    /// Right-regular permutations of the generators: generator `s` maps
    /// element `i` to `i * s`.
    pub fn regular_generators(&self) -> Vec<Vec<u32>> {
        self.generators
            .iter()
            .map(|&s| self.elements().map(|i| self.mul(i, s)).collect())
            .collect()
    }
}

fn hash_table(order: usize, mul: &[u32]) -> ContentHash {
    let mut h = Sha256::new();
    h.update((order as u32).to_le_bytes());
    for &x in mul {
        h.update(x.to_le_bytes());
    }
    let digest = h.finalize();
    let mut out = [0u8; 16];
    out.copy_from_slice(&digest[..16]);
    ContentHash(out)
}
