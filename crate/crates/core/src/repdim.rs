//! Minimal faithful representation dimension.
//!
//! A sum of irreducibles is faithful exactly when no minimal normal subgroup
//! lies in every kernel, and a minimal normal subgroup `M` lies in `ker χ`
//! as soon as one nontrivial element of `M` does. That turns `rdim` into a
//! minimum-weight set cover over the minimal normal subgroups.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::chartab::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::group::{cyclic, direct_product, ContentHash, Group};

/// Upper limit on irreducibles for [`rdim_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RdimCertificate {
    pub group_hash: ContentHash,
    pub value: u64,
    /// Indices into the group's character table, increasing.
    pub witness: Vec<usize>,
}

impl RdimCertificate {
    pub fn witness_degrees(&self, table: &CharacterTable) -> Vec<u64> {
        self.witness
            .iter()
            .map(|&i| table.irreducibles[i].degree)
            .collect()
    }

    /// Kernel intersection of the witness is trivial and degrees add up.
    pub fn verify(&self, table: &CharacterTable) -> bool {
        let part = &table.partition;
        let sum: u64 = self.witness_degrees(table).iter().sum();
        let faithful = (1..part.len()).all(|j| {
            self.witness
                .iter()
                .any(|&i| !table.irreducibles[i].kernel_contains_class(j))
        });
        sum == self.value && faithful && self.group_hash == table.group_hash
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub group_hash: ContentHash,
    pub rdim_g: u64,
    /// `(order, rdim)` for each maximal subgroup, in lattice order.
    pub max_subgroup_rdims: Vec<(usize, u64)>,
    pub is_minimally_faithful: bool,
    pub degree: Option<u64>,
}

type Mask = u128;

/// Cover masks: bit `i` of `covers[χ]` is set when the `i`-th minimal normal
/// subgroup is not inside `ker χ`.
fn cover_masks(g: &Group, table: &CharacterTable) -> Result<(Vec<Mask>, Mask)> {
    let minimal = g.minimal_normal_subgroups();
    if minimal.len() > Mask::BITS as usize {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap: Mask::BITS as usize,
        });
    }
    let probes: Vec<usize> = minimal
        .iter()
        .map(|m| table.partition.class(m.members()[1]))
        .collect();
    let covers = table
        .irreducibles
        .iter()
        .map(|chi| {
            probes
                .iter()
                .enumerate()
                .filter(|(_, &j)| !chi.kernel_contains_class(j))
                .fold(0, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let full = if minimal.is_empty() {
        0
    } else {
        Mask::MAX >> (Mask::BITS as usize - minimal.len())
    };
    Ok((covers, full))
}

struct Cover<'a> {
    covers: &'a [Mask],
    degrees: &'a [u64],
}

impl Cover<'_> {
    /// Least total degree of irreducibles with index `>= start` covering
    /// `need`, if below `bound`.
    fn min_cost(&self, need: Mask, start: usize, bound: u64) -> Option<u64> {
        if need == 0 {
            return Some(0);
        }
        // one candidate per distinct useful mask, keeping the cheapest
        let mut best: HashMap<Mask, u64> = HashMap::new();
        for i in start..self.covers.len() {
            let m = self.covers[i] & need;
            if m != 0 {
                let d = best.entry(m).or_insert(u64::MAX);
                *d = (*d).min(self.degrees[i]);
            }
        }
        let mut cands: Vec<(Mask, u64)> = best.into_iter().collect();
        // drop candidates dominated by a cheaper-or-equal superset
        let snapshot = cands.clone();
        cands.retain(|&(m, d)| {
            !snapshot
                .iter()
                .any(|&(m2, d2)| m2 != m && m & m2 == m && d2 <= d)
        });
        cands.sort_by_key(|&(m, d)| (d, std::cmp::Reverse(m.count_ones()), m));
        let mut state = Search {
            cands: &cands,
            best: bound,
            seen: HashMap::new(),
        };
        state.go(need, 0);
        (state.best < bound).then_some(state.best)
    }
}

struct Search<'a> {
    cands: &'a [(Mask, u64)],
    best: u64,
    seen: HashMap<Mask, u64>,
}

impl Search<'_> {
    fn go(&mut self, need: Mask, cost: u64) {
        if need == 0 {
            self.best = self.best.min(cost);
            return;
        }
        if cost + 1 >= self.best {
            return;
        }
        match self.seen.get(&need) {
            Some(&c) if c <= cost => return,
            _ => {
                self.seen.insert(need, cost);
            }
        }
        // most constrained uncovered subgroup first
        let (bit, _) = (0..Mask::BITS)
            .filter(|b| need >> b & 1 == 1)
            .map(|b| {
                (
                    b,
                    self.cands.iter().filter(|(m, _)| m >> b & 1 == 1).count(),
                )
            })
            .min_by_key(|&(_, c)| c)
            .unwrap();
        for &(m, d) in self.cands {
            if m >> bit & 1 == 1 && cost + d < self.best {
                self.go(need & !m, cost + d);
            }
        }
    }
}

/// Minimum-weight cover, then the lexicographically least witness of that
/// weight built one index at a time.
fn solve(covers: &[Mask], degrees: &[u64], full: Mask) -> Result<(u64, Vec<usize>)> {
    let c = Cover { covers, degrees };
    let value = c.min_cost(full, 0, u64::MAX).ok_or_else(|| {
        Error::InternalVerificationFailed("no faithful sum of irreducibles".into())
    })?;
    let mut witness = Vec::new();
    let mut need = full;
    let mut budget = value;
    let mut start = 0;
    while need != 0 {
        let next = (start..covers.len()).find(|&i| {
            covers[i] & need != 0
                && degrees[i] <= budget
                && c.min_cost(need & !covers[i], i + 1, budget - degrees[i] + 1)
                    == Some(budget - degrees[i])
        });
        let i = next.ok_or_else(|| {
            Error::InternalVerificationFailed("witness reconstruction failed".into())
        })?;
        witness.push(i);
        need &= !covers[i];
        budget -= degrees[i];
        start = i + 1;
    }
    Ok((value, witness))
}

/// `rdim` together with the table it refers to.
pub fn rdim_with_table(g: &Group) -> Result<(RdimCertificate, CharacterTable)> {
    let table = character_table(g)?;
    let cert = rdim_for_table(g, &table)?;
    Ok((cert, table))
}

pub fn rdim_for_table(g: &Group, table: &CharacterTable) -> Result<RdimCertificate> {
    let (covers, full) = cover_masks(g, table)?;
    let degrees = table.degrees();
    let (value, witness) = solve(&covers, &degrees, full)?;
    let cert = RdimCertificate {
        group_hash: g.content_hash(),
        value,
        witness,
    };
    if !cert.verify(table) {
        return Err(Error::InternalVerificationFailed(
            "rdim certificate does not verify".into(),
        ));
    }
    if g.is_abelian() && value as usize != g.abelian_invariant_factor_count()? {
        return Err(Error::InternalVerificationFailed(
            "abelian rdim differs from invariant factor count".into(),
        ));
    }
    Ok(cert)
}

pub fn rdim(g: &Group) -> Result<RdimCertificate> {
    rdim_with_table(g).map(|(c, _)| c)
}

/// Just the value; abelian groups skip the character table.
pub fn rdim_value(g: &Group) -> Result<u64> {
    if g.is_abelian() {
        return Ok(g.abelian_invariant_factor_count()? as u64);
    }
    Ok(rdim(g)?.value)
}

/// Exhaustive search over all subsets of irreducibles, comparing element
/// kernels directly.
pub fn rdim_bruteforce(g: &Group) -> Result<RdimCertificate> {
    let table = character_table(g)?;
    rdim_bruteforce_for_table(g, &table)
}

pub fn rdim_bruteforce_for_table(g: &Group, table: &CharacterTable) -> Result<RdimCertificate> {
    let k = table.len();
    if k > BRUTEFORCE_LIMIT {
        return Err(Error::TooManyIrreducibles {
            count: k,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let part = &table.partition;
    let kernels: Vec<FixedBitSet> = table
        .irreducibles
        .iter()
        .map(|chi| {
            let mut b = FixedBitSet::with_capacity(g.order());
            for x in g.elements() {
                if chi.kernel_contains_class(part.class(x)) {
                    b.insert(x as usize);
                }
            }
            b
        })
        .collect();
    let degrees = table.degrees();
    let words = g.order().div_ceil(64);
    let kernels: Vec<Vec<u64>> = kernels
        .iter()
        .map(|k| k.as_slice()[..words].iter().map(|&w| w as u64).collect())
        .collect();
    let mut full = vec![u64::MAX; words];
    if g.order() % 64 != 0 {
        full[words - 1] = (1u64 << (g.order() % 64)) - 1;
    }
    let mut walk = Exhaustive {
        kernels: &kernels,
        degrees: &degrees,
        chosen: Vec::new(),
        best: None,
    };
    walk.visit(0, &full, 0);
    let (value, witness) = walk.best.expect("the sum of all irreducibles is faithful");
    Ok(RdimCertificate {
        group_hash: g.content_hash(),
        value,
        witness,
    })
}

/// Include-first depth-first walk over every subset; with positive degrees
/// the first subset found at a given cost is the lexicographically least.
struct Exhaustive<'a> {
    kernels: &'a [Vec<u64>],
    degrees: &'a [u64],
    chosen: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Exhaustive<'_> {
    fn visit(&mut self, i: usize, inter: &[u64], cost: u64) {
        if i == self.kernels.len() {
            let trivial = inter[0] == 1 && inter[1..].iter().all(|&w| w == 0);
            if trivial && self.best.as_ref().is_none_or(|(c, _)| cost < *c) {
                self.best = Some((cost, self.chosen.clone()));
            }
            return;
        }
        let next: Vec<u64> = inter
            .iter()
            .zip(&self.kernels[i])
            .map(|(a, b)| a & b)
            .collect();
        self.chosen.push(i);
        self.visit(i + 1, &next, cost + self.degrees[i]);
        self.chosen.pop();
        self.visit(i + 1, inter, cost);
    }
}

/// `rdim(G) = n` while every maximal subgroup has smaller `rdim`; by
/// monotonicity that covers every proper subgroup.
pub fn is_minimally_faithful(g: &Group) -> Result<MinimalityReport> {
    let r = rdim_value(g)?;
    let maximal = g.maximal_subgroups()?;
    let sub: Vec<(usize, u64)> = maximal
        .par_iter()
        .map(|h| {
            let (hg, _) = g.subgroup_group(h)?;
            Ok((h.order(), rdim_value(&hg)?))
        })
        .collect::<Result<_>>()?;
    let minimal = g.order() > 1 && sub.iter().all(|&(_, v)| v < r);
    Ok(MinimalityReport {
        group_hash: g.content_hash(),
        rdim_g: r,
        max_subgroup_rdims: sub,
        is_minimally_faithful: minimal,
        degree: minimal.then_some(r),
    })
}

/// `rdim(G x C_n) == rdim(G)` whenever `gcd(n, |Z(G)|) = 1`: `C_n` acts by
/// scalars on a faithful representation of `G`. Scalars need a nonzero
/// space, so for the trivial group and `n > 1` the comparison is against 1.
pub fn scalar_extension_check(g: &Group, n: u64) -> Result<bool> {
    let z = g.center().order();
    if n == 0 || gcd(n, z as u64) != 1 {
        return Err(Error::GcdPreconditionViolated { n, center: z });
    }
    let ext = direct_product(g, &cyclic(n as usize)?)?;
    let base = rdim_value(g)?;
    let expected = if n > 1 { base.max(1) } else { base };
    Ok(rdim_value(&ext)? == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    fn elementary(p: usize, r: usize) -> Group {
        (1..r).fold(cyclic(p).unwrap(), |acc, _| {
            direct_product(&acc, &cyclic(p).unwrap()).unwrap()
        })
    }

    fn a4() -> Group {
        group_from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap()
    }

    #[test]
    fn values() {
        assert_eq!(rdim(&elementary(3, 3)).unwrap().value, 3);
        assert_eq!(rdim(&quaternion8()).unwrap().value, 2);
        assert_eq!(rdim(&a4()).unwrap().value, 3);
        let t = rdim(&cyclic(1).unwrap()).unwrap();
        assert_eq!((t.value, t.witness.len()), (0, 0));
        assert_eq!(rdim(&dihedral(8).unwrap()).unwrap().value, 2);
    }

    #[test]
    fn oracle_small() {
        let c6 = cyclic(6).unwrap();
        let b = rdim_bruteforce(&c6).unwrap();
        assert_eq!(b.value, 1);
        assert_eq!(b, rdim(&c6).unwrap());
        assert_eq!(rdim_bruteforce(&dihedral(8).unwrap()).unwrap().value, 2);
        assert_eq!(rdim_bruteforce(&cyclic(1).unwrap()).unwrap().value, 0);
        for g in [a4(), quaternion8(), elementary(2, 3), heisenberg27()] {
            assert_eq!(rdim_bruteforce(&g).unwrap(), rdim(&g).unwrap());
        }
    }

    #[test]
    fn minimality() {
        let q8c2 = direct_product(&quaternion8(), &cyclic(2).unwrap()).unwrap();
        let r = is_minimally_faithful(&q8c2).unwrap();
        assert!(r.is_minimally_faithful);
        assert_eq!(r.degree, Some(3));
        assert!(
            !is_minimally_faithful(&cyclic(4).unwrap())
                .unwrap()
                .is_minimally_faithful
        );
        assert!(
            !is_minimally_faithful(&dihedral(8).unwrap())
                .unwrap()
                .is_minimally_faithful
        );
        let h = is_minimally_faithful(&heisenberg27()).unwrap();
        assert_eq!(h.degree, Some(3));
    }

    #[test]
    fn scalar_extension() {
        assert!(scalar_extension_check(&quaternion8(), 3).unwrap());
        assert!(scalar_extension_check(&dihedral(6).unwrap(), 5).unwrap());
        assert!(scalar_extension_check(&cyclic(1).unwrap(), 7).unwrap());
        assert!(matches!(
            scalar_extension_check(&quaternion8(), 2),
            Err(Error::GcdPreconditionViolated { .. })
        ));
    }
}
