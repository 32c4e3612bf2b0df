use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{ContentHash, Group, LATTICE_CAP};
use crate::arith::p_part;
use crate::error::{Error, Result};

/// A subgroup of a parent group, as a sorted set of the parent's element
/// indices. Equality and hashing look only at the parent hash and members.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent_hash: ContentHash,
    members: Vec<u32>,
    mask: FixedBitSet,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent_hash == other.parent_hash && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent_hash.hash(state);
        self.members.hash(state);
    }
}

impl Subgroup {
    fn from_mask(parent: &Group, mask: FixedBitSet, gens: Vec<u32>) -> Self {
        let members: Vec<u32> = mask.ones().map(|x| x as u32).collect();
        debug_assert_eq!(parent.order() % members.len(), 0, "Lagrange");
        Subgroup {
            parent_hash: parent.content_hash(),
            members,
            mask,
            gens,
        }
    }

    /// Validates that `members` is a subgroup of `parent`.
    pub fn from_members(parent: &Group, members: &[u32]) -> Result<Self> {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        for &m in members {
            if m as usize >= parent.order() {
                return Err(Error::NotASubgroup(format!("element {m} out of range")));
            }
            mask.insert(m as usize);
        }
        if !mask.contains(0) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        for a in mask.ones() {
            if !mask.contains(parent.inv(a as u32) as usize) {
                return Err(Error::NotASubgroup("not closed under inverses".into()));
            }
            for b in mask.ones() {
                if !mask.contains(parent.mul(a as u32, b as u32) as usize) {
                    return Err(Error::NotASubgroup("not closed under products".into()));
                }
            }
        }
        let gens = greedy_generators(parent, &mask);
        Ok(Self::from_mask(parent, mask, gens))
    }

    pub fn parent_hash(&self) -> ContentHash {
        self.parent_hash
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: u32) -> bool {
        self.mask.contains(g as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    /// Position of `g` in the sorted member list, which is its index in the
    /// group returned by [`Group::subgroup_group`].
    pub fn position(&self, g: u32) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }
}

/// Greedy generating set: repeatedly adjoin the least element not yet covered.
fn greedy_generators(g: &Group, mask: &FixedBitSet) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut span = FixedBitSet::with_capacity(g.order());
    span.insert(0);
    for x in mask.ones() {
        if !span.contains(x) {
            gens.push(x as u32);
            span = closure_mask(g, &gens);
        }
    }
    gens
}

fn closure_mask(g: &Group, gens: &[u32]) -> FixedBitSet {
    let mut mask = FixedBitSet::with_capacity(g.order());
    mask.insert(0);
    let mut list = vec![0u32];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !mask.put(y as usize) {
                list.push(y);
            }
        }
        i += 1;
    }
    mask
}

impl Group {
    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.order());
        mask.insert(0);
        Subgroup::from_mask(self, mask, vec![])
    }

    pub fn whole(&self) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.order());
        mask.insert_range(..);
        Subgroup::from_mask(self, mask, self.generators().to_vec())
    }

    pub fn subgroup_generated_by(&self, gens: &[u32]) -> Subgroup {
        let gens: Vec<u32> = gens.iter().copied().filter(|&x| x != 0).collect();
        Subgroup::from_mask(self, closure_mask(self, &gens), gens)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = a.gens.clone();
        gens.extend(b.gens.iter().copied().filter(|x| !a.contains(*x)));
        self.subgroup_generated_by(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut mask = a.mask.clone();
        mask.intersect_with(&b.mask);
        let gens = greedy_generators(self, &mask);
        Subgroup::from_mask(self, mask, gens)
    }

    pub fn cyclic_subgroup(&self, g: u32) -> Subgroup {
        self.subgroup_generated_by(&[g])
    }

    pub fn conjugacy_class_of(&self, x: u32) -> Vec<u32> {
        let mut mask = FixedBitSet::with_capacity(self.order());
        for g in self.elements() {
            mask.insert(self.conj(g, x) as usize);
        }
        mask.ones().map(|v| v as u32).collect()
    }

    /// Smallest normal subgroup containing `elements`.
    pub fn normal_closure(&self, elements: &[u32]) -> Subgroup {
        let mut gens = Vec::new();
        let mut seen = FixedBitSet::with_capacity(self.order());
        for &x in elements {
            for y in self.conjugacy_class_of(x) {
                if y != 0 && !seen.put(y as usize) {
                    gens.push(y);
                }
            }
        }
        self.subgroup_generated_by(&gens)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators()
            .iter()
            .all(|&g| h.gens.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    pub fn normalizes(&self, g: u32, h: &Subgroup) -> bool {
        h.gens.iter().all(|&x| h.contains(self.conj(g, x)))
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generators();
        let mut mask = FixedBitSet::with_capacity(self.order());
        for x in self.elements() {
            if gens.iter().all(|&s| self.mul(x, s) == self.mul(s, x)) {
                mask.insert(x as usize);
            }
        }
        let g = greedy_generators(self, &mask);
        Subgroup::from_mask(self, mask, g)
    }

    pub fn centralizer_order(&self, x: u32) -> usize {
        self.elements()
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .count()
    }

    /// Subgroup generated by all commutators of elements of `h`.
    pub fn commutator_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.order());
        let mut gens = Vec::new();
        for &a in &h.members {
            for &b in &h.members {
                let c = self.commutator(a, b);
                if c != 0 && !mask.put(c as usize) {
                    gens.push(c);
                }
            }
        }
        let closed = closure_mask(self, &gens);
        let gens = greedy_generators(self, &closed);
        Subgroup::from_mask(self, closed, gens)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.commutator_subgroup(&self.whole())
    }

    /// `G = G^0 ⊇ G^1 ⊇ ...` up to and including the first repeated term.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let next = self.commutator_subgroup(series.last().unwrap());
            if next == *series.last().unwrap() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// A Sylow `p`-subgroup, grown one normalizing `p`-element at a time.
    /// Returns the trivial subgroup when `p` does not divide the order.
    pub fn sylow_subgroup(&self, p: u64) -> Subgroup {
        let target = p_part(self.order() as u64, p) as usize;
        let mut sub = self.trivial_subgroup();
        while sub.order() < target {
            let g = self
                .elements()
                .find(|&g| {
                    !sub.contains(g)
                        && crate::arith::log_exact(self.element_order(g) as u64, p).is_some()
                        && self.normalizes(g, &sub)
                })
                .expect("a normalizing p-element exists outside a non-Sylow p-subgroup");
            let mut gens = sub.gens.clone();
            gens.push(g);
            sub = self.subgroup_generated_by(&gens);
        }
        sub
    }

    /// Every subgroup, sorted by (order, members).
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        if self.order() > LATTICE_CAP {
            return Err(Error::LatticeCapExceeded {
                order: self.order(),
                cap: LATTICE_CAP,
            });
        }
        let mut cyclics: Vec<Subgroup> = Vec::new();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        for g in self.elements() {
            let c = self.cyclic_subgroup(g);
            if seen.insert(c.mask.clone()) {
                cyclics.push(c);
            }
        }
        let mut all = cyclics.clone();
        let mut i = 0;
        while i < all.len() {
            for c in &cyclics {
                if c.is_subset(&all[i]) {
                    continue;
                }
                let j = self.join(&all[i], c);
                if seen.insert(j.mask.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members.cmp(&b.members))
        });
        Ok(all)
    }

    /// Proper subgroups not contained in a larger proper subgroup.
    pub fn maximal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let all = self.all_subgroups()?;
        let proper: Vec<&Subgroup> = all.iter().filter(|s| s.order() < self.order()).collect();
        Ok(proper
            .iter()
            .filter(|s| {
                !proper
                    .iter()
                    .any(|t| t.order() > s.order() && s.is_subset(t))
            })
            .map(|s| (*s).clone())
            .collect())
    }

    /// Nontrivial normal subgroups minimal under inclusion, sorted by
    /// (order, members). Each one is the normal closure of any of its
    /// nontrivial elements, so candidates are the closures of single classes.
    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        let mut done = FixedBitSet::with_capacity(self.order());
        let mut candidates: Vec<Subgroup> = Vec::new();
        for x in self.elements().skip(1) {
            if done.contains(x as usize) {
                continue;
            }
            for y in self.conjugacy_class_of(x) {
                done.insert(y as usize);
            }
            let n = self.normal_closure(&[x]);
            if !candidates.contains(&n) {
                candidates.push(n);
            }
        }
        let mut minimal: Vec<Subgroup> = candidates
            .iter()
            .filter(|n| {
                !candidates
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subset(n))
            })
            .cloned()
            .collect();
        minimal.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members.cmp(&b.members))
        });
        minimal
    }

    /// The subgroup as a group in its own right: the `k`-th smallest member
    /// becomes element `k`. Also returns that member list (the embedding).
    pub fn subgroup_group(&self, h: &Subgroup) -> Result<(Group, Vec<u32>)> {
        if h.parent_hash != self.content_hash() {
            return Err(Error::NotASubgroup(
                "subgroup belongs to a different group".into(),
            ));
        }
        let n = h.order();
        let mut local = vec![u32::MAX; self.order()];
        for (k, &m) in h.members.iter().enumerate() {
            local[m as usize] = k as u32;
        }
        let mut mul = Vec::with_capacity(n * n);
        for &a in &h.members {
            for &b in &h.members {
                mul.push(local[self.mul(a, b) as usize]);
            }
        }
        let gens: Vec<u32> = h.gens.iter().map(|&x| local[x as usize]).collect();
        let labels = (0..gens.len()).map(|i| format!("h{i}")).collect();
        Ok((Group::from_table(n, mul, gens, labels)?, h.members.clone()))
    }

    /// `true` when the subgroup is cyclic.
    pub fn is_cyclic_subgroup(&self, h: &Subgroup) -> bool {
        h.members
            .iter()
            .any(|&x| self.element_order(x) as usize == h.order())
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        h.gens
            .iter()
            .all(|&a| h.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}
