use super::{Character, ConjugacyPartition};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

fn check_owner(part: &ConjugacyPartition, chi: &Character) -> Result<()> {
    if chi.group_hash != part.group_hash || chi.values.len() != part.len() {
        return Err(Error::Mismatch(
            "character belongs to a different group".into(),
        ));
    }
    Ok(())
}

/// `{g : χ(g) = χ(1)}`
pub fn character_kernel(g: &Group, part: &ConjugacyPartition, chi: &Character) -> Result<Subgroup> {
    check_owner(part, chi)?;
    let members: Vec<u32> = g
        .elements()
        .filter(|&x| chi.kernel_contains_class(part.class(x)))
        .collect();
    let k = Subgroup::from_members(g, &members)?;
    debug_assert!(g.is_normal(&k));
    Ok(k)
}

/// `⟨χ, ψ⟩ = (1/|G|) Σ_j |C_j| χ(g_j) conj(ψ(g_j))`
pub fn inner_product(
    part: &ConjugacyPartition,
    chi: &Character,
    psi: &Character,
) -> Result<Cyclotomic> {
    check_owner(part, chi)?;
    check_owner(part, psi)?;
    let e = chi.conductor();
    let mut acc = Cyclotomic::zero(e);
    for (j, size) in part.sizes().enumerate() {
        acc += &(&chi.values[j] * &psi.values[j].conj()).scale(size as i128, 1);
    }
    Ok(acc.scale(1, part.order as i128))
}

pub fn is_irreducible(part: &ConjugacyPartition, chi: &Character) -> Result<bool> {
    Ok(inner_product(part, chi, chi)?.to_integer() == Some(1))
}

fn check_subgroup(g: &Group, h: &Subgroup, hpart: &ConjugacyPartition) -> Result<()> {
    if h.parent_hash() != g.content_hash() {
        return Err(Error::NotASubgroup("subgroup of a different group".into()));
    }
    if hpart.order != h.order() {
        return Err(Error::NotASubgroup(
            "partition does not describe the subgroup".into(),
        ));
    }
    Ok(())
}

/// Frobenius induction. `hpart` is the partition of `h` viewed as a group
/// through [`Group::subgroup_group`], and `chi` is a character of that group.
pub fn induce_character(
    g: &Group,
    gpart: &ConjugacyPartition,
    h: &Subgroup,
    hpart: &ConjugacyPartition,
    chi: &Character,
) -> Result<Character> {
    check_subgroup(g, h, hpart)?;
    check_owner(hpart, chi)?;
    let e = gpart.exponent;
    let mut sums = vec![Cyclotomic::zero(e); gpart.len()];
    for (c, &rep) in hpart.representatives.iter().enumerate() {
        let j = gpart.class(h.members()[rep as usize]);
        let v = chi.values[c].embed(e).scale(hpart.class_size(c) as i128, 1);
        sums[j] += &v;
    }
    // Ind χ(g) = |C_G(g)| / |H| · Σ_{y ∈ g^G ∩ H} χ(y)
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(j, s)| {
            s.scale(
                (gpart.order / gpart.class_size(j)) as i128,
                h.order() as i128,
            )
        })
        .collect();
    Character::new(gpart.group_hash, values)
}

pub fn restrict_character(
    g: &Group,
    gpart: &ConjugacyPartition,
    chi: &Character,
    h: &Subgroup,
    hpart: &ConjugacyPartition,
) -> Result<Character> {
    check_subgroup(g, h, hpart)?;
    check_owner(gpart, chi)?;
    let values = hpart
        .representatives
        .iter()
        .map(|&rep| {
            let v = &chi.values[gpart.class(h.members()[rep as usize])];
            v.restrict(hpart.exponent).ok_or_else(|| {
                Error::InternalVerificationFailed("restricted value outside Q(ζ_e(H))".into())
            })
        })
        .collect::<Result<_>>()?;
    Character::new(hpart.group_hash, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{character_table, conjugacy_partition};
    use crate::cyclotomic::int;
    use crate::group::*;

    #[test]
    fn kernels() {
        let q8 = quaternion8();
        let t = character_table(&q8).unwrap();
        let k = character_kernel(&q8, &t.partition, &t.irreducibles[0]).unwrap();
        assert_eq!(k.order(), 8);
        let k = character_kernel(&q8, &t.partition, &t.irreducibles[4]).unwrap();
        assert!(k.is_trivial());
        let s3 = dihedral(6).unwrap();
        let t = character_table(&s3).unwrap();
        let sign = &t.irreducibles[1];
        assert_eq!(
            character_kernel(&s3, &t.partition, sign).unwrap().order(),
            3
        );
    }

    #[test]
    fn induction_from_c3_in_s3() {
        let s3 = dihedral(6).unwrap();
        let gt = character_table(&s3).unwrap();
        let h = s3.cyclic_subgroup(s3.generator("r").unwrap());
        let (hg, _) = s3.subgroup_group(&h).unwrap();
        let ht = character_table(&hg).unwrap();
        let ind =
            induce_character(&s3, &gt.partition, &h, &ht.partition, &ht.irreducibles[1]).unwrap();
        assert_eq!(ind, gt.irreducibles[2]);
        assert!(is_irreducible(&gt.partition, &ind).unwrap());
        // trivial character induces the coset permutation character
        let perm =
            induce_character(&s3, &gt.partition, &h, &ht.partition, &ht.irreducibles[0]).unwrap();
        assert_eq!(perm.degree, 2);
        assert!(!is_irreducible(&gt.partition, &perm).unwrap());
    }

    #[test]
    fn reciprocity_on_s3() {
        let s3 = dihedral(6).unwrap();
        let gt = character_table(&s3).unwrap();
        let h = s3.cyclic_subgroup(s3.generator("r").unwrap());
        let (hg, _) = s3.subgroup_group(&h).unwrap();
        let ht = character_table(&hg).unwrap();
        for chi in &ht.irreducibles {
            let ind = induce_character(&s3, &gt.partition, &h, &ht.partition, chi).unwrap();
            for psi in &gt.irreducibles {
                let res = restrict_character(&s3, &gt.partition, psi, &h, &ht.partition).unwrap();
                let lhs = inner_product(&gt.partition, &ind, psi).unwrap();
                let rhs = inner_product(&ht.partition, chi, &res).unwrap();
                assert_eq!(lhs.to_integer(), rhs.to_integer());
                assert!(lhs.to_integer().is_some());
            }
        }
    }

    #[test]
    fn q8_restricted_to_center() {
        let q8 = quaternion8();
        let gt = character_table(&q8).unwrap();
        let z = q8.center();
        let (zg, _) = q8.subgroup_group(&z).unwrap();
        let zp = conjugacy_partition(&zg);
        let res = restrict_character(&q8, &gt.partition, &gt.irreducibles[4], &z, &zp).unwrap();
        assert_eq!(res.values, vec![int(2, 2), int(2, -2)]);
    }
}
