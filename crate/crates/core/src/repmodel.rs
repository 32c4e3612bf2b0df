//! Explicit matrix representations over cyclotomic fields: monomial models
//! induced from linear characters, direct sums, and imprimitive subgroups
//! of `GL_3` generated by diagonal matrices and a 3-cycle.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::lcm;
use crate::chartab::{conjugacy_partition, induce_character, Character, ConjugacyPartition};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{closure_table, ContentHash, Group, Subgroup, TABLE_CAP};

/// Largest matrix dimension produced by induction.
pub const DIM_CAP: usize = 12;
/// Above this order the homomorphism check walks the Cayley graph instead of
/// testing all pairs.
pub const EXHAUSTIVE_CHECK_LIMIT: usize = 200;

/// Square matrix with entries in a single cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycloMatrix {
    pub dim: usize,
    /// Row-major entries.
    pub entries: Vec<Cyclotomic>,
}

impl CycloMatrix {
    pub fn zero(dim: usize, e: u32) -> Self {
        CycloMatrix {
            dim,
            entries: vec![Cyclotomic::zero(e); dim * dim],
        }
    }

    pub fn identity(dim: usize, e: u32) -> Self {
        let mut m = Self::zero(dim, e);
        for i in 0..dim {
            m.entries[i * dim + i] = Cyclotomic::one(e);
        }
        m
    }

    pub fn diagonal(diag: &[Cyclotomic]) -> Result<Self> {
        let e = common_conductor(diag.iter())?;
        let dim = diag.len();
        let mut m = Self::zero(dim, e);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * dim + i] = d.embed(e);
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::BadParameter(
                "matrix must be square and nonempty".into(),
            ));
        }
        let e = common_conductor(rows.iter().flatten())?;
        Ok(CycloMatrix {
            dim,
            entries: rows.into_iter().flatten().map(|x| x.embed(e)).collect(),
        })
    }

    /// Permutation matrix sending basis vector `i` to `perm[i]`.
    pub fn permutation(perm: &[usize], e: u32) -> Self {
        let dim = perm.len();
        let mut m = Self::zero(dim, e);
        for (i, &j) in perm.iter().enumerate() {
            m.entries[j * dim + i] = Cyclotomic::one(e);
        }
        m
    }

    pub fn conductor(&self) -> u32 {
        self.entries[0].conductor()
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    pub fn embed(&self, e: u32) -> Self {
        CycloMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x.embed(e)).collect(),
        }
    }

    pub fn mul(&self, other: &CycloMatrix) -> CycloMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zero(n, self.conductor());
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let x = self.get(i, j);
                if i == j {
                    x.to_integer() == Some(1)
                } else {
                    x.is_zero()
                }
            })
        })
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero(self.conductor());
        for i in 0..self.dim {
            t += self.get(i, i);
        }
        t
    }

    /// Gauss-Jordan on `[A | I]`; `None` when singular.
    pub fn inverse(&self) -> Option<CycloMatrix> {
        let n = self.dim;
        let e = self.conductor();
        let mut a: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut b: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Cyclotomic::from_int(e, (i == j) as i128))
                    .collect()
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            b.swap(c, p);
            let inv = a[c][c].inverse()?;
            for j in 0..n {
                a[c][j] = &a[c][j] * &inv;
                b[c][j] = &b[c][j] * &inv;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&f * &a[c][j]);
                    b[r][j] = &b[r][j] - &(&f * &b[c][j]);
                }
            }
        }
        Some(CycloMatrix {
            dim: n,
            entries: b.into_iter().flatten().collect(),
        })
    }

    pub fn det(&self) -> Cyclotomic {
        let n = self.dim;
        let e = self.conductor();
        let mut a: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut det = Cyclotomic::one(e);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Cyclotomic::zero(e);
            };
            if p != c {
                a.swap(c, p);
                det = -det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inverse().expect("pivot is nonzero");
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] * &inv;
                for j in c..n {
                    a[r][j] = &a[r][j] - &(&f * &a[c][j]);
                }
            }
        }
        det
    }
}

fn common_conductor<'a>(xs: impl Iterator<Item = &'a Cyclotomic>) -> Result<u32> {
    let e = xs.fold(1u64, |acc, x| lcm(acc, x.conductor() as u64));
    u32::try_from(e).map_err(|_| Error::BadParameter("conductor overflow".into()))
}

/// `ρ: G -> GL_dim`, one image per group element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRepresentation {
    pub group_hash: ContentHash,
    pub dim: usize,
    pub images: Vec<CycloMatrix>,
}

impl MatrixRepresentation {
    pub fn conductor(&self) -> u32 {
        self.images[0].conductor()
    }

    pub fn image(&self, g: u32) -> &CycloMatrix {
        &self.images[g as usize]
    }

    /// Images of the group's generators, in generator order.
    pub fn generator_images<'a>(
        &'a self,
        g: &'a Group,
    ) -> impl Iterator<Item = &'a CycloMatrix> + 'a {
        g.generators().iter().map(|&s| self.image(s))
    }

    pub fn embed(&self, e: u32) -> Self {
        MatrixRepresentation {
            group_hash: self.group_hash,
            dim: self.dim,
            images: self.images.iter().map(|m| m.embed(e)).collect(),
        }
    }
}

/// Checks `ρ(1) = I` and `ρ(x)ρ(y) = ρ(xy)`: over all pairs up to
/// [`EXHAUSTIVE_CHECK_LIMIT`], otherwise for every `x` and every generator
/// `y`, which determines `ρ` on words and so is equivalent.
pub fn verify_homomorphism(g: &Group, rho: &MatrixRepresentation) -> Result<()> {
    if rho.group_hash != g.content_hash() || rho.images.len() != g.order() {
        return Err(Error::Mismatch(
            "representation belongs to a different group".into(),
        ));
    }
    if !rho.image(0).is_identity() {
        return Err(Error::InternalVerificationFailed(
            "identity does not map to I".into(),
        ));
    }
    let rights: Vec<u32> = if g.order() <= EXHAUSTIVE_CHECK_LIMIT {
        g.elements().collect()
    } else {
        g.generators().to_vec()
    };
    let bad = g.elements().into_par_iter().find_any(|&x| {
        rights
            .iter()
            .any(|&y| rho.image(x).mul(rho.image(y)) != *rho.image(g.mul(x, y)))
    });
    match bad {
        Some(x) => Err(Error::InternalVerificationFailed(format!(
            "homomorphism fails at element {x}"
        ))),
        None => Ok(()),
    }
}

/// Trace character of `ρ`.
pub fn trace_character(part: &ConjugacyPartition, rho: &MatrixRepresentation) -> Result<Character> {
    if rho.group_hash != part.group_hash {
        return Err(Error::Mismatch(
            "representation belongs to a different group".into(),
        ));
    }
    let e = part.exponent.max(1);
    let values = part
        .representatives
        .iter()
        .map(|&r| {
            let t = rho.image(r).trace();
            let l = lcm(t.conductor() as u64, e as u64) as u32;
            t.embed(l).restrict(e).ok_or_else(|| {
                Error::InternalVerificationFailed("trace lies outside the character field".into())
            })
        })
        .collect::<Result<_>>()?;
    Character::new(part.group_hash, values)
}

/// Monomial model of `Ind_H^G χ` for a linear character `χ` of `h` (viewed
/// as a group through [`Group::subgroup_group`], with partition `hpart`).
///
/// Coset representatives are the least element of each left coset `tH`,
/// ordered by index; `ρ(g)` maps basis vector `i` to `χ(t_j^-1 g t_i) e_j`
/// where `g t_i ∈ t_j H`. The trace character is checked against
/// [`induce_character`].
pub fn induced_matrix_representation(
    g: &Group,
    h: &Subgroup,
    hpart: &ConjugacyPartition,
    chi: &Character,
) -> Result<MatrixRepresentation> {
    if chi.degree != 1 {
        return Err(Error::NonlinearCharacter(chi.degree));
    }
    if h.parent_hash() != g.content_hash() {
        return Err(Error::NotASubgroup("subgroup of a different group".into()));
    }
    if chi.group_hash != hpart.group_hash || hpart.order != h.order() {
        return Err(Error::Mismatch(
            "character does not belong to the subgroup".into(),
        ));
    }
    let index = g.order() / h.order();
    if index > DIM_CAP {
        return Err(Error::IndexCapExceeded {
            index,
            cap: DIM_CAP,
        });
    }
    let gpart = conjugacy_partition(g);
    let e = gpart.exponent.max(1);
    // coset_of[x] = position of the coset xH among the representatives
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps: Vec<u32> = Vec::with_capacity(index);
    for x in g.elements() {
        if coset_of[x as usize] != usize::MAX {
            continue;
        }
        for &y in h.members() {
            coset_of[g.mul(x, y) as usize] = reps.len();
        }
        reps.push(x);
    }
    let chi_at = |y: u32| -> Cyclotomic {
        let local = h.position(y).expect("element lies in H") as u32;
        chi.values[hpart.class(local)].embed(e)
    };
    let images: Vec<CycloMatrix> = g
        .elements()
        .into_par_iter()
        .map(|x| {
            let mut m = CycloMatrix::zero(index, e);
            for (i, &t) in reps.iter().enumerate() {
                let xt = g.mul(x, t);
                let j = coset_of[xt as usize];
                let y = g.mul(g.inv(reps[j]), xt);
                m.entries[j * index + i] = chi_at(y);
            }
            m
        })
        .collect();
    let rho = MatrixRepresentation {
        group_hash: g.content_hash(),
        dim: index,
        images,
    };
    verify_homomorphism(g, &rho)?;
    let expected = induce_character(g, &gpart, h, hpart, chi)?;
    if trace_character(&gpart, &rho)? != expected {
        return Err(Error::InternalVerificationFailed(
            "trace differs from the induced character".into(),
        ));
    }
    Ok(rho)
}

/// One-dimensional representation afforded by a linear character of `g`.
pub fn linear_representation(
    g: &Group,
    part: &ConjugacyPartition,
    chi: &Character,
) -> Result<MatrixRepresentation> {
    if chi.degree != 1 {
        return Err(Error::NonlinearCharacter(chi.degree));
    }
    if chi.group_hash != g.content_hash() || part.group_hash != g.content_hash() {
        return Err(Error::Mismatch(
            "character belongs to a different group".into(),
        ));
    }
    let images = g
        .elements()
        .map(|x| CycloMatrix {
            dim: 1,
            entries: vec![chi.values[part.class(x)].clone()],
        })
        .collect();
    Ok(MatrixRepresentation {
        group_hash: g.content_hash(),
        dim: 1,
        images,
    })
}

pub fn kernel_of_representation(g: &Group, rho: &MatrixRepresentation) -> Result<Subgroup> {
    if rho.group_hash != g.content_hash() {
        return Err(Error::Mismatch(
            "representation belongs to a different group".into(),
        ));
    }
    let members: Vec<u32> = g
        .elements()
        .filter(|&x| rho.image(x).is_identity())
        .collect();
    Subgroup::from_members(g, &members)
}

pub fn is_faithful(rho: &MatrixRepresentation) -> bool {
    rho.images.iter().skip(1).all(|m| !m.is_identity())
}

/// Block-diagonal sum over the least common field.
pub fn direct_sum(
    a: &MatrixRepresentation,
    b: &MatrixRepresentation,
) -> Result<MatrixRepresentation> {
    if a.group_hash != b.group_hash || a.images.len() != b.images.len() {
        return Err(Error::Mismatch(
            "summands belong to different groups".into(),
        ));
    }
    let e = lcm(a.conductor() as u64, b.conductor() as u64) as u32;
    let dim = a.dim + b.dim;
    let images = a
        .images
        .iter()
        .zip(&b.images)
        .map(|(x, y)| {
            let mut m = CycloMatrix::zero(dim, e);
            for i in 0..a.dim {
                for j in 0..a.dim {
                    m.entries[i * dim + j] = x.get(i, j).embed(e);
                }
            }
            for i in 0..b.dim {
                for j in 0..b.dim {
                    m.entries[(a.dim + i) * dim + a.dim + j] = y.get(i, j).embed(e);
                }
            }
            m
        })
        .collect();
    Ok(MatrixRepresentation {
        group_hash: a.group_hash,
        dim,
        images,
    })
}

/// `true` when every image has determinant 1.
pub fn determinant_check(rho: &MatrixRepresentation) -> bool {
    rho.images
        .par_iter()
        .all(|m| m.det().to_integer() == Some(1))
}

/// `ρ` restricted to `h`, as a representation of `g.subgroup_group(h)`.
pub fn restrict_representation(
    g: &Group,
    rho: &MatrixRepresentation,
    h: &Subgroup,
) -> Result<(Group, MatrixRepresentation)> {
    if rho.group_hash != g.content_hash() || h.parent_hash() != g.content_hash() {
        return Err(Error::Mismatch(
            "representation and subgroup disagree".into(),
        ));
    }
    let (hg, embedding) = g.subgroup_group(h)?;
    let images = embedding.iter().map(|&x| rho.image(x).clone()).collect();
    let res = MatrixRepresentation {
        group_hash: hg.content_hash(),
        dim: rho.dim,
        images,
    };
    Ok((hg, res))
}

/// Group generated by 3x3 diagonal matrices of roots of unity together with
/// (optionally) the cyclic permutation matrix, with its tautological model.
/// Generator labels are `d0, d1, ...` and `c` for the permutation.
pub fn imprimitive_model(
    diagonals: &[CycloMatrix],
    use_3cycle: bool,
) -> Result<(Group, MatrixRepresentation)> {
    for d in diagonals {
        if d.dim != 3 || !d.is_diagonal() {
            return Err(Error::BadParameter(
                "generators must be 3x3 diagonal matrices".into(),
            ));
        }
        let e = d.conductor();
        let n = if e % 2 == 0 { e } else { 2 * e };
        for i in 0..3 {
            let x = d.get(i, i);
            let mut y = Cyclotomic::one(e);
            for _ in 0..n {
                y = &y * x;
            }
            if y.to_integer() != Some(1) {
                return Err(Error::BadParameter(format!(
                    "diagonal entry {x} is not a root of unity"
                )));
            }
        }
    }
    let e = diagonals
        .iter()
        .fold(1u64, |acc, d| lcm(acc, d.conductor() as u64)) as u32;
    let mut gens: Vec<CycloMatrix> = diagonals.iter().map(|d| d.embed(e)).collect();
    let mut labels: Vec<String> = (0..gens.len()).map(|i| format!("d{i}")).collect();
    if use_3cycle {
        gens.push(CycloMatrix::permutation(&[1, 2, 0], e));
        labels.push("c".into());
    }
    let (elements, table) = closure_table(
        CycloMatrix::identity(3, e),
        &gens,
        |a, b| a.mul(b),
        TABLE_CAP,
    )?;
    let gen_idx: Vec<u32> = gens
        .iter()
        .map(|m| {
            elements
                .iter()
                .position(|x| x == m)
                .expect("generator is in its closure") as u32
        })
        .collect();
    let group = Group::from_table(elements.len(), table, gen_idx, labels)?;
    let rho = MatrixRepresentation {
        group_hash: group.content_hash(),
        dim: 3,
        images: elements,
    };
    verify_homomorphism(&group, &rho)?;
    Ok((group, rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{character_kernel, character_table};
    use crate::cyclotomic::int;
    use crate::group::*;

    fn a4() -> Group {
        group_from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap()
    }

    #[test]
    fn matrix_arithmetic() {
        let z = Cyclotomic::zeta(3, 1);
        let m =
            CycloMatrix::from_rows(vec![vec![int(3, 1), z.clone()], vec![int(3, 0), int(3, 2)]])
                .unwrap();
        assert_eq!(m.det(), int(3, 2));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular =
            CycloMatrix::from_rows(vec![vec![z.clone(), z.clone()], vec![z.clone(), z]]).unwrap();
        assert!(singular.inverse().is_none());
        assert!(singular.det().is_zero());
        let p = CycloMatrix::permutation(&[1, 2, 0], 1);
        assert_eq!(p.det(), int(1, 1));
        assert!(p.mul(&p).mul(&p).is_identity());
    }

    #[test]
    fn induced_from_cyclic_in_s3() {
        let s3 = dihedral(6).unwrap();
        let h = s3.cyclic_subgroup(s3.generator("r").unwrap());
        let (hg, _) = s3.subgroup_group(&h).unwrap();
        let ht = character_table(&hg).unwrap();
        let rho =
            induced_matrix_representation(&s3, &h, &ht.partition, &ht.irreducibles[1]).unwrap();
        assert_eq!(rho.dim, 2);
        assert!(is_faithful(&rho));
        assert!(kernel_of_representation(&s3, &rho).unwrap().is_trivial());
    }

    #[test]
    fn index_one_gives_the_character() {
        let g = cyclic(4).unwrap();
        let t = character_table(&g).unwrap();
        let whole = g.whole();
        let (wg, _) = g.subgroup_group(&whole).unwrap();
        let wt = character_table(&wg).unwrap();
        let rho =
            induced_matrix_representation(&g, &whole, &wt.partition, &wt.irreducibles[1]).unwrap();
        let lin = linear_representation(&g, &t.partition, &t.irreducibles[1]).unwrap();
        assert_eq!(rho, lin.embed(rho.conductor()));
    }

    #[test]
    fn regular_model_from_trivial_subgroup() {
        let g = quaternion8();
        let one = g.trivial_subgroup();
        let (og, _) = g.subgroup_group(&one).unwrap();
        let ot = character_table(&og).unwrap();
        let rho =
            induced_matrix_representation(&g, &one, &ot.partition, &ot.irreducibles[0]).unwrap();
        assert_eq!(rho.dim, 8);
        assert!(is_faithful(&rho));
    }

    #[test]
    fn errors() {
        let s3 = dihedral(6).unwrap();
        let whole = s3.whole();
        let (wg, _) = s3.subgroup_group(&whole).unwrap();
        let wt = character_table(&wg).unwrap();
        let err = induced_matrix_representation(&s3, &whole, &wt.partition, &wt.irreducibles[2])
            .unwrap_err();
        assert!(matches!(err, Error::NonlinearCharacter(2)));
        let g = cyclic(13).unwrap();
        let one = g.trivial_subgroup();
        let (og, _) = g.subgroup_group(&one).unwrap();
        let ot = character_table(&og).unwrap();
        let err = induced_matrix_representation(&g, &one, &ot.partition, &ot.irreducibles[0])
            .unwrap_err();
        assert!(matches!(
            err,
            Error::IndexCapExceeded { index: 13, cap: 12 }
        ));
    }

    #[test]
    fn linear_characters_of_nonabelian_groups_are_not_faithful() {
        let g = a4();
        let t = character_table(&g).unwrap();
        for chi in t.irreducibles.iter().filter(|c| c.is_linear()) {
            let rho = linear_representation(&g, &t.partition, chi).unwrap();
            let k = kernel_of_representation(&g, &rho).unwrap();
            assert!(g.derived_subgroup().is_subset(&k));
            assert!(!is_faithful(&rho));
            assert_eq!(k, character_kernel(&g, &t.partition, chi).unwrap());
        }
    }

    #[test]
    fn imprimitive_examples() {
        let w = Cyclotomic::zeta(3, 1);
        let d = CycloMatrix::diagonal(&[w.clone(), Cyclotomic::zeta(3, -1), int(3, 1)]).unwrap();
        let (g, rho) = imprimitive_model(&[d], true).unwrap();
        assert_eq!(g.order(), 27);
        assert!(!g.is_abelian());
        assert!(is_faithful(&rho));

        let (c3, _) = imprimitive_model(&[CycloMatrix::identity(3, 1)], true).unwrap();
        assert_eq!(c3.order(), 3);

        let d1 = CycloMatrix::diagonal(&[int(1, -1), int(1, -1), int(1, 1)]).unwrap();
        let d2 = CycloMatrix::diagonal(&[int(1, 1), int(1, -1), int(1, -1)]).unwrap();
        let (g, rho) = imprimitive_model(&[d1, d2], true).unwrap();
        assert!(is_isomorphic(&g, &a4()));
        assert!(determinant_check(&rho));
    }

    #[test]
    fn non_root_of_unity_rejected() {
        let d = CycloMatrix::diagonal(&[int(1, 2), int(1, 1), int(1, 1)]).unwrap();
        assert!(matches!(
            imprimitive_model(&[d], false),
            Err(Error::BadParameter(_))
        ));
    }
}
