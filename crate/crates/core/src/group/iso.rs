use std::collections::HashMap;

use super::{extend_homomorphism, Group};

/// Per-element data preserved by every isomorphism.
fn signatures(g: &Group) -> Vec<(u32, usize)> {
    g.elements()
        .map(|x| (g.element_order(x), g.centralizer_order(x)))
        .collect()
}

fn profile(g: &Group, sig: &[(u32, usize)]) -> (Vec<(u32, usize)>, usize, Vec<usize>) {
    let mut s = sig.to_vec();
    s.sort_unstable();
    let derived = g.derived_series().iter().map(|h| h.order()).collect();
    (s, g.center().order(), derived)
}

/// Generating sequence preferring high-order elements, so it stays short.
fn generating_sequence(g: &Group) -> Vec<u32> {
    let mut by_order: Vec<u32> = g.elements().skip(1).collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut gens: Vec<u32> = Vec::new();
    let mut span = g.trivial_subgroup();
    for x in by_order {
        if span.order() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.subgroup_generated_by(&gens);
        }
    }
    gens
}

/// An isomorphism `a -> b` as an image table, if one exists.
pub fn find_isomorphism(a: &Group, b: &Group) -> Option<Vec<u32>> {
    if a.order() != b.order() {
        return None;
    }
    if a.table() == b.table() {
        return Some(a.elements().collect());
    }
    let (sa, sb) = (signatures(a), signatures(b));
    if profile(a, &sa) != profile(b, &sb) {
        return None;
    }
    let mut candidates: HashMap<(u32, usize), Vec<u32>> = HashMap::new();
    for y in b.elements() {
        candidates.entry(sb[y as usize]).or_default().push(y);
    }
    let gens = generating_sequence(a);
    let mut images = Vec::with_capacity(gens.len());
    search(a, b, &gens, &sa, &candidates, &mut images)
}

fn search(
    a: &Group,
    b: &Group,
    gens: &[u32],
    sa: &[(u32, usize)],
    candidates: &HashMap<(u32, usize), Vec<u32>>,
    images: &mut Vec<u32>,
) -> Option<Vec<u32>> {
    let depth = images.len();
    if depth == gens.len() {
        let (map, reached) = extend_homomorphism(a, gens, b, images)?;
        return (reached.len() == a.order()).then_some(map);
    }
    let empty = Vec::new();
    let pool = candidates.get(&sa[gens[depth] as usize]).unwrap_or(&empty);
    for &y in pool {
        images.push(y);
        if let Some((map, reached)) = extend_homomorphism(a, &gens[..=depth], b, images) {
            let mut hit = vec![false; b.order()];
            let injective = reached
                .iter()
                .all(|&x| !std::mem::replace(&mut hit[map[x as usize] as usize], true));
            if injective {
                if let Some(found) = search(a, b, gens, sa, candidates, images) {
                    return Some(found);
                }
            }
        }
        images.pop();
    }
    None
}

pub fn is_isomorphic(a: &Group, b: &Group) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    #[test]
    fn small_cases() {
        assert!(!is_isomorphic(&dihedral(8).unwrap(), &quaternion8()));
        let s3 = semidirect_product(
            &cyclic(3).unwrap(),
            &cyclic(2).unwrap(),
            &AutomorphismAction {
                images: vec![vec![2]],
            },
        )
        .unwrap();
        assert!(is_isomorphic(&s3, &dihedral(6).unwrap()));
        let perm_s3 = group_from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        let map = find_isomorphism(&perm_s3, &s3).unwrap();
        for x in perm_s3.elements() {
            for y in perm_s3.elements() {
                assert_eq!(
                    map[perm_s3.mul(x, y) as usize],
                    s3.mul(map[x as usize], map[y as usize])
                );
            }
        }
        let c6 = cyclic(6).unwrap();
        assert!(is_isomorphic(
            &c6,
            &direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap()
        ));
        assert!(!is_isomorphic(&c6, &s3));
    }

    #[test]
    fn same_order_profile_different_groups() {
        // C4 x C4 and C4 ⋊ C4 share element order statistics
        let c4 = cyclic(4).unwrap();
        let ab = direct_product(&c4, &c4).unwrap();
        let nab = cyclic_semidirect(4, 4, 3).unwrap();
        assert_eq!(ab.order_statistics(), nab.order_statistics());
        assert!(!is_isomorphic(&ab, &nab));
        assert!(is_isomorphic(&heisenberg27(), &heisenberg27()));
    }
}
