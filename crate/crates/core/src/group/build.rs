use std::collections::HashMap;
use std::hash::Hash;

use super::{Group, TABLE_CAP};
use crate::error::{Error, Result};

const UNSET: u32 = u32::MAX;

/// Breadth-first closure of `gens` under `mul`, starting from `identity`.
///
/// Elements are discovered identity first, then `x * s` for each queued `x`
/// and each generator `s` in order. Returns the elements in discovery order
/// and the full multiplication table over those indices. The table is
/// filled column by column through the BFS parent words, so only the
/// right-multiplications by generators are ever evaluated with `mul`.
pub(crate) fn closure_table<T, F>(
    identity: T,
    gens: &[T],
    mul: F,
    cap: usize,
) -> Result<(Vec<T>, Vec<u32>)>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, u32> = HashMap::new();
    index.insert(identity, 0);
    let mut right: Vec<u32> = Vec::new();
    // parent[j] = (p, s) with elements[j] = elements[p] * gens[s]
    let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
    let mut i = 0;
    while i < elements.len() {
        for (s, g) in gens.iter().enumerate() {
            let y = mul(&elements[i], g);
            let idx = match index.get(&y) {
                Some(&k) => k,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::ClosureExceedsCap { cap });
                    }
                    let k = elements.len() as u32;
                    index.insert(y.clone(), k);
                    elements.push(y);
                    parent.push((i as u32, s as u32));
                    k
                }
            };
            right.push(idx);
        }
        i += 1;
    }
    let n = elements.len();
    let ng = gens.len();
    let mut table = vec![0u32; n * n];
    for r in 0..n {
        table[r * n] = r as u32;
    }
    for j in 1..n {
        let (p, s) = parent[j];
        for r in 0..n {
            let rp = table[r * n + p as usize];
            table[r * n + j] = right[rp as usize * ng + s as usize];
        }
    }
    Ok((elements, table))
}

/// Extends `gen_images` (images of `gens` in `dst`) along the words of the
/// subgroup of `src` generated by `gens`. Returns `None` when the assignment
/// is not a well-defined homomorphism on that subgroup. Entries outside the
/// generated subgroup are `u32::MAX`; the second component lists the
/// generated subgroup in discovery order.
pub(crate) fn extend_homomorphism(
    src: &Group,
    gens: &[u32],
    dst: &Group,
    gen_images: &[u32],
) -> Option<(Vec<u32>, Vec<u32>)> {
    debug_assert_eq!(gens.len(), gen_images.len());
    let mut map = vec![UNSET; src.order()];
    map[0] = 0;
    let mut reached = vec![0u32];
    let mut i = 0;
    while i < reached.len() {
        let x = reached[i];
        let fx = map[x as usize];
        for (&s, &t) in gens.iter().zip(gen_images) {
            let y = src.mul(x, s);
            let fy = dst.mul(fx, t);
            match map[y as usize] {
                UNSET => {
                    map[y as usize] = fy;
                    reached.push(y);
                }
                prev if prev != fy => return None,
                _ => {}
            }
        }
        i += 1;
    }
    Some((map, reached))
}

pub fn group_from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<Group> {
    group_from_permutations_with_cap(degree, gens, TABLE_CAP)
}

/// Abstract group generated by permutations given as 0-based image lists.
/// Products compose left to right: `(x * y)[i] = y[x[i]]`.
pub fn group_from_permutations_with_cap(
    degree: usize,
    gens: &[Vec<usize>],
    cap: usize,
) -> Result<Group> {
    if degree == 0 {
        return Err(Error::BadParameter(
            "permutation degree must be positive".into(),
        ));
    }
    let mut perms: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for (index, g) in gens.iter().enumerate() {
        let mut seen = vec![false; degree];
        if g.len() != degree {
            return Err(Error::NonBijective { index, degree });
        }
        for &x in g {
            if x >= degree || seen[x] {
                return Err(Error::NonBijective { index, degree });
            }
            seen[x] = true;
        }
        perms.push(g.iter().map(|&x| x as u32).collect());
    }
    let identity: Vec<u32> = (0..degree as u32).collect();
    let (elements, table) = closure_table(
        identity,
        &perms,
        |x, y| x.iter().map(|&i| y[i as usize]).collect(),
        cap.min(TABLE_CAP),
    )?;
    let gen_idx: Vec<u32> = perms
        .iter()
        .map(|p| elements.iter().position(|e| e == p).unwrap() as u32)
        .collect();
    let labels = (0..gen_idx.len()).map(|i| format!("g{i}")).collect();
    Group::from_table(elements.len(), table, gen_idx, labels)
}

pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic(n) needs n >= 1".into()));
    }
    if n > TABLE_CAP {
        return Err(Error::ClosureExceedsCap { cap: TABLE_CAP });
    }
    let mut mul = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mul.push(((i + j) % n) as u32);
        }
    }
    let (gens, labels) = if n > 1 {
        (vec![1], vec!["a".to_string()])
    } else {
        (vec![], vec![])
    };
    Group::from_table(n, mul, gens, labels)
}

/// `C_n ⋊ C_m` where the generator of `C_m` acts by `a -> a^r`.
pub fn cyclic_semidirect(n: usize, m: usize, r: u64) -> Result<Group> {
    let cn = cyclic(n)?;
    let cm = cyclic(m)?;
    let images = if m > 1 {
        vec![if n > 1 {
            vec![(r % n as u64) as u32]
        } else {
            vec![]
        }]
    } else {
        vec![]
    };
    semidirect_product(&cn, &cm, &AutomorphismAction { images })
}

/// Dihedral group of order `two_n` (`two_n = 2n`, `n >= 1`), generators `r`, `s`.
pub fn dihedral(two_n: usize) -> Result<Group> {
    if two_n < 2 || two_n % 2 != 0 {
        return Err(Error::BadParameter(format!(
            "dihedral order {two_n} must be even and >= 2"
        )));
    }
    let n = two_n / 2;
    let g = cyclic_semidirect(n, 2, n as u64 - 1)?;
    if n == 1 {
        relabel(g, &["s"])
    } else {
        relabel(g, &["r", "s"])
    }
}

/// Dicyclic (binary dihedral) group of order `four_n`:
/// `<A, B | A^n = B^2, B^4 = 1, B A B^-1 = A^-1>`, `n >= 2`.
pub fn dicyclic(four_n: usize) -> Result<Group> {
    if four_n % 4 != 0 || four_n < 8 {
        return Err(Error::BadParameter(format!(
            "dicyclic order {four_n} must be 4n with n >= 2"
        )));
    }
    if four_n > TABLE_CAP {
        return Err(Error::ClosureExceedsCap { cap: TABLE_CAP });
    }
    let n = four_n / 4;
    let m = 2 * n; // order of A
                   // element A^i B^j stored at j * m + i
    let idx = |i: usize, j: usize| (j * m + i) as u32;
    let mut mul = Vec::with_capacity(four_n * four_n);
    for x in 0..four_n {
        let (i, j) = (x % m, x / m);
        for y in 0..four_n {
            let (k, l) = (y % m, y / m);
            // B^j A^k = A^{(-1)^j k} B^j
            let mut e = (if j == 0 { i + k } else { i + m - k }) % m;
            let mut b = j + l;
            if b == 2 {
                e = (e + n) % m;
                b = 0;
            }
            mul.push(idx(e, b));
        }
    }
    Group::from_table(
        four_n,
        mul,
        vec![idx(1, 0), idx(0, 1)],
        vec!["A".into(), "B".into()],
    )
}

pub fn quaternion8() -> Group {
    relabel(dicyclic(8).expect("order 8 is valid"), &["i", "j"]).expect("two generators")
}

/// Unitriangular 3x3 matrices over F_3, generators `x`, `y` with `z = [x, y]`.
pub fn heisenberg27() -> Group {
    // (a, b, c) stored at 9a + 3b + c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
    let mut mul = Vec::with_capacity(27 * 27);
    for x in 0..27usize {
        let (a, b, c) = (x / 9, x / 3 % 3, x % 3);
        for y in 0..27usize {
            let (a2, b2, c2) = (y / 9, y / 3 % 3, y % 3);
            let r = ((a + a2) % 3) * 9 + ((b + b2) % 3) * 3 + (c + c2 + a * b2) % 3;
            mul.push(r as u32);
        }
    }
    Group::from_table(27, mul, vec![9, 3], vec!["x".into(), "y".into()])
        .expect("Heisenberg table is valid")
}

pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > TABLE_CAP {
        return Err(Error::ClosureExceedsCap { cap: TABLE_CAP });
    }
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = ((x / nb) as u32, (x % nb) as u32);
        for y in 0..n {
            let (ya, yb) = ((y / nb) as u32, (y % nb) as u32);
            mul.push(a.mul(xa, ya) * nb as u32 + b.mul(xb, yb));
        }
    }
    let mut gens: Vec<u32> = a.generators().iter().map(|&g| g * nb as u32).collect();
    gens.extend(b.generators().iter().copied());
    let labels = merge_labels(a, b);
    Group::from_table(n, mul, gens, labels)
}

/// An action of a group `H` on a group `N`: for each generator of `H` (in
/// order), the images of `N`'s generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismAction {
    pub images: Vec<Vec<u32>>,
}

impl AutomorphismAction {
    pub fn trivial(n: &Group, h: &Group) -> Self {
        AutomorphismAction {
            images: vec![n.generators().to_vec(); h.generators().len()],
        }
    }

    /// Full automorphism table `phi[h][x]` after validating that every
    /// generator image extends to an automorphism and that `H -> Aut(N)` is
    /// a homomorphism, composed as `phi_{h1 h2} = phi_{h1} ∘ phi_{h2}`.
    pub fn expand(&self, n: &Group, h: &Group) -> Result<Vec<Vec<u32>>> {
        if self.images.len() != h.generators().len() {
            return Err(Error::InvalidAction(format!(
                "{} image maps for {} generators of the acting group",
                self.images.len(),
                h.generators().len()
            )));
        }
        let mut gen_autos = Vec::with_capacity(self.images.len());
        for (i, imgs) in self.images.iter().enumerate() {
            if imgs.len() != n.generators().len() || imgs.iter().any(|&x| x as usize >= n.order()) {
                return Err(Error::InvalidAction(format!(
                    "map {i} does not assign an element to every generator"
                )));
            }
            let (map, reached) = extend_homomorphism(n, n.generators(), n, imgs)
                .ok_or_else(|| Error::InvalidAction(format!("map {i} is not a homomorphism")))?;
            if reached.len() != n.order() {
                return Err(Error::InvalidAction("generators do not generate N".into()));
            }
            let mut hit = vec![false; n.order()];
            for &y in &map {
                hit[y as usize] = true;
            }
            if hit.iter().any(|&b| !b) {
                return Err(Error::InvalidAction(format!("map {i} is not bijective")));
            }
            gen_autos.push(map);
        }
        let mut phi: Vec<Option<Vec<u32>>> = vec![None; h.order()];
        phi[0] = Some(n.elements().collect());
        let mut queue = vec![0u32];
        let mut qi = 0;
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            for (s, &gs) in h.generators().iter().enumerate() {
                let y = h.mul(x, gs);
                let px = phi[x as usize].as_ref().unwrap();
                let composed: Vec<u32> = gen_autos[s].iter().map(|&v| px[v as usize]).collect();
                match &phi[y as usize] {
                    None => {
                        phi[y as usize] = Some(composed);
                        queue.push(y);
                    }
                    Some(prev) if *prev != composed => {
                        return Err(Error::InvalidAction(
                            "assignment H -> Aut(N) is not a homomorphism".into(),
                        ))
                    }
                    _ => {}
                }
            }
        }
        phi.into_iter()
            .map(|p| {
                p.ok_or_else(|| Error::InvalidAction("H is not generated by its generators".into()))
            })
            .collect()
    }
}

/// `N ⋊ H` on pairs `(n, h)` (stored at `n * |H| + h`) with
/// `(n1, h1)(n2, h2) = (n1 phi_{h1}(n2), h1 h2)`.
pub fn semidirect_product(n: &Group, h: &Group, action: &AutomorphismAction) -> Result<Group> {
    let (nn, nh) = (n.order(), h.order());
    let total = nn * nh;
    if total > TABLE_CAP {
        return Err(Error::ClosureExceedsCap { cap: TABLE_CAP });
    }
    let phi = action.expand(n, h)?;
    let mut mul = Vec::with_capacity(total * total);
    for x in 0..total {
        let (xn, xh) = ((x / nh) as u32, (x % nh) as u32);
        let ph = &phi[xh as usize];
        for y in 0..total {
            let (yn, yh) = ((y / nh) as u32, (y % nh) as u32);
            let new_n = n.mul(xn, ph[yn as usize]);
            mul.push(new_n * nh as u32 + h.mul(xh, yh));
        }
    }
    let mut gens: Vec<u32> = n.generators().iter().map(|&g| g * nh as u32).collect();
    gens.extend(h.generators().iter().copied());
    Group::from_table(total, mul, gens, merge_labels(n, h))
}

fn merge_labels(a: &Group, b: &Group) -> Vec<String> {
    let mut labels: Vec<String> = a.gen_labels().map(|(l, _)| l.to_string()).collect();
    for (l, _) in b.gen_labels() {
        let mut name = l.to_string();
        while labels.contains(&name) {
            name.push('\'');
        }
        labels.push(name);
    }
    labels
}

pub(crate) fn relabel(g: Group, labels: &[&str]) -> Result<Group> {
    if labels.len() != g.generators.len() {
        return Err(Error::BadParameter("label count mismatch".into()));
    }
    let mut g = g;
    g.labels = labels.iter().map(|s| s.to_string()).collect();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_closure_orders() {
        let c3 = group_from_permutations(3, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(c3.order(), 3);
        let v4 = group_from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert_eq!(v4.exponent(), 2);
        let d8 = group_from_permutations(4, &[vec![1, 2, 3, 0], vec![1, 0, 3, 2]]).unwrap();
        assert_eq!(d8.order(), 8);
        assert!(d8.verify_associativity());
    }

    #[test]
    fn permutation_errors() {
        assert!(matches!(
            group_from_permutations(3, &[vec![0, 0, 1]]),
            Err(Error::NonBijective { index: 0, .. })
        ));
        let s5 = [vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]];
        assert!(matches!(
            group_from_permutations_with_cap(5, &s5, 100),
            Err(Error::ClosureExceedsCap { cap: 100 })
        ));
        assert_eq!(group_from_permutations(5, &s5).unwrap().order(), 120);
    }

    #[test]
    fn standard_constructors() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let q8 = quaternion8();
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        assert!(q8.verify_associativity());
        let h = heisenberg27();
        assert_eq!(h.exponent(), 3);
        assert!(h.verify_associativity());
        let dic12 = dicyclic(12).unwrap();
        assert!(dic12.verify_associativity());
        assert!(dicyclic(4).is_err());
        assert!(dihedral(7).is_err());
        assert_eq!(dihedral(2).unwrap().order(), 2);
    }

    #[test]
    fn semidirect_validation() {
        let c7 = cyclic(7).unwrap();
        let c3 = cyclic(3).unwrap();
        let g = semidirect_product(
            &c7,
            &c3,
            &AutomorphismAction {
                images: vec![vec![2]],
            },
        )
        .unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        assert!(g.verify_associativity());
        // a -> a^3 has order 6 mod 7, not a homomorphism from C3
        let bad = semidirect_product(
            &c7,
            &c3,
            &AutomorphismAction {
                images: vec![vec![3]],
            },
        );
        assert!(matches!(bad, Err(Error::InvalidAction(_))));
        // a -> a^0 is not an automorphism
        let bad = semidirect_product(
            &c7,
            &c3,
            &AutomorphismAction {
                images: vec![vec![0]],
            },
        );
        assert!(matches!(bad, Err(Error::InvalidAction(_))));
    }

    #[test]
    fn trivial_action_is_direct_product() {
        let n = dihedral(6).unwrap();
        let h = cyclic(4).unwrap();
        let sd = semidirect_product(&n, &h, &AutomorphismAction::trivial(&n, &h)).unwrap();
        let dp = direct_product(&n, &h).unwrap();
        assert_eq!(sd.table(), dp.table());
        assert_eq!(sd.content_hash(), dp.content_hash());
    }
}
