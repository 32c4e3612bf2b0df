use proptest::prelude::*;

use minfaith::arith::pow_mod;
use minfaith::chartab::{character_table, inner_product};
use minfaith::cyclotomic::Cyclotomic;
use minfaith::group::*;
use minfaith::repdim::{rdim_bruteforce, rdim_value};

fn cyclo(e: u32) -> impl Strategy<Value = Cyclotomic> {
    (prop::collection::vec(-4i128..=4, e as usize), 1i128..=3)
        .prop_map(move |(w, d)| Cyclotomic::from_exponent_weights(e, &w).scale(1, d))
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(vec![1u32, 3, 4, 5, 6, 8, 9, 12, 15])
        .prop_flat_map(|e| (cyclo(e), cyclo(e), cyclo(e)))
}

/// `(n, m, r)` with `r^m = 1 mod n`, so `C_n ⋊ C_m` exists.
fn metacyclic() -> impl Strategy<Value = (usize, usize, u64)> {
    (2usize..=13, 1usize..=6)
        .prop_flat_map(|(n, m)| (Just(n), Just(m), 1u64..n as u64))
        .prop_filter("r^m = 1 mod n", |&(n, m, r)| {
            num_integer::gcd(r, n as u64) == 1 && pow_mod(r, m as u64, n as u64) == 1
        })
}

/// Conjugate the regular generators by a point permutation.
fn relabel(g: &Group, sigma: &[usize]) -> Group {
    let n = g.order();
    let mut inv = vec![0; n];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    let gens: Vec<Vec<usize>> = g
        .regular_generators()
        .iter()
        .map(|p| (0..n).map(|i| sigma[p[inv[i]] as usize]).collect())
        .collect();
    group_from_permutations(n, &gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn cyclotomic_inverse((a, _, _) in triple()) {
        match a.inverse() {
            Some(ai) => prop_assert_eq!(&a * &ai, Cyclotomic::one(a.conductor())),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn embed_then_restrict((a, _, _) in triple(), k in 1u32..=3) {
        let big = a.conductor() * k;
        prop_assert_eq!(a.embed(big).restrict(a.conductor()), Some(a));
    }

    #[test]
    fn abelian_rdim_counts_invariant_factors(factors in prop::collection::vec(2usize..=6, 1..=3)) {
        let g = factors[1..].iter().fold(cyclic(factors[0]).unwrap(), |acc, &n| {
            direct_product(&acc, &cyclic(n).unwrap()).unwrap()
        });
        let inv = abelian_invariants(&g).unwrap();
        prop_assert_eq!(rdim_value(&g).unwrap(), inv.len() as u64);
    }

    #[test]
    fn row_orthogonality_and_degrees((n, m, r) in metacyclic()) {
        let g = cyclic_semidirect(n, m, r).unwrap();
        let t = character_table(&g).unwrap();
        prop_assert_eq!(t.irreducibles.len(), t.partition.len());
        let sq: u64 = t.degrees().iter().map(|d| d * d).sum();
        prop_assert_eq!(sq, g.order() as u64);
        for (i, chi) in t.irreducibles.iter().enumerate() {
            for (j, psi) in t.irreducibles.iter().enumerate() {
                let ip = inner_product(&t.partition, chi, psi).unwrap();
                prop_assert_eq!(ip.to_integer(), Some((i == j) as i128));
            }
        }
    }

    #[test]
    fn rdim_is_a_relabeling_invariant((n, m, r) in metacyclic(), seed in any::<u64>()) {
        let g = cyclic_semidirect(n, m, r).unwrap();
        prop_assume!(g.order() <= 48);
        let mut sigma: Vec<usize> = (0..g.order()).collect();
        let mut state = seed | 1;
        for i in (1..sigma.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            sigma.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let h = relabel(&g, &sigma);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(rdim_value(&g).unwrap(), rdim_value(&h).unwrap());
    }

    #[test]
    fn search_agrees_with_bruteforce((n, m, r) in metacyclic()) {
        let g = cyclic_semidirect(n, m, r).unwrap();
        prop_assume!(g.order() <= 24);
        prop_assert_eq!(rdim_value(&g).unwrap(), rdim_bruteforce(&g).unwrap().value);
    }

    #[test]
    fn subgroups_never_need_more((n, m, r) in metacyclic()) {
        let g = cyclic_semidirect(n, m, r).unwrap();
        prop_assume!(g.order() <= 40);
        let top = rdim_value(&g).unwrap();
        for h in g.maximal_subgroups().unwrap() {
            let (sub, _) = g.subgroup_group(&h).unwrap();
            prop_assert!(rdim_value(&sub).unwrap() <= top);
        }
    }

    #[test]
    fn direct_products((a, b, r) in metacyclic(), k in 1usize..=6) {
        let g = cyclic_semidirect(a, b, r).unwrap();
        let h = cyclic(k).unwrap();
        prop_assume!(g.order() * k <= 60);
        let p = direct_product(&g, &h).unwrap();
        prop_assert_eq!(p.order(), g.order() * k);
        prop_assert!(p.verify_associativity());
        let (rg, rh, rp) = (rdim_value(&g).unwrap(), rdim_value(&h).unwrap(), rdim_value(&p).unwrap());
        prop_assert!(rp <= rg + rh);
        prop_assert!(rp >= rg.max(rh));
    }
}
