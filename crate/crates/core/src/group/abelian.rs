use super::Group;
use crate::arith::factorize;
use crate::error::{Error, Result};

/// Exponents `e_1 >= e_2 >= ...` of the `p`-primary part `C_{p^e_1} x C_{p^e_2} x ...`,
/// read off from the sizes of `{g : g^{p^k} = 1}`.
fn primary_exponents(g: &Group, p: u64, a: u32) -> Vec<u32> {
    // omega[k] = log_p |{g : g^{p^k} = 1}| = sum_i min(k, e_i)
    let mut omega = vec![0u32];
    let mut pk = 1u64;
    for _ in 0..a {
        pk *= p;
        let count = g
            .element_orders()
            .iter()
            .filter(|&&o| pk % o as u64 == 0)
            .count() as u64;
        omega.push(crate::arith::log_exact(count, p).expect("torsion subgroup has p-power order"));
    }
    // number of e_i >= k is omega[k] - omega[k-1]
    let ge: Vec<u32> = (1..omega.len()).map(|k| omega[k] - omega[k - 1]).collect();
    let rank = ge.first().copied().unwrap_or(0) as usize;
    (0..rank)
        .map(|i| ge.iter().filter(|&&c| c as usize > i).count() as u32)
        .collect()
}

/// Invariant factors `n_1 | n_2 | ... | n_r` of an abelian group (empty for the
/// trivial group).
pub fn abelian_invariants(g: &Group) -> Result<Vec<u64>> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let primes = factorize(g.order() as u64);
    let parts: Vec<(u64, Vec<u32>)> = primes
        .iter()
        .map(|&(p, a)| (p, primary_exponents(g, p, a)))
        .collect();
    let r = parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors = vec![1u64; r];
    for (p, exps) in &parts {
        // largest exponents go to the last factors
        for (i, &e) in exps.iter().enumerate() {
            factors[r - 1 - i] *= p.pow(e);
        }
    }
    Ok(factors)
}

impl Group {
    /// Number of invariant factors: the largest `F_p`-rank of `{g : g^p = 1}`.
    pub fn abelian_invariant_factor_count(&self) -> Result<usize> {
        abelian_invariants(self).map(|f| f.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, quaternion8};

    fn product(ns: &[usize]) -> Group {
        ns.iter()
            .map(|&n| cyclic(n).unwrap())
            .reduce(|a, b| direct_product(&a, &b).unwrap())
            .unwrap()
    }

    #[test]
    fn invariant_factors() {
        assert_eq!(
            abelian_invariants(&product(&[2, 2, 2])).unwrap(),
            vec![2, 2, 2]
        );
        assert_eq!(abelian_invariants(&product(&[12])).unwrap(), vec![12]);
        assert_eq!(
            abelian_invariants(&product(&[2, 4, 3])).unwrap(),
            vec![2, 12]
        );
        assert_eq!(abelian_invariants(&product(&[6, 10])).unwrap(), vec![2, 30]);
        assert_eq!(
            abelian_invariants(&cyclic(1).unwrap()).unwrap(),
            Vec::<u64>::new()
        );
        assert_eq!(
            product(&[2, 4, 3])
                .abelian_invariant_factor_count()
                .unwrap(),
            2
        );
        assert!(matches!(
            quaternion8().abelian_invariant_factor_count(),
            Err(Error::NotAbelian)
        ));
    }
}
