//! Character values computed modulo a prime `q ≡ 1 (mod e)` from the
//! class multiplication coefficients, then lifted to sums of `e`-th roots
//! of unity.
//!
//! Rows are returned as exponent multisets: `rows[χ][j]` lists the `k` with
//! `χ(g_j) = Σ ζ_e^k`.

use std::collections::HashSet;

use super::ConjugacyPartition;
use crate::arith::{is_prime, pow_mod, prime_divisors};
use crate::cyclotomic::field;
use crate::error::{Error, Result};
use crate::group::Group;

type Rows = Vec<Vec<Vec<u32>>>;

fn fail(msg: impl Into<String>) -> Error {
    Error::InternalVerificationFailed(msg.into())
}

/// Smallest prime `q ≡ 1 (mod e)` with `q > 2 sqrt(order)`.
pub(crate) fn dixon_prime(e: u64, order: u64) -> u64 {
    let mut q = e + 1;
    while !(is_prime(q) && q * q > 4 * order) {
        q += e;
    }
    q
}

fn primitive_root(q: u64) -> u64 {
    let ps = prime_divisors(q - 1);
    (2..q)
        .find(|&g| ps.iter().all(|&p| pow_mod(g, (q - 1) / p, q) != 1))
        .expect("prime fields have primitive roots")
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

pub(crate) fn dixon_characters(g: &Group, part: &ConjugacyPartition) -> Result<Rows> {
    let k = part.len();
    let n = g.order() as u64;
    let e = part.exponent as u64;
    let q = dixon_prime(e, n);

    // a[i][j][l] = #{(x, y) : x in C_i, y in C_j, xy = z_l}
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (l, &z) in part.representatives.iter().enumerate() {
        for x in g.elements() {
            let y = g.mul(g.inv(x), z);
            a[part.class(x)][part.class(y)][l] += 1;
        }
    }
    // A_i acts on column vectors: (A_i)[j][l] = a[i][j][l]
    let mats: Vec<Vec<Vec<u64>>> = a
        .into_iter()
        .map(|m| {
            m.into_iter()
                .map(|r| r.into_iter().map(|x| x % q).collect())
                .collect()
        })
        .collect();

    let vectors = common_eigenvectors(&mats, k, q)?;
    if vectors.len() != k {
        return Err(fail(format!(
            "{} eigenvectors for {k} classes",
            vectors.len()
        )));
    }

    let z = pow_mod(primitive_root(q), (q - 1) / e, q);
    let sizes: Vec<u64> = part.sizes().map(|s| s as u64).collect();
    let max_deg = (n as f64).sqrt() as u64 + 1;

    let power_classes: Vec<Vec<usize>> = part
        .representatives
        .iter()
        .map(|&r| {
            let o = g.element_order(r);
            let mut x = 0u32;
            (0..o)
                .map(|_| {
                    let c = part.class(x);
                    x = g.mul(x, r);
                    c
                })
                .collect()
        })
        .collect();

    let mut rows = Vec::with_capacity(k);
    for w in vectors {
        // Σ_j ω_j ω_{j'} / |C_j| = |G| / χ(1)^2
        let s = (0..k).fold(0u64, |acc, j| {
            (acc + w[j] * w[part.inverse_class[j]] % q * inv_mod(sizes[j] % q, q)) % q
        });
        if s == 0 {
            return Err(fail("degenerate central character"));
        }
        let d2 = n % q * inv_mod(s, q) % q;
        let d = (1..=max_deg)
            .find(|&d| d * d % q == d2 && n % d == 0)
            .ok_or_else(|| fail("no admissible degree"))?;
        let chi: Vec<u64> = (0..k)
            .map(|j| w[j] * d % q * inv_mod(sizes[j] % q, q) % q)
            .collect();
        let mut row = Vec::with_capacity(k);
        for pc in &power_classes {
            let o = pc.len() as u64;
            let step = e / o;
            let zo = pow_mod(z, step, q);
            let inv_o = inv_mod(o % q, q);
            let mut exps = Vec::new();
            for s in 0..o {
                let zs = inv_mod(pow_mod(zo, s, q), q);
                let mut acc = 0u64;
                let mut zt = 1u64;
                for &c in pc {
                    acc = (acc + chi[c] * zt) % q;
                    zt = zt * zs % q;
                }
                let m = acc * inv_o % q;
                if m > d {
                    return Err(fail(format!("root multiplicity {m} exceeds degree {d}")));
                }
                exps.extend(std::iter::repeat((s * step) as u32).take(m as usize));
            }
            if exps.len() as u64 != d {
                return Err(fail("root multiplicities do not sum to the degree"));
            }
            row.push(exps);
        }
        rows.push(row);
    }
    verify_rows(part, &rows)?;
    Ok(rows)
}

/// Splits `F_q^k` into common eigenlines of the class matrices. Each line is
/// returned with its first coordinate scaled to 1.
fn common_eigenvectors(mats: &[Vec<Vec<u64>>], k: usize, q: u64) -> Result<Vec<Vec<u64>>> {
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect()];
    for m in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let pivots: Vec<usize> = basis
                .iter()
                .map(|b| b.iter().position(|&x| x != 0).unwrap())
                .collect();
            let dim = basis.len();
            // r[s][t] = (M b_t)[pivot_s]
            let images: Vec<Vec<u64>> = basis.iter().map(|b| mat_vec(m, b, q)).collect();
            let r: Vec<Vec<u64>> = (0..dim)
                .map(|s| (0..dim).map(|t| images[t][pivots[s]]).collect())
                .collect();
            let roots = poly_roots(&charpoly(&r, q), q);
            if roots.len() == 1 {
                next.push(basis);
                continue;
            }
            let mut total = 0;
            for lambda in roots {
                let mut shifted = r.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = (row[i] + q - lambda) % q;
                }
                let null = nullspace(shifted, q);
                total += null.len();
                let vecs: Vec<Vec<u64>> = null
                    .iter()
                    .map(|x| {
                        let mut v = vec![0u64; k];
                        for (t, &c) in x.iter().enumerate() {
                            for (vi, &bi) in v.iter_mut().zip(&basis[t]) {
                                *vi = (*vi + c * bi) % q;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(rref(vecs, q));
            }
            if total != dim {
                return Err(fail("class matrix restriction is not diagonalizable"));
            }
        }
        spaces = next;
    }
    spaces
        .into_iter()
        .map(|s| {
            if s.len() != 1 {
                return Err(fail("class matrices do not separate the characters"));
            }
            let v = &s[0];
            if v[0] == 0 {
                return Err(fail("eigenvector vanishes at the identity class"));
            }
            let inv = inv_mod(v[0], q);
            Ok(v.iter().map(|&x| x * inv % q).collect())
        })
        .collect()
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], q: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + a * b) % q)
        })
        .collect()
}

/// Reduced row echelon basis of the span of `vecs`.
fn rref(mut vecs: Vec<Vec<u64>>, q: u64) -> Vec<Vec<u64>> {
    let cols = vecs.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..vecs.len()).find(|&i| vecs[i][c] != 0) else {
            continue;
        };
        vecs.swap(r, p);
        let inv = inv_mod(vecs[r][c], q);
        vecs[r].iter_mut().for_each(|x| *x = *x * inv % q);
        for i in 0..vecs.len() {
            if i != r && vecs[i][c] != 0 {
                let f = vecs[i][c];
                for j in 0..cols {
                    vecs[i][j] = (vecs[i][j] + q - f * vecs[r][j] % q) % q;
                }
            }
        }
        r += 1;
    }
    vecs.truncate(r);
    vecs
}

/// Basis of `{x : m x = 0}`.
fn nullspace(m: Vec<Vec<u64>>, q: u64) -> Vec<Vec<u64>> {
    let n = m.first().map_or(0, Vec::len);
    let red = rref(m, q);
    let pivots: Vec<usize> = red
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).unwrap())
        .collect();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![0u64; n];
            x[free] = 1;
            for (row, &p) in red.iter().zip(&pivots) {
                x[p] = (q - row[free]) % q;
            }
            x
        })
        .collect()
}

/// Characteristic polynomial (constant term first) via Hessenberg reduction.
pub(crate) fn charpoly(a: &[Vec<u64>], q: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], q);
        for r in j + 2..n {
            let u = h[r][j] * inv % q;
            if u == 0 {
                continue;
            }
            for c in 0..n {
                h[r][c] = (h[r][c] + q - u * h[j + 1][c] % q) % q;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + u * row[r]) % q;
            }
        }
    }
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        // (x - h[m-1][m-1]) p[m-1]
        let prev = &p[m - 1];
        let mut cur = vec![0u64; m + 1];
        for (i, &c) in prev.iter().enumerate() {
            cur[i + 1] = (cur[i + 1] + c) % q;
            cur[i] = (cur[i] + q - c * h[m - 1][m - 1] % q) % q;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = t * h[m - i][m - i - 1] % q;
            let coef = t * h[m - i - 1][m - 1] % q;
            if coef == 0 {
                continue;
            }
            for (idx, &c) in p[m - i - 1].iter().enumerate() {
                cur[idx] = (cur[idx] + q - coef * c % q) % q;
            }
        }
        p.push(cur);
    }
    p.pop().unwrap()
}

fn poly_roots(p: &[u64], q: u64) -> Vec<u64> {
    (0..q)
        .filter(|&x| p.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % q) == 0)
        .collect()
}

/// Exact first orthogonality on exponent multisets:
/// `Σ_j |C_j| χ(g_j) conj(ψ(g_j)) = |G| δ`, reduced modulo `Φ_e`.
pub(crate) fn verify_rows(part: &ConjugacyPartition, rows: &Rows) -> Result<()> {
    let e = part.exponent as usize;
    let f = field(part.exponent);
    if rows.len() != part.len() {
        return Err(fail("character count differs from class count"));
    }
    let degree_squares: usize = rows.iter().map(|r| r[0].len() * r[0].len()).sum();
    if degree_squares != part.order {
        return Err(fail(format!(
            "degree squares sum to {degree_squares}, not {}",
            part.order
        )));
    }
    let sizes: Vec<i128> = part.sizes().map(|s| s as i128).collect();
    for a in 0..rows.len() {
        for b in a..rows.len() {
            let mut acc = vec![0i128; e];
            for (j, &sz) in sizes.iter().enumerate() {
                for &x in &rows[a][j] {
                    for &y in &rows[b][j] {
                        acc[(x as usize + e - y as usize) % e] += sz;
                    }
                }
            }
            let red = f.reduce_exponents(&acc);
            let expect = if a == b { part.order as i128 } else { 0 };
            if red[0] != expect || red[1..].iter().any(|&c| c != 0) {
                return Err(fail(format!("rows {a} and {b} are not orthogonal")));
            }
        }
    }
    Ok(())
}

/// Linear characters of an abelian group, extended one generator at a time:
/// if `g^m` is the first power of `g` inside the current subgroup `H`, each
/// character of `H` has `m` extensions, one per `m`-th root of `χ(g^m)`.
pub(crate) fn abelian_characters(g: &Group, part: &ConjugacyPartition) -> Result<Rows> {
    let n = g.order();
    let e = part.exponent;
    let mut members = vec![0u32];
    let mut inside = vec![false; n];
    inside[0] = true;
    // chars[c][x] = exponent of χ_c(x), u32::MAX outside H
    let mut chars: Vec<Vec<u32>> = vec![{
        let mut v = vec![u32::MAX; n];
        v[0] = 0;
        v
    }];
    let mut gens = Vec::new();
    for x in g.elements() {
        if members.len() == n {
            break;
        }
        if inside[x as usize] {
            continue;
        }
        gens.push(x);
        let mut m = 1u32;
        let mut p = x;
        while !inside[p as usize] {
            p = g.mul(p, x);
            m += 1;
        }
        let mut new_members = Vec::with_capacity(members.len() * m as usize);
        let mut gs = 0u32;
        for _ in 0..m {
            for &h in &members {
                new_members.push(g.mul(h, gs));
            }
            gs = g.mul(gs, x);
        }
        let mut next = Vec::with_capacity(chars.len() * m as usize);
        for chi in &chars {
            let b = chi[p as usize];
            if b % m != 0 {
                return Err(fail(
                    "power of a generator has no root in the character group",
                ));
            }
            for t in 0..m {
                let a = (b / m + t * (e / m)) % e;
                let mut ext = chi.clone();
                let mut gs = 0u32;
                for s in 0..m {
                    for &h in &members {
                        ext[g.mul(h, gs) as usize] = (chi[h as usize] + s * a) % e;
                    }
                    gs = g.mul(gs, x);
                }
                next.push(ext);
            }
        }
        chars = next;
        members = new_members;
        for &y in &members {
            inside[y as usize] = true;
        }
    }
    // homomorphism on generators, distinctness, and vanishing sums of the
    // nontrivial characters together give orthogonality
    let f = field(e);
    let mut seen = HashSet::new();
    for chi in &chars {
        for y in g.elements() {
            for &s in &gens {
                if chi[g.mul(y, s) as usize] != (chi[y as usize] + chi[s as usize]) % e {
                    return Err(fail("extended character is not a homomorphism"));
                }
            }
        }
        if !seen.insert(chi.clone()) {
            return Err(fail("duplicate linear character"));
        }
        let mut w = vec![0i128; e as usize];
        for &v in chi {
            w[v as usize] += 1;
        }
        let red = f.reduce_exponents(&w);
        let trivial = chi.iter().all(|&v| v == 0);
        let expect = if trivial { n as i128 } else { 0 };
        if red[0] != expect || red[1..].iter().any(|&c| c != 0) {
            return Err(fail("linear character sum does not vanish"));
        }
    }
    if chars.len() != part.len() {
        return Err(fail("character count differs from class count"));
    }
    // classes of an abelian group are singletons in element order
    Ok(chars
        .into_iter()
        .map(|chi| {
            part.representatives
                .iter()
                .map(|&r| vec![chi[r as usize]])
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det_mod(mut a: Vec<Vec<u64>>, q: u64) -> u64 {
        let n = a.len();
        let mut det = 1u64;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| a[i][c] != 0) else {
                return 0;
            };
            if p != c {
                a.swap(p, c);
                det = (q - det) % q;
            }
            det = det * a[c][c] % q;
            let inv = inv_mod(a[c][c], q);
            for r in c + 1..n {
                let f = a[r][c] * inv % q;
                for j in c..n {
                    a[r][j] = (a[r][j] + q - f * a[c][j] % q) % q;
                }
            }
        }
        det
    }

    #[test]
    fn charpoly_matches_determinant() {
        let q = 101;
        let a = vec![
            vec![3, 1, 4, 1],
            vec![5, 9, 2, 6],
            vec![5, 3, 5, 8],
            vec![9, 7, 9, 3],
        ];
        let p = charpoly(&a, q);
        assert_eq!(p.len(), 5);
        assert_eq!(p[4], 1);
        for x in [0u64, 1, 7, 50] {
            let mut m = a.clone();
            for (i, row) in m.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    *v = ((if i == j { x } else { 0 }) + q - *v) % q;
                }
            }
            let eval = p.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % q);
            assert_eq!(eval, det_mod(m, q));
        }
    }

    #[test]
    fn prime_choice() {
        // e = 4, |G| = 8: need q ≡ 1 mod 4 and q^2 > 32
        assert_eq!(dixon_prime(4, 8), 13);
        assert_eq!(dixon_prime(6, 6), 7);
    }

    #[test]
    fn abelian_path_agrees_with_dixon() {
        use crate::chartab::conjugacy_partition;
        use crate::cyclotomic::Cyclotomic;
        use crate::group::{cyclic, direct_product};

        let groups = [
            cyclic(12).unwrap(),
            direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap(),
            direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap(),
        ];
        for g in &groups {
            let part = conjugacy_partition(g);
            let values = |rows: Rows| {
                let mut v: Vec<Vec<Cyclotomic>> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| Cyclotomic::sum_of_roots(part.exponent, x))
                            .collect()
                    })
                    .collect();
                v.sort();
                v
            };
            let a = values(abelian_characters(g, &part).unwrap());
            let d = values(dixon_characters(g, &part).unwrap());
            assert_eq!(a, d);
        }
    }
}
