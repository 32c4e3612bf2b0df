//! Exact arithmetic in cyclotomic fields `Q(ζ_e)`.
//!
//! An element is stored in the power basis `1, ζ, ..., ζ^{φ(e)-1}` of
//! `Q[x] / Φ_e(x)` as integer numerators over one positive common
//! denominator, fully reduced. That representation is unique, so derived
//! equality and hashing are value equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::gcd;

/// Precomputed data for one conductor.
#[derive(Debug)]
pub struct CycloField {
    e: u32,
    dim: usize,
    /// `powers[k]` is `ζ^k` reduced to the power basis, for `0 <= k < e`.
    powers: Vec<Vec<i128>>,
}

impl CycloField {
    fn new(e: u32) -> Self {
        let phi = cyclotomic_polynomial(e as u64);
        let dim = phi.len() - 1;
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![0i128; dim];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Φ_e
            let top = cur[dim - 1];
            for i in (1..dim).rev() {
                cur[i] = cur[i - 1] - top * phi[i];
            }
            cur[0] = -top * phi[0];
        }
        CycloField { e, dim, powers }
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    /// `φ(e)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.dim
    }

    /// Reduces an integer vector indexed by exponents mod `e`.
    pub fn reduce_exponents(&self, weights: &[i128]) -> Vec<i128> {
        let mut out = vec![0i128; self.dim];
        for (k, &w) in weights.iter().enumerate() {
            if w != 0 {
                for (o, &p) in out.iter_mut().zip(&self.powers[k % self.e as usize]) {
                    *o += w * p;
                }
            }
        }
        out
    }
}

/// Integer coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i128> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn poly_div_exact(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db];
    let mut q = vec![0i128; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db] / lead;
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            rem[i + j] -= c * bj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Shared field for conductor `e`.
pub fn field(e: u32) -> Arc<CycloField> {
    static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
    let e = e.max(1);
    let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = map.lock().unwrap().get(&e) {
        return f.clone();
    }
    // built outside the lock; a racing builder produces an identical field
    let f = Arc::new(CycloField::new(e));
    map.lock().unwrap().entry(e).or_insert(f).clone()
}

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    num: Vec<i128>,
    den: i128,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.e == other.field.e && self.den == other.den && self.num == other.num
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.e.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl Cyclotomic {
    fn from_parts(field: Arc<CycloField>, num: Vec<i128>, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let mut x = Cyclotomic { field, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            self.num.iter_mut().for_each(|c| *c = -*c);
        }
        let g = self.num.iter().fold(self.den, |acc, &c| acc.gcd(&c));
        if g > 1 {
            self.den /= g;
            self.num.iter_mut().for_each(|c| *c /= g);
        }
    }

    pub fn zero(e: u32) -> Self {
        let f = field(e);
        let dim = f.dim;
        Cyclotomic {
            field: f,
            num: vec![0; dim],
            den: 1,
        }
    }

    pub fn from_int(e: u32, n: i128) -> Self {
        let mut x = Self::zero(e);
        x.num[0] = n;
        x
    }

    pub fn one(e: u32) -> Self {
        Self::from_int(e, 1)
    }

    pub fn from_rational(e: u32, num: i128, den: i128) -> Self {
        let f = field(e);
        let mut v = vec![0; f.dim];
        v[0] = num;
        Self::from_parts(f, v, den)
    }

    /// `ζ_e^k`
    pub fn zeta(e: u32, k: i64) -> Self {
        let f = field(e);
        let k = k.rem_euclid(f.e as i64) as usize;
        let num = f.powers[k].clone();
        Cyclotomic {
            field: f,
            num,
            den: 1,
        }
    }

    /// `Σ_k weights[k] ζ_e^k` for integer weights indexed by exponent.
    pub fn from_exponent_weights(e: u32, weights: &[i128]) -> Self {
        let f = field(e);
        let num = f.reduce_exponents(weights);
        Cyclotomic {
            field: f,
            num,
            den: 1,
        }
    }

    /// Sum of the roots of unity `ζ_e^k` for each `k` in `exps`.
    pub fn sum_of_roots(e: u32, exps: &[u32]) -> Self {
        let mut w = vec![0i128; e.max(1) as usize];
        for &k in exps {
            w[(k % e.max(1)) as usize] += 1;
        }
        Self::from_exponent_weights(e, &w)
    }

    /// Power-basis coefficients `(numerators, denominator)`.
    pub fn from_coeffs(e: u32, num: Vec<i128>, den: i128) -> Self {
        let f = field(e);
        let mut w = vec![0i128; f.e as usize];
        for (k, c) in num.into_iter().enumerate() {
            w[k % f.e as usize] += c;
        }
        let v = f.reduce_exponents(&w);
        Self::from_parts(f, v, den)
    }

    pub fn conductor(&self) -> u32 {
        self.field.e
    }

    pub fn numerators(&self) -> &[i128] {
        &self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    /// Reduced rational coefficients in the power basis.
    pub fn coeffs(&self) -> Vec<(i128, i128)> {
        self.num
            .iter()
            .map(|&c| {
                let g = gcd(c, self.den).max(1);
                (c / g, self.den / g)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|&c| c == 0)
    }

    pub fn to_rational(&self) -> Option<(i128, i128)> {
        self.is_rational().then(|| self.coeffs()[0])
    }

    pub fn to_integer(&self) -> Option<i128> {
        match self.to_rational()? {
            (n, 1) => Some(n),
            _ => None,
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.field.e, other.field.e,
            "cyclotomics of different conductors; embed first"
        );
    }

    pub fn scale(&self, num: i128, den: i128) -> Self {
        let v = self.num.iter().map(|&c| c * num).collect();
        Self::from_parts(self.field.clone(), v, self.den * den)
    }

    /// Galois automorphism `ζ -> ζ^k`, `gcd(k, e) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let e = self.field.e as i64;
        assert_eq!(gcd(k.rem_euclid(e), e), 1, "Galois exponent must be a unit");
        let mut w = vec![0i128; e as usize];
        for (i, &c) in self.num.iter().enumerate() {
            if c != 0 {
                w[(i as i64 * k).rem_euclid(e) as usize] += c;
            }
        }
        Self::from_parts(
            self.field.clone(),
            self.field.reduce_exponents(&w),
            self.den,
        )
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse, `None` for zero. Solves `x * y = 1` over `Q`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let f = &self.field;
        let n = f.dim;
        // column j of the multiplication-by-self matrix is self * ζ^j
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n + 1]; n];
        for j in 0..n {
            let col = self.mul_ref(&Cyclotomic::zeta(f.e, j as i64));
            for i in 0..n {
                m[i][j] = BigRational::new(BigInt::from(col.num[i]), BigInt::from(col.den));
            }
        }
        m[0][n] = BigRational::one();
        let sol = solve_rational(m, n)?;
        Some(from_big_rationals(f.clone(), &sol))
    }

    /// The same value in `Q(ζ_big)`, `e | big`.
    pub fn embed(&self, big: u32) -> Self {
        let e = self.field.e;
        assert_eq!(big % e, 0, "conductor {e} does not divide {big}");
        let step = big / e;
        let mut w = vec![0i128; big as usize];
        for (i, &c) in self.num.iter().enumerate() {
            w[i * step as usize] += c;
        }
        let f = field(big);
        Self::from_parts(f.clone(), f.reduce_exponents(&w), self.den)
    }

    /// The same value in `Q(ζ_small)` when it lies in that subfield
    /// (`small | e`), otherwise `None`.
    pub fn restrict(&self, small: u32) -> Option<Self> {
        let e = self.field.e;
        assert_eq!(e % small, 0, "conductor {small} does not divide {e}");
        if small == e {
            return Some(self.clone());
        }
        let sf = field(small);
        let (n, m) = (self.field.dim, sf.dim);
        let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); m + 1]; n];
        for j in 0..m {
            let img = Cyclotomic::zeta(small, j as i64).embed(e);
            for i in 0..n {
                a[i][j] = BigRational::from_integer(BigInt::from(img.num[i]));
            }
        }
        for i in 0..n {
            a[i][m] = BigRational::new(BigInt::from(self.num[i]), BigInt::from(self.den));
        }
        let sol = solve_rational(a, m)?;
        let y = from_big_rationals(sf, &sol);
        (y.embed(e) == *self).then_some(y)
    }

    /// Smallest conductor whose field contains this value.
    pub fn minimal_conductor(&self) -> u32 {
        let e = self.field.e;
        crate::arith::divisors(e as u64)
            .into_iter()
            .map(|d| d as u32)
            .find(|&d| self.restrict(d).is_some())
            .unwrap_or(e)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.check_same(other);
        let l = self.den.lcm(&other.den);
        let (a, b) = (l / self.den, l / other.den);
        let v = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(&x, &y)| x * a + y * b)
            .collect();
        Self::from_parts(self.field.clone(), v, l)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.check_same(other);
        let f = &self.field;
        let mut w = vec![0i128; f.e as usize];
        for (i, &x) in self.num.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.num.iter().enumerate() {
                if y != 0 {
                    w[(i + j) % f.e as usize] += x * y;
                }
            }
        }
        Self::from_parts(f.clone(), f.reduce_exponents(&w), self.den * other.den)
    }
}

fn from_big_rationals(f: Arc<CycloField>, sol: &[BigRational]) -> Cyclotomic {
    let den = sol.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let num = sol
        .iter()
        .map(|r| {
            (r.numer() * (&den / r.denom()))
                .to_i128()
                .expect("coefficient fits in i128")
        })
        .collect();
    Cyclotomic::from_parts(f, num, den.to_i128().expect("denominator fits in i128"))
}

/// Solves an `rows x (cols + 1)` augmented system with a unique solution in
/// the first `cols` unknowns; `None` when inconsistent.
fn solve_rational(mut a: Vec<Vec<BigRational>>, cols: usize) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in c..=cols {
                    let t = &a[r][j] * &factor;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) || pivots.len() != cols {
        return None;
    }
    Some((0..cols).map(|i| a[i][cols].clone()).collect())
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_ref(rhs)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self.add_ref(&rhs)
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_ref(rhs);
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|&c| -c).collect(),
            den: self.den,
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_ref(&-rhs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_ref(rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        self.mul_ref(&rhs)
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the reduced rational coefficients; not a field order.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field.e.cmp(&other.field.e).then_with(|| {
            for (&a, &b) in self.num.iter().zip(&other.num) {
                let o = (BigInt::from(a) * other.den).cmp(&(BigInt::from(b) * self.den));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, (n, d)) in self.coeffs().into_iter().enumerate() {
            if n == 0 {
                continue;
            }
            let c = if d == 1 {
                format!("{n}")
            } else {
                format!("{n}/{d}")
            };
            terms.push(match i {
                0 => c,
                1 => format!("{c}*z{}", self.field.e),
                _ => format!("{c}*z{}^{i}", self.field.e),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    conductor: u32,
    coeffs: Vec<(String, String)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            conductor: self.field.e,
            coeffs: self
                .coeffs()
                .into_iter()
                .map(|(n, d)| (n.to_string(), d.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = Wire::deserialize(d)?;
        if w.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        if w.coeffs.len() > w.conductor as usize {
            return Err(D::Error::custom("more coefficients than the conductor"));
        }
        let mut acc = Cyclotomic::zero(w.conductor);
        for (k, (n, dd)) in w.coeffs.iter().enumerate() {
            let n: i128 = n.parse().map_err(D::Error::custom)?;
            let dd: i128 = dd.parse().map_err(D::Error::custom)?;
            if dd <= 0 {
                return Err(D::Error::custom("denominator must be positive"));
            }
            if n != 0 {
                acc += &Cyclotomic::zeta(w.conductor, k as i64).scale(n, dd);
            }
        }
        Ok(acc)
    }
}

/// Convenience for tests and callers holding plain integers.
pub fn int(e: u32, n: i64) -> Cyclotomic {
    Cyclotomic::from_int(e, n as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // first polynomial with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_polynomial(105).contains(&-2));
        for e in 1..60 {
            assert_eq!(field(e).degree() as u64, crate::arith::totient(e as u64));
        }
    }

    #[test]
    fn roots_of_unity() {
        let w = Cyclotomic::zeta(3, 1);
        let sum = &(&Cyclotomic::one(3) + &w) + &(&w * &w);
        assert!(sum.is_zero());
        assert_eq!(Cyclotomic::zeta(4, 2), int(4, -1));
        assert_eq!(Cyclotomic::zeta(8, 1).conj(), Cyclotomic::zeta(8, 7));
        // i = ζ_8^2 and sqrt(2) = ζ_8 + ζ_8^7
        let s = &Cyclotomic::zeta(8, 1) + &Cyclotomic::zeta(8, 7);
        assert_eq!(&s * &s, int(8, 2));
        assert!(s.restrict(4).is_none());
        assert_eq!(
            Cyclotomic::zeta(8, 2).restrict(4),
            Some(Cyclotomic::zeta(4, 1))
        );
    }

    #[test]
    fn inverse_and_embedding() {
        let x = &int(5, 2) + &Cyclotomic::zeta(5, 1);
        let y = x.inverse().unwrap();
        assert_eq!(&x * &y, Cyclotomic::one(5));
        assert!(Cyclotomic::zero(5).inverse().is_none());
        let z = Cyclotomic::zeta(6, 1);
        assert_eq!(z.embed(12).restrict(6), Some(z.clone()));
        assert_eq!(z.embed(12), Cyclotomic::zeta(12, 2));
        assert_eq!(Cyclotomic::zeta(6, 2).minimal_conductor(), 3);
    }

    #[test]
    fn wire_round_trip() {
        let x = &Cyclotomic::zeta(12, 5).scale(3, 7) + &int(12, 1);
        let s = serde_json::to_string(&x).unwrap();
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        // the wire format also accepts non-reduced coefficient lists
        let raw = r#"{"conductor":3,"coeffs":[["1","1"],["1","1"],["1","1"]]}"#;
        assert!(serde_json::from_str::<Cyclotomic>(raw).unwrap().is_zero());
    }
}
