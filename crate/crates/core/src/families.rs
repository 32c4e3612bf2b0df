//! The minimally faithful families of degree 2 and 3: builders, structural
//! predicates, identification, and corpus-level classification checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, log_exact, pow_mod};
use crate::error::{Error, Result};
use crate::group::{
    abelian_invariants, cyclic, cyclic_semidirect, direct_product, heisenberg27, is_isomorphic,
    quaternion8, semidirect_product, AutomorphismAction, ContentHash, Group, Subgroup,
};
use crate::repdim::is_minimally_faithful;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    #[serde(rename = "deg2.p-p")]
    Deg2PP,
    #[serde(rename = "deg2.Q8")]
    Deg2Q8,
    #[serde(rename = "deg2.p-cyc2m")]
    Deg2PCyc2m,
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "d")]
    D,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "f")]
    F,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "i")]
    I,
    #[serde(rename = "j")]
    J,
    #[serde(rename = "k")]
    K,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 14] = [
        FamilyTag::Deg2PP,
        FamilyTag::Deg2Q8,
        FamilyTag::Deg2PCyc2m,
        FamilyTag::A,
        FamilyTag::B,
        FamilyTag::C,
        FamilyTag::D,
        FamilyTag::E,
        FamilyTag::F,
        FamilyTag::G,
        FamilyTag::H,
        FamilyTag::I,
        FamilyTag::J,
        FamilyTag::K,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Deg2PP => "deg2.p-p",
            FamilyTag::Deg2Q8 => "deg2.Q8",
            FamilyTag::Deg2PCyc2m => "deg2.p-cyc2m",
            FamilyTag::A => "a",
            FamilyTag::B => "b",
            FamilyTag::C => "c",
            FamilyTag::D => "d",
            FamilyTag::E => "e",
            FamilyTag::F => "f",
            FamilyTag::G => "g",
            FamilyTag::H => "h",
            FamilyTag::I => "i",
            FamilyTag::J => "j",
            FamilyTag::K => "k",
        }
    }

    /// The representation dimension shared by every member of the family.
    pub fn degree(self) -> u64 {
        match self {
            FamilyTag::Deg2PP | FamilyTag::Deg2Q8 | FamilyTag::Deg2PCyc2m => 2,
            _ => 3,
        }
    }

    /// Parameter names accepted by [`construct_family`].
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyTag::Deg2PP | FamilyTag::A | FamilyTag::F => &["p"],
            FamilyTag::Deg2PCyc2m | FamilyTag::I => &["p", "m"],
            FamilyTag::B | FamilyTag::C => &["p", "k"],
            FamilyTag::D => &["k"],
            FamilyTag::G => &["k", "p"],
            FamilyTag::H => &["q", "m", "p"],
            FamilyTag::Deg2Q8 | FamilyTag::E | FamilyTag::J | FamilyTag::K => &[],
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown family tag {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    #[serde(default)]
    pub params: BTreeMap<String, u64>,
}

impl FamilySpec {
    pub fn new(tag: FamilyTag) -> Self {
        FamilySpec {
            tag,
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, name: &str, value: u64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn param(&self, name: &str) -> Result<u64> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| self.violation(format!("missing parameter {name}")))
    }

    fn violation(&self, reason: String) -> Error {
        Error::ParameterConstraintViolated {
            tag: self.tag.to_string(),
            reason,
        }
    }

    /// Checks the parameter set and the constraints stated for the family.
    pub fn validate(&self) -> Result<()> {
        let names = self.tag.param_names();
        if let Some(extra) = self.params.keys().find(|k| !names.contains(&k.as_str())) {
            return Err(self.violation(format!("unexpected parameter {extra}")));
        }
        let prime = |name: &str| -> Result<u64> {
            let v = self.param(name)?;
            if !is_prime(v) {
                return Err(self.violation(format!("{name} = {v} is not prime")));
            }
            Ok(v)
        };
        let odd_prime = |name: &str| -> Result<u64> {
            let v = prime(name)?;
            if v == 2 {
                return Err(self.violation(format!("{name} must be odd")));
            }
            Ok(v)
        };
        let at_least = |name: &str, min: u64| -> Result<u64> {
            let v = self.param(name)?;
            if v < min {
                return Err(self.violation(format!("{name} = {v} must be at least {min}")));
            }
            Ok(v)
        };
        match self.tag {
            FamilyTag::Deg2PP | FamilyTag::A => {
                prime("p")?;
            }
            FamilyTag::Deg2PCyc2m | FamilyTag::H => {
                odd_prime("p")?;
                at_least("m", 1)?;
                if self.tag == FamilyTag::H {
                    let q = odd_prime("q")?;
                    if q == self.param("p")? {
                        return Err(self.violation("q and p must be distinct".into()));
                    }
                }
            }
            FamilyTag::B => {
                let p = prime("p")?;
                if p % 3 != 2 {
                    return Err(self.violation(format!("p = {p} is not -1 mod 3")));
                }
                at_least("k", 1)?;
            }
            FamilyTag::C => {
                let p = prime("p")?;
                if p % 3 != 1 {
                    return Err(self.violation(format!("p = {p} is not 1 mod 3")));
                }
                at_least("k", 1)?;
            }
            FamilyTag::D => {
                at_least("k", 2)?;
            }
            FamilyTag::F => {
                odd_prime("p")?;
            }
            FamilyTag::G => {
                at_least("k", 2)?;
                odd_prime("p")?;
            }
            FamilyTag::I => {
                odd_prime("p")?;
                at_least("m", 2)?;
            }
            FamilyTag::Deg2Q8 | FamilyTag::E | FamilyTag::J | FamilyTag::K => {}
        }
        Ok(())
    }

    /// Order, center invariant factors, derived subgroup order and
    /// abelianness that a member of the family must have.
    pub fn expected_shape(&self) -> Result<Shape> {
        self.validate()?;
        let p = || self.param("p");
        let pow = |b: u64, e: u64| -> Result<u64> {
            u32::try_from(e)
                .ok()
                .and_then(|e| b.checked_pow(e))
                .ok_or_else(|| self.violation("parameters overflow".into()))
        };
        let (order, center, derived): (u64, Vec<u64>, u64) = match self.tag {
            FamilyTag::Deg2PP => (p()? * p()?, vec![p()?, p()?], 1),
            FamilyTag::Deg2Q8 => (8, vec![2], 2),
            FamilyTag::Deg2PCyc2m => {
                let two_m = pow(2, self.param("m")?)?;
                (p()? * two_m, vec![two_m / 2], p()?)
            }
            FamilyTag::A => (pow(p()?, 3)?, vec![p()?; 3], 1),
            FamilyTag::B => {
                let t = pow(3, self.param("k")?)?;
                (p()? * p()? * t, vec![t / 3], p()? * p()?)
            }
            FamilyTag::C => {
                let t = pow(3, self.param("k")?)?;
                (p()? * t, vec![t / 3], p()?)
            }
            FamilyTag::D => {
                let t = pow(3, self.param("k")?)?;
                (3 * t, vec![t / 3], 3)
            }
            FamilyTag::E => (27, vec![3], 3),
            FamilyTag::F => (8 * p()? * p()?, vec![2, p()?, p()?], 2),
            FamilyTag::G => {
                let t = pow(2, self.param("k")?)?;
                (2 * t * p()? * p()?, vec![t / 2, p()?, p()?], 2)
            }
            FamilyTag::H => {
                let two_m = pow(2, self.param("m")?)?;
                let q = self.param("q")?;
                (q * two_m * p()? * p()?, vec![two_m / 2, p()?, p()?], q)
            }
            FamilyTag::I => {
                let two_m = pow(2, self.param("m")?)?;
                (2 * p()? * two_m, vec![two_m / 2, 2], p()?)
            }
            FamilyTag::J => (16, vec![2, 2], 2),
            FamilyTag::K => (16, vec![2, 2], 2),
        };
        Ok(Shape {
            order,
            center: invariant_factors(&center),
            derived_order: derived,
            abelian: derived == 1,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)?;
        if !self.params.is_empty() {
            let parts: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, "({})", parts.join(", "))?;
        }
        Ok(())
    }
}

/// The coarse invariants checked against a family's stated structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub order: u64,
    /// Invariant factors of the center.
    pub center: Vec<u64>,
    pub derived_order: u64,
    pub abelian: bool,
}

impl Shape {
    pub fn of(g: &Group) -> Result<Shape> {
        let (z, _) = g.subgroup_group(&g.center())?;
        Ok(Shape {
            order: g.order() as u64,
            center: abelian_invariants(&z)?,
            derived_order: g.derived_subgroup().order() as u64,
            abelian: g.is_abelian(),
        })
    }
}

/// Invariant factors of `C_{n_1} x ... x C_{n_r}`; trivial factors are dropped.
pub fn invariant_factors(cyclic_orders: &[u64]) -> Vec<u64> {
    let mut primary: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &n in cyclic_orders {
        for (p, e) in factorize(n) {
            primary.entry(p).or_default().push(p.pow(e));
        }
    }
    let r = primary.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; r];
    for parts in primary.values_mut() {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in parts.iter().enumerate() {
            factors[r - 1 - i] *= q;
        }
    }
    factors
}

fn elementary(p: usize, rank: usize) -> Result<Group> {
    let c = cyclic(p)?;
    (1..rank).try_fold(c.clone(), |acc, _| direct_product(&acc, &c))
}

fn times_cp_cp(g: &Group, p: u64) -> Result<Group> {
    direct_product(g, &elementary(p as usize, 2)?)
}

/// Least residue of multiplicative order 3 modulo `p`.
fn order_three_unit(p: u64) -> u64 {
    (2..p)
        .find(|&r| pow_mod(r, 3, p) == 1)
        .expect("p = 1 mod 3 has cube roots of unity")
}

/// `(C_p x C_p) ⋊ C_{3^k}` with the generator acting by the companion matrix
/// of `t^2 + t + 1`: `x -> y`, `y -> x^-1 y^-1`.
fn family_b(p: u64, k: u64) -> Result<Group> {
    let p = p as usize;
    let n = elementary(p, 2)?;
    let idx = |a: usize, b: usize| (a * p + b) as u32;
    let (x, y) = (idx(1, 0), idx(0, 1));
    debug_assert_eq!(n.generators(), &[x, y]);
    let action = AutomorphismAction {
        images: vec![vec![y, idx(p - 1, p - 1)]],
    };
    semidirect_product(&n, &cyclic(3usize.pow(k as u32))?, &action)
}

/// Builds the family's canonical member and checks it against
/// [`FamilySpec::expected_shape`].
pub fn construct_family(spec: &FamilySpec) -> Result<Group> {
    let want = spec.expected_shape()?;
    if want.order > crate::group::TABLE_CAP as u64 {
        return Err(Error::CapExceeded {
            order: want.order as usize,
            cap: crate::group::TABLE_CAP,
        });
    }
    let p = || spec.param("p");
    let g = match spec.tag {
        FamilyTag::Deg2PP => elementary(p()? as usize, 2)?,
        FamilyTag::Deg2Q8 => quaternion8(),
        FamilyTag::Deg2PCyc2m => {
            let p = p()?;
            cyclic_semidirect(p as usize, 1 << spec.param("m")?, p - 1)?
        }
        FamilyTag::A => elementary(p()? as usize, 3)?,
        FamilyTag::B => family_b(p()?, spec.param("k")?)?,
        FamilyTag::C => {
            let p = p()?;
            cyclic_semidirect(
                p as usize,
                3usize.pow(spec.param("k")? as u32),
                order_three_unit(p),
            )?
        }
        FamilyTag::D => {
            let t = 3u64.pow(spec.param("k")? as u32);
            cyclic_semidirect(t as usize, 3, 1 + t / 3)?
        }
        FamilyTag::E => heisenberg27(),
        FamilyTag::F => times_cp_cp(&quaternion8(), p()?)?,
        FamilyTag::G => {
            let t = 1u64 << spec.param("k")?;
            times_cp_cp(&cyclic_semidirect(t as usize, 2, 1 + t / 2)?, p()?)?
        }
        FamilyTag::H => {
            let q = spec.param("q")?;
            let base = cyclic_semidirect(q as usize, 1 << spec.param("m")?, q - 1)?;
            times_cp_cp(&base, p()?)?
        }
        FamilyTag::I => {
            let p = p()?;
            let base = cyclic_semidirect(p as usize, 1 << spec.param("m")?, p - 1)?;
            direct_product(&base, &cyclic(2)?)?
        }
        FamilyTag::J => direct_product(&quaternion8(), &cyclic(2)?)?,
        FamilyTag::K => cyclic_semidirect(4, 4, 3)?,
    };
    let got = Shape::of(&g)?;
    if got != want {
        return Err(Error::PostconditionFailed {
            tag: spec.tag.to_string(),
            reason: format!("expected {want:?}, built {got:?}"),
        });
    }
    Ok(g)
}

fn index_two_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    Ok(g.maximal_subgroups()?
        .into_iter()
        .filter(|h| 2 * h.order() == g.order())
        .collect())
}

/// Nonabelian 2-group whose index-2 subgroups are all abelian with exactly
/// two invariant factors.
pub fn is_family_k_shape(g: &Group) -> Result<bool> {
    if log_exact(g.order() as u64, 2).is_none() {
        return Err(Error::NotA2Group(g.order()));
    }
    if g.is_abelian() {
        return Ok(false);
    }
    for h in index_two_subgroups(g)? {
        if !g.is_abelian_subgroup(&h) {
            return Ok(false);
        }
        let (hg, _) = g.subgroup_group(&h)?;
        if hg.abelian_invariant_factor_count()? != 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn has_only_abelian_proper_subgroups(g: &Group) -> Result<bool> {
    Ok(g.maximal_subgroups()?
        .iter()
        .all(|h| g.is_abelian_subgroup(h)))
}

/// `G = Q ⋊ C_{p^a}` with `Q` elementary abelian of order `q^rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalNonabelianShape {
    pub q: u64,
    pub q_rank: u32,
    pub p: u64,
    pub a: u32,
}

/// For a nonabelian group with only abelian proper subgroups that is not of
/// prime-power order, extracts the decomposition `Q ⋊ C_{p^a}` and checks
/// `|Q| = 1 mod p` and `|Z(G)| = p^(a-1)`. Returns `None` when the
/// hypotheses do not hold.
pub fn minimal_nonabelian_shape(g: &Group) -> Result<Option<MinimalNonabelianShape>> {
    if g.is_abelian() || !has_only_abelian_proper_subgroups(g)? {
        return Ok(None);
    }
    let primes = factorize(g.order() as u64);
    if primes.len() < 2 {
        return Ok(None);
    }
    let fail = |msg: String| Err(Error::InvariantViolated(msg));
    if primes.len() != 2 {
        return fail(format!(
            "order {} has more than two prime divisors",
            g.order()
        ));
    }
    let normal_elementary = |r: u64| {
        let s = g.sylow_subgroup(r);
        g.is_normal(&s)
            && s.members()
                .iter()
                .all(|&x| x == 0 || g.element_order(x) as u64 == r)
    };
    let (q, qe, p, a) = match (
        normal_elementary(primes[0].0),
        normal_elementary(primes[1].0),
    ) {
        (true, false) => (primes[0].0, primes[0].1, primes[1].0, primes[1].1),
        (false, true) => (primes[1].0, primes[1].1, primes[0].0, primes[0].1),
        _ => return fail("no unique normal elementary abelian Sylow subgroup".into()),
    };
    if !g.is_cyclic_subgroup(&g.sylow_subgroup(p)) {
        return fail(format!("Sylow {p}-subgroup is not cyclic"));
    }
    if q.pow(qe) % p != 1 {
        return fail(format!("|Q| = {q}^{qe} is not 1 mod {p}"));
    }
    if g.center().order() as u64 != p.pow(a - 1) {
        return fail(format!(
            "center has order {}, expected {p}^{}",
            g.center().order(),
            a - 1
        ));
    }
    Ok(Some(MinimalNonabelianShape {
        q,
        q_rank: qe,
        p,
        a,
    }))
}

/// Candidate parameter sets compatible with the group order.
fn candidates(n: u64) -> Vec<FamilySpec> {
    let f = factorize(n);
    let exp = |p: u64| {
        f.iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e as u64)
    };
    let odd: Vec<(u64, u32)> = f.iter().copied().filter(|&(p, _)| p != 2).collect();
    let s = FamilySpec::new;
    let mut out = Vec::new();
    match f.as_slice() {
        [(p, 2)] => out.push(s(FamilyTag::Deg2PP).with("p", *p)),
        [(p, 3)] => out.push(s(FamilyTag::A).with("p", *p)),
        _ => {}
    }
    if n == 8 {
        out.push(s(FamilyTag::Deg2Q8));
    }
    if n == 27 {
        out.push(s(FamilyTag::E));
    }
    if n == 16 {
        out.push(s(FamilyTag::J));
    }
    if let [(3, e)] = f.as_slice() {
        if *e >= 3 {
            out.push(s(FamilyTag::D).with("k", *e as u64 - 1));
        }
    }
    let two = exp(2);
    let three = exp(3);
    // exactly one further prime besides 2 or 3
    for &(p, e) in &f {
        let rest = n / p.pow(e);
        if p % 3 == 2 && e == 2 && three >= 1 && rest == 3u64.pow(three as u32) {
            out.push(s(FamilyTag::B).with("p", p).with("k", three));
        }
        if p % 3 == 1 && e == 1 && three >= 1 && rest == 3u64.pow(three as u32) {
            out.push(s(FamilyTag::C).with("p", p).with("k", three));
        }
    }
    if two >= 1 && odd.len() == 1 && odd[0].1 == 1 {
        let p = odd[0].0;
        out.push(s(FamilyTag::Deg2PCyc2m).with("p", p).with("m", two));
        if two >= 3 {
            out.push(s(FamilyTag::I).with("p", p).with("m", two - 1));
        }
    }
    if odd.len() == 1 && odd[0].1 == 2 {
        let p = odd[0].0;
        if two == 3 {
            out.push(s(FamilyTag::F).with("p", p));
        }
        if two >= 3 {
            out.push(s(FamilyTag::G).with("k", two - 1).with("p", p));
        }
    }
    if two >= 1 && odd.len() == 2 {
        for (&(q, qe), &(p, pe)) in [(&odd[0], &odd[1]), (&odd[1], &odd[0])] {
            if qe == 1 && pe == 2 {
                out.push(s(FamilyTag::H).with("q", q).with("m", two).with("p", p));
            }
        }
    }
    out
}

/// Which family (if any) `g` belongs to, up to isomorphism. Family (k) is
/// decided by [`is_family_k_shape`]; every other tag by comparison with its
/// canonical member.
pub fn identify_family(g: &Group) -> Result<Option<FamilySpec>> {
    if g.order() > crate::group::TABLE_CAP {
        return Err(Error::CapExceeded {
            order: g.order(),
            cap: crate::group::TABLE_CAP,
        });
    }
    let shape = Shape::of(g)?;
    let mut matches: Vec<FamilySpec> = Vec::new();
    for spec in candidates(g.order() as u64) {
        let Ok(want) = spec.expected_shape() else {
            continue;
        };
        if want != shape {
            continue;
        }
        let h = construct_family(&spec)?;
        if is_isomorphic(g, &h) {
            matches.push(spec);
        }
    }
    if g.order() > 1 && log_exact(g.order() as u64, 2).is_some() && is_family_k_shape(g)? {
        matches.push(FamilySpec::new(FamilyTag::K));
    }
    let mut tags: Vec<FamilyTag> = matches.iter().map(|s| s.tag).collect();
    tags.sort_unstable();
    tags.dedup();
    if tags.len() > 1 {
        return Err(Error::AmbiguousFamily(
            matches.iter().map(|s| s.to_string()).collect(),
        ));
    }
    Ok(matches.into_iter().next())
}

/// Structural invariants attached to inconsistent verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDump {
    pub shape: Shape,
    pub exponent: u64,
    pub order_statistics: Vec<u32>,
    pub derived_series: Vec<usize>,
    pub max_subgroup_rdims: Vec<(usize, u64)>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub group_hash: ContentHash,
    pub order: usize,
    pub rdim: u64,
    /// Minimally faithful of the degree under test.
    pub minimally_faithful: bool,
    /// The identified family, when it has the degree under test.
    pub matched_family: Option<FamilySpec>,
    pub consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dump: Option<InvariantDump>,
}

/// One verdict for a single group against the degree-`degree` classification.
pub fn classify_group(g: &Group, degree: u64) -> Result<ClassificationVerdict> {
    if degree != 2 && degree != 3 {
        return Err(Error::BadParameter(format!(
            "degree must be 2 or 3, got {degree}"
        )));
    }
    let report = is_minimally_faithful(g)?;
    let minimal = report.degree == Some(degree);
    let (identified, note) = match identify_family(g) {
        Ok(f) => (f, None),
        Err(e @ Error::AmbiguousFamily(_)) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let matched = identified.filter(|f| f.tag.degree() == degree);
    let consistent = note.is_none() && minimal == matched.is_some();
    let dump = if consistent {
        None
    } else {
        Some(InvariantDump {
            shape: Shape::of(g)?,
            exponent: g.exponent(),
            order_statistics: g.order_statistics(),
            derived_series: g.derived_series().iter().map(Subgroup::order).collect(),
            max_subgroup_rdims: report.max_subgroup_rdims.clone(),
            note,
        })
    };
    Ok(ClassificationVerdict {
        group_hash: g.content_hash(),
        order: g.order(),
        rdim: report.rdim_g,
        minimally_faithful: minimal,
        matched_family: matched,
        consistent,
        dump,
    })
}

/// Checks "minimally faithful of degree `degree` iff a family of that degree
/// matches" over a corpus. Verdicts follow input order.
pub fn verify_classification(corpus: &[Group], degree: u64) -> Result<Vec<ClassificationVerdict>> {
    corpus
        .par_iter()
        .map(|g| classify_group(g, degree))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::*;

    fn spec(tag: FamilyTag, params: &[(&str, u64)]) -> FamilySpec {
        params
            .iter()
            .fold(FamilySpec::new(tag), |s, &(k, v)| s.with(k, v))
    }

    fn a4() -> Group {
        group_from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap()
    }

    #[test]
    fn invariant_factor_normal_form() {
        assert_eq!(invariant_factors(&[2, 3, 3]), vec![3, 6]);
        assert_eq!(invariant_factors(&[4, 2, 1]), vec![2, 4]);
        assert_eq!(invariant_factors(&[1]), Vec::<u64>::new());
    }

    #[test]
    fn builder_examples() {
        let b = construct_family(&spec(FamilyTag::B, &[("p", 2), ("k", 1)])).unwrap();
        assert_eq!(b.order(), 12);
        assert!(is_isomorphic(&b, &a4()));
        let c = construct_family(&spec(FamilyTag::C, &[("p", 7), ("k", 1)])).unwrap();
        assert_eq!(c.order(), 21);
        assert!(c.center().is_trivial());
        let d = construct_family(&spec(FamilyTag::D, &[("k", 2)])).unwrap();
        assert_eq!((d.order(), d.center().order(), d.exponent()), (27, 3, 9));
        let i = construct_family(&spec(FamilyTag::I, &[("p", 3), ("m", 2)])).unwrap();
        assert_eq!(i.order(), 24);
        let (z, _) = i.subgroup_group(&i.center()).unwrap();
        assert_eq!(abelian_invariants(&z).unwrap(), vec![2, 2]);
    }

    #[test]
    fn parameter_violations() {
        let err = construct_family(&spec(FamilyTag::B, &[("p", 7), ("k", 1)])).unwrap_err();
        assert!(matches!(err, Error::ParameterConstraintViolated { .. }));
        let err =
            construct_family(&spec(FamilyTag::H, &[("q", 3), ("m", 1), ("p", 3)])).unwrap_err();
        assert!(matches!(err, Error::ParameterConstraintViolated { .. }));
        let err = construct_family(&spec(FamilyTag::D, &[("k", 1)])).unwrap_err();
        assert!(matches!(err, Error::ParameterConstraintViolated { .. }));
        let err = construct_family(&spec(FamilyTag::E, &[("p", 3)])).unwrap_err();
        assert!(matches!(err, Error::ParameterConstraintViolated { .. }));
    }

    #[test]
    fn tag_round_trip() {
        for t in FamilyTag::ALL {
            assert_eq!(t.as_str().parse::<FamilyTag>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(json, format!("\"{}\"", t.as_str()));
        }
    }

    #[test]
    fn k_shape() {
        assert!(is_family_k_shape(&cyclic_semidirect(4, 4, 3).unwrap()).unwrap());
        assert!(!is_family_k_shape(&quaternion8()).unwrap());
        assert!(!is_family_k_shape(&dihedral(8).unwrap()).unwrap());
        assert!(matches!(
            is_family_k_shape(&a4()),
            Err(Error::NotA2Group(12))
        ));
    }

    #[test]
    fn only_abelian_proper_subgroups() {
        let s4 = group_from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap();
        assert!(has_only_abelian_proper_subgroups(&a4()).unwrap());
        assert!(!has_only_abelian_proper_subgroups(&s4).unwrap());
        assert!(has_only_abelian_proper_subgroups(&quaternion8()).unwrap());
        assert_eq!(
            minimal_nonabelian_shape(&a4()).unwrap(),
            Some(MinimalNonabelianShape {
                q: 2,
                q_rank: 2,
                p: 3,
                a: 1
            })
        );
        assert_eq!(minimal_nonabelian_shape(&quaternion8()).unwrap(), None);
    }

    #[test]
    fn identification() {
        let id = |g: &Group| identify_family(g).unwrap();
        assert_eq!(id(&a4()), Some(spec(FamilyTag::B, &[("p", 2), ("k", 1)])));
        assert_eq!(
            id(&cyclic_semidirect(7, 3, 2).unwrap()),
            Some(spec(FamilyTag::C, &[("p", 7), ("k", 1)]))
        );
        let c5 = cyclic(5).unwrap();
        let c125 = direct_product(&direct_product(&c5, &c5).unwrap(), &c5).unwrap();
        assert_eq!(id(&c125), Some(spec(FamilyTag::A, &[("p", 5)])));
        assert_eq!(id(&dihedral(8).unwrap()), None);
        assert_eq!(id(&quaternion8()), Some(FamilySpec::new(FamilyTag::Deg2Q8)));
        assert_eq!(
            id(&dihedral(6).unwrap()),
            Some(spec(FamilyTag::Deg2PCyc2m, &[("p", 3), ("m", 1)]))
        );
    }

    #[test]
    fn order_27_classification() {
        let c3 = cyclic(3).unwrap();
        let c9 = cyclic(9).unwrap();
        let corpus = vec![
            cyclic(27).unwrap(),
            direct_product(&c9, &c3).unwrap(),
            direct_product(&direct_product(&c3, &c3).unwrap(), &c3).unwrap(),
            heisenberg27(),
            construct_family(&spec(FamilyTag::D, &[("k", 2)])).unwrap(),
        ];
        let v = verify_classification(&corpus, 3).unwrap();
        assert!(v.iter().all(|x| x.consistent));
        let minimal: Vec<bool> = v.iter().map(|x| x.minimally_faithful).collect();
        assert_eq!(minimal, vec![false, false, true, true, true]);
    }
}
