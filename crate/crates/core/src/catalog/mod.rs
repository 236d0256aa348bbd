//! The identity catalog: every generating-function identity the engine
//! certifies, registered as an LHS/RHS builder pair over a shared truncation
//! spec, together with the verifier that compares both sides coefficient by
//! coefficient.
//!
//! Each entry builds its left side by the umbral route (moment evaluation of
//! a symbolic exponential, a noncommutative q-exponential, or a packed family
//! of scalar moment sums) and its right side from the closed form, so a pass
//! certifies the evaluation machinery and not just the series algebra.
//! Identities quantified over parameters (an index n, a degree k, a choice of
//! test polynomial) are packed into a single series comparison: row (k, n)
//! lives on the monomial for that parameter choice, which keeps mismatch
//! localization uniform across the whole catalog.
//!
//! Entries are pure and independent; [`verify_all`] runs them in parallel and
//! aggregates reports in registry order.

mod bell;
mod bernoulli;
mod cd;
mod charlier;
mod hermite;
mod pairs;
mod qseries;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use num::Zero;
use rayon::prelude::*;

use crate::poly::Poly;
use crate::rat::Rat;
use crate::series::{Series, VarSpec};

/// Per-variable truncation caps, keyed by series-variable name.
pub type CapMap = BTreeMap<String, u32>;

type Builder = Box<dyn Fn(&CapMap) -> (Series, Series) + Send + Sync>;

/// One verifiable identity: builders for both sides plus cap metadata.
pub struct IdentityEntry {
    id: String,
    description: String,
    default_caps: Vec<(&'static str, u32)>,
    floors: Vec<(&'static str, u32)>,
    basis_k: Option<u32>,
    ksum_bound: Option<u32>,
    builder: Builder,
}

impl IdentityEntry {
    fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        default_caps: &[(&'static str, u32)],
        builder: impl Fn(&CapMap) -> (Series, Series) + Send + Sync + 'static,
    ) -> IdentityEntry {
        IdentityEntry {
            id: id.into(),
            description: description.into(),
            default_caps: default_caps.to_vec(),
            floors: Vec::new(),
            basis_k: None,
            ksum_bound: None,
            builder: Box::new(builder),
        }
    }

    fn floor(mut self, var: &'static str, bound: u32) -> IdentityEntry {
        self.floors.push((var, bound));
        self
    }

    /// Records K for an entry quantified over f and checked on the monomial
    /// basis f(z) = z^k, k <= K.
    fn with_basis_k(mut self, k: u32) -> IdentityEntry {
        self.basis_k = Some(k);
        self
    }

    /// Records where the auxiliary sum on the right side is truncated under
    /// the default caps (one past the last index that reaches an in-cap
    /// monomial, so adding further terms changes nothing).
    fn with_ksum(mut self, bound: u32) -> IdentityEntry {
        self.ksum_bound = Some(bound);
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn default_caps(&self) -> &[(&'static str, u32)] {
        &self.default_caps
    }

    pub fn basis_k(&self) -> Option<u32> {
        self.basis_k
    }

    pub fn ksum_bound(&self) -> Option<u32> {
        self.ksum_bound
    }

    /// The smallest cap this entry accepts for `var`.
    pub fn floor_of(&self, var: &str) -> u32 {
        self.floors
            .iter()
            .find(|(v, _)| *v == var)
            .map(|(_, b)| *b)
            .unwrap_or(1)
    }

    /// Default caps with any overrides applied; override names that are not
    /// variables of this entry are ignored.
    pub fn resolve_caps(&self, overrides: &CapMap) -> Vec<(String, u32)> {
        self.default_caps
            .iter()
            .map(|(name, cap)| {
                let v = overrides.get(*name).copied().unwrap_or(*cap);
                (name.to_string(), v)
            })
            .collect()
    }

    /// Both sides at the given caps. Panics when a cap is below the entry's
    /// floor for that variable.
    pub fn build(&self, caps: &[(String, u32)]) -> (Series, Series) {
        let mut cm = CapMap::new();
        for (name, cap) in caps {
            let floor = self.floor_of(name);
            assert!(
                *cap >= floor,
                "cap {} = {} is below the floor {} for identity {}",
                name,
                cap,
                floor,
                self.id
            );
            cm.insert(name.clone(), *cap);
        }
        (self.builder)(&cm)
    }

    pub fn verify(&self, overrides: &CapMap) -> Report {
        let caps = self.resolve_caps(overrides);
        let start = Instant::now();
        let (lhs, rhs) = self.build(&caps);
        let mismatch = compare(&lhs, &rhs);
        Report {
            id: self.id.clone(),
            caps,
            ok: mismatch.is_none(),
            mismatch,
            millis: start.elapsed().as_millis() as u64,
        }
    }
}

/// The first in-cap monomial where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of verifying one entry.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: String,
    pub caps: Vec<(String, u32)>,
    pub ok: bool,
    pub mismatch: Option<Mismatch>,
    pub millis: u64,
}

impl Report {
    pub fn caps_string(&self) -> String {
        self.caps
            .iter()
            .map(|(n, c)| format!("{}={}", n, c))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Lexicographically first differing monomial with both coefficients, or
/// None when the sides agree on every in-cap coefficient.
pub fn compare(lhs: &Series, rhs: &Series) -> Option<Mismatch> {
    lhs.first_difference(rhs).map(|(monomial, a, b)| Mismatch {
        monomial,
        lhs: a.to_string(),
        rhs: b.to_string(),
    })
}

/// Every registered identity, in stable registry order.
pub fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();
    out.extend(charlier::entries());
    out.extend(hermite::entries());
    out.extend(pairs::entries());
    out.extend(qseries::entries());
    out.extend(bernoulli::entries());
    out.extend(cd::entries());
    out.extend(bell::entries());
    let mut seen = std::collections::BTreeSet::new();
    for e in &out {
        assert!(seen.insert(e.id.clone()), "duplicate identity id {:?}", e.id);
    }
    out
}

/// The entry registered under `id`.
pub fn find(id: &str) -> IdentityEntry {
    entries()
        .into_iter()
        .find(|e| e.id == id)
        .unwrap_or_else(|| panic!("unknown identity id {:?}", id))
}

/// Metadata for one catalog entry.
#[derive(Clone, Debug)]
pub struct EntryMeta {
    pub id: String,
    pub description: String,
    pub default_caps: Vec<(&'static str, u32)>,
    pub basis_k: Option<u32>,
    pub ksum_bound: Option<u32>,
}

/// Metadata for the whole catalog, in registry order.
pub fn catalog_list() -> Vec<EntryMeta> {
    entries()
        .iter()
        .map(|e| EntryMeta {
            id: e.id.clone(),
            description: e.description.clone(),
            default_caps: e.default_caps.clone(),
            basis_k: e.basis_k,
            ksum_bound: e.ksum_bound,
        })
        .collect()
}

/// Cap profile for [`verify_all`]: `Quick` uses entry defaults, `Full` raises
/// every cap by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

/// Verify the whole catalog in parallel. Explicit overrides win over the
/// profile; reports come back in registry order.
pub fn verify_all(profile: Profile, overrides: &CapMap) -> Vec<Report> {
    entries()
        .par_iter()
        .map(|e| {
            let mut eff = overrides.clone();
            if profile == Profile::Full {
                for (name, cap) in e.default_caps() {
                    eff.entry(name.to_string()).or_insert(cap + 1);
                }
            }
            e.verify(&eff)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// helpers shared by the entry builders

pub(crate) fn cap(cm: &CapMap, name: &str) -> u32 {
    *cm.get(name)
        .unwrap_or_else(|| panic!("missing cap for series variable {:?}", name))
}

/// Re-key a series onto a larger spec, optionally multiplying by extra
/// bookkeeping exponents; every variable of `s` must exist in `dst`.
pub(crate) fn lift(dst: &Arc<VarSpec>, s: &Series, extra: &[(&str, u32)]) -> Series {
    let vars = s.spec().vars().to_vec();
    let mut out = Series::zero(dst);
    for (e, c) in s.terms() {
        let mut exps: Vec<(&str, u32)> = extra.to_vec();
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                exps.push((vars[i].as_str(), k));
            }
        }
        out = out.add(&Series::monomial(dst, &exps, c.clone()));
    }
    out
}

/// One packed row: `val` at the monomial `vars`, as a scalar coefficient.
pub(crate) fn row(spec: &Arc<VarSpec>, vars: &[(&str, u32)], val: Rat) -> Series {
    Series::monomial(spec, vars, Poly::constant(spec.ring(), val))
}

// Dense scalar polynomials as coefficient vectors (index = degree), used by
// the umbral sum entries where moments are applied term by term.

/// Signed integer power i^e as a rational, with i^0 = 1 for any i.
pub(crate) fn int_pow(i: i64, e: usize) -> Rat {
    Rat::from(num::BigInt::from(i).pow(e as u32))
}

pub(crate) fn poly_mul(f: &[Rat], g: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

pub(crate) fn poly_deriv(f: &[Rat]) -> Vec<Rat> {
    if f.len() <= 1 {
        return vec![Rat::zero()];
    }
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rat::from(num::BigInt::from(i as i64)))
        .collect()
}

pub(crate) fn poly_eval_int(f: &[Rat], x: i64) -> Rat {
    let mut acc = Rat::zero();
    for c in f.iter().rev() {
        acc = acc * Rat::from(num::BigInt::from(x)) + c;
    }
    acc
}

/// Coefficients of f(k x + c).
pub(crate) fn poly_affine(f: &[Rat], k: i64, c: i64) -> Vec<Rat> {
    let mut acc = vec![Rat::zero()];
    for coeff in f.iter().rev() {
        // acc = acc * (k x + c) + coeff
        let mut next = vec![Rat::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a * Rat::from(num::BigInt::from(k));
            next[i] += a * Rat::from(num::BigInt::from(c));
        }
        next[0] += coeff;
        acc = next;
    }
    while acc.len() > 1 && acc.last().unwrap().is_zero() {
        acc.pop();
    }
    acc
}

pub(crate) fn poly_shift(f: &[Rat], c: i64) -> Vec<Rat> {
    poly_affine(f, 1, c)
}

/// Coefficients of f(-x).
pub(crate) fn poly_reflect(f: &[Rat]) -> Vec<Rat> {
    f.iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .collect()
}

/// A random polynomial of the given degree with integer coefficients in
/// [-9, 9] and nonzero leading coefficient.
pub(crate) fn random_int_poly(rng: &mut crate::rng::XorShift, deg: usize) -> Vec<Rat> {
    let mut f: Vec<Rat> = (0..=deg)
        .map(|_| Rat::from(num::BigInt::from(rng.int_in(-9, 9))))
        .collect();
    while f[deg].is_zero() {
        f[deg] = Rat::from(num::BigInt::from(rng.int_in(-9, 9)));
    }
    f
}

#[cfg(test)]
mod tests;
