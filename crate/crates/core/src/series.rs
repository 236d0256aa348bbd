//! Truncated multivariate power series with polynomial coefficients.
//!
//! A [`VarSpec`] fixes the series variables, a per-variable truncation cap,
//! and the coefficient ring. All operations are exact within the caps:
//! out-of-cap monomials are dropped, in-cap coefficients are never
//! approximated. Equality is coefficient-by-coefficient.
//!
//! * [`Series::exp`], [`Series::log`] require zero / unit constant term
//! * [`Series::pow_sym`] raises to a symbolic exponent via exp(e * log f)
//! * [`Series::invert`] requires a nonzero rational constant term
//! * [`Series::substitute`] composes with zero-constant-term images
//! * [`Series::egf_coeff`] extracts a coefficient scaled by the product of
//!   factorials, the exponential-generating-function convention

use crate::poly::{Poly, PolyRing};
use crate::rat::{factorial_rat, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Series variables with per-variable caps over a fixed coefficient ring.
#[derive(Debug, PartialEq, Eq)]
pub struct VarSpec {
    ring: Arc<PolyRing>,
    vars: Vec<String>,
    caps: Vec<u32>,
}

impl VarSpec {
    pub fn new(ring: &Arc<PolyRing>, vars: &[(&str, u32)]) -> Arc<VarSpec> {
        let names: Vec<String> = vars.iter().map(|(n, _)| n.to_string()).collect();
        let caps: Vec<u32> = vars.iter().map(|(_, c)| *c).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!names[..i].contains(n), "duplicate series variable {:?}", n);
            assert!(
                !ring.contains(n),
                "series variable {:?} clashes with a coefficient symbol",
                n
            );
        }
        Arc::new(VarSpec {
            ring: ring.clone(),
            vars: names,
            caps,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn index(&self, name: &str) -> usize {
        self.vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown series variable {:?}", name))
    }

    pub fn cap(&self, name: &str) -> u32 {
        self.caps[self.index(name)]
    }

    pub fn cap_sum(&self) -> u32 {
        self.caps.iter().sum()
    }

    /// Same variables and ring with new (typically smaller) caps.
    pub fn with_caps(self: &Arc<Self>, caps: &[(&str, u32)]) -> Arc<VarSpec> {
        let mut new_caps = self.caps.clone();
        for (name, c) in caps {
            new_caps[self.index(name)] = *c;
        }
        Arc::new(VarSpec {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            caps: new_caps,
        })
    }
}

fn same_spec(a: &Arc<VarSpec>, b: &Arc<VarSpec>) {
    assert!(
        Arc::ptr_eq(a, b) || (a.vars == b.vars && a.caps == b.caps && a.ring == b.ring),
        "mixed series specs: {:?} vs {:?}",
        a.vars,
        b.vars
    );
}

/// Truncated power series: exponent vector -> nonzero polynomial coefficient.
#[derive(Clone, Debug)]
pub struct Series {
    spec: Arc<VarSpec>,
    terms: BTreeMap<Vec<u32>, Poly>,
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.spec.vars == other.spec.vars
            && self.spec.caps == other.spec.caps
            && self.terms == other.terms
    }
}

impl Eq for Series {}

impl Series {
    pub fn zero(spec: &Arc<VarSpec>) -> Series {
        Series {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &Arc<VarSpec>) -> Series {
        Series::constant(spec, Poly::one(spec.ring()))
    }

    pub fn constant(spec: &Arc<VarSpec>, c: Poly) -> Series {
        let mut s = Series::zero(spec);
        s.insert_term(vec![0; spec.arity()], c);
        s
    }

    pub fn scalar(spec: &Arc<VarSpec>, c: Rat) -> Series {
        Series::constant(spec, Poly::constant(spec.ring(), c))
    }

    pub fn var(spec: &Arc<VarSpec>, name: &str) -> Series {
        Series::monomial(spec, &[(name, 1)], Poly::one(spec.ring()))
    }

    pub fn monomial(spec: &Arc<VarSpec>, exps: &[(&str, u32)], coeff: Poly) -> Series {
        let mut e = vec![0; spec.arity()];
        for (name, k) in exps {
            e[spec.index(name)] += k;
        }
        let mut s = Series::zero(spec);
        s.insert_term(e, coeff);
        s
    }

    pub fn spec(&self) -> &Arc<VarSpec> {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn in_caps(&self, e: &[u32]) -> bool {
        e.iter().zip(&self.spec.caps).all(|(k, cap)| k <= cap)
    }

    fn insert_term(&mut self, e: Vec<u32>, c: Poly) {
        if c.is_zero() || !self.in_caps(&e) {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = &*slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Series) -> Series {
        same_spec(&self.spec, &rhs.spec);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> Series {
        if c.is_zero() {
            return Series::zero(&self.spec);
        }
        Series {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, p)| (e.clone(), p.scale(c)))
                .collect(),
        }
    }

    pub fn scale_poly(&self, c: &Poly) -> Series {
        let mut out = Series::zero(&self.spec);
        for (e, p) in &self.terms {
            out.insert_term(e.clone(), p * c);
        }
        out
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        same_spec(&self.spec, &rhs.spec);
        let mut out = Series::zero(&self.spec);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if !out.in_caps(&e) {
                    continue;
                }
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Series {
        let mut acc = Series::one(&self.spec);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn constant_term(&self) -> Poly {
        self.coeff(&vec![0; self.spec.arity()])
    }

    pub fn coeff(&self, e: &[u32]) -> Poly {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.spec.ring()))
    }

    pub fn coeff_named(&self, exps: &[(&str, u32)]) -> Poly {
        let mut e = vec![0; self.spec.arity()];
        for (name, k) in exps {
            e[self.spec.index(name)] += k;
        }
        self.coeff(&e)
    }

    /// Coefficient in the EGF convention: [x^m y^n ...] f multiplied by m! n! ...
    pub fn egf_coeff(&self, exps: &[(&str, u32)]) -> Poly {
        let mut scale = Rat::one();
        for (_, k) in exps {
            scale *= factorial_rat(*k as usize);
        }
        self.coeff_named(exps).scale(&scale)
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Series {
        assert!(
            self.constant_term().is_zero(),
            "exp requires a zero constant term"
        );
        let mut acc = Series::one(&self.spec);
        let mut term = Series::one(&self.spec);
        let mut k = 1u64;
        loop {
            term = term.mul(self).scale_rat(&Rat::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
            k += 1;
        }
        acc
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Series {
        assert!(
            self.constant_term().as_constant() == Some(Rat::one()),
            "log requires constant term 1"
        );
        let g = self.sub(&Series::one(&self.spec));
        let mut acc = Series::zero(&self.spec);
        let mut pw = Series::one(&self.spec);
        let mut k = 1u64;
        loop {
            pw = pw.mul(&g);
            if pw.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&pw.scale_rat(&Rat::new(sign.into(), k.into())));
            k += 1;
        }
        acc
    }

    /// f^e for a symbolic (polynomial) exponent, computed as exp(e * log f).
    /// Requires constant term 1.
    pub fn pow_sym(&self, e: &Poly) -> Series {
        self.log().scale_poly(e).exp()
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn invert(&self) -> Series {
        let c = self
            .constant_term()
            .as_constant()
            .unwrap_or_else(|| panic!("invert requires a rational constant term"));
        assert!(!c.is_zero(), "invert requires a nonzero constant term");
        let cinv = Rat::one() / c;
        // 1/f = (1/c) * 1/(1 - h) with h = 1 - f/c, which has zero constant term.
        let h = Series::one(&self.spec).sub(&self.scale_rat(&cinv));
        let mut acc = Series::one(&self.spec);
        let mut pw = Series::one(&self.spec);
        loop {
            pw = pw.mul(&h);
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw);
        }
        acc.scale_rat(&cinv)
    }

    /// Simultaneous substitution variable -> series (same spec). Every image
    /// must have zero constant term; absent variables are left alone.
    pub fn substitute(&self, map: &BTreeMap<String, Series>) -> Series {
        for img in map.values() {
            same_spec(&self.spec, &img.spec);
            assert!(
                img.constant_term().is_zero(),
                "substitution image must have zero constant term"
            );
        }
        let images: Vec<Option<&Series>> = self
            .spec
            .vars
            .iter()
            .map(|v| map.get(v.as_str()))
            .collect();
        // Memoized powers of each substituted image.
        let mut powers: Vec<Vec<Series>> = images
            .iter()
            .map(|img| match img {
                Some(s) => vec![Series::one(&self.spec), (*s).clone()],
                None => Vec::new(),
            })
            .collect();
        let mut out = Series::zero(&self.spec);
        for (e, c) in &self.terms {
            let mut term = Series::constant(&self.spec, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match images[i] {
                    None => {
                        term = term.mul(&Series::monomial(
                            &self.spec,
                            &[(self.spec.vars[i].as_str(), k)],
                            Poly::one(self.spec.ring()),
                        ));
                    }
                    Some(_) => {
                        while powers[i].len() <= k as usize {
                            let next = powers[i].last().unwrap().mul(&powers[i][1]);
                            powers[i].push(next);
                        }
                        term = term.mul(&powers[i][k as usize]);
                    }
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact division by var^k: every term must carry at least var^k.
    ///
    /// The top k orders of the result are not determined by a series known
    /// only to the cap, so compute with headroom and truncate afterwards.
    pub fn div_exact_var(&self, name: &str, k: u32) -> Series {
        let i = self.spec.index(name);
        let mut out = Series::zero(&self.spec);
        for (e, c) in &self.terms {
            assert!(
                e[i] >= k,
                "division by {}^{} is not exact: term has exponent {}",
                name,
                k,
                e[i]
            );
            let mut e2 = e.clone();
            e2[i] -= k;
            out.insert_term(e2, c.clone());
        }
        out
    }

    /// The same series under a spec with equal variables and lower-or-equal
    /// caps; out-of-cap terms are dropped.
    pub fn truncate(&self, spec: &Arc<VarSpec>) -> Series {
        assert_eq!(self.spec.vars, spec.vars, "truncate must keep variables");
        assert_eq!(
            self.spec.ring().symbols(),
            spec.ring().symbols(),
            "truncate must keep the coefficient ring"
        );
        assert!(
            self.spec.caps.iter().zip(&spec.caps).all(|(a, b)| b <= a),
            "truncate cannot raise caps"
        );
        let mut out = Series::zero(spec);
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    /// Inject a polynomial, moving the symbols named in `move_map` into
    /// series variables (symbol name -> variable name). Remaining symbols
    /// must belong to the target coefficient ring.
    pub fn from_poly(
        spec: &Arc<VarSpec>,
        p: &Poly,
        move_map: &BTreeMap<String, String>,
    ) -> Series {
        let src_ring = p.ring().clone();
        let mut out = Series::zero(spec);
        for (e, c) in p.terms() {
            let mut se = vec![0; spec.arity()];
            let mut kept: Vec<(&str, u32)> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let sym = &src_ring.symbols()[i];
                match move_map.get(sym) {
                    Some(var) => se[spec.index(var)] += k,
                    None => kept.push((sym.as_str(), k)),
                }
            }
            out.insert_term(se, Poly::monomial(spec.ring(), &kept, c.clone()));
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Poly)> {
        self.terms.iter()
    }

    pub fn monomial_string(&self, e: &[u32]) -> String {
        let parts: Vec<String> = self
            .spec
            .vars
            .iter()
            .zip(e)
            .filter(|(_, &k)| k > 0)
            .map(|(v, &k)| {
                if k == 1 {
                    v.clone()
                } else {
                    format!("{}^{}", v, k)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// The lexicographically first monomial where the two series differ,
    /// with both coefficients.
    pub fn first_difference(&self, other: &Series) -> Option<(String, Poly, Poly)> {
        same_spec(&self.spec, &other.spec);
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for e in keys {
            let a = self.coeff(e);
            let b = other.coeff(e);
            if a != b {
                return Some((self.monomial_string(e), a, b));
            }
        }
        None
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = self.monomial_string(e);
            if mono == "1" {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*{}", c, mono)?;
            }
        }
        Ok(())
    }
}
