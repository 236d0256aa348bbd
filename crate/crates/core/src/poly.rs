//! Sparse multivariate polynomials over exact rationals.
//!
//! A [`PolyRing`] fixes an ordered list of symbol names; every [`Poly`] stores
//! fixed-width exponent vectors against that list. Mixing polynomials from
//! different rings panics; extending the symbol list is an explicit operation
//! ([`PolyRing::extend`] plus [`Poly::promote`]), never an implicit merge.

use crate::rat::{rat_int, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

/// An ordered, duplicate-free list of polynomial symbols.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    symbols: Vec<String>,
}

impl PolyRing {
    pub fn new(symbols: &[&str]) -> Arc<PolyRing> {
        let symbols: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
        for (i, s) in symbols.iter().enumerate() {
            assert!(
                !symbols[..i].contains(s),
                "duplicate symbol {:?} in polynomial ring",
                s
            );
        }
        Arc::new(PolyRing { symbols })
    }

    /// A new ring with additional symbols appended.
    pub fn extend(self: &Arc<Self>, more: &[&str]) -> Arc<PolyRing> {
        let mut symbols: Vec<&str> = self.symbols.iter().map(|s| s.as_str()).collect();
        symbols.extend_from_slice(more);
        PolyRing::new(&symbols)
    }

    pub fn arity(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index(&self, name: &str) -> usize {
        self.symbols
            .iter()
            .position(|s| s == name)
            .unwrap_or_else(|| panic!("unknown symbol {:?} in polynomial ring", name))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.symbols.iter().any(|s| s == name)
    }
}

fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) {
    assert!(
        Arc::ptr_eq(a, b) || a.symbols == b.symbols,
        "mixed polynomial rings: {:?} vs {:?}",
        a.symbols,
        b.symbols
    );
}

/// Sparse polynomial: exponent vector -> nonzero rational coefficient.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.symbols == other.ring.symbols && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, Rat::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; ring.arity()], c);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn int(ring: &Arc<PolyRing>, n: i64) -> Poly {
        Poly::constant(ring, rat_int(n))
    }

    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Poly {
        Poly::monomial(ring, &[(name, 1)], Rat::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, exps: &[(&str, u32)], coeff: Rat) -> Poly {
        let mut e = vec![0; ring.arity()];
        for (name, k) in exps {
            e[ring.index(name)] += k;
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(e, coeff);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Some(c) when the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&k| k == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// The constant c, panicking when the polynomial is not constant.
    pub fn expect_constant(&self) -> Rat {
        self.as_constant()
            .unwrap_or_else(|| panic!("expected a constant polynomial, got {}", self))
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        let i = self.ring.index(name);
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Simultaneous substitution symbol -> polynomial (same ring).
    /// Symbols absent from the map are left alone.
    pub fn substitute(&self, map: &BTreeMap<String, Poly>) -> Poly {
        for img in map.values() {
            same_ring(&self.ring, &img.ring);
        }
        let images: Vec<Option<&Poly>> = self
            .ring
            .symbols
            .iter()
            .map(|s| map.get(s.as_str()))
            .collect();
        let mut out = Poly::zero(&self.ring);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(&self.ring, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match images[i] {
                    Some(img) => term = &term * &img.pow(k),
                    None => {
                        term = &term
                            * &Poly::monomial(
                                &self.ring,
                                &[(self.ring.symbols[i].as_str(), k)],
                                Rat::one(),
                            )
                    }
                }
            }
            out += &term;
        }
        out
    }

    /// Formal derivative with respect to one symbol.
    pub fn derivative(&self, name: &str) -> Poly {
        let i = self.ring.index(name);
        let mut out = Poly::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.insert_term(e2, c * rat_int(e[i] as i64));
        }
        out
    }

    /// Full evaluation; every symbol occurring in the polynomial must be assigned.
    pub fn eval(&self, assign: &BTreeMap<String, Rat>) -> Rat {
        let values: Vec<Option<&Rat>> = self
            .ring
            .symbols
            .iter()
            .map(|s| assign.get(s.as_str()))
            .collect();
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = values[i].unwrap_or_else(|| {
                    panic!("no value assigned to symbol {:?}", self.ring.symbols[i])
                });
                for _ in 0..k {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    /// The same polynomial in a ring whose symbol list contains this one's.
    pub fn promote(&self, ring: &Arc<PolyRing>) -> Poly {
        let map: Vec<usize> = self
            .ring
            .symbols
            .iter()
            .map(|s| ring.index(s.as_str()))
            .collect();
        let mut out = Poly::zero(ring);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; ring.arity()];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] = k;
            }
            out.insert_term(e2, c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        same_ring(&self.ring, &rhs.ring);
        for (e, c) in &rhs.terms {
            self.insert_term(e.clone(), c.clone());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        same_ring(&self.ring, &rhs.ring);
        let mut out = Poly::zero(&self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }
}

fn fmt_monomial(symbols: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = symbols
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(s, &k)| {
            if k == 1 {
                s.clone()
            } else {
                format!("{}^{}", s, k)
            }
        })
        .collect();
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mono = fmt_monomial(&self.ring.symbols, e);
            let abs = c.abs();
            let coeff = if abs.is_one() && !mono.is_empty() {
                String::new()
            } else {
                abs.to_string()
            };
            let body = match (coeff.is_empty(), mono.is_empty()) {
                (true, false) => mono,
                (false, true) => coeff,
                (false, false) => format!("{}*{}", coeff, mono),
                (true, true) => unreachable!(),
            };
            if first {
                if c.is_negative() {
                    write!(f, "-{}", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", body)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(&["u", "v"])
    }

    #[test]
    fn arithmetic_and_normalization() {
        let r = ring();
        let u = Poly::var(&r, "u");
        let v = Poly::var(&r, "v");
        let p = &(&u + &v) * &(&u - &v);
        let q = &(&u * &u) - &(&v * &v);
        assert_eq!(p, q);
        // cancelling terms are dropped, not stored as zeros
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn constants_and_degrees() {
        let r = ring();
        let p = Poly::monomial(&r, &[("u", 2), ("v", 1)], rat(3, 4));
        assert_eq!(p.degree_in("u"), 2);
        assert_eq!(p.degree_in("v"), 1);
        assert_eq!(p.total_degree(), 3);
        assert_eq!(p.as_constant(), None);
        assert_eq!(Poly::int(&r, 7).as_constant(), Some(rat_int(7)));
        assert_eq!(Poly::zero(&r).as_constant(), Some(Rat::zero()));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let r = ring();
        let u = Poly::var(&r, "u");
        let v = Poly::var(&r, "v");
        // u -> v, v -> u applied at once must swap, not chain.
        let mut map = BTreeMap::new();
        map.insert("u".to_string(), v.clone());
        map.insert("v".to_string(), u.clone());
        let p = &u + &(&v * &v);
        let swapped = p.substitute(&map);
        assert_eq!(swapped, &v + &(&u * &u));
    }

    #[test]
    fn derivative_and_eval() {
        let r = ring();
        let u = Poly::var(&r, "u");
        let p = &(&u * &u) + &Poly::monomial(&r, &[("u", 1), ("v", 1)], rat_int(3));
        let d = p.derivative("u");
        let expected = &u.scale(&rat_int(2)) + &Poly::monomial(&r, &[("v", 1)], rat_int(3));
        assert_eq!(d, expected);

        let mut assign = BTreeMap::new();
        assign.insert("u".to_string(), rat_int(2));
        assign.insert("v".to_string(), rat(1, 2));
        assert_eq!(p.eval(&assign), rat_int(7));
    }

    #[test]
    #[should_panic(expected = "mixed polynomial rings")]
    fn mixing_rings_panics() {
        let a = PolyRing::new(&["u"]);
        let b = PolyRing::new(&["w"]);
        let _ = &Poly::var(&a, "u") + &Poly::var(&b, "w");
    }

    #[test]
    fn promote_into_larger_ring() {
        let a = PolyRing::new(&["u"]);
        let big = a.extend(&["w"]);
        let p = Poly::var(&a, "u").pow(2);
        let q = p.promote(&big);
        assert_eq!(q.degree_in("u"), 2);
        assert_eq!(q.degree_in("w"), 0);
    }

    #[test]
    fn display_is_deterministic() {
        let r = ring();
        let p = &(&Poly::var(&r, "u").scale(&rat(-1, 2)) + &Poly::int(&r, 1))
            + &Poly::monomial(&r, &[("u", 1), ("v", 2)], rat_int(2));
        assert_eq!(p.to_string(), "1 - 1/2*u + 2*u*v^2");
    }
}
