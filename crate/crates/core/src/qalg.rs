//! q-series arithmetic and the four-letter word algebra with BA = qAB,
//! DC = qCD, all other pairs commuting.
//!
//! The scalar domain is `Series`; q is an ordinary capped series variable, so
//! q-factorial denominators become exact inversions of unit-constant series
//! and infinite q-products stabilize once their factors leave the q cap.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::poly::{Poly, PolyRing};
use crate::series::{Series, VarSpec};

/// Gaussian binomial coefficient as a polynomial over `ring`, which must
/// contain the symbol q.  Built with the q-Pascal rule
/// [n,k] = [n-1,k-1] + q^k [n-1,k].
pub fn qbinom_poly(ring: &Arc<PolyRing>, n: u32, k: u32) -> Poly {
    if k > n {
        return Poly::zero(ring);
    }
    let q = Poly::var(ring, "q");
    let mut row = vec![Poly::one(ring)];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        next.push(Poly::one(ring));
        for j in 1..m {
            next.push(&row[j - 1] + &(&q.pow(j as u32) * &row[j]));
        }
        next.push(Poly::one(ring));
        row = next;
    }
    row[k as usize].clone()
}

/// Gaussian binomial injected into the q series variable of `spec`, for use
/// where q is capped rather than a coefficient symbol.
pub fn qbinom_series(spec: &Arc<VarSpec>, n: u32, k: u32) -> Series {
    let ring = PolyRing::new(&["q"]);
    let p = qbinom_poly(&ring, n, k);
    let q = Series::var(spec, "q");
    let mut out = Series::zero(spec);
    for (e, c) in p.terms() {
        out = out.add(&q.pow(e[0]).scale_rat(c));
    }
    out
}

/// The q-factorial (q)_n = (1-q)(1-q^2)...(1-q^n) over `ring`.
pub fn qfact_poly(ring: &Arc<PolyRing>, n: u32) -> Poly {
    let q = Poly::var(ring, "q");
    let one = Poly::one(ring);
    let mut out = one.clone();
    for i in 1..=n {
        out = &out * &(&one - &q.pow(i));
    }
    out
}

/// (a)_m = (1-a)(1-aq)...(1-a q^{m-1}) for a series argument.
pub fn q_pochhammer(a: &Series, m: u32) -> Series {
    let spec = a.spec().clone();
    let q = Series::var(&spec, "q");
    let one = Series::one(&spec);
    let mut out = one.clone();
    let mut aq = a.clone();
    for _ in 0..m {
        out = out.mul(&one.sub(&aq));
        aq = aq.mul(&q);
    }
    out
}

/// (a)_∞ truncated to the caps: the factor 1 - a q^i is the identity on
/// every in-cap monomial once i exceeds the q cap, so q_cap + 1 factors
/// determine the product exactly.
pub fn q_pochhammer_inf(a: &Series) -> Series {
    let qcap = a.spec().cap("q");
    q_pochhammer(a, qcap + 1)
}

fn assert_qexp_arg(spec: &Arc<VarSpec>, terms: impl Iterator<Item = Vec<u32>>) {
    let qi = spec.index("q");
    for e in terms {
        let positive = e
            .iter()
            .enumerate()
            .any(|(i, &d)| i != qi && d > 0);
        assert!(
            positive,
            "q_exp argument term without a non-q series variable"
        );
    }
}

/// The q-exponential e(z) = Σ_{n≥0} z^n/(q)_n.  Every term of z must carry a
/// positive power of a series variable other than q, so the powers of z
/// leave the caps and the sum is finite.
pub fn q_exp(z: &Series) -> Series {
    let spec = z.spec().clone();
    assert_qexp_arg(&spec, z.terms().map(|(e, _)| e.clone()));
    let one = Series::one(&spec);
    let q = Series::var(&spec, "q");
    let mut out = Series::one(&spec);
    let mut zp = Series::one(&spec);
    let mut inv_fact = Series::one(&spec);
    let mut n = 0u32;
    loop {
        n += 1;
        zp = zp.mul(z);
        if zp.is_zero() {
            return out;
        }
        inv_fact = inv_fact.mul(&one.sub(&q.pow(n)).invert());
        out = out.add(&zp.mul(&inv_fact));
    }
}

/// A polynomial in the noncommuting letters A, B, C, D with series
/// coefficients, stored in the normal order A^i B^j C^k D^l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPoly {
    spec: Arc<VarSpec>,
    terms: BTreeMap<[u32; 4], Series>,
}

impl NcPoly {
    pub fn zero(spec: &Arc<VarSpec>) -> NcPoly {
        NcPoly {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &Arc<VarSpec>) -> NcPoly {
        NcPoly::word(spec, [0; 4], Series::one(spec))
    }

    pub fn word(spec: &Arc<VarSpec>, word: [u32; 4], coeff: Series) -> NcPoly {
        let mut out = NcPoly::zero(spec);
        out.insert(word, coeff);
        out
    }

    /// The single letter A, B, C or D (index 0..=3).
    pub fn letter(spec: &Arc<VarSpec>, idx: usize) -> NcPoly {
        assert!(idx < 4, "letter index out of range: {}", idx);
        let mut word = [0u32; 4];
        word[idx] = 1;
        NcPoly::word(spec, word, Series::one(spec))
    }

    fn insert(&mut self, word: [u32; 4], coeff: Series) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    pub fn spec(&self) -> &Arc<VarSpec> {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert(*w, c.neg());
        }
        out
    }

    pub fn scale(&self, s: &Series) -> NcPoly {
        let mut out = NcPoly::zero(&self.spec);
        for (w, c) in &self.terms {
            out.insert(*w, c.mul(s));
        }
        out
    }

    /// Normal-ordering product: moving A^i2 left across B^j1 costs q^(j1 i2)
    /// and moving C^k2 left across D^l1 costs q^(l1 k2).
    pub fn mul(&self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero(&self.spec);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let qe = w1[1] * w2[0] + w1[3] * w2[2];
                let coeff = c1.mul(c2).mul(&Series::var(&self.spec, "q").pow(qe));
                if coeff.is_zero() {
                    continue;
                }
                let word = [w1[0] + w2[0], w1[1] + w2[1], w1[2] + w2[2], w1[3] + w2[3]];
                out.insert(word, coeff);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> NcPoly {
        let mut out = NcPoly::one(&self.spec);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Apply the evaluation functional A^i B^j C^k D^l ↦ u^i v^k; the ring
    /// must contain the symbols u and v.
    pub fn eval(&self) -> Series {
        let ring = self.spec.ring();
        let u = Poly::var(ring, "u");
        let v = Poly::var(ring, "v");
        let mut out = Series::zero(&self.spec);
        for (w, c) in &self.terms {
            let image = &u.pow(w[0]) * &v.pow(w[2]);
            out = out.add(&c.scale_poly(&image));
        }
        out
    }
}

/// The q-exponential of a noncommutative argument, e(z) = Σ z^n/(q)_n with
/// normal-ordered powers.  Every scalar coefficient of z must vanish at the
/// origin so that the sum is finite within the caps.
pub fn q_exp_nc(z: &NcPoly) -> NcPoly {
    let spec = z.spec().clone();
    assert_qexp_arg(
        &spec,
        z.terms.values().flat_map(|c| c.terms().map(|(e, _)| e.clone())),
    );
    let one = Series::one(&spec);
    let q = Series::var(&spec, "q");
    let mut out = NcPoly::one(&spec);
    let mut zp = NcPoly::one(&spec);
    let mut inv_fact = Series::one(&spec);
    let mut n = 0u32;
    loop {
        n += 1;
        zp = zp.mul(z);
        if zp.is_zero() {
            return out;
        }
        inv_fact = inv_fact.mul(&one.sub(&q.pow(n)).invert());
        out = out.add(&zp.scale(&inv_fact));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{binomial, rat_int, Rat};

    fn qring() -> Arc<PolyRing> {
        PolyRing::new(&["q"])
    }

    fn ncspec(xcap: u32, qcap: u32) -> Arc<VarSpec> {
        let ring = PolyRing::new(&["u", "v"]);
        VarSpec::new(&ring, &[("x", xcap), ("q", qcap)])
    }

    #[test]
    fn qbinom_small_values() {
        let ring = qring();
        let q = Poly::var(&ring, "q");
        assert_eq!(qbinom_poly(&ring, 5, 0), Poly::one(&ring));
        assert_eq!(qbinom_poly(&ring, 2, 1), &Poly::one(&ring) + &q);
        let mut expect = Poly::one(&ring);
        expect += &q;
        expect += &q.pow(2).scale(&rat_int(2));
        expect += &q.pow(3);
        expect += &q.pow(4);
        assert_eq!(qbinom_poly(&ring, 4, 2), expect);
        assert!(qbinom_poly(&ring, 3, 5).is_zero());
    }

    #[test]
    fn qbinom_matches_qfactorial_quotient() {
        let ring = qring();
        for n in 0..=8u32 {
            for k in 0..=n {
                let lhs = qfact_poly(&ring, n);
                let rhs = &qbinom_poly(&ring, n, k)
                    * &(&qfact_poly(&ring, k) * &qfact_poly(&ring, n - k));
                assert_eq!(lhs, rhs, "qfactorial quotient failed at ({}, {})", n, k);
            }
        }
    }

    #[test]
    fn qbinom_at_q_one_is_binomial() {
        let ring = qring();
        let mut assign = BTreeMap::new();
        assign.insert("q".to_string(), rat_int(1));
        for n in 0..=8u32 {
            for k in 0..=n {
                let val = qbinom_poly(&ring, n, k).eval(&assign);
                let expect = Rat::from(binomial(n as usize, k as usize));
                assert_eq!(val, expect);
            }
        }
    }

    #[test]
    fn pochhammer_small() {
        let spec = ncspec(4, 6);
        let x = Series::var(&spec, "x");
        let one = Series::one(&spec);
        assert_eq!(q_pochhammer(&x, 1), one.sub(&x));
        // ring symbols here are u, v; q lives in the exponent vector, so the
        // x^2 coefficient of (x)_inf is collected across (x, q) exponents
        let inf = q_pochhammer_inf(&x);
        let xi = spec.index("x");
        let qi = spec.index("q");
        for target_q in 0..=6u32 {
            // expected coefficient of x^2 q^t: number of pairs 0 <= i < j
            // with i + j = t
            let count = (0..=6u32)
                .flat_map(|i| ((i + 1)..=6u32).map(move |j| (i, j)))
                .filter(|&(i, j)| i + j == target_q)
                .count();
            let mut e = vec![0u32; 2];
            e[xi] = 2;
            e[qi] = target_q;
            let got = inf.coeff(&e);
            assert_eq!(got, Poly::int(spec.ring(), count as i64));
        }
    }

    #[test]
    fn q_exp_inverts_pochhammer() {
        let spec = ncspec(6, 6);
        let x = Series::var(&spec, "x");
        let prod = q_exp(&x).mul(&q_pochhammer_inf(&x));
        assert_eq!(prod, Series::one(&spec));
    }

    #[test]
    fn q_exp_shifted_argument() {
        let spec = ncspec(6, 6);
        let x = Series::var(&spec, "x");
        let q = Series::var(&spec, "q");
        for j in 0..=3u32 {
            let lhs = q_exp(&x.mul(&q.pow(j)));
            let rhs = q_pochhammer(&x, j).mul(&q_exp(&x));
            assert_eq!(lhs, rhs, "e(q^j x) = (x)_j e(x) failed at j = {}", j);
        }
    }

    #[test]
    fn q_binomial_theorem() {
        // sum_n (a)_n/(q)_n x^n = (ax)_inf/(x)_inf with a a ring symbol
        let ring = PolyRing::new(&["a"]);
        let spec = VarSpec::new(&ring, &[("x", 6), ("q", 6)]);
        let x = Series::var(&spec, "x");
        let one = Series::one(&spec);
        let q = Series::var(&spec, "q");
        let a = Series::constant(&spec, Poly::var(&ring, "a"));
        let ax = a.mul(&x);

        let mut lhs = Series::zero(&spec);
        let mut inv_fact = Series::one(&spec);
        for n in 0..=6u32 {
            if n > 0 {
                inv_fact = inv_fact.mul(&one.sub(&q.pow(n)).invert());
            }
            lhs = lhs.add(&q_pochhammer(&a, n).mul(&x.pow(n)).mul(&inv_fact));
        }
        let rhs = q_pochhammer_inf(&ax).mul(&q_pochhammer_inf(&x).invert());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_ordering_relations() {
        let spec = ncspec(4, 12);
        let a = NcPoly::letter(&spec, 0);
        let b = NcPoly::letter(&spec, 1);
        let c = NcPoly::letter(&spec, 2);
        let q = Series::var(&spec, "q");

        // BA = qAB
        let ba = b.mul(&a);
        let ab = a.mul(&b);
        assert_eq!(ba, ab.scale(&q));
        // AC = CA (commuting pair)
        assert_eq!(a.mul(&c), c.mul(&a));
        // B^2 A = q^2 A B^2
        let b2a = b.mul(&b).mul(&a);
        let ab2 = a.mul(&b.mul(&b));
        assert_eq!(b2a, ab2.scale(&q.pow(2)));
    }

    #[test]
    fn nc_binomial_formula() {
        // (A+B)^n = sum_k qbinom(n,k) A^k B^(n-k)
        let spec = ncspec(4, 20);
        let a = NcPoly::letter(&spec, 0);
        let b = NcPoly::letter(&spec, 1);
        let s = a.add(&b);
        for n in 0..=5u32 {
            let lhs = s.pow(n);
            let mut rhs = NcPoly::zero(&spec);
            for k in 0..=n {
                let qb = qbinom_series(&spec, n, k);
                let mut word = [0u32; 4];
                word[0] = k;
                word[1] = n - k;
                rhs = rhs.add(&NcPoly::word(&spec, word, qb));
            }
            assert_eq!(lhs, rhs, "noncommutative binomial failed at n = {}", n);
        }
    }

    #[test]
    fn nc_q_exp_factorizes() {
        // e((A+B)x) = e(Ax)e(Bx)
        let spec = ncspec(5, 25);
        let x = Series::var(&spec, "x");
        let ax = NcPoly::letter(&spec, 0).scale(&x);
        let bx = NcPoly::letter(&spec, 1).scale(&x);
        let lhs = q_exp_nc(&ax.add(&bx));
        let rhs = q_exp_nc(&ax).mul(&q_exp_nc(&bx));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_drops_b_and_d() {
        // eval(e(ACx)) = e(uvx)
        let spec = ncspec(5, 8);
        let x = Series::var(&spec, "x");
        let acx = NcPoly::word(&spec, [1, 0, 1, 0], x.clone());
        let lhs = q_exp_nc(&acx).eval();
        let uv = Poly::monomial(spec.ring(), &[("u", 1), ("v", 1)], rat_int(1));
        let rhs = q_exp(&x.scale_poly(&uv));
        assert_eq!(lhs, rhs);
    }
}
