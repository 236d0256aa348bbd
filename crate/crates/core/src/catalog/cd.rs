//! Identities for sequence pairs related by the binomial transform
//! d_n = sum C(n,i) c_i: the two-index symmetry, three weighted transform
//! identities with free parameters a and b, the a = -1 special case, and the
//! underlying polynomial identities in u and v = 1 + u.
//!
//! Each identity shape is instantiated once per registered pair, so one
//! theorem produces a family of catalog entries. Pair values arrive in
//! cleared form: both sequences are premultiplied by a clearing factor that
//! depends only on the outer order, which keeps rational-valued pairs
//! polynomial without changing any of the identities.

use std::sync::Arc;

use crate::poly::{Poly, PolyRing};
use crate::rat::{binomial, rat_int, Rat};
use crate::seq::{binom_poly, cd_pairs, CdPair};
use crate::series::{Series, VarSpec};

use super::{cap, int_pow, CapMap, IdentityEntry};

fn sign_of(k: usize) -> Rat {
    if k % 2 == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

fn cd0(pair: &CdPair, cm: &CapMap) -> (Series, Series) {
    let (cm_, cn) = (cap(cm, "m"), cap(cm, "n"));
    let spec = VarSpec::new(&pair.ring, &[("m", cm_), ("n", cn)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for m in 0..=cm_ as usize {
        for n in 0..=cn as usize {
            let outer = m + n;
            let at = [("m", m as u32), ("n", n as u32)];
            let mut l = Poly::zero(&pair.ring);
            for i in 0..=m {
                l = &l + &pair.c_at(n + i, outer).scale(&Rat::from(binomial(m, i)));
            }
            lhs = lhs.add(&Series::monomial(&spec, &at, l));
            let mut r = Poly::zero(&pair.ring);
            for j in 0..=n {
                let w = sign_of(n - j) * Rat::from(binomial(n, j));
                r = &r + &pair.d_at(m + j, outer).scale(&w);
            }
            rhs = rhs.add(&Series::monomial(&spec, &at, r));
        }
    }
    (lhs, rhs)
}

fn cd1(pair: &CdPair, cm: &CapMap) -> (Series, Series) {
    let cn = cap(cm, "n");
    let ring = pair.ring.extend(&["a", "b"]);
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let a = Poly::var(&ring, "a");
    let b = Poly::var(&ring, "b");
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let at = [("n", n as u32)];
        let mut l = Poly::zero(&ring);
        for i in 0..=n {
            let w = &binom_poly(&a, i) * &binom_poly(&b, n - i);
            l = &l + &(&w * &pair.d_at(i, n).promote(&ring));
        }
        lhs = lhs.add(&Series::monomial(&spec, &at, l));
        let mut r = Poly::zero(&ring);
        for j in 0..=n {
            let abj = &(&a + &b) - &Poly::int(&ring, j as i64);
            let w = &binom_poly(&a, j) * &binom_poly(&abj, n - j);
            r = &r + &(&w * &pair.c_at(j, n).promote(&ring));
        }
        rhs = rhs.add(&Series::monomial(&spec, &at, r));
    }
    (lhs, rhs)
}

fn cd2(pair: &CdPair, cm: &CapMap) -> (Series, Series) {
    let cn = cap(cm, "n");
    let ring = pair.ring.extend(&["a"]);
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let a = Poly::var(&ring, "a");
    let two_a = a.scale(&rat_int(2));
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let at = [("n", n as u32)];
        let mut l = Poly::zero(&ring);
        for i in 0..=n {
            let head = &two_a - &Poly::int(&ring, 2 * i as i64);
            let w = (&binom_poly(&a, i) * &binom_poly(&head, n - i)).scale(&int_pow(-2, i));
            l = &l + &(&w * &pair.d_at(i, n).promote(&ring));
        }
        lhs = lhs.add(&Series::monomial(&spec, &at, l));
        let mut r = Poly::zero(&ring);
        for j in 0..=n / 2 {
            let w = binom_poly(&a, n - j)
                .scale(&(Rat::from(binomial(n - j, j)) * int_pow(-2, n - 2 * j)));
            r = &r + &(&w * &pair.c_at(n - 2 * j, n).promote(&ring));
        }
        rhs = rhs.add(&Series::monomial(&spec, &at, r));
    }
    (lhs, rhs)
}

fn cd3(pair: &CdPair, cm: &CapMap) -> (Series, Series) {
    let cn = cap(cm, "n");
    let ring = pair.ring.extend(&["a"]);
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let a = Poly::var(&ring, "a");
    let two_a = a.scale(&rat_int(2));
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let at = [("n", n as u32)];
        let mut l = Poly::zero(&ring);
        for i in 0..=n {
            let head = &two_a - &Poly::int(&ring, 2 * i as i64);
            let w = (&binom_poly(&a, i) * &binom_poly(&head, n - i)).scale(&int_pow(-4, i));
            l = &l + &(&w * &pair.d_at(i, n).promote(&ring));
        }
        lhs = lhs.add(&Series::monomial(&spec, &at, l));
        let mut r = Poly::zero(&ring);
        for j in 0..=n {
            let head = &two_a - &Poly::int(&ring, 2 * j as i64);
            let w = (&binom_poly(&a, j) * &binom_poly(&head, n - j)).scale(&int_pow(4, j));
            r = &r + &(&w * &pair.c_at(j, n).promote(&ring));
        }
        rhs = rhs.add(&Series::monomial(&spec, &at, r.scale(&sign_of(n))));
    }
    (lhs, rhs)
}

fn cd_neg1(pair: &CdPair, cm: &CapMap) -> (Series, Series) {
    let cn = cap(cm, "n");
    let ring = pair.ring.extend(&["b"]);
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let b = Poly::var(&ring, "b");
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let at = [("n", n as u32)];
        let mut l = Poly::zero(&ring);
        for i in 0..=n {
            let w = binom_poly(&b, n - i).scale(&sign_of(i));
            l = &l + &(&w * &pair.d_at(i, n).promote(&ring));
        }
        lhs = lhs.add(&Series::monomial(&spec, &at, l));
        let n_minus_b = &Poly::int(&ring, n as i64) - &b;
        let mut r = Poly::zero(&ring);
        for j in 0..=n {
            let w = binom_poly(&n_minus_b, n - j);
            r = &r + &(&w * &pair.c_at(j, n).promote(&ring));
        }
        rhs = rhs.add(&Series::monomial(&spec, &at, r.scale(&sign_of(n))));
    }
    (lhs, rhs)
}

fn uv_binomial(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "a", "b"]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let u = Poly::var(&ring, "u");
    let v = &u + &Poly::one(&ring);
    let a = Poly::var(&ring, "a");
    let b = Poly::var(&ring, "b");
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let at = [("n", n as u32)];
        let mut l = Poly::zero(&ring);
        for i in 0..=n {
            let w = &binom_poly(&a, i) * &binom_poly(&b, n - i);
            l = &l + &(&w * &v.pow(i as u32));
        }
        lhs = lhs.add(&Series::monomial(&spec, &at, l));
        let mut r = Poly::zero(&ring);
        for j in 0..=n {
            let abj = &(&a + &b) - &Poly::int(&ring, j as i64);
            let w = &binom_poly(&a, j) * &binom_poly(&abj, n - j);
            r = &r + &(&w * &u.pow(j as u32));
        }
        rhs = rhs.add(&Series::monomial(&spec, &at, r));
    }
    (lhs, rhs)
}

fn uv_quadratic(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "a"]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let u = Poly::var(&ring, "u");
    let v = &u + &Poly::one(&ring);
    let a = Poly::var(&ring, "a");
    let two_a = a.scale(&rat_int(2));
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let at = [("n", n as u32)];
        let mut l = Poly::zero(&ring);
        for i in 0..=n {
            let head = &two_a - &Poly::int(&ring, 2 * i as i64);
            let w = &binom_poly(&a, i) * &binom_poly(&head, n - i);
            l = &l + &(&w * &v.pow(i as u32)).scale(&int_pow(-2, i));
        }
        lhs = lhs.add(&Series::monomial(&spec, &at, l));
        let mut r = Poly::zero(&ring);
        for j in 0..=n / 2 {
            let w = binom_poly(&a, n - j)
                .scale(&(Rat::from(binomial(n - j, j)) * int_pow(-2, n - 2 * j)));
            r = &r + &(&w * &u.pow((n - 2 * j) as u32));
        }
        rhs = rhs.add(&Series::monomial(&spec, &at, r));
    }
    (lhs, rhs)
}

fn uv_quartic(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "a"]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let u = Poly::var(&ring, "u");
    let v = &u + &Poly::one(&ring);
    let a = Poly::var(&ring, "a");
    let two_a = a.scale(&rat_int(2));
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let at = [("n", n as u32)];
        let mut l = Poly::zero(&ring);
        for i in 0..=n {
            let head = &two_a - &Poly::int(&ring, 2 * i as i64);
            let w = &binom_poly(&a, i) * &binom_poly(&head, n - i);
            l = &l + &(&w * &v.pow(i as u32)).scale(&int_pow(-4, i));
        }
        lhs = lhs.add(&Series::monomial(&spec, &at, l));
        let mut r = Poly::zero(&ring);
        for j in 0..=n {
            let head = &two_a - &Poly::int(&ring, 2 * j as i64);
            let w = &binom_poly(&a, j) * &binom_poly(&head, n - j);
            r = &r + &(&w * &u.pow(j as u32)).scale(&int_pow(4, j));
        }
        rhs = rhs.add(&Series::monomial(&spec, &at, r.scale(&sign_of(n))));
    }
    (lhs, rhs)
}

pub(crate) fn entries() -> Vec<IdentityEntry> {
    let mut out = Vec::new();
    for pair in cd_pairs() {
        let pair = Arc::new(pair);
        let p = pair.clone();
        out.push(IdentityEntry::new(
            format!("cd0-{}", pair.id),
            format!(
                "two-index transform symmetry over (m, n) for the {} pair",
                pair.id
            ),
            &[("m", 6), ("n", 6)],
            move |cm| cd0(&p, cm),
        ));
        let p = pair.clone();
        out.push(IdentityEntry::new(
            format!("cd1-{}", pair.id),
            format!(
                "linear transform identity with parameters a, b for the {} pair",
                pair.id
            ),
            &[("n", 9)],
            move |cm| cd1(&p, cm),
        ));
        let p = pair.clone();
        out.push(IdentityEntry::new(
            format!("cd2-{}", pair.id),
            format!(
                "quadratic transform identity with weight (-2)^i for the {} pair",
                pair.id
            ),
            &[("n", 9)],
            move |cm| cd2(&p, cm),
        ));
        let p = pair.clone();
        out.push(IdentityEntry::new(
            format!("cd3-{}", pair.id),
            format!(
                "quartic transform identity with weight (-4)^i for the {} pair",
                pair.id
            ),
            &[("n", 9)],
            move |cm| cd3(&p, cm),
        ));
        let p = pair.clone();
        out.push(IdentityEntry::new(
            format!("cd-neg1-{}", pair.id),
            format!(
                "a = -1 special case of the linear transform identity for the {} pair",
                pair.id
            ),
            &[("n", 9)],
            move |cm| cd_neg1(&p, cm),
        ));
    }
    out.push(IdentityEntry::new(
        "uv-binomial",
        "polynomial identity behind the linear transform, with v = 1 + u",
        &[("n", 10)],
        uv_binomial,
    ));
    out.push(IdentityEntry::new(
        "uv-quadratic",
        "polynomial identity behind the quadratic transform, with v = 1 + u",
        &[("n", 10)],
        uv_quadratic,
    ));
    out.push(IdentityEntry::new(
        "uv-quartic",
        "polynomial identity behind the quartic transform, with v = 1 + u",
        &[("n", 10)],
        uv_quartic,
    ));
    out
}
