//! q-series identities: the q-binomial theorem, q-exponential shifts, and
//! the bilinear Rogers-Szego sum, the latter both in closed form and by
//! normally ordering a product of noncommutative q-exponentials.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{cap, lift, CapMap, IdentityEntry};
use crate::poly::{Poly, PolyRing};
use crate::qalg::{q_exp, q_exp_nc, q_pochhammer, q_pochhammer_inf, qbinom_poly, NcPoly};
use crate::series::{Series, VarSpec};

fn q_binomial_theorem(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["a"]);
    let (cx, cq) = (cap(cm, "x"), cap(cm, "q"));
    let spec = VarSpec::new(&ring, &[("x", cx), ("q", cq)]);
    let a = Poly::var(&ring, "a");
    let a_const = Series::constant(&spec, a.clone());
    let x = Series::var(&spec, "x");
    let q = Series::var(&spec, "q");

    let mut lhs = Series::zero(&spec);
    let mut inv_qfact = Series::one(&spec);
    for n in 0..=cx {
        if n > 0 {
            inv_qfact = inv_qfact.mul(&Series::one(&spec).sub(&q.pow(n)).invert());
        }
        lhs = lhs.add(&q_pochhammer(&a_const, n).mul(&inv_qfact).mul(&x.pow(n)));
    }

    let rhs = q_pochhammer_inf(&x.scale_poly(&a)).mul(&q_pochhammer_inf(&x).invert());
    (lhs, rhs)
}

fn q_exp_pochhammer(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cx, cq) = (cap(cm, "x"), cap(cm, "q"));
    let spec = VarSpec::new(&ring, &[("x", cx), ("q", cq)]);
    let x = Series::var(&spec, "x");
    let lhs = q_exp(&x).mul(&q_pochhammer_inf(&x));
    (lhs, Series::one(&spec))
}

fn q_exp_shift(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cx, cq, cj) = (cap(cm, "x"), cap(cm, "q"), cap(cm, "j"));
    let spec = VarSpec::new(&ring, &[("x", cx), ("q", cq)]);
    let x = Series::var(&spec, "x");
    let q = Series::var(&spec, "q");
    let e = q_exp(&x);

    let dspec = VarSpec::new(&ring, &[("x", cx), ("q", cq), ("j", cj)]);
    let mut lhs = Series::zero(&dspec);
    let mut rhs = Series::zero(&dspec);
    for j in 0..=cj {
        let shifted = q_exp(&x.mul(&q.pow(j)));
        lhs = lhs.add(&lift(&dspec, &shifted, &[("j", j)]));
        let closed = q_pochhammer(&x, j).mul(&e);
        rhs = rhs.add(&lift(&dspec, &closed, &[("j", j)]));
    }
    (lhs, rhs)
}

/// Sum of R_n(u) R_n(v) x^n/(q)_n over n up to the x cap, with the
/// Rogers-Szego polynomials assembled from q-binomial coefficients.
fn rogers_szego_sum(spec: &Arc<VarSpec>) -> Series {
    let ring = spec.ring().clone();
    let qring = PolyRing::new(&["q"]);
    let mut move_q = BTreeMap::new();
    move_q.insert("q".to_string(), "q".to_string());
    let u = Poly::var(&ring, "u");
    let v = Poly::var(&ring, "v");
    let x = Series::var(spec, "x");
    let q = Series::var(spec, "q");

    let rn = |sym: &Poly, n: u32| -> Series {
        let mut out = Series::zero(spec);
        for k in 0..=n {
            let qb = Series::from_poly(spec, &qbinom_poly(&qring, n, k), &move_q);
            out = out.add(&qb.scale_poly(&sym.pow(k)));
        }
        out
    };

    let cx = spec.cap("x");
    let mut sum = Series::zero(spec);
    let mut inv_qfact = Series::one(spec);
    for n in 0..=cx {
        if n > 0 {
            inv_qfact = inv_qfact.mul(&Series::one(spec).sub(&q.pow(n)).invert());
        }
        sum = sum.add(&rn(&u, n).mul(&rn(&v, n)).mul(&inv_qfact).mul(&x.pow(n)));
    }
    sum
}

fn rogers_szego_closed(spec: &Arc<VarSpec>) -> Series {
    let ring = spec.ring().clone();
    let u = Poly::var(&ring, "u");
    let v = Poly::var(&ring, "v");
    let x = Series::var(spec, "x");
    let uv = &u * &v;
    let num = q_pochhammer_inf(&x.pow(2).scale_poly(&uv));
    let den = q_pochhammer_inf(&x.scale_poly(&uv))
        .mul(&q_pochhammer_inf(&x.scale_poly(&u)))
        .mul(&q_pochhammer_inf(&x.scale_poly(&v)))
        .mul(&q_pochhammer_inf(&x));
    num.mul(&den.invert())
}

fn rogers_szego_bilinear(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "v"]);
    let (cx, cq) = (cap(cm, "x"), cap(cm, "q"));
    let spec = VarSpec::new(&ring, &[("x", cx), ("q", cq)]);
    (rogers_szego_sum(&spec), rogers_szego_closed(&spec))
}

fn rogers_szego_nc(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "v"]);
    let (cx, cq) = (cap(cm, "x"), cap(cm, "q"));
    let spec = VarSpec::new(&ring, &[("x", cx), ("q", cq)]);
    let x = Series::var(&spec, "x");

    let a = NcPoly::letter(&spec, 0);
    let b = NcPoly::letter(&spec, 1);
    let c = NcPoly::letter(&spec, 2);
    let d = NcPoly::letter(&spec, 3);
    let factor = |l: &NcPoly, r: &NcPoly| q_exp_nc(&l.mul(r).scale(&x));
    let product = factor(&a, &c)
        .mul(&factor(&a, &d))
        .mul(&factor(&b, &c))
        .mul(&factor(&b, &d));
    (rogers_szego_sum(&spec), product.eval())
}

pub(crate) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "q-binomial-theorem",
            "sum of (a)_n/(q)_n x^n equals (ax)_inf/(x)_inf",
            &[("x", 5), ("q", 8)],
            q_binomial_theorem,
        ),
        IdentityEntry::new(
            "q-exp-pochhammer",
            "the q-exponential e(x) is the reciprocal of (x)_inf",
            &[("x", 5), ("q", 8)],
            q_exp_pochhammer,
        ),
        IdentityEntry::new(
            "q-exp-shift",
            "e(q^j x) = (x)_j e(x), packed over the shift j",
            &[("x", 5), ("q", 8), ("j", 3)],
            q_exp_shift,
        ),
        IdentityEntry::new(
            "rogers-szego-bilinear",
            "bilinear Rogers-Szego sum against its infinite-product closed form",
            &[("x", 4), ("q", 8)],
            rogers_szego_bilinear,
        ),
        IdentityEntry::new(
            "rogers-szego-nc",
            "bilinear Rogers-Szego sum against the normally ordered product of q-exponentials",
            &[("x", 4), ("q", 8)],
            rogers_szego_nc,
        ),
    ]
}
