//! Identities for delta pairs: umbrae A, B with eval(A^m B^n) = [m = n] m!,
//! their shift and quadratic rules, and the Carlitz and Zeilberger
//! two-index Hermite families built from one or two such pairs.
//!
//! The shift rule is stated here as eval(e^{Ar+Bs} f(A,B)) =
//! e^{rs} eval(f(A+s, B+r)): multiplying by e^{Bs} shifts A by s and
//! multiplying by e^{Ar} shifts B by r, since each umbra pairs against the
//! other.

use std::sync::Arc;

use num::Zero;

use super::{cap, lift, CapMap, IdentityEntry};
use crate::poly::{Poly, PolyRing};
use crate::rat::{factorial_rat, rat, rat_int, Rat};
use crate::series::{Series, VarSpec};
use crate::umbra::{ueval, umbral_exp, umbral_spec, UmbraFamily};

fn ab_pair_egf(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(&ring, &[("x", cx), ("y", cy)], &[("A", 1, 0), ("B", 1, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");

    let arg = Series::monomial(&uspec, &[("A", 1), ("x", 1)], Poly::one(&ring)).add(
        &Series::monomial(&uspec, &[("B", 1), ("y", 1)], Poly::one(&ring)),
    );
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let rhs = Series::var(&ospec, "x").mul(&Series::var(&ospec, "y")).exp();
    (lhs, rhs)
}

fn ab_pair_shift(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let caps = [
        ("r", cap(cm, "r")),
        ("s", cap(cm, "s")),
        ("u", cap(cm, "u")),
        ("v", cap(cm, "v")),
    ];
    let uspec = umbral_spec(&ring, &caps, &[("A", 1, 0), ("B", 1, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let one = || Poly::one(&ring);

    let arg = Series::monomial(&uspec, &[("A", 1), ("r", 1)], one())
        .add(&Series::monomial(&uspec, &[("B", 1), ("s", 1)], one()))
        .add(&Series::monomial(&uspec, &[("A", 1), ("u", 1)], one()))
        .add(&Series::monomial(&uspec, &[("B", 1), ("v", 1)], one()));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let arg2 = Series::monomial(&uspec, &[("A", 1), ("u", 1)], one()).add(
        &Series::monomial(&uspec, &[("B", 1), ("v", 1)], one()),
    );
    let euv = ueval(&umbral_exp(&arg2, &["A", "B"]), &fam);
    let ospec = VarSpec::new(&ring, &caps);
    let prefactor = Series::monomial(&ospec, &[("r", 1), ("s", 1)], one())
        .add(&Series::monomial(&ospec, &[("s", 1), ("u", 1)], one()))
        .add(&Series::monomial(&ospec, &[("r", 1), ("v", 1)], one()))
        .exp();
    (lhs, prefactor.mul(&euv))
}

fn ab_pair_product_egf(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let caps = [("x", cap(cm, "x")), ("y", cap(cm, "y")), ("z", cap(cm, "z"))];
    let uspec = umbral_spec(&ring, &caps, &[("A", 2, 0), ("B", 2, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let one = || Poly::one(&ring);

    let arg = Series::monomial(&uspec, &[("A", 1), ("x", 1)], one())
        .add(&Series::monomial(&uspec, &[("B", 1), ("y", 1)], one()))
        .add(&Series::monomial(&uspec, &[("A", 1), ("B", 1), ("z", 1)], one()));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &caps);
    let inv_z = Series::one(&ospec).sub(&Series::var(&ospec, "z")).invert();
    let rhs = inv_z.mul(
        &Series::var(&ospec, "x")
            .mul(&Series::var(&ospec, "y"))
            .mul(&inv_z)
            .exp(),
    );
    (lhs, rhs)
}

fn ab_pair_quadratic_egf(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let caps = [
        ("v", cap(cm, "v")),
        ("w", cap(cm, "w")),
        ("x", cap(cm, "x")),
        ("y", cap(cm, "y")),
        ("z", cap(cm, "z")),
    ];
    let uspec = umbral_spec(&ring, &caps, &[("A", 2, 0), ("B", 2, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let one = || Poly::one(&ring);

    let arg = Series::monomial(&uspec, &[("A", 1), ("v", 1)], one())
        .add(&Series::monomial(&uspec, &[("B", 1), ("w", 1)], one()))
        .add(&Series::monomial(&uspec, &[("A", 2), ("x", 1)], one()))
        .add(&Series::monomial(&uspec, &[("A", 1), ("B", 1), ("y", 1)], one()))
        .add(&Series::monomial(&uspec, &[("B", 2), ("z", 1)], one()));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &caps);
    let v = Series::var(&ospec, "v");
    let w = Series::var(&ospec, "w");
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let z = Series::var(&ospec, "z");
    let one_minus_y = Series::one(&ospec).sub(&y);
    let d = one_minus_y.pow(2).sub(&x.mul(&z).scale_rat(&rat_int(4)));
    let num = v
        .mul(&w)
        .mul(&one_minus_y)
        .add(&v.pow(2).mul(&z))
        .add(&w.pow(2).mul(&x));
    let rhs = d
        .pow_sym(&Poly::constant(&ring, rat(-1, 2)))
        .mul(&num.mul(&d.invert()).exp());
    (lhs, rhs)
}

fn carlitz_egf(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "v"]);
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(&ring, &[("x", cx), ("y", cy)], &[("A", 1, 0), ("B", 1, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let u = Poly::var(&ring, "u");
    let v = Poly::var(&ring, "v");

    let arg = Series::monomial(&uspec, &[("A", 1), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(&uspec, &[("x", 1)], u.clone()))
        .add(&Series::monomial(&uspec, &[("B", 1), ("y", 1)], Poly::one(&ring)))
        .add(&Series::monomial(&uspec, &[("y", 1)], v.clone()));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let rhs = x
        .scale_poly(&u)
        .add(&y.scale_poly(&v))
        .add(&x.mul(&y))
        .exp();
    (lhs, rhs)
}

fn carlitz_bilinear(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u1", "v1", "u2", "v2"]);
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(
        &ring,
        &[("x", cx), ("y", cy)],
        &[("A1", 1, 0), ("B1", 1, 0), ("A2", 1, 0), ("B2", 1, 0)],
    );
    let fam = UmbraFamily::delta_pair("A1", "B1").product(UmbraFamily::delta_pair("A2", "B2"));
    let u1 = Poly::var(&ring, "u1");
    let v1 = Poly::var(&ring, "v1");
    let u2 = Poly::var(&ring, "u2");
    let v2 = Poly::var(&ring, "v2");

    let arg = Series::monomial(&uspec, &[("A1", 1), ("A2", 1), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(&uspec, &[("A1", 1), ("x", 1)], u2.clone()))
        .add(&Series::monomial(&uspec, &[("A2", 1), ("x", 1)], u1.clone()))
        .add(&Series::monomial(&uspec, &[("x", 1)], &u1 * &u2))
        .add(&Series::monomial(
            &uspec,
            &[("B1", 1), ("B2", 1), ("y", 1)],
            Poly::one(&ring),
        ))
        .add(&Series::monomial(&uspec, &[("B1", 1), ("y", 1)], v2.clone()))
        .add(&Series::monomial(&uspec, &[("B2", 1), ("y", 1)], v1.clone()))
        .add(&Series::monomial(&uspec, &[("y", 1)], &v1 * &v2));
    let lhs = ueval(&umbral_exp(&arg, &["A1", "B1", "A2", "B2"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let inv = Series::one(&ospec).sub(&x.mul(&y)).invert();
    let num = x
        .scale_poly(&(&u1 * &u2))
        .add(&y.scale_poly(&(&v1 * &v2)))
        .add(&x.mul(&y).scale_poly(&(&(&u1 * &v1) + &(&u2 * &v2))));
    let rhs = inv.mul(&num.mul(&inv).exp());
    (lhs, rhs)
}

fn zeilberger_egf(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["w"]);
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(&ring, &[("x", cx), ("y", cy)], &[("A", 1, 0), ("B", 1, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let w = Poly::var(&ring, "w");

    let arg = Series::monomial(&uspec, &[("A", 1), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(&uspec, &[("x", 1)], Poly::one(&ring)))
        .add(&Series::monomial(&uspec, &[("B", 1), ("y", 1)], w.clone()))
        .add(&Series::monomial(&uspec, &[("y", 1)], Poly::one(&ring)));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let rhs = x.add(&y).add(&x.mul(&y).scale_poly(&w)).exp();
    (lhs, rhs)
}

fn zeilberger_bilinear(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "v"]);
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(
        &ring,
        &[("x", cx), ("y", cy)],
        &[("A1", 1, 0), ("B1", 1, 0), ("A2", 1, 0), ("B2", 1, 0)],
    );
    let fam = UmbraFamily::delta_pair("A1", "B1").product(UmbraFamily::delta_pair("A2", "B2"));
    let u = Poly::var(&ring, "u");
    let v = Poly::var(&ring, "v");
    let one = || Poly::one(&ring);

    let arg = Series::monomial(&uspec, &[("A1", 1), ("A2", 1), ("x", 1)], one())
        .add(&Series::monomial(&uspec, &[("A1", 1), ("x", 1)], one()))
        .add(&Series::monomial(&uspec, &[("A2", 1), ("x", 1)], one()))
        .add(&Series::monomial(&uspec, &[("x", 1)], one()))
        .add(&Series::monomial(
            &uspec,
            &[("B1", 1), ("B2", 1), ("y", 1)],
            &u * &v,
        ))
        .add(&Series::monomial(&uspec, &[("B1", 1), ("y", 1)], u.clone()))
        .add(&Series::monomial(&uspec, &[("B2", 1), ("y", 1)], v.clone()))
        .add(&Series::monomial(&uspec, &[("y", 1)], one()));
    let lhs = ueval(&umbral_exp(&arg, &["A1", "B1", "A2", "B2"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let inv = Series::one(&ospec)
        .sub(&x.mul(&y).scale_poly(&(&u * &v)))
        .invert();
    let num = x.add(&y).add(&x.mul(&y).scale_poly(&(&u + &v)));
    let rhs = inv.mul(&num.mul(&inv).exp());
    (lhs, rhs)
}

fn pfaff_saalschutz(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cx, cy, ci, cj) = (cap(cm, "x"), cap(cm, "y"), cap(cm, "i"), cap(cm, "j"));
    let aring = PolyRing::new(&["A1", "B1", "A2", "B2"]);
    let fam = UmbraFamily::delta_pair("A1", "B1").product(UmbraFamily::delta_pair("A2", "B2"));
    let a1 = Poly::var(&aring, "A1");
    let a2 = Poly::var(&aring, "A2");
    let b1_one = &Poly::one(&aring) + &Poly::var(&aring, "B1");
    let b2_one = &Poly::one(&aring) + &Poly::var(&aring, "B2");

    let dspec = VarSpec::new(&ring, &[("x", cx), ("y", cy), ("i", ci), ("j", cj)]);
    let xyspec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&xyspec, "x");
    let y = Series::var(&xyspec, "y");
    let inv = Series::one(&xyspec).sub(&x.mul(&y)).invert();
    let one_x = Series::one(&xyspec).add(&x);
    let one_y = Series::one(&xyspec).add(&y);

    let mut lhs = Series::zero(&dspec);
    let mut rhs = Series::zero(&dspec);
    for i in 0..=ci {
        for j in 0..=cj {
            for m in 0..=cx {
                for n in 0..=cy {
                    let p = &(&a1.pow(m) * &b1_one.pow(n + j)) * &(&a2.pow(n) * &b2_one.pow(m + i));
                    let val = eval_moments(&p, &fam, &ring);
                    if val.is_zero() {
                        continue;
                    }
                    let coeff = val / (factorial_rat(m as usize) * factorial_rat(n as usize));
                    lhs = lhs.add(&Series::monomial(
                        &dspec,
                        &[("x", m), ("y", n), ("i", i), ("j", j)],
                        Poly::constant(&ring, coeff),
                    ));
                }
            }
            let closed = one_x
                .pow(j)
                .mul(&one_y.pow(i))
                .mul(&inv.pow(i + j + 1));
            rhs = rhs.add(&lift(&dspec, &closed, &[("i", i), ("j", j)]));
        }
    }
    (lhs, rhs)
}

/// Apply the family's joint moments to a polynomial whose ring consists of
/// exactly the family's symbols, in order.
fn eval_moments(p: &Poly, fam: &UmbraFamily, scalar: &Arc<PolyRing>) -> Rat {
    let syms = fam.symbols();
    assert_eq!(
        p.ring().symbols().iter().map(String::as_str).collect::<Vec<_>>(),
        syms,
        "moment evaluation needs the ring symbols to match the family"
    );
    let mut acc = Rat::zero();
    for (e, c) in p.terms() {
        let m = fam.joint_moment(scalar, e);
        acc += c * m.expect_constant();
    }
    acc
}

fn zeil_doetsch_rows(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u"]);
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(&ring, &[("x", cx), ("y", cy)], &[("A", 2, 0), ("B", 1, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let u = Poly::var(&ring, "u");
    let one = || Poly::one(&ring);

    let arg = Series::monomial(&uspec, &[("x", 1)], one())
        .add(&Series::monomial(&uspec, &[("A", 1), ("x", 1)], Poly::int(&ring, 2)))
        .add(&Series::monomial(&uspec, &[("A", 2), ("x", 1)], one()))
        .add(&Series::monomial(&uspec, &[("y", 1)], one()))
        .add(&Series::monomial(&uspec, &[("B", 1), ("y", 1)], u.clone()));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let rhs = x
        .add(&y)
        .add(&x.mul(&y).scale_poly(&u.scale(&rat_int(2))))
        .add(&x.mul(&y.pow(2)).scale_poly(&u.pow(2)))
        .exp();
    (lhs, rhs)
}

fn zeil_doetsch_even(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u"]);
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(&ring, &[("x", cx), ("y", cy)], &[("A", 2, 0), ("B", 2, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let u = Poly::var(&ring, "u");
    let one = || Poly::one(&ring);

    let arg = Series::monomial(&uspec, &[("x", 1)], one())
        .add(&Series::monomial(&uspec, &[("A", 1), ("x", 1)], Poly::int(&ring, 2)))
        .add(&Series::monomial(&uspec, &[("A", 2), ("x", 1)], one()))
        .add(&Series::monomial(&uspec, &[("y", 1)], one()))
        .add(&Series::monomial(
            &uspec,
            &[("B", 1), ("y", 1)],
            u.scale(&rat_int(2)),
        ))
        .add(&Series::monomial(&uspec, &[("B", 2), ("y", 1)], u.pow(2)));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let base = Series::one(&ospec).sub(
        &x.mul(&y)
            .scale_poly(&u.pow(2).scale(&rat_int(4))),
    );
    let num = x
        .add(&y)
        .add(&x.mul(&y).scale_poly(&u.scale(&rat_int(4))));
    let rhs = base
        .pow_sym(&Poly::constant(&ring, rat(-1, 2)))
        .mul(&num.mul(&base.invert()).exp());
    (lhs, rhs)
}

fn zeil_doetsch_diagonal(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u"]);
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("A", 1, 0), ("B", 1, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let u = Poly::var(&ring, "u");
    let one = || Poly::one(&ring);

    let arg = Series::monomial(&uspec, &[("x", 1)], one())
        .add(&Series::monomial(&uspec, &[("A", 1), ("x", 1)], one()))
        .add(&Series::monomial(&uspec, &[("B", 1), ("x", 1)], u.clone()))
        .add(&Series::monomial(&uspec, &[("A", 1), ("B", 1), ("x", 1)], u.clone()));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    let x = Series::var(&ospec, "x");
    let inv = Series::one(&ospec).sub(&x.scale_poly(&u)).invert();
    let rhs = inv.mul(&x.mul(&inv).exp());
    (lhs, rhs)
}

fn zeil_doetsch_general(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u"]);
    let caps = [
        ("v", cap(cm, "v")),
        ("w", cap(cm, "w")),
        ("x", cap(cm, "x")),
        ("y", cap(cm, "y")),
        ("z", cap(cm, "z")),
    ];
    let uspec = umbral_spec(&ring, &caps, &[("A", 2, 0), ("B", 2, 0)]);
    let fam = UmbraFamily::delta_pair("A", "B");
    let u = Poly::var(&ring, "u");
    let two = rat_int(2);
    let one = || Poly::one(&ring);

    let arg = Series::monomial(&uspec, &[("v", 1)], one())
        .add(&Series::monomial(&uspec, &[("A", 1), ("v", 1)], one()))
        .add(&Series::monomial(&uspec, &[("w", 1)], one()))
        .add(&Series::monomial(&uspec, &[("B", 1), ("w", 1)], u.clone()))
        .add(&Series::monomial(&uspec, &[("x", 1)], one()))
        .add(&Series::monomial(&uspec, &[("A", 1), ("x", 1)], Poly::int(&ring, 2)))
        .add(&Series::monomial(&uspec, &[("A", 2), ("x", 1)], one()))
        .add(&Series::monomial(&uspec, &[("y", 1)], one()))
        .add(&Series::monomial(&uspec, &[("B", 1), ("y", 1)], u.scale(&two)))
        .add(&Series::monomial(&uspec, &[("B", 2), ("y", 1)], u.pow(2)))
        .add(&Series::monomial(&uspec, &[("z", 1)], one()))
        .add(&Series::monomial(&uspec, &[("A", 1), ("z", 1)], one()))
        .add(&Series::monomial(&uspec, &[("B", 1), ("z", 1)], u.clone()))
        .add(&Series::monomial(
            &uspec,
            &[("A", 1), ("B", 1), ("z", 1)],
            u.clone(),
        ));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &caps);
    let v = Series::var(&ospec, "v");
    let w = Series::var(&ospec, "w");
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let z = Series::var(&ospec, "z");
    let one_uz = Series::one(&ospec).sub(&z.scale_poly(&u));
    let d = one_uz.pow(2).sub(
        &x.mul(&y)
            .scale_poly(&u.pow(2).scale(&rat_int(4))),
    );
    let uw_sq = Series::one(&ospec).add(&w.scale_poly(&u)).pow(2);
    let uv_sq = Series::one(&ospec).add(&v.scale_poly(&u)).pow(2);
    let num = uw_sq
        .mul(&x)
        .add(&uv_sq.mul(&y))
        .add(&x.mul(&y).scale_poly(&u.scale(&rat_int(4))))
        .add(&one_uz.mul(&v.add(&w).add(&z).add(&v.mul(&w).scale_poly(&u))));
    let rhs = d
        .pow_sym(&Poly::constant(&ring, rat(-1, 2)))
        .mul(&num.mul(&d.invert()).exp());
    (lhs, rhs)
}

pub(crate) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "ab-pair-egf",
            "defining evaluation eval(e^{Ax+By}) = e^{xy} of a delta pair",
            &[("x", 5), ("y", 5)],
            ab_pair_egf,
        ),
        IdentityEntry::new(
            "ab-pair-shift",
            "shift rule eval(e^{Ar+Bs} f(A,B)) = e^{rs} eval(f(A+s, B+r)) for f an exponential",
            &[("r", 3), ("s", 3), ("u", 3), ("v", 3)],
            ab_pair_shift,
        ),
        IdentityEntry::new(
            "ab-pair-product-egf",
            "eval(e^{Ax+By+ABz}) = (1-z)^{-1} e^{xy/(1-z)}",
            &[("x", 4), ("y", 4), ("z", 4)],
            ab_pair_product_egf,
        ),
        IdentityEntry::new(
            "ab-pair-quadratic-egf",
            "closed form for the exponential of a general quadratic in a delta pair",
            &[("v", 2), ("w", 2), ("x", 2), ("y", 2), ("z", 2)],
            ab_pair_quadratic_egf,
        ),
        IdentityEntry::new(
            "carlitz-egf",
            "two-variable Hermite sum H_{m,n}(u,v) x^m y^n/(m! n!) equals e^{ux+vy+xy}",
            &[("x", 5), ("y", 5)],
            carlitz_egf,
        ),
        IdentityEntry::new(
            "carlitz-bilinear",
            "bilinear sum of Carlitz two-variable Hermite polynomials over two delta pairs",
            &[("x", 5), ("y", 5)],
            carlitz_bilinear,
        ),
        IdentityEntry::new(
            "zeilberger-egf",
            "straight Hermite sum H_{m,n}(w) x^m y^n/(m! n!) equals e^{x+y+wxy}",
            &[("x", 5), ("y", 5)],
            zeilberger_egf,
        ),
        IdentityEntry::new(
            "zeilberger-bilinear",
            "bilinear sum of straight Hermite polynomials over two delta pairs",
            &[("x", 5), ("y", 5)],
            zeilberger_bilinear,
        ),
        IdentityEntry::new(
            "pfaff-saalschutz",
            "binomial double sum C(m+i,n) C(n+j,m) x^m y^n via moment evaluation, packed over i, j",
            &[("x", 5), ("y", 5), ("i", 3), ("j", 3)],
            pfaff_saalschutz,
        ),
        IdentityEntry::new(
            "zeil-doetsch-rows",
            "sum of H_{2m,n}(u) x^m y^n/(m! n!) equals e^{x+y+2uxy+u^2xy^2}",
            &[("x", 4), ("y", 4)],
            zeil_doetsch_rows,
        ),
        IdentityEntry::new(
            "zeil-doetsch-even",
            "sum of H_{2m,2n}(u) x^m y^n/(m! n!) in closed form",
            &[("x", 4), ("y", 4)],
            zeil_doetsch_even,
        ),
        IdentityEntry::new(
            "zeil-doetsch-diagonal",
            "diagonal sum of H_{m,m}(u) x^m/m! equals (1-ux)^{-1} e^{x/(1-ux)}",
            &[("x", 6)],
            zeil_doetsch_diagonal,
        ),
        IdentityEntry::new(
            "zeil-doetsch-general",
            "five-variable sum of H_{i+2k+m, j+2l+m}(u) covering all Doetsch-type specializations",
            &[("v", 2), ("w", 2), ("x", 2), ("y", 2), ("z", 2)],
            zeil_doetsch_general,
        ),
    ]
}
