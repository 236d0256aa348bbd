//! Hermite identities: the umbra M with eval(M^{2k}) = (-1)^k (2k)!/k! and
//! vanishing odd moments, its shift and quadratic rules, the even-index and
//! mixed-index sums, the triple-index sum, and the bilinear formula.

use std::sync::Arc;

use super::{cap, lift, CapMap, IdentityEntry};
use crate::poly::{Poly, PolyRing};
use crate::rat::{factorial_rat, rat, rat_int};
use crate::seq;
use crate::series::{Series, VarSpec};
use crate::umbra::{ueval, umbral_exp, umbral_spec, Umbra, UmbraFamily};

fn hermite_umbra(ring: &Arc<PolyRing>, name: &str, cap: u32) -> Umbra {
    let ring = ring.clone();
    Umbra::from_fn(name, cap, move |n| {
        if n % 2 == 1 {
            return Poly::zero(&ring);
        }
        let k = n / 2;
        let mut c = factorial_rat(n) / factorial_rat(k);
        if k % 2 == 1 {
            c = -c;
        }
        Poly::constant(&ring, c)
    })
}

fn hermite_square_egf(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("M", 2, 0)]);
    let fam = UmbraFamily::single(hermite_umbra(&ring, "M", 2 * cx));

    let arg = Series::monomial(&uspec, &[("M", 2), ("x", 1)], Poly::one(&ring));
    let lhs = ueval(&umbral_exp(&arg, &["M"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    let base = Series::one(&ospec).add(&Series::var(&ospec, "x").scale_rat(&rat_int(4)));
    let rhs = base.pow_sym(&Poly::constant(&ring, rat(-1, 2)));
    (lhs, rhs)
}

fn hermite_shift(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cy, cw) = (cap(cm, "y"), cap(cm, "w"));
    let uspec = umbral_spec(&ring, &[("y", cy), ("w", cw)], &[("M", 1, 0)]);
    let fam = UmbraFamily::single(hermite_umbra(&ring, "M", cy + cw));

    let arg = Series::monomial(&uspec, &[("M", 1), ("y", 1)], Poly::one(&ring)).add(
        &Series::monomial(&uspec, &[("M", 1), ("w", 1)], Poly::one(&ring)),
    );
    let lhs = ueval(&umbral_exp(&arg, &["M"]), &fam);

    let arg2 = Series::monomial(&uspec, &[("M", 1), ("w", 1)], Poly::one(&ring));
    let ew = ueval(&umbral_exp(&arg2, &["M"]), &fam);
    let ospec = VarSpec::new(&ring, &[("y", cy), ("w", cw)]);
    let gauss = Series::monomial(&ospec, &[("y", 2)], Poly::int(&ring, -1))
        .add(&Series::monomial(&ospec, &[("y", 1), ("w", 1)], Poly::int(&ring, -2)))
        .exp();
    (lhs, gauss.mul(&ew))
}

fn hermite_quadratic_egf(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(&ring, &[("x", cx), ("y", cy)], &[("M", 2, 0)]);
    let fam = UmbraFamily::single(hermite_umbra(&ring, "M", 2 * (cx + cy)));

    let arg = Series::monomial(&uspec, &[("M", 1), ("x", 1)], Poly::one(&ring)).add(
        &Series::monomial(&uspec, &[("M", 2), ("y", 1)], Poly::one(&ring)),
    );
    let lhs = ueval(&umbral_exp(&arg, &["M"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&ospec, "x");
    let base = Series::one(&ospec).add(&Series::var(&ospec, "y").scale_rat(&rat_int(4)));
    let rhs = base
        .pow_sym(&Poly::constant(&ring, rat(-1, 2)))
        .mul(&x.pow(2).scale_rat(&rat_int(-1)).mul(&base.invert()).exp());
    (lhs, rhs)
}

fn doetsch_arg(uspec: &Arc<VarSpec>, u: &Poly) -> Series {
    let ring = uspec.ring();
    Series::monomial(uspec, &[("M", 2), ("x", 1)], Poly::one(ring))
        .add(&Series::monomial(uspec, &[("M", 1), ("x", 1)], u.scale(&rat_int(4))))
        .add(&Series::monomial(uspec, &[("x", 1)], u.pow(2).scale(&rat_int(4))))
}

fn doetsch(cm: &CapMap) -> (Series, Series) {
    let ring = seq::hermite_ring();
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("M", 2, 0)]);
    let u = Poly::var(&ring, "u");
    let fam = UmbraFamily::single(hermite_umbra(&ring, "M", 2 * cx));

    let lhs = ueval(&umbral_exp(&doetsch_arg(&uspec, &u), &["M"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    let x = Series::var(&ospec, "x");
    let base = Series::one(&ospec).add(&x.scale_rat(&rat_int(4)));
    let rhs = base
        .pow_sym(&Poly::constant(&ring, rat(-1, 2)))
        .mul(&x.scale_poly(&u.pow(2).scale(&rat_int(4))).mul(&base.invert()).exp());
    (lhs, rhs)
}

fn doetsch_mixed(cm: &CapMap) -> (Series, Series) {
    let ring = seq::hermite_ring();
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(&ring, &[("x", cx), ("y", cy)], &[("M", 2, 0)]);
    let u = Poly::var(&ring, "u");
    let fam = UmbraFamily::single(hermite_umbra(&ring, "M", 2 * (cx + cy)));

    let arg = doetsch_arg(&uspec, &u)
        .add(&Series::monomial(&uspec, &[("M", 1), ("y", 1)], Poly::one(&ring)))
        .add(&Series::monomial(&uspec, &[("y", 1)], u.scale(&rat_int(2))));
    let lhs = ueval(&umbral_exp(&arg, &["M"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    let x = Series::var(&ospec, "x");
    let y = Series::var(&ospec, "y");
    let base = Series::one(&ospec).add(&x.scale_rat(&rat_int(4)));
    let num = x
        .scale_poly(&u.pow(2).scale(&rat_int(4)))
        .add(&y.scale_poly(&u.scale(&rat_int(2))))
        .sub(&y.pow(2));
    let rhs = base
        .pow_sym(&Poly::constant(&ring, rat(-1, 2)))
        .mul(&num.mul(&base.invert()).exp());
    (lhs, rhs)
}

fn doetsch_general(cm: &CapMap) -> (Series, Series) {
    let ring = seq::hermite_ring();
    let (cx, cn) = (cap(cm, "x"), cap(cm, "n"));
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("M", 2, cn)]);
    let u = Poly::var(&ring, "u");
    let fam = UmbraFamily::single(hermite_umbra(&ring, "M", 2 * cx + cn));

    let e = umbral_exp(&doetsch_arg(&uspec, &u), &["M"]);
    let mbase = Series::constant(&uspec, u.scale(&rat_int(2)))
        .add(&Series::var(&uspec, "M"));

    let xspec = VarSpec::new(&ring, &[("x", cx)]);
    let x = Series::var(&xspec, "x");
    let base = Series::one(&xspec).add(&x.scale_rat(&rat_int(4)));
    let isq = base.pow_sym(&Poly::constant(&ring, rat(-1, 2)));
    let mut isq_pows = vec![Series::one(&xspec)];
    for i in 1..=(2 * cn as usize + 1) {
        isq_pows.push(isq_pows[i - 1].mul(&isq));
    }
    let e4 = x
        .scale_poly(&u.pow(2).scale(&rat_int(4)))
        .mul(&base.invert())
        .exp();

    let dspec = VarSpec::new(&ring, &[("x", cx), ("n", cn)]);
    let mut lhs = Series::zero(&dspec);
    let mut rhs = Series::zero(&dspec);
    let mut p = Series::one(&uspec);
    for n in 0..=cn {
        if n > 0 {
            p = p.mul(&mbase);
        }
        let ln = ueval(&e.mul(&p), &fam);
        lhs = lhs.add(&lift(&dspec, &ln, &[("n", n)]));

        let mut scaled_hermite = Series::zero(&xspec);
        for (exps, c) in seq::hermite(n as usize).terms() {
            let j = exps[0] as usize;
            let mono = Poly::monomial(&ring, &[("u", exps[0])], c.clone());
            scaled_hermite = scaled_hermite.add(&isq_pows[j].scale_poly(&mono));
        }
        let rn = scaled_hermite.mul(&isq_pows[n as usize + 1]).mul(&e4);
        rhs = rhs.add(&lift(&dspec, &rn, &[("n", n)]));
    }
    (lhs, rhs)
}

pub(crate) fn triple_rhs(xspec: &Arc<VarSpec>, bound: u32) -> Series {
    let ring = xspec.ring().clone();
    let cx = xspec.caps()[0];
    let u = Poly::var(&ring, "u");
    let hspec = VarSpec::new(&ring, &[("x", cx + 1)]);
    let x = Series::var(&hspec, "x");

    let base = Series::one(&hspec).add(&x.scale_poly(&u.scale(&rat_int(48))));
    let root = base.pow_sym(&Poly::constant(&ring, rat(1, 2)));
    let shifted = root.sub(&Series::one(&hspec));
    let v = shifted.div_exact_var("x", 1).scale_rat(&rat(1, 24));

    let e = v
        .pow(3)
        .mul(&x)
        .scale_rat(&rat_int(8))
        .add(&v.pow(4).mul(&x.pow(2)).scale_rat(&rat_int(144)))
        .exp();
    let pre = base.pow_sym(&Poly::constant(&ring, rat(-1, 4)));
    let inv32 = base.pow_sym(&Poly::constant(&ring, rat(-3, 2)));

    let mut sum = Series::zero(&hspec);
    let mut inv_pow = Series::one(&hspec);
    for n in 0..=bound {
        if n > 0 {
            inv_pow = inv_pow.mul(&inv32);
        }
        let n = n as usize;
        let mut c = factorial_rat(6 * n) / (factorial_rat(3 * n) * factorial_rat(2 * n));
        if n % 2 == 1 {
            c = -c;
        }
        sum = sum.add(&x.pow(2 * n as u32).scale_rat(&c).mul(&inv_pow));
    }
    e.mul(&pre).mul(&sum).truncate(xspec)
}

fn hermite_triple(cm: &CapMap) -> (Series, Series) {
    let ring = seq::hermite_ring();
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("M", 3, 0)]);
    let u = Poly::var(&ring, "u");
    let fam = UmbraFamily::single(hermite_umbra(&ring, "M", 3 * cx));

    let arg = Series::monomial(&uspec, &[("M", 3), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(
            &uspec,
            &[("M", 2), ("x", 1)],
            u.scale(&rat_int(6)),
        ))
        .add(&Series::monomial(
            &uspec,
            &[("M", 1), ("x", 1)],
            u.pow(2).scale(&rat_int(12)),
        ))
        .add(&Series::monomial(&uspec, &[("x", 1)], u.pow(3).scale(&rat_int(8))));
    let lhs = ueval(&umbral_exp(&arg, &["M"]), &fam);

    let xspec = VarSpec::new(&ring, &[("x", cx)]);
    (lhs, triple_rhs(&xspec, cx / 2 + 1))
}

fn mehler(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "v"]);
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("M", 1, 0), ("N", 1, 0)]);
    let u = Poly::var(&ring, "u");
    let v = Poly::var(&ring, "v");
    let m = hermite_umbra(&ring, "M", cx);
    let n = m.renamed("N");
    let fam = UmbraFamily::independent(vec![m, n]);

    let arg = Series::monomial(&uspec, &[("M", 1), ("N", 1), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(
            &uspec,
            &[("N", 1), ("x", 1)],
            u.scale(&rat_int(2)),
        ))
        .add(&Series::monomial(
            &uspec,
            &[("M", 1), ("x", 1)],
            v.scale(&rat_int(2)),
        ))
        .add(&Series::monomial(
            &uspec,
            &[("x", 1)],
            (&u * &v).scale(&rat_int(4)),
        ));
    let lhs = ueval(&umbral_exp(&arg, &["M", "N"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    let x = Series::var(&ospec, "x");
    let base = Series::one(&ospec).sub(&x.pow(2).scale_rat(&rat_int(4)));
    let num = x
        .scale_poly(&(&u * &v).scale(&rat_int(4)))
        .sub(&x.pow(2).scale_poly(&(&u.pow(2) + &v.pow(2)).scale(&rat_int(4))));
    let rhs = base
        .pow_sym(&Poly::constant(&ring, rat(-1, 2)))
        .mul(&num.mul(&base.invert()).exp());
    (lhs, rhs)
}

pub(crate) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "hermite-square-egf",
            "eval(e^{M^2 x}) = (1+4x)^{-1/2} for the Hermite umbra",
            &[("x", 8)],
            hermite_square_egf,
        ),
        IdentityEntry::new(
            "hermite-shift",
            "shift rule eval(e^{My} f(M)) = e^{-y^2} eval(f(M-2y)) for f an exponential",
            &[("y", 4), ("w", 4)],
            hermite_shift,
        ),
        IdentityEntry::new(
            "hermite-quadratic-egf",
            "eval(e^{Mx + M^2 y}) = (1+4y)^{-1/2} e^{-x^2/(1+4y)}",
            &[("x", 4), ("y", 4)],
            hermite_quadratic_egf,
        ),
        IdentityEntry::new(
            "doetsch",
            "even-index sum of H_{2n}(u) x^n/n! in closed form",
            &[("x", 6)],
            doetsch,
        ),
        IdentityEntry::new(
            "doetsch-mixed",
            "mixed sum of H_{2m+n}(u) x^m y^n/(m! n!) in closed form",
            &[("x", 4), ("y", 4)],
            doetsch_mixed,
        ),
        IdentityEntry::new(
            "doetsch-general",
            "sum of H_{2m+n}(u) x^m/m! against H_n at a rescaled argument, packed over n",
            &[("x", 5), ("n", 5)],
            doetsch_general,
        ),
        IdentityEntry::new(
            "hermite-triple",
            "triple-index sum of H_{3n}(u) x^n/n! via the algebraic substitution v(u, x)",
            &[("x", 4)],
            hermite_triple,
        )
        .with_ksum(3),
        IdentityEntry::new(
            "mehler",
            "bilinear sum of H_n(u) H_n(v) x^n/n! equals the Gaussian closed form",
            &[("x", 6)],
            mehler,
        ),
    ]
}
