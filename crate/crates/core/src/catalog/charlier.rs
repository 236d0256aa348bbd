//! Charlier identities: the rising-moment umbra A with eval(A^n) = (alpha)_n,
//! its shift rule, even and mixed-index generating functions, the bilinear
//! sum, and the derangement specializations at alpha = 1.

use std::sync::Arc;

use super::{cap, lift, CapMap, IdentityEntry};
use crate::poly::{Poly, PolyRing};
use crate::rat::{factorial_rat, rat};
use crate::seq;
use crate::series::{Series, VarSpec};
use crate::umbra::{ueval, umbral_exp, umbral_spec, Umbra, UmbraFamily};

fn rising_umbra(ring: &Arc<PolyRing>, name: &str, sym: &str, cap: u32) -> Umbra {
    let base = Poly::var(ring, sym);
    Umbra::from_fn(name, cap, |n| seq::rising(&base, n))
}

fn factorial_umbra(ring: &Arc<PolyRing>, name: &str, cap: u32) -> Umbra {
    let ring = ring.clone();
    Umbra::from_fn(name, cap, move |n| {
        Poly::constant(&ring, factorial_rat(n))
    })
}

fn charlier_egf(cm: &CapMap) -> (Series, Series) {
    let ring = seq::charlier_ring();
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("A", 1, 0)]);
    let u = Poly::var(&ring, "u");
    let alpha = Poly::var(&ring, "alpha");

    let arg = Series::monomial(&uspec, &[("x", 1)], u.clone()).add(&Series::monomial(
        &uspec,
        &[("A", 1), ("x", 1)],
        Poly::one(&ring),
    ));
    let fam = UmbraFamily::single(rising_umbra(&ring, "A", "alpha", cx));
    let lhs = ueval(&umbral_exp(&arg, &["A"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    let x = Series::var(&ospec, "x");
    let rhs = x
        .scale_poly(&u)
        .exp()
        .mul(&Series::one(&ospec).sub(&x).pow_sym(&-&alpha));
    (lhs, rhs)
}

fn charlier_shift(cm: &CapMap) -> (Series, Series) {
    let ring = seq::charlier_ring();
    let (cy, cw) = (cap(cm, "y"), cap(cm, "w"));
    let uspec = umbral_spec(&ring, &[("y", cy), ("w", cw)], &[("A", 1, 0)]);
    let alpha = Poly::var(&ring, "alpha");
    let fam = UmbraFamily::single(rising_umbra(&ring, "A", "alpha", cy + cw));

    let arg = Series::monomial(&uspec, &[("A", 1), ("y", 1)], Poly::one(&ring)).add(
        &Series::monomial(&uspec, &[("A", 1), ("w", 1)], Poly::one(&ring)),
    );
    let lhs = ueval(&umbral_exp(&arg, &["A"]), &fam);

    let ospec = VarSpec::new(&ring, &[("y", cy), ("w", cw)]);
    let inv_y = Series::one(&ospec).sub(&Series::var(&ospec, "y")).invert();
    let inv_y_up = lift(&uspec, &inv_y, &[]);
    let arg2 = Series::monomial(&uspec, &[("A", 1), ("w", 1)], Poly::one(&ring)).mul(&inv_y_up);
    let rhs = ueval(&umbral_exp(&arg2, &["A"]), &fam).mul(
        &Series::one(&ospec)
            .sub(&Series::var(&ospec, "y"))
            .pow_sym(&-&alpha),
    );
    (lhs, rhs)
}

fn charlier_shift_monomials(cm: &CapMap) -> (Series, Series) {
    let ring = seq::charlier_ring();
    let (cy, ck) = (cap(cm, "y"), cap(cm, "k"));
    let uspec = umbral_spec(&ring, &[("y", cy)], &[("A", 1, ck)]);
    let alpha = Poly::var(&ring, "alpha");
    let fam = UmbraFamily::single(rising_umbra(&ring, "A", "alpha", cy + ck));

    let arg = Series::monomial(&uspec, &[("A", 1), ("y", 1)], Poly::one(&ring));
    let e = umbral_exp(&arg, &["A"]);

    let dspec = VarSpec::new(&ring, &[("y", cy), ("k", ck)]);
    let yspec = VarSpec::new(&ring, &[("y", cy)]);
    let one_minus_y = Series::one(&yspec).sub(&Series::var(&yspec, "y"));
    let mut lhs = Series::zero(&dspec);
    let mut rhs = Series::zero(&dspec);
    for k in 0..=ck {
        let ak = ueval(
            &e.mul(&Series::monomial(&uspec, &[("A", k)], Poly::one(&ring))),
            &fam,
        );
        lhs = lhs.add(&lift(&dspec, &ak, &[("k", k)]));

        let exponent = &alpha + &Poly::int(&ring, k as i64);
        let rk = one_minus_y
            .pow_sym(&-&exponent)
            .scale_poly(&seq::rising(&alpha, k as usize));
        rhs = rhs.add(&lift(&dspec, &rk, &[("k", k)]));
    }
    (lhs, rhs)
}

pub(crate) fn even_rhs(ospec: &Arc<VarSpec>, bound: u32) -> Series {
    let ring = ospec.ring().clone();
    let u = Poly::var(&ring, "u");
    let alpha = Poly::var(&ring, "alpha");
    let x = Series::var(ospec, "x");
    let base = Series::one(ospec).sub(&x.scale_poly(&u.scale(&rat(2, 1))));
    let inv_sq = base.invert().pow(2);
    let mut sum = Series::zero(ospec);
    let mut inv_pow = Series::one(ospec);
    for k in 0..=bound {
        if k > 0 {
            inv_pow = inv_pow.mul(&inv_sq);
        }
        let coeff = seq::rising(&alpha, 2 * k as usize).scale(&factorial_rat(k as usize).recip());
        sum = sum.add(&x.pow(k).scale_poly(&coeff).mul(&inv_pow));
    }
    x.scale_poly(&u.pow(2))
        .exp()
        .mul(&base.pow_sym(&-&alpha))
        .mul(&sum)
}

fn charlier_even(cm: &CapMap) -> (Series, Series) {
    let ring = seq::charlier_ring();
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("A", 2, 0)]);
    let u = Poly::var(&ring, "u");
    let fam = UmbraFamily::single(rising_umbra(&ring, "A", "alpha", 2 * cx));

    let arg = Series::monomial(&uspec, &[("A", 2), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(
            &uspec,
            &[("A", 1), ("x", 1)],
            u.scale(&rat(2, 1)),
        ))
        .add(&Series::monomial(&uspec, &[("x", 1)], u.pow(2)));
    let lhs = ueval(&umbral_exp(&arg, &["A"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    (lhs, even_rhs(&ospec, cx + 1))
}

pub(crate) fn mixed_rhs(ospec: &Arc<VarSpec>, bound: u32) -> Series {
    let ring = ospec.ring().clone();
    let u = Poly::var(&ring, "u");
    let alpha = Poly::var(&ring, "alpha");
    let x = Series::var(ospec, "x");
    let y = Series::var(ospec, "y");
    let base = Series::one(ospec)
        .sub(&x.scale_poly(&u.scale(&rat(2, 1))))
        .sub(&y);
    let inv_sq = base.invert().pow(2);
    let mut sum = Series::zero(ospec);
    let mut inv_pow = Series::one(ospec);
    for k in 0..=bound {
        if k > 0 {
            inv_pow = inv_pow.mul(&inv_sq);
        }
        let coeff = seq::rising(&alpha, 2 * k as usize).scale(&factorial_rat(k as usize).recip());
        sum = sum.add(&x.pow(k).scale_poly(&coeff).mul(&inv_pow));
    }
    x.scale_poly(&u.pow(2))
        .add(&y.scale_poly(&u))
        .exp()
        .mul(&base.pow_sym(&-&alpha))
        .mul(&sum)
}

fn charlier_mixed(cm: &CapMap) -> (Series, Series) {
    let ring = seq::charlier_ring();
    let (cx, cy) = (cap(cm, "x"), cap(cm, "y"));
    let uspec = umbral_spec(&ring, &[("x", cx), ("y", cy)], &[("A", 2, 0)]);
    let u = Poly::var(&ring, "u");
    let fam = UmbraFamily::single(rising_umbra(&ring, "A", "alpha", 2 * (cx + cy)));

    let arg = Series::monomial(&uspec, &[("A", 2), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(
            &uspec,
            &[("A", 1), ("x", 1)],
            u.scale(&rat(2, 1)),
        ))
        .add(&Series::monomial(&uspec, &[("x", 1)], u.pow(2)))
        .add(&Series::monomial(
            &uspec,
            &[("A", 1), ("y", 1)],
            Poly::one(&ring),
        ))
        .add(&Series::monomial(&uspec, &[("y", 1)], u.clone()));
    let lhs = ueval(&umbral_exp(&arg, &["A"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx), ("y", cy)]);
    (lhs, mixed_rhs(&ospec, cx + 1))
}

pub(crate) fn bilinear_rhs(ospec: &Arc<VarSpec>, bound: u32) -> Series {
    let ring = ospec.ring().clone();
    let u = Poly::var(&ring, "u");
    let v = Poly::var(&ring, "v");
    let alpha = Poly::var(&ring, "alpha");
    let beta = Poly::var(&ring, "beta");
    let x = Series::var(ospec, "x");
    let base_v = Series::one(ospec).sub(&x.scale_poly(&v));
    let base_u = Series::one(ospec).sub(&x.scale_poly(&u));
    let inv_both = base_v.invert().mul(&base_u.invert());
    let mut sum = Series::zero(ospec);
    let mut inv_pow = Series::one(ospec);
    for k in 0..=bound {
        if k > 0 {
            inv_pow = inv_pow.mul(&inv_both);
        }
        let coeff = (&seq::rising(&alpha, k as usize) * &seq::rising(&beta, k as usize))
            .scale(&factorial_rat(k as usize).recip());
        sum = sum.add(&x.pow(k).scale_poly(&coeff).mul(&inv_pow));
    }
    x.scale_poly(&(&u * &v))
        .exp()
        .mul(&base_v.pow_sym(&-&alpha))
        .mul(&base_u.pow_sym(&-&beta))
        .mul(&sum)
}

fn charlier_bilinear(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&["u", "v", "alpha", "beta"]);
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("A", 1, 0), ("B", 1, 0)]);
    let u = Poly::var(&ring, "u");
    let v = Poly::var(&ring, "v");
    let fam = UmbraFamily::independent(vec![
        rising_umbra(&ring, "A", "alpha", cx),
        rising_umbra(&ring, "B", "beta", cx),
    ]);

    let arg = Series::monomial(&uspec, &[("A", 1), ("B", 1), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(&uspec, &[("A", 1), ("x", 1)], v.clone()))
        .add(&Series::monomial(&uspec, &[("B", 1), ("x", 1)], u.clone()))
        .add(&Series::monomial(&uspec, &[("x", 1)], &u * &v));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    (lhs, bilinear_rhs(&ospec, cx + 1))
}

pub(crate) fn derangement_even_rhs(ospec: &Arc<VarSpec>, bound: u32) -> Series {
    let ring = ospec.ring().clone();
    let x = Series::var(ospec, "x");
    let base = Series::one(ospec).add(&x.scale_rat(&rat(2, 1)));
    let inv = base.invert();
    let inv_sq = inv.pow(2);
    let mut sum = Series::zero(ospec);
    let mut inv_pow = inv.clone();
    for k in 0..=bound {
        if k > 0 {
            inv_pow = inv_pow.mul(&inv_sq);
        }
        let coeff = factorial_rat(2 * k as usize) / factorial_rat(k as usize);
        sum = sum.add(&x.pow(k).scale_poly(&Poly::constant(&ring, coeff)).mul(&inv_pow));
    }
    x.exp().mul(&sum)
}

fn derangement_even(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("A", 2, 0)]);
    let fam = UmbraFamily::single(factorial_umbra(&ring, "A", 2 * cx));

    let arg = Series::monomial(&uspec, &[("A", 2), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(&uspec, &[("A", 1), ("x", 1)], Poly::int(&ring, -2)))
        .add(&Series::monomial(&uspec, &[("x", 1)], Poly::one(&ring)));
    let lhs = ueval(&umbral_exp(&arg, &["A"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    (lhs, derangement_even_rhs(&ospec, cx + 1))
}

pub(crate) fn derangement_square_rhs(ospec: &Arc<VarSpec>, bound: u32) -> Series {
    let ring = ospec.ring().clone();
    let x = Series::var(ospec, "x");
    let inv = Series::one(ospec).add(&x).invert();
    let inv_sq = inv.pow(2);
    let mut sum = Series::zero(ospec);
    let mut inv_pow = inv_sq.clone();
    for k in 0..=bound {
        if k > 0 {
            inv_pow = inv_pow.mul(&inv_sq);
        }
        let coeff = factorial_rat(k as usize);
        sum = sum.add(&x.pow(k).scale_poly(&Poly::constant(&ring, coeff)).mul(&inv_pow));
    }
    x.exp().mul(&sum)
}

fn derangement_square(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cx = cap(cm, "x");
    let uspec = umbral_spec(&ring, &[("x", cx)], &[("A", 1, 0), ("B", 1, 0)]);
    let fam = UmbraFamily::independent(vec![
        factorial_umbra(&ring, "A", cx),
        factorial_umbra(&ring, "B", cx),
    ]);

    let arg = Series::monomial(&uspec, &[("A", 1), ("B", 1), ("x", 1)], Poly::one(&ring))
        .add(&Series::monomial(&uspec, &[("A", 1), ("x", 1)], Poly::int(&ring, -1)))
        .add(&Series::monomial(&uspec, &[("B", 1), ("x", 1)], Poly::int(&ring, -1)))
        .add(&Series::monomial(&uspec, &[("x", 1)], Poly::one(&ring)));
    let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);

    let ospec = VarSpec::new(&ring, &[("x", cx)]);
    (lhs, derangement_square_rhs(&ospec, cx + 1))
}

pub(crate) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "charlier-egf",
            "sum of C_n(u, alpha) x^n/n! equals e^{ux} (1-x)^{-alpha}",
            &[("x", 6)],
            charlier_egf,
        ),
        IdentityEntry::new(
            "charlier-shift",
            "shift rule eval(e^{Ay} f(A)) = (1-y)^{-alpha} eval(f(A/(1-y))) for f an exponential",
            &[("y", 4), ("w", 4)],
            charlier_shift,
        ),
        IdentityEntry::new(
            "charlier-shift-monomials",
            "shift rule on the monomial basis: eval(e^{Ay} A^k) = (alpha)_k (1-y)^{-alpha-k}",
            &[("y", 5), ("k", 6)],
            charlier_shift_monomials,
        )
        .with_basis_k(6),
        IdentityEntry::new(
            "charlier-even",
            "even-index sum of C_{2m} x^m/m! as a single auxiliary k-sum",
            &[("x", 6)],
            charlier_even,
        )
        .with_ksum(7),
        IdentityEntry::new(
            "charlier-mixed",
            "mixed sum of C_{2m+n} x^m y^n/(m! n!) as a single auxiliary k-sum",
            &[("x", 4), ("y", 4)],
            charlier_mixed,
        )
        .with_ksum(5),
        IdentityEntry::new(
            "charlier-bilinear",
            "bilinear sum of C_n(u, alpha) C_n(v, beta) x^n/n! as an auxiliary k-sum",
            &[("x", 5)],
            charlier_bilinear,
        )
        .with_ksum(6),
        IdentityEntry::new(
            "derangement-even",
            "even-index derangement sum D_{2m} x^m/m! from the factorial umbra",
            &[("x", 8)],
            derangement_even,
        )
        .with_ksum(9),
        IdentityEntry::new(
            "derangement-square",
            "squared derangement sum D_n^2 x^n/n! from two independent factorial umbrae",
            &[("x", 8)],
            derangement_square,
        )
        .with_ksum(9),
    ]
}
