//! Bell umbra identities: the shift rule B f(B) = f(B+1), its n-fold
//! falling-factorial form, and Rota's evaluation of the falling factorial
//! itself. Rows apply polynomials to the umbra through the dense
//! coefficient-vector helpers, with random integer polynomials drawn from
//! fixed seeds.

use num::Zero;

use crate::poly::PolyRing;
use crate::rat::{rat_int, Rat};
use crate::rng::XorShift;
use crate::seq;
use crate::series::{Series, VarSpec};

use super::{cap, poly_mul, poly_shift, random_int_poly, row, CapMap, IdentityEntry};

/// Evaluate f at the Bell umbra: sum of f_i B_i over the coefficients.
fn bell_apply(f: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (i, c) in f.iter().enumerate() {
        if !c.is_zero() {
            s += c * Rat::from(seq::bell(i));
        }
    }
    s
}

/// Coefficients of the falling factorial x(x-1)...(x-n+1).
fn falling(n: usize) -> Vec<Rat> {
    let mut f = vec![rat_int(1)];
    for i in 0..n {
        f = poly_mul(&f, &[rat_int(-(i as i64)), rat_int(1)]);
    }
    f
}

fn bell_shift(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cd = cap(cm, "d");
    let spec = VarSpec::new(&ring, &[("d", cd)]);
    let mut rng = XorShift::new(0x5eed_be11);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for d in 0..=cd as usize {
        let f = random_int_poly(&mut rng, d);
        let xf = poly_mul(&[rat_int(0), rat_int(1)], &f);
        lhs = lhs.add(&row(&spec, &[("d", d as u32)], bell_apply(&xf)));
        rhs = rhs.add(&row(&spec, &[("d", d as u32)], bell_apply(&poly_shift(&f, 1))));
    }
    (lhs, rhs)
}

fn bell_falling_shift(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cn, cd) = (cap(cm, "n"), cap(cm, "d"));
    let spec = VarSpec::new(&ring, &[("n", cn), ("d", cd)]);
    let mut rng = XorShift::new(0x5eed_be13);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for d in 0..=cd as usize {
        let f = random_int_poly(&mut rng, d);
        for n in 0..=cn as usize {
            let at = [("n", n as u32), ("d", d as u32)];
            let l = bell_apply(&poly_mul(&falling(n), &f));
            lhs = lhs.add(&row(&spec, &at, l));
            rhs = rhs.add(&row(&spec, &at, bell_apply(&poly_shift(&f, n as i64))));
        }
    }
    (lhs, rhs)
}

fn bell_rota(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        lhs = lhs.add(&row(&spec, &[("n", n as u32)], bell_apply(&falling(n))));
        rhs = rhs.add(&row(&spec, &[("n", n as u32)], rat_int(1)));
    }
    (lhs, rhs)
}

pub(crate) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "bell-shift",
            "shift rule B f(B) = f(B+1) on random integer polynomials",
            &[("d", 6)],
            bell_shift,
        ),
        IdentityEntry::new(
            "bell-falling-shift",
            "n-fold shift B(B-1)...(B-n+1) f(B) = f(B+n)",
            &[("n", 5), ("d", 5)],
            bell_falling_shift,
        ),
        IdentityEntry::new(
            "bell-rota",
            "Rota's evaluation: the falling factorial applied to B equals 1",
            &[("n", 12)],
            bell_rota,
        ),
    ]
}
