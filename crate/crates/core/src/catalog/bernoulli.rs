//! Bernoulli umbra identities: the defining recurrence, shift and reflection
//! rules, the multiplication theorem, Kaneko's identity and its two-point and
//! weighted generalizations, plus the Genocchi and median Genocchi relatives
//! that follow from the same calculus.
//!
//! Every identity here is a family of scalar equalities indexed by small
//! integers, packed into bookkeeping variables so one entry covers the whole
//! family. Rows that evaluate a polynomial at the umbra use the dense
//! coefficient-vector helpers from the parent module; random test polynomials
//! are drawn from fixed seeds so builds are reproducible.

use num::{BigInt, Zero};

use crate::poly::PolyRing;
use crate::rat::{binomial, rat, rat_int, Rat};
use crate::rng::XorShift;
use crate::seq;
use crate::series::{Series, VarSpec};

use super::{
    cap, int_pow, poly_affine, poly_deriv, poly_eval_int, poly_mul, poly_reflect, poly_shift,
    random_int_poly, row, CapMap, IdentityEntry,
};

/// Evaluate f at the Bernoulli umbra: sum of f_i B_i over the coefficients.
fn bern_apply(f: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (i, c) in f.iter().enumerate() {
        if !c.is_zero() {
            s += c * seq::bernoulli(i);
        }
    }
    s
}

/// The monomial x^n as a coefficient vector.
fn unit(n: usize) -> Vec<Rat> {
    let mut f = vec![Rat::zero(); n + 1];
    f[n] = rat_int(1);
    f
}

fn recurrence(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let mut s = Rat::zero();
        for i in 0..=n {
            s += Rat::from(binomial(n, i)) * seq::bernoulli(i);
        }
        lhs = lhs.add(&row(&spec, &[("n", n as u32)], s));
        let mut r = seq::bernoulli(n);
        if n == 1 {
            r += rat_int(1);
        }
        rhs = rhs.add(&row(&spec, &[("n", n as u32)], r));
    }
    (lhs, rhs)
}

fn reflection_monomials(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let mut s = Rat::zero();
        for i in 0..=n {
            s += Rat::from(binomial(n, i)) * seq::bernoulli(i);
        }
        lhs = lhs.add(&row(&spec, &[("n", n as u32)], s));
        let sign = if n % 2 == 0 { 1 } else { -1 };
        rhs = rhs.add(&row(
            &spec,
            &[("n", n as u32)],
            seq::bernoulli(n) * rat_int(sign),
        ));
    }
    (lhs, rhs)
}

fn parity(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        if n == 1 {
            lhs = lhs.add(&row(&spec, &[("n", 1)], seq::bernoulli(1)));
            rhs = rhs.add(&row(&spec, &[("n", 1)], rat(-1, 2)));
            continue;
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        lhs = lhs.add(&row(
            &spec,
            &[("n", n as u32)],
            seq::bernoulli(n) * rat_int(sign),
        ));
        rhs = rhs.add(&row(&spec, &[("n", n as u32)], seq::bernoulli(n)));
    }
    (lhs, rhs)
}

fn shift_one(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cd = cap(cm, "d");
    let spec = VarSpec::new(&ring, &[("d", cd)]);
    let mut rng = XorShift::new(0x5eed_b001);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for d in 0..=cd as usize {
        let f = random_int_poly(&mut rng, d);
        lhs = lhs.add(&row(&spec, &[("d", d as u32)], bern_apply(&poly_shift(&f, 1))));
        let fp0 = poly_eval_int(&poly_deriv(&f), 0);
        rhs = rhs.add(&row(&spec, &[("d", d as u32)], bern_apply(&f) + fp0));
    }
    (lhs, rhs)
}

fn shift_k(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (ck, cd) = (cap(cm, "k"), cap(cm, "d"));
    let spec = VarSpec::new(&ring, &[("k", ck), ("d", cd)]);
    let mut rng = XorShift::new(0x5eed_b003);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for d in 0..=cd as usize {
        let f = random_int_poly(&mut rng, d);
        let fp = poly_deriv(&f);
        for k in 0..=ck as i64 {
            let at = [("k", k as u32), ("d", d as u32)];
            lhs = lhs.add(&row(&spec, &at, bern_apply(&poly_shift(&f, k))));
            let mut r = bern_apply(&f);
            for i in 0..k {
                r += poly_eval_int(&fp, i);
            }
            rhs = rhs.add(&row(&spec, &at, r));
        }
    }
    (lhs, rhs)
}

fn reflection(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cd = cap(cm, "d");
    let spec = VarSpec::new(&ring, &[("d", cd)]);
    let mut rng = XorShift::new(0x5eed_b005);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for d in 0..=cd as usize {
        let f = random_int_poly(&mut rng, d);
        lhs = lhs.add(&row(&spec, &[("d", d as u32)], bern_apply(&poly_shift(&f, 1))));
        rhs = rhs.add(&row(&spec, &[("d", d as u32)], bern_apply(&poly_reflect(&f))));
    }
    (lhs, rhs)
}

fn reflection_shift(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cd = cap(cm, "d");
    let spec = VarSpec::new(&ring, &[("d", cd)]);
    let mut rng = XorShift::new(0x5eed_b007);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for d in 0..=cd as usize {
        let f = random_int_poly(&mut rng, d);
        lhs = lhs.add(&row(&spec, &[("d", d as u32)], bern_apply(&poly_reflect(&f))));
        let fp0 = poly_eval_int(&poly_deriv(&f), 0);
        rhs = rhs.add(&row(&spec, &[("d", d as u32)], bern_apply(&f) + fp0));
    }
    (lhs, rhs)
}

fn multiplication(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (ck, cd) = (cap(cm, "k"), cap(cm, "d"));
    let spec = VarSpec::new(&ring, &[("k", ck), ("d", cd)]);
    let mut rng = XorShift::new(0x5eed_b009);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for d in 0..=cd as usize {
        let f = random_int_poly(&mut rng, d);
        for k in 1..=ck as i64 {
            let at = [("k", k as u32), ("d", d as u32)];
            lhs = lhs.add(&row(&spec, &at, bern_apply(&f) * rat_int(k)));
            let mut r = Rat::zero();
            for i in 0..k {
                r += bern_apply(&poly_affine(&f, k, i));
            }
            rhs = rhs.add(&row(&spec, &at, r));
        }
    }
    (lhs, rhs)
}

fn multiplication_monomials(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (ck, cn) = (cap(cm, "k"), cap(cm, "n"));
    let spec = VarSpec::new(&ring, &[("k", ck), ("n", cn)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let f = unit(n);
        for k in 1..=ck as i64 {
            let at = [("k", k as u32), ("n", n as u32)];
            lhs = lhs.add(&row(&spec, &at, seq::bernoulli(n) * rat_int(k)));
            let mut r = Rat::zero();
            for i in 0..k {
                r += bern_apply(&poly_affine(&f, k, i));
            }
            rhs = rhs.add(&row(&spec, &at, r));
        }
    }
    (lhs, rhs)
}

fn shift_reflect(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (ck, cd) = (cap(cm, "k"), cap(cm, "d"));
    let spec = VarSpec::new(&ring, &[("k", ck), ("d", cd)]);
    let mut rng = XorShift::new(0x5eed_b00b);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for d in 0..=cd as usize {
        let f = random_int_poly(&mut rng, d);
        let fp = poly_deriv(&f);
        for k in 1..=ck as i64 {
            let at = [("k", k as u32), ("d", d as u32)];
            let l = bern_apply(&poly_shift(&f, k)) - bern_apply(&poly_reflect(&f));
            lhs = lhs.add(&row(&spec, &at, l));
            let mut r = Rat::zero();
            for i in 1..k {
                r += poly_eval_int(&fp, i);
            }
            rhs = rhs.add(&row(&spec, &at, r));
        }
    }
    (lhs, rhs)
}

fn double(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let ck = cap(cm, "k");
    let spec = VarSpec::new(&ring, &[("k", ck)]);
    let base = vec![Rat::zero(), rat_int(-1), rat_int(1)];
    let mut f = vec![rat_int(1)];
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for k in 0..=ck {
        if k > 0 {
            f = poly_mul(&f, &base);
        }
        lhs = lhs.add(&row(&spec, &[("k", k)], bern_apply(&f)));
        let doubled: Vec<Rat> = f
            .iter()
            .enumerate()
            .map(|(i, c)| c * int_pow(2, i))
            .collect();
        let fp0 = poly_eval_int(&poly_deriv(&f), 0);
        rhs = rhs.add(&row(&spec, &[("k", k)], bern_apply(&doubled) + fp0));
    }
    (lhs, rhs)
}

fn two_point(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cm_, cn, ck) = (cap(cm, "m"), cap(cm, "n"), cap(cm, "k"));
    let spec = VarSpec::new(&ring, &[("m", cm_), ("n", cn), ("k", ck)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for m in 1..=cm_ as usize {
        for n in 1..=cn as usize {
            let sign = if (m + n) % 2 == 0 { 1 } else { -1 };
            for k in 1..=ck as i64 {
                let at = [("m", m as u32), ("n", n as u32), ("k", k as u32)];
                let a = poly_mul(&poly_shift(&unit(m), k), &unit(n));
                let b = poly_mul(&unit(m), &poly_shift(&unit(n), k));
                let l = bern_apply(&a) - bern_apply(&b) * rat_int(sign);
                lhs = lhs.add(&row(&spec, &at, l));
                let mut r = Rat::zero();
                for i in 1..k {
                    let w = rat_int((m + n) as i64 * i - k * m as i64);
                    r += w * int_pow(i, m - 1) * int_pow(i - k, n - 1);
                }
                rhs = rhs.add(&row(&spec, &at, r));
            }
        }
    }
    (lhs, rhs)
}

fn kaneko(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut lhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let mut s = Rat::zero();
        for i in 0..=n + 1 {
            s += Rat::from(binomial(n + 1, i)) * seq::bernoulli_tilde(n + i);
        }
        lhs = lhs.add(&row(&spec, &[("n", n as u32)], s));
    }
    (lhs, Series::zero(&spec))
}

fn kaneko_symmetric(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (cm_, cn) = (cap(cm, "m"), cap(cm, "n"));
    let spec = VarSpec::new(&ring, &[("m", cm_), ("n", cn)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for m in 0..=cm_ as usize {
        for n in 0..=cn as usize {
            let at = [("m", m as u32), ("n", n as u32)];
            let mut l = Rat::zero();
            for i in 0..=m {
                l += Rat::from(binomial(m, i)) * seq::bernoulli(n + i);
            }
            lhs = lhs.add(&row(&spec, &at, l));
            let mut r = Rat::zero();
            for j in 0..=n {
                r += Rat::from(binomial(n, j)) * seq::bernoulli(m + j);
            }
            let sign = if (m + n) % 2 == 0 { 1 } else { -1 };
            rhs = rhs.add(&row(&spec, &at, r * rat_int(sign)));
        }
    }
    (lhs, rhs)
}

/// Left side of the weighted Kaneko identity for a given k and n.
fn kaneko_general_lhs(k: i64, n: usize) -> Rat {
    let mut s = Rat::zero();
    for i in 0..=n + 1 {
        s += int_pow(k, n + 1 - i) * Rat::from(binomial(n + 1, i)) * seq::bernoulli_tilde(n + i);
    }
    s / rat_int(n as i64 + 1)
}

fn kaneko_general(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let (ck, cn) = (cap(cm, "k"), cap(cm, "n"));
    let spec = VarSpec::new(&ring, &[("k", ck), ("n", cn)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for k in 1..=ck as i64 {
        for n in 1..=cn as usize {
            let at = [("k", k as u32), ("n", n as u32)];
            lhs = lhs.add(&row(&spec, &at, kaneko_general_lhs(k, n)));
            let mut r = Rat::zero();
            for i in 1..k {
                let w = rat_int((2 * n as i64 + 1) * i - (n as i64 + 1) * k);
                r += w * int_pow(i, n) * int_pow(i - k, n - 1);
            }
            rhs = rhs.add(&row(&spec, &at, r));
        }
    }
    (lhs, rhs)
}

fn kaneko_general_closed(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn), ("k", 4)]);
    let mut lhs = Series::zero(&spec);
    let mut rhs = Series::zero(&spec);
    for n in 1..=cn as usize {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for k in 2..=4i64 {
            let at = [("n", n as u32), ("k", k as u32)];
            lhs = lhs.add(&row(&spec, &at, kaneko_general_lhs(k, n)));
            let closed = match k {
                2 => rat_int(sign),
                3 => int_pow(-2, n - 1) * rat_int(n as i64 - 4),
                _ => {
                    let inner = int_pow(4, n)
                        + (rat_int(2) - rat(4, 3) * rat_int(n as i64)) * int_pow(3, n);
                    rat_int(sign) * inner
                }
            };
            rhs = rhs.add(&row(&spec, &at, closed));
        }
    }
    (lhs, rhs)
}

fn genocchi_kaneko(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut lhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let mut s = BigInt::zero();
        for i in 0..=n {
            s += binomial(n, i) * seq::genocchi(n + i);
        }
        lhs = lhs.add(&row(&spec, &[("n", n as u32)], Rat::from(s)));
    }
    (lhs, Series::zero(&spec))
}

fn genocchi_seidel(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut lhs = Series::zero(&spec);
    for n in 2..=cn as usize {
        let mut s = BigInt::zero();
        for j in 0..=n / 2 {
            s += binomial(n, 2 * j) * seq::genocchi(2 * n - 2 * j);
        }
        lhs = lhs.add(&row(&spec, &[("n", n as u32)], Rat::from(s)));
    }
    (lhs, Series::zero(&spec))
}

fn median_genocchi_lhs(spec: &std::sync::Arc<VarSpec>, cn: u32) -> Series {
    let mut lhs = Series::zero(spec);
    for n in 0..=cn as usize {
        let scaled = Rat::from(BigInt::from(1) << (2 * n)) * Rat::from(seq::median_genocchi(n));
        lhs = lhs.add(&row(spec, &[("n", n as u32)], scaled));
    }
    lhs
}

fn median_genocchi(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let mut s = BigInt::zero();
        for i in 0..=n {
            let term = binomial(n, i) * seq::xsech(2 * i + 1);
            if (n - i) % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        rhs = rhs.add(&row(&spec, &[("n", n as u32)], Rat::from(s)));
    }
    (median_genocchi_lhs(&spec, cn), rhs)
}

fn median_genocchi_euler(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cn = cap(cm, "n");
    let spec = VarSpec::new(&ring, &[("n", cn)]);
    let mut rhs = Series::zero(&spec);
    for n in 0..=cn as usize {
        let mut s = BigInt::zero();
        for i in 0..=n {
            let term = binomial(n, i) * BigInt::from(2 * i as i64 + 1) * seq::euler(2 * i);
            if (n - i) % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        rhs = rhs.add(&row(&spec, &[("n", n as u32)], Rat::from(s)));
    }
    (median_genocchi_lhs(&spec, cn), rhs)
}

fn sech_split(cm: &CapMap) -> (Series, Series) {
    let ring = PolyRing::new(&[]);
    let cx = cap(cm, "x");
    let spec = VarSpec::new(&ring, &[("x", cx)]);
    let hspec = VarSpec::new(&ring, &[("x", cx + 1)]);
    let x = Series::var(&hspec, "x");
    let half = rat(1, 2);
    let cosh = x.exp().add(&x.neg().exp()).scale_rat(&half);
    let lhs = x.mul(&cosh.invert()).truncate(&spec);

    let sinh = x.exp().sub(&x.neg().exp()).scale_rat(&half);
    let expm1 = x
        .scale_rat(&rat_int(4))
        .exp()
        .sub(&Series::one(&hspec));
    let b4 = expm1
        .div_exact_var("x", 1)
        .invert()
        .scale_rat(&rat_int(4));
    let rhs = x
        .scale_rat(&rat_int(2))
        .mul(&x.neg().exp())
        .sub(&sinh.mul(&b4))
        .truncate(&spec);
    (lhs, rhs)
}

pub(crate) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "bernoulli-recurrence",
            "defining recurrence (B+1)^n = B^n + [n = 1] on the monomial basis",
            &[("n", 20)],
            recurrence,
        ),
        IdentityEntry::new(
            "bernoulli-reflection-monomials",
            "reflection (B+1)^n = (-B)^n on the monomial basis",
            &[("n", 20)],
            reflection_monomials,
        ),
        IdentityEntry::new(
            "bernoulli-parity",
            "(-B)^n = B^n for n other than 1, with B_1 = -1/2",
            &[("n", 20)],
            parity,
        ),
        IdentityEntry::new(
            "bernoulli-shift-one",
            "linearized shift f(B+1) = f(B) + f'(0) on random integer polynomials",
            &[("d", 6)],
            shift_one,
        ),
        IdentityEntry::new(
            "bernoulli-shift-k",
            "iterated shift f(B+k) = f(B) + f'(0) + ... + f'(k-1)",
            &[("k", 4), ("d", 4)],
            shift_k,
        ),
        IdentityEntry::new(
            "bernoulli-reflection",
            "linearized reflection f(B+1) = f(-B) on random integer polynomials",
            &[("d", 6)],
            reflection,
        ),
        IdentityEntry::new(
            "bernoulli-reflection-shift",
            "reflection through the shift: f(-B) = f(B) + f'(0)",
            &[("d", 6)],
            reflection_shift,
        ),
        IdentityEntry::new(
            "bernoulli-multiplication",
            "multiplication theorem k f(B) = f(kB) + f(kB+1) + ... + f(kB+k-1)",
            &[("k", 4), ("d", 4)],
            multiplication,
        )
        .floor("k", 1),
        IdentityEntry::new(
            "bernoulli-multiplication-monomials",
            "multiplication theorem k B^n = sum of (kB+i)^n on the monomial basis",
            &[("k", 5), ("n", 12)],
            multiplication_monomials,
        )
        .floor("k", 1),
        IdentityEntry::new(
            "bernoulli-shift-reflect",
            "combined rule f(B+k) - f(-B) = f'(1) + ... + f'(k-1)",
            &[("k", 4), ("d", 4)],
            shift_reflect,
        )
        .floor("k", 1),
        IdentityEntry::new(
            "bernoulli-double",
            "doubling rule f(B) = f(2B) + f'(0) for the even-shape f = (x^2-x)^k",
            &[("k", 6)],
            double,
        ),
        IdentityEntry::new(
            "bernoulli-two-point",
            "(B+k)^m B^n - (-1)^{m+n} B^m (B+k)^n as an explicit integer sum",
            &[("m", 5), ("n", 5), ("k", 4)],
            two_point,
        )
        .floor("m", 1)
        .floor("n", 1)
        .floor("k", 1),
        IdentityEntry::new(
            "kaneko",
            "Kaneko's identity: sum of C(n+1,i) (n+i+1) B_{n+i} over i <= n+1 vanishes",
            &[("n", 20)],
            kaneko,
        ),
        IdentityEntry::new(
            "kaneko-symmetric",
            "two-index symmetry behind Kaneko's identity, rows over (m, n)",
            &[("m", 12), ("n", 12)],
            kaneko_symmetric,
        ),
        IdentityEntry::new(
            "kaneko-general",
            "weighted Kaneko sum with powers of k equals an explicit integer sum",
            &[("k", 5), ("n", 10)],
            kaneko_general,
        )
        .floor("k", 1)
        .floor("n", 1),
        IdentityEntry::new(
            "kaneko-general-closed",
            "weighted Kaneko sums for k = 2, 3, 4 against their closed forms",
            &[("n", 10)],
            kaneko_general_closed,
        )
        .floor("n", 1),
        IdentityEntry::new(
            "genocchi-kaneko",
            "Genocchi analogue of Kaneko's identity: sum of C(n,i) g_{n+i} vanishes",
            &[("n", 12)],
            genocchi_kaneko,
        ),
        IdentityEntry::new(
            "genocchi-seidel",
            "Seidel's recurrence: sum of C(n,2j) g_{2n-2j} vanishes for n > 1",
            &[("n", 30)],
            genocchi_seidel,
        )
        .floor("n", 2),
        IdentityEntry::new(
            "median-genocchi",
            "4^n H_{2n+1} as the alternating binomial sum of x sech x coefficients",
            &[("n", 12)],
            median_genocchi,
        ),
        IdentityEntry::new(
            "median-genocchi-euler",
            "4^n H_{2n+1} as the alternating binomial sum of (2i+1) E_{2i}",
            &[("n", 12)],
            median_genocchi_euler,
        ),
        IdentityEntry::new(
            "sech-split",
            "generating function split x sech x = 2x e^{-x} - sinh x B(4x)",
            &[("x", 24)],
            sech_split,
        ),
    ]
}
