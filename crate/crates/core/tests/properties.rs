//! Randomized algebraic properties: ring axioms, series calculus, valuation
//! arithmetic, umbral evaluation, and normal ordering.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};
use proptest::prelude::*;

use umbra_core::qalg::{qbinom_poly, qbinom_series, NcPoly};
use umbra_core::rat::{binomial, congruent, valuation, Valuation};
use umbra_core::seq;
use umbra_core::umbra::{ueval, Umbra, UmbraFamily};
use umbra_core::{rat, rat_int, Poly, PolyRing, Rat, Series, VarSpec};

fn param_ring() -> Arc<PolyRing> {
    PolyRing::new(&["u", "v"])
}

fn xy_spec() -> Arc<VarSpec> {
    VarSpec::new(&param_ring(), &[("x", 4), ("y", 3)])
}

fn q_spec() -> Arc<VarSpec> {
    VarSpec::new(&param_ring(), &[("q", 12)])
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-120i64..=120, 1i64..=40).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..=120, 1i64..=40, proptest::bool::ANY)
        .prop_map(|(n, d, neg)| if neg { rat(-n, d) } else { rat(n, d) })
}

fn small_prime() -> impl Strategy<Value = u64> {
    proptest::sample::select(vec![2u64, 3, 5, 7, 13])
}

fn small_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(((0u32..=2, 0u32..=2), -9i64..=9), 0..=4).prop_map(|terms| {
        let ring = param_ring();
        let mut p = Poly::zero(&ring);
        for ((eu, ev), c) in terms {
            p = &p + &Poly::monomial(&ring, &[("u", eu), ("v", ev)], rat_int(c));
        }
        p
    })
}

/// A random series in x, y with coefficients in u; `zero_ct` drops any
/// constant term so that exp and log apply.
fn small_series(zero_ct: bool) -> impl Strategy<Value = Series> {
    proptest::collection::vec(((0u32..=4, 0u32..=3, 0u32..=2), (-9i64..=9, 1i64..=6)), 0..=6)
        .prop_map(move |terms| {
            let spec = xy_spec();
            let ring = spec.ring().clone();
            let mut s = Series::zero(&spec);
            for ((ex, ey, eu), (n, d)) in terms {
                if zero_ct && ex == 0 && ey == 0 {
                    continue;
                }
                let coeff = Poly::monomial(&ring, &[("u", eu)], rat(n, d));
                s = s.add(&Series::monomial(&spec, &[("x", ex), ("y", ey)], coeff));
            }
            s
        })
}

fn nc_poly() -> impl Strategy<Value = NcPoly> {
    proptest::collection::vec((proptest::array::uniform4(0u32..=2), -5i64..=5), 1..=3).prop_map(
        |terms| {
            let spec = q_spec();
            let mut p = NcPoly::zero(&spec);
            for (word, c) in terms {
                p = p.add(&NcPoly::word(&spec, word, Series::scalar(&spec, rat_int(c))));
            }
            p
        },
    )
}

fn const_moments(name: &str, values: &[i64]) -> Umbra {
    let ring = param_ring();
    Umbra::from_moments(
        name,
        values.iter().map(|&v| Poly::int(&ring, v)).collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms_hold(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &-&a, Poly::zero(&param_ring()));
    }

    #[test]
    fn series_mul_commutes_and_associates(
        f in small_series(false),
        g in small_series(false),
        h in small_series(false),
    ) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn exp_turns_sums_into_products(f in small_series(true), g in small_series(true)) {
        prop_assert_eq!(f.add(&g).exp(), f.exp().mul(&g.exp()));
    }

    #[test]
    fn log_inverts_exp(f in small_series(true)) {
        prop_assert_eq!(f.exp().log(), f.clone());
    }

    #[test]
    fn invert_gives_a_multiplicative_inverse(g in small_series(true)) {
        let f = Series::one(g.spec()).add(&g);
        prop_assert_eq!(f.invert().mul(&f), Series::one(g.spec()));
    }

    #[test]
    fn pow_sym_adds_exponents(
        g in small_series(true),
        n1 in -4i64..=4, d1 in 1i64..=4,
        n2 in -4i64..=4, d2 in 1i64..=4,
    ) {
        let ring = g.spec().ring().clone();
        let f = Series::one(g.spec()).add(&g);
        let e1 = Poly::constant(&ring, rat(n1, d1));
        let e2 = Poly::constant(&ring, rat(n2, d2));
        prop_assert_eq!(f.pow_sym(&(&e1 + &e2)), f.pow_sym(&e1).mul(&f.pow_sym(&e2)));
    }

    #[test]
    fn truncation_commutes_with_arithmetic(
        f in small_series(false),
        g in small_series(false),
        e in small_series(true),
    ) {
        let lo = xy_spec().with_caps(&[("x", 2), ("y", 1)]);
        prop_assert_eq!(
            f.mul(&g).truncate(&lo),
            f.truncate(&lo).mul(&g.truncate(&lo))
        );
        prop_assert_eq!(
            f.add(&g).truncate(&lo),
            f.truncate(&lo).add(&g.truncate(&lo))
        );
        prop_assert_eq!(e.exp().truncate(&lo), e.truncate(&lo).exp());
    }

    #[test]
    fn rat_valuation_is_additive(a in nonzero_rat(), b in nonzero_rat(), p in small_prime()) {
        let va = valuation(&a, p).unwrap_finite();
        let vb = valuation(&b, p).unwrap_finite();
        prop_assert_eq!(valuation(&(&a * &b), p), Valuation::Finite(va + vb));
    }

    #[test]
    fn rat_valuation_is_ultrametric(a in small_rat(), b in small_rat(), p in small_prime()) {
        let va = valuation(&a, p);
        let vb = valuation(&b, p);
        let floor = [va, vb]
            .iter()
            .filter(|w| w.is_finite())
            .map(|w| w.unwrap_finite())
            .min();
        if let Some(floor) = floor {
            let vsum = valuation(&(&a + &b), p);
            prop_assert!(!vsum.is_finite() || vsum.unwrap_finite() >= floor);
        }
    }

    #[test]
    fn rat_congruence_is_transitive(
        x in small_rat(),
        k1 in -20i64..=20, k2 in -20i64..=20, k3 in -20i64..=20,
        p in small_prime(),
        r in -2i64..=3,
    ) {
        let step = if r >= 0 {
            rat_int((p as i64).pow(r as u32))
        } else {
            rat(1, (p as i64).pow(-r as u32))
        };
        let a = &x + &(&rat_int(k1) * &step);
        let b = &x + &(&rat_int(k2) * &step);
        let c = &x + &(&rat_int(k3) * &step);
        prop_assert!(congruent(&a, &a, p, r));
        prop_assert!(congruent(&a, &b, p, r));
        prop_assert!(congruent(&b, &c, p, r));
        prop_assert!(congruent(&a, &c, p, r));
    }

    #[test]
    fn ueval_is_linear(
        sterms in proptest::collection::vec(((0u32..=3, 0u32..=3), -9i64..=9), 0..=5),
        tterms in proptest::collection::vec(((0u32..=3, 0u32..=3), -9i64..=9), 0..=5),
        alpha in small_poly(),
        beta in small_poly(),
        moments in proptest::collection::vec(-9i64..=9, 6),
    ) {
        let spec = VarSpec::new(&param_ring(), &[("x", 3), ("B", 3)]);
        let build = |terms: &[((u32, u32), i64)]| {
            let mut s = Series::zero(&spec);
            for &((ex, eb), c) in terms {
                let coeff = Poly::int(spec.ring(), c);
                s = s.add(&Series::monomial(&spec, &[("x", ex), ("B", eb)], coeff));
            }
            s
        };
        let s = build(&sterms);
        let t = build(&tterms);
        let fam = UmbraFamily::single(const_moments("B", &moments));
        let lhs = ueval(&s.scale_poly(&alpha).add(&t.scale_poly(&beta)), &fam);
        let rhs = ueval(&s, &fam)
            .scale_poly(&alpha)
            .add(&ueval(&t, &fam).scale_poly(&beta));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ueval_factorizes_over_independent_umbrae(
        fcoeffs in proptest::collection::vec(-9i64..=9, 4),
        gcoeffs in proptest::collection::vec(-9i64..=9, 4),
        amoments in proptest::collection::vec(-9i64..=9, 7),
        bmoments in proptest::collection::vec(-9i64..=9, 7),
    ) {
        // eval_{A,B}(f(A) g(B)) = eval_A(f(A)) eval_B(g(B)): the joint
        // functional on a product of pure factors is the product of each
        // umbra's own functional, with no normalization assumed.
        let ring = param_ring();
        let joint = VarSpec::new(&ring, &[("A", 3), ("B", 3)]);
        let univariate = |spec: &Arc<VarSpec>, name: &str, coeffs: &[i64]| {
            let mut s = Series::zero(spec);
            for (k, &c) in coeffs.iter().enumerate() {
                let coeff = Poly::int(spec.ring(), c);
                s = s.add(&Series::monomial(spec, &[(name, k as u32)], coeff));
            }
            s
        };
        let spec_a = VarSpec::new(&ring, &[("A", 3)]);
        let spec_b = VarSpec::new(&ring, &[("B", 3)]);
        let ua = const_moments("A", &amoments);
        let ub = const_moments("B", &bmoments);
        let lhs = ueval(
            &univariate(&joint, "A", &fcoeffs).mul(&univariate(&joint, "B", &gcoeffs)),
            &UmbraFamily::independent(vec![ua.clone(), ub.clone()]),
        );
        let fa = ueval(&univariate(&spec_a, "A", &fcoeffs), &UmbraFamily::single(ua));
        let fb = ueval(&univariate(&spec_b, "B", &gcoeffs), &UmbraFamily::single(ub));
        prop_assert_eq!(
            lhs.constant_term(),
            &fa.constant_term() * &fb.constant_term()
        );
    }

    #[test]
    fn normal_ordering_is_confluent(a in nc_poly(), b in nc_poly(), c in nc_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }
}

#[test]
fn delta_pair_moments_follow_the_kronecker_rule() {
    let ring = param_ring();
    let fam = UmbraFamily::delta_pair("A", "B");
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            let want = if m == n {
                Poly::constant(&ring, Rat::from(umbra_core::rat::factorial(m as usize)))
            } else {
                Poly::zero(&ring)
            };
            assert_eq!(fam.joint_moment(&ring, &[m, n]), want, "m = {}, n = {}", m, n);
        }
    }
}

#[test]
fn bernoulli_umbra_shift_is_the_kronecker_delta() {
    let ring = param_ring();
    let spec = VarSpec::new(&ring, &[("B", 12)]);
    let moments: Vec<Poly> = (0..=12)
        .map(|i| Poly::constant(&ring, seq::bernoulli(i)))
        .collect();
    let fam = UmbraFamily::single(Umbra::from_moments("B", moments));
    let b = Series::var(&spec, "B");
    let shifted = Series::one(&spec).add(&b);
    for n in 0..=12u32 {
        let diff = ueval(&shifted.pow(n).sub(&b.pow(n)), &fam);
        let want = if n == 1 { Rat::one() } else { Rat::zero() };
        assert_eq!(
            diff.constant_term().expect_constant(),
            want,
            "n = {}",
            n
        );
    }
}

#[test]
fn bell_umbra_falling_factorial_evaluates_to_one() {
    let ring = param_ring();
    let spec = VarSpec::new(&ring, &[("B", 10)]);
    let moments: Vec<Poly> = (0..=10)
        .map(|i| Poly::constant(&ring, Rat::from(seq::bell(i))))
        .collect();
    let fam = UmbraFamily::single(Umbra::from_moments("B", moments));
    let b = Series::var(&spec, "B");
    for n in 0..=10u32 {
        let mut falling = Series::one(&spec);
        for i in 0..n {
            falling = falling.mul(&b.sub(&Series::scalar(&spec, rat_int(i as i64))));
        }
        assert_eq!(
            ueval(&falling, &fam).constant_term().expect_constant(),
            Rat::one(),
            "n = {}",
            n
        );
    }
}

#[test]
fn noncommutative_binomial_expands_with_q_binomials() {
    let spec = q_spec();
    let a = NcPoly::letter(&spec, 0);
    let b = NcPoly::letter(&spec, 1);
    for n in 0..=5u32 {
        let lhs = a.add(&b).pow(n);
        let mut rhs = NcPoly::zero(&spec);
        for k in 0..=n {
            rhs = rhs.add(&NcPoly::word(
                &spec,
                [k, n - k, 0, 0],
                qbinom_series(&spec, n, k),
            ));
        }
        assert_eq!(lhs, rhs, "n = {}", n);
    }
}

#[test]
fn qbinom_is_symmetric_satisfies_pascal_and_specializes() {
    let ring = PolyRing::new(&["q"]);
    let q = Poly::var(&ring, "q");
    let at_one: BTreeMap<String, Rat> = [("q".to_string(), Rat::one())].into();
    for n in 0..=10u32 {
        for k in 0..=n {
            let g = qbinom_poly(&ring, n, k);
            assert_eq!(g, qbinom_poly(&ring, n, n - k), "symmetry at {},{}", n, k);
            assert_eq!(
                g.eval(&at_one),
                Rat::from(binomial(n as usize, k as usize)),
                "q = 1 at {},{}",
                n,
                k
            );
            if k >= 1 && k < n {
                let pascal = &qbinom_poly(&ring, n - 1, k - 1)
                    + &(&q.pow(k) * &qbinom_poly(&ring, n - 1, k));
                assert_eq!(g, pascal, "q-Pascal at {},{}", n, k);
            }
        }
    }
}
