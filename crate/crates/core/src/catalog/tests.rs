use rayon::prelude::*;

use super::*;
use crate::poly::PolyRing;
use crate::rat::rat_int;
use crate::rng::XorShift;

#[test]
fn registry_order_is_stable_and_ids_are_unique() {
    let a: Vec<String> = entries().iter().map(|e| e.id().to_string()).collect();
    let b: Vec<String> = entries().iter().map(|e| e.id().to_string()).collect();
    assert_eq!(a, b);
    let listed: Vec<String> = catalog_list().iter().map(|m| m.id.clone()).collect();
    assert_eq!(a, listed);
}

#[test]
fn catalog_contains_the_expected_entries() {
    let ids: Vec<String> = entries().iter().map(|e| e.id().to_string()).collect();
    for required in [
        "charlier-egf",
        "hermite-square-egf",
        "mehler",
        "ab-pair-egf",
        "pfaff-saalschutz",
        "q-binomial-theorem",
        "rogers-szego-bilinear",
        "rogers-szego-nc",
        "bernoulli-recurrence",
        "kaneko",
        "kaneko-general",
        "genocchi-seidel",
        "median-genocchi",
        "sech-split",
        "cd0-derangement",
        "cd2-chu-vandermonde",
        "cd-neg1-lucas-zagier",
        "uv-binomial",
        "bell-rota",
    ] {
        assert!(ids.iter().any(|i| i == required), "missing entry {}", required);
    }
    assert!(ids.len() >= 40, "catalog has only {} entries", ids.len());
}

#[test]
fn metadata_records_floors_basis_and_ksum_bounds() {
    assert_eq!(find("charlier-shift-monomials").basis_k(), Some(6));
    assert_eq!(find("mehler").basis_k(), None);

    assert_eq!(find("charlier-even").ksum_bound(), Some(7));
    assert_eq!(find("charlier-mixed").ksum_bound(), Some(5));
    assert_eq!(find("charlier-bilinear").ksum_bound(), Some(6));
    assert_eq!(find("derangement-even").ksum_bound(), Some(9));
    assert_eq!(find("derangement-square").ksum_bound(), Some(9));
    assert_eq!(find("hermite-triple").ksum_bound(), Some(3));

    assert_eq!(find("genocchi-seidel").floor_of("n"), 2);
    assert_eq!(find("kaneko-general").floor_of("n"), 1);
    assert_eq!(find("kaneko-general").floor_of("k"), 1);
    assert_eq!(find("bernoulli-two-point").floor_of("m"), 1);
    assert_eq!(find("bernoulli-recurrence").floor_of("n"), 1);
}

#[test]
fn resolve_caps_applies_overrides_and_ignores_unknown_names() {
    let e = find("ab-pair-egf");
    let defaults = e.resolve_caps(&CapMap::new());
    assert_eq!(
        defaults,
        vec![("x".to_string(), 5), ("y".to_string(), 5)]
    );
    let mut ov = CapMap::new();
    ov.insert("x".to_string(), 3);
    ov.insert("nonsense".to_string(), 99);
    assert_eq!(
        e.resolve_caps(&ov),
        vec![("x".to_string(), 3), ("y".to_string(), 5)]
    );
}

#[test]
fn verify_honors_cap_overrides() {
    let mut ov = CapMap::new();
    ov.insert("x".to_string(), 3);
    let rep = find("charlier-egf").verify(&ov);
    assert!(rep.ok, "{:?}", rep.mismatch);
    assert_eq!(rep.caps, vec![("x".to_string(), 3)]);
    assert_eq!(rep.caps_string(), "x=3");
}

#[test]
#[should_panic(expected = "unknown identity id")]
fn find_panics_on_unknown_id() {
    find("no-such-identity");
}

#[test]
#[should_panic(expected = "below the floor")]
fn build_panics_below_floor() {
    find("genocchi-seidel").build(&[("n".to_string(), 1)]);
}

#[test]
fn whole_catalog_verifies_at_default_caps() {
    let reports = verify_all(Profile::Quick, &CapMap::new());
    assert_eq!(reports.len(), entries().len());
    for rep in reports {
        assert!(
            rep.ok,
            "{} failed at {}: {:?}",
            rep.id,
            rep.caps_string(),
            rep.mismatch
        );
    }
}

#[test]
fn whole_catalog_verifies_one_below_default_caps() {
    let all = entries();
    let reports: Vec<Report> = all
        .par_iter()
        .map(|e| {
            let mut ov = CapMap::new();
            for (name, cap) in e.default_caps() {
                let lowered = (*cap - 1).max(e.floor_of(name));
                ov.insert(name.to_string(), lowered);
            }
            e.verify(&ov)
        })
        .collect();
    for rep in reports {
        assert!(
            rep.ok,
            "{} failed at {}: {:?}",
            rep.id,
            rep.caps_string(),
            rep.mismatch
        );
    }
}

#[test]
fn full_profile_raises_caps_unless_overridden() {
    let mut ov = CapMap::new();
    ov.insert("q".to_string(), 6);
    let reports = verify_all(Profile::Full, &ov);
    for rep in &reports {
        assert!(
            rep.ok,
            "{} failed at {}: {:?}",
            rep.id,
            rep.caps_string(),
            rep.mismatch
        );
    }
    let by_id = |id: &str| reports.iter().find(|r| r.id == id).unwrap();
    assert_eq!(
        by_id("mehler").caps,
        vec![("x".to_string(), 7)]
    );
    assert_eq!(
        by_id("q-binomial-theorem").caps,
        vec![("x".to_string(), 6), ("q".to_string(), 6)]
    );
}

/// The recorded auxiliary-sum bounds saturate their series caps: pushing any
/// of them higher must not change a single in-cap coefficient.
#[test]
fn ksum_bounds_are_saturated() {
    let ca = PolyRing::new(&["u", "alpha"]);
    let spec = VarSpec::new(&ca, &[("x", 6)]);
    assert_eq!(
        compare(&charlier::even_rhs(&spec, 7), &charlier::even_rhs(&spec, 10)),
        None
    );
    let spec = VarSpec::new(&ca, &[("x", 4), ("y", 4)]);
    assert_eq!(
        compare(&charlier::mixed_rhs(&spec, 5), &charlier::mixed_rhs(&spec, 8)),
        None
    );
    let cb = PolyRing::new(&["u", "v", "alpha", "beta"]);
    let spec = VarSpec::new(&cb, &[("x", 5)]);
    assert_eq!(
        compare(
            &charlier::bilinear_rhs(&spec, 6),
            &charlier::bilinear_rhs(&spec, 9)
        ),
        None
    );
    let scalar = PolyRing::new(&[]);
    let spec = VarSpec::new(&scalar, &[("x", 8)]);
    assert_eq!(
        compare(
            &charlier::derangement_even_rhs(&spec, 9),
            &charlier::derangement_even_rhs(&spec, 12)
        ),
        None
    );
    assert_eq!(
        compare(
            &charlier::derangement_square_rhs(&spec, 9),
            &charlier::derangement_square_rhs(&spec, 12)
        ),
        None
    );
    let hr = PolyRing::new(&["u"]);
    let spec = VarSpec::new(&hr, &[("x", 4)]);
    assert_eq!(
        compare(&hermite::triple_rhs(&spec, 3), &hermite::triple_rhs(&spec, 5)),
        None
    );
}

#[test]
fn perturbed_mehler_reports_the_first_bad_monomial() {
    let e = find("mehler");
    let (lhs, rhs) = e.build(&e.resolve_caps(&CapMap::new()));
    let bump = Series::monomial(lhs.spec(), &[("x", 2)], Poly::one(lhs.spec().ring()));
    let m = compare(&lhs, &rhs.add(&bump)).expect("perturbation must be detected");
    assert_eq!(m.monomial, "x^2");
    assert_ne!(m.lhs, m.rhs);
    assert_eq!(compare(&lhs, &rhs), None);
}

#[test]
fn perturbed_kaneko_reports_the_broken_row() {
    let e = find("kaneko");
    let (lhs, rhs) = e.build(&e.resolve_caps(&CapMap::new()));
    let bump = Series::monomial(lhs.spec(), &[("n", 3)], Poly::one(lhs.spec().ring()));
    let m = compare(&lhs.add(&bump), &rhs).expect("perturbation must be detected");
    assert_eq!(m.monomial, "n^3");
    assert_eq!(m.rhs, "0");
}

#[test]
fn perturbed_q_binomial_reports_the_first_bad_monomial() {
    let e = find("q-binomial-theorem");
    let (lhs, rhs) = e.build(&e.resolve_caps(&CapMap::new()));
    let bump = Series::monomial(lhs.spec(), &[("x", 1), ("q", 1)], Poly::one(lhs.spec().ring()));
    let m = compare(&lhs, &rhs.add(&bump)).expect("perturbation must be detected");
    assert_eq!(m.monomial, "x*q");
}

#[test]
fn dense_poly_helpers_agree_with_direct_expansion() {
    let f = vec![rat_int(1), rat_int(-3), rat_int(2)];
    assert_eq!(
        poly_affine(&f, 2, 1),
        vec![rat_int(0), rat_int(2), rat_int(8)]
    );
    assert_eq!(poly_shift(&f, 1), vec![rat_int(0), rat_int(1), rat_int(2)]);
    assert_eq!(poly_reflect(&f), vec![rat_int(1), rat_int(3), rat_int(2)]);
    assert_eq!(poly_deriv(&f), vec![rat_int(-3), rat_int(4)]);
    assert_eq!(poly_eval_int(&f, 3), rat_int(10));
    assert_eq!(
        poly_mul(&[rat_int(1), rat_int(1)], &[rat_int(1), rat_int(-1)]),
        vec![rat_int(1), rat_int(0), rat_int(-1)]
    );
    assert_eq!(int_pow(-2, 3), rat_int(-8));
    assert_eq!(int_pow(0, 0), rat_int(1));
    assert_eq!(int_pow(7, 0), rat_int(1));
}

#[test]
fn random_polynomials_are_reproducible_with_full_degree() {
    let mut a = XorShift::new(0xabcd);
    let mut b = XorShift::new(0xabcd);
    for deg in 0..8 {
        let f = random_int_poly(&mut a, deg);
        let g = random_int_poly(&mut b, deg);
        assert_eq!(f, g);
        assert_eq!(f.len(), deg + 1);
        assert!(!f[deg].is_zero());
    }
}
