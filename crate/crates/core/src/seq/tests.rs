use super::*;
use crate::rat::congruent;

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn bernoulli_values() {
    assert_eq!(bernoulli(0), rat_int(1));
    assert_eq!(bernoulli(1), rat(-1, 2));
    assert_eq!(bernoulli(2), rat(1, 6));
    assert_eq!(bernoulli(3), rat_int(0));
    assert_eq!(bernoulli(4), rat(-1, 30));
    assert_eq!(bernoulli(12), rat(-691, 2730));
    assert_eq!(bernoulli_tilde(2), rat(1, 2));
}

#[test]
fn bernoulli_odd_vanish_and_two_integrality() {
    for n in (3..=99).step_by(2) {
        assert_eq!(bernoulli(n), rat_int(0), "B_{} should vanish", n);
    }
    for n in (2..=60).step_by(2) {
        assert!(
            congruent(&bernoulli(n), &rat(1, 2), 2, 0),
            "B_{} should be 1/2 plus a 2-integral",
            n
        );
    }
}

#[test]
fn bell_values() {
    let expect = [1, 1, 2, 5, 15, 52, 203, 877];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(bell(n), int(*e));
    }
}

#[test]
fn euler_values() {
    assert_eq!(euler(0), int(1));
    assert_eq!(euler(2), int(-1));
    assert_eq!(euler(4), int(5));
    assert_eq!(euler(6), int(-61));
    assert_eq!(euler(8), int(1385));
    for n in (1..=41).step_by(2) {
        assert_eq!(euler(n), int(0), "E_{} should vanish", n);
    }
}

#[test]
fn tangent_values() {
    assert_eq!(tangent(0), int(0));
    assert_eq!(tangent(1), int(1));
    assert_eq!(tangent(3), int(-2));
    assert_eq!(tangent(5), int(16));
    assert_eq!(tangent(7), int(-272));
    for n in (0..=30).step_by(2) {
        assert_eq!(tangent(n), int(0), "T_{} should vanish", n);
    }
}

#[test]
fn genocchi_values() {
    let expect = [0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(genocchi(n), int(*e), "g_{}", n);
    }
    for i in 1..=45 {
        assert_eq!(genocchi(2 * i + 1), int(0), "g_{} should vanish", 2 * i + 1);
    }
}

#[test]
fn seidel_sums_vanish() {
    for n in 2..=30usize {
        let mut s = BigInt::zero();
        for j in 0..=n / 2 {
            s += binomial(n, 2 * j) * genocchi(2 * n - 2 * j);
        }
        assert!(s.is_zero(), "even-slot Seidel sum at n = {}", n);
    }
    for n in 0..=30usize {
        let mut s = BigInt::zero();
        for i in 0..=n {
            s += binomial(n, i) * genocchi(n + i);
        }
        assert!(s.is_zero(), "full Seidel sum at n = {}", n);
    }
}

#[test]
fn median_genocchi_values() {
    let expect = [1, -1, 2, -8, 56, -608, 9440];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(median_genocchi(n), int(*e), "H_{}", 2 * n + 1);
        assert_eq!(median_genocchi_by_euler(n), int(*e), "H_{} by Euler sum", 2 * n + 1);
    }
}

#[test]
fn xsech_values() {
    assert_eq!(xsech(0), int(0));
    assert_eq!(xsech(1), int(1));
    assert_eq!(xsech(2), int(0));
    assert_eq!(xsech(3), int(-3));
    assert_eq!(xsech(5), int(25));
    assert_eq!(xsech_gen(1, 0), int(1));
    assert_eq!(xsech_gen(1, 1), int(-3));
    assert_eq!(xsech_gen(1, 2), int(25));
}

#[test]
fn gen_euler_values() {
    for n in 0..=10 {
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        assert_eq!(gen_euler(1, n), sign);
        assert_eq!(gen_euler(2, n), euler(2 * n));
    }
    assert_eq!(gen_euler(3, 0), int(1));
    assert_eq!(gen_euler(3, 1), int(-1));
}

#[test]
fn derangement_values() {
    let expect = [1, 0, 1, 2, 9, 44, 265, 1854];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(derangement(n), int(*e));
    }
}

#[test]
fn stirling_values() {
    assert_eq!(stirling2(3, 2), int(3));
    assert_eq!(stirling2(4, 2), int(7));
    assert_eq!(stirling2(5, 3), int(25));
    assert_eq!(stirling2(4, 5), int(0));
    for m in 1..=6 {
        assert_eq!(stirling2(m, 1), int(1));
        assert_eq!(stirling2(m, m), int(1));
    }
}

#[test]
fn fibonacci_and_lucas_values() {
    let expect = [1, 1, 2, 3, 5, 8, 13];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(fibonacci(n as i64), int(*e));
    }
    assert_eq!(fibonacci(-1), int(0));
    assert_eq!(fibonacci(-2), int(1));
    assert_eq!(fibonacci(-3), int(-1));
    assert_eq!(fibonacci(-4), int(2));
    let expect_l = [1, 3, 4, 7, 11, 18];
    for (n, e) in expect_l.iter().enumerate() {
        assert_eq!(lucas(n as i64), int(*e));
    }
}

#[test]
fn zagier_bstar_values() {
    assert_eq!(zagier_bstar(1), rat(3, 4));
    assert_eq!(zagier_bstar(3), rat(-1, 4));
    assert_eq!(zagier_bstar(5), rat(-1, 4));
    assert_eq!(zagier_bstar(7), rat(1, 4));
    assert_eq!(zagier_bstar(9), rat(1, 4));
    assert_eq!(zagier_bstar(11), rat(-3, 4));
    assert_eq!(zagier_bstar(13), rat(3, 4));
}

#[test]
#[should_panic(expected = "defined for n >= 1")]
fn zagier_bstar_rejects_zero() {
    zagier_bstar(0);
}

#[test]
fn dellac_values() {
    let expect = [1, 2, 7, 38, 295];
    for (i, e) in expect.iter().enumerate() {
        assert_eq!(dellac_count(i + 1), int(*e));
    }
}

#[test]
fn charlier_small() {
    let ring = charlier_ring();
    let u = Poly::var(&ring, "u");
    let alpha = Poly::var(&ring, "alpha");
    assert_eq!(charlier(0), Poly::one(&ring));
    assert_eq!(charlier(1), &u + &alpha);
    let expect = &(&(&alpha * &(&alpha + &Poly::one(&ring))) + &(&u * &alpha).scale(&rat_int(2)))
        + &u.pow(2);
    assert_eq!(charlier(2), expect);
}

#[test]
fn hermite_small() {
    let ring = hermite_ring();
    let u = Poly::var(&ring, "u");
    assert_eq!(hermite(0), Poly::one(&ring));
    assert_eq!(hermite(1), u.scale(&rat_int(2)));
    assert_eq!(
        hermite(2),
        &u.pow(2).scale(&rat_int(4)) - &Poly::int(&ring, 2)
    );
    assert_eq!(
        hermite(3),
        &u.pow(3).scale(&rat_int(8)) - &u.scale(&rat_int(12))
    );
}

#[test]
fn carlitz_hermite_small() {
    let ring = carlitz_ring();
    let u = Poly::var(&ring, "u");
    let v = Poly::var(&ring, "v");
    let expect = &(&u.pow(2) * &v) + &u.scale(&rat_int(2));
    assert_eq!(carlitz_hermite(2, 1), expect);
}

#[test]
fn rogers_szego_small() {
    let ring = rogers_szego_ring();
    let u = Poly::var(&ring, "u");
    let q = Poly::var(&ring, "q");
    assert_eq!(rogers_szego(1), &Poly::one(&ring) + &u);
    let expect = &(&Poly::one(&ring) + &(&(&Poly::one(&ring) + &q) * &u)) + &u.pow(2);
    assert_eq!(rogers_szego(2), expect);
}

#[test]
fn eulerian_small() {
    let ring = eulerian_ring();
    let t = Poly::var(&ring, "t");
    assert_eq!(eulerian(0), Poly::one(&ring));
    assert_eq!(eulerian(1), t);
    assert_eq!(eulerian(2), &t + &t.pow(2));
    let a3 = &(&t + &t.pow(2).scale(&rat_int(4))) + &t.pow(3);
    assert_eq!(eulerian(3), a3);
    let a3t = &(&Poly::one(&ring) + &t.scale(&rat_int(4))) + &t.pow(2);
    assert_eq!(eulerian_tilde(3), a3t);
    assert_eq!(eulerian_tilde(0), Poly::one(&ring));
}

#[test]
fn eulerian_egf_product() {
    // S(x) (1 - t e^{(1-t)x}) = 1 - t within the truncation order
    let ring = eulerian_ring();
    let spec = VarSpec::new(&ring, &[("x", 10)]);
    let x = Series::var(&spec, "x");
    let t = Poly::var(&ring, "t");
    let one_minus_t = &Poly::one(&ring) - &t;
    let mut s = Series::zero(&spec);
    for n in 0..=10usize {
        let coeff = eulerian(n).scale(&(rat_int(1) / Rat::from(factorial(n))));
        s = s.add(&Series::monomial(&spec, &[("x", n as u32)], coeff));
    }
    let denom = Series::one(&spec).sub(&x.scale_poly(&one_minus_t).exp().scale_poly(&t));
    assert_eq!(s.mul(&denom), Series::constant(&spec, one_minus_t));
}

#[test]
fn pair_law_and_inversion() {
    for pair in cd_pairs() {
        for n in 0..=20usize {
            if pair.forward_is_claim {
                let mut lhs = Poly::zero(&pair.ring);
                for i in 0..=n {
                    lhs += &pair.c_at(i, n).scale(&Rat::from(binomial(n, i)));
                }
                assert_eq!(
                    lhs,
                    pair.d_at(n, n),
                    "forward transform for pair {} at n = {}",
                    pair.id,
                    n
                );
            }
            let mut inv = Poly::zero(&pair.ring);
            for i in 0..=n {
                let sign = if (n - i) % 2 == 0 { rat_int(1) } else { rat_int(-1) };
                inv += &pair.d_at(i, n).scale(&(sign * Rat::from(binomial(n, i))));
            }
            assert_eq!(
                inv,
                pair.c_at(n, n),
                "inversion for pair {} at n = {}",
                pair.id,
                n
            );
        }
    }
}

#[test]
fn seq_id_dispatch() {
    assert_eq!(SeqId::Bernoulli.value(12), rat(-691, 2730));
    assert_eq!(SeqId::ZagierBstar.value(1), rat(3, 4));
    assert_eq!(SeqId::Fibonacci.value(-3), rat_int(-1));
    assert_eq!(SeqId::GenEuler(2).value(3), Rat::from(euler(6)));
    assert_eq!(SeqId::Hermite.poly(2), hermite(2));
    assert!(SeqId::Bernoulli.is_scalar());
    assert!(!SeqId::Eulerian.is_scalar());
}

#[test]
#[should_panic(expected = "not a scalar sequence")]
fn seq_id_rejects_poly_as_scalar() {
    SeqId::Charlier.value(3);
}

#[test]
fn dual_routes_agree() {
    for check in dual_route_report() {
        assert!(
            check.ok,
            "dual route mismatch for {} ({}) at {:?}",
            check.id, check.range, check.first_bad
        );
    }
}
