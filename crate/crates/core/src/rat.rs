//! Exact rational arithmetic, p-adic valuations and congruences.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. The p-adic valuation of 0 is [`Valuation::Infinity`],
//! which compares greater than every finite valuation.

use num::bigint::BigInt;
use num::{BigRational, Integer, One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// Reduced arbitrary-precision rational with positive denominator.
pub type Rat = BigRational;

/// Shorthand for the rational n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer n as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// p-adic valuation: the exponent of p in a rational, or infinity for 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Valuation {
    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    /// The finite value, panicking on infinity.
    pub fn unwrap_finite(&self) -> i64 {
        match self {
            Valuation::Finite(v) => *v,
            Valuation::Infinity => panic!("valuation is infinite"),
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinity,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{}", v),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// Trial-division primality, adequate for the small moduli used here.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of p in a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinity;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a rational for prime p. `valuation(0, p)` is infinite.
pub fn valuation(a: &Rat, p: u64) -> Valuation {
    assert!(is_prime(p), "valuation requires a prime, got {}", p);
    if a.is_zero() {
        return Valuation::Infinity;
    }
    let vn = int_valuation(a.numer(), p).unwrap_finite();
    let vd = int_valuation(a.denom(), p).unwrap_finite();
    Valuation::Finite(vn - vd)
}

/// Whether a ≡ b (mod p^r) in the p-integral sense: ρ_p(a − b) ≥ r.
///
/// With r = 0 this says a − b has denominator prime to p; negative r is
/// allowed and weakens the condition accordingly.
pub fn congruent(a: &Rat, b: &Rat, p: u64, r: i64) -> bool {
    valuation(&(a - b), p) >= Valuation::Finite(r)
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k) for integer n, zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// C(n, k) as a rational.
pub fn binomial_rat(n: usize, k: usize) -> Rat {
    Rat::from_integer(binomial(n, k))
}

/// n! as a rational.
pub fn factorial_rat(n: usize) -> Rat {
    Rat::from_integer(factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_of_basic_rationals() {
        assert_eq!(valuation(&rat(1, 2), 2), Valuation::Finite(-1));
        assert_eq!(valuation(&rat(4, 3), 2), Valuation::Finite(2));
        assert_eq!(valuation(&rat_int(0), 5), Valuation::Infinity);
        assert_eq!(valuation(&rat(9, 8), 3), Valuation::Finite(2));
        assert_eq!(valuation(&rat(7, 10), 5), Valuation::Finite(-1));
    }

    #[test]
    fn valuation_ordering_and_sum() {
        assert!(Valuation::Infinity > Valuation::Finite(1_000_000));
        assert!(Valuation::Finite(-3) < Valuation::Finite(0));
        assert_eq!(
            Valuation::Finite(2) + Valuation::Finite(-5),
            Valuation::Finite(-3)
        );
        assert_eq!(Valuation::Finite(2) + Valuation::Infinity, Valuation::Infinity);
    }

    #[test]
    #[should_panic(expected = "requires a prime")]
    fn valuation_rejects_composite_modulus() {
        valuation(&rat(1, 2), 6);
    }

    #[test]
    fn congruence_in_the_two_integral_sense() {
        // B_4 = -1/30 satisfies B_4 ≡ 1/2 + 4 (mod 4).
        let b4 = rat(-1, 30);
        assert!(congruent(&b4, &rat(9, 2), 2, 2));
        assert!(!congruent(&b4, &rat(9, 2), 2, 3));
        // Every Bernoulli-style half-integer is ≡ 1/2 (mod 1).
        assert!(congruent(&rat(-1, 30), &rat(1, 2), 2, 0));
        assert!(congruent(&rat(1, 42), &rat(1, 2), 2, 0));
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
