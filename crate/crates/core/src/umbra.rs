//! Umbrae as linear moment functionals.
//!
//! An [`Umbra`] is a symbol together with its moment sequence: the functional
//! sends the n-th power of the symbol to the n-th moment, a polynomial in the
//! coefficient ring. Moments are evaluated per term and multilinearly, never
//! through algebraic shortcuts, so `eval(1)` may well be 0 (the moment of
//! order zero is whatever the sequence says).
//!
//! An [`UmbraFamily`] is a product of blocks that are mutually independent:
//! either a single umbra or a delta pair (A, B) with joint moments
//! `A^m B^n -> m!` when m = n and 0 otherwise. Joint moments factor across
//! blocks. Exchangeable umbrae are independent copies sharing one moment
//! sequence, built with [`Umbra::renamed`].
//!
//! Umbral series are ordinary [`Series`] whose spec carries the umbral
//! symbols as extra variables; [`ueval`] contracts those variables away.

use crate::poly::{Poly, PolyRing};
use crate::rat::factorial_rat;
use crate::series::{Series, VarSpec};
use std::sync::Arc;

/// A named umbra with explicit moments `moments[n] = eval(symbol^n)`.
#[derive(Clone, Debug)]
pub struct Umbra {
    name: String,
    moments: Vec<Poly>,
}

impl Umbra {
    pub fn from_moments(name: &str, moments: Vec<Poly>) -> Umbra {
        assert!(!moments.is_empty(), "an umbra needs at least moment 0");
        Umbra {
            name: name.to_string(),
            moments,
        }
    }

    /// Moments `f(n)` for n = 0..=cap.
    pub fn from_fn(name: &str, cap: u32, f: impl Fn(usize) -> Poly) -> Umbra {
        Umbra::from_moments(name, (0..=cap as usize).map(f).collect())
    }

    /// Moments read off a univariate EGF: `eval(symbol^n) = n! [x^n] f`.
    pub fn from_egf(name: &str, f: &Series) -> Umbra {
        assert_eq!(
            f.spec().arity(),
            1,
            "moment extraction needs a univariate series"
        );
        let var = f.spec().vars()[0].clone();
        let cap = f.spec().caps()[0];
        Umbra::from_fn(name, cap, |n| f.egf_coeff(&[(var.as_str(), n as u32)]))
    }

    /// An exchangeable copy: same moment sequence under a new symbol.
    pub fn renamed(&self, name: &str) -> Umbra {
        Umbra {
            name: name.to_string(),
            moments: self.moments.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn moment(&self, n: usize) -> &Poly {
        assert!(
            n < self.moments.len(),
            "umbral cap too small for requested ordinary caps: \
             moment {} of {:?} was never computed (table holds 0..={})",
            n,
            self.name,
            self.moments.len() - 1
        );
        &self.moments[n]
    }

    pub fn max_moment(&self) -> usize {
        self.moments.len() - 1
    }
}

#[derive(Clone, Debug)]
enum Block {
    Single(Umbra),
    /// (A, B) with eval(A^m B^n) = m! δ_{m,n}.
    DeltaPair(String, String),
}

impl Block {
    fn symbols(&self) -> Vec<&str> {
        match self {
            Block::Single(u) => vec![u.name()],
            Block::DeltaPair(a, b) => vec![a, b],
        }
    }
}

/// A product of independent blocks; joint moments factor across blocks.
#[derive(Clone, Debug)]
pub struct UmbraFamily {
    blocks: Vec<Block>,
}

impl UmbraFamily {
    pub fn single(u: Umbra) -> UmbraFamily {
        UmbraFamily {
            blocks: vec![Block::Single(u)],
        }
    }

    pub fn independent(umbrae: Vec<Umbra>) -> UmbraFamily {
        let fam = UmbraFamily {
            blocks: umbrae.into_iter().map(Block::Single).collect(),
        };
        fam.assert_distinct();
        fam
    }

    pub fn delta_pair(a: &str, b: &str) -> UmbraFamily {
        assert!(a != b, "a delta pair needs two distinct symbols");
        UmbraFamily {
            blocks: vec![Block::DeltaPair(a.to_string(), b.to_string())],
        }
    }

    /// Product of two independent families.
    pub fn product(mut self, other: UmbraFamily) -> UmbraFamily {
        self.blocks.extend(other.blocks);
        self.assert_distinct();
        self
    }

    fn assert_distinct(&self) {
        let syms = self.symbols();
        for (i, s) in syms.iter().enumerate() {
            assert!(
                !syms[..i].contains(s),
                "umbral symbol {:?} appears in two blocks",
                s
            );
        }
    }

    pub fn symbols(&self) -> Vec<&str> {
        self.blocks.iter().flat_map(|b| b.symbols()).collect()
    }

    /// Joint moment for degrees aligned with [`UmbraFamily::symbols`].
    pub fn joint_moment(&self, ring: &Arc<PolyRing>, degs: &[u32]) -> Poly {
        assert_eq!(degs.len(), self.symbols().len());
        let mut acc = Poly::one(ring);
        let mut i = 0;
        for block in &self.blocks {
            match block {
                Block::Single(u) => {
                    acc = &acc * u.moment(degs[i] as usize);
                    i += 1;
                }
                Block::DeltaPair(_, _) => {
                    let (m, n) = (degs[i], degs[i + 1]);
                    i += 2;
                    if m != n {
                        return Poly::zero(ring);
                    }
                    acc = acc.scale(&factorial_rat(m as usize));
                }
            }
            if acc.is_zero() {
                return acc;
            }
        }
        acc
    }
}

/// Apply the moment functional of `fam` to every term of `s`, contracting the
/// family's symbols out of the variable list.
pub fn ueval(s: &Series, fam: &UmbraFamily) -> Series {
    let spec = s.spec();
    let upos: Vec<usize> = fam
        .symbols()
        .iter()
        .map(|sym| {
            spec.vars()
                .iter()
                .position(|v| v == sym)
                .unwrap_or_else(|| panic!("unknown umbral symbol {:?} in series spec", sym))
        })
        .collect();
    let keep: Vec<usize> = (0..spec.arity()).filter(|i| !upos.contains(i)).collect();
    let kept_vars: Vec<(&str, u32)> = keep
        .iter()
        .map(|&i| (spec.vars()[i].as_str(), spec.caps()[i]))
        .collect();
    let out_spec = VarSpec::new(spec.ring(), &kept_vars);
    let mut out = Series::zero(&out_spec);
    for (e, c) in s.terms() {
        let degs: Vec<u32> = upos.iter().map(|&i| e[i]).collect();
        let m = fam.joint_moment(spec.ring(), &degs);
        if m.is_zero() {
            continue;
        }
        let kept_exps: Vec<(&str, u32)> = keep
            .iter()
            .map(|&i| (spec.vars()[i].as_str(), e[i]))
            .collect();
        out = out.add(&Series::monomial(&out_spec, &kept_exps, &m * c));
    }
    out
}

/// A spec for umbral series: ordinary variables with their caps, plus umbral
/// symbols whose caps are derived as (max degree per exponent term) times the
/// sum of the ordinary caps, plus explicit extra headroom for factors
/// multiplied in after the exponential.
pub fn umbral_spec(
    ring: &Arc<PolyRing>,
    ordinary: &[(&str, u32)],
    umbral: &[(&str, u32, u32)],
) -> Arc<VarSpec> {
    let s: u32 = ordinary.iter().map(|(_, c)| c).sum();
    let mut vars: Vec<(&str, u32)> = ordinary.to_vec();
    for (name, deg_per_term, extra) in umbral {
        vars.push((name, deg_per_term * s + extra));
    }
    VarSpec::new(ring, &vars)
}

/// exp of an umbral exponent polynomial, with the truncation-safety checks
/// that make the composition exact within the ordinary caps:
///
/// * every term must involve at least one ordinary (non-umbral) variable
/// * each umbral cap must cover (max degree per term) * (sum of ordinary caps)
///
/// Violations panic; nothing is silently truncated.
pub fn umbral_exp(f: &Series, umbral: &[&str]) -> Series {
    let spec = f.spec();
    let uidx: Vec<usize> = umbral.iter().map(|u| spec.index(u)).collect();
    let s: u32 = (0..spec.arity())
        .filter(|i| !uidx.contains(i))
        .map(|i| spec.caps()[i])
        .sum();
    let mut max_deg = vec![0u32; uidx.len()];
    for (e, _) in f.terms() {
        let ordinary: u32 = (0..e.len())
            .filter(|i| !uidx.contains(i))
            .map(|i| e[i])
            .sum();
        assert!(
            ordinary >= 1,
            "umbral exponent term without a series variable: {}",
            f.monomial_string(e)
        );
        for (k, &i) in uidx.iter().enumerate() {
            max_deg[k] = max_deg[k].max(e[i]);
        }
    }
    for (k, &i) in uidx.iter().enumerate() {
        let need = max_deg[k] * s;
        assert!(
            spec.caps()[i] >= need,
            "umbral cap too small for requested ordinary caps: \
             {:?} has cap {} but needs {}",
            umbral[k],
            spec.caps()[i],
            need
        );
    }
    f.exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn bernoulli_umbra_from_egf() {
        let ring = PolyRing::new(&[]);
        let spec = VarSpec::new(&ring, &[("x", 6)]);
        let x = Series::var(&spec, "x");
        let egf = x
            .exp()
            .sub(&Series::one(&spec))
            .div_exact_var("x", 1)
            .invert();
        let b = Umbra::from_egf("B", &egf);
        assert_eq!(b.moment(0).expect_constant(), rat_int(1));
        assert_eq!(b.moment(1).expect_constant(), rat(-1, 2));
        assert_eq!(b.moment(4).expect_constant(), rat(-1, 30));
    }

    #[test]
    fn delta_pair_joint_moments() {
        let ring = PolyRing::new(&[]);
        let fam = UmbraFamily::delta_pair("A", "B");
        assert_eq!(
            fam.joint_moment(&ring, &[3, 3]).expect_constant(),
            rat_int(6)
        );
        assert!(fam.joint_moment(&ring, &[2, 3]).is_zero());
        assert_eq!(
            fam.joint_moment(&ring, &[0, 0]).expect_constant(),
            rat_int(1)
        );
    }

    #[test]
    fn delta_pair_exponential_identity() {
        // eval(e^{Ax+By}) = e^{xy}
        let ring = PolyRing::new(&[]);
        let spec = umbral_spec(&ring, &[("x", 5), ("y", 5)], &[("A", 1, 0), ("B", 1, 0)]);
        let arg = Series::monomial(&spec, &[("A", 1), ("x", 1)], Poly::one(&ring)).add(
            &Series::monomial(&spec, &[("B", 1), ("y", 1)], Poly::one(&ring)),
        );
        let fam = UmbraFamily::delta_pair("A", "B");
        let lhs = ueval(&umbral_exp(&arg, &["A", "B"]), &fam);
        let out_spec = VarSpec::new(&ring, &[("x", 5), ("y", 5)]);
        let rhs = Series::var(&out_spec, "x")
            .mul(&Series::var(&out_spec, "y"))
            .exp();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_of_one_need_not_be_one() {
        // An umbra with moment(0) = 0 sends the constant series 1 to 0.
        let ring = PolyRing::new(&[]);
        let f = Umbra::from_fn("F", 4, |n| Poly::int(&ring, if n == 0 { 0 } else { 1 }));
        let spec = VarSpec::new(&ring, &[("F", 4), ("x", 3)]);
        let one = Series::one(&spec);
        let fam = UmbraFamily::single(f);
        assert!(ueval(&one, &fam).is_zero());
    }

    #[test]
    fn independent_blocks_factor() {
        let ring = PolyRing::new(&[]);
        let a = Umbra::from_fn("A", 6, |n| Poly::int(&ring, (n as i64) + 1));
        let b = Umbra::from_fn("C", 6, |n| Poly::int(&ring, 2 * (n as i64) - 5));
        let fam = UmbraFamily::independent(vec![a.clone(), b.clone()]);
        let spec = VarSpec::new(&ring, &[("A", 6), ("C", 6)]);
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                let mono = Series::monomial(&spec, &[("A", m), ("C", n)], Poly::one(&ring));
                let val = ueval(&mono, &fam).constant_term();
                let expected = a.moment(m as usize) * b.moment(n as usize);
                assert_eq!(val, expected);
            }
        }
    }

    #[test]
    fn ueval_is_linear() {
        let ring = PolyRing::new(&["u"]);
        let a = Umbra::from_fn("A", 5, |n| Poly::int(&ring, (n * n) as i64));
        let fam = UmbraFamily::single(a);
        let spec = VarSpec::new(&ring, &[("A", 5), ("x", 4)]);
        let f = Series::monomial(&spec, &[("A", 2), ("x", 1)], Poly::var(&ring, "u"));
        let g = Series::monomial(&spec, &[("A", 3), ("x", 2)], Poly::int(&ring, 7))
            .add(&Series::monomial(&spec, &[("x", 1)], Poly::int(&ring, 1)));
        let lhs = ueval(&f.add(&g), &fam);
        let rhs = ueval(&f, &fam).add(&ueval(&g, &fam));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exchangeable_copies_share_moments() {
        let ring = PolyRing::new(&[]);
        let m = Umbra::from_fn("M", 4, |n| Poly::int(&ring, 3 * n as i64));
        let n = m.renamed("N");
        assert_eq!(m.moment(3), n.moment(3));
        assert_eq!(n.name(), "N");
    }

    #[test]
    #[should_panic(expected = "unknown umbral symbol")]
    fn ueval_rejects_missing_symbol() {
        let ring = PolyRing::new(&[]);
        let spec = VarSpec::new(&ring, &[("x", 3)]);
        let fam = UmbraFamily::delta_pair("A", "B");
        ueval(&Series::one(&spec), &fam);
    }

    #[test]
    #[should_panic(expected = "umbral cap too small")]
    fn umbral_exp_rejects_undersized_cap() {
        let ring = PolyRing::new(&[]);
        let spec = VarSpec::new(&ring, &[("x", 5), ("A", 2)]);
        let arg = Series::monomial(&spec, &[("A", 1), ("x", 1)], Poly::one(&ring));
        umbral_exp(&arg, &["A"]);
    }

    #[test]
    #[should_panic(expected = "without a series variable")]
    fn umbral_exp_rejects_pure_umbral_terms()
    {
        let ring = PolyRing::new(&[]);
        let spec = umbral_spec(&ring, &[("x", 4)], &[("A", 1, 2)]);
        let arg = Series::monomial(&spec, &[("A", 1)], Poly::one(&ring));
        umbral_exp(&arg, &["A"]);
    }

    #[test]
    #[should_panic(expected = "moment 5")]
    fn moment_table_overrun_is_loud() {
        let ring = PolyRing::new(&[]);
        let u = Umbra::from_fn("A", 4, |_| Poly::one(&ring));
        u.moment(5);
    }
}
