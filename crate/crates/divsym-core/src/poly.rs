//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are keyed by exponent vector in a `BTreeMap`, which gives a
//! deterministic lexicographic term order: every serialization and printout
//! of the same polynomial is byte-identical.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{from_string_pair, to_string_pair, Rational};

/// Exponent vector of a monomial; length equals the ambient variable count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(m: usize) -> Self {
        Monomial(vec![0; m])
    }

    pub fn var(m: usize, i: usize) -> Self {
        assert!(i < m, "variable index {i} out of range for {m} variables");
        let mut e = vec![0; m];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Evaluation point with one exact rational per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point(pub Vec<Rational>);

impl Point {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether all coordinates are pairwise distinct.
    pub fn is_distinct(&self) -> bool {
        let mut sorted = self.0.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// The default generic point (1, 2, ..., m).
    pub fn default_for(m: usize) -> Self {
        Point((1..=m as i64).map(crate::rational::rat).collect())
    }
}

/// Bijection on {0, ..., m-1}, stored as the image sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v >= m || seen[v] {
                return Err(Error::PreconditionViolated(format!(
                    "not a permutation of 0..{m}: {images:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }
}

/// Sparse polynomial: monomial -> nonzero coefficient, plus the variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
    m: usize,
}

impl Polynomial {
    pub fn zero(m: usize) -> Self {
        Polynomial {
            terms: BTreeMap::new(),
            m,
        }
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(m);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(m), c);
        }
        p
    }

    pub fn one(m: usize) -> Self {
        Polynomial::constant(m, Rational::one())
    }

    /// The single variable `x_i`.
    pub fn var(m: usize, i: usize) -> Self {
        let mut p = Polynomial::zero(m);
        p.terms.insert(Monomial::var(m, i), Rational::one());
        p
    }

    /// A single term `c * x^exp`.
    pub fn monomial(m: usize, exp: Vec<u32>, c: Rational) -> Result<Self> {
        if exp.len() != m {
            return Err(Error::VarCountMismatch(exp.len(), m));
        }
        let mut p = Polynomial::zero(m);
        if !c.is_zero() {
            p.terms.insert(Monomial(exp), c);
        }
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` is the zero polynomial's "minus infinity".
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Polynomial) -> Result<()> {
        if self.m != other.m {
            return Err(Error::VarCountMismatch(self.m, other.m));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.m);
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mono, coef)| (mono.clone(), coef * c))
                .collect(),
            m: self.m,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_vars(other)?;
        let mut out = Polynomial::zero(self.m);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.m);
        for _ in 0..e {
            out = out.mul(self).expect("same variable count");
        }
        out
    }

    /// Substitute `x_i -> x_{pi(i)}` in every monomial.
    pub fn permute_variables(&self, pi: &Permutation) -> Result<Polynomial> {
        if pi.len() != self.m {
            return Err(Error::VarCountMismatch(pi.len(), self.m));
        }
        let mut out = Polynomial::zero(self.m);
        for (mono, c) in &self.terms {
            let mut e = vec![0u32; self.m];
            for (i, &exp) in mono.0.iter().enumerate() {
                e[pi.apply(i)] = exp;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    pub fn evaluate(&self, pt: &Point) -> Result<Rational> {
        if pt.len() != self.m {
            return Err(Error::VarCountMismatch(pt.len(), self.m));
        }
        let mut acc = Rational::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &pt.0[i];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Whether the polynomial is invariant under swapping variables `i` and `j`.
    pub fn is_symmetric_under_swap(&self, i: usize, j: usize) -> bool {
        let mut images: Vec<usize> = (0..self.m).collect();
        images.swap(i, j);
        let pi = Permutation::from_images(images).expect("swap is a permutation");
        self.permute_variables(&pi).expect("same length") == *self
    }

    /// Embed into `m_new >= m` variables, sending variable `i` to `offset + i`.
    pub fn embed(&self, m_new: usize, offset: usize) -> Result<Polynomial> {
        if offset + self.m > m_new {
            return Err(Error::PreconditionViolated(format!(
                "cannot embed {} variables at offset {} into {}",
                self.m, offset, m_new
            )));
        }
        let mut out = Polynomial::zero(m_new);
        for (mono, c) in &self.terms {
            let mut e = vec![0u32; m_new];
            e[offset..offset + self.m].copy_from_slice(&mono.0);
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }
}

/// The expanded product `prod_i (x_0 + ... + x_i)^{c_i}` of prefix sums.
///
/// Homogeneous of degree `sum(c)`; at the all-ones point it evaluates to
/// `prod (i+1)^{c_i}`.
pub fn prefix_sum_monomial(c: &[u32]) -> Result<Polynomial> {
    let m = c.len();
    if m == 0 {
        return Err(Error::PreconditionViolated(
            "prefix_sum_monomial needs at least one variable".into(),
        ));
    }
    let mut out = Polynomial::one(m);
    for (i, &ci) in c.iter().enumerate() {
        if ci == 0 {
            continue;
        }
        let mut prefix = Polynomial::zero(m);
        for j in 0..=i {
            prefix = prefix.add(&Polynomial::var(m, j))?;
        }
        out = out.mul(&prefix.pow(ci))?;
    }
    Ok(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", crate::rational::display(c))?;
            for (i, &e) in mono.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

// --- wire format -------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermJson {
    coef: (String, String),
    exp: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    #[serde(default = "default_format")]
    format: u32,
    m: usize,
    terms: Vec<TermJson>,
}

pub(crate) fn default_format() -> u32 {
    1
}

pub(crate) fn check_format(format: u32) -> Result<()> {
    if format != 1 {
        return Err(Error::FormatVersion(format));
    }
    Ok(())
}

impl Polynomial {
    pub fn to_json(&self) -> serde_json::Value {
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| TermJson {
                coef: to_string_pair(c),
                exp: mono.0.clone(),
            })
            .collect();
        serde_json::to_value(PolyJson {
            format: 1,
            m: self.m,
            terms,
        })
        .expect("polynomial serialization cannot fail")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Polynomial> {
        let raw: PolyJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        check_format(raw.format)?;
        let mut p = Polynomial::zero(raw.m);
        for t in raw.terms {
            if t.exp.len() != raw.m {
                return Err(Error::InvalidPolynomial(format!(
                    "term exponent length {} does not match m = {}",
                    t.exp.len(),
                    raw.m
                )));
            }
            let c = from_string_pair(&t.coef.0, &t.coef.1)?;
            if c.is_zero() {
                return Err(Error::InvalidPolynomial(
                    "stored coefficients must be nonzero".into(),
                ));
            }
            if p.terms.contains_key(&Monomial(t.exp.clone())) {
                return Err(Error::InvalidPolynomial(format!(
                    "duplicate monomial {:?}",
                    t.exp
                )));
            }
            p.terms.insert(Monomial(t.exp), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_frac};
    use proptest::prelude::*;

    fn x(m: usize, i: usize) -> Polynomial {
        Polynomial::var(m, i)
    }

    #[test]
    fn difference_of_squares() {
        let m = 2;
        let sum = x(m, 0).add(&x(m, 1)).unwrap();
        let diff = x(m, 0).sub(&x(m, 1)).unwrap();
        let prod = sum.mul(&diff).unwrap();
        let expected = x(m, 0).pow(2).sub(&x(m, 1).pow(2)).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn scale_by_zero_is_zero() {
        let p = x(3, 0).add(&x(3, 2)).unwrap();
        assert!(p.scale(&rat(0)).is_zero());
        assert_eq!(p.scale(&rat(0)).degree(), None);
    }

    #[test]
    fn square_of_sum() {
        let m = 2;
        let sq = x(m, 0).add(&x(m, 1)).unwrap().pow(2);
        assert_eq!(sq.coefficient(&Monomial(vec![2, 0])), rat(1));
        assert_eq!(sq.coefficient(&Monomial(vec![1, 1])), rat(2));
        assert_eq!(sq.coefficient(&Monomial(vec![0, 2])), rat(1));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn mismatched_vars_rejected() {
        assert!(x(2, 0).add(&x(3, 0)).is_err());
        assert!(x(2, 0).mul(&x(3, 0)).is_err());
    }

    #[test]
    fn permute_identity_and_swap() {
        let p = x(2, 0).pow(2).mul(&x(2, 1)).unwrap();
        assert_eq!(p.permute_variables(&Permutation::identity(2)).unwrap(), p);
        let swap = Permutation::from_images(vec![1, 0]).unwrap();
        let q = p.permute_variables(&swap).unwrap();
        let expected = x(2, 1).pow(2).mul(&x(2, 0)).unwrap();
        assert_eq!(q, expected);
        assert_eq!(q.degree(), p.degree());
    }

    #[test]
    fn evaluate_cases() {
        let p = x(2, 0).mul(&x(2, 1)).unwrap();
        assert_eq!(p.evaluate(&Point(vec![rat(2), rat(3)])).unwrap(), rat(6));
        let c = Polynomial::constant(2, rat(5));
        assert_eq!(
            c.evaluate(&Point(vec![rat_frac(7, 3), rat(-1)])).unwrap(),
            rat(5)
        );
        let q = x(2, 0).mul(&x(2, 0).add(&x(2, 1)).unwrap()).unwrap();
        assert_eq!(q.evaluate(&Point(vec![rat(1), rat(1)])).unwrap(), rat(2));
    }

    #[test]
    fn prefix_sum_monomial_cases() {
        let p = prefix_sum_monomial(&[2, 0, 0]).unwrap();
        assert_eq!(p, x(3, 0).pow(2));

        let p = prefix_sum_monomial(&[1, 1, 0]).unwrap();
        let expected = x(3, 0)
            .pow(2)
            .add(&x(3, 0).mul(&x(3, 1)).unwrap())
            .unwrap();
        assert_eq!(p, expected);

        let p = prefix_sum_monomial(&[0, 2, 0]).unwrap();
        let expected = x(3, 0).add(&x(3, 1)).unwrap().pow(2);
        assert_eq!(p, expected);

        assert!(prefix_sum_monomial(&[]).is_err());
    }

    #[test]
    fn embed_shifts_variables() {
        let p = x(2, 1).pow(3);
        let q = p.embed(5, 2).unwrap();
        assert_eq!(q, x(5, 3).pow(3));
        assert!(p.embed(2, 1).is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let p = x(3, 0)
            .pow(2)
            .add(&x(3, 2).scale(&rat_frac(-7, 2)))
            .unwrap();
        let v = p.to_json();
        assert_eq!(Polynomial::from_json(&v).unwrap(), p);

        let bad = serde_json::json!({
            "m": 2,
            "terms": [{"coef": ["1", "1"], "exp": [1]}]
        });
        assert!(Polynomial::from_json(&bad).is_err());

        let zero_coef = serde_json::json!({
            "m": 1,
            "terms": [{"coef": ["0", "1"], "exp": [1]}]
        });
        assert!(Polynomial::from_json(&zero_coef).is_err());

        let bad_version = serde_json::json!({
            "format": 2, "m": 1, "terms": []
        });
        assert!(Polynomial::from_json(&bad_version).is_err());
    }

    // Small random polynomials for the ring-axiom properties.
    fn arb_poly(m: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, m), -4i64..=4),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = Polynomial::zero(m);
            for (exp, c) in terms {
                p.add_term(Monomial(exp), rat(c));
            }
            p
        })
    }

    fn arb_point(m: usize) -> impl Strategy<Value = Point> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), m)
            .prop_map(|cs| Point(cs.into_iter().map(|(n, d)| rat_frac(n, d)).collect()))
    }

    fn arb_perm(m: usize) -> impl Strategy<Value = Permutation> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut v: Vec<usize> = (0..m).collect();
            for i in (1..m).rev() {
                let j = rng.gen_range(0..=i);
                v.swap(i, j);
            }
            Permutation::from_images(v).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms((a, b, c) in (arb_poly(3), arb_poly(3), arb_poly(3))) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);

            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);

            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        }

        #[test]
        fn evaluate_is_ring_homomorphism((a, b, pt) in (arb_poly(3), arb_poly(3), arb_point(3))) {
            let prod = a.mul(&b).unwrap();
            prop_assert_eq!(
                prod.evaluate(&pt).unwrap(),
                a.evaluate(&pt).unwrap() * b.evaluate(&pt).unwrap()
            );
            let sum = a.add(&b).unwrap();
            prop_assert_eq!(
                sum.evaluate(&pt).unwrap(),
                a.evaluate(&pt).unwrap() + b.evaluate(&pt).unwrap()
            );
        }

        #[test]
        fn permute_commutes_with_evaluate((p, pi, pt) in (arb_poly(4), arb_perm(4), arb_point(4))) {
            // evaluate(permute(p, pi), pt) == evaluate(p, pt ∘ pi)
            let permuted = p.permute_variables(&pi).unwrap();
            let composed = Point((0..4).map(|i| pt.0[pi.apply(i)].clone()).collect());
            prop_assert_eq!(
                permuted.evaluate(&pt).unwrap(),
                p.evaluate(&composed).unwrap()
            );
        }

        #[test]
        fn permute_composition_law((p, s, t) in (arb_poly(4), arb_perm(4), arb_perm(4))) {
            let lhs = p.permute_variables(&s).unwrap().permute_variables(&t).unwrap();
            let rhs = p.permute_variables(&t.compose(&s)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prefix_sum_monomial_homogeneous(c in proptest::collection::vec(0u32..3, 1..5)) {
            let p = prefix_sum_monomial(&c).unwrap();
            let total: u32 = c.iter().sum();
            for (mono, _) in p.terms() {
                prop_assert_eq!(mono.degree(), total);
            }
            // at the all-ones point the value is prod (i+1)^{c_i}
            let ones = Point(vec![rat(1); c.len()]);
            let mut expected = rat(1);
            for (i, &ci) in c.iter().enumerate() {
                for _ in 0..ci {
                    expected *= rat(i as i64 + 1);
                }
            }
            prop_assert_eq!(p.evaluate(&ones).unwrap(), expected);
        }

        #[test]
        fn json_round_trip(p in arb_poly(3)) {
            let v = p.to_json();
            prop_assert_eq!(Polynomial::from_json(&v).unwrap(), p);
        }
    }
}
