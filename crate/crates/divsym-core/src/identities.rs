//! Path and cycle identities built on the engine: the closed form for
//! single-variable monomials on a path, the prefix-product factorial
//! identity, the cyclic-shift sum, its Q-function relations, and the
//! empty-set probability formula on a cycle with its grand sum.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::comb::{binomial, factorial, k_subsets};
use crate::divsym::{ds_constant, DsOptions};
use crate::error::{Error, Result};
use crate::graph::{cycle_graph, path_graph};
use crate::poly::{prefix_sum_monomial, Point, Polynomial};
use crate::rational::Rational;
use crate::sandpile::CoinConfig;

/// Divided symmetrization over the path on `c.len()` vertices of the
/// prefix-sum product `prod_j y_j^{c_j}`.
pub fn phi_prefix_product(c: &[u32], opts: &DsOptions) -> Result<Rational> {
    let f = prefix_sum_monomial(c)?;
    let g = path_graph(c.len())?;
    ds_constant(&f, &g, opts)
}

/// Closed form `(-1)^i * C(n, i)` for the path value of `x_i^n`; equals
/// `ds_constant(x_i^n, path(n+1))`.
pub fn lemma2_value(i: usize, n: usize) -> Result<Rational> {
    if i > n {
        return Err(Error::PreconditionViolated(format!(
            "index {i} out of range 0..={n}"
        )));
    }
    let b = BigInt::from(binomial(n, i));
    let signed = if i.is_multiple_of(2) { b } else { -b };
    Ok(BigRational::from_integer(signed))
}

/// Both sides of `Phi(y_0 y_1 ... y_{n-1}) = n!` on the path with n+1
/// vertices.
pub fn verify_eq2(n: usize, opts: &DsOptions) -> Result<(Rational, Rational)> {
    if n < 1 {
        return Err(Error::PreconditionViolated("need n >= 1".into()));
    }
    let mut c = vec![1u32; n];
    c.push(0);
    let lhs = phi_prefix_product(&c, opts)?;
    let rhs = BigRational::from_integer(BigInt::from(factorial(n)));
    Ok((lhs, rhs))
}

fn validate_composition(c: &[u32]) -> Result<u32> {
    let n: u32 = c.iter().sum();
    if c.len() != n as usize + 1 {
        return Err(Error::PreconditionViolated(format!(
            "need an exponent sequence of length n+1 summing to n, got length {} and sum {n}",
            c.len()
        )));
    }
    Ok(n)
}

/// Both sides of the cyclic-shift identity: summing
/// `Phi(prod_j y_j^{c_{(j+s) mod (n+1)}})` over all n+1 shifts `s` equals
/// `n!` for any composition `c` of n into n+1 parts.
pub fn postnikov_check(c: &[u32], opts: &DsOptions) -> Result<(Rational, Rational)> {
    let n = validate_composition(c)?;
    let m = c.len();
    let mut lhs = Rational::zero();
    for s in 0..m {
        let shifted: Vec<u32> = (0..m).map(|j| c[(j + s) % m]).collect();
        lhs += phi_prefix_product(&shifted, opts)?;
    }
    let rhs = BigRational::from_integer(BigInt::from(factorial(n as usize)));
    Ok((lhs, rhs))
}

/// The defect `lhs - rhs` of [`postnikov_check`]; identically zero.
pub fn q_residual(c: &[u32], opts: &DsOptions) -> Result<Rational> {
    let (lhs, rhs) = postnikov_check(c, opts)?;
    Ok(lhs - rhs)
}

/// `2 Q(c) - Q(c with a coin moved left at i) - Q(c with a coin moved right
/// at i)`, defined for `c_i >= 2`; identically zero.
pub fn q_relation_check(c: &[u32], i: usize, opts: &DsOptions) -> Result<Rational> {
    validate_composition(c)?;
    let m = c.len();
    if i >= m {
        return Err(Error::InvalidVertex { vertex: i, m });
    }
    if c[i] < 2 {
        return Err(Error::PreconditionViolated(format!(
            "the relation needs c_{i} >= 2, got {}",
            c[i]
        )));
    }
    let mut left = c.to_vec();
    left[i] -= 1;
    left[(i + m - 1) % m] += 1;
    let mut right = c.to_vec();
    right[i] -= 1;
    right[(i + 1) % m] += 1;
    let q = q_residual(c, opts)?;
    let ql = q_residual(&left, opts)?;
    let qr = q_residual(&right, opts)?;
    Ok(q.clone() + q - ql - qr)
}

/// A set of `d` designated empty vertices on the cycle `0..m-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptySet {
    vertices: Vec<usize>,
    m: usize,
}

impl EmptySet {
    pub fn new(mut vertices: Vec<usize>, m: usize) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidEmptySet("P must be nonempty".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidEmptySet("duplicate vertex".into()));
        }
        if *vertices.last().expect("nonempty") >= m {
            return Err(Error::InvalidEmptySet(format!(
                "vertex {} out of range for {m} cycle vertices",
                vertices.last().expect("nonempty")
            )));
        }
        Ok(EmptySet { vertices, m })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// The final configuration with zeros exactly on this set.
    pub fn final_config(&self) -> CoinConfig {
        let counts: Vec<u64> = (0..self.m)
            .map(|i| if self.contains(i) { 0 } else { 1 })
            .collect();
        CoinConfig::new(counts).expect("one coin on each non-designated vertex")
    }
}

/// Product of the sizes of the arcs into which `p` divides the cycle.
///
/// Vertices are numbered counter-clockwise, so the clockwise walk is by
/// decreasing index mod m; each arc runs clockwise from one designated
/// vertex (exclusive) to the next (inclusive) and the sizes sum to m.
pub fn group_weight(p: &EmptySet, m: usize) -> Result<u64> {
    if p.m != m {
        return Err(Error::InvalidEmptySet(format!(
            "set built for {} vertices, queried with {m}",
            p.m
        )));
    }
    let mut w: u64 = 1;
    for &q in p.vertices() {
        // walk clockwise (decreasing) from q-1 until the previous designated
        // vertex is reached, inclusively
        let mut size: u64 = 0;
        let mut j = (q + m - 1) % m;
        loop {
            size += 1;
            if p.contains(j) {
                break;
            }
            j = (j + m - 1) % m;
        }
        w *= size;
    }
    Ok(w)
}

/// Per-vertex linear forms `z_i`: for `i` outside the designated set, the sum
/// of variables on the clockwise (decreasing-index) walk from `i` inclusive
/// to the next designated vertex exclusive; the constant 1 on the set itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZForms {
    pub m: usize,
    pub forms: Vec<Polynomial>,
}

pub fn z_forms(p: &EmptySet, m: usize) -> Result<ZForms> {
    if p.m != m {
        return Err(Error::InvalidEmptySet(format!(
            "set built for {} vertices, queried with {m}",
            p.m
        )));
    }
    let mut forms = Vec::with_capacity(m);
    for i in 0..m {
        if p.contains(i) {
            forms.push(Polynomial::one(m));
            continue;
        }
        let mut z = Polynomial::zero(m);
        let mut j = i;
        while !p.contains(j) {
            z = z.add(&Polynomial::var(m, j)).expect("same variable count");
            j = (j + m - 1) % m;
        }
        forms.push(z);
    }
    Ok(ZForms { m, forms })
}

/// Exact probability that the final empty set is exactly `p`, computed as a
/// divided symmetrization over the cycle.
///
/// Builds `prod_{q in p} (x_{q+1} - x_q) * prod_i z_i^{c_i}` (indices mod m),
/// symmetrizes over the cycle, and scales by `(-1)^(d-1) * w(p) / m!`. The
/// sign factor compensates the globally normalized denominator convention:
/// with factors expanded literally, the arc decomposition flips the sign once
/// per removed non-wrap edge and once per wrapped arc, i.e. by (-1)^(d-1) in
/// total. Cross-checked exhaustively against the absorption solver.
pub fn prob_empty_set_formula(
    c: &CoinConfig,
    p: &EmptySet,
    opts: &DsOptions,
) -> Result<Rational> {
    let m = c.num_vertices();
    if p.m != m {
        return Err(Error::InvalidEmptySet(format!(
            "set built for {} vertices, config has {m}",
            p.m
        )));
    }
    let d = p.len();
    if c.empty_slots() != d as u64 {
        return Err(Error::PreconditionViolated(format!(
            "|P| = {d} does not match the {} empty slots of the configuration",
            c.empty_slots()
        )));
    }

    let mut f = Polynomial::one(m);
    for &q in p.vertices() {
        let factor = Polynomial::var(m, (q + 1) % m)
            .sub(&Polynomial::var(m, q))
            .expect("same variable count");
        f = f.mul(&factor).expect("same variable count");
    }
    let zs = z_forms(p, m)?;
    for (i, &coins) in c.counts().iter().enumerate() {
        if coins > 0 {
            f = f
                .mul(&zs.forms[i].pow(coins as u32))
                .expect("same variable count");
        }
    }

    let value = ds_constant(&f, &cycle_graph(m)?, opts)?;
    let w = BigRational::from_integer(BigInt::from(group_weight(p, m)?));
    let m_fact = BigRational::from_integer(BigInt::from(factorial(m)));
    let sign = if d % 2 == 1 {
        Rational::one()
    } else {
        -Rational::one()
    };
    Ok(sign * w * value / m_fact)
}

/// Both sides of the grand cycle identity: the weighted sum of the divided
/// symmetrizations over all size-d empty sets equals `m! * h(1, ..., 1)`,
/// where `h` is the monomial with exponent vector `c`.
pub fn cycle_identity_check(
    c: &[u64],
    d: usize,
    opts: &DsOptions,
) -> Result<(Rational, Rational)> {
    let m = c.len();
    let n: u64 = c.iter().sum();
    if n + d as u64 != m as u64 {
        return Err(Error::PreconditionViolated(format!(
            "need sum(c) + d = len(c): {n} + {d} != {m}"
        )));
    }
    let config = CoinConfig::new(c.to_vec())?;
    let m_fact = BigRational::from_integer(BigInt::from(factorial(m)));

    let mut total = Rational::zero();
    for subset in k_subsets(m, d) {
        let p = EmptySet::new(subset, m)?;
        total += prob_empty_set_formula(&config, &p, opts)?;
    }
    let lhs = total * &m_fact;

    // h(1, ..., 1) for the monomial with exponents c
    let exps: Vec<u32> = c.iter().map(|&v| v as u32).collect();
    let h = Polynomial::monomial(m, exps, Rational::one())?;
    let ones = Point(vec![Rational::one(); m]);
    let rhs = m_fact * h.evaluate(&ones)?;
    Ok((lhs, rhs))
}
