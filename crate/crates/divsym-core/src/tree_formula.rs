//! The combinatorial route to divided symmetrization of monomials on trees:
//! weight assignments, regular/inversive edge classification, counting of
//! acceptable permutations (brute force and a rank-distribution dynamic
//! program), and the sign-reversing involution on pointed permutations.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::comb::{binomial_table, factorial_u64, next_permutation};
use crate::error::{Error, Result};
use crate::graph::Tree;
use crate::poly::{check_format, default_format, Permutation, Polynomial};
use crate::rational::Rational;

/// Per-vertex integer weights `w(v) >= -1` summing to -1; encodes the
/// monomial `C = prod x_v^{w(v)+1}` of degree m-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    w: Vec<i64>,
}

impl WeightAssignment {
    pub fn new(w: Vec<i64>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidWeights("empty weight vector".into()));
        }
        if let Some(&bad) = w.iter().find(|&&v| v < -1) {
            return Err(Error::InvalidWeights(format!(
                "weight {bad} below the minimum of -1"
            )));
        }
        let total: i64 = w.iter().sum();
        if total != -1 {
            return Err(Error::InvalidWeights(format!(
                "weights sum to {total}, need -1"
            )));
        }
        Ok(WeightAssignment { w })
    }

    pub fn weights(&self) -> &[i64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    /// The monomial `prod x_v^{w(v)+1}`, homogeneous of degree m-1.
    pub fn monomial(&self) -> Polynomial {
        let m = self.w.len();
        let exps: Vec<u32> = self.w.iter().map(|&v| (v + 1) as u32).collect();
        Polynomial::monomial(m, exps, Rational::one()).expect("length matches by construction")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WeightsJson {
            format: 1,
            w: self.w.clone(),
        })
        .expect("weights serialization cannot fail")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: WeightsJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        check_format(raw.format)?;
        WeightAssignment::new(raw.w)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightsJson {
    #[serde(default = "default_format")]
    format: u32,
    w: Vec<i64>,
}

/// Per-edge regular/inversive flags (parallel to the tree's normalized edge
/// list) and the resulting sign `(-1)^{number of inversive edges}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    regular: Vec<bool>,
    sign: i32,
}

impl EdgeClassification {
    pub fn from_flags(regular: Vec<bool>) -> Self {
        let inversive = regular.iter().filter(|&&r| !r).count();
        EdgeClassification {
            regular,
            sign: if inversive % 2 == 0 { 1 } else { -1 },
        }
    }

    pub fn regular_flags(&self) -> &[bool] {
        &self.regular
    }

    pub fn sign(&self) -> i32 {
        self.sign
    }
}

/// Classify each edge `(x, y)`, `x < y`, of the tree by which side of its
/// removal carries negative total weight: regular iff that side contains `y`.
///
/// The weights sum to -1 and split into integers, so exactly one side is
/// negative for every edge.
pub fn classify_edges(t: &Tree, w: &WeightAssignment) -> Result<EdgeClassification> {
    let m = t.num_vertices();
    if w.len() != m {
        return Err(Error::VarCountMismatch(w.len(), m));
    }
    let mut regular = Vec::with_capacity(t.graph().num_edges());
    for &(x, y) in t.graph().edges() {
        let comps = t.graph().components_after_removal(&[(x, y)])?;
        debug_assert_eq!(comps.len(), 2);
        let side_y = comps
            .iter()
            .find(|c| c.binary_search(&y).is_ok())
            .expect("y is in some component");
        let weight_y: i64 = side_y.iter().map(|&v| w.weights()[v]).sum();
        let weight_x: i64 = -1 - weight_y;
        debug_assert!(
            (weight_y < 0) != (weight_x < 0),
            "exactly one side must be negative"
        );
        regular.push(weight_y < 0);
    }
    Ok(EdgeClassification::from_flags(regular))
}

/// Orientation constraints as (earlier, later) pairs: for a regular edge
/// `(x, y)` the constraint is `pi(x) < pi(y)`, for an inversive one the
/// reverse.
fn orientation_pairs(t: &Tree, cls: &EdgeClassification) -> Vec<(usize, usize)> {
    t.graph()
        .edges()
        .iter()
        .zip(cls.regular_flags())
        .map(|(&(x, y), &reg)| if reg { (x, y) } else { (y, x) })
        .collect()
}

/// Count acceptable permutations by enumerating all m! of them.
pub fn acceptable_count_bruteforce(t: &Tree, cls: &EdgeClassification) -> BigUint {
    let m = t.num_vertices();
    let pairs = orientation_pairs(t, cls);
    let total = factorial_u64(m).expect("trees of interest are far below 21 vertices");
    let mut perm: Vec<usize> = (0..m).collect();
    let mut count: u64 = 0;
    for _ in 0..total {
        if pairs.iter().all(|&(a, b)| perm[a] < perm[b]) {
            count += 1;
        }
        next_permutation(&mut perm);
    }
    BigUint::from(count)
}

/// Count acceptable permutations as linear extensions of the oriented tree.
///
/// Rooted at vertex 0, each subtree carries the distribution of its root's
/// rank among admissible relative orders; children are merged by summing
/// over interleavings with binomial weights, restricting the root-vs-child
/// rank order to the connecting edge's orientation. O(m^2) big-integer
/// operations in total.
pub fn acceptable_count_fast(t: &Tree, cls: &EdgeClassification) -> BigUint {
    let m = t.num_vertices();
    if m == 1 {
        return BigUint::one();
    }
    let pairs = orientation_pairs(t, cls);
    let before = |a: usize, b: usize| pairs.iter().any(|&(x, y)| (x, y) == (a, b));
    let adj = t.graph().adjacency();
    let binom = binomial_table(m);

    // rank_dist(v): a[k-1] = admissible orders of v's subtree with v at rank k
    fn rank_dist(
        v: usize,
        parent: usize,
        adj: &[Vec<usize>],
        before: &dyn Fn(usize, usize) -> bool,
        binom: &[Vec<BigUint>],
    ) -> Vec<BigUint> {
        let mut acc = vec![BigUint::one()];
        for &c in &adj[v] {
            if c == parent {
                continue;
            }
            let child = rank_dist(c, v, adj, before, binom);
            let s = acc.len();
            let t_len = child.len();
            // prefix[j] = orders of the child subtree with its root among the
            // first j elements
            let mut prefix = vec![BigUint::zero(); t_len + 1];
            for j in 0..t_len {
                prefix[j + 1] = &prefix[j] + &child[j];
            }
            let total = prefix[t_len].clone();
            let v_first = before(v, c);
            let mut merged = vec![BigUint::zero(); s + t_len];
            for i in 1..=s {
                if acc[i - 1].is_zero() {
                    continue;
                }
                for r in i..=i + t_len {
                    // with v at combined rank r, exactly r-i child elements
                    // (a prefix of the child order) precede it
                    let child_before = r - i;
                    let allowed = if v_first {
                        &total - &prefix[child_before]
                    } else {
                        prefix[child_before].clone()
                    };
                    if allowed.is_zero() {
                        continue;
                    }
                    let ways = &binom[r - 1][i - 1] * &binom[s + t_len - r][s - i];
                    merged[r - 1] += &acc[i - 1] * ways * allowed;
                }
            }
            acc = merged;
        }
        acc
    }

    let dist = rank_dist(0, usize::MAX, &adj, &before, &binom);
    dist.into_iter().sum()
}

/// `sign(C) * (number of C-acceptable permutations)`; equals the divided
/// symmetrization of the weight monomial over the tree.
pub fn tau(t: &Tree, w: &WeightAssignment) -> Result<BigInt> {
    let cls = classify_edges(t, w)?;
    let count = acceptable_count_fast(t, &cls);
    let count = BigInt::from(count);
    Ok(if cls.sign() >= 0 { count } else { -count })
}

/// One step of the sign-reversing involution on pointed permutations.
///
/// The domain is pairs `(pi, x)` where `pi(u) > pi(v)` for every edge whose
/// endpoint `u` is nearer to `x` (so `pi(x)` is the maximal value m-1). The
/// vertex `y` holding the second-largest value m-2 is adjacent to `x`; the
/// two values are swapped and the result is pointed at `y`. Applying the map
/// twice returns the input.
pub fn pointed_involution(
    pi: &Permutation,
    x: usize,
    t: &Tree,
) -> Result<(Permutation, usize)> {
    let m = t.num_vertices();
    if pi.len() != m {
        return Err(Error::VarCountMismatch(pi.len(), m));
    }
    if x >= m {
        return Err(Error::InvalidVertex { vertex: x, m });
    }
    if m < 2 {
        return Err(Error::PreconditionViolated(
            "the involution needs at least two vertices".into(),
        ));
    }
    if pi.apply(x) != m - 1 {
        return Err(Error::PreconditionViolated(format!(
            "pi must send the pointed vertex {x} to the maximal value {}",
            m - 1
        )));
    }
    // decreasing away from x: parent value exceeds child value on the tree
    // rooted at x
    let adj = t.graph().adjacency();
    let mut parent = vec![usize::MAX; m];
    let mut stack = vec![x];
    let mut seen = vec![false; m];
    seen[x] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                if pi.apply(parent[u]) <= pi.apply(u) {
                    return Err(Error::PreconditionViolated(format!(
                        "pi is not decreasing away from {x}: pi({}) <= pi({u})",
                        parent[u]
                    )));
                }
                stack.push(u);
            }
        }
    }

    let inv = pi.inverse();
    let y = inv.apply(m - 2);
    if !t.graph().has_edge(x, y) {
        return Err(Error::PreconditionViolated(format!(
            "vertices {x} and {y} holding the two largest values are not adjacent"
        )));
    }
    let mut images = pi.images().to_vec();
    images.swap(x, y);
    let swapped = Permutation::from_images(images).expect("swap preserves bijectivity");
    Ok((swapped, y))
}
