//! Divided symmetrization of a polynomial over a graph.
//!
//! For `deg f <= |E|` the symmetrized sum
//! `sum_pi f(x_{pi(0)}, ..., x_{pi(m-1)}) / prod_{(i,j) in E} (x_{pi(i)} - x_{pi(j)})`
//! is a constant (zero when the degree is strictly smaller), so one exact
//! evaluation at a generic point determines it. The inner loop works entirely
//! in big integers: the evaluation point is scaled to integer coordinates, the
//! common denominator over all variable pairs is factored out once, and each
//! permutation contributes `numerator * (common / its denominator)` with one
//! exact division. A single rational reduction happens at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::comb::{factorial_u64, kth_permutation, next_permutation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{Point, Polynomial};
use crate::rational::Rational;

/// Hard ceiling on the variable count: `m!` must fit in u64 chunk indices.
pub const HARD_MAX_M: usize = 20;

/// Run below this many permutations stay single-threaded.
const PARALLEL_THRESHOLD: u64 = 40_320; // 8!

const CHUNK_SIZE: u64 = 20_160;

#[derive(Debug, Clone)]
pub struct DsOptions {
    /// Evaluation point; defaults to (1, 2, ..., m). Must have pairwise
    /// distinct coordinates.
    pub point: Option<Point>,
    /// Recompute at a second generic point and fail on disagreement.
    pub verify_point: bool,
    /// Refuse runs with more than `max_m` variables (`m!` permutations).
    pub max_m: usize,
    /// Worker threads for the permutation sum; 0 picks the rayon default.
    pub workers: usize,
}

impl Default for DsOptions {
    fn default() -> Self {
        DsOptions {
            point: None,
            verify_point: false,
            max_m: 10,
            workers: 0,
        }
    }
}

/// Shared, immutable state for one permutation sum.
struct EvalContext {
    m: usize,
    /// terms as (exponent vector, integer coefficient)
    terms: Vec<(Vec<u32>, BigInt)>,
    /// pow[v][e] = point[v]^e
    pow: Vec<Vec<BigInt>>,
    /// diff[a][b] = point[a] - point[b]
    diff: Vec<Vec<BigInt>>,
    edges: Vec<(usize, usize)>,
    /// product of point[a] - point[b] over all pairs a < b
    common_den: BigInt,
}

impl EvalContext {
    /// Sum over the lexicographic permutation range [start, end), scaled by
    /// the common denominator.
    fn chunk_sum(&self, start: u64, end: u64) -> BigInt {
        let mut perm = kth_permutation(self.m, start);
        let mut acc = BigInt::zero();
        for k in start..end {
            let mut num = BigInt::zero();
            for (exps, coef) in &self.terms {
                let mut t = coef.clone();
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        t *= &self.pow[perm[i]][e as usize];
                    }
                }
                num += t;
            }
            if !num.is_zero() {
                let mut den = BigInt::one();
                for &(i, j) in &self.edges {
                    den *= &self.diff[perm[i]][perm[j]];
                }
                acc += num * (&self.common_den / den);
            }
            if k + 1 < end {
                next_permutation(&mut perm);
            }
        }
        acc
    }
}

fn scale_point_to_integers(pt: &Point) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in &pt.0 {
        lcm = lcm.lcm(c.denom());
    }
    pt.0.iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

fn validate_point(pt: &Point, m: usize) -> Result<()> {
    if pt.len() != m {
        return Err(Error::VarCountMismatch(pt.len(), m));
    }
    if !pt.is_distinct() {
        return Err(Error::NonDistinctPoint);
    }
    Ok(())
}

/// A second generic point guaranteed to differ from `primary`.
fn alternate_point(m: usize, primary: &[BigInt]) -> Vec<BigInt> {
    let squares: Vec<BigInt> = (1..=m as i64).map(|k| BigInt::from(k * k)).collect();
    if squares != primary {
        squares
    } else {
        (1..=m as i64).map(|k| BigInt::from(k * k * k)).collect()
    }
}

fn ds_at_integer_point(f: &Polynomial, g: &Graph, q: &[BigInt], workers: usize) -> Rational {
    let m = g.num_vertices();
    if f.is_zero() {
        return Rational::zero();
    }

    // clear coefficient denominators: DS(c*f) = c*DS(f)
    let mut coef_lcm = BigInt::one();
    for (_, c) in f.terms() {
        coef_lcm = coef_lcm.lcm(c.denom());
    }
    let terms: Vec<(Vec<u32>, BigInt)> = f
        .terms()
        .map(|(mono, c)| (mono.0.clone(), c.numer() * (&coef_lcm / c.denom())))
        .collect();

    let max_exp = terms
        .iter()
        .flat_map(|(e, _)| e.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let pow: Vec<Vec<BigInt>> = q
        .iter()
        .map(|v| {
            let mut row = Vec::with_capacity(max_exp + 1);
            row.push(BigInt::one());
            for e in 1..=max_exp {
                let next = &row[e - 1] * v;
                row.push(next);
            }
            row
        })
        .collect();

    let mut diff = vec![vec![BigInt::zero(); m]; m];
    let mut common_den = BigInt::one();
    for a in 0..m {
        for b in 0..m {
            if a != b {
                diff[a][b] = &q[a] - &q[b];
            }
        }
    }
    for (a, row) in diff.iter().enumerate() {
        for d in row.iter().skip(a + 1) {
            common_den *= d;
        }
    }

    let ctx = EvalContext {
        m,
        terms,
        pow,
        diff,
        edges: g.edges().to_vec(),
        common_den,
    };

    let total = factorial_u64(m).expect("m is capped well below 21");
    let scaled_sum = if total < PARALLEL_THRESHOLD || workers == 1 {
        ctx.chunk_sum(0, total)
    } else {
        let ranges: Vec<(u64, u64)> = (0..total)
            .step_by(CHUNK_SIZE as usize)
            .map(|s| (s, (s + CHUNK_SIZE).min(total)))
            .collect();
        let par_sum = || {
            ranges
                .par_iter()
                .map(|&(s, e)| ctx.chunk_sum(s, e))
                .reduce(BigInt::zero, |a, b| a + b)
        };
        if workers == 0 {
            par_sum()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool construction")
                .install(par_sum)
        }
    };

    BigRational::new(scaled_sum, ctx.common_den * coef_lcm)
}

fn validate_request(f: &Polynomial, g: &Graph, opts: &DsOptions) -> Result<()> {
    let m = g.num_vertices();
    if f.num_vars() != m {
        return Err(Error::VarCountMismatch(f.num_vars(), m));
    }
    if let Some(d) = f.degree() {
        if d as usize > g.num_edges() {
            return Err(Error::DegreeExceedsEdges {
                degree: d as usize,
                edges: g.num_edges(),
            });
        }
    }
    if m > opts.max_m.min(HARD_MAX_M) {
        return Err(Error::PermutationCapExceeded {
            m,
            cap: opts.max_m.min(HARD_MAX_M),
        });
    }
    Ok(())
}

/// Exact divided symmetrization of `f` over `g`, for `deg f <= |E(g)|`.
///
/// The result does not depend on the evaluation point; with
/// `opts.verify_point` set this is checked at a second point.
pub fn ds_constant(f: &Polynomial, g: &Graph, opts: &DsOptions) -> Result<Rational> {
    validate_request(f, g, opts)?;
    let pt = opts
        .point
        .clone()
        .unwrap_or_else(|| Point::default_for(g.num_vertices()));
    validate_point(&pt, g.num_vertices())?;

    // Scaling a distinct-coordinate point keeps it distinct, and the value of
    // a constant symmetrized sum is point-independent, so integer coordinates
    // lose nothing.
    let q = scale_point_to_integers(&pt);
    let value = ds_at_integer_point(f, g, &q, opts.workers);

    if opts.verify_point {
        let q2 = alternate_point(g.num_vertices(), &q);
        let check = ds_at_integer_point(f, g, &q2, opts.workers);
        if check != value {
            return Err(Error::VerificationFailed(format!(
                "point dependence detected: {} at the primary point vs {} at the check point",
                value, check
            )));
        }
    }
    Ok(value)
}

/// The product of all non-edge difference factors `(x_i - x_j)`, `i < j`,
/// `(i, j)` not an edge of `g`.
pub fn nonedge_factor(g: &Graph) -> Polynomial {
    let m = g.num_vertices();
    let mut out = Polynomial::one(m);
    for i in 0..m {
        for j in i + 1..m {
            if !g.has_edge(i, j) {
                let factor = Polynomial::var(m, i)
                    .sub(&Polynomial::var(m, j))
                    .expect("same variable count");
                out = out.mul(&factor).expect("same variable count");
            }
        }
    }
    out
}

/// Same value as [`ds_constant`], computed through the complete graph:
/// multiply `f` by every non-edge difference factor and symmetrize over all
/// of `K_m`. An independent route used for cross-checking.
pub fn ds_via_complete(f: &Polynomial, g: &Graph, opts: &DsOptions) -> Result<Rational> {
    validate_request(f, g, opts)?;
    let lifted = f
        .mul(&nonedge_factor(g))
        .expect("same variable count");
    ds_constant(&lifted, &Graph::complete(g.num_vertices()), opts)
}

/// Both sides of the disconnected-graph product identity.
///
/// `f_u` lives on `gU`'s variables, `f_w` on `gW`'s; the left side
/// symmetrizes their product over the disjoint union, the right side is
/// `C(m, |U|) * DS_{gU}(f_u) * DS_{gW}(f_w)` when both degrees match their
/// component edge counts exactly, and 0 otherwise.
pub fn check_eq1(
    f_u: &Polynomial,
    f_w: &Polynomial,
    g_u: &Graph,
    g_w: &Graph,
    opts: &DsOptions,
) -> Result<(Rational, Rational)> {
    let mu = g_u.num_vertices();
    let mw = g_w.num_vertices();
    if f_u.num_vars() != mu {
        return Err(Error::VarCountMismatch(f_u.num_vars(), mu));
    }
    if f_w.num_vars() != mw {
        return Err(Error::VarCountMismatch(f_w.num_vars(), mw));
    }
    let deg_u = f_u.degree().unwrap_or(0) as usize;
    let deg_w = f_w.degree().unwrap_or(0) as usize;
    if deg_u + deg_w > g_u.num_edges() + g_w.num_edges() {
        return Err(Error::DegreePrecondition(format!(
            "deg f_u + deg f_w = {} exceeds |EU| + |EW| = {}",
            deg_u + deg_w,
            g_u.num_edges() + g_w.num_edges()
        )));
    }

    let m = mu + mw;
    let union = g_u.disjoint_union(g_w);
    let product = f_u
        .embed(m, 0)?
        .mul(&f_w.embed(m, mu)?)
        .expect("same variable count");
    let lhs = ds_constant(&product, &union, opts)?;

    let degrees_match = !f_u.is_zero()
        && !f_w.is_zero()
        && f_u.degree() == Some(g_u.num_edges() as u32)
        && f_w.degree() == Some(g_w.num_edges() as u32);
    let rhs = if degrees_match {
        let binom = crate::comb::binomial(m, mu);
        let du = ds_constant(f_u, g_u, opts)?;
        let dw = ds_constant(f_w, g_w, opts)?;
        du * dw * BigRational::from_integer(BigInt::from(binom))
    } else {
        Rational::zero()
    };
    Ok((lhs, rhs))
}

/// Symmetrize `h * prod_{(i,j) in removed} (x_i - x_j) * cofactor` over `g`.
///
/// Preconditions: `u_set` is a connected component of `g` minus `removed`,
/// `h` is a non-constant polynomial in the `u_set` variables invariant under
/// their transpositions, and the total degree is at most `|E(g)|`. Under
/// those the result is always 0; the value is returned so callers can assert
/// it.
pub fn lemma1_vanishes(
    h: &Polynomial,
    removed: &[(usize, usize)],
    u_set: &[usize],
    g: &Graph,
    cofactor: Option<&Polynomial>,
    opts: &DsOptions,
) -> Result<Rational> {
    let m = g.num_vertices();
    if h.num_vars() != m {
        return Err(Error::VarCountMismatch(h.num_vars(), m));
    }

    let mut u_sorted = u_set.to_vec();
    u_sorted.sort_unstable();
    u_sorted.dedup();
    let components = g.components_after_removal(removed)?;
    if !components.contains(&u_sorted) {
        return Err(Error::PreconditionViolated(format!(
            "{u_sorted:?} is not a connected component after removing {removed:?}"
        )));
    }

    // h must be a genuine symmetric polynomial of the u_set variables:
    // supported on them, non-constant, and invariant under their adjacent
    // transpositions (which generate the full symmetric group on u_set).
    let in_u = |i: usize| u_sorted.binary_search(&i).is_ok();
    for (mono, _) in h.terms() {
        for (i, &e) in mono.0.iter().enumerate() {
            if e > 0 && !in_u(i) {
                return Err(Error::PreconditionViolated(format!(
                    "h involves variable x{i} outside the component {u_sorted:?}"
                )));
            }
        }
    }
    if h.degree().unwrap_or(0) == 0 {
        return Err(Error::PreconditionViolated(
            "h must be non-constant; a constant factor certifies nothing".into(),
        ));
    }
    for w in u_sorted.windows(2) {
        if !h.is_symmetric_under_swap(w[0], w[1]) {
            return Err(Error::PreconditionViolated(format!(
                "h is not symmetric on {u_sorted:?}: swapping x{} and x{} changes it",
                w[0], w[1]
            )));
        }
    }

    let mut f = h.clone();
    for &(a, b) in removed {
        let (i, j) = (a.min(b), a.max(b));
        let factor = Polynomial::var(m, i)
            .sub(&Polynomial::var(m, j))
            .expect("same variable count");
        f = f.mul(&factor).expect("same variable count");
    }
    if let Some(c) = cofactor {
        f = f.mul(c)?;
    }
    if f.degree().unwrap_or(0) as usize > g.num_edges() {
        return Err(Error::DegreePrecondition(format!(
            "total degree {} exceeds |E| = {}",
            f.degree().unwrap_or(0),
            g.num_edges()
        )));
    }
    ds_constant(&f, g, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph};
    use crate::poly::prefix_sum_monomial;
    use crate::rational::{rat, rat_frac};
    use proptest::prelude::*;

    fn x(m: usize, i: usize) -> Polynomial {
        Polynomial::var(m, i)
    }

    fn ds(f: &Polynomial, g: &Graph) -> Rational {
        ds_constant(f, g, &DsOptions::default()).unwrap()
    }

    #[test]
    fn path3_single_variable_squares() {
        let g = path_graph(3).unwrap();
        assert_eq!(ds(&x(3, 0).pow(2), &g), rat(1));
        assert_eq!(ds(&x(3, 1).pow(2), &g), rat(-2));
        assert_eq!(ds(&x(3, 2).pow(2), &g), rat(1));
    }

    #[test]
    fn low_degree_vanishes() {
        let g = path_graph(3).unwrap();
        assert_eq!(ds(&x(3, 0), &g), rat(0));
        assert_eq!(ds(&Polynomial::one(3), &g), rat(0));
        assert_eq!(ds(&Polynomial::zero(3), &g), rat(0));
    }

    #[test]
    fn product_monomial_value() {
        // brute-forced over all 6 permutations at a generic point
        let g = path_graph(3).unwrap();
        let f = x(3, 0).mul(&x(3, 1)).unwrap();
        assert_eq!(ds(&f, &g), rat(1));
    }

    #[test]
    fn degree_above_edge_count_rejected() {
        let g = path_graph(3).unwrap();
        assert!(matches!(
            ds_constant(&x(3, 0).pow(3), &g, &DsOptions::default()),
            Err(Error::DegreeExceedsEdges { .. })
        ));
    }

    #[test]
    fn non_distinct_point_rejected() {
        let g = path_graph(3).unwrap();
        let opts = DsOptions {
            point: Some(Point(vec![rat(1), rat(1), rat(2)])),
            ..DsOptions::default()
        };
        assert!(matches!(
            ds_constant(&x(3, 0).pow(2), &g, &opts),
            Err(Error::NonDistinctPoint)
        ));
    }

    #[test]
    fn cap_rejected() {
        let g = path_graph(4).unwrap();
        let opts = DsOptions {
            max_m: 3,
            ..DsOptions::default()
        };
        assert!(matches!(
            ds_constant(&x(4, 0).pow(2), &g, &opts),
            Err(Error::PermutationCapExceeded { .. })
        ));
    }

    #[test]
    fn point_independence_on_rational_point() {
        let g = path_graph(3).unwrap();
        let f = x(3, 0).pow(2);
        let opts = DsOptions {
            point: Some(Point(vec![rat_frac(1, 2), rat_frac(-3, 7), rat(4)])),
            verify_point: true,
            ..DsOptions::default()
        };
        assert_eq!(ds_constant(&f, &g, &opts).unwrap(), rat(1));
    }

    #[test]
    fn via_complete_matches() {
        let g = path_graph(3).unwrap();
        let opts = DsOptions::default();
        for f in [
            x(3, 0).pow(2),
            x(3, 1).pow(2),
            x(3, 0).mul(&x(3, 1)).unwrap(),
        ] {
            assert_eq!(
                ds_via_complete(&f, &g, &opts).unwrap(),
                ds_constant(&f, &g, &opts).unwrap()
            );
        }
        // on a complete graph the two routes coincide by construction
        let k4 = Graph::complete(4);
        let f = x(4, 0).pow(3).mul(&x(4, 1).pow(2)).unwrap().mul(&x(4, 2)).unwrap();
        assert_eq!(
            ds_via_complete(&f, &k4, &opts).unwrap(),
            ds_constant(&f, &k4, &opts).unwrap()
        );
    }

    #[test]
    fn eq1_product_identity() {
        let opts = DsOptions::default();
        let p2 = path_graph(2).unwrap();
        // f_u = x0 on U, f_w = x1 in W's local indexing
        let (lhs, rhs) = check_eq1(&x(2, 0), &x(2, 1), &p2, &p2, &opts).unwrap();
        assert_eq!(lhs, rat(-6));
        assert_eq!(rhs, rat(-6));

        // degree below the component edge count: both sides vanish
        let (lhs, rhs) = check_eq1(&Polynomial::one(2), &x(2, 0), &p2, &p2, &opts).unwrap();
        assert_eq!(lhs, rat(0));
        assert_eq!(rhs, rat(0));

        // single-vertex components, no edges: DS is the permutation count
        let single = path_graph(1).unwrap();
        let (lhs, rhs) =
            check_eq1(&Polynomial::one(1), &Polynomial::one(1), &single, &single, &opts).unwrap();
        assert_eq!(lhs, rat(2));
        assert_eq!(rhs, rat(2));
    }

    #[test]
    fn eq1_degree_precondition() {
        let opts = DsOptions::default();
        let p2 = path_graph(2).unwrap();
        assert!(check_eq1(&x(2, 0).pow(2), &x(2, 0), &p2, &p2, &opts).is_err());
    }

    #[test]
    fn lemma1_examples_vanish() {
        let opts = DsOptions::default();
        let g = path_graph(3).unwrap();

        // (x0 + x1)(x1 - x2), U = {0, 1}
        let h = x(3, 0).add(&x(3, 1)).unwrap();
        let v = lemma1_vanishes(&h, &[(1, 2)], &[0, 1], &g, None, &opts).unwrap();
        assert_eq!(v, rat(0));

        // fully symmetric e2 with nothing removed (U = all vertices)
        let e2 = x(3, 0)
            .mul(&x(3, 1))
            .unwrap()
            .add(&x(3, 0).mul(&x(3, 2)).unwrap())
            .unwrap()
            .add(&x(3, 1).mul(&x(3, 2)).unwrap())
            .unwrap();
        let v = lemma1_vanishes(&e2, &[], &[0, 1, 2], &g, None, &opts).unwrap();
        assert_eq!(v, rat(0));

        // symmetric factor of degree 1 times a cofactor
        let e1 = x(3, 0).add(&x(3, 1)).unwrap().add(&x(3, 2)).unwrap();
        let v = lemma1_vanishes(&e1, &[], &[0, 1, 2], &g, Some(&x(3, 0)), &opts).unwrap();
        assert_eq!(v, rat(0));
    }

    #[test]
    fn lemma1_preconditions() {
        let opts = DsOptions::default();
        let g = path_graph(3).unwrap();
        // not symmetric on U
        let h = x(3, 0).add(&x(3, 1).scale(&rat(2))).unwrap();
        assert!(lemma1_vanishes(&h, &[(1, 2)], &[0, 1], &g, None, &opts).is_err());
        // not a component
        let h = x(3, 0).add(&x(3, 1)).unwrap();
        assert!(lemma1_vanishes(&h, &[(1, 2)], &[0, 2], &g, None, &opts).is_err());
        // constant h certifies nothing
        let one = Polynomial::one(3);
        assert!(lemma1_vanishes(&one, &[(1, 2)], &[0, 1], &g, None, &opts).is_err());
        // supported outside U
        let h = x(3, 2);
        assert!(lemma1_vanishes(&h, &[(1, 2)], &[0, 1], &g, None, &opts).is_err());
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let g = cycle_graph(5).unwrap();
        let f = prefix_sum_monomial(&[2, 1, 1, 1, 0]).unwrap();
        let base = ds_constant(&f, &g, &DsOptions::default()).unwrap();
        for workers in [1, 2, 4] {
            let opts = DsOptions {
                workers,
                ..DsOptions::default()
            };
            assert_eq!(ds_constant(&f, &g, &opts).unwrap(), base);
        }
    }

    #[test]
    fn single_vertex_convention() {
        // one permutation of one variable, empty edge product
        let g = path_graph(1).unwrap();
        assert_eq!(ds(&Polynomial::one(1), &g), rat(1));
    }

    fn arb_small_poly(m: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..=max_deg, m), -3i64..=3),
            1..4,
        )
        .prop_map(move |terms| {
            let mut p = Polynomial::zero(m);
            for (exp, c) in terms {
                let trimmed: Vec<u32> = exp;
                if trimmed.iter().sum::<u32>() <= max_deg {
                    p = p
                        .add(&Polynomial::monomial(m, trimmed, rat(c)).unwrap())
                        .unwrap();
                }
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn point_independence(f in arb_small_poly(4, 3), seedpt in proptest::collection::vec(1i64..40, 4)) {
            prop_assume!({
                let mut s = seedpt.clone();
                s.sort_unstable();
                s.windows(2).all(|w| w[0] != w[1])
            });
            let g = path_graph(4).unwrap();
            let a = ds_constant(&f, &g, &DsOptions::default()).unwrap();
            let opts = DsOptions {
                point: Some(Point(seedpt.into_iter().map(rat).collect())),
                ..DsOptions::default()
            };
            let b = ds_constant(&f, &g, &opts).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn linearity(f in arb_small_poly(4, 3), g2 in arb_small_poly(4, 3), a in -3i64..=3, b in -3i64..=3) {
            let g = path_graph(4).unwrap();
            let opts = DsOptions::default();
            let combo = f.scale(&rat(a)).add(&g2.scale(&rat(b))).unwrap();
            let lhs = ds_constant(&combo, &g, &opts).unwrap();
            let rhs = ds_constant(&f, &g, &opts).unwrap() * rat(a)
                + ds_constant(&g2, &g, &opts).unwrap() * rat(b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn symmetric_factor_vanishes(f in arb_small_poly(3, 1)) {
            // (x0 + x1 + x2) * f has a non-constant symmetric factor
            let g = path_graph(3).unwrap();
            let e1 = Polynomial::var(3, 0)
                .add(&Polynomial::var(3, 1)).unwrap()
                .add(&Polynomial::var(3, 2)).unwrap();
            let prod = e1.mul(&f).unwrap();
            if prod.degree().unwrap_or(0) as usize <= g.num_edges() {
                let v = ds_constant(&prod, &g, &DsOptions::default()).unwrap();
                prop_assert_eq!(v, rat(0));
            }
        }
    }
}
