//! Batch verification routines behind the `verify` CLI subcommand, plus the
//! seeded random-instance generators they and the test suites share.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::comb::{compositions, k_subsets};
use crate::divsym::{check_eq1, ds_constant, lemma1_vanishes, DsOptions};
use crate::error::Result;
use crate::graph::{path_graph, validate_tree, Graph, Tree};
use crate::identities;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::sandpile::{exact_absorption, CoinConfig, RobPolicy, SolveOptions};

/// Outcome of one batch check: how many cases ran and which ones failed.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    fn new(check: &str) -> Self {
        VerifyReport {
            check: check.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

// --- random instances ---------------------------------------------------------

/// Uniform random labeled tree on `m` vertices via a random linear code
/// sequence.
pub fn random_tree(rng: &mut impl Rng, m: usize) -> Tree {
    assert!(m >= 1);
    if m == 1 {
        return validate_tree(path_graph(1).expect("single vertex")).expect("trivial tree");
    }
    if m == 2 {
        return validate_tree(Graph::new(2, vec![(0, 1)]).expect("edge")).expect("two-vertex tree");
    }
    let seq: Vec<usize> = (0..m - 2).map(|_| rng.gen_range(0..m)).collect();
    let mut degree = vec![1usize; m];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..m).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(m - 1);
    for &s in &seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut it = leaves.iter();
    let a = *it.next().expect("two leaves remain");
    let b = *it.next().expect("two leaves remain");
    edges.push((a, b));
    validate_tree(Graph::new(m, edges).expect("decoded edges are valid"))
        .expect("decoding yields a tree")
}

/// Random weight assignment on `m` vertices: distribute the m-1 units of
/// monomial degree over the vertices and subtract one everywhere.
pub fn random_weights(rng: &mut impl Rng, m: usize) -> crate::tree_formula::WeightAssignment {
    let mut exps = vec![0i64; m];
    for _ in 0..m - 1 {
        exps[rng.gen_range(0..m)] += 1;
    }
    crate::tree_formula::WeightAssignment::new(exps.into_iter().map(|e| e - 1).collect())
        .expect("sums to -1 by construction")
}

/// Random coin configuration: `n` coins thrown uniformly on `m` vertices.
pub fn random_config(rng: &mut impl Rng, m: usize, n: u64) -> CoinConfig {
    assert!(n < m as u64);
    let mut counts = vec![0u64; m];
    for _ in 0..n {
        counts[rng.gen_range(0..m)] += 1;
    }
    CoinConfig::new(counts).expect("valid by construction")
}

// --- batch checks --------------------------------------------------------------

/// Engine values of `x_i^n` on the path against the closed form, for all
/// `0 <= i <= n <= n_max`.
pub fn lemma2(n_max: usize, opts: &DsOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("lemma2");
    for n in 1..=n_max {
        let g = path_graph(n + 1)?;
        for i in 0..=n {
            let closed = identities::lemma2_value(i, n)?;
            let f = Polynomial::var(n + 1, i).pow(n as u32);
            let engine = ds_constant(&f, &g, opts)?;
            report.case(engine == closed, || {
                format!("x_{i}^{n}: engine {engine} vs closed form {closed}")
            });
        }
    }
    Ok(report)
}

/// The factorial identity for prefix products, `1 <= n <= n_max`.
pub fn eq2(n_max: usize, opts: &DsOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("eq2");
    for n in 1..=n_max {
        let (lhs, rhs) = identities::verify_eq2(n, opts)?;
        report.case(lhs == rhs, || format!("n = {n}: {lhs} vs {rhs}"));
    }
    Ok(report)
}

/// The cyclic-shift identity over every composition of `n` into n+1 parts.
pub fn postnikov(n: u32, opts: &DsOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("postnikov");
    for c in compositions(n, n as usize + 1) {
        let (lhs, rhs) = identities::postnikov_check(&c, opts)?;
        report.case(lhs == rhs, || format!("c = {c:?}: {lhs} vs {rhs}"));
    }
    Ok(report)
}

/// The three-term Q relations (and zero residuals) over every composition of
/// `n` into n+1 parts.
pub fn q_relations(n: u32, opts: &DsOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("q-relations");
    for c in compositions(n, n as usize + 1) {
        let residual = identities::q_residual(&c, opts)?;
        report.case(residual.is_zero(), || {
            format!("residual of {c:?} is {residual}")
        });
        for i in 0..c.len() {
            if c[i] >= 2 {
                let rel = identities::q_relation_check(&c, i, opts)?;
                report.case(rel.is_zero(), || {
                    format!("relation at {i} of {c:?} is {rel}")
                });
            }
        }
    }
    Ok(report)
}

/// The cycle empty-set formula against the absorption solver, plus the
/// grand-sum identity, over every composition of `n` into n+d parts.
pub fn cycle(n: u32, d: usize, opts: &DsOptions, solve_opts: &SolveOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("cycle");
    let m = n as usize + d;
    for c in compositions(n, m) {
        let counts: Vec<u64> = c.iter().map(|&v| v as u64).collect();
        let config = CoinConfig::new(counts.clone())?;
        let dist = exact_absorption(&config, RobPolicy::LowestIndex, solve_opts)?;
        let mut total = Rational::zero();
        for subset in k_subsets(m, d) {
            let p = identities::EmptySet::new(subset, m)?;
            let formula = identities::prob_empty_set_formula(&config, &p, opts)?;
            let exact = dist.probability(&p.final_config());
            report.case(formula == exact, || {
                format!(
                    "c = {counts:?}, P = {:?}: formula {formula} vs solver {exact}",
                    p.vertices()
                )
            });
            total += formula;
        }
        report.case(total == Rational::one(), || {
            format!("c = {counts:?}: probabilities sum to {total}")
        });
        let (lhs, rhs) = identities::cycle_identity_check(&counts, d, opts)?;
        report.case(lhs == rhs, || {
            format!("c = {counts:?}: grand sum {lhs} vs {rhs}")
        });
    }
    Ok(report)
}

/// Randomized vanishing certificates: a symmetric factor on a component of
/// the graph minus some edges, times those edge differences and a cofactor.
pub fn lemma1(count: usize, seed: u64, max_m: usize, opts: &DsOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("lemma1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut produced = 0;
    while produced < count {
        // instances need a degree budget after edge removal, so m >= 3
        let m = rng.gen_range(3..=max_m.max(3));
        let tree = random_tree(&mut rng, m);
        // occasionally thicken the tree with one extra edge
        let g = if m >= 3 && rng.gen_bool(0.3) {
            let mut edges = tree.graph().edges().to_vec();
            let candidates: Vec<(usize, usize)> = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .filter(|&(i, j)| !tree.graph().has_edge(i, j))
                .collect();
            if candidates.is_empty() {
                tree.graph().clone()
            } else {
                edges.push(candidates[rng.gen_range(0..candidates.len())]);
                Graph::new(m, edges)?
            }
        } else {
            tree.graph().clone()
        };

        let budget = g.num_edges();
        let k_removed = rng.gen_range(1..=2.min(g.num_edges()));
        let mut removed: Vec<(usize, usize)> = Vec::new();
        while removed.len() < k_removed {
            let e = g.edges()[rng.gen_range(0..g.num_edges())];
            if !removed.contains(&e) {
                removed.push(e);
            }
        }
        let budget = budget - removed.len();
        if budget == 0 {
            continue;
        }

        let comps = g.components_after_removal(&removed)?;
        let u_set = comps[rng.gen_range(0..comps.len())].clone();

        // elementary symmetric polynomial e_k on the component
        let h_deg = rng.gen_range(1..=budget.min(u_set.len()));
        let mut h = Polynomial::zero(m);
        for subset in k_subsets(u_set.len(), h_deg) {
            let mut term = Polynomial::one(m);
            for idx in subset {
                term = term.mul(&Polynomial::var(m, u_set[idx]))?;
            }
            h = h.add(&term)?;
        }

        // random monomial cofactor within the remaining degree budget
        let cof_deg = rng.gen_range(0..=(budget - h_deg));
        let cofactor = if cof_deg == 0 {
            None
        } else {
            let mut cof = Polynomial::one(m);
            for _ in 0..cof_deg {
                cof = cof.mul(&Polynomial::var(m, rng.gen_range(0..m)))?;
            }
            Some(cof)
        };

        let value = lemma1_vanishes(&h, &removed, &u_set, &g, cofactor.as_ref(), opts)?;
        report.case(value.is_zero(), || {
            format!(
                "m = {m}, removed = {removed:?}, U = {u_set:?}, h_deg = {h_deg}: got {value}"
            )
        });
        produced += 1;
    }
    Ok(report)
}

/// Randomized product-identity instances over disjoint unions.
pub fn eq1(count: usize, seed: u64, max_m: usize, opts: &DsOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("eq1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_m = max_m.max(2);
    for _ in 0..count {
        let mu = rng.gen_range(1..max_m);
        let mw = rng.gen_range(1..=(max_m - mu).max(1));
        let g_u = random_tree(&mut rng, mu).graph().clone();
        let g_w = random_tree(&mut rng, mw).graph().clone();

        // random polynomial of total degree at most the target; bias towards
        // hitting the edge count exactly so the nonzero branch is exercised
        let gen_poly = |rng: &mut ChaCha8Rng, m: usize, edges: usize| -> Result<Polynomial> {
            let target = if edges > 0 && rng.gen_bool(0.3) {
                rng.gen_range(0..edges)
            } else {
                edges
            };
            let mut p = Polynomial::zero(m);
            let terms = rng.gen_range(1..=2);
            for _ in 0..terms {
                let mut exp = vec![0u32; m];
                for _ in 0..target {
                    exp[rng.gen_range(0..m)] += 1;
                }
                let coef = crate::rational::rat(rng.gen_range(1..=3));
                p = p.add(&Polynomial::monomial(m, exp, coef)?)?;
            }
            Ok(p)
        };
        let f_u = gen_poly(&mut rng, mu, g_u.num_edges())?;
        let f_w = gen_poly(&mut rng, mw, g_w.num_edges())?;

        let (lhs, rhs) = check_eq1(&f_u, &f_w, &g_u, &g_w, opts)?;
        report.case(lhs == rhs, || {
            format!(
                "mu = {mu}, mw = {mw}, f_u = {f_u}, f_w = {f_w}: lhs {lhs} vs rhs {rhs}"
            )
        });
    }
    Ok(report)
}

/// Engine self-consistency: point independence and agreement of the direct
/// and through-the-complete-graph routes on random instances.
pub fn engine(count: usize, seed: u64, max_m: usize, opts: &DsOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("engine");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let m = rng.gen_range(2..=max_m.max(2));
        let tree = random_tree(&mut rng, m);
        let g = tree.graph();
        let deg = rng.gen_range(0..=g.num_edges());
        let mut f = Polynomial::zero(m);
        for _ in 0..rng.gen_range(1..=3) {
            let mut exp = vec![0u32; m];
            for _ in 0..deg {
                exp[rng.gen_range(0..m)] += 1;
            }
            f = f.add(&Polynomial::monomial(
                m,
                exp,
                crate::rational::rat(rng.gen_range(-3..=3i64)),
            )?)?;
        }

        let direct = ds_constant(&f, g, opts)?;
        let via = crate::divsym::ds_via_complete(&f, g, opts)?;
        report.case(direct == via, || {
            format!("m = {m}, f = {f}: direct {direct} vs via complete {via}")
        });

        let shifted: Vec<Rational> = (0..m)
            .map(|k| BigRational::from_integer(BigInt::from((k * k + 3 * k + 5) as i64)))
            .collect();
        let opts2 = DsOptions {
            point: Some(crate::poly::Point(shifted)),
            ..opts.clone()
        };
        let at_other_point = ds_constant(&f, g, &opts2)?;
        report.case(direct == at_other_point, || {
            format!("m = {m}, f = {f}: point dependence {direct} vs {at_other_point}")
        });
    }
    Ok(report)
}
