//! The coin-robbing process on a cycle: a vertex holding at least two coins
//! gives one to a uniformly random neighbor, until every vertex holds at most
//! one. Exact absorption distributions come from a rational linear solve over
//! the reachable state graph; a seeded Monte Carlo simulator provides an
//! independent empirical route.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{check_format, default_format};
use crate::rational::{from_string_pair, to_string_pair, Rational};

/// Nonnegative coin counts on cycle vertices `0..m-1`.
///
/// The total `n` satisfies `n = m - d` with `d >= 1` empty vertices in every
/// final configuration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoinConfig {
    counts: Vec<u64>,
}

impl CoinConfig {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidCoinConfig("no vertices".into()));
        }
        let m = counts.len() as u64;
        let n: u64 = counts.iter().sum();
        if n >= m {
            return Err(Error::InvalidCoinConfig(format!(
                "{n} coins on {m} vertices: need at least one empty vertex in the final configuration"
            )));
        }
        Ok(CoinConfig { counts })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn num_vertices(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Number of empty vertices in every final configuration.
    pub fn empty_slots(&self) -> u64 {
        self.counts.len() as u64 - self.total()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ConfigJson {
            format: 1,
            counts: self.counts.clone(),
        })
        .expect("config serialization cannot fail")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: ConfigJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        check_format(raw.format)?;
        CoinConfig::new(raw.counts)
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    #[serde(default = "default_format")]
    format: u32,
    counts: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Move one coin from `v` (which must hold at least 2) to its cyclic
/// neighbor: index v-1 for Left, v+1 for Right, both mod m.
pub fn rob(c: &CoinConfig, v: usize, dir: Direction) -> Result<CoinConfig> {
    let m = c.counts.len();
    if v >= m {
        return Err(Error::InvalidVertex { vertex: v, m });
    }
    if c.counts[v] < 2 {
        return Err(Error::RobUnderflow {
            vertex: v,
            coins: c.counts[v],
        });
    }
    let target = match dir {
        Direction::Left => (v + m - 1) % m,
        Direction::Right => (v + 1) % m,
    };
    let mut counts = c.counts.clone();
    counts[v] -= 1;
    counts[target] += 1;
    Ok(CoinConfig { counts })
}

/// Whether no vertex holds two or more coins.
pub fn is_final(c: &CoinConfig) -> bool {
    c.counts.iter().all(|&x| x <= 1)
}

/// Rule choosing which robbable vertex acts at each state. Every variant is
/// a deterministic function of the state, so the exact solver and the
/// simulator see the same chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RobPolicy {
    LowestIndex,
    HighestIndex,
    /// Pseudo-random but reproducible: FNV-1a over (seed, counts) picks
    /// among the robbable vertices.
    Seeded(u64),
}

impl RobPolicy {
    /// The vertex to rob, or None when the state is final.
    pub fn choose(&self, counts: &[u64]) -> Option<usize> {
        let robbable: Vec<usize> = counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= 2)
            .map(|(i, _)| i)
            .collect();
        if robbable.is_empty() {
            return None;
        }
        match self {
            RobPolicy::LowestIndex => Some(robbable[0]),
            RobPolicy::HighestIndex => Some(*robbable.last().expect("nonempty")),
            RobPolicy::Seeded(seed) => {
                let mut h: u64 = 0xcbf29ce484222325;
                let mut mix = |x: u64| {
                    h ^= x;
                    h = h.wrapping_mul(0x100000001b3);
                };
                mix(*seed);
                for &c in counts {
                    mix(c);
                }
                Some(robbable[(h % robbable.len() as u64) as usize])
            }
        }
    }
}

/// Exact probability of each reachable final configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsorptionResult {
    entries: BTreeMap<CoinConfig, Rational>,
}

impl AbsorptionResult {
    pub fn entries(&self) -> &BTreeMap<CoinConfig, Rational> {
        &self.entries
    }

    pub fn probability(&self, f: &CoinConfig) -> Rational {
        self.entries.get(f).cloned().unwrap_or_else(Rational::zero)
    }

    /// Marginal probability that vertex `v` is empty at absorption.
    pub fn prob_vertex_empty(&self, v: usize) -> Rational {
        self.entries
            .iter()
            .filter(|(f, _)| f.counts[v] == 0)
            .map(|(_, p)| p.clone())
            .sum()
    }

    pub fn total(&self) -> Rational {
        self.entries.values().cloned().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(f, p)| {
                let (num, den) = to_string_pair(p);
                serde_json::json!({"final": f.counts, "prob": [num, den]})
            })
            .collect();
        serde_json::Value::Array(list)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Json("absorption result must be an array".into()))?;
        let mut entries = BTreeMap::new();
        for item in arr {
            let f: Vec<u64> = serde_json::from_value(item["final"].clone())
                .map_err(|e| Error::Json(e.to_string()))?;
            let pair: (String, String) = serde_json::from_value(item["prob"].clone())
                .map_err(|e| Error::Json(e.to_string()))?;
            let config = CoinConfig::new(f)?;
            if !is_final(&config) {
                return Err(Error::Json(format!(
                    "{:?} is not a final configuration",
                    config.counts()
                )));
            }
            entries.insert(config, from_string_pair(&pair.0, &pair.1)?);
        }
        Ok(AbsorptionResult { entries })
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Abort if the reachable state graph grows beyond this.
    pub max_states: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { max_states: 100_000 }
    }
}

/// Exact absorption distribution from `start` under `policy`.
///
/// The reachable state graph may contain directed cycles (a coin can
/// oscillate), so the transient probabilities are obtained by exact Gaussian
/// elimination on `p(s) = (p(s_left) + p(s_right)) / 2`. States are grouped
/// by their count of occupied vertices, which never decreases along a
/// trajectory: each group is solved as a small self-contained system given
/// the groups above it.
pub fn exact_absorption(
    start: &CoinConfig,
    policy: RobPolicy,
    opts: &SolveOptions,
) -> Result<AbsorptionResult> {
    if is_final(start) {
        let mut entries = BTreeMap::new();
        entries.insert(start.clone(), Rational::one());
        return Ok(AbsorptionResult { entries });
    }

    // breadth-first enumeration of the reachable states
    let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut states: Vec<CoinConfig> = Vec::new();
    let mut succ: Vec<Option<(usize, usize)>> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    index.insert(start.counts.clone(), 0);
    states.push(start.clone());
    succ.push(None);
    queue.push_back(0usize);
    while let Some(si) = queue.pop_front() {
        let state = states[si].clone();
        let v = match policy.choose(state.counts()) {
            Some(v) => v,
            None => continue,
        };
        let mut pair = [0usize; 2];
        for (k, dir) in [Direction::Left, Direction::Right].into_iter().enumerate() {
            let next = rob(&state, v, dir).expect("policy picked a robbable vertex");
            let ni = match index.get(&next.counts) {
                Some(&ni) => ni,
                None => {
                    let ni = states.len();
                    if ni >= opts.max_states {
                        return Err(Error::StateCapExceeded {
                            cap: opts.max_states,
                        });
                    }
                    index.insert(next.counts.clone(), ni);
                    states.push(next);
                    succ.push(None);
                    queue.push_back(ni);
                    ni
                }
            };
            pair[k] = ni;
        }
        succ[si] = Some((pair[0], pair[1]));
    }

    let finals: Vec<usize> = (0..states.len())
        .filter(|&i| is_final(&states[i]))
        .collect();
    let final_col: HashMap<usize, usize> =
        finals.iter().enumerate().map(|(c, &i)| (i, c)).collect();
    let nf = finals.len();

    // occupied-vertex count per state; transitions never decrease it
    let occupied =
        |i: usize| states[i].counts.iter().filter(|&&c| c > 0).count();
    let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..states.len() {
        if !final_col.contains_key(&i) {
            levels.entry(occupied(i)).or_default().push(i);
        }
    }

    let half = Rational::new(1.into(), 2.into());
    // distribution over final columns for each resolved state
    let mut dist: HashMap<usize, Vec<Rational>> = HashMap::new();
    for (&i, &c) in &final_col {
        let mut row = vec![Rational::zero(); nf];
        row[c] = Rational::one();
        dist.insert(i, row);
    }

    for (_, members) in levels.iter().rev() {
        let k = members.len();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut a = vec![vec![Rational::zero(); k]; k];
        let mut b = vec![vec![Rational::zero(); nf]; k];
        for (row, &i) in members.iter().enumerate() {
            a[row][row] = Rational::one();
            let (l, r) = succ[i].expect("transient states have successors");
            for next in [l, r] {
                if let Some(&col) = pos.get(&next) {
                    a[row][col] -= &half;
                } else {
                    let resolved = dist
                        .get(&next)
                        .expect("successors outside the level are already resolved");
                    for (c, p) in resolved.iter().enumerate() {
                        if !p.is_zero() {
                            b[row][c] += p * &half;
                        }
                    }
                }
            }
        }
        let x = linalg::solve(a, b)?;
        for (row, &i) in members.iter().enumerate() {
            dist.insert(i, x[row].clone());
        }
    }

    let start_dist = dist.get(&0).expect("start state resolved");
    let mut entries = BTreeMap::new();
    for (c, &fi) in finals.iter().enumerate() {
        if !start_dist[c].is_zero() {
            entries.insert(states[fi].clone(), start_dist[c].clone());
        }
    }
    Ok(AbsorptionResult { entries })
}

/// Marginal probability that vertex `v` is empty at absorption.
pub fn prob_vertex_empty(
    start: &CoinConfig,
    v: usize,
    policy: RobPolicy,
    opts: &SolveOptions,
) -> Result<Rational> {
    if v >= start.num_vertices() {
        return Err(Error::InvalidVertex {
            vertex: v,
            m: start.num_vertices(),
        });
    }
    Ok(exact_absorption(start, policy, opts)?.prob_vertex_empty(v))
}

/// Exact distributions under two policies compared for equality; true means
/// the robbing order did not matter.
pub fn policy_invariance_check(
    start: &CoinConfig,
    policy_a: RobPolicy,
    policy_b: RobPolicy,
    opts: &SolveOptions,
) -> Result<bool> {
    let a = exact_absorption(start, policy_a, opts)?;
    let b = exact_absorption(start, policy_b, opts)?;
    Ok(a == b)
}

#[derive(Debug, Clone)]
pub struct SimOptions {
    pub seed: u64,
    pub trials: u64,
    pub policy: RobPolicy,
    /// Per-trial step budget guarding against implementation bugs;
    /// termination itself is almost sure.
    pub step_cap: u64,
    /// Worker threads; 0 picks the rayon default. The result does not depend
    /// on this.
    pub workers: usize,
}

impl Default for SimOptions {
    fn default() -> Self {
        SimOptions {
            seed: 0,
            trials: 100_000,
            policy: RobPolicy::LowestIndex,
            step_cap: 10_000_000,
            workers: 0,
        }
    }
}

/// Empirical absorption frequencies with binomial standard errors.
#[derive(Debug, Clone, PartialEq)]
pub struct SimResult {
    pub trials: u64,
    pub counts: BTreeMap<CoinConfig, u64>,
}

impl SimResult {
    pub fn frequency(&self, f: &CoinConfig) -> f64 {
        *self.counts.get(f).unwrap_or(&0) as f64 / self.trials as f64
    }

    pub fn stderr(&self, f: &CoinConfig) -> f64 {
        let p = self.frequency(f);
        (p * (1.0 - p) / self.trials as f64).sqrt()
    }

    /// Empirical marginal frequency of vertex `v` being empty.
    pub fn freq_vertex_empty(&self, v: usize) -> f64 {
        let hits: u64 = self
            .counts
            .iter()
            .filter(|(f, _)| f.counts[v] == 0)
            .map(|(_, c)| c)
            .sum();
        hits as f64 / self.trials as f64
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<serde_json::Value> = self
            .counts
            .iter()
            .map(|(f, &c)| {
                let freq = c as f64 / self.trials as f64;
                let stderr = (freq * (1.0 - freq) / self.trials as f64).sqrt();
                serde_json::json!({
                    "final": f.counts,
                    "count": c,
                    "freq": freq,
                    "stderr": stderr,
                    "trials": self.trials,
                })
            })
            .collect();
        serde_json::Value::Array(list)
    }
}

/// One trajectory to absorption. The per-trial generator is the seed's
/// ChaCha8 stream numbered by the trial index, so any subset of trials can be
/// reproduced independently of scheduling.
fn run_trial(start: &CoinConfig, policy: RobPolicy, seed: u64, trial: u64, step_cap: u64) -> Result<CoinConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut counts = start.counts.clone();
    let m = counts.len();
    let mut steps = 0u64;
    while let Some(v) = policy.choose(&counts) {
        if steps >= step_cap {
            return Err(Error::StepCapExceeded {
                trial,
                cap: step_cap,
            });
        }
        steps += 1;
        let target = if rng.gen::<bool>() {
            (v + 1) % m
        } else {
            (v + m - 1) % m
        };
        counts[v] -= 1;
        counts[target] += 1;
    }
    Ok(CoinConfig { counts })
}

/// Monte Carlo estimate of the absorption distribution. Identical
/// (seed, trials, policy) inputs give identical output regardless of worker
/// count.
pub fn simulate(start: &CoinConfig, opts: &SimOptions) -> Result<SimResult> {
    if opts.trials == 0 {
        return Err(Error::PreconditionViolated("trials must be >= 1".into()));
    }
    let run_range = |lo: u64, hi: u64| -> Result<BTreeMap<CoinConfig, u64>> {
        let mut counts: BTreeMap<CoinConfig, u64> = BTreeMap::new();
        for t in lo..hi {
            let f = run_trial(start, opts.policy, opts.seed, t, opts.step_cap)?;
            *counts.entry(f).or_insert(0) += 1;
        }
        Ok(counts)
    };

    let merged: BTreeMap<CoinConfig, u64> = if opts.trials < 4_096 || opts.workers == 1 {
        run_range(0, opts.trials)?
    } else {
        let chunk = 8_192u64;
        let ranges: Vec<(u64, u64)> = (0..opts.trials)
            .step_by(chunk as usize)
            .map(|s| (s, (s + chunk).min(opts.trials)))
            .collect();
        let par_run = || -> Result<BTreeMap<CoinConfig, u64>> {
            ranges
                .par_iter()
                .map(|&(lo, hi)| run_range(lo, hi))
                .try_reduce(BTreeMap::new, |mut acc, part| {
                    for (k, v) in part {
                        *acc.entry(k).or_insert(0) += v;
                    }
                    Ok(acc)
                })
        };
        if opts.workers == 0 {
            par_run()?
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .expect("thread pool construction")
                .install(par_run)?
        }
    };

    Ok(SimResult {
        trials: opts.trials,
        counts: merged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_frac};

    fn cfg(counts: &[u64]) -> CoinConfig {
        CoinConfig::new(counts.to_vec()).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(CoinConfig::new(vec![2, 0, 0]).is_ok());
        assert!(CoinConfig::new(vec![]).is_err());
        assert!(CoinConfig::new(vec![1, 1, 1]).is_err()); // no empty slot
        assert!(CoinConfig::new(vec![3]).is_err());
    }

    #[test]
    fn rob_moves_coins_cyclically() {
        let c = cfg(&[2, 0, 0]);
        assert_eq!(rob(&c, 0, Direction::Right).unwrap().counts(), &[1, 1, 0]);
        assert_eq!(rob(&c, 0, Direction::Left).unwrap().counts(), &[1, 0, 1]);
        assert!(matches!(
            rob(&cfg(&[1, 1, 0]), 0, Direction::Left),
            Err(Error::RobUnderflow { .. })
        ));
        assert!(rob(&c, 7, Direction::Left).is_err());
    }

    #[test]
    fn finality() {
        assert!(is_final(&cfg(&[1, 1, 0])));
        assert!(!is_final(&cfg(&[2, 0, 0])));
        assert!(is_final(&cfg(&[1, 1, 1, 1, 0])));
    }

    #[test]
    fn conservation_and_monotonicity_along_trajectory() {
        // directions must be random: a fixed alternation can bounce one coin
        // between two vertices forever
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut c = cfg(&[4, 0, 0, 0, 1, 0]);
        let total = c.total();
        let mut occupied = c.counts.iter().filter(|&&x| x > 0).count();
        let mut steps = 0u32;
        while let Some(v) = RobPolicy::LowestIndex.choose(c.counts()) {
            let dir = if rng.gen::<bool>() {
                Direction::Right
            } else {
                Direction::Left
            };
            c = rob(&c, v, dir).unwrap();
            assert_eq!(c.total(), total);
            let now = c.counts.iter().filter(|&&x| x > 0).count();
            assert!(now >= occupied, "occupied count must not decrease");
            occupied = now;
            steps += 1;
            assert!(steps < 1_000_000, "trajectory did not terminate");
        }
        assert!(is_final(&c));
    }

    #[test]
    fn absorption_one_step_cases() {
        let opts = SolveOptions::default();
        let r = exact_absorption(&cfg(&[2, 0, 0]), RobPolicy::LowestIndex, &opts).unwrap();
        assert_eq!(r.probability(&cfg(&[1, 1, 0])), rat_frac(1, 2));
        assert_eq!(r.probability(&cfg(&[1, 0, 1])), rat_frac(1, 2));
        assert_eq!(r.total(), rat(1));

        let r = exact_absorption(&cfg(&[0, 2, 0]), RobPolicy::LowestIndex, &opts).unwrap();
        assert_eq!(r.probability(&cfg(&[1, 1, 0])), rat_frac(1, 2));
        assert_eq!(r.probability(&cfg(&[0, 1, 1])), rat_frac(1, 2));
    }

    #[test]
    fn already_final_distribution() {
        let opts = SolveOptions::default();
        let c = cfg(&[1, 1, 1, 0]);
        let r = exact_absorption(&c, RobPolicy::LowestIndex, &opts).unwrap();
        assert_eq!(r.probability(&c), rat(1));
        assert_eq!(r.entries().len(), 1);
    }

    #[test]
    fn four_vertex_chain_distribution() {
        // brute-forced with an independent fraction solver
        let opts = SolveOptions::default();
        let r = exact_absorption(&cfg(&[3, 0, 0, 0]), RobPolicy::LowestIndex, &opts).unwrap();
        assert_eq!(r.probability(&cfg(&[1, 1, 0, 1])), rat_frac(2, 3));
        assert_eq!(r.probability(&cfg(&[1, 0, 1, 1])), rat_frac(1, 6));
        assert_eq!(r.probability(&cfg(&[1, 1, 1, 0])), rat_frac(1, 6));
        assert_eq!(r.total(), rat(1));

        let r = exact_absorption(&cfg(&[2, 1, 0, 0]), RobPolicy::LowestIndex, &opts).unwrap();
        assert_eq!(r.probability(&cfg(&[1, 1, 0, 1])), rat_frac(2, 3));
        assert_eq!(r.probability(&cfg(&[1, 1, 1, 0])), rat_frac(1, 3));
    }

    #[test]
    fn probabilities_nonnegative_and_sum_to_one() {
        let opts = SolveOptions::default();
        for counts in [vec![4, 0, 0, 0, 0], vec![2, 2, 0, 0, 0], vec![0, 3, 1, 0, 0]] {
            let r = exact_absorption(&cfg(&counts), RobPolicy::LowestIndex, &opts).unwrap();
            assert_eq!(r.total(), rat(1));
            assert!(r.entries().values().all(|p| p >= &rat(0)));
            assert!(r.entries().keys().all(is_final));
        }
    }

    #[test]
    fn harmonicity_at_robbed_vertex() {
        // p_empty(s) == (p_empty(s_L) + p_empty(s_R)) / 2 for the robbed vertex
        let opts = SolveOptions::default();
        let half = rat_frac(1, 2);
        for counts in [vec![3, 0, 0, 0], vec![2, 1, 0, 0], vec![0, 2, 2, 0, 0]] {
            let s = cfg(&counts);
            let v = RobPolicy::LowestIndex.choose(s.counts()).unwrap();
            for empty_vertex in 0..s.num_vertices() {
                let p = prob_vertex_empty(&s, empty_vertex, RobPolicy::LowestIndex, &opts).unwrap();
                let l = prob_vertex_empty(
                    &rob(&s, v, Direction::Left).unwrap(),
                    empty_vertex,
                    RobPolicy::LowestIndex,
                    &opts,
                )
                .unwrap();
                let r = prob_vertex_empty(
                    &rob(&s, v, Direction::Right).unwrap(),
                    empty_vertex,
                    RobPolicy::LowestIndex,
                    &opts,
                )
                .unwrap();
                assert_eq!(p, (l + r) * &half);
            }
        }
    }

    #[test]
    fn policy_invariance_small_cases() {
        let opts = SolveOptions::default();
        for counts in [vec![3, 0, 0, 0], vec![2, 2, 0, 0, 0], vec![0, 4, 0, 0, 0, 1, 0]] {
            let c = cfg(&counts);
            assert!(policy_invariance_check(
                &c,
                RobPolicy::LowestIndex,
                RobPolicy::HighestIndex,
                &opts
            )
            .unwrap());
            assert!(policy_invariance_check(
                &c,
                RobPolicy::LowestIndex,
                RobPolicy::Seeded(42),
                &opts
            )
            .unwrap());
        }
    }

    #[test]
    fn state_cap_enforced() {
        let opts = SolveOptions { max_states: 3 };
        assert!(matches!(
            exact_absorption(&cfg(&[3, 0, 0, 0, 0]), RobPolicy::LowestIndex, &opts),
            Err(Error::StateCapExceeded { .. })
        ));
    }

    #[test]
    fn simulation_is_deterministic() {
        let c = cfg(&[2, 0, 0]);
        let opts = SimOptions {
            seed: 7,
            trials: 2_000,
            ..SimOptions::default()
        };
        let a = simulate(&c, &opts).unwrap();
        let b = simulate(&c, &opts).unwrap();
        assert_eq!(a, b);
        // and independent of worker count
        let seq = simulate(
            &c,
            &SimOptions {
                workers: 1,
                ..opts.clone()
            },
        )
        .unwrap();
        assert_eq!(a, seq);
    }

    #[test]
    fn simulation_matches_exact_within_tolerance() {
        let c = cfg(&[2, 0, 0]);
        let exact = exact_absorption(&c, RobPolicy::LowestIndex, &SolveOptions::default()).unwrap();
        let sim = simulate(
            &c,
            &SimOptions {
                seed: 20_240_601,
                trials: 100_000,
                ..SimOptions::default()
            },
        )
        .unwrap();
        let p_exact = exact.prob_vertex_empty(2);
        let p = 0.5f64;
        assert_eq!(p_exact, rat_frac(1, 2));
        let freq = sim.freq_vertex_empty(2);
        let stderr = (p * (1.0 - p) / sim.trials as f64).sqrt();
        assert!((freq - p).abs() <= 4.0 * stderr, "freq {freq} vs {p}");
    }

    #[test]
    fn trivial_simulation_on_final_config() {
        let c = cfg(&[1, 1, 0]);
        let sim = simulate(
            &c,
            &SimOptions {
                trials: 10,
                ..SimOptions::default()
            },
        )
        .unwrap();
        assert_eq!(sim.counts.len(), 1);
        assert_eq!(sim.counts[&c], 10);
    }

    #[test]
    fn absorption_json_round_trip() {
        let opts = SolveOptions::default();
        let r = exact_absorption(&cfg(&[3, 0, 0, 0]), RobPolicy::LowestIndex, &opts).unwrap();
        let v = r.to_json();
        assert_eq!(AbsorptionResult::from_json(&v).unwrap(), r);
    }
}
