//! The `divsym` command line: JSON files in, JSON results on stdout, a
//! reproducibility manifest on stderr.
//!
//! Results go to stdout and are byte-identical for identical flags (seeds
//! included); the manifest carries the wall-clock duration and therefore
//! lives on stderr. Exit codes: 0 success, 2 input error, 3 precondition
//! violation, 4 cap exceeded, 5 verification failure.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::divsym::{ds_constant, DsOptions};
use crate::error::{Error, Result};
use crate::graph::{validate_tree, Graph};
use crate::poly::{Point, Polynomial};
use crate::rational::{parse_rational, to_string_pair};
use crate::sandpile::{
    exact_absorption, simulate, CoinConfig, RobPolicy, SimOptions, SolveOptions,
};
use crate::tree_formula::{
    acceptable_count_bruteforce, acceptable_count_fast, classify_edges, WeightAssignment,
};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "divsym", version, about = "Exact divided symmetrization, tree counting formulas, and the coin-robbing process")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Divided symmetrization of a polynomial over a graph.
    Ds(DsArgs),
    /// Sign and acceptable-permutation count of a weighted tree.
    Tree(TreeArgs),
    /// The coin-robbing process on a cycle.
    Sandpile(SandpileArgs),
    /// Batch identity checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct DsArgs {
    /// Graph JSON file: {"format":1,"m":3,"edges":[[0,1],[1,2]]}
    #[arg(long)]
    graph: PathBuf,
    /// Polynomial JSON file: {"format":1,"m":3,"terms":[{"coef":["1","1"],"exp":[2,0,0]}]}
    #[arg(long)]
    poly: PathBuf,
    /// Evaluation point as comma-separated rationals, e.g. "1,2,7/2"
    #[arg(long)]
    point: Option<String>,
    /// Re-evaluate at a second generic point and fail on mismatch
    #[arg(long)]
    verify_point: bool,
    /// Maximum variable count (the sum has m! terms)
    #[arg(long, default_value_t = 10)]
    max_m: usize,
    /// Worker threads; 0 = automatic
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args, Debug)]
struct TreeArgs {
    /// Tree JSON file (graph format; must be connected and acyclic)
    #[arg(long)]
    tree: PathBuf,
    /// Weights JSON file: {"format":1,"w":[1,-1,-1]}
    #[arg(long)]
    weights: PathBuf,
    #[arg(long, value_enum, default_value_t = CountMethod::Fast)]
    method: CountMethod,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CountMethod {
    Brute,
    Fast,
    Both,
}

#[derive(Args, Debug)]
struct SandpileArgs {
    #[command(subcommand)]
    mode: SandpileMode,
}

#[derive(Subcommand, Debug)]
enum SandpileMode {
    /// Exact absorption distribution by rational linear solve.
    Solve(SolveArgs),
    /// Seeded Monte Carlo estimate.
    Simulate(SimulateArgs),
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Coin configuration JSON file: {"format":1,"counts":[2,0,0]}
    #[arg(long)]
    config: PathBuf,
    /// lowest | highest | seeded:<u64>
    #[arg(long, default_value = "lowest")]
    policy: String,
    #[arg(long, default_value_t = 100_000)]
    max_states: usize,
    /// Also report the marginal probability that this vertex ends empty
    #[arg(long)]
    vertex: Option<usize>,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value = "lowest")]
    policy: String,
    /// Per-trial step budget
    #[arg(long, default_value_t = 10_000_000)]
    step_cap: u64,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long)]
    vertex: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Which identity batch to run
    #[arg(value_enum)]
    check: VerifyCheck,
    /// Size parameter (maximum or exact depending on the check)
    #[arg(long)]
    n: Option<u32>,
    /// Number of designated empty vertices for the cycle check
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Number of randomized instances
    #[arg(long, default_value_t = 25)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    max_m: usize,
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum VerifyCheck {
    Lemma2,
    Eq2,
    Postnikov,
    #[value(name = "q-relations")]
    QRelations,
    Cycle,
    Lemma1,
    Eq1,
    Engine,
}

/// Everything needed to reproduce a run, emitted on stderr with every result.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunManifest {
    pub format: u32,
    pub command: String,
    pub inputs: serde_json::Value,
    pub seed: Option<u64>,
    pub caps: Caps,
    pub artifact_version: String,
    pub duration_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct Caps {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_states: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step_cap: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
}

struct CmdOutput {
    result: serde_json::Value,
    command: String,
    inputs: serde_json::Value,
    seed: Option<u64>,
    caps: Caps,
    exit: i32,
}

fn read_json(path: &PathBuf) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

fn parse_point(s: &str) -> Result<Point> {
    let coords = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    Ok(Point(coords))
}

fn parse_policy(s: &str) -> Result<RobPolicy> {
    match s {
        "lowest" => Ok(RobPolicy::LowestIndex),
        "highest" => Ok(RobPolicy::HighestIndex),
        _ => match s.strip_prefix("seeded:") {
            Some(seed) => seed
                .parse::<u64>()
                .map(RobPolicy::Seeded)
                .map_err(|e| Error::Json(format!("bad policy seed {seed:?}: {e}"))),
            None => Err(Error::Json(format!(
                "unknown policy {s:?}; use lowest, highest, or seeded:<u64>"
            ))),
        },
    }
}

fn rational_json(r: &crate::rational::Rational) -> serde_json::Value {
    let (n, d) = to_string_pair(r);
    serde_json::json!([n, d])
}

fn run_ds(args: DsArgs) -> Result<CmdOutput> {
    let graph_json = read_json(&args.graph)?;
    let poly_json = read_json(&args.poly)?;
    let g = Graph::from_json(&graph_json)?;
    let f = Polynomial::from_json(&poly_json)?;
    let point = args.point.as_deref().map(parse_point).transpose()?;
    let opts = DsOptions {
        point: point.clone(),
        verify_point: args.verify_point,
        max_m: args.max_m,
        workers: args.workers,
    };
    let value = ds_constant(&f, &g, &opts)?;
    Ok(CmdOutput {
        result: serde_json::json!({
            "format": 1,
            "value": rational_json(&value),
        }),
        command: "ds".into(),
        inputs: serde_json::json!({
            "graph": graph_json,
            "poly": poly_json,
            "point": args.point,
            "verify_point": args.verify_point,
            "workers": args.workers,
        }),
        seed: None,
        caps: Caps {
            max_m: Some(args.max_m),
            ..Caps::default()
        },
        exit: 0,
    })
}

fn run_tree(args: TreeArgs) -> Result<CmdOutput> {
    let tree_json = read_json(&args.tree)?;
    let weights_json = read_json(&args.weights)?;
    let tree = validate_tree(Graph::from_json(&tree_json)?)?;
    let weights = WeightAssignment::from_json(&weights_json)?;
    let cls = classify_edges(&tree, &weights)?;

    let count = match args.method {
        CountMethod::Brute => acceptable_count_bruteforce(&tree, &cls),
        CountMethod::Fast => acceptable_count_fast(&tree, &cls),
        CountMethod::Both => {
            let brute = acceptable_count_bruteforce(&tree, &cls);
            let fast = acceptable_count_fast(&tree, &cls);
            if brute != fast {
                return Err(Error::VerificationFailed(format!(
                    "brute-force count {brute} disagrees with the dynamic program {fast}"
                )));
            }
            fast
        }
    };
    let tau = num_bigint::BigInt::from(count.clone()) * cls.sign();
    Ok(CmdOutput {
        result: serde_json::json!({
            "format": 1,
            "sign": cls.sign(),
            "count": count.to_string(),
            "tau": tau.to_string(),
        }),
        command: "tree".into(),
        inputs: serde_json::json!({
            "tree": tree_json,
            "weights": weights_json,
            "method": format!("{:?}", args.method).to_lowercase(),
        }),
        seed: None,
        caps: Caps::default(),
        exit: 0,
    })
}

fn run_sandpile(args: SandpileArgs) -> Result<CmdOutput> {
    match args.mode {
        SandpileMode::Solve(a) => {
            let config_json = read_json(&a.config)?;
            let config = CoinConfig::from_json(&config_json)?;
            let policy = parse_policy(&a.policy)?;
            let opts = SolveOptions {
                max_states: a.max_states,
            };
            let dist = exact_absorption(&config, policy, &opts)?;
            if let Some(v) = a.vertex {
                if v >= config.num_vertices() {
                    return Err(Error::InvalidVertex {
                        vertex: v,
                        m: config.num_vertices(),
                    });
                }
            }
            let mut result = serde_json::json!({
                "format": 1,
                "result": dist.to_json(),
            });
            if let Some(v) = a.vertex {
                result["vertex_empty"] = serde_json::json!({
                    "vertex": v,
                    "prob": rational_json(&dist.prob_vertex_empty(v)),
                });
            }
            Ok(CmdOutput {
                result,
                command: "sandpile solve".into(),
                inputs: serde_json::json!({
                    "config": config_json,
                    "policy": a.policy,
                    "vertex": a.vertex,
                }),
                seed: None,
                caps: Caps {
                    max_states: Some(a.max_states),
                    ..Caps::default()
                },
                exit: 0,
            })
        }
        SandpileMode::Simulate(a) => {
            let config_json = read_json(&a.config)?;
            let config = CoinConfig::from_json(&config_json)?;
            let policy = parse_policy(&a.policy)?;
            let opts = SimOptions {
                seed: a.seed,
                trials: a.trials,
                policy,
                step_cap: a.step_cap,
                workers: a.workers,
            };
            if let Some(v) = a.vertex {
                if v >= config.num_vertices() {
                    return Err(Error::InvalidVertex {
                        vertex: v,
                        m: config.num_vertices(),
                    });
                }
            }
            let sim = simulate(&config, &opts)?;
            let mut result = serde_json::json!({
                "format": 1,
                "result": sim.to_json(),
            });
            if let Some(v) = a.vertex {
                let freq = sim.freq_vertex_empty(v);
                let stderr = (freq * (1.0 - freq) / sim.trials as f64).sqrt();
                result["vertex_empty"] = serde_json::json!({
                    "vertex": v,
                    "freq": freq,
                    "stderr": stderr,
                });
            }
            Ok(CmdOutput {
                result,
                command: "sandpile simulate".into(),
                inputs: serde_json::json!({
                    "config": config_json,
                    "policy": a.policy,
                    "vertex": a.vertex,
                }),
                seed: Some(a.seed),
                caps: Caps {
                    step_cap: Some(a.step_cap),
                    trials: Some(a.trials),
                    ..Caps::default()
                },
                exit: 0,
            })
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<CmdOutput> {
    let opts = DsOptions {
        workers: args.workers,
        max_m: args.max_m.max(10),
        ..DsOptions::default()
    };
    let report = match args.check {
        VerifyCheck::Lemma2 => verify::lemma2(args.n.unwrap_or(6) as usize, &opts)?,
        VerifyCheck::Eq2 => verify::eq2(args.n.unwrap_or(6) as usize, &opts)?,
        VerifyCheck::Postnikov => verify::postnikov(args.n.unwrap_or(4), &opts)?,
        VerifyCheck::QRelations => verify::q_relations(args.n.unwrap_or(4), &opts)?,
        VerifyCheck::Cycle => verify::cycle(
            args.n.unwrap_or(2),
            args.d,
            &opts,
            &SolveOptions::default(),
        )?,
        VerifyCheck::Lemma1 => verify::lemma1(args.count, args.seed, args.max_m, &opts)?,
        VerifyCheck::Eq1 => verify::eq1(args.count, args.seed, args.max_m, &opts)?,
        VerifyCheck::Engine => verify::engine(args.count, args.seed, args.max_m.min(5), &opts)?,
    };
    let pass = report.pass();
    Ok(CmdOutput {
        result: serde_json::json!({
            "format": 1,
            "check": report.check,
            "cases": report.cases,
            "pass": pass,
            "failures": report.failures,
        }),
        command: "verify".into(),
        inputs: serde_json::json!({
            "check": format!("{:?}", args.check).to_lowercase(),
            "n": args.n,
            "d": args.d,
            "count": args.count,
            "max_m": args.max_m,
        }),
        seed: Some(args.seed),
        caps: Caps {
            max_m: Some(args.max_m),
            ..Caps::default()
        },
        exit: if pass { 0 } else { 5 },
    })
}

fn run(cli: Cli) -> Result<CmdOutput> {
    match cli.command {
        Command::Ds(args) => run_ds(args),
        Command::Tree(args) => run_tree(args),
        Command::Sandpile(args) => run_sandpile(args),
        Command::Verify(args) => run_verify(args),
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli) {
        Ok(out) => {
            let manifest = RunManifest {
                format: 1,
                command: out.command,
                inputs: out.inputs,
                seed: out.seed,
                caps: out.caps,
                artifact_version: env!("CARGO_PKG_VERSION").to_string(),
                duration_ms: started.elapsed().as_millis() as u64,
            };
            println!(
                "{}",
                serde_json::to_string(&out.result).expect("result serializes")
            );
            eprintln!(
                "{}",
                serde_json::to_string(&manifest).expect("manifest serializes")
            );
            out.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.category().exit_code()
        }
    }
}
