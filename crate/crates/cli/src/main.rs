//! `fenbc`: compute betweenness centrality scores from edge-list files,
//! benchmark the solvers on synthetic families, and run the embedded
//! self-test suite.
//!
//! Exit codes: 0 success, 1 self-test failure, 2 usage/input errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use fenbc::generate::{cycle, gnm_connected, theta, tree_plus_k};
use fenbc::graph::{build_graph, BCScores, BuildError, Graph};
use fenbc::oracle::max_rel_err;
use fenbc::pipeline::{compute_bc_report, RunReport, SolveOptions, SolverChoice};
use fenbc::selftest::{run_selftest, SelftestConfig, SEED_ENV};

#[derive(Parser)]
#[command(name = "fenbc", version, about = "Betweenness centrality for tree-like sparse graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute scores for an edge-list file and write them as TSV.
    Compute {
        /// Edge list: one `u v` pair per line, `#` comments, blank lines ok.
        #[arg(long)]
        input: PathBuf,
        /// auto | brandes | fen | oracle
        #[arg(long, default_value = "auto")]
        algo: String,
        /// Output TSV path (`label<TAB>score`, 12 significant digits).
        #[arg(long)]
        output: PathBuf,
        /// Worker threads (1 = deterministic baseline).
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Print per-phase timings to stderr.
        #[arg(long)]
        report: bool,
    },
    /// Time solvers on a synthetic family grid and write a CSV.
    Bench {
        /// tree_plus_k | cycle | gnm_connected | theta
        #[arg(long)]
        family: String,
        /// Vertex counts, comma separated.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Feedback edge number (tree_plus_k and gnm_connected).
        #[arg(long, default_value_t = 8)]
        k: usize,
        /// Arm lengths for the theta family, e.g. 2,2,3.
        #[arg(long, value_delimiter = ',')]
        arms: Option<Vec<usize>>,
        /// Solvers to time, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "fen")]
        algos: Vec<String>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// Output CSV path.
        #[arg(long)]
        csv: PathBuf,
        /// Generator seed; defaults to $FENBC_SEED or a fixed constant.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Run the embedded oracle-equivalence property suite.
    Selftest {
        /// Random cases per category.
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    match Cli::parse().cmd {
        Cmd::Compute { input, algo, output, threads, report } => {
            cmd_compute(&input, &algo, &output, threads, report)
        }
        Cmd::Bench { family, n, k, arms, algos, reps, csv, seed, threads } => {
            cmd_bench(&family, &n, k, arms.as_deref(), &algos, reps, &csv, seed, threads)
        }
        Cmd::Selftest { cases, seed } => cmd_selftest(cases, seed),
    }
}

fn env_seed() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(0xbc_5eed)
}

fn fail(msg: impl std::fmt::Display) -> i32 {
    eprintln!("fenbc: error: {}", msg);
    2
}

fn cmd_compute(input: &PathBuf, algo: &str, output: &PathBuf, threads: usize, report: bool) -> i32 {
    let algo: SolverChoice = match algo.parse() {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let text = match fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return fail(format!("cannot read {}: {}", input.display(), e)),
    };

    // token pairs with their 1-based source lines
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (None, _, _) => {}
            (Some(u), Some(v), None) => {
                pairs.push((u.to_string(), v.to_string()));
                lines.push(idx + 1);
            }
            _ => return fail(format!("malformed line {}: expected two tokens", idx + 1)),
        }
    }

    let built = match build_graph(&pairs) {
        Ok(b) => b,
        Err(BuildError::SelfLoop { pair_index, token }) => {
            return fail(format!("self-loop at line {} (token {:?})", lines[pair_index], token));
        }
    };
    if built.duplicate_edges > 0 {
        eprintln!("fenbc: warning: collapsed {} duplicate edge(s)", built.duplicate_edges);
    }

    let opts = SolveOptions { threads };
    let (scores, run_report) = match compute_bc_report(&built.graph, algo, &opts) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    if report {
        print_report(&run_report);
    }

    let mut out = String::new();
    for v in 0..built.graph.vertex_count() {
        out.push_str(built.graph.label(v).unwrap_or(""));
        out.push('\t');
        out.push_str(&format_sig(scores[v], 12));
        out.push('\n');
    }
    if let Err(e) = fs::write(output, out) {
        return fail(format!("cannot write {}: {}", output.display(), e));
    }
    0
}

fn print_report(r: &RunReport) {
    eprintln!(
        "fenbc: {} n={} m={} k={} reduce={:.6}s split={:.6}s tables={:.6}s paths={:.6}s postprocess={:.6}s peak_table_bytes={}",
        r.algorithm,
        r.n,
        r.m,
        r.k,
        r.reduce.as_secs_f64(),
        r.split.as_secs_f64(),
        r.tables.as_secs_f64(),
        r.paths.as_secs_f64(),
        r.postprocess.as_secs_f64(),
        r.peak_table_bytes
    );
}

/// Shortest decimal form with up to `sig` significant digits.
fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    let mut s = format!("{:.*}", decimals, x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    family: &str,
    ns: &[usize],
    k: usize,
    arms: Option<&[usize]>,
    algos: &[String],
    reps: usize,
    csv: &PathBuf,
    seed: Option<u64>,
    threads: usize,
) -> i32 {
    if reps == 0 {
        return fail("reps must be at least 1 (nothing to measure)");
    }
    let parsed: Result<Vec<SolverChoice>, String> = algos.iter().map(|a| a.parse()).collect();
    let algos = match parsed {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let seed = seed.unwrap_or_else(env_seed);
    let grid: Vec<usize> = if family == "theta" { vec![0] } else { ns.to_vec() };
    if grid.is_empty() {
        return fail("need at least one grid point (--n or --arms)");
    }

    let mut rows = String::from("family,n,m,k,algo,rep,seconds,max_rel_err_vs_brandes\n");
    for &n in &grid {
        let graph = match make_family(family, n, k, arms, seed) {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        let opts = SolveOptions { threads };
        // one solve per (algo, rep); scores are deterministic across reps
        let mut timings: Vec<(SolverChoice, Vec<f64>, BCScores)> = Vec::new();
        for &algo in &algos {
            let mut times = Vec::with_capacity(reps);
            let mut scores = None;
            for _ in 0..reps {
                let t = Instant::now();
                let (s, _) = match compute_bc_report(&graph, algo, &opts) {
                    Ok(r) => r,
                    Err(e) => return fail(e),
                };
                times.push(t.elapsed().as_secs_f64());
                scores = Some(s);
            }
            timings.push((algo, times, scores.unwrap()));
        }
        let reference = timings
            .iter()
            .find(|(a, _, _)| matches!(a, SolverChoice::Brandes))
            .map(|(_, _, s)| s.clone());
        for (algo, times, scores) in &timings {
            for (rep, secs) in times.iter().enumerate() {
                let err = match &reference {
                    Some(want) => format!("{:e}", max_rel_err(scores, want)),
                    None => String::new(),
                };
                rows.push_str(&format!(
                    "{},{},{},{},{},{},{:.6},{}\n",
                    family,
                    graph.vertex_count(),
                    graph.edge_count(),
                    k_of(&graph),
                    algo.name(),
                    rep,
                    secs,
                    err
                ));
            }
        }
    }
    match fs::File::create(csv).and_then(|mut f| f.write_all(rows.as_bytes())) {
        Ok(()) => 0,
        Err(e) => fail(format!("cannot write {}: {}", csv.display(), e)),
    }
}

fn k_of(g: &Graph) -> usize {
    let c = fenbc::graph::connected_components(g).len();
    g.edge_count() + c - g.vertex_count()
}

fn make_family(
    family: &str,
    n: usize,
    k: usize,
    arms: Option<&[usize]>,
    seed: u64,
) -> Result<Graph, String> {
    match family {
        "tree_plus_k" => tree_plus_k(n, k, seed).map_err(|e| e.to_string()),
        "cycle" => cycle(n).map_err(|e| e.to_string()),
        // m chosen so the feedback edge number equals k
        "gnm_connected" => gnm_connected(n, n - 1 + k, seed).map_err(|e| e.to_string()),
        "theta" => match arms {
            Some([a, b, c]) => theta(*a, *b, *c).map_err(|e| e.to_string()),
            _ => Err("theta needs --arms A,B,C".to_string()),
        },
        other => Err(format!("unknown family {:?}", other)),
    }
}

fn cmd_selftest(cases: usize, seed: Option<u64>) -> i32 {
    let cfg = SelftestConfig {
        cases,
        seed: seed.unwrap_or_else(env_seed),
        ..SelftestConfig::default()
    };
    let report = run_selftest(&cfg);
    match report.failure {
        None => {
            println!("selftest: all {} checks passed", report.checks_run);
            0
        }
        Some(f) => {
            println!("selftest: FAILED after {} checks", report.checks_run);
            println!("check: {}", f.check);
            println!("reproducer edge list:\n{}", f.reproducer);
            1
        }
    }
}
