//! Top-level solver: connected components, degree-one reduction, block
//! splitting, per-block dispatch, and score recombination.

use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::brandes::brandes_weighted_threads;
use crate::decompose::{recombine, reduce_degree_one, split_blocks};
use crate::fen::{block_bc_detailed, BlockStats, FaultInjection};
use crate::graph::{connected_components, BCScores, Graph, WeightedGraph};
use crate::oracle::{oracle_bc, CapExceeded};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverChoice {
    /// The full decomposition pipeline (same as `Fen`).
    Auto,
    Brandes,
    Fen,
    Oracle,
}

impl SolverChoice {
    pub fn name(self) -> &'static str {
        match self {
            SolverChoice::Auto => "auto",
            SolverChoice::Brandes => "brandes",
            SolverChoice::Fen => "fen",
            SolverChoice::Oracle => "oracle",
        }
    }
}

impl FromStr for SolverChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<SolverChoice, String> {
        match s {
            "auto" => Ok(SolverChoice::Auto),
            "brandes" => Ok(SolverChoice::Brandes),
            "fen" => Ok(SolverChoice::Fen),
            "oracle" => Ok(SolverChoice::Oracle),
            other => Err(format!("unknown algorithm {:?} (expected auto|brandes|fen|oracle)", other)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Worker count for per-source and per-block loops. The default of 1 is
    /// the deterministic baseline.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions { threads: 1 }
    }
}

/// Wall time per pipeline phase plus the peak table footprint.
#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub algorithm: &'static str,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub reduce: Duration,
    pub split: Duration,
    pub tables: Duration,
    pub paths: Duration,
    pub postprocess: Duration,
    pub peak_table_bytes: usize,
}

/// Betweenness centrality of every vertex, ordered-pair convention, with all
/// pend weights one. Only the oracle choice can fail (vertex cap).
pub fn compute_bc(g: &Graph, choice: SolverChoice) -> Result<BCScores, CapExceeded> {
    compute_bc_opts(g, choice, &SolveOptions::default())
}

pub fn compute_bc_opts(
    g: &Graph,
    choice: SolverChoice,
    opts: &SolveOptions,
) -> Result<BCScores, CapExceeded> {
    Ok(compute_bc_report(g, choice, opts)?.0)
}

pub fn compute_bc_report(
    g: &Graph,
    choice: SolverChoice,
    opts: &SolveOptions,
) -> Result<(BCScores, RunReport), CapExceeded> {
    let wg = WeightedGraph::unit(g.clone());
    let (scores, report) = match choice {
        SolverChoice::Brandes => {
            let t = Instant::now();
            let scores = brandes_weighted_threads(&wg, opts.threads);
            let mut report = base_report(g, choice);
            report.postprocess = t.elapsed();
            (scores, report)
        }
        SolverChoice::Oracle => {
            let scores = oracle_bc(&wg)?.to_f64();
            (scores, base_report(g, choice))
        }
        SolverChoice::Auto | SolverChoice::Fen => {
            let (scores, _, report) = fen_weighted_detailed(&wg, FaultInjection::NONE, opts.threads);
            let mut report = report;
            report.algorithm = choice.name();
            (scores, report)
        }
    };
    Ok((scores, report))
}

/// Weighted entry point for exercising the decomposition machinery directly.
/// The oracle route panics above its vertex cap; it is a test tool.
pub fn compute_bc_weighted(wg: &WeightedGraph, choice: SolverChoice) -> BCScores {
    match choice {
        SolverChoice::Brandes => brandes_weighted_threads(wg, 1),
        SolverChoice::Oracle => oracle_bc(wg).expect("oracle vertex cap").to_f64(),
        SolverChoice::Auto | SolverChoice::Fen => {
            fen_weighted_detailed(wg, FaultInjection::NONE, 1).0
        }
    }
}

fn base_report(g: &Graph, choice: SolverChoice) -> RunReport {
    let c = connected_components(g).len();
    RunReport {
        algorithm: choice.name(),
        n: g.vertex_count(),
        m: g.edge_count(),
        k: g.edge_count() + c - g.vertex_count(),
        ..RunReport::default()
    }
}

/// Full pipeline on a weighted graph. Returns the scores, whether every
/// block passed the Inc audit, and the phase report.
pub(crate) fn fen_weighted_detailed(
    wg: &WeightedGraph,
    faults: FaultInjection,
    threads: usize,
) -> (BCScores, bool, RunReport) {
    let g = &wg.graph;
    let n = g.vertex_count();
    let mut report = base_report(g, SolverChoice::Fen);
    let mut scores = BCScores::zeros(n);
    let mut audit_ok = true;

    for comp in connected_components(g) {
        if comp.len() <= 1 {
            continue;
        }
        let comp_graph = g.induced(&comp);
        let comp_pend: Vec<u64> = comp.iter().map(|&v| wg.pend[v]).collect();
        let comp_wg = WeightedGraph::new(comp_graph, comp_pend);

        let t = Instant::now();
        let mut local = BCScores::zeros(comp.len());
        let red = reduce_degree_one(&comp_wg, &mut local);
        report.reduce += t.elapsed();

        if red.reduced.graph.vertex_count() >= 2 {
            let t = Instant::now();
            let blocks = split_blocks(&red.reduced);
            report.split += t.elapsed();

            let solved = solve_blocks(&blocks, faults, threads);
            let mut block_scores = Vec::with_capacity(blocks.len());
            for (s, stats) in solved {
                report.tables += stats.tables;
                report.paths += stats.paths;
                report.postprocess += stats.postprocess;
                report.peak_table_bytes = report.peak_table_bytes.max(stats.table_bytes);
                audit_ok &= stats.inc_audit_ok;
                block_scores.push(s);
            }
            let inner = recombine(&block_scores, &blocks, &red.reduced);
            for (local_id, &orig) in red.to_original.iter().enumerate() {
                local[orig] += inner[local_id];
            }
        }

        for (i, &v) in comp.iter().enumerate() {
            scores[v] += local[i];
        }
    }
    (scores, audit_ok, report)
}

fn solve_blocks(
    blocks: &[crate::decompose::Block],
    faults: FaultInjection,
    threads: usize,
) -> Vec<(BCScores, BlockStats)> {
    let threads = threads.max(1).min(blocks.len().max(1));
    if threads == 1 {
        return blocks.iter().map(|b| block_bc_detailed(&b.subgraph, faults)).collect();
    }
    let chunk = blocks.len().div_ceil(threads);
    let mut out = Vec::with_capacity(blocks.len());
    std::thread::scope(|scope| {
        let handles: Vec<_> = blocks
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|b| block_bc_detailed(&b.subgraph, faults)).collect::<Vec<_>>()))
            .collect();
        for h in handles {
            out.extend(h.join().unwrap());
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{fanned_path, pendant_triangles};
    use crate::oracle::{max_rel_err, max_rel_err_exact};

    #[test]
    fn p4_scores() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let s = compute_bc(&g, SolverChoice::Auto).unwrap();
        assert_eq!(s.0, vec![0.0, 4.0, 4.0, 0.0]);
    }

    #[test]
    fn pendant_triangles_match_oracle_exactly() {
        let g = pendant_triangles();
        let want = oracle_bc(&WeightedGraph::unit(g.clone())).unwrap();
        for choice in [SolverChoice::Fen, SolverChoice::Brandes] {
            let got = compute_bc(&g, choice).unwrap();
            assert!(max_rel_err_exact(&got, &want) <= 1e-12, "{:?}", choice);
        }
    }

    #[test]
    fn fanned_path_all_solvers_agree() {
        let g = fanned_path();
        let fen = compute_bc(&g, SolverChoice::Fen).unwrap();
        let brandes = compute_bc(&g, SolverChoice::Brandes).unwrap();
        let oracle = compute_bc(&g, SolverChoice::Oracle).unwrap();
        assert!(max_rel_err(&fen, &brandes) <= 1e-12);
        assert!(max_rel_err(&fen, &oracle) <= 1e-12);
    }

    #[test]
    fn isolated_vertices_and_small_components_score_zero() {
        let g = Graph::from_edges(6, [(1, 2), (3, 4), (4, 5), (3, 5)]);
        let s = compute_bc(&g, SolverChoice::Auto).unwrap();
        assert_eq!(s.0, vec![0.0; 6]);
        let empty = Graph::from_edges(0, []);
        assert!(compute_bc(&empty, SolverChoice::Auto).unwrap().is_empty());
    }

    #[test]
    fn disconnected_matches_oracle() {
        // one tree, one cycle-with-chord, one isolated vertex
        let g = Graph::from_edges(
            12,
            [(0, 1), (1, 2), (1, 3), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4), (4, 6), (9, 10)],
        );
        let want = oracle_bc(&WeightedGraph::unit(g.clone())).unwrap();
        let got = compute_bc(&g, SolverChoice::Fen).unwrap();
        assert!(max_rel_err_exact(&got, &want) <= 1e-9);
    }

    #[test]
    fn random_graphs_fen_equals_brandes_equals_oracle() {
        for seed in 0..40u64 {
            let n = 4 + (seed as usize * 3) % 30;
            let g = if seed % 2 == 0 {
                let max_extra = n * (n - 1) / 2 - (n - 1);
                crate::generate::tree_plus_k(n, ((seed as usize / 2) % 7).min(max_extra), seed).unwrap()
            } else {
                let m = (n - 1 + (seed as usize) % 10).min(n * (n - 1) / 2);
                crate::generate::gnm_connected(n, m, seed).unwrap()
            };
            let fen = compute_bc(&g, SolverChoice::Fen).unwrap();
            let brandes = compute_bc(&g, SolverChoice::Brandes).unwrap();
            let oracle = compute_bc(&g, SolverChoice::Oracle).unwrap();
            assert!(max_rel_err(&fen, &brandes) <= 1e-9, "seed {}", seed);
            assert!(max_rel_err(&fen, &oracle) <= 1e-9, "seed {}", seed);
        }
    }

    #[test]
    fn weighted_entry_point_agrees() {
        let g = crate::named::chorded_cycle(24, 4, 17);
        let mut rng = crate::generate::SplitMix64::new(3);
        let pend: Vec<u64> = (0..24).map(|_| rng.range(1, 5)).collect();
        let wg = WeightedGraph::new(g, pend);
        let fen = compute_bc_weighted(&wg, SolverChoice::Fen);
        let brandes = compute_bc_weighted(&wg, SolverChoice::Brandes);
        assert!(max_rel_err(&fen, &brandes) <= 1e-9);
    }

    #[test]
    fn threaded_pipeline_matches() {
        let g = crate::generate::tree_plus_k(300, 12, 99).unwrap();
        let a = compute_bc_opts(&g, SolverChoice::Fen, &SolveOptions { threads: 1 }).unwrap();
        let b = compute_bc_opts(&g, SolverChoice::Fen, &SolveOptions { threads: 4 }).unwrap();
        assert!(max_rel_err(&a, &b) <= 1e-12);
    }

    #[test]
    fn report_phases_cover_fen() {
        let g = crate::generate::tree_plus_k(500, 6, 5).unwrap();
        let (_, report) = compute_bc_report(&g, SolverChoice::Fen, &SolveOptions::default()).unwrap();
        assert_eq!(report.n, 500);
        assert_eq!(report.k, 6);
        assert!(report.peak_table_bytes > 0 || report.tables.is_zero());
    }

    #[test]
    fn determinism_repeated_runs_identical() {
        let g = crate::generate::gnm_connected(40, 52, 123).unwrap();
        let a = compute_bc(&g, SolverChoice::Fen).unwrap();
        let b = compute_bc(&g, SolverChoice::Fen).unwrap();
        assert_eq!(a.0, b.0);
    }
}
