//! Embedded property suite: oracle equivalence on random graphs, the
//! weighted block and cycle lemmas, and structural Inc audits. The CLI's
//! `selftest` command runs this; the test suite reruns it under fault
//! injection to prove each check has teeth.

use crate::brandes::brandes_weighted;
use crate::cycle::{cycle_bc, CycleInstance};
use crate::fen::{block_bc_detailed, FaultInjection};
use crate::generate::{cycle, gnm_connected, tree_plus_k, SplitMix64};
use crate::graph::{Graph, WeightedGraph};
use crate::named::{chorded_c8, chorded_cycle, fanned_path, pendant_triangles};
use crate::oracle::{max_rel_err, max_rel_err_exact, oracle_bc};
use crate::pipeline::fen_weighted_detailed;
use crate::{generate, named};

/// Environment variable consulted for the default seed.
pub const SEED_ENV: &str = "FENBC_SEED";

#[derive(Debug, Clone)]
pub struct SelftestConfig {
    /// Number of random cases per category.
    pub cases: usize,
    pub seed: u64,
    pub faults: FaultInjection,
}

impl Default for SelftestConfig {
    fn default() -> SelftestConfig {
        let seed = std::env::var(SEED_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0xfeedbc);
        SelftestConfig { cases: 100, seed, faults: FaultInjection::NONE }
    }
}

/// First failing check, with a verbatim reproducer.
#[derive(Debug, Clone)]
pub struct SelftestFailure {
    pub check: String,
    /// Edge list (one `u v` per line), plus a pend line for weighted cases.
    pub reproducer: String,
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub checks_run: usize,
    pub failure: Option<SelftestFailure>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

fn failure(check: &str, detail: String, wg: &WeightedGraph) -> SelftestFailure {
    SelftestFailure {
        check: format!("{}: {}", check, detail),
        reproducer: format!("{}# pend: {:?}\n", edge_list(&wg.graph), wg.pend),
    }
}

/// Runs every check, stopping at the first failure.
pub fn run_selftest(cfg: &SelftestConfig) -> SelftestReport {
    let mut checks_run = 0;

    // Fixed gadgets with shared endpoints, tie pairs, and two-path traffic.
    let gadgets: Vec<(&str, Graph)> = vec![
        ("theta-2-2-3", generate::theta(2, 2, 3).unwrap()),
        ("theta-2-2-8", generate::theta(2, 2, 8).unwrap()),
        ("theta-3-4-9", generate::theta(3, 4, 9).unwrap()),
        ("chorded-c8", chorded_c8()),
        ("pendant-triangles", pendant_triangles()),
        ("fanned-path", fanned_path()),
        ("petersen", named::petersen()),
    ];
    for (name, g) in &gadgets {
        let wg = WeightedGraph::unit(g.clone());
        checks_run += 1;
        if let Err(detail) = pipeline_vs_oracle(&wg, cfg.faults) {
            return SelftestReport { checks_run, failure: Some(failure(name, detail, &wg)) };
        }
    }

    // Random connected graphs against the exact oracle.
    let mut rng = SplitMix64::new(cfg.seed);
    for case in 0..cfg.cases {
        let n = 4 + rng.below(27) as usize;
        let g = if case % 2 == 0 {
            let max_extra = n * (n - 1) / 2 - (n - 1);
            tree_plus_k(n, (rng.below(7) as usize).min(max_extra), rng.next_u64()).unwrap()
        } else {
            let m = (n - 1 + rng.below(9) as usize).min(n * (n - 1) / 2);
            gnm_connected(n, m, rng.next_u64()).unwrap()
        };
        let wg = WeightedGraph::unit(g);
        checks_run += 1;
        if let Err(detail) = pipeline_vs_oracle(&wg, cfg.faults) {
            let name = format!("random-graph-{}", case);
            return SelftestReport { checks_run, failure: Some(failure(&name, detail, &wg)) };
        }
    }

    // Weighted biconnected blocks against the baseline solver.
    for case in 0..cfg.cases {
        let n = 4 + rng.below(40) as usize;
        let g = chorded_cycle(n, rng.below(8) as usize, rng.next_u64());
        let pend: Vec<u64> = (0..n).map(|_| rng.range(1, 5)).collect();
        let wg = WeightedGraph::new(g, pend);
        checks_run += 1;
        if let Err(detail) = block_vs_brandes(&wg, cfg.faults) {
            let name = format!("weighted-block-{}", case);
            return SelftestReport { checks_run, failure: Some(failure(&name, detail, &wg)) };
        }
    }

    // Weighted cycles against the baseline solver.
    for case in 0..cfg.cases.min(50) {
        let len = 3 + rng.below(200) as usize;
        let pend: Vec<u64> = (0..len).map(|_| rng.range(1, 9)).collect();
        let wg = WeightedGraph::new(cycle(len).unwrap(), pend.clone());
        let got = cycle_bc(&CycleInstance::new(pend).unwrap());
        let want = brandes_weighted(&wg);
        let err = max_rel_err(&got, &want);
        checks_run += 1;
        if err > 1e-12 {
            let name = format!("weighted-cycle-{}", case);
            let detail = format!("cycle rel err {:.3e}", err);
            return SelftestReport { checks_run, failure: Some(failure(&name, detail, &wg)) };
        }
    }

    SelftestReport { checks_run, failure: None }
}

fn pipeline_vs_oracle(wg: &WeightedGraph, faults: FaultInjection) -> Result<(), String> {
    let (got, audit_ok, _) = fen_weighted_detailed(wg, faults, 1);
    if !audit_ok {
        return Err("Inc table audit failed (update outside path-endpoint pairs)".into());
    }
    let want = oracle_bc(wg).map_err(|e| e.to_string())?;
    let err = max_rel_err_exact(&got, &want);
    if err <= 1e-9 {
        Ok(())
    } else {
        Err(format!("pipeline vs oracle rel err {:.3e}", err))
    }
}

fn block_vs_brandes(wg: &WeightedGraph, faults: FaultInjection) -> Result<(), String> {
    let (got, stats) = block_bc_detailed(wg, faults);
    if !stats.inc_audit_ok {
        return Err("Inc table audit failed (update outside path-endpoint pairs)".into());
    }
    let want = brandes_weighted(wg);
    let err = max_rel_err(&got, &want);
    if err <= 1e-9 {
        Ok(())
    } else {
        Err(format!("block vs brandes rel err {:.3e}", err))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_build_passes() {
        let cfg = SelftestConfig { cases: 20, seed: 1, faults: FaultInjection::NONE };
        let report = run_selftest(&cfg);
        assert!(report.passed(), "{:?}", report.failure);
        assert!(report.checks_run > 40);
    }

    #[test]
    fn each_fault_is_caught_with_reproducer() {
        let faults = [
            FaultInjection { flip_tie_denominator: true, ..FaultInjection::NONE },
            FaultInjection { drop_pair_doubling: true, ..FaultInjection::NONE },
            FaultInjection { skip_shared_endpoint_guard: true, ..FaultInjection::NONE },
        ];
        for f in faults {
            let cfg = SelftestConfig { cases: 20, seed: 1, faults: f };
            let report = run_selftest(&cfg);
            let failure = report.failure.unwrap_or_else(|| panic!("{:?} not caught", f));
            assert!(!failure.reproducer.is_empty());
        }
    }

    #[test]
    fn deterministic_reproducer_for_fixed_seed() {
        let f = FaultInjection { flip_tie_denominator: true, ..FaultInjection::NONE };
        let cfg = SelftestConfig { cases: 10, seed: 42, faults: f };
        let a = run_selftest(&cfg).failure.unwrap();
        let b = run_selftest(&cfg).failure.unwrap();
        assert_eq!(a.check, b.check);
        assert_eq!(a.reproducer, b.reproducer);
    }
}
