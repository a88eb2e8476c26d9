//! Deterministic synthetic graph families for tests and benchmarks.
//!
//! All randomness comes from [`SplitMix64`] with the standard constants, so a
//! `FamilySpec` produces the identical edge list on every platform and run.

use std::collections::HashSet;
use std::fmt;

use crate::graph::{connected_components, Graph};
#[cfg(test)]
use crate::graph::feedback_edge_number;

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed constants, documented so that
/// benchmark inputs can be regenerated outside this crate.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` by rejection sampling.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform value in `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}

/// Parameters of one deterministic graph family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Uniform random labelled tree plus `k` extra non-tree edges.
    TreePlusK { n: usize, k: usize, seed: u64 },
    /// The cycle `C_n`.
    Cycle { n: usize },
    /// Rejection-sampled connected `G(n, m)`.
    GnmConnected { n: usize, m: usize, seed: u64 },
    /// Two hubs joined by three internally disjoint paths with `a`, `b`, `c`
    /// edges respectively.
    Theta { a: usize, b: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenError(pub String);

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "infeasible family parameters: {}", self.0)
    }
}

impl std::error::Error for GenError {}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GenError> {
    match *spec {
        FamilySpec::TreePlusK { n, k, seed } => tree_plus_k(n, k, seed),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::GnmConnected { n, m, seed } => gnm_connected(n, m, seed),
        FamilySpec::Theta { a, b, c } => theta(a, b, c),
    }
}

/// Uniform random labelled tree on `n` vertices (decoded from a uniform
/// length-`n-2` sequence), plus `k` uniformly sampled extra edges.
/// The result is connected with feedback edge number exactly `k`.
pub fn tree_plus_k(n: usize, k: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError("tree needs at least one vertex".into()));
    }
    let max_extra = n * (n - 1) / 2 - (n - 1);
    if k > max_extra {
        return Err(GenError(format!("k = {} exceeds {} possible extra edges", k, max_extra)));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    while edges.len() < n - 1 + k {
        let u = rng.below(n as u64) as usize;
        let v = rng.below(n as u64) as usize;
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if present.insert(e) {
            edges.push(e);
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Decodes a uniform random Pruefer sequence into a labelled tree.
fn random_tree_edges(n: usize, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    if n == 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    let mut degree = vec![1u32; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &v in &seq {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            // v became the smallest leaf; consume it before advancing ptr
            leaf = v;
        } else {
            ptr = (ptr + 1..n).find(|&u| degree[u] == 1).unwrap();
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    edges
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError(format!("cycle needs n >= 3, got {}", n)));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))))
}

/// Connected `G(n, m)` by rejection: sample `m` distinct edges uniformly,
/// retry until the result is connected.
pub fn gnm_connected(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 || m < n.saturating_sub(1) || m > n * (n - 1) / 2 {
        return Err(GenError(format!("no connected graph with n = {}, m = {}", n, m)));
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..100_000 {
        let mut present = HashSet::with_capacity(m);
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let u = rng.below(n as u64) as usize;
            let v = rng.below(n as u64) as usize;
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if present.insert(e) {
                edges.push(e);
            }
        }
        let g = Graph::from_edges(n, edges);
        if connected_components(&g).len() == 1 {
            return Ok(g);
        }
    }
    Err(GenError(format!("no connected G({}, {}) found within the attempt budget", n, m)))
}

/// Theta graph: hubs `0` and `1` joined by three internally disjoint paths of
/// `a`, `b`, `c` edges. At most one arm may be a single edge (simplicity).
pub fn theta(a: usize, b: usize, c: usize) -> Result<Graph, GenError> {
    let arms = [a, b, c];
    if arms.iter().any(|&x| x == 0) || arms.iter().filter(|&&x| x == 1).count() > 1 {
        return Err(GenError(format!("theta arms {:?} would not be simple", arms)));
    }
    let n = a + b + c - 1;
    let mut edges = Vec::with_capacity(a + b + c);
    let mut next = 2;
    for &len in &arms {
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(Graph::from_edges(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_counts() {
        let g = theta(2, 2, 3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(feedback_edge_number(&g).0, 2);
        assert!(theta(1, 1, 2).is_err());
    }

    #[test]
    fn cycle_counts() {
        let g = cycle(5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(feedback_edge_number(&g).0, 1);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn tree_plus_k_is_connected_with_exact_k() {
        for seed in 0..40u64 {
            let n = 5 + (seed as usize * 7) % 60;
            let k = (seed as usize) % 6;
            let g = tree_plus_k(n, k, seed).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert_eq!(connected_components(&g).len(), 1, "seed {}", seed);
            assert_eq!(feedback_edge_number(&g).0, k, "seed {}", seed);
        }
        assert_eq!(tree_plus_k(100, 0, 1).unwrap().edge_count(), 99);
        assert!(tree_plus_k(3, 100, 0).is_err());
    }

    #[test]
    fn seed_determinism() {
        let a = tree_plus_k(50, 4, 12345).unwrap();
        let b = tree_plus_k(50, 4, 12345).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = gnm_connected(30, 40, 7).unwrap();
        let d = gnm_connected(30, 40, 7).unwrap();
        assert_eq!(c.edges().collect::<Vec<_>>(), d.edges().collect::<Vec<_>>());
    }

    #[test]
    fn gnm_connected_counts() {
        let g = gnm_connected(20, 26, 99).unwrap();
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(g.edge_count(), 26);
        assert_eq!(connected_components(&g).len(), 1);
        assert!(gnm_connected(10, 5, 0).is_err());
    }
}
