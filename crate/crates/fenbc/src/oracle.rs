//! Brute-force reference solver: all-pairs BFS with big-integer path counts
//! and exact rational dependency ratios.
//!
//! Every fast-path solver in this crate is tested against this module, so it
//! stays deliberately literal: evaluate the weighted betweenness definition
//! pair by pair in exact arithmetic.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::graph::{BCScores, Graph, VertexId, WeightedGraph};

/// Default vertex cap; the oracle is a test tool, not a production path.
pub const DEFAULT_ORACLE_CAP: usize = 200;

/// Per-vertex exact rational betweenness values.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactScores(pub Vec<BigRational>);

impl ExactScores {
    pub fn to_f64(&self) -> BCScores {
        BCScores(self.0.iter().map(|r| r.to_f64().unwrap()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapExceeded {
    pub n: usize,
    pub cap: usize,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "oracle refuses graphs with {} > {} vertices", self.n, self.cap)
    }
}

impl std::error::Error for CapExceeded {}

/// BFS distances and exact shortest-path counts from `s`.
/// `dist` is `usize::MAX` for unreachable vertices (where `sigma` is zero).
pub fn exact_sssp(g: &Graph, s: VertexId) -> (Vec<usize>, Vec<BigUint>) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![BigUint::zero(); n];
    dist[s] = 0;
    sigma[s] = BigUint::one();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(s);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                let add = sigma[v].clone();
                sigma[w] += add;
            }
        }
    }
    (dist, sigma)
}

struct AllPairs {
    dist: Vec<Vec<usize>>,
    sigma: Vec<Vec<BigUint>>,
}

fn all_pairs(g: &Graph) -> AllPairs {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    for s in 0..n {
        let (d, sg) = exact_sssp(g, s);
        dist.push(d);
        sigma.push(sg);
    }
    AllPairs { dist, sigma }
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact weighted betweenness centrality over ordered vertex pairs.
///
/// For every ordered connected pair `(s, t)` and every vertex `v` with
/// `d(s,v) + d(v,t) = d(s,t)` and `v != s, t`, adds
/// `pend[s] * pend[t] * sigma_sv * sigma_vt / sigma_st`.
pub fn oracle_bc(wg: &WeightedGraph) -> Result<ExactScores, CapExceeded> {
    oracle_bc_capped(wg, DEFAULT_ORACLE_CAP)
}

pub fn oracle_bc_capped(wg: &WeightedGraph, cap: usize) -> Result<ExactScores, CapExceeded> {
    let g = &wg.graph;
    let n = g.vertex_count();
    if n > cap {
        return Err(CapExceeded { n, cap });
    }
    let ap = all_pairs(g);
    let mut scores = vec![BigRational::zero(); n];
    // gamma(s, t, v) = gamma(t, s, v): evaluate unordered pairs and double.
    for s in 0..n {
        for t in (s + 1)..n {
            if ap.dist[s][t] == usize::MAX {
                continue;
            }
            let pp = BigUint::from(wg.pend[s]) * BigUint::from(wg.pend[t]) * 2u32;
            let d_st = ap.dist[s][t];
            for v in 0..n {
                if v == s || v == t || ap.dist[s][v] == usize::MAX {
                    continue;
                }
                if ap.dist[s][v] + ap.dist[t][v] == d_st {
                    let dep = &ap.sigma[s][v] * &ap.sigma[t][v];
                    scores[v] += ratio(&pp * dep, ap.sigma[s][t].clone());
                }
            }
        }
    }
    Ok(ExactScores(scores))
}

/// Exact per-vertex ratios `sigma_st(v) / sigma_st` for one ordered pair.
/// Returns the all-zero vector with `connected = false` for unreachable pairs.
pub fn oracle_pair_dependency(
    wg: &WeightedGraph,
    s: VertexId,
    t: VertexId,
) -> (Vec<BigRational>, bool) {
    assert_ne!(s, t);
    let g = &wg.graph;
    let n = g.vertex_count();
    let (ds, sigma_s) = exact_sssp(g, s);
    let (dt, sigma_t) = exact_sssp(g, t);
    let mut out = vec![BigRational::zero(); n];
    if ds[t] == usize::MAX {
        return (out, false);
    }
    for v in 0..n {
        if v == s || v == t || ds[v] == usize::MAX {
            continue;
        }
        if ds[v] + dt[v] == ds[t] {
            out[v] = ratio(&sigma_s[v] * &sigma_t[v], sigma_s[t].clone());
        }
    }
    (out, true)
}

/// Maximum `|a - b| / max(1, |b|)` over all vertices; the comparison form
/// used throughout the test suites.
pub fn max_rel_err(got: &BCScores, want: &BCScores) -> f64 {
    assert_eq!(got.len(), want.len());
    got.0
        .iter()
        .zip(&want.0)
        .map(|(a, b)| (a - b).abs() / b.abs().max(1.0))
        .fold(0.0, f64::max)
}

pub fn max_rel_err_exact(got: &BCScores, want: &ExactScores) -> f64 {
    max_rel_err(got, &want.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_components;

    fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        WeightedGraph::unit(Graph::from_edges(n, edges.iter().copied()))
    }

    fn as_f64(s: &ExactScores) -> Vec<f64> {
        s.to_f64().0
    }

    #[test]
    fn p3_scores() {
        let wg = unit(3, &[(0, 1), (1, 2)]);
        assert_eq!(as_f64(&oracle_bc(&wg).unwrap()), vec![0.0, 2.0, 0.0]);
    }

    #[test]
    fn c4_scores() {
        let wg = unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(as_f64(&oracle_bc(&wg).unwrap()), vec![1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn star_center() {
        let wg = unit(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(as_f64(&oracle_bc(&wg).unwrap()), vec![6.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn cap_refusal() {
        let wg = unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(oracle_bc_capped(&wg, 4).is_err());
    }

    #[test]
    fn pair_dependency_examples() {
        let c4 = unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let (dep, connected) = oracle_pair_dependency(&c4, 1, 3);
        assert!(connected);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(dep[0], half);
        assert_eq!(dep[2], half);

        let p3 = unit(3, &[(0, 1), (1, 2)]);
        let (dep, _) = oracle_pair_dependency(&p3, 0, 2);
        assert_eq!(dep[1], BigRational::one());

        let k4 = unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let (dep, connected) = oracle_pair_dependency(&k4, 0, 1);
        assert!(connected);
        assert!(dep.iter().all(|r| r.is_zero()));

        let split = unit(4, &[(0, 1), (2, 3)]);
        let (dep, connected) = oracle_pair_dependency(&split, 0, 2);
        assert!(!connected);
        assert!(dep.iter().all(|r| r.is_zero()));
    }

    #[test]
    fn dependency_sum_is_distance_minus_one() {
        // sum_v sigma_st(v)/sigma_st = d(s,t) - 1 for connected pairs
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 3)]);
        let wg = WeightedGraph::unit(g);
        let ap = all_pairs(&wg.graph);
        for s in 0..7 {
            for t in 0..7 {
                if s == t || ap.dist[s][t] == usize::MAX {
                    continue;
                }
                let (dep, connected) = oracle_pair_dependency(&wg, s, t);
                assert!(connected);
                let total: BigRational = dep.iter().sum();
                assert_eq!(total, BigRational::from(BigInt::from(ap.dist[s][t] as i64 - 1)));
            }
        }
    }

    #[test]
    fn pair_dependency_symmetric() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)]);
        let wg = WeightedGraph::unit(g);
        for s in 0..6 {
            for t in (s + 1)..6 {
                let (a, _) = oracle_pair_dependency(&wg, s, t);
                let (b, _) = oracle_pair_dependency(&wg, t, s);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn score_sum_identity() {
        // sum_v C_B(v) = sum over ordered connected pairs of pend[s]pend[t](d(s,t)-1)
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (6, 7)]);
        let wg = WeightedGraph::new(g, vec![1, 2, 1, 3, 1, 1, 2, 1]);
        let scores = oracle_bc(&wg).unwrap();
        let total: BigRational = scores.0.iter().sum();
        let ap = all_pairs(&wg.graph);
        let mut want = BigInt::zero();
        for s in 0..8 {
            for t in 0..8 {
                if s != t && ap.dist[s][t] != usize::MAX {
                    want += BigInt::from(wg.pend[s] * wg.pend[t]) * BigInt::from(ap.dist[s][t] as i64 - 1);
                }
            }
        }
        assert_eq!(total, BigRational::from(want));
        assert_eq!(connected_components(&wg.graph).len(), 1);
    }

    #[test]
    fn vertex_transitive_graphs_have_equal_scores() {
        // C7 and the 3-cube
        let c7 = unit(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)]);
        let s = as_f64(&oracle_bc(&c7).unwrap());
        assert!(s.iter().all(|&x| (x - s[0]).abs() < 1e-12));

        let cube = unit(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        );
        let s = as_f64(&oracle_bc(&cube).unwrap());
        assert!(s.iter().all(|&x| (x - s[0]).abs() < 1e-12));
    }
}
