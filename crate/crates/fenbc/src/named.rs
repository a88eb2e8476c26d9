//! Small fixed graphs used by tests, the self-test suite, and benchmarks.

use crate::generate::SplitMix64;
use crate::graph::{build_graph, Graph};

/// Two triangles sharing a path spine, with a pending path (`c-a`) and a
/// pending vertex (`b`) attached. Labels `a`..`h`; 8 vertices, 9 edges.
///
/// Exhaustive degree-one reduction removes `c`, `b`, `a` and leaves the two
/// triangles `{d,e,f}` and `{f,g,h}` glued at the cut vertex `f`.
pub fn pendant_triangles() -> Graph {
    build_graph(&[
        ("a", "c"),
        ("a", "d"),
        ("b", "d"),
        ("d", "e"),
        ("d", "f"),
        ("e", "f"),
        ("f", "g"),
        ("f", "h"),
        ("g", "h"),
    ])
    .unwrap()
    .graph
}

/// An 18-vertex biconnected graph built around one long induced path
/// `x0-..-x5` with two parallel two-edge arcs on the `x0` side and a fan of
/// seven two-edge arcs on the `x5` side. Labels match the construction.
///
/// The score profile along `x0..x5` is strongly asymmetric, which makes this
/// the reference input for the two-path and one-path processing channels.
pub fn fanned_path() -> Graph {
    let mut edges: Vec<(String, String)> = vec![
        ("x0", "x1"),
        ("x1", "x2"),
        ("x2", "x3"),
        ("x3", "x4"),
        ("x4", "x5"),
        ("x0", "a1"),
        ("x0", "a2"),
        ("a1", "b"),
        ("a2", "b"),
        ("b", "q"),
        ("q", "c"),
    ]
    .into_iter()
    .map(|(u, v)| (u.to_string(), v.to_string()))
    .collect();
    for i in 1..=7 {
        edges.push(("c".to_string(), format!("d{}", i)));
        edges.push((format!("d{}", i), "x5".to_string()));
    }
    build_graph(&edges).unwrap().graph
}

/// The Petersen graph: outer C5, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges)
}

/// C8 plus the chords `{0,2}` and `{4,6}`: four maximal induced paths of one
/// inner vertex each, with distinct endpoint pairs.
pub fn chorded_c8() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.push((0, 2));
    edges.push((4, 6));
    Graph::from_edges(8, edges)
}

/// Cycle `C_n` with `extra` random chords: biconnected with feedback edge
/// number `1 + extra`. Deterministic in `seed`.
pub fn chorded_cycle(n: usize, extra: usize, seed: u64) -> Graph {
    assert!(n >= 4);
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut present: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let max_extra = n * (n - 1) / 2 - n;
    let extra = extra.min(max_extra);
    while edges.len() < n + extra {
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
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{degree_partition, feedback_edge_number};

    #[test]
    fn pendant_triangles_shape() {
        let g = pendant_triangles();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(degree_partition(&g).deg1.len(), 2);
    }

    #[test]
    fn fanned_path_shape() {
        let g = fanned_path();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 25);
        assert_eq!(feedback_edge_number(&g).0, 8);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn chorded_cycle_feedback() {
        let g = chorded_cycle(20, 5, 3);
        assert_eq!(feedback_edge_number(&g).0, 6);
        assert!(degree_partition(&g).deg1.is_empty());
    }
}
