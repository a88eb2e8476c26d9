//! Preprocessing that shrinks the input before the per-block solvers run:
//! exhaustive degree-one reduction, cut-vertex block splitting with score
//! recombination, and maximal induced path enumeration.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::{BCScores, Graph, VertexId, WeightedGraph};

/// One degree-one removal. `credit` is the single-orientation value
/// `removed_pend * (total_pend - removed_pend - pend[neighbor])` at removal
/// time; the score update doubles it to cover both pair orientations.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionRecord {
    pub removed: VertexId,
    pub neighbor: VertexId,
    pub removed_pend: u64,
    pub credit: f64,
}

pub type ReductionLog = Vec<ReductionRecord>;

/// Result of [`reduce_degree_one`]: the shrunken graph plus the map from its
/// dense ids back to the input graph's ids.
pub struct Reduction {
    pub reduced: WeightedGraph,
    pub to_original: Vec<VertexId>,
    pub log: ReductionLog,
}

/// Removes degree-one vertices exhaustively (FIFO over the initial set,
/// re-enqueuing neighbors that drop to degree one).
///
/// Each removal of `s` with neighbor `v` transfers `pend[s]` onto `v` and
/// credits `scores[v]` with twice the recorded single-orientation credit, so
/// that the final scores match the ordered-pair betweenness definition.
/// The total pend is conserved. A tree input reduces to a single vertex.
pub fn reduce_degree_one(wg: &WeightedGraph, scores: &mut BCScores) -> Reduction {
    let g = &wg.graph;
    let n = g.vertex_count();
    let total: u64 = wg.pend.iter().sum();
    let mut pend = wg.pend.clone();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut log = Vec::new();

    let mut queue: VecDeque<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(s) = queue.pop_front() {
        if !alive[s] || degree[s] != 1 {
            continue;
        }
        let v = *g
            .neighbors(s)
            .iter()
            .find(|&&w| alive[w])
            .expect("degree-one vertex has an alive neighbor");
        let credit = pend[s] as f64 * (total - pend[s] - pend[v]) as f64;
        scores[v] += 2.0 * credit;
        log.push(ReductionRecord { removed: s, neighbor: v, removed_pend: pend[s], credit });
        pend[v] += pend[s];
        alive[s] = false;
        degree[s] = 0;
        degree[v] -= 1;
        if degree[v] == 1 {
            queue.push_back(v);
        }
    }

    let to_original: Vec<VertexId> = (0..n).filter(|&v| alive[v]).collect();
    let reduced_graph = g.induced(&to_original);
    let reduced_pend: Vec<u64> = to_original.iter().map(|&v| pend[v]).collect();
    debug_assert_eq!(reduced_pend.iter().sum::<u64>(), total);
    Reduction { reduced: WeightedGraph::new(reduced_graph, reduced_pend), to_original, log }
}

/// A cut vertex's stand-in inside one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyRecord {
    /// Cut vertex id in the graph the blocks were split from.
    pub cut_original: VertexId,
    /// Id of the copy inside the block subgraph.
    pub block_vertex: VertexId,
    /// The cut vertex's own pend.
    pub xi: u64,
    /// Pend absorbed from everything outside this block's side.
    pub added_pend: u64,
}

/// A biconnected piece (possibly a single edge) with copy vertices standing
/// in for the cut vertices on its boundary.
pub struct Block {
    pub subgraph: WeightedGraph,
    pub to_original: Vec<VertexId>,
    pub copies: Vec<CopyRecord>,
}

/// Splits a connected graph without degree-one vertices into its biconnected
/// blocks. Each cut vertex appears in every incident block as a copy whose
/// pend is its own pend plus the total pend beyond that block.
///
/// Copy pends are computed in one pass over the block-cut tree with subtree
/// pend sums rather than by repeated single-cut splitting.
pub fn split_blocks(wg: &WeightedGraph) -> Vec<Block> {
    let g = &wg.graph;
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let comps = biconnected_edge_lists(g);
    if comps.is_empty() {
        return Vec::new();
    }
    let total: u64 = wg.pend.iter().sum();

    // vertex sets per block, sorted; block count per vertex
    let mut block_vertices: Vec<Vec<VertexId>> = Vec::with_capacity(comps.len());
    let mut blocks_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, edges) in comps.iter().enumerate() {
        let mut vs: Vec<VertexId> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            blocks_of[v].push(b);
        }
        block_vertices.push(vs);
    }
    let is_cut = |v: VertexId| blocks_of[v].len() >= 2;

    // Block-cut tree: nodes 0..nb are blocks, then one node per cut vertex.
    let nb = comps.len();
    let mut cut_node = vec![usize::MAX; n];
    let mut node_count = nb;
    for v in 0..n {
        if is_cut(v) {
            cut_node[v] = node_count;
            node_count += 1;
        }
    }
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    for (b, vs) in block_vertices.iter().enumerate() {
        for &v in vs {
            if is_cut(v) {
                tree[b].push(cut_node[v]);
                tree[cut_node[v]].push(b);
            }
        }
    }

    // Own mass: a block owns its non-cut vertices, a cut node owns itself.
    let mut own = vec![0u64; node_count];
    for (b, vs) in block_vertices.iter().enumerate() {
        own[b] = vs.iter().filter(|&&v| !is_cut(v)).map(|&v| wg.pend[v]).sum();
    }
    for v in 0..n {
        if is_cut(v) {
            own[cut_node[v]] = wg.pend[v];
        }
    }

    // Rooted subtree sums (input is connected, so the tree has one component).
    let mut parent = vec![usize::MAX; node_count];
    let mut dfs_order = Vec::with_capacity(node_count);
    let mut stack = vec![0usize];
    let mut seen = vec![false; node_count];
    seen[0] = true;
    parent[0] = 0;
    while let Some(x) = stack.pop() {
        dfs_order.push(x);
        for &y in &tree[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    debug_assert_eq!(dfs_order.len(), node_count, "split_blocks requires a connected graph");
    let mut subtree = own.clone();
    for &x in dfs_order.iter().rev() {
        if x != 0 {
            subtree[parent[x]] += subtree[x];
        }
    }

    // Assemble the block subgraphs with copy pends.
    let mut out = Vec::with_capacity(nb);
    for (b, vs) in block_vertices.iter().enumerate() {
        let mut local_pend = Vec::with_capacity(vs.len());
        let mut copies = Vec::new();
        for (local, &v) in vs.iter().enumerate() {
            if !is_cut(v) {
                local_pend.push(wg.pend[v]);
                continue;
            }
            let c = cut_node[v];
            // Pend mass of the component of G - v on this block's side.
            let side = if parent[c] == b {
                // v hangs below this block
                total - wg.pend[v] - (subtree[c] - wg.pend[v])
            } else {
                // this block hangs below v
                debug_assert_eq!(parent[b], c);
                subtree[b]
            };
            let copy_pend = total - side;
            local_pend.push(copy_pend);
            copies.push(CopyRecord {
                cut_original: v,
                block_vertex: local,
                xi: wg.pend[v],
                added_pend: copy_pend - wg.pend[v],
            });
        }
        let mut index_of = std::collections::HashMap::with_capacity(vs.len());
        for (local, &v) in vs.iter().enumerate() {
            index_of.insert(v, local);
        }
        let edges: Vec<(usize, usize)> =
            comps[b].iter().map(|&(u, v)| (index_of[&u], index_of[&v])).collect();
        let subgraph = Graph::from_edges(vs.len(), edges);
        out.push(Block {
            subgraph: WeightedGraph::new(subgraph, local_pend),
            to_original: vs.clone(),
            copies,
        });
    }
    out
}

/// Iterative Hopcroft-Tarjan: edge lists of the biconnected components.
fn biconnected_edge_lists(g: &Graph) -> Vec<Vec<(VertexId, VertexId)>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut next_edge = vec![0usize; n];
    let mut timer = 0;
    let mut comps = Vec::new();
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![root];
        while let Some(&v) = stack.last() {
            if next_edge[v] < g.degree(v) {
                let w = g.neighbors(v)[next_edge[v]];
                next_edge[v] += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(w);
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        comps.push(comp);
                    }
                }
            }
        }
    }
    comps
}

/// Folds per-block scores back onto the split graph's vertices.
///
/// Non-copy vertices take their unique block score. A cut vertex receives,
/// over its incident blocks, the copy's block score plus
/// `added_pend * (pend sum of the rest of the block)`.
pub fn recombine(block_scores: &[BCScores], blocks: &[Block], wg: &WeightedGraph) -> BCScores {
    assert_eq!(block_scores.len(), blocks.len(), "one score vector per block");
    let mut out = BCScores::zeros(wg.graph.vertex_count());
    for (block, scores) in blocks.iter().zip(block_scores) {
        assert_eq!(scores.len(), block.subgraph.graph.vertex_count());
        let block_total: u64 = block.subgraph.pend.iter().sum();
        let mut is_copy = vec![false; block.to_original.len()];
        for copy in &block.copies {
            is_copy[copy.block_vertex] = true;
        }
        for (local, &orig) in block.to_original.iter().enumerate() {
            if !is_copy[local] {
                out[orig] += scores[local];
            }
        }
        for copy in &block.copies {
            let inside = (block_total - block.subgraph.pend[copy.block_vertex]) as f64;
            out[copy.cut_original] += scores[copy.block_vertex] + copy.added_pend as f64 * inside;
        }
    }
    out
}

/// A path whose inner vertices all have degree two and whose endpoints do
/// not, stored with the smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxPath {
    pub vertices: Vec<VertexId>,
}

impl MaxPath {
    /// Number of edges.
    pub fn q(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsCycle;

impl fmt::Display for IsCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph is a cycle and has no maximal induced paths")
    }
}

impl std::error::Error for IsCycle {}

/// All maximal induced paths of a biconnected graph that is not a cycle.
/// Every degree-two vertex lands in exactly one path.
pub fn find_max_paths(g: &Graph) -> Result<Vec<MaxPath>, IsCycle> {
    let n = g.vertex_count();
    if n > 0 && (0..n).all(|v| g.degree(v) == 2) {
        return Err(IsCycle);
    }
    let mut in_path = vec![false; n];
    let mut paths = Vec::new();
    for v in 0..n {
        if g.degree(v) != 2 || in_path[v] {
            continue;
        }
        let left = walk_to_endpoint(g, v, g.neighbors(v)[0]);
        let right = walk_to_endpoint(g, v, g.neighbors(v)[1]);
        let mut vertices: Vec<VertexId> = left.iter().rev().copied().collect();
        vertices.push(v);
        vertices.extend_from_slice(&right);
        debug_assert!(vertices[0] != *vertices.last().unwrap(), "biconnected non-cycle input");
        for &u in &vertices {
            if g.degree(u) == 2 {
                in_path[u] = true;
            }
        }
        if vertices[0] > *vertices.last().unwrap() {
            vertices.reverse();
        }
        paths.push(MaxPath { vertices });
    }
    Ok(paths)
}

/// Vertices after `from` in direction `to`, ending at the first vertex of
/// degree != 2 (inclusive).
fn walk_to_endpoint(g: &Graph, from: VertexId, to: VertexId) -> Vec<VertexId> {
    let mut seq = vec![to];
    let (mut prev, mut cur) = (from, to);
    while g.degree(cur) == 2 {
        let next = if g.neighbors(cur)[0] == prev { g.neighbors(cur)[1] } else { g.neighbors(cur)[0] };
        seq.push(next);
        prev = cur;
        cur = next;
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandes::brandes_weighted;
    use crate::generate::theta;
    use crate::named::pendant_triangles;
    use crate::oracle::{max_rel_err, max_rel_err_exact, oracle_bc};

    fn label_id(g: &Graph, label: &str) -> VertexId {
        (0..g.vertex_count()).find(|&v| g.label(v) == Some(label)).unwrap()
    }

    #[test]
    fn pendant_triangles_reduce_exhaustively() {
        let g = pendant_triangles();
        let ids: Vec<VertexId> = ["a", "b", "c", "d", "e", "f", "g", "h"]
            .iter()
            .map(|s| label_id(&g, s))
            .collect();
        let wg = WeightedGraph::unit(g);
        let mut scores = BCScores::zeros(8);
        let red = reduce_degree_one(&wg, &mut scores);

        let removed: Vec<VertexId> = red.log.iter().map(|r| r.removed).collect();
        assert_eq!(removed.len(), 3);
        for name in ["a", "b", "c"] {
            assert!(removed.contains(&ids[name.as_bytes()[0] as usize - b'a' as usize]));
        }
        // d survives with the whole pending tree's mass
        let d_local = red.to_original.iter().position(|&v| v == ids[3]).unwrap();
        assert_eq!(red.reduced.pend[d_local], 4);
        assert_eq!(red.reduced.pend.iter().sum::<u64>(), 8);
        assert_eq!(red.reduced.graph.vertex_count(), 5);

        // removing c credits a with the base credit 1*(8-1-1) = 6, doubled in scores
        let c_record = red.log.iter().find(|r| r.removed == ids[2]).unwrap();
        assert_eq!(c_record.neighbor, ids[0]);
        assert_eq!(c_record.credit, 6.0);
        assert_eq!(scores[ids[0]], 12.0);
        // the doubled credit is what the exact oracle reports for a
        let exact = oracle_bc(&wg).unwrap().to_f64();
        assert_eq!(exact.0[ids[0]], 12.0);
    }

    #[test]
    fn star_reduces_to_center() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let wg = WeightedGraph::unit(g);
        let mut scores = BCScores::zeros(4);
        let red = reduce_degree_one(&wg, &mut scores);
        assert_eq!(red.reduced.graph.vertex_count(), 1);
        assert_eq!(red.reduced.pend, vec![4]);
        // oracle gives the center 6 over ordered pairs
        assert_eq!(scores[0], 6.0);
        let exact = oracle_bc(&wg).unwrap().to_f64();
        assert_eq!(exact.0[0], 6.0);
    }

    #[test]
    fn reduction_order_does_not_matter() {
        // run on a relabeled copy and compare mapped scores
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 1), (2, 4), (4, 5), (5, 6)]);
        let perm: Vec<usize> = vec![3, 5, 0, 6, 2, 4, 1];
        let h = Graph::from_edges(7, g.edges().map(|(u, v)| (perm[u], perm[v])));
        let mut sg = BCScores::zeros(7);
        let mut sh = BCScores::zeros(7);
        let rg = reduce_degree_one(&WeightedGraph::unit(g), &mut sg);
        let rh = reduce_degree_one(&WeightedGraph::unit(h), &mut sh);
        for v in 0..7 {
            assert!((sg[v] - sh[perm[v]]).abs() < 1e-12);
        }
        assert_eq!(rg.reduced.graph.vertex_count(), rh.reduced.graph.vertex_count());
    }

    #[test]
    fn split_two_triangles_at_cut_vertex() {
        // the reduced pendant-triangles graph: d(4)-e-f plus f-g-h
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        let wg = WeightedGraph::new(g, vec![4, 1, 1, 1, 1]);
        let blocks = split_blocks(&wg);
        assert_eq!(blocks.len(), 2);
        let mut copy_pends: Vec<u64> = blocks
            .iter()
            .flat_map(|b| b.copies.iter().map(|c| b.subgraph.pend[c.block_vertex]))
            .collect();
        copy_pends.sort_unstable();
        assert_eq!(copy_pends, vec![3, 6]);
        for b in &blocks {
            assert_eq!(b.subgraph.pend.iter().sum::<u64>(), 8);
            assert_eq!(b.copies.len(), 1);
            assert_eq!(b.copies[0].cut_original, 2);
            assert_eq!(b.copies[0].xi, 1);
        }
    }

    #[test]
    fn biconnected_input_is_one_block() {
        let g = crate::generate::cycle(5).unwrap();
        let wg = WeightedGraph::unit(g);
        let blocks = split_blocks(&wg);
        assert_eq!(blocks.len(), 1);
        assert!(blocks[0].copies.is_empty());
        assert_eq!(blocks[0].subgraph.graph.edge_count(), 5);
    }

    #[test]
    fn bridge_between_triangles_gives_three_blocks() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let wg = WeightedGraph::unit(g);
        let blocks = split_blocks(&wg);
        assert_eq!(blocks.len(), 3);
        let sizes: Vec<usize> = {
            let mut s: Vec<usize> = blocks.iter().map(|b| b.to_original.len()).collect();
            s.sort_unstable();
            s
        };
        assert_eq!(sizes, vec![2, 3, 3]);
        // every block conserves the total pend
        for b in &blocks {
            assert_eq!(b.subgraph.pend.iter().sum::<u64>(), 6);
        }
        // solving each block with the baseline and recombining matches the oracle
        let block_scores: Vec<BCScores> =
            blocks.iter().map(|b| brandes_weighted(&b.subgraph)).collect();
        let got = recombine(&block_scores, &blocks, &wg);
        let want = oracle_bc(&wg).unwrap();
        assert!(max_rel_err_exact(&got, &want) <= 1e-12);
    }

    #[test]
    fn single_block_recombine_is_identity() {
        let g = crate::generate::cycle(6).unwrap();
        let wg = WeightedGraph::unit(g);
        let blocks = split_blocks(&wg);
        let scores = vec![BCScores(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0])];
        let out = recombine(&scores, &blocks, &wg);
        for v in 0..6 {
            let local = blocks[0].to_original.iter().position(|&o| o == v).unwrap();
            assert_eq!(out[v], scores[0][local]);
        }
    }

    #[test]
    fn reduce_split_solve_recombine_matches_oracle() {
        for seed in 0..25u64 {
            let n = 6 + (seed as usize) % 20;
            let m = n - 1 + (seed as usize) % 6;
            let g = crate::generate::gnm_connected(n, m.min(n * (n - 1) / 2), seed * 31 + 1).unwrap();
            let wg = WeightedGraph::unit(g);
            let mut scores = BCScores::zeros(n);
            let red = reduce_degree_one(&wg, &mut scores);
            if red.reduced.graph.vertex_count() > 1 {
                let blocks = split_blocks(&red.reduced);
                let block_scores: Vec<BCScores> =
                    blocks.iter().map(|b| brandes_weighted(&b.subgraph)).collect();
                let inner = recombine(&block_scores, &blocks, &red.reduced);
                for (local, &orig) in red.to_original.iter().enumerate() {
                    scores[orig] += inner[local];
                }
            }
            let want = oracle_bc(&wg).unwrap().to_f64();
            assert!(max_rel_err(&scores, &want) <= 1e-9, "seed {}", seed);
        }
    }

    #[test]
    fn max_paths_on_theta_and_k4() {
        let g = theta(2, 2, 3).unwrap();
        let paths = find_max_paths(&g).unwrap();
        assert_eq!(paths.len(), 3);
        for p in &paths {
            assert!(p.first() < p.last());
            assert_ne!(g.degree(p.first()), 2);
            assert_ne!(g.degree(p.last()), 2);
            for &v in &p.vertices[1..p.vertices.len() - 1] {
                assert_eq!(g.degree(v), 2);
            }
        }

        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(find_max_paths(&k4).unwrap().is_empty());

        let c5 = crate::generate::cycle(5).unwrap();
        assert_eq!(find_max_paths(&c5), Err(IsCycle));
    }

    #[test]
    fn max_paths_census_on_fanned_path() {
        let g = crate::named::fanned_path();
        let paths = find_max_paths(&g).unwrap();
        assert_eq!(paths.len(), 11);
        let mut lengths: Vec<usize> = paths.iter().map(|p| p.q()).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 5]);
        // every degree-two vertex lies in exactly one path
        let mut seen = vec![0usize; g.vertex_count()];
        for p in &paths {
            for &v in &p.vertices[1..p.vertices.len() - 1] {
                seen[v] += 1;
            }
        }
        for v in 0..g.vertex_count() {
            assert_eq!(seen[v], if g.degree(v) == 2 { 1 } else { 0 });
        }
    }
}
