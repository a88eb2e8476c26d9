//! The O(kn) solver for one biconnected, vertex-weighted block: per-source
//! tables from the degree>=3 vertices, deferred pair coefficients in an Inc
//! table, sliding-window processing of maximal induced paths, and a final
//! generalized-Brandes flush.
//!
//! Index arithmetic on paths frequently lands on half-integers (tie
//! midpoints, split points); those are carried as doubled integers so parity
//! checks stay exact.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::brandes::{accumulate_generalized, sssp_dag, SourceDag};
use crate::cycle::{cycle_bc, CycleInstance};
use crate::decompose::{find_max_paths, IsCycle, MaxPath};
use crate::graph::{BCScores, Graph, VertexId, WeightedGraph};

/// Fault injection for the self-test's mutation checks. All flags off in
/// production; each flag breaks one load-bearing constant so the test suite
/// can prove it is load-bearing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FaultInjection {
    /// Use `sigma` instead of `sigma + 1` in tie denominators.
    pub flip_tie_denominator: bool,
    /// Credit path pairs with `rho` instead of `2 * rho`.
    pub drop_pair_doubling: bool,
    /// Write shared-endpoint Inc updates instead of skipping them.
    pub skip_shared_endpoint_guard: bool,
}

impl FaultInjection {
    pub const NONE: FaultInjection = FaultInjection {
        flip_tie_denominator: false,
        drop_pair_doubling: false,
        skip_shared_endpoint_guard: false,
    };
}

/// Per-source BFS tables for every vertex of degree at least three.
pub struct SourceTables {
    pub sources: Vec<VertexId>,
    source_idx: Vec<u32>,
    pub dags: Vec<SourceDag>,
}

impl SourceTables {
    fn build(g: &Graph) -> SourceTables {
        let n = g.vertex_count();
        let sources: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
        let mut source_idx = vec![u32::MAX; n];
        for (i, &s) in sources.iter().enumerate() {
            source_idx[s] = i as u32;
        }
        let dags = sources.iter().map(|&s| sssp_dag(g, s)).collect();
        SourceTables { sources, source_idx, dags }
    }

    pub fn index_of(&self, v: VertexId) -> usize {
        let i = self.source_idx[v];
        debug_assert_ne!(i, u32::MAX, "vertex {} has degree < 3", v);
        i as usize
    }

    pub fn dist(&self, source_index: usize, t: VertexId) -> usize {
        self.dags[source_index].dist[t]
    }

    pub fn sigma(&self, source_index: usize, t: VertexId) -> f64 {
        self.dags[source_index].sigma[t]
    }

    pub fn table_bytes(&self) -> usize {
        self.dags.iter().map(|d| d.table_bytes()).sum()
    }
}

/// Dense `|V>=3| x n` table of deferred pair coefficients. Entry `(s, t)`
/// is flushed in the postprocess as `inc[s][t] * sigma_st(v)` onto every
/// vertex `v`.
pub struct IncTable {
    n: usize,
    data: Vec<f64>,
    touched: HashSet<(u32, u32)>,
    diagonal_write: bool,
}

impl IncTable {
    pub fn get(&self, source_index: usize, t: VertexId) -> f64 {
        self.data[source_index * self.n + t]
    }

    pub fn row(&self, source_index: usize) -> &[f64] {
        &self.data[source_index * self.n..(source_index + 1) * self.n]
    }

    /// Path-processing update; records the pair for the locality audit.
    fn bump(&mut self, source_index: usize, source_vertex: VertexId, t: VertexId, delta: f64) {
        if source_vertex == t {
            self.diagonal_write = true;
        }
        self.touched.insert((source_index as u32, t as u32));
        self.data[source_index * self.n + t] += delta;
    }

    pub fn table_bytes(&self) -> usize {
        self.data.len() * 8
    }
}

/// One BFS per degree>=3 vertex plus the Inc initialization: doubled
/// coefficients toward degree-two targets (those pairs are never revisited
/// from the other side), single coefficients between table sources.
pub fn init_tables(block: &WeightedGraph) -> Result<(SourceTables, IncTable), IsCycle> {
    let g = &block.graph;
    let n = g.vertex_count();
    if n > 0 && (0..n).all(|v| g.degree(v) == 2) {
        return Err(IsCycle);
    }
    let st = SourceTables::build(g);
    let mut data = vec![0.0; st.sources.len() * n];
    for (si, &s) in st.sources.iter().enumerate() {
        let dag = &st.dags[si];
        let ps = block.pend[s] as f64;
        let row = &mut data[si * n..(si + 1) * n];
        for t in 0..n {
            if t == s || dag.dist[t] == usize::MAX {
                continue;
            }
            let coeff = ps * block.pend[t] as f64 / dag.sigma[t];
            row[t] = match g.degree(t) {
                2 => 2.0 * coeff,
                d if d >= 3 => coeff,
                _ => 0.0,
            };
        }
    }
    Ok((st, IncTable { n, data, touched: HashSet::new(), diagonal_write: false }))
}

/// Endpoint-inclusive prefix and suffix pend sums along one path.
pub struct PathPrefix {
    pub wleft: Vec<u64>,
    pub wright: Vec<u64>,
}

pub fn path_prefix_sums(p: &MaxPath, pend: &[u64]) -> PathPrefix {
    let q = p.q();
    let mut wleft = vec![0u64; q + 1];
    wleft[0] = pend[p.vertices[0]];
    for i in 1..=q {
        wleft[i] = wleft[i - 1] + pend[p.vertices[i]];
    }
    let mut wright = vec![0u64; q + 1];
    wright[q] = pend[p.vertices[q]];
    for i in (0..q).rev() {
        wright[i] = wright[i + 1] + pend[p.vertices[i]];
    }
    PathPrefix { wleft, wright }
}

impl PathPrefix {
    /// Inner prefix `sum of pend[x_1..=x_k]` (excludes `x_0`).
    pub fn inner_left(&self, k: usize) -> u64 {
        self.wleft[k] - self.wleft[0]
    }

    /// Inner suffix `sum of pend[x_k..=x_{q-1}]` (excludes `x_q`).
    pub fn inner_right(&self, k: usize) -> u64 {
        self.wright[k] - self.wright[self.wright.len() - 1]
    }

    /// `sum of pend[x_a..=x_b]`, zero when the range is empty; `a >= 1`.
    pub fn w_inner(&self, a: usize, b: usize) -> u64 {
        if a > b {
            0
        } else {
            self.wleft[b] - self.wleft[a - 1]
        }
    }
}

/// How a path splits, seen from an outside target `t`: inner vertices up to
/// `xleft` are reached through `x_0`, those from `xright` on through `x_q`,
/// and `xmid` (when the split lands on an integer inner index) through both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitPoints {
    pub xleft: Option<usize>,
    pub xmid: Option<usize>,
    pub xright: Option<usize>,
}

pub fn split_points(p: &MaxPath, t: VertexId, st: &SourceTables) -> SplitPoints {
    let q = p.q() as i64;
    let d0 = st.dist(st.index_of(p.first()), t) as i64;
    let dq = st.dist(st.index_of(p.last()), t) as i64;
    // doubled split index: 2i = q - d(x_0,t) + d(x_q,t), always in [0, 2q]
    let i2 = q - d0 + dq;
    debug_assert!((0..=2 * q).contains(&i2));
    let (lmax, mid, rmin) = if i2 % 2 == 0 {
        (i2 / 2 - 1, Some(i2 / 2), i2 / 2 + 1)
    } else {
        ((i2 - 1) / 2, None, (i2 + 1) / 2)
    };
    SplitPoints {
        xleft: (lmax >= 1).then_some(lmax as usize),
        xmid: mid.filter(|&m| m >= 1 && m < q).map(|m| m as usize),
        xright: (rmin < q).then_some(rmin as usize),
    }
}

/// Which of `p2`'s endpoints lie on shortest paths from `psi` to the inner
/// vertex `p2[k]` (the eta indicators, evaluated with path-internal exit
/// distances).
fn exit_flags(st: &SourceTables, psi_index: usize, p2: &MaxPath, k: usize) -> (bool, bool) {
    let r = p2.q();
    let d_t = st.dist(psi_index, p2.vertices[k]);
    let via_first = st.dist(psi_index, p2.first()) + k == d_t;
    let via_last = st.dist(psi_index, p2.last()) + (r - k) == d_t;
    debug_assert!(via_first || via_last);
    (via_first, via_last)
}

fn flag(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

/// Pair channel, outside case: for every inner target in `p2`, fold the
/// whole reachable stretch of `p1` into coefficients on the connector
/// endpoints. Updates with a shared endpoint (`psi == phi`) are skipped:
/// a zero-length connector has no outside vertices.
pub fn pair_outside(
    p1: &MaxPath,
    p2: &MaxPath,
    st: &SourceTables,
    pend: &[u64],
    pfx1: &PathPrefix,
    inc: &mut IncTable,
    faults: FaultInjection,
) {
    let (x0, xq) = (p1.first(), p1.last());
    let (x0i, xqi) = (st.index_of(x0), st.index_of(xq));
    let (y0, yr) = (p2.first(), p2.last());
    let r = p2.q();
    for k in 1..r {
        let t = p2.vertices[k];
        let sp = split_points(p1, t, st);
        let (l0, lr) = exit_flags(st, x0i, p2, k);
        let (r0, rr) = exit_flags(st, xqi, p2, k);
        let denom_l = flag(l0) * st.sigma(x0i, y0) + flag(lr) * st.sigma(x0i, yr);
        let denom_r = flag(r0) * st.sigma(xqi, y0) + flag(rr) * st.sigma(xqi, yr);
        let wl = sp.xleft.map_or(0, |l| pfx1.inner_left(l)) as f64;
        let wr = sp.xright.map_or(0, |rm| pfx1.inner_right(rm)) as f64;
        let pmid = sp.xmid.map_or(0, |m| pend[p1.vertices[m]]) as f64;
        let pt = pend[t] as f64;
        let x1 = wl * pt / denom_l + pmid * pt / (denom_l + denom_r);
        let x2 = wr * pt / denom_r + pmid * pt / (denom_l + denom_r);
        for (present, phi) in [(l0, y0), (lr, yr)] {
            if present && x1 != 0.0 && (phi != x0 || faults.skip_shared_endpoint_guard) {
                inc.bump(x0i, x0, phi, x1);
            }
        }
        for (present, phi) in [(r0, y0), (rr, yr)] {
            if present && x2 != 0.0 && (phi != xq || faults.skip_shared_endpoint_guard) {
                inc.bump(xqi, xq, phi, x2);
            }
        }
    }
}

/// Pair channel, inside case: betweenness credits for every vertex of `p2`
/// from pairs with one endpoint in each path. The per-position values come
/// from a two-term sliding sum over the kappa coefficients; credits are
/// doubled except at a shared endpoint of the two paths.
pub fn pair_inside(
    p1: &MaxPath,
    p2: &MaxPath,
    st: &SourceTables,
    pend: &[u64],
    pfx1: &PathPrefix,
    faults: FaultInjection,
) -> Vec<f64> {
    let (x0, xq) = (p1.first(), p1.last());
    let (x0i, xqi) = (st.index_of(x0), st.index_of(xq));
    let (y0, yr) = (p2.first(), p2.last());
    let r = p2.q();
    let (s00, s0r) = (st.sigma(x0i, y0), st.sigma(x0i, yr));
    let (sq0, sqr) = (st.sigma(xqi, y0), st.sigma(xqi, yr));

    // A shared endpoint is passed both when a route enters p2 through it and
    // when a route leaves p1 through it; the kappa bookkeeping below only
    // sees the entry side, so those positions get a direct class sum.
    let shared_first = y0 == x0 || y0 == xq;
    let shared_last = yr == x0 || yr == xq;
    let mut direct_first = 0.0;
    let mut direct_last = 0.0;

    // kappa[k] toward each travel direction; zero at the endpoints.
    let mut kappa_y0 = vec![0.0; r + 1];
    let mut kappa_yr = vec![0.0; r + 1];
    for k in 1..r {
        let t = p2.vertices[k];
        let sp = split_points(p1, t, st);
        let wl = sp.xleft.map_or(0, |l| pfx1.inner_left(l)) as f64;
        let wr = sp.xright.map_or(0, |rm| pfx1.inner_right(rm)) as f64;
        let pmid = sp.xmid.map_or(0, |m| pend[p1.vertices[m]]) as f64;
        let (e0_x0, er_x0) = exit_flags(st, x0i, p2, k);
        let (e0_xq, er_xq) = exit_flags(st, xqi, p2, k);
        let denom_l = flag(e0_x0) * s00 + flag(er_x0) * s0r;
        let denom_r = flag(e0_xq) * sq0 + flag(er_xq) * sqr;
        let denom_m = denom_l + denom_r;
        let pk = pend[t] as f64;
        kappa_y0[k] = pk
            * (pmid * (flag(e0_x0) * s00 + flag(e0_xq) * sq0) / denom_m
                + wl * flag(e0_x0) * s00 / denom_l
                + wr * flag(e0_xq) * sq0 / denom_r);
        kappa_yr[k] = pk
            * (pmid * (flag(er_x0) * s0r + flag(er_xq) * sqr) / denom_m
                + wl * flag(er_x0) * s0r / denom_l
                + wr * flag(er_xq) * sqr / denom_r);

        if shared_first || shared_last {
            // per-class shares of routes entering p2 through each endpoint
            let enter_l = (flag(e0_x0) * s00, flag(er_x0) * s0r);
            let enter_r = (flag(e0_xq) * sq0, flag(er_xq) * sqr);
            let add_direct = |entry_is_first: bool, exit_is_left: bool| -> f64 {
                let (own_l, own_r) = if entry_is_first {
                    (enter_l.0, enter_r.0)
                } else {
                    (enter_l.1, enter_r.1)
                };
                // exit side passes the vertex with every route; the other
                // side only with routes that re-enter through it
                let (frac_l, frac_r, mid_extra) = if exit_is_left {
                    (1.0, own_r / denom_r, denom_l + own_r)
                } else {
                    (own_l / denom_l, 1.0, denom_r + own_l)
                };
                pk * (wl * frac_l + wr * frac_r + pmid * mid_extra / denom_m)
            };
            if shared_first {
                direct_first += add_direct(true, y0 == x0);
            }
            if shared_last {
                direct_last += add_direct(false, yr == x0);
            }
        }
    }

    // rho_i = sum_{k<i} kappa_yr[k] + sum_{k>i} kappa_y0[k]
    let mut rho = vec![0.0; r + 1];
    rho[0] = kappa_y0[1..r].iter().sum();
    for i in 0..r {
        rho[i + 1] = rho[i] + kappa_yr[i] - kappa_y0[i + 1];
    }
    (0..=r)
        .map(|i| {
            let v = p2.vertices[i];
            if i == 0 && shared_first {
                direct_first
            } else if i == r && shared_last {
                direct_last
            } else if faults.drop_pair_doubling || v == x0 || v == xq {
                rho[i]
            } else {
                2.0 * rho[i]
            }
        })
        .collect()
}

/// Position of `v` relative to a fixed inner pair `(x_i, x_j)` of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    /// `v` lies strictly between the pair on the path.
    InsideRange,
    /// `v` is on the path but outside `[x_i, x_j]`.
    OnPathOutsideRange,
    /// `v` is not on the path.
    OffPath,
}

/// The dependency ratio `sigma_{x_i x_j}(v) / sigma_{x_i x_j}` for an inner
/// pair of a maximal induced path, by comparing the in-path distance with
/// the detour over both endpoints. `sigma_endpoints_v` is
/// `sigma_{x_0 x_q}(v)` and is only read in the off-path cases.
pub fn classify_sigma_ratio(
    d_endpoints: usize,
    q: usize,
    i: usize,
    j: usize,
    class: VertexClass,
    sigma_endpoints: f64,
    sigma_endpoints_v: f64,
) -> f64 {
    assert!(i < j, "inner pair must be ordered");
    assert!(1 <= i && j < q);
    let d_in = j - i;
    let d_out = i + d_endpoints + q - j;
    use VertexClass::*;
    if d_in < d_out {
        match class {
            InsideRange => 1.0,
            _ => 0.0,
        }
    } else if d_out < d_in {
        match class {
            InsideRange => 0.0,
            OnPathOutsideRange => 1.0,
            OffPath => sigma_endpoints_v / sigma_endpoints,
        }
    } else {
        match class {
            InsideRange => 1.0 / (sigma_endpoints + 1.0),
            OnPathOutsideRange => sigma_endpoints / (sigma_endpoints + 1.0),
            OffPath => sigma_endpoints_v / (sigma_endpoints + 1.0),
        }
    }
}

/// Same-path channel for vertices between both pair endpoints: the alpha
/// sliding sums. `alpha[k]` is the doubled credit of `x_k` from pairs
/// `x_i, x_j` with `i < k < j`.
pub fn single_inside_alpha(
    p: &MaxPath,
    pend: &[u64],
    pfx: &PathPrefix,
    st: &SourceTables,
    faults: FaultInjection,
) -> Vec<f64> {
    let q = p.q() as i64;
    let x0i = st.index_of(p.first());
    let d = st.dist(x0i, p.last()) as i64;
    let sigma = st.sigma(x0i, p.last());
    let tie_inside =
        if faults.flip_tie_denominator { 1.0 / sigma } else { 1.0 / (sigma + 1.0) };
    let pf = |idx: i64| pend[p.vertices[idx as usize]] as f64;
    let w = |a: i64, b: i64| if a > b { 0.0 } else { pfx.w_inner(a as usize, b as usize) as f64 };

    // boundary slice over pairs (x_{k-1}, x_j), j > k: ratio-1 targets up to
    // the tie midpoint of k-1
    let gain = |k: i64| -> f64 {
        if k < 2 {
            return 0.0;
        }
        let m2 = 2 * (k - 1) + d + q;
        if m2 >= 2 * q {
            pf(k - 1) * w(k + 1, q - 1)
        } else if m2 % 2 == 1 {
            pf(k - 1) * w(k + 1, (m2 - 1) / 2)
        } else {
            pf(k - 1) * (pf(m2 / 2) * tie_inside + w(k + 1, m2 / 2 - 1))
        }
    };
    // boundary slice over pairs (x_i, x_k), i < k-1, seen from x_{k-1}
    let loss = |k: i64| -> f64 {
        if k > q - 1 {
            return 0.0;
        }
        let m2 = 2 * k - (d + q);
        if m2 < 2 {
            pf(k) * w(1, k - 2)
        } else if m2 % 2 == 1 {
            pf(k) * w((m2 + 1) / 2, k - 2)
        } else {
            pf(k) * (pf(m2 / 2) * tie_inside + w(m2 / 2 + 1, k - 2))
        }
    };

    let mut alpha = vec![0.0; q as usize + 1];
    for k in 1..=q {
        alpha[k as usize] = alpha[(k - 1) as usize] + 2.0 * (gain(k) - loss(k));
    }
    alpha
}

/// Same-path channel for vertices outside the pair range: credits every
/// path vertex directly (the beta sliding sums) and routes the off-path
/// mass through `Inc[x_0, x_q]` as a per-sigma-unit coefficient.
pub fn single_outside_beta(
    p: &MaxPath,
    pend: &[u64],
    pfx: &PathPrefix,
    st: &SourceTables,
    inc: &mut IncTable,
    faults: FaultInjection,
) -> Vec<f64> {
    let q = p.q() as i64;
    let x0i = st.index_of(p.first());
    let d = st.dist(x0i, p.last()) as i64;
    let sigma = st.sigma(x0i, p.last());
    let tie_unit = if faults.flip_tie_denominator { 1.0 / sigma } else { 1.0 / (sigma + 1.0) };
    let tie_onpath =
        if faults.flip_tie_denominator { 1.0 } else { sigma / (sigma + 1.0) };
    let pf = |idx: i64| pend[p.vertices[idx as usize]] as f64;
    let iright =
        |a: i64| if a > q - 1 { 0.0 } else { pfx.inner_right(a as usize) as f64 };
    let ileft = |a: i64| if a < 1 { 0.0 } else { pfx.inner_left(a as usize) as f64 };

    // off-path mass per unit of sigma_{x_0 x_q}(v), both orientations
    let mut x = 0.0;
    for i in 1..q {
        let m2 = 2 * i + d + q;
        if m2 > 2 * (q - 1) {
            continue;
        }
        if m2 % 2 == 1 {
            x += pf(i) * iright((m2 + 1) / 2) / sigma;
        } else {
            x += pf(i) * (pf(m2 / 2) * tie_unit + iright(m2 / 2 + 1) / sigma);
        }
    }
    x *= 2.0;
    if x != 0.0 {
        // x > 0 implies d(x_0, x_q) < q, so no path vertex sits on a
        // shortest endpoint-to-endpoint route and the flush skips the path
        inc.bump(x0i, p.first(), p.last(), x);
    }

    let gain = |k: i64| -> f64 {
        let m2 = 2 * k - (d + q);
        if m2 < 2 {
            0.0
        } else if m2 % 2 == 1 {
            pf(k) * ileft((m2 - 1) / 2)
        } else {
            pf(k) * (ileft(m2 / 2 - 1) + pf(m2 / 2) * tie_onpath)
        }
    };
    let loss = |k: i64| -> f64 {
        let m2 = 2 * (k + 1) + d + q;
        if m2 > 2 * (q - 1) {
            0.0
        } else if m2 % 2 == 1 {
            pf(k + 1) * iright((m2 + 1) / 2)
        } else {
            pf(k + 1) * (iright(m2 / 2 + 1) + pf(m2 / 2) * tie_onpath)
        }
    };

    let mut beta = vec![0.0; q as usize + 1];
    // every escaping route passes x_0, so the base case is the full off-path
    // mass times the endpoint path count
    beta[0] = x * sigma;
    for k in 0..q {
        beta[(k + 1) as usize] = beta[k as usize] + 2.0 * (gain(k) - loss(k));
    }
    beta
}

/// Flush: one generalized accumulation per table source with
/// `f(t) = inc[s][t]`, which already embeds the initialization terms.
pub fn postprocess(st: &SourceTables, inc: &IncTable, scores: &mut BCScores) {
    for si in 0..st.sources.len() {
        let row = inc.row(si);
        let chi = accumulate_generalized(&st.dags[si], |t| row[t]);
        for (v, c) in chi.into_iter().enumerate() {
            scores[v] += c;
        }
    }
}

/// Timing and audit data from one block solve.
#[derive(Debug, Clone, Default)]
pub struct BlockStats {
    pub tables: Duration,
    pub paths: Duration,
    pub postprocess: Duration,
    pub table_bytes: usize,
    pub sources: usize,
    pub max_paths: usize,
    /// True when all post-init Inc writes were on distinct endpoint pairs
    /// of maximal induced paths.
    pub inc_audit_ok: bool,
}

/// Betweenness of one connected block with no degree-one vertices
/// (single edges and single vertices score zero, cycles go to the cycle
/// solver, everything else through the table machinery).
pub fn block_bc(block: &WeightedGraph) -> BCScores {
    block_bc_detailed(block, FaultInjection::NONE).0
}

pub fn block_bc_detailed(block: &WeightedGraph, faults: FaultInjection) -> (BCScores, BlockStats) {
    let g = &block.graph;
    let n = g.vertex_count();
    let mut stats = BlockStats { inc_audit_ok: true, ..BlockStats::default() };
    if n <= 2 || g.edge_count() <= 1 {
        return (BCScores::zeros(n), stats);
    }
    debug_assert_eq!(crate::graph::connected_components(g).len(), 1, "block must be connected");

    if (0..n).all(|v| g.degree(v) == 2) {
        let order = cycle_order(g);
        let pend: Vec<u64> = order.iter().map(|&v| block.pend[v]).collect();
        let cycle_scores = cycle_bc(&CycleInstance::new(pend).expect("cycle of length >= 3"));
        let mut scores = BCScores::zeros(n);
        for (pos, &v) in order.iter().enumerate() {
            scores[v] = cycle_scores[pos];
        }
        return (scores, stats);
    }

    let t0 = Instant::now();
    let (st, mut inc) = init_tables(block).expect("non-cycle block");
    stats.tables = t0.elapsed();
    stats.sources = st.sources.len();
    stats.table_bytes = st.table_bytes() + inc.table_bytes();

    let paths = find_max_paths(g).expect("non-cycle block");
    stats.max_paths = paths.len();
    let k = g.edge_count() - n + 1;
    debug_assert!(st.sources.len() <= n.min(2 * k));
    debug_assert!(paths.len() <= n.min(3 * k));

    let t1 = Instant::now();
    let mut scores = BCScores::zeros(n);
    let prefixes: Vec<PathPrefix> =
        paths.iter().map(|p| path_prefix_sums(p, &block.pend)).collect();
    for (i, p1) in paths.iter().enumerate() {
        for (j, p2) in paths.iter().enumerate() {
            if i == j {
                continue;
            }
            pair_outside(p1, p2, &st, &block.pend, &prefixes[i], &mut inc, faults);
            let credits = pair_inside(p1, p2, &st, &block.pend, &prefixes[i], faults);
            for (pos, &v) in p2.vertices.iter().enumerate() {
                scores[v] += credits[pos];
            }
        }
    }
    for (i, p) in paths.iter().enumerate() {
        let alpha = single_inside_alpha(p, &block.pend, &prefixes[i], &st, faults);
        let beta = single_outside_beta(p, &block.pend, &prefixes[i], &st, &mut inc, faults);
        for (pos, &v) in p.vertices.iter().enumerate() {
            scores[v] += alpha[pos] + beta[pos];
        }
    }
    stats.paths = t1.elapsed();

    stats.inc_audit_ok = audit_inc(&inc, &st, &paths);

    let t2 = Instant::now();
    postprocess(&st, &inc, &mut scores);
    stats.postprocess = t2.elapsed();
    (scores, stats)
}

/// Post-init Inc writes may only land on endpoint pairs of maximal induced
/// paths, never on the diagonal.
fn audit_inc(inc: &IncTable, st: &SourceTables, paths: &[MaxPath]) -> bool {
    if inc.diagonal_write {
        return false;
    }
    let endpoints: HashSet<VertexId> =
        paths.iter().flat_map(|p| [p.first(), p.last()]).collect();
    inc.touched.iter().all(|&(si, t)| {
        let s = st.sources[si as usize];
        let t = t as usize;
        s != t
            && endpoints.contains(&s)
            && endpoints.contains(&t)
            && st.source_idx[t] != u32::MAX
    })
}

fn cycle_order(g: &Graph) -> Vec<VertexId> {
    let mut order = vec![0];
    let (mut prev, mut cur) = (0, g.neighbors(0)[0]);
    while cur != 0 {
        order.push(cur);
        let next =
            if g.neighbors(cur)[0] == prev { g.neighbors(cur)[1] } else { g.neighbors(cur)[0] };
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(order.len(), g.vertex_count());
    order
}
