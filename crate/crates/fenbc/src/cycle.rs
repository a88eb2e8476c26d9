//! Linear-time weighted betweenness on a pure cycle.
//!
//! The base score of `x_0` is assembled from two explicit arc sums; every
//! following score comes from a constant-time sliding update. Antipode
//! indices are half-integers, kept exact as doubled integers.

#![allow(clippy::manual_is_multiple_of, clippy::manual_div_ceil)]

use std::fmt;

use crate::graph::BCScores;

/// A cycle `x_0 .. x_q x_0` given by its pend weights in cyclic order,
/// with a prefix-sum table for O(1) arc weight queries.
pub struct CycleInstance {
    pend: Vec<u64>,
    prefix: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidCycle(pub usize);

impl fmt::Display for InvalidCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycle needs at least 3 vertices, got {}", self.0)
    }
}

impl std::error::Error for InvalidCycle {}

impl CycleInstance {
    pub fn new(pend: Vec<u64>) -> Result<CycleInstance, InvalidCycle> {
        if pend.len() < 3 {
            return Err(InvalidCycle(pend.len()));
        }
        let mut prefix = Vec::with_capacity(pend.len());
        let mut acc = 0;
        for &p in &pend {
            acc += p;
            prefix.push(acc);
        }
        Ok(CycleInstance { pend, prefix })
    }

    pub fn len(&self) -> usize {
        self.pend.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sum of pend values from `x_i` to `x_j` inclusive, clockwise
    /// (wrapping past `x_q` when `i > j`).
    fn arc_weight(&self, i: usize, j: usize) -> u64 {
        let lead = if i == 0 { 0 } else { self.prefix[i - 1] };
        if i <= j {
            self.prefix[j] - lead
        } else {
            self.prefix[self.len() - 1] - lead + self.prefix[j]
        }
    }
}

/// Antipode bookkeeping for position `i` on a cycle with top index `q`:
/// `phi = ((q+1)/2 + i) mod (q+1)` stored doubled so half-integers stay
/// exact, plus the neighboring integer indices on each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Opposite {
    /// `2 * phi`, reduced modulo `2(q+1)`.
    pub phi_doubled: usize,
    /// Index left of the antipode: `ceil(phi) - 1 mod (q+1)`.
    pub left: usize,
    /// Index right of the antipode: `floor(phi) + 1 mod (q+1)`.
    pub right: usize,
    /// Whether an antipodal vertex exists.
    pub integral: bool,
}

pub fn opposite_index(i: usize, q: usize) -> Opposite {
    let len = q + 1;
    let pd = (len + 2 * i) % (2 * len);
    if pd % 2 == 0 {
        let phi = pd / 2;
        Opposite { phi_doubled: pd, left: (phi + q) % len, right: (phi + 1) % len, integral: true }
    } else {
        Opposite {
            phi_doubled: pd,
            left: ((pd - 1) / 2) % len,
            right: ((pd + 1) / 2) % len,
            integral: false,
        }
    }
}

/// Weighted betweenness of every cycle vertex, ordered-pair convention.
pub fn cycle_bc(c: &CycleInstance) -> BCScores {
    let len = c.len();
    let q = len - 1;
    // Farthest strictly-closer target distance along one direction.
    let d_max = q / 2;
    let pend_f = |i: usize| c.pend[i] as f64;
    // Antipodal pend, zero when no antipodal vertex exists.
    let anti = |i: usize| -> f64 {
        let o = opposite_index(i, q);
        if o.integral { c.pend[o.phi_doubled / 2] as f64 } else { 0.0 }
    };

    // Base case: gather, for each other start x_i, the targets whose
    // shortest paths pass x_0, split by which side of x_0 the start is on.
    let o0 = opposite_index(0, q);
    let mut bc0 = 0.0;
    for i in 1..=o0.left {
        // phi(i) = (q+1)/2 + i, no wrap in this range
        let pd = (q + 1) + 2 * i;
        let tie = if pd % 2 == 0 { pend_f(pd / 2) } else { 0.0 };
        let beyond_lo = pd / 2 + 1; // floor(phi) + 1
        let beyond = if beyond_lo <= q { c.arc_weight(beyond_lo, q) as f64 } else { 0.0 };
        bc0 += pend_f(i) * (0.5 * tie + beyond);
    }
    for i in o0.right..=q {
        if i == 0 {
            continue;
        }
        // phi(i) = i - (q+1)/2 after the wrap
        let pd = 2 * i - (q + 1);
        let tie = if pd % 2 == 0 { pend_f(pd / 2) } else { 0.0 };
        let before_hi = (pd - 1) / 2; // ceil(phi) - 1 for either parity
        let before = if before_hi >= 1 { c.arc_weight(1, before_hi) as f64 } else { 0.0 };
        bc0 += pend_f(i) * (0.5 * tie + before);
    }

    // Sliding update: moving from x_k to x_{k+1} drops the paths that start
    // in x_{k+1} and cross x_k, and gains those that start in x_k and cross
    // x_{k+1}; each side is an antipodal tie plus a far-arc weight.
    let mut scores = vec![0.0; len];
    scores[0] = bc0;
    for k in 0..q {
        let next = k + 1;
        let sub_arc = if d_max >= 2 {
            c.arc_weight((next + len - d_max) % len, (k + len - 1) % len) as f64
        } else {
            0.0
        };
        let add_arc = if d_max >= 2 {
            c.arc_weight((k + 2) % len, (k + d_max) % len) as f64
        } else {
            0.0
        };
        scores[next] = scores[k] - pend_f(next) * (anti(next) + 2.0 * sub_arc)
            + pend_f(k) * (anti(k) + 2.0 * add_arc);
    }
    BCScores(scores)
}
