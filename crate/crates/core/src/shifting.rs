//! The `(i, j)`-shift and stabilization.
//!
//! `S_ij` replaces `j` by `i` in every edge that contains `j` but not `i`,
//! unless the replacement is already an edge. It keeps `e(H)` and never
//! raises `ν(H)`. A hypergraph fixed by every `S_ij` with `i < j` is
//! *stable*, which is the same as being a down-set of the componentwise
//! order on sorted `k`-tuples.

use std::collections::HashSet;

use crate::combinatorics::KSubsets;
use crate::error::{invalid, Result};
use crate::hypergraph::{EdgeMask, UniformHypergraph};

fn check_pair(h: &UniformHypergraph, i: usize, j: usize) -> Result<()> {
    if i == 0 || i >= j || j > h.n() {
        return invalid(format!("shift needs 1 <= i < j <= {}, got ({i}, {j})", h.n()));
    }
    Ok(())
}

#[inline]
fn shifted(edges: &HashSet<EdgeMask>, e: EdgeMask, ibit: EdgeMask, jbit: EdgeMask) -> EdgeMask {
    if e & jbit != 0 && e & ibit == 0 {
        let moved = (e & !jbit) | ibit;
        if !edges.contains(&moved) {
            return moved;
        }
    }
    e
}

/// `S_ij(e)` for an edge `e` of `h`.
pub fn shift_edge(h: &UniformHypergraph, i: usize, j: usize, e: EdgeMask) -> Result<EdgeMask> {
    check_pair(h, i, j)?;
    if !h.contains(e) {
        return invalid("shift_edge expects an edge of the hypergraph");
    }
    let ibit = 1u64 << (i - 1);
    let jbit = 1u64 << (j - 1);
    if e & jbit != 0 && e & ibit == 0 {
        let moved = (e & !jbit) | ibit;
        if !h.contains(moved) {
            return Ok(moved);
        }
    }
    Ok(e)
}

/// `S_ij(H)`.
pub fn shift(h: &UniformHypergraph, i: usize, j: usize) -> Result<UniformHypergraph> {
    check_pair(h, i, j)?;
    let set: HashSet<EdgeMask> = h.edges().iter().copied().collect();
    Ok(apply_shift(h, &set, i, j).0)
}

fn apply_shift(
    h: &UniformHypergraph,
    set: &HashSet<EdgeMask>,
    i: usize,
    j: usize,
) -> (UniformHypergraph, usize) {
    let ibit = 1u64 << (i - 1);
    let jbit = 1u64 << (j - 1);
    let mut moved = 0;
    let mut out: Vec<EdgeMask> = h
        .edges()
        .iter()
        .map(|&e| {
            let t = shifted(set, e, ibit, jbit);
            moved += usize::from(t != e);
            t
        })
        .collect();
    out.sort_unstable();
    (UniformHypergraph::from_sorted_unchecked(h.n(), h.k(), out), moved)
}

/// One shift of a stabilization run that moved at least one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftStep {
    pub sweep: usize,
    pub i: usize,
    pub j: usize,
    pub moved: usize,
}

/// `S(H)`: sweeps all pairs `i < j` in lexicographic order until a sweep
/// moves nothing.
pub fn stabilize(h: &UniformHypergraph) -> UniformHypergraph {
    stabilize_traced(h).0
}

/// [`stabilize`] plus the list of shifts that moved edges.
pub fn stabilize_traced(h: &UniformHypergraph) -> (UniformHypergraph, Vec<ShiftStep>) {
    let mut cur = h.clone();
    let mut trace = Vec::new();
    let n = h.n();
    for sweep in 0.. {
        let mut changed = false;
        for i in 1..n {
            for j in i + 1..=n {
                let set: HashSet<EdgeMask> = cur.edges().iter().copied().collect();
                let (next, moved) = apply_shift(&cur, &set, i, j);
                if moved > 0 {
                    changed = true;
                    trace.push(ShiftStep { sweep, i, j, moved });
                    cur = next;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (cur, trace)
}

/// Whether every shift fixes `h`.
pub fn is_stable(h: &UniformHypergraph) -> bool {
    let set: HashSet<EdgeMask> = h.edges().iter().copied().collect();
    let n = h.n();
    (1..n).all(|i| {
        (i + 1..=n).all(|j| {
            let ibit = 1u64 << (i - 1);
            let jbit = 1u64 << (j - 1);
            h.edges().iter().all(|&e| shifted(&set, e, ibit, jbit) == e)
        })
    })
}

/// `u ≤ v` componentwise on the ascending vertex tuples of two `k`-sets.
pub fn dominated_by(u: EdgeMask, v: EdgeMask) -> bool {
    // The t-th smallest element of u is at most that of v, for every t,
    // iff every prefix [1, p] holds at least as many elements of u as of v.
    let mut pu = 0u32;
    let mut pv = 0u32;
    let mut bits = u | v;
    while bits != 0 {
        let low = bits & bits.wrapping_neg();
        pu += u32::from(u & low != 0);
        pv += u32::from(v & low != 0);
        if pu < pv {
            return false;
        }
        bits ^= low;
    }
    true
}

/// Down-closure under componentwise dominance, checked pair by pair over
/// all `k`-subsets of `[n]`. Independent of the shift operator.
pub fn is_dominance_closed(h: &UniformHypergraph) -> bool {
    let candidates: Vec<EdgeMask> = KSubsets::new(h.n(), h.k()).collect();
    h.edges().iter().all(|&v| {
        candidates
            .iter()
            .filter(|&&u| dominated_by(u, v))
            .all(|&u| h.contains(u))
    })
}
