//! The named extremal hypergraphs and greedy saturation.
//!
//! * `D^k_{n,s}(U)`: every `k`-subset of a `(k(s+1) - 1)`-set `U`.
//! * `H^k_{n,s}(U, W)`: every `k`-subset of `[n]` meeting an `s`-set `W`.
//! * `𝒟(n, s)` (3-graphs only): all triples of `[3s+1]`, plus `{1, i, x}` for
//!   `3s+2 <= i <= n` and `2 <= x <= 3s+1`. It has `ν = s` and exactly
//!   `C(3s+1, 3) + 3s(n-3s-1)` edges while spanning more than `3s+2` vertices.
//!
//! Both `D` and `H` have matching number `s` once `n >= ks + k - 1`; the
//! builders accept smaller `n` and [`ConstructionSpec::matching_number_guaranteed`]
//! reports whether that bound holds.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{mask_vertices, KSubsets};
use crate::error::{invalid, Result};
use crate::hypergraph::{full_mask, vertex_mask, EdgeMask, UniformHypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstructionKind {
    D,
    Hcover,
    DScript,
}

/// Parameters naming one construction. Serializes as
/// `{"kind":"D|Hcover|DScript","n":…,"k":…,"s":…,"U":[…],"W":[…]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    #[serde(rename = "U", default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<usize>>,
    #[serde(rename = "W", default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<usize>>,
}

impl ConstructionSpec {
    pub fn new(kind: ConstructionKind, n: usize, k: usize, s: usize) -> Self {
        ConstructionSpec {
            kind,
            n,
            k,
            s,
            u: None,
            w: None,
        }
    }

    /// Fills in the default `U`/`W` and checks the size constraints.
    pub fn resolved(&self) -> Result<Self> {
        let mut out = self.clone();
        match self.kind {
            ConstructionKind::D => {
                let u = clique_set(self.n, self.k, self.s, self.u.as_deref())?;
                if self.w.is_some() {
                    return invalid("the D construction takes no W");
                }
                out.u = Some(mask_vertices(u));
            }
            ConstructionKind::Hcover => {
                let w = cover_set(self.n, self.s, self.w.as_deref())?;
                let rest = full_mask(self.n) & !w;
                if let Some(u) = &self.u {
                    if vertex_mask(self.n, u)? != rest {
                        return invalid("U must be the complement of W");
                    }
                }
                out.w = Some(mask_vertices(w));
                out.u = Some(mask_vertices(rest));
            }
            ConstructionKind::DScript => {
                check_dscript(self.n, self.k, self.s)?;
                if self.u.is_some() || self.w.is_some() {
                    return invalid("the DScript construction takes no U or W");
                }
            }
        }
        Ok(out)
    }

    pub fn build(&self) -> Result<UniformHypergraph> {
        match self.kind {
            ConstructionKind::D => build_d(self.n, self.k, self.s, self.u.as_deref()),
            ConstructionKind::Hcover => build_hcover(self.n, self.k, self.s, self.w.as_deref()),
            ConstructionKind::DScript => {
                check_dscript(self.n, self.k, self.s)?;
                build_dscript(self.n, self.s)
            }
        }
    }

    /// Whether `ν = s` is a known property of the output at these parameters.
    pub fn matching_number_guaranteed(&self) -> bool {
        match self.kind {
            ConstructionKind::D | ConstructionKind::Hcover => self.n >= self.k * self.s + self.k - 1,
            ConstructionKind::DScript => self.n >= 3 * self.s + 2,
        }
    }
}

fn check_dscript(n: usize, k: usize, s: usize) -> Result<()> {
    if k != 3 {
        return invalid("DScript is defined for 3-graphs only");
    }
    if n < 3 * s + 2 {
        return invalid(format!("DScript needs n >= 3s + 2 = {}, got n = {n}", 3 * s + 2));
    }
    Ok(())
}

fn clique_set(n: usize, k: usize, s: usize, u: Option<&[usize]>) -> Result<EdgeMask> {
    let size = k * (s + 1) - 1;
    if size > n {
        return invalid(format!("|U| = k(s+1) - 1 = {size} exceeds n = {n}"));
    }
    match u {
        None => Ok(full_mask(size)),
        Some(u) => {
            let mask = vertex_mask(n, u)?;
            if u.len() != size {
                return invalid(format!("|U| must be k(s+1) - 1 = {size}, got {}", u.len()));
            }
            Ok(mask)
        }
    }
}

fn cover_set(n: usize, s: usize, w: Option<&[usize]>) -> Result<EdgeMask> {
    if s > n {
        return invalid(format!("|W| = s = {s} exceeds n = {n}"));
    }
    match w {
        None => Ok(full_mask(s)),
        Some(w) => {
            let mask = vertex_mask(n, w)?;
            if w.len() != s {
                return invalid(format!("|W| must be s = {s}, got {}", w.len()));
            }
            Ok(mask)
        }
    }
}

/// `D^k_{n,s}(U)`; `U` defaults to `{1, …, k(s+1) - 1}`.
pub fn build_d(n: usize, k: usize, s: usize, u: Option<&[usize]>) -> Result<UniformHypergraph> {
    UniformHypergraph::empty(n, k)?;
    let u = clique_set(n, k, s, u)?;
    UniformHypergraph::from_predicate(n, k, |e| e & !u == 0)
}

/// `H^k_{n,s}(U, W)` with `U = [n] \ W`; `W` defaults to `{1, …, s}`.
pub fn build_hcover(n: usize, k: usize, s: usize, w: Option<&[usize]>) -> Result<UniformHypergraph> {
    UniformHypergraph::empty(n, k)?;
    let w = cover_set(n, s, w)?;
    UniformHypergraph::from_predicate(n, k, |e| e & w != 0)
}

/// `𝒟(n, s)`.
pub fn build_dscript(n: usize, s: usize) -> Result<UniformHypergraph> {
    check_dscript(n, 3, s)?;
    let base = full_mask(3 * s + 1);
    UniformHypergraph::from_predicate(n, 3, |e| {
        if e & !base == 0 {
            return true;
        }
        // {1, i, x} with i > 3s + 1 and 2 <= x <= 3s + 1
        let outside = e & !base;
        e & 1 != 0 && outside.count_ones() == 1 && (e & base & !1) != 0
    })
}

/// Adds `k`-subsets in colex order, each one only when `ν` stays at most `s`.
/// The result is `s`-saturated.
pub fn saturate(h: &UniformHypergraph, s: usize) -> Result<UniformHypergraph> {
    if h.has_matching_of_size(s + 1) {
        return invalid(format!("input already has a matching of size {}", s + 1));
    }
    let mut cur = h.clone();
    for e in KSubsets::new(h.n(), h.k()) {
        if cur.contains(e) {
            continue;
        }
        let bigger = cur.with_edge(e)?;
        if !bigger.has_matching_of_size(s + 1) {
            cur = bigger;
        }
    }
    Ok(cur)
}

/// `ν(H) <= s` and every absent edge would create an `(s+1)`-matching.
pub fn is_saturated(h: &UniformHypergraph, s: usize) -> bool {
    if h.has_matching_of_size(s + 1) {
        return false;
    }
    KSubsets::new(h.n(), h.k())
        .filter(|&e| !h.contains(e))
        .all(|e| h.with_edge(e).is_ok_and(|g| g.has_matching_of_size(s + 1)))
}

/// Whether `h` fits inside some `D^k_{n,s}(U)`: its non-isolated vertices
/// number at most `k(s+1) - 1`.
pub fn is_subgraph_of_d(h: &UniformHypergraph, s: usize) -> bool {
    (h.support().count_ones() as usize) < h.k() * (s + 1)
}

/// Whether `h` fits inside some `H^k_{n,s}(U, W)`: some `s`-set meets every edge.
pub fn is_subgraph_of_hcover(h: &UniformHypergraph, s: usize) -> bool {
    s <= h.n() && hitting_set(h.edges(), 0, s).is_some()
}

/// A vertex set of size at most `budget` meeting every edge, if one exists.
pub fn hitting_set(edges: &[EdgeMask], chosen: EdgeMask, budget: usize) -> Option<EdgeMask> {
    let Some(&open) = edges.iter().find(|&&e| e & chosen == 0) else {
        return Some(chosen);
    };
    if budget == 0 {
        return None;
    }
    crate::combinatorics::iter_bits(open).find_map(|v| hitting_set(edges, chosen | v, budget - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::small_binomial;

    #[test]
    fn d_examples() {
        let d = build_d(9, 3, 2, None).unwrap();
        assert_eq!(d.edge_count(), 56);
        assert_eq!(d.matching_number(), 2);
        assert_eq!(build_d(12, 3, 3, None).unwrap().edge_count(), 165);
        assert!(build_d(9, 3, 2, Some(&[1, 2, 3])).is_err());
        assert!(build_d(7, 3, 2, None).is_err());
    }

    #[test]
    fn hcover_examples() {
        let h = build_hcover(7, 3, 2, None).unwrap();
        assert_eq!(h.edge_count(), 25);
        assert_eq!(h.matching_number(), 2);
        assert_eq!(build_hcover(6, 3, 1, None).unwrap().edge_count(), 10);
        assert!(build_hcover(7, 3, 2, Some(&[1])).is_err());
    }

    #[test]
    fn dscript_examples() {
        let d = build_dscript(9, 2).unwrap();
        assert_eq!(d.edge_count(), 47);
        assert_eq!(d.matching_number(), 2);
        assert_eq!(d.support().count_ones(), 9);
        assert!(!is_subgraph_of_d(&d, 2));
        assert!(build_dscript(7, 2).is_err());
        for (n, s) in [(8, 2), (10, 2), (11, 3), (14, 3)] {
            let d = build_dscript(n, s).unwrap();
            let expected = small_binomial(3 * s + 1, 3) as usize + 3 * s * (n - 3 * s - 1);
            assert_eq!(d.edge_count(), expected);
            assert_eq!(d.matching_number(), s);
        }
    }

    #[test]
    fn saturate_examples() {
        let empty = UniformHypergraph::empty(6, 3).unwrap();
        let sat = saturate(&empty, 1).unwrap();
        assert_eq!(sat, UniformHypergraph::complete(5, 3).map(|k5| {
            UniformHypergraph::from_masks(6, 3, k5.edges().iter().copied()).unwrap()
        }).unwrap());
        assert!(is_saturated(&sat, 1));
        let k9 = UniformHypergraph::complete(9, 3).unwrap();
        assert_eq!(saturate(&k9, 3).unwrap(), k9);
        assert!(saturate(&k9, 2).is_err());
    }

    #[test]
    fn subgraph_checks() {
        assert!(is_subgraph_of_d(&build_d(9, 3, 2, None).unwrap(), 2));
        let h = build_hcover(7, 3, 2, None).unwrap();
        assert!(is_subgraph_of_hcover(&h, 2));
        assert!(!is_subgraph_of_hcover(&h, 1));
        assert!(!is_subgraph_of_hcover(&build_dscript(9, 2).unwrap(), 1));
        let w = build_hcover(8, 3, 2, Some(&[4, 7])).unwrap();
        assert!(is_subgraph_of_hcover(&w, 2));
    }

    #[test]
    fn spec_json_shape() {
        let spec = ConstructionSpec::new(ConstructionKind::Hcover, 7, 3, 2).resolved().unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"Hcover","n":7,"k":3,"s":2,"U":[3,4,5,6,7],"W":[1,2]}"#
        );
        let back: ConstructionSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build().unwrap(), build_hcover(7, 3, 2, None).unwrap());

        let d: ConstructionSpec = serde_json::from_str(r#"{"kind":"D","n":9,"k":3,"s":2}"#).unwrap();
        assert_eq!(d.build().unwrap().edge_count(), 56);
        assert!(d.matching_number_guaranteed());
        let bad: ConstructionSpec =
            serde_json::from_str(r#"{"kind":"DScript","n":7,"k":3,"s":2}"#).unwrap();
        assert!(bad.resolved().is_err());
        let small = ConstructionSpec::new(ConstructionKind::D, 7, 3, 2);
        assert!(!small.matching_number_guaranteed());
    }
}
