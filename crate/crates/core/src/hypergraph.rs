//! Canonical `k`-uniform hypergraphs and their exact solvers.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{mask_vertices, small_binomial, subsets_of, KSubsets};
use crate::error::{invalid, Error, Result};
use crate::MAX_VERTICES;

/// A set of vertices of `[n]`, bit `v - 1` standing for vertex `v`.
pub type EdgeMask = u64;

/// Mask of the 1-based vertex list, validated against `[n]`.
pub fn vertex_mask(n: usize, vertices: &[usize]) -> Result<EdgeMask> {
    let mut mask = 0u64;
    for &v in vertices {
        if v == 0 || v > n {
            return invalid(format!("vertex {v} is outside [1, {n}]"));
        }
        let bit = 1u64 << (v - 1);
        if mask & bit != 0 {
            return invalid(format!("vertex {v} repeated"));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Mask of all of `[n]`.
pub fn full_mask(n: usize) -> EdgeMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            size: n as u64,
            limit: MAX_VERTICES as u64,
        });
    }
    Ok(())
}

/// A `k`-graph on `[n]`. Edges are kept sorted (colex) and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<EdgeMask>,
}

impl UniformHypergraph {
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        check_order(n)?;
        if k < 2 {
            return invalid(format!("uniformity must be at least 2, got {k}"));
        }
        Ok(UniformHypergraph {
            n,
            k,
            edges: Vec::new(),
        })
    }

    /// `K^k_n`.
    pub fn complete(n: usize, k: usize) -> Result<Self> {
        let mut h = Self::empty(n, k)?;
        h.edges = KSubsets::new(n, k).collect();
        Ok(h)
    }

    /// Builds from edge masks; rejects wrong sizes, stray vertices and duplicates.
    pub fn from_masks(n: usize, k: usize, masks: impl IntoIterator<Item = EdgeMask>) -> Result<Self> {
        let mut h = Self::empty(n, k)?;
        let all = full_mask(n);
        for e in masks {
            if e & !all != 0 {
                return invalid(format!("edge {:?} leaves [1, {n}]", mask_vertices(e)));
            }
            if e.count_ones() as usize != k {
                return invalid(format!("edge {:?} does not have {k} vertices", mask_vertices(e)));
            }
            h.edges.push(e);
        }
        h.edges.sort_unstable();
        if let Some(w) = h.edges.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("duplicate edge {:?}", mask_vertices(w[0])));
        }
        Ok(h)
    }

    /// Builds from 1-based vertex lists.
    pub fn from_edges<E: AsRef<[usize]>>(n: usize, k: usize, edges: impl IntoIterator<Item = E>) -> Result<Self> {
        let masks = edges
            .into_iter()
            .map(|e| vertex_mask(n, e.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, k, masks)
    }

    /// All `k`-subsets of `[n]` satisfying `keep`.
    pub fn from_predicate(n: usize, k: usize, keep: impl Fn(EdgeMask) -> bool) -> Result<Self> {
        let mut h = Self::empty(n, k)?;
        h.edges = KSubsets::new(n, k).filter(|&e| keep(e)).collect();
        Ok(h)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, k: usize, edges: Vec<EdgeMask>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        UniformHypergraph { n, k, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `e(H)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge masks in colex order.
    pub fn edges(&self) -> &[EdgeMask] {
        &self.edges
    }

    pub fn edge_lists(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.edges.iter().map(|&e| mask_vertices(e))
    }

    pub fn contains(&self, edge: EdgeMask) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    /// Union of all edges.
    pub fn support(&self) -> EdgeMask {
        self.edges.iter().fold(0, |acc, e| acc | e)
    }

    /// Copy with one more edge. Adding an existing edge is a no-op.
    pub fn with_edge(&self, edge: EdgeMask) -> Result<Self> {
        if edge & !full_mask(self.n) != 0 || edge.count_ones() as usize != self.k {
            return invalid(format!("{:?} is not a {}-subset of [{}]", mask_vertices(edge), self.k, self.n));
        }
        let mut out = self.clone();
        if let Err(pos) = out.edges.binary_search(&edge) {
            out.edges.insert(pos, edge);
        }
        Ok(out)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return invalid(format!("vertex {v} is outside [1, {}]", self.n));
        }
        Ok(())
    }

    /// `d_H(v)`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        let bit = 1u64 << (v - 1);
        Ok(self.edges.iter().filter(|&&e| e & bit != 0).count())
    }

    /// `N_H(v)`: the `(k-1)`-sets that complete an edge through `v`.
    pub fn neighborhood(&self, v: usize) -> Result<SetFamily> {
        self.check_vertex(v)?;
        let bit = 1u64 << (v - 1);
        let members = self
            .edges
            .iter()
            .filter(|&&e| e & bit != 0)
            .map(|&e| e & !bit)
            .collect::<Vec<_>>();
        SetFamily::from_masks(self.n, self.k - 1, members)
    }

    /// `δ₁(H)`; zero for `n = 0`.
    pub fn min_degree(&self) -> usize {
        (1..=self.n)
            .map(|v| self.degree(v).expect("vertex in range"))
            .min()
            .unwrap_or(0)
    }

    /// `H[S]`: the edges contained in `S`. Vertex ids and `n` are kept.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let keep = vertex_mask(self.n, vertices)?;
        Ok(self.induced_mask(keep))
    }

    pub(crate) fn induced_mask(&self, keep: EdgeMask) -> Self {
        let edges = self.edges.iter().copied().filter(|&e| e & !keep == 0).collect();
        Self::from_sorted_unchecked(self.n, self.k, edges)
    }

    /// `H − S`: drops every edge meeting `S`. Vertex ids and `n` are kept.
    pub fn remove_vertices(&self, vertices: &[usize]) -> Result<Self> {
        let drop = vertex_mask(self.n, vertices)?;
        Ok(self.induced_mask(full_mask(self.n) & !drop))
    }

    /// `H − E'`; every removed edge must be present.
    pub fn remove_edges(&self, removed: &[EdgeMask]) -> Result<Self> {
        let mut drop = HashSet::with_capacity(removed.len());
        for &e in removed {
            if !self.contains(e) {
                return invalid(format!("edge {:?} is not in the hypergraph", mask_vertices(e)));
            }
            drop.insert(e);
        }
        let edges = self.edges.iter().copied().filter(|e| !drop.contains(e)).collect();
        Ok(Self::from_sorted_unchecked(self.n, self.k, edges))
    }

    /// `ν(H)`, exact.
    pub fn matching_number(&self) -> usize {
        self.maximum_matching().size()
    }

    /// A maximum matching found by branch and bound.
    ///
    /// The search branches on the lowest vertex still covered by a live
    /// edge: either that vertex is matched through one of its edges (tried in
    /// colex order) or it is discarded together with its edges. A branch is
    /// cut when `depth + min(live edges, ⌊live vertices / k⌋)` cannot beat
    /// the incumbent, which is seeded by a greedy colex matching.
    pub fn maximum_matching(&self) -> Matching {
        let mut search = MatchingSearch::new(self.k, usize::MAX);
        search.seed_greedy(&self.edges);
        search.run(&self.edges);
        Matching::from_sorted(search.best)
    }

    /// `ν(H) >= s`, stopping at the first `s`-matching found.
    pub fn has_matching_of_size(&self, s: usize) -> bool {
        self.find_matching_of_size(s).is_some()
    }

    pub fn find_matching_of_size(&self, s: usize) -> Option<Matching> {
        if s == 0 {
            return Some(Matching::from_sorted(Vec::new()));
        }
        if s * self.k > self.n || s > self.edges.len() {
            return None;
        }
        let mut search = MatchingSearch::new(self.k, s);
        search.seed_greedy(&self.edges);
        search.run(&self.edges);
        (search.best.len() >= s).then(|| Matching::from_sorted(search.best[..s].to_vec()))
    }

    /// `ω(H)`: the largest vertex set whose `k`-subsets are all edges.
    /// Returns 0 for the empty hypergraph.
    pub fn clique_number(&self) -> usize {
        if self.edges.is_empty() {
            return 0;
        }
        let edge_set: HashSet<EdgeMask> = self.edges.iter().copied().collect();
        let degrees: Vec<u64> = (1..=self.n)
            .map(|v| self.degree(v).expect("vertex in range") as u64)
            .collect();
        let mut search = CliqueSearch {
            k: self.k,
            edges: &edge_set,
            degrees,
            best: self.k,
        };
        let candidates = (0..self.n).filter(|&p| search.degrees[p] > 0).collect::<Vec<_>>();
        search.grow(0, 0, &candidates);
        search.best
    }

    /// Text form: `n k m`, then one ascending vertex list per edge in colex order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.k, self.edges.len());
        for e in &self.edges {
            push_vertices(&mut out, *e);
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n k m`".into(),
        })?;
        let head = parse_numbers(header, hline + 1)?;
        let [n, k, m] = head[..] else {
            return Err(Error::Parse {
                line: hline + 1,
                message: format!("header needs 3 numbers, found {}", head.len()),
            });
        };
        let mut h = Self::empty(n, k).map_err(|e| parse_error(hline + 1, e))?;
        let mut seen = HashSet::new();
        for (idx, line) in lines {
            let verts = parse_numbers(line, idx + 1)?;
            if verts.len() != k {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected {k} vertices, found {}", verts.len()),
                });
            }
            let e = vertex_mask(n, &verts).map_err(|e| parse_error(idx + 1, e))?;
            if !seen.insert(e) {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("duplicate edge {verts:?}"),
                });
            }
            h.edges.push(e);
        }
        if h.edges.len() != m {
            return Err(Error::Parse {
                line: hline + 1,
                message: format!("header announces {m} edges, file has {}", h.edges.len()),
            });
        }
        h.edges.sort_unstable();
        Ok(h)
    }
}

impl fmt::Display for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub(crate) fn push_vertices(out: &mut String, mask: EdgeMask) {
    let mut first = true;
    for v in mask_vertices(mask) {
        if !first {
            out.push(' ');
        }
        first = false;
        out.push_str(&v.to_string());
    }
}

pub(crate) fn parse_numbers(line: &str, line_no: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{tok}` is not a non-negative integer"),
            })
        })
        .collect()
}

pub(crate) fn parse_error(line: usize, err: Error) -> Error {
    match err {
        Error::Parse { .. } => err,
        other => Error::Parse {
            line,
            message: other.to_string(),
        },
    }
}

/// Whether some `s` of the given `k`-sets are pairwise disjoint.
pub(crate) fn masks_have_matching(edges: &[EdgeMask], k: usize, s: usize) -> bool {
    if s == 0 {
        return true;
    }
    let mut search = MatchingSearch::new(k, s);
    search.seed_greedy(edges);
    search.run(edges);
    search.done()
}

struct MatchingSearch {
    k: u32,
    target: usize,
    best: Vec<EdgeMask>,
    stack: Vec<EdgeMask>,
}

impl MatchingSearch {
    fn new(k: usize, target: usize) -> Self {
        MatchingSearch {
            k: k as u32,
            target,
            best: Vec::new(),
            stack: Vec::new(),
        }
    }

    fn seed_greedy(&mut self, edges: &[EdgeMask]) {
        let mut covered = 0u64;
        let mut greedy = Vec::new();
        for &e in edges {
            if e & covered == 0 {
                covered |= e;
                greedy.push(e);
            }
        }
        self.best = greedy;
    }

    fn done(&self) -> bool {
        self.best.len() >= self.target
    }

    fn run(&mut self, edges: &[EdgeMask]) {
        if self.done() {
            return;
        }
        let depth = self.stack.len();
        if depth > self.best.len() {
            self.best = self.stack.clone();
            if self.done() {
                return;
            }
        }
        if edges.is_empty() {
            return;
        }
        let support = edges.iter().fold(0u64, |acc, e| acc | e);
        let bound = depth + edges.len().min((support.count_ones() / self.k) as usize);
        if bound <= self.best.len() {
            return;
        }
        let v = support & support.wrapping_neg();
        for &e in edges.iter().filter(|&&e| e & v != 0) {
            let rest: Vec<EdgeMask> = edges.iter().copied().filter(|&f| f & e == 0).collect();
            self.stack.push(e);
            self.run(&rest);
            self.stack.pop();
            if self.done() {
                return;
            }
        }
        let rest: Vec<EdgeMask> = edges.iter().copied().filter(|&f| f & v == 0).collect();
        self.run(&rest);
    }
}

struct CliqueSearch<'a> {
    k: usize,
    edges: &'a HashSet<EdgeMask>,
    degrees: Vec<u64>,
    best: usize,
}

impl CliqueSearch<'_> {
    // `current` is complete; `candidates` are bit positions above it, each of
    // which can extend it on its own.
    fn grow(&mut self, current: EdgeMask, size: usize, candidates: &[usize]) {
        if size > self.best {
            self.best = size;
        }
        if size + candidates.len() <= self.best {
            return;
        }
        for (idx, &p) in candidates.iter().enumerate() {
            let remaining = candidates.len() - idx;
            if size + remaining <= self.best {
                return;
            }
            // Every vertex of a clique of order best + 1 has degree at least
            // C(best, k - 1).
            if self.degrees[p] < small_binomial(self.best, self.k - 1) {
                continue;
            }
            let next = current | (1u64 << p);
            let further: Vec<usize> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&q| self.extends(next, q))
                .collect();
            self.grow(next, size + 1, &further);
        }
    }

    fn extends(&self, clique: EdgeMask, p: usize) -> bool {
        let bit = 1u64 << p;
        subsets_of(clique, self.k - 1).all(|f| self.edges.contains(&(f | bit)))
    }
}

/// A set of pairwise disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<EdgeMask>,
}

impl Matching {
    pub fn new(edges: Vec<EdgeMask>) -> Result<Self> {
        let mut covered = 0u64;
        for &e in &edges {
            if e & covered != 0 {
                return invalid(format!("edge {:?} overlaps an earlier edge", mask_vertices(e)));
            }
            covered |= e;
        }
        Ok(Self::from_sorted(edges))
    }

    fn from_sorted(mut edges: Vec<EdgeMask>) -> Self {
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeMask] {
        &self.edges
    }

    pub fn covered(&self) -> EdgeMask {
        self.edges.iter().fold(0, |acc, e| acc | e)
    }

    /// Whether the matching covers all of `[n]`.
    pub fn is_perfect(&self, n: usize) -> bool {
        self.covered() == full_mask(n)
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| mask_vertices(e)).collect()
    }
}

/// A family of `ℓ`-subsets of `[m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    m: usize,
    l: usize,
    members: Vec<EdgeMask>,
}

impl SetFamily {
    pub fn from_masks(m: usize, l: usize, members: impl IntoIterator<Item = EdgeMask>) -> Result<Self> {
        check_order(m)?;
        let all = full_mask(m);
        let mut members: Vec<EdgeMask> = members.into_iter().collect();
        for &s in &members {
            if s & !all != 0 || s.count_ones() as usize != l {
                return invalid(format!("{:?} is not a {l}-subset of [{m}]", mask_vertices(s)));
            }
        }
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return invalid("duplicate member");
        }
        Ok(SetFamily { m, l, members })
    }

    pub fn from_sets<S: AsRef<[usize]>>(m: usize, l: usize, sets: impl IntoIterator<Item = S>) -> Result<Self> {
        let masks = sets
            .into_iter()
            .map(|s| vertex_mask(m, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(m, l, masks)
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn member_size(&self) -> usize {
        self.l
    }

    pub fn members(&self) -> &[EdgeMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Every member of `self` meets every member of `other`.
    pub fn is_cross_intersecting(&self, other: &SetFamily) -> Result<bool> {
        if self.m != other.m {
            return invalid(format!("ground sets differ: [{}] vs [{}]", self.m, other.m));
        }
        Ok(self
            .members
            .iter()
            .all(|&a| other.members.iter().all(|&b| a & b != 0)))
    }

    /// Members pairwise intersect.
    pub fn is_intersecting(&self) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(i, &a)| self.members[i + 1..].iter().all(|&b| a & b != 0))
    }
}
