//! Edge-colorings of `K^k_n` and exact rainbow-matching search.
//!
//! Two independent engines answer "is there a rainbow `s`-matching?":
//! [`find_rainbow_matching`] walks edges in colex order with color and
//! vertex pruning, while [`certify_no_rainbow_perfect_matching`] lists every
//! perfect matching of `K^k_n` (lowest uncovered vertex first) and inspects
//! each one.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde_json::json;

use crate::certificate::Certificate;
use crate::combinatorics::{mask_vertices, perfect_matching_count, small_binomial, subsets_of, ColexRanker, KSubsets};
use crate::constructions::{build_d, build_hcover};
use crate::error::{invalid, Error, Result};
use crate::formulas::Validity;
use crate::hypergraph::{full_mask, parse_error, parse_numbers, push_vertices, vertex_mask, EdgeMask, Matching, UniformHypergraph};
use crate::{Count, MAX_VERTICES};

/// Largest `C(n, k)` an [`EdgeColoring`] will store.
pub const COLORING_EDGE_LIMIT: u64 = 50_000_000;
/// Largest number of perfect matchings [`scan_perfect_matchings`] will list.
pub const PERFECT_MATCHING_LIMIT: u64 = 2_000_000_000;

fn check_edge_budget(n: usize, k: usize) -> Result<()> {
    UniformHypergraph::empty(n, k)?;
    let total = small_binomial(n, k);
    if total > COLORING_EDGE_LIMIT {
        return Err(Error::TooLarge {
            what: "C(n, k)",
            size: total,
            limit: COLORING_EDGE_LIMIT,
        });
    }
    Ok(())
}

/// A total coloring of the edges of `K^k_n`. Colors are stored by colex rank.
#[derive(Debug, Clone)]
pub struct EdgeColoring {
    n: usize,
    k: usize,
    colors: Vec<u32>,
    palette_size: usize,
    ranker: ColexRanker,
}

impl PartialEq for EdgeColoring {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.colors == other.colors
    }
}

impl Eq for EdgeColoring {}

impl EdgeColoring {
    /// `colors[r]` is the color of the `r`-th `k`-subset in colex order.
    pub fn new(n: usize, k: usize, colors: Vec<u32>) -> Result<Self> {
        check_edge_budget(n, k)?;
        let total = small_binomial(n, k) as usize;
        if colors.len() != total {
            return invalid(format!(
                "coloring of K^{k}_{n} needs {total} colors, got {}",
                colors.len()
            ));
        }
        let mut seen: Vec<u32> = colors.clone();
        seen.sort_unstable();
        seen.dedup();
        Ok(EdgeColoring {
            n,
            k,
            palette_size: seen.len(),
            colors,
            ranker: ColexRanker::new(n, k),
        })
    }

    pub fn from_fn(n: usize, k: usize, color: impl Fn(EdgeMask) -> u32) -> Result<Self> {
        check_edge_budget(n, k)?;
        let colors = KSubsets::new(n, k).map(color).collect();
        Self::new(n, k, colors)
    }

    /// Every edge its own color, `0..C(n, k)` in colex order.
    pub fn all_distinct(n: usize, k: usize) -> Result<Self> {
        check_edge_budget(n, k)?;
        let total = small_binomial(n, k);
        Self::new(n, k, (0..total as u32).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Colors are exactly `0..palette_size`.
    pub fn is_contiguous(&self) -> bool {
        self.colors.iter().all(|&c| (c as usize) < self.palette_size)
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_of(&self, edge: EdgeMask) -> Result<u32> {
        if edge & !full_mask(self.n) != 0 || edge.count_ones() as usize != self.k {
            return invalid(format!("{:?} is not a {}-subset of [{}]", mask_vertices(edge), self.k, self.n));
        }
        Ok(self.colors[self.ranker.rank(edge)])
    }

    /// `(edge, color)` pairs in colex order.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeMask, u32)> + '_ {
        KSubsets::new(self.n, self.k).zip(self.colors.iter().copied())
    }

    /// Edges carrying `color`, as a hypergraph.
    pub fn color_class(&self, color: u32) -> UniformHypergraph {
        let edges = self.iter().filter(|&(_, c)| c == color).map(|(e, _)| e).collect();
        UniformHypergraph::from_sorted_unchecked(self.n, self.k, edges)
    }

    /// The matching's edges carry pairwise distinct colors.
    pub fn is_rainbow(&self, matching: &Matching) -> Result<bool> {
        let mut colors = matching
            .edges()
            .iter()
            .map(|&e| self.color_of(e))
            .collect::<Result<Vec<_>>>()?;
        colors.sort_unstable();
        Ok(colors.windows(2).all(|w| w[0] != w[1]))
    }

    /// Text form: `n k c`, then `v1 … vk color` for every edge in colex order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.k, self.palette_size);
        for (e, c) in self.iter() {
            push_vertices(&mut out, e);
            out.push(' ');
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the text form. Rows may come in any order; every edge must
    /// appear exactly once and the header must state the palette size.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n k c`".into(),
        })?;
        let head = parse_numbers(header, hline + 1)?;
        let [n, k, c] = head[..] else {
            return Err(Error::Parse {
                line: hline + 1,
                message: format!("header needs 3 numbers, found {}", head.len()),
            });
        };
        check_edge_budget(n, k).map_err(|e| match e {
            Error::TooLarge { .. } => e,
            other => parse_error(hline + 1, other),
        })?;
        let ranker = ColexRanker::new(n, k);
        let total = small_binomial(n, k) as usize;
        let mut colors: Vec<Option<u32>> = vec![None; total];
        for (idx, line) in lines {
            let nums = parse_numbers(line, idx + 1)?;
            if nums.len() != k + 1 {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected {k} vertices and a color, found {} numbers", nums.len()),
                });
            }
            let e = vertex_mask(n, &nums[..k]).map_err(|e| parse_error(idx + 1, e))?;
            let color = u32::try_from(nums[k]).map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("color {} does not fit in 32 bits", nums[k]),
            })?;
            let slot = &mut colors[ranker.rank(e)];
            if slot.is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("duplicate edge {:?}", &nums[..k]),
                });
            }
            *slot = Some(color);
        }
        let colors = colors
            .into_iter()
            .zip(KSubsets::new(n, k))
            .map(|(c, e)| {
                c.ok_or_else(|| Error::Parse {
                    line: hline + 1,
                    message: format!("coloring is not total: edge {:?} has no color", mask_vertices(e)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let coloring = Self::new(n, k, colors)?;
        if coloring.palette_size != c {
            return Err(Error::Parse {
                line: hline + 1,
                message: format!("header announces {c} colors, rows use {}", coloring.palette_size),
            });
        }
        Ok(coloring)
    }
}

fn check_perfect_params(n: usize, k: usize, odd: bool) -> Result<()> {
    let parity = if odd { "odd" } else { "even" };
    if k < 3 || (k % 2 == 1) != odd || (!odd && k < 4) {
        return invalid(format!("this construction needs {parity} k >= 3, got k = {k}"));
    }
    if !n.is_multiple_of(k) || n / k < 3 {
        return invalid(format!("this construction needs n = ks with s >= 3, got n = {n}, k = {k}"));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            size: n as u64,
            limit: MAX_VERTICES as u64,
        });
    }
    Ok(())
}

/// The vertex split and special `W`-traces of the odd-`k` coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSplit {
    /// `U = {1, …, n - k - 1}`.
    pub u: EdgeMask,
    /// `W`: the last `k + 1` vertices.
    pub w: EdgeMask,
    /// `A_1, A_2, …`: the `(k+1)/2`-subsets of `W` containing `min W`.
    pub traces: Vec<EdgeMask>,
}

impl OddSplit {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_perfect_params(n, k, true)?;
        let u = full_mask(n - k - 1);
        let w = full_mask(n) & !u;
        let low = w & w.wrapping_neg();
        let traces = subsets_of(w & !low, (k - 1) / 2).map(|t| t | low).collect();
        Ok(OddSplit { u, w, traces })
    }
}

/// The vertex split and special `W`-traces of the even-`k` coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSplit {
    pub u: EdgeMask,
    pub w: EdgeMask,
    /// The fixed vertex `x = n` of `W`.
    pub x: EdgeMask,
    /// `B_1, B_2, …`: all `(k/2 - 1)`-subsets of `W \ {x}`.
    pub traces: Vec<EdgeMask>,
}

impl EvenSplit {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_perfect_params(n, k, false)?;
        let u = full_mask(n - k - 1);
        let w = full_mask(n) & !u;
        let x = 1u64 << (n - 1);
        let traces = subsets_of(w & !x, k / 2 - 1).collect();
        Ok(EvenSplit { u, w, x, traces })
    }
}

/// `f_{𝓗1}` for odd `k` and `n = ks`, `s >= 3`.
///
/// Edges inside `U` get the distinct colors `1..=C(n-k-1, k)` in colex
/// order; an edge whose trace on `W` is `A_i` or `W \ A_i` gets
/// `C(n-k-1, k) + i`; everything else gets 0.
pub fn build_h1_coloring(n: usize, k: usize) -> Result<EdgeColoring> {
    let split = OddSplit::new(n, k)?;
    let inner = small_binomial(n - k - 1, k) as u32;
    // U is a prefix of [n], so its k-subsets are the first `inner` in colex order.
    let ranker = ColexRanker::new(n, k);
    EdgeColoring::from_fn(n, k, |e| {
        if e & split.w == 0 {
            return ranker.rank(e) as u32 + 1;
        }
        let trace = e & split.w;
        split
            .traces
            .iter()
            .position(|&a| trace == a || trace == split.w & !a)
            .map_or(0, |i| inner + i as u32 + 1)
    })
}

/// `f_{𝓗2}` for even `k >= 4` and `n = ks`, `s >= 3`.
///
/// Class `i` holds the edges whose trace on `W` is `B_i ∪ {x}` together
/// with those whose trace is `W \ (B_i ∪ {x})`.
pub fn build_h2_coloring(n: usize, k: usize) -> Result<EdgeColoring> {
    let split = EvenSplit::new(n, k)?;
    let inner = small_binomial(n - k - 1, k) as u32;
    let ranker = ColexRanker::new(n, k);
    EdgeColoring::from_fn(n, k, |e| {
        if e & split.w == 0 {
            return ranker.rank(e) as u32 + 1;
        }
        let trace = e & split.w;
        split
            .traces
            .iter()
            .position(|&b| trace == b | split.x || trace == split.w & !(b | split.x))
            .map_or(0, |i| inner + i as u32 + 1)
    })
}

/// A coloring with no rainbow `M_s`: a largest known `M_{s-1}`-free family
/// `F` is colored rainbow, every other edge shares one extra color.
#[derive(Debug, Clone)]
pub struct TuranPlusOne {
    pub coloring: EdgeColoring,
    pub family: UniformHypergraph,
    /// `Proved` when `e(F) = ex(n, k, M_{s-1})` is a theorem at these parameters.
    pub extremality: Validity,
}

pub fn build_turan_plus_one_coloring(n: usize, k: usize, s: usize) -> Result<TuranPlusOne> {
    if s < 2 || k < 2 || n < k * s {
        return invalid(format!("needs s >= 2, k >= 2 and n >= ks, got n = {n}, k = {k}, s = {s}"));
    }
    // ν(F) <= s - 2: the cover and the clique candidates.
    let cover = build_hcover(n, k, s - 2, None)?;
    let clique = build_d(n, k, s - 2, None)?;
    let family = if clique.edge_count() > cover.edge_count() {
        clique
    } else {
        cover
    };
    let ranker = ColexRanker::new(n, k);
    let mut index = vec![0u32; small_binomial(n, k) as usize];
    for (i, &e) in family.edges().iter().enumerate() {
        index[ranker.rank(e)] = i as u32 + 1;
    }
    let coloring = EdgeColoring::new(n, k, index)?;
    let extremality = if k <= 3 {
        Validity::Proved
    } else {
        Validity::Conjectured
    };
    Ok(TuranPlusOne {
        coloring,
        family,
        extremality,
    })
}

// Colors renumbered densely so that searches can index a flag array.
fn dense_colors(coloring: &EdgeColoring) -> Vec<u32> {
    let mut ids = HashMap::new();
    coloring
        .colors
        .iter()
        .map(|&c| {
            let next = ids.len() as u32;
            *ids.entry(c).or_insert(next)
        })
        .collect()
}

/// A rainbow `s`-matching, if one exists.
pub fn find_rainbow_matching(coloring: &EdgeColoring, s: usize) -> Option<Matching> {
    if s == 0 {
        return Some(Matching::new(Vec::new()).expect("empty matching"));
    }
    if s * coloring.k > coloring.n || s > coloring.palette_size {
        return None;
    }
    let mut search = RainbowSearch {
        edges: KSubsets::new(coloring.n, coloring.k).collect(),
        colors: dense_colors(coloring),
        used: vec![false; coloring.palette_size],
        n: coloring.n,
        k: coloring.k,
        palette: coloring.palette_size,
        target: s,
        stack: Vec::with_capacity(s),
    };
    search
        .run(0, 0)
        .then(|| Matching::new(search.stack.clone()).expect("search keeps edges disjoint"))
}

struct RainbowSearch {
    edges: Vec<EdgeMask>,
    colors: Vec<u32>,
    used: Vec<bool>,
    n: usize,
    k: usize,
    palette: usize,
    target: usize,
    stack: Vec<EdgeMask>,
}

impl RainbowSearch {
    fn run(&mut self, start: usize, covered: EdgeMask) -> bool {
        let depth = self.stack.len();
        if depth == self.target {
            return true;
        }
        let needed = self.target - depth;
        if self.n - (covered.count_ones() as usize) < self.k * needed {
            return false;
        }
        if self.palette - depth < needed {
            return false;
        }
        for idx in start..self.edges.len() {
            let e = self.edges[idx];
            if e & covered != 0 {
                continue;
            }
            let c = self.colors[idx] as usize;
            if self.used[c] {
                continue;
            }
            self.used[c] = true;
            self.stack.push(e);
            if self.run(idx + 1, covered | e) {
                return true;
            }
            self.stack.pop();
            self.used[c] = false;
        }
        false
    }
}

/// Matchings examined in one shard and its first rainbow one.
type ShardResult = (u64, Option<Vec<EdgeMask>>);

/// Outcome of enumerating every perfect matching of `K^k_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectMatchingScan {
    pub examined: u64,
    /// The first rainbow perfect matching in enumeration order, if any.
    pub witness: Option<Matching>,
}

/// Lists all perfect matchings of `K^k_n` and checks each for a repeated
/// color. Sharded over `threads` workers on the edge through vertex 1; the
/// result does not depend on the thread count.
pub fn scan_perfect_matchings(coloring: &EdgeColoring, threads: usize) -> Result<PerfectMatchingScan> {
    let (n, k) = (coloring.n, coloring.k);
    if n == 0 || n % k != 0 {
        return invalid(format!("n = {n} is not a positive multiple of k = {k}"));
    }
    let count = perfect_matching_count(n, k);
    if count > Count::from(PERFECT_MATCHING_LIMIT) {
        return Err(Error::TooLarge {
            what: "number of perfect matchings",
            size: count.to_u64().unwrap_or(u64::MAX),
            limit: PERFECT_MATCHING_LIMIT,
        });
    }
    let colors = dense_colors(coloring);
    let full = full_mask(n);
    let shards: Vec<EdgeMask> = subsets_of(full & !1, k - 1).map(|f| f | 1).collect();
    let results: Vec<Mutex<Option<ShardResult>>> =
        shards.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || {
        let mut walk = PerfectWalk {
            k,
            ranker: &coloring.ranker,
            colors: &colors,
            stack: Vec::with_capacity(n / k),
            palette: Vec::with_capacity(n / k),
            examined: 0,
            witness: None,
        };
        loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            let Some(&first) = shards.get(i) else { break };
            walk.examined = 0;
            walk.witness = None;
            walk.push(first);
            walk.run(full & !first);
            walk.pop();
            *results[i].lock().expect("no poisoned shard") = Some((walk.examined, walk.witness.take()));
        }
    };
    let threads = threads.max(1).min(shards.len().max(1));
    if threads == 1 {
        worker();
    } else {
        std::thread::scope(|scope| {
            for _ in 0..threads {
                scope.spawn(worker);
            }
        });
    }
    let mut examined = 0;
    let mut witness = None;
    for slot in results {
        let (count, found) = slot.into_inner().expect("no poisoned shard").expect("every shard ran");
        examined += count;
        if witness.is_none() {
            witness = found;
        }
    }
    Ok(PerfectMatchingScan {
        examined,
        witness: witness.map(|w| Matching::new(w).expect("perfect matchings are disjoint")),
    })
}

struct PerfectWalk<'a> {
    k: usize,
    ranker: &'a ColexRanker,
    colors: &'a [u32],
    stack: Vec<EdgeMask>,
    palette: Vec<u32>,
    examined: u64,
    witness: Option<Vec<EdgeMask>>,
}

impl PerfectWalk<'_> {
    fn push(&mut self, e: EdgeMask) {
        self.stack.push(e);
        self.palette.push(self.colors[self.ranker.rank(e)]);
    }

    fn pop(&mut self) {
        self.stack.pop();
        self.palette.pop();
    }

    fn run(&mut self, uncovered: EdgeMask) {
        if uncovered == 0 {
            self.examined += 1;
            if self.witness.is_none() {
                let mut seen = self.palette.clone();
                seen.sort_unstable();
                if seen.windows(2).all(|w| w[0] != w[1]) {
                    self.witness = Some(self.stack.clone());
                }
            }
            return;
        }
        let low = uncovered & uncovered.wrapping_neg();
        for rest in subsets_of(uncovered & !low, self.k - 1) {
            let e = rest | low;
            self.push(e);
            self.run(uncovered & !e);
            self.pop();
        }
    }
}

/// Certifies that `coloring` has no rainbow perfect matching by exhaustive
/// enumeration; the verdict is true iff none of the perfect matchings is
/// rainbow.
pub fn certify_no_rainbow_perfect_matching(coloring: &EdgeColoring) -> Result<Certificate> {
    certify_no_rainbow_perfect_matching_threads(coloring, 1)
}

pub fn certify_no_rainbow_perfect_matching_threads(
    coloring: &EdgeColoring,
    threads: usize,
) -> Result<Certificate> {
    let start = Instant::now();
    let scan = scan_perfect_matchings(coloring, threads)?;
    let mut cert = Certificate::new(format!(
        "edge-coloring of K^{}_{} with {} colors has no rainbow perfect matching",
        coloring.k, coloring.n, coloring.palette_size
    ))
    .with("n", coloring.n)
    .with("k", coloring.k)
    .with("palette_size", coloring.palette_size)
    .with("perfect_matchings", scan.examined);
    if let Some(w) = &scan.witness {
        cert = cert.with("witness", json!(w.edge_lists()));
    }
    cert.search_size = scan.examined;
    cert.verdict = scan.witness.is_none();
    cert.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::turan_3;

    #[test]
    fn h1_palette_and_classes() {
        let c = build_h1_coloring(9, 3).unwrap();
        assert_eq!(c.palette_size(), 14);
        assert!(c.is_contiguous());
        assert_eq!(OddSplit::new(9, 3).unwrap().traces.len(), 3);
        assert_eq!(c.colors().len(), 84);
        assert!(build_h1_coloring(8, 3).is_err());
        assert!(build_h1_coloring(6, 3).is_err());
        assert!(build_h1_coloring(16, 4).is_err());
    }

    #[test]
    fn h2_palette_and_classes() {
        let c = build_h2_coloring(16, 4).unwrap();
        assert_eq!(c.palette_size(), 335);
        assert!(c.is_contiguous());
        assert_eq!(EvenSplit::new(16, 4).unwrap().traces.len(), 4);
        assert!(build_h2_coloring(9, 3).is_err());
        assert!(build_h2_coloring(8, 4).is_err());
        // Edges outside U and outside every class share color 0.
        assert!(c.color_class(0).edge_count() > 0);
    }

    #[test]
    fn turan_plus_one_examples() {
        let t = build_turan_plus_one_coloring(9, 3, 3).unwrap();
        let ex = turan_3(9, 2).integer().unwrap();
        assert_eq!(ex, 28.into());
        assert_eq!(t.coloring.palette_size(), 29);
        assert!(find_rainbow_matching(&t.coloring, 3).is_none());
        assert!(find_rainbow_matching(&t.coloring, 2).is_some());
        assert_eq!(t.extremality, Validity::Proved);
        assert!(build_turan_plus_one_coloring(8, 3, 3).is_err());
    }

    #[test]
    fn rainbow_search_examples() {
        let distinct = UniformHypergraph::complete(9, 3)
            .and_then(|_| EdgeColoring::all_distinct(9, 3))
            .unwrap();
        let m = find_rainbow_matching(&distinct, 3).unwrap();
        assert!(m.is_perfect(9));
        let h1 = build_h1_coloring(9, 3).unwrap();
        assert!(find_rainbow_matching(&h1, 3).is_none());
        let two = find_rainbow_matching(&h1, 2).unwrap();
        assert!(h1.is_rainbow(&two).unwrap());
        assert!(find_rainbow_matching(&h1, 0).is_some());
        assert!(find_rainbow_matching(&h1, 4).is_none());
    }

    #[test]
    fn certify_examples() {
        let h1 = build_h1_coloring(9, 3).unwrap();
        let cert = certify_no_rainbow_perfect_matching(&h1).unwrap();
        assert!(cert.verdict);
        assert_eq!(cert.search_size, 280);
        let distinct = EdgeColoring::all_distinct(6, 3).unwrap();
        let cert = certify_no_rainbow_perfect_matching(&distinct).unwrap();
        assert!(!cert.verdict);
        assert_eq!(cert.search_size, 10);
        assert!(cert.parameters.contains_key("witness"));
        let bad = EdgeColoring::all_distinct(7, 3).unwrap();
        assert!(certify_no_rainbow_perfect_matching(&bad).is_err());
    }

    #[test]
    fn scan_is_thread_independent() {
        let h1 = build_h1_coloring(12, 3).unwrap();
        let one = scan_perfect_matchings(&h1, 1).unwrap();
        let four = scan_perfect_matchings(&h1, 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(Some(Into::into(one.examined)), Some(perfect_matching_count(12, 3)));
        let distinct = EdgeColoring::all_distinct(9, 3).unwrap();
        assert_eq!(
            scan_perfect_matchings(&distinct, 1).unwrap(),
            scan_perfect_matchings(&distinct, 3).unwrap()
        );
    }

    #[test]
    fn coloring_text_round_trip() {
        let c = build_h1_coloring(9, 3).unwrap();
        let text = c.to_text();
        let back = EdgeColoring::from_text(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_text(), text);

        let mut rows: Vec<&str> = text.lines().collect();
        rows.pop();
        let missing = rows.join("\n");
        let err = EdgeColoring::from_text(&missing).unwrap_err();
        assert!(err.to_string().contains("not total"), "{err}");

        let wrong_header = text.replacen("9 3 14", "9 3 13", 1);
        assert!(EdgeColoring::from_text(&wrong_header).is_err());
    }
}
