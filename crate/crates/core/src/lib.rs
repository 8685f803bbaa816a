//! Exact kernels for matchings in `k`-uniform hypergraphs.
//!
//! The crate covers three connected problems on the complete `k`-graph
//! `K^k_n` over the vertex set `[n] = {1, …, n}`:
//!
//! * Turán-type questions: how many edges a `k`-graph can carry while its
//!   matching number stays at most `s` ([`hypergraph`], [`shifting`],
//!   [`constructions`], [`oracle`]).
//! * Anti-Ramsey questions: how many colors an edge-coloring of `K^k_n`
//!   can use without producing a rainbow `s`-matching ([`rainbow`]).
//! * The closed-form values that tie the two together ([`formulas`]).
//!
//! Edges are `u64` bitmasks (bit `v - 1` set for vertex `v`), so every
//! kernel is limited to `n <= 64`. Counting formulas are generic over the
//! integer type and default to [`Count`]; the root-bracketing routine is
//! generic over any ordered field and defaults to [`Exact`].

pub mod certificate;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod hypergraph;
pub mod oracle;
pub mod rainbow;
pub mod shifting;

pub use certificate::Certificate;
pub use constructions::{ConstructionKind, ConstructionSpec};
pub use error::{Error, Result};
pub use formulas::{FormulaResult, FormulaValue, Validity};
pub use hypergraph::{EdgeMask, Matching, SetFamily, UniformHypergraph};
pub use rainbow::EdgeColoring;

/// Exact signed integer used for every closed-form count.
pub type Count = num_bigint::BigInt;

/// Exact rational used for thresholds (`ε`, `θ`) and root brackets.
pub type Exact = num_rational::BigRational;

/// Hard cap on the vertex count of any hypergraph handled by the kernels.
pub const MAX_VERTICES: usize = 64;
