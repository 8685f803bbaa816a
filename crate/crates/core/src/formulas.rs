//! Closed-form Turán and anti-Ramsey values for matchings, with the range
//! in which each one is a theorem.
//!
//! Parameter convention: every function names the forbidden matching in its
//! docs. `turan_3(n, s)` is `ex(n, 3, M_s)` (no `s` disjoint edges), while
//! `turan_conjectured(n, k, s)` is `ex(n, k, M_{s+1})`, the largest `k`-graph
//! with `ν <= s`. The anti-Ramsey functions take the size `s` of the rainbow
//! matching being forced.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::combinatorics::binom;
use crate::error::{invalid, Error, Result};
use crate::{Count, Exact};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Validity {
    /// The parameters lie in the stated range of a theorem (or the value is trivial).
    Proved,
    /// Only conjectured, or proved for "sufficiently large n" without an explicit bound.
    Conjectured,
    /// Outside every known range; the value is the formula evaluated anyway.
    OutOfRange,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FormulaValue {
    Integer(Count),
    /// A bracket `[lo, hi]` around an irrational root.
    Interval { lo: Exact, hi: Exact },
}

impl Serialize for FormulaValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FormulaValue::Integer(v) => match v.to_i64() {
                Some(small) => serializer.serialize_i64(small),
                None => serializer.serialize_str(&v.to_string()),
            },
            FormulaValue::Interval { lo, hi } => json!({
                "lo": lo.to_string(),
                "hi": hi.to_string(),
                "lo_approx": ratio_to_f64(lo),
                "hi_approx": ratio_to_f64(hi),
            })
            .serialize(serializer),
        }
    }
}

/// Nearest `f64`, computed from a scaled integer quotient so that huge
/// numerators and denominators do not overflow.
pub fn ratio_to_f64(r: &Exact) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let scale = Count::from(10u64).pow(17);
        let scaled = (r.numer() * &scale).div_floor(r.denom());
        scaled.to_f64().unwrap_or(f64::NAN) / 1e17
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaResult {
    pub name: &'static str,
    pub params: BTreeMap<&'static str, Value>,
    pub value: FormulaValue,
    pub valid: Validity,
    pub provenance: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FormulaResult {
    fn new_integer(name: &'static str, value: Count, valid: Validity, provenance: &'static str) -> Self {
        FormulaResult {
            name,
            params: BTreeMap::new(),
            value: FormulaValue::Integer(value),
            valid,
            provenance,
            note: None,
        }
    }

    fn param(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.params.insert(key, value.into());
        self
    }

    fn noted(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn integer_value(&self) -> Option<&Count> {
        match &self.value {
            FormulaValue::Integer(v) => Some(v),
            FormulaValue::Interval { .. } => None,
        }
    }

    /// Integer value, cloned.
    pub fn integer(&self) -> Option<Count> {
        self.integer_value().cloned()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("formula result serializes")
    }
}

const LARGE_N: &str = "holds for sufficiently large n; no explicit threshold is known";

fn signed(n: u64) -> i64 {
    i64::try_from(n).expect("parameter fits in i64")
}

/// `ex(n, 3, M_s)`: the most triples on `[n]` without `s` pairwise disjoint ones.
///
/// `max{C(n,3) - C(n-s+1,3), C(3s-1,3)}` for `s >= 2`, `n >= 3s`. Below that
/// range the value is trivial: `0` for `s = 1`, `C(n, 3)` when `n < 3s`.
pub fn turan_3(n: u64, s: u64) -> FormulaResult {
    let (value, valid, provenance) = if s == 0 {
        (Count::zero(), Validity::OutOfRange, "M_0 is contained in every 3-graph")
    } else if s == 1 {
        (Count::zero(), Validity::Proved, "trivial: any edge is an M_1")
    } else if n < 3 * s {
        (binom(signed(n), 3), Validity::Proved, "trivial: K^3_n has no M_s when n < 3s")
    } else {
        let cover = binom(signed(n), 3) - binom(signed(n) - signed(s) + 1, 3);
        let clique = binom(3 * signed(s) - 1, 3);
        (
            cover.max(clique),
            Validity::Proved,
            "Erdős matching problem for 3-graphs, settled for n >= 3s",
        )
    };
    FormulaResult::new_integer("turan3", value, valid, provenance)
        .param("n", n)
        .param("s", s)
}

/// `ex(n, k, M_{s+1})`: the most `k`-sets on `[n]` with matching number at
/// most `s`, as given by the Erdős Matching Conjecture
/// `max{C(n,k) - C(n-s,k), C(k(s+1)-1,k)}`.
pub fn turan_conjectured(n: u64, k: u64, s: u64) -> FormulaResult {
    let wrap = |r: FormulaResult| r.param("n", n).param("k", k).param("s", s);
    if k == 3 && s >= 1 {
        let mut r = turan_3(n, s + 1);
        r.name = "turan-conjectured";
        r.params.clear();
        return wrap(r);
    }
    let (nn, kk, ss) = (signed(n), signed(k), signed(s));
    let cover = binom(nn, k) - binom(nn - ss, k);
    let clique = binom(kk * (ss + 1) - 1, k);
    let formula = cover.max(clique);
    let r = if k < 2 || s < 1 || n < k * s {
        FormulaResult::new_integer("turan-conjectured", formula, Validity::OutOfRange, "Erdős Matching Conjecture")
    } else if n < k * (s + 1) {
        FormulaResult::new_integer(
            "turan-conjectured",
            binom(nn, k),
            Validity::Proved,
            "trivial: K^k_n has no M_{s+1} when n < k(s+1)",
        )
    } else if k == 2 {
        FormulaResult::new_integer("turan-conjectured", formula, Validity::Proved, "Erdős–Gallai theorem")
    } else {
        FormulaResult::new_integer("turan-conjectured", formula, Validity::Conjectured, "Erdős Matching Conjecture")
    };
    wrap(r)
}

/// `ar(n, k, M_s) = C(n,k) - C(n-s+2,k) + 2`, a theorem for
/// `n >= sk + (s-1)(k-1)`, `k >= 3`.
pub fn anti_ramsey_large_n(n: u64, k: u64, s: u64) -> FormulaResult {
    let (nn, ss) = (signed(n), signed(s));
    let value = binom(nn, k) - binom(nn - ss + 2, k) + Count::from(2);
    let in_range = k >= 3 && s >= 2 && n >= s * k + (s - 1) * (k - 1);
    let valid = if in_range {
        Validity::Proved
    } else {
        Validity::OutOfRange
    };
    FormulaResult::new_integer(
        "ar-large",
        value,
        valid,
        "anti-Ramsey number of matchings for n >= sk + (s-1)(k-1) (Frankl–Kupavskii)",
    )
    .param("n", n)
    .param("k", k)
    .param("s", s)
}

/// `ar(n, 3, M_s)` for every `n >= 3s`:
///
/// * `n = 3s`: `ex(n, 3, M_{s-1}) + 5`;
/// * `3s < n < 5s - 2`: `ex(n, 3, M_{s-1}) + 2`;
/// * `n >= 5s - 2`: [`anti_ramsey_large_n`], whose range starts exactly at
///   `5s - 2` when `k = 3`.
///
/// The first two branches are only known for sufficiently large `n` and are
/// reported as conjectured.
pub fn anti_ramsey_3(n: u64, s: u64) -> FormulaResult {
    let base = || turan_3(n, s.saturating_sub(1)).integer().expect("integer value");
    let mut r = if s >= 1 && n + 2 >= 5 * s && n > 3 * s {
        let mut r = anti_ramsey_large_n(n, 3, s);
        r.params.clear();
        r
    } else if n == 3 * s {
        FormulaResult::new_integer(
            "ar3",
            base() + Count::from(5),
            Validity::Conjectured,
            "anti-Ramsey number of perfect matchings in 3-graphs: ex(n,3,M_{s-1}) + 5",
        )
        .noted(LARGE_N)
    } else if n > 3 * s {
        FormulaResult::new_integer(
            "ar3",
            base() + Count::from(2),
            Validity::Conjectured,
            "anti-Ramsey number of matchings in 3-graphs for 3s < n < 5s - 2: ex(n,3,M_{s-1}) + 2",
        )
        .noted(LARGE_N)
    } else {
        FormulaResult::new_integer(
            "ar3",
            base() + Count::from(2),
            Validity::OutOfRange,
            "general lower bound ex(n,3,M_{s-1}) + 2",
        )
        .noted("n < 3s: K^3_n has no s-matching at all")
    };
    if s < 3 && r.valid != Validity::OutOfRange && r.name == "ar3" {
        r.valid = Validity::OutOfRange;
        r.note = Some("requires s >= 3".into());
    }
    r.name = "ar3";
    r.param("n", n).param("s", s)
}

/// Lower bound on `ar(n, k, M_{n/k})` from the two-class colorings:
/// `C(n-k-1,k) + C(k+1,(k+1)/2)/2 + 2` for odd `k`, `C(n-k-1,k) + C(k,k/2-1) + 2`
/// for even `k`.
pub fn lower_bound_perfect(n: u64, k: u64) -> Result<FormulaResult> {
    if k < 3 || !n.is_multiple_of(k) || n / k < 3 {
        return invalid(format!("needs k >= 3 and n = ks with s >= 3, got n = {n}, k = {k}"));
    }
    let base = binom(signed(n - k - 1), k);
    let classes = if k % 2 == 1 {
        binom(signed(k + 1), k.div_ceil(2)) / Count::from(2)
    } else {
        binom(signed(k), k / 2 - 1)
    };
    Ok(FormulaResult::new_integer(
        "lb-perfect",
        base + classes + Count::from(2),
        Validity::Proved,
        "rainbow-perfect-matching-free coloring of K^k_{ks}",
    )
    .param("n", n)
    .param("k", k))
}

/// The least `s >= 1` with `C(n,k) - C(n-s,k) <= C(k(s+1)-1,k)`.
pub fn s_threshold(n: u64, k: u64) -> Result<u64> {
    if k < 2 || n < k {
        return invalid(format!("needs n >= k >= 2, got n = {n}, k = {k}"));
    }
    let total = binom(signed(n), k);
    let kk = signed(k);
    (1..=n)
        .find(|&s| {
            let ss = signed(s);
            &total - binom(signed(n) - ss, k) <= binom(kk * (ss + 1) - 1, k)
        })
        .ok_or_else(|| Error::InvalidArgument("no threshold below n".into()))
}

pub fn s_threshold_result(n: u64, k: u64) -> Result<FormulaResult> {
    let s = s_threshold(n, k)?;
    Ok(FormulaResult::new_integer(
        "s0",
        Count::from(s),
        Validity::Proved,
        "least s where the clique construction has at least as many edges as the cover",
    )
    .param("n", n)
    .param("k", k))
}

/// `1 - (1-a)^k - k^k a^k`, whose root in `(0, 1)` is `α_k`.
pub fn alpha_polynomial<T>(k: usize, a: &T) -> T
where
    T: Clone + Num + FromPrimitive,
{
    let one = T::one();
    let kk = T::from_usize(k).expect("k is representable");
    let lead = num_traits::pow(kk, k);
    one.clone() - num_traits::pow(one - a.clone(), k) - lead * num_traits::pow(a.clone(), k)
}

/// Bisection on a sign change of `f` over `[lo, hi]`, down to width `tol`.
///
/// Works for any ordered field: exact rationals keep every sign test exact,
/// floats stop once the midpoint no longer moves.
pub fn bisect<T, F>(f: F, mut lo: T, mut hi: T, tol: &T) -> Result<(T, T)>
where
    T: Clone + PartialOrd + Num,
    F: Fn(&T) -> T,
{
    let zero = T::zero();
    let two = T::one() + T::one();
    let flo = f(&lo);
    let fhi = f(&hi);
    if flo == zero {
        return Ok((lo.clone(), lo));
    }
    if fhi == zero {
        return Ok((hi.clone(), hi));
    }
    let lo_positive = flo > zero;
    if lo_positive == (fhi > zero) {
        return Err(Error::NotBracketed);
    }
    while hi.clone() - lo.clone() > *tol {
        let mid = (lo.clone() + hi.clone()) / two.clone();
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(&mid);
        if fm == zero {
            return Ok((mid.clone(), mid));
        }
        if (fm > zero) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Exact bracket of width at most `tol` around `α_k`, the root in `(0, 1)` of
/// `1 - (1-a)^k = k^k a^k`. The search starts from `[1/(2k), 1]`.
pub fn alpha_k(k: usize, tol: &Exact) -> Result<(Exact, Exact)> {
    alpha_k_in::<Exact>(k, tol)
}

/// [`alpha_k`] in any ordered field, e.g. `f64` for a quick estimate.
pub fn alpha_k_in<T>(k: usize, tol: &T) -> Result<(T, T)>
where
    T: Clone + PartialOrd + Num + FromPrimitive,
{
    if k < 2 {
        return invalid(format!("alpha_k needs k >= 2, got {k}"));
    }
    if *tol <= T::zero() {
        return invalid("tolerance must be positive");
    }
    let lo = T::one() / T::from_usize(2 * k).expect("k is representable");
    bisect(|a| alpha_polynomial(k, a), lo, T::one(), tol)
}

pub fn alpha_k_result(k: usize, tol: f64) -> Result<FormulaResult> {
    let tol_exact = Exact::from_float(tol)
        .filter(|t| *t > Exact::zero())
        .ok_or_else(|| Error::InvalidArgument(format!("bad tolerance {tol}")))?;
    let (lo, hi) = alpha_k(k, &tol_exact)?;
    Ok(FormulaResult {
        name: "alpha",
        params: BTreeMap::from([("k", json!(k)), ("tol", json!(tol))]),
        value: FormulaValue::Interval { lo, hi },
        valid: Validity::Proved,
        provenance: "limit density s0(n,k)/n of the clique/cover crossover",
        note: None,
    })
}

/// `1/k - 1/(2k²)` and `1/k - 2/(5k²)`, the known bounds on `α_k` for `k >= 3`.
pub fn alpha_k_bounds(k: usize) -> (Exact, Exact) {
    let k = Count::from(k);
    let k2 = &k * &k;
    let inv = Exact::new(Count::one(), k.clone());
    (
        &inv - Exact::new(Count::one(), Count::from(2) * &k2),
        &inv - Exact::new(Count::from(2), Count::from(5) * &k2),
    )
}
