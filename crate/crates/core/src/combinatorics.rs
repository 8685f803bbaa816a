//! Subset enumeration and binomial coefficients.
//!
//! A `k`-subset of `[n]` is a `u64` with `k` bits set. For masks of equal
//! popcount, numeric order coincides with colexicographic order, so every
//! enumeration here is colex by construction.

use num_integer::Integer;
use num_traits::{CheckedMul, FromPrimitive, One, Zero};

use crate::Count;

/// `C(n, k)` in any integer type, `None` on overflow.
pub fn binomial<T>(n: u64, k: u64) -> Option<T>
where
    T: Clone + Integer + CheckedMul + FromPrimitive,
{
    if k > n {
        return Some(T::zero());
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) since acc = C(n, i).
        acc = acc.checked_mul(&T::from_u64(n - i)?)?;
        acc = acc / T::from_u64(i + 1)?;
    }
    Some(acc)
}

/// Exact `C(n, k)` for a possibly negative top argument; zero when `n < k`.
pub fn binom(n: i64, k: u64) -> Count {
    if n < 0 || (n as u64) < k {
        return Count::zero();
    }
    binomial::<Count>(n as u64, k).expect("big integers do not overflow")
}

/// `C(n, k)` as `u64` for the small arguments used by the kernels.
pub fn small_binomial(n: usize, k: usize) -> u64 {
    binomial::<u128>(n as u64, k as u64)
        .and_then(|v| u64::try_from(v).ok())
        .expect("binomial coefficient exceeds u64")
}

/// Number of perfect matchings of `K^k_n`: `n! / ((k!)^(n/k) (n/k)!)`.
pub fn perfect_matching_count(n: usize, k: usize) -> Count {
    if k == 0 || !n.is_multiple_of(k) {
        return Count::zero();
    }
    // Choose the block of the lowest vertex each time: Π C(n - ik - 1, k - 1).
    let mut acc = Count::one();
    let mut rest = n;
    while rest > 0 {
        acc *= binom(rest as i64 - 1, (k - 1) as u64);
        rest -= k;
    }
    acc
}

/// Colex iterator over the `k`-subsets of `[n]` as bitmasks.
#[derive(Debug, Clone)]
pub struct KSubsets {
    next: Option<u64>,
    limit: u128,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 64, "subset masks are limited to 64 vertices");
        let limit = 1u128 << n;
        let first = if k == 0 {
            Some(0)
        } else if k <= n {
            Some(((1u128 << k) - 1) as u64)
        } else {
            None
        };
        KSubsets { next: first, limit }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack, widened so n = 64 does not overflow.
            let c = cur as u128;
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let succ = (((ripple ^ c) >> 2) / low) | ripple;
            (succ < self.limit).then_some(succ as u64)
        };
        Some(cur)
    }
}

/// The `r`-subsets of the set bits of `mask`, in colex order.
pub fn subsets_of(mask: u64, r: usize) -> impl Iterator<Item = u64> {
    let bits: Vec<u64> = iter_bits(mask).collect();
    KSubsets::new(bits.len(), r).map(move |pick| {
        iter_bits(pick).fold(0u64, |acc, idx| acc | bits[idx.trailing_zeros() as usize])
    })
}

/// Single-bit masks of `mask`, lowest first.
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = u64> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let low = mask & mask.wrapping_neg();
            mask ^= low;
            Some(low)
        }
    })
}

/// 1-based vertex list of a mask, ascending.
pub fn mask_vertices(mask: u64) -> Vec<usize> {
    iter_bits(mask)
        .map(|b| b.trailing_zeros() as usize + 1)
        .collect()
}

/// Lookup table for colex ranks of `k`-subsets of `[n]`.
#[derive(Debug, Clone)]
pub struct ColexRanker {
    k: usize,
    // table[p][i] = C(p, i + 1)
    table: Vec<Vec<u64>>,
}

impl ColexRanker {
    pub fn new(n: usize, k: usize) -> Self {
        let table = (0..n.max(1))
            .map(|p| (0..k).map(|i| small_binomial(p, i + 1)).collect())
            .collect();
        ColexRanker { k, table }
    }

    /// Position of `mask` in the colex listing of all `k`-subsets.
    #[inline]
    pub fn rank(&self, mask: u64) -> usize {
        debug_assert_eq!(mask.count_ones() as usize, self.k);
        let mut rest = mask;
        let mut rank = 0u64;
        let mut i = 0;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rank += self.table[p][i];
            rest &= rest - 1;
            i += 1;
        }
        rank as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn binomials_agree_across_integer_types() {
        for n in 0..40u64 {
            for k in 0..=n + 1 {
                let small = binomial::<u64>(n, k).unwrap();
                let big = binomial::<BigUint>(n, k).unwrap();
                assert_eq!(BigUint::from(small), big);
            }
        }
        assert_eq!(binomial::<u64>(100, 3), Some(161_700));
        assert_eq!(binomial::<u32>(40, 20), None);
    }

    #[test]
    fn binom_handles_negative_top() {
        assert_eq!(binom(-3, 2), Count::zero());
        assert_eq!(binom(2, 3), Count::zero());
        assert_eq!(binom(26, 3), Count::from(2600));
    }

    #[test]
    fn ksubsets_count_and_order() {
        for n in 0..=10 {
            for k in 0..=n {
                let all: Vec<u64> = KSubsets::new(n, k).collect();
                assert_eq!(all.len() as u64, small_binomial(n, k));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|m| m.count_ones() as usize == k));
            }
        }
        assert_eq!(KSubsets::new(64, 64).count(), 1);
        assert_eq!(KSubsets::new(64, 2).count(), 2016);
        assert_eq!(KSubsets::new(3, 4).count(), 0);
    }

    #[test]
    fn colex_rank_matches_enumeration() {
        let ranker = ColexRanker::new(9, 3);
        for (idx, mask) in KSubsets::new(9, 3).enumerate() {
            assert_eq!(ranker.rank(mask), idx);
        }
    }

    #[test]
    fn subsets_of_mask() {
        let picked: Vec<Vec<usize>> = subsets_of(0b1011_0000, 2).map(mask_vertices).collect();
        assert_eq!(picked, vec![vec![5, 6], vec![5, 8], vec![6, 8]]);
    }

    #[test]
    fn perfect_matching_counts() {
        assert_eq!(perfect_matching_count(9, 3), Count::from(280));
        assert_eq!(perfect_matching_count(12, 3), Count::from(15_400));
        assert_eq!(perfect_matching_count(16, 4), Count::from(2_627_625));
        assert_eq!(perfect_matching_count(10, 3), Count::zero());
    }
}
