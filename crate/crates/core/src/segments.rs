//! Initial Dyck segments of the matrix rows: `S_y` holds the first `2^y`
//! terms of column `y`, all Dyck numbers, an arithmetic progression with
//! first term `M_y` and difference `d_y = 2^{y+1}`.

use crate::bits::mersenne;
use crate::Nat;
use num_traits::One;

/// `S_y` described without materializing terms: first `M_y`, difference
/// `2^{y+1}`, length `2^y`; term `k` is `(2k+1)·2^y − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDescriptor {
    pub y: u32,
    pub first: Nat,
    pub diff: Nat,
    pub length: Nat,
}

impl SegmentDescriptor {
    /// Term at position `k` (caller keeps `k < length`).
    pub fn term(&self, k: u64) -> Nat {
        term_at(self.y, k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentError {
    /// Requested more terms than the segment holds.
    LimitExceeded { y: u32, limit: u64 },
    /// Unlimited materialization refused: 2^y terms would not fit in memory.
    TooLarge { y: u32 },
}

impl std::fmt::Display for SegmentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SegmentError::LimitExceeded { y, limit } => {
                write!(f, "segment {y} has 2^{y} terms, fewer than limit {limit}")
            }
            SegmentError::TooLarge { y } => {
                write!(
                    f,
                    "refusing to materialize all 2^{y} terms of segment {y}; pass a limit"
                )
            }
        }
    }
}

impl std::error::Error for SegmentError {}

/// Largest `y` whose full segment may be materialized without a limit.
pub const MAX_UNLIMITED_Y: u32 = 30;

/// Descriptor of `S_y`.
pub fn segment(y: u32) -> SegmentDescriptor {
    SegmentDescriptor {
        y,
        first: mersenne(y),
        diff: Nat::one() << (y + 1),
        length: Nat::one() << y,
    }
}

fn term_at(y: u32, k: u64) -> Nat {
    ((Nat::from(2 * u128::from(k) + 1)) << y) - 1u32
}

/// The first `min(limit, 2^y)` terms of `S_y`; with no limit, all `2^y`
/// terms (refused above [`MAX_UNLIMITED_Y`]).
pub fn segment_terms(y: u32, limit: Option<u64>) -> Result<Vec<Nat>, SegmentError> {
    let count = match limit {
        Some(limit) => {
            if y < 64 && limit > 1u64 << y {
                return Err(SegmentError::LimitExceeded { y, limit });
            }
            limit
        }
        None => {
            if y > MAX_UNLIMITED_Y {
                return Err(SegmentError::TooLarge { y });
            }
            1u64 << y
        }
    };
    Ok((0..count).map(|k| term_at(y, k)).collect())
}

/// Last (maximal) term of `S_y`. Three equivalent formulas are evaluated
/// and cross-checked: `M_{y+1}·2^y − 1`, `M_y·(2M_y + 3)`, and
/// `d_y(d_y − 1)/2 − 1`.
pub fn segment_max(y: u32) -> Nat {
    let via_shift = (mersenne(y + 1) << y) - 1u32;
    let m = mersenne(y);
    let via_product = &m * ((&m << 1u32) + 3u32);
    let d = Nat::one() << (y + 1);
    let via_difference = ((&d * (&d - 1u32)) >> 1u32) - 1u32;
    assert_eq!(via_shift, via_product, "max-term identity broken at y = {y}");
    assert_eq!(
        via_shift, via_difference,
        "max-term identity broken at y = {y}"
    );
    via_shift
}

/// An arithmetic progression of `k` Dyck numbers: the first `k` terms of
/// `S_l` with `l = ⌈log₂ k⌉` (so the segment is long enough), difference
/// `2^{l+1}`.
pub fn ap_of_length(k: u64) -> Vec<Nat> {
    assert!(k >= 1, "progression length must be at least 1");
    let l = ceil_log2(k);
    segment_terms(l, Some(k)).expect("k <= 2^ceil(log2 k) by construction")
}

fn ceil_log2(k: u64) -> u32 {
    debug_assert!(k >= 1);
    if k == 1 {
        0
    } else {
        64 - (k - 1).leading_zeros()
    }
}

/// The diagonal of maximal terms `[segment_max(0), …, segment_max(count−1)]`
/// (OEIS A129868).
pub fn diagonal_max_terms(count: u32) -> Vec<Nat> {
    (0..count).map(segment_max).collect()
}
