//! The column view of the natural matrix: arithmetic progressions
//! `A_y(k) = M_y + 2^{y+1}·k`, the packing bijection `F(x, y) =
//! (2x+1)·2^y − 1` with its inverse, and the Cantor pairing kept purely as
//! a comparison oracle.

use crate::bits::{mersenne, unit_suffix_len};
use crate::report::PartitionReport;
use crate::Nat;
use num_traits::One;

/// Cell address in the natural matrix: row `x` (chain index), column `y`
/// (progression index). The cell holds `(2x+1)·2^y − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coord {
    pub x: Nat,
    pub y: u32,
}

impl Coord {
    pub fn new(x: impl Into<Nat>, y: u32) -> Self {
        Coord { x: x.into(), y }
    }
}

/// The y-th column as an arithmetic progression: first term `M_y`,
/// difference `2^{y+1}` (always twice `first + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgressionDescriptor {
    pub n: u32,
    pub first: Nat,
    pub diff: Nat,
}

/// Descriptor of column `n`.
pub fn progression(n: u32) -> ProgressionDescriptor {
    ProgressionDescriptor {
        n,
        first: mersenne(n),
        diff: Nat::one() << (n + 1),
    }
}

/// k-th term of column `n`: `M_n + 2^{n+1}·k`, the same cell the row view
/// reads as `tree_term(k, n)`.
pub fn progression_term(n: u32, k: &Nat) -> Nat {
    mersenne(n) + (k << (n + 1))
}

/// First `count` series coefficients of the column's generating function
/// `(M_n + (M_n + 2)x) / (1 − x)²` via the implied recurrence
/// `c_m = 2c_{m−1} − c_{m−2}`, seeded `c_0 = M_n`, `c_1 = 3M_n + 2`.
pub fn progression_gf_coeffs(n: u32, count: u32) -> Vec<Nat> {
    let first = mersenne(n);
    let mut coeffs: Vec<Nat> = Vec::with_capacity(count as usize);
    for m in 0..count as usize {
        let c = match m {
            0 => first.clone(),
            1 => &first * 3u32 + 2u32,
            _ => &coeffs[m - 1] * 2u32 - &coeffs[m - 2],
        };
        coeffs.push(c);
    }
    coeffs
}

/// Packing bijection ℕ×ℕ → ℕ: `F(x, y) = (2x+1)·2^y − 1`.
pub fn pack(c: &Coord) -> Nat {
    (((&c.x << 1u32) | Nat::one()) << c.y) - 1u32
}

/// The transposed packing `G(x, y) = (2y+1)·2^x − 1 = F(y, x)`.
///
/// Panics if `x` exceeds `u32`, where `2^x` is not materializable anyway.
pub fn pack_transposed(c: &Coord) -> Nat {
    let x = u32::try_from(&c.x).expect("transposed exponent exceeds u32 range");
    pack(&Coord::new(Nat::from(c.y), x))
}

/// Inverse of [`pack`]: `y` is the unit-suffix length of `n` and
/// `x = ((n+1)/2^y − 1) / 2`.
pub fn unpack(n: &Nat) -> Coord {
    let y = unit_suffix_len(n);
    let x = (((n + 1u32) >> y) - 1u32) >> 1u32;
    Coord { x, y }
}

/// Cantor pairing `π(x, y) = (3x + (x+y)² + y) / 2`, included only as an
/// independent bijection oracle for tests; never used on production paths.
pub fn cantor_pack(c: &Coord) -> Nat {
    let y = Nat::from(c.y);
    let sum = &c.x + &y;
    (&c.x * 3u32 + &sum * &sum + y) >> 1u32
}

/// Checks that every `n < bound` lies in exactly one column progression:
/// forward enumeration of all column terms below `bound` against a
/// coverage map, plus inversion through [`unpack`]. Column sizes are
/// reported so densities (1/2, 1/4, ...) can be inspected.
pub fn verify_progression_partition(bound: u64) -> PartitionReport {
    assert!(bound >= 1, "bound must be at least 1");
    let mut hits = vec![0u8; bound as usize];
    let mut column_sizes = Vec::new();

    // Forward route: column y holds M_y, M_y + d_y, ... while < bound.
    let mut y = 0u32;
    loop {
        let first = mersenne(y);
        if u64::try_from(&first).map(|v| v >= bound).unwrap_or(true) {
            break;
        }
        let mut size = 0u64;
        let mut term = first;
        let step = Nat::one() << (y + 1);
        loop {
            let idx = match u64::try_from(&term) {
                Ok(v) if v < bound => v,
                _ => break,
            };
            hits[idx as usize] = hits[idx as usize].saturating_add(1);
            size += 1;
            term += &step;
        }
        column_sizes.push(size);
        y += 1;
    }

    let mut first_violation = None;
    let mut checked = 0u64;
    for n in 0..bound {
        let value = Nat::from(n);
        let c = unpack(&value);
        let consistent = hits[n as usize] == 1 && pack(&c) == value;
        if consistent {
            checked += 1;
        } else if first_violation.is_none() {
            first_violation = Some(n);
        }
    }

    let distinct_groups = column_sizes.len() as u64;
    PartitionReport {
        bound,
        checked,
        all_unique: first_violation.is_none(),
        first_violation,
        distinct_groups,
        column_sizes,
    }
}

/// Convenience used by segment tooling: cell value read by rows must equal
/// the cell value read by columns.
pub fn cell_agrees(k: &Nat, n: u32) -> bool {
    progression_term(n, k) == crate::forest::tree_term(k, n)
}
