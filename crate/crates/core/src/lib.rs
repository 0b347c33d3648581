//! Number-theory core for the natural-matrix toolkit.
//!
//! The set of naturals (0 included) can be tiled two ways by the same grid
//! `m[x][y] = (2x+1)·2^y − 1`:
//!
//! * by rows — unary Mersenne chains grown by `a ↦ 2a + 1` from each even
//!   root ([`forest`]);
//! * by columns — arithmetic progressions `M_y + 2^{y+1}·k` with
//!   power-of-two differences ([`matrix`]).
//!
//! Reading a grid cell as a single integer gives the packing bijection
//! `F(x, y) = (2x+1)·2^y − 1` between ℕ×ℕ and ℕ, inverted through the
//! 2-adic valuation of `n + 1`. The initial run of each row consists of
//! Dyck numbers (OEIS A036991); [`segments`] models those runs and
//! [`primes`] scans them for primes, including least-prime positions and
//! the `p < d²/2` bound check.

pub mod bits;
pub mod forest;
pub mod matrix;
pub mod primes;
pub mod report;
pub mod segments;

/// Arbitrary-precision non-negative integer, the universal value type here.
pub type Nat = num_bigint::BigUint;

pub use bits::{bits_lsb, is_dyck, is_dyck_oracle, mersenne, unit_suffix_len, BitSeqLsb};
pub use report::PartitionReport;
