//! The forest view: unary Mersenne chains `{(2k+1)·2^n − 1}` grown from each
//! even root `2k` by the successor `a ↦ 2a + 1`, their closed form, their
//! generating-function coefficients, and a finite-range partition check.

use crate::bits::{mersenne, unit_suffix_len};
use crate::report::PartitionReport;
use crate::Nat;
use num_integer::Integer;
use num_traits::One;

/// Identifies the chain rooted at the even number `2k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeId {
    pub k: Nat,
}

/// A node addressed by chain and depth; `value = (2k+1)·2^depth − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub value: Nat,
    pub tree: TreeId,
    pub depth: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestError {
    /// Even numbers are roots: they have no predecessor inside a chain.
    EvenInput { value: Nat },
}

impl std::fmt::Display for ForestError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ForestError::EvenInput { value } => {
                write!(f, "{value} is even and has no in-chain predecessor")
            }
        }
    }
}

impl std::error::Error for ForestError {}

/// Successor within a chain: `2a + 1` (appends a 1-bit to the code).
pub fn successor(a: &Nat) -> Nat {
    (a << 1u32) | Nat::one()
}

/// Predecessor within a chain: `(a − 1) / 2` for odd `a` (drops the final
/// 1-bit).
pub fn predecessor(a: &Nat) -> Result<Nat, ForestError> {
    if a.is_even() {
        return Err(ForestError::EvenInput { value: a.clone() });
    }
    Ok(a >> 1u32)
}

/// Root of the chain containing `t`: strip the unit suffix,
/// `(t − M_m) / 2^m` with `m = unit_suffix_len(t)`. Always even; even
/// numbers are their own roots and Mersenne numbers root at 0.
pub fn root_of(t: &Nat) -> Nat {
    let m = unit_suffix_len(t);
    (t - mersenne(m)) >> m
}

/// Index of the chain containing `t` (the root halved).
pub fn tree_index(t: &Nat) -> Nat {
    root_of(t) >> 1u32
}

/// Closed form for the node of chain `k` at depth `n`: `(2k+1)·2^n − 1`.
pub fn tree_term(k: &Nat, n: u32) -> Nat {
    (((k << 1u32) | Nat::one()) << n) - 1u32
}

/// Depth of `t` inside its chain (0 for even numbers, the unit-suffix
/// length otherwise), bundled with the chain id.
pub fn locate(t: &Nat) -> TreeNode {
    TreeNode {
        value: t.clone(),
        tree: TreeId { k: tree_index(t) },
        depth: unit_suffix_len(t),
    }
}

/// First `count` terms of chain `k`, starting at the root.
pub fn tree_prefix(k: &Nat, count: u32) -> Vec<Nat> {
    (0..count).map(|n| tree_term(k, n)).collect()
}

/// First `count` power-series coefficients of the chain's generating
/// function `(2k − (2k−1)x) / (1 − 3x + 2x²)`, produced by the linear
/// recurrence `c_n = 3c_{n−1} − 2c_{n−2}` the denominator implies, with
/// `c_0 = 2k` and `c_1 = 4k + 1` seeded by the numerator.
pub fn tree_gf_coeffs(k: &Nat, count: u32) -> Vec<Nat> {
    let mut coeffs: Vec<Nat> = Vec::with_capacity(count as usize);
    for n in 0..count {
        let c = match n {
            0 => k << 1u32,
            1 => (k << 2u32) | Nat::one(),
            _ => {
                let a = &coeffs[n as usize - 1];
                let b = &coeffs[n as usize - 2];
                a * 3u32 - (b << 1u32)
            }
        };
        coeffs.push(c);
    }
    coeffs
}

/// Checks that every `n < bound` belongs to exactly one chain, two ways:
/// forward enumeration of all chain terms below `bound` into a coverage
/// map, and per-value inversion through [`root_of`] / closed-form
/// reconstruction.
pub fn verify_tree_partition(bound: u64) -> PartitionReport {
    assert!(bound >= 1, "bound must be at least 1");
    let mut hits = vec![0u8; bound as usize];

    // Forward route: chain k contributes 2k, 4k+1, 8k+3, ... while < bound.
    let mut roots = 0u64;
    let mut k = 0u64;
    while 2 * k < bound {
        roots += 1;
        let mut term = Nat::from(2 * k);
        loop {
            let idx = match u64::try_from(&term) {
                Ok(v) if v < bound => v,
                _ => break,
            };
            hits[idx as usize] = hits[idx as usize].saturating_add(1);
            term = successor(&term);
        }
        k += 1;
    }

    let mut first_violation = None;
    let mut checked = 0u64;
    for n in 0..bound {
        let covered_once = hits[n as usize] == 1;
        // Inverse route: locate n and rebuild it from (k, depth).
        let value = Nat::from(n);
        let node = locate(&value);
        let rebuilt = tree_term(&node.tree.k, node.depth) == value;
        if covered_once && rebuilt {
            checked += 1;
        } else if first_violation.is_none() {
            first_violation = Some(n);
        }
    }

    PartitionReport {
        bound,
        checked,
        all_unique: first_violation.is_none(),
        first_violation,
        distinct_groups: roots,
        column_sizes: Vec::new(),
    }
}
