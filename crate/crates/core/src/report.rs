//! Summary report for finite-range partition verification.

/// Outcome of checking that every `n < bound` lands in exactly one group
/// (one chain of the forest, or one column progression of the matrix).
///
/// A summary value rather than a per-element dump so multi-million-element
/// bounds stay cheap to report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    /// Exclusive upper end of the verified range `[0, bound)`.
    pub bound: u64,
    /// Values examined (equals `bound` on success).
    pub checked: u64,
    /// True when every value was covered exactly once.
    pub all_unique: bool,
    /// First value covered zero or multiple times, if any.
    pub first_violation: Option<u64>,
    /// Number of distinct groups that intersect `[0, bound)`.
    pub distinct_groups: u64,
    /// Per-column sizes for progression verification (index = column);
    /// empty for the forest check, where groups are the chains themselves.
    pub column_sizes: Vec<u64>,
}

impl PartitionReport {
    pub fn passed(&self) -> bool {
        self.all_unique && self.checked == self.bound
    }
}

impl std::fmt::Display for PartitionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.all_unique {
            write!(
                f,
                "bound={} ok: {} values each covered once across {} groups",
                self.bound, self.checked, self.distinct_groups
            )
        } else {
            write!(
                f,
                "bound={} FAILED at value {:?}",
                self.bound, self.first_violation
            )
        }
    }
}
