use crate::bfile::BFileSeq;
use crate::error::OeisError;
use natmat_core::bits::is_dyck;
use natmat_core::primes::{is_prime, PrimalityPolicy};
use natmat_core::Nat;

/// First disagreement between a local sequence and a b-file. A `None` side
/// means that side ran out of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub position: usize,
    /// Value the b-file carries at this position.
    pub expected: Option<Nat>,
    /// Value generated locally.
    pub actual: Option<Nat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    /// Consecutive agreeing terms from the alignment start.
    pub matched: usize,
    pub first_mismatch: Option<Mismatch>,
    /// How many leading remote entries the chosen alignment skipped.
    pub offset_used: usize,
}

impl DiffReport {
    pub fn is_clean(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl std::fmt::Display for DiffReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.first_mismatch {
            None => write!(
                f,
                "{} terms matched (offset {})",
                self.matched, self.offset_used
            ),
            Some(m) => write!(
                f,
                "{} terms matched (offset {}), mismatch at {}: expected {:?}, got {:?}",
                self.matched,
                self.offset_used,
                m.position,
                m.expected.as_ref().map(|v| v.to_string()),
                m.actual.as_ref().map(|v| v.to_string()),
            ),
        }
    }
}

fn compare_at(local: &[Nat], remote: &[&Nat], offset: usize, max_terms: usize) -> DiffReport {
    let remote = &remote[offset.min(remote.len())..];
    let limit = max_terms.min(local.len()).min(remote.len());
    let mut matched = 0;
    for i in 0..limit {
        if &local[i] != remote[i] {
            return DiffReport {
                matched,
                first_mismatch: Some(Mismatch {
                    position: i,
                    expected: Some(remote[i].clone()),
                    actual: Some(local[i].clone()),
                }),
                offset_used: offset,
            };
        }
        matched += 1;
    }
    DiffReport {
        matched,
        first_mismatch: None,
        offset_used: offset,
    }
}

/// Compares `local` against the b-file with a fixed number of leading
/// remote entries skipped (for sequences listed with extra initial terms).
pub fn compare_prefix_with_skip(
    local: &[Nat],
    remote: &BFileSeq,
    skip: usize,
    max_terms: usize,
) -> DiffReport {
    let values: Vec<&Nat> = remote.values().collect();
    compare_at(local, &values, skip, max_terms)
}

/// Compares `local` against the b-file, aligning `local[0]` with whichever
/// of the first three remote entries maximizes the matched prefix (OEIS
/// offset conventions vary by one or two positions).
pub fn compare_prefix(local: &[Nat], remote: &BFileSeq, max_terms: usize) -> DiffReport {
    let values: Vec<&Nat> = remote.values().collect();
    let mut best = compare_at(local, &values, 0, max_terms);
    for offset in 1..3usize {
        if best.is_clean() {
            break;
        }
        let candidate = compare_at(local, &values, offset, max_terms);
        if candidate.matched > best.matched {
            best = candidate;
        }
    }
    best
}

/// Coverage check shared by the membership crosschecks: the file must
/// extend to `bound − 1` or beyond, otherwise absence of a value below
/// `bound` proves nothing.
fn ensure_covers(bfile: &BFileSeq, bound: u64) -> Result<(), OeisError> {
    let bound_nat = Nat::from(bound);
    let covered = bfile
        .max_value()
        .is_some_and(|max| max + 1u32 >= bound_nat);
    if covered {
        Ok(())
    } else {
        Err(OeisError::CoverageGap {
            covered_to: bfile.max_value().cloned(),
            bound,
        })
    }
}

fn crosscheck(local: Vec<Nat>, bfile: &BFileSeq, bound: u64) -> Result<DiffReport, OeisError> {
    let bound_nat = Nat::from(bound);
    let remote: Vec<&Nat> = bfile.values().take_while(|v| **v < bound_nat).collect();
    let limit = local.len().max(remote.len());
    let mut matched = 0;
    for i in 0..limit {
        match (local.get(i), remote.get(i)) {
            (Some(a), Some(b)) if &a == b => matched += 1,
            (actual, expected) => {
                return Ok(DiffReport {
                    matched,
                    first_mismatch: Some(Mismatch {
                        position: i,
                        expected: expected.map(|v| (*v).clone()),
                        actual: actual.cloned(),
                    }),
                    offset_used: 0,
                });
            }
        }
    }
    Ok(DiffReport {
        matched,
        first_mismatch: None,
        offset_used: 0,
    })
}

/// The ascending Dyck numbers below `bound` must equal the b-file values
/// below `bound`, element for element (0 included). Coverage is checked
/// before any enumeration happens.
pub fn dyck_crosscheck(bound: u64, dyck_bfile: &BFileSeq) -> Result<DiffReport, OeisError> {
    ensure_covers(dyck_bfile, bound)?;
    let local: Vec<Nat> = (0..bound)
        .filter(|&n| is_dyck(&Nat::from(n)))
        .map(Nat::from)
        .collect();
    crosscheck(local, dyck_bfile, bound)
}

/// The ascending prime Dyck numbers below `bound` must equal the b-file
/// values below `bound`.
pub fn prime_dyck_crosscheck(
    bound: u64,
    bfile: &BFileSeq,
    policy: &PrimalityPolicy,
) -> Result<DiffReport, OeisError> {
    ensure_covers(bfile, bound)?;
    let local: Vec<Nat> = (0..bound)
        .map(Nat::from)
        .filter(|n| is_dyck(n) && is_prime(n, policy).is_prime)
        .collect();
    crosscheck(local, bfile, bound)
}
