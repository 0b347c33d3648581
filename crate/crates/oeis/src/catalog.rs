use crate::client::{FetchMode, OeisClient, SequenceId};
use crate::compare::{compare_prefix, compare_prefix_with_skip, DiffReport};
use crate::error::OeisError;
use natmat_core::forest::tree_prefix;
use natmat_core::Nat;

/// Chains `(2k+1)·2^n − 1` with published OEIS identifications, as
/// `(chain index k, sequence id, leading remote entries to skip)`.
///
/// A052996 lists 1 and 3 ahead of the root-8 chain, so its comparison
/// skips two remote entries explicitly instead of relying on offset
/// search.
pub const CHAIN_SEQUENCES: [(u64, &str, usize); 12] = [
    (0, "A000225", 0),
    (1, "A153893", 0),
    (2, "A153894", 0),
    (3, "A086224", 0),
    (4, "A052996", 2),
    (5, "A086225", 0),
    (6, "A198274", 0),
    (7, "A196305", 0),
    (8, "A198275", 0),
    (9, "A198276", 0),
    (10, "A171389", 0),
    (11, "A291557", 0),
];

/// Compares each identified chain against its OEIS b-file over `terms`
/// terms; returns one report per row, in table order.
pub fn check_chain_rows(
    client: &OeisClient,
    mode: FetchMode,
    terms: u32,
) -> Result<Vec<(SequenceId, DiffReport)>, OeisError> {
    let mut reports = Vec::with_capacity(CHAIN_SEQUENCES.len());
    for (k, id, skip) in CHAIN_SEQUENCES {
        let id = SequenceId::parse(id)?;
        let remote = client.fetch_sequence(&id, mode)?;
        let local = tree_prefix(&Nat::from(k), terms);
        let report = if skip > 0 {
            compare_prefix_with_skip(&local, &remote, skip, terms as usize)
        } else {
            compare_prefix(&local, &remote, terms as usize)
        };
        reports.push((id, report));
    }
    Ok(reports)
}
