//! OEIS bridge: fetch, cache, and parse b-files, then cross-validate the
//! sequences this workspace generates against their OEIS identifications.
//!
//! All comparisons run offline against a vendored snapshot when the cache
//! directory points at one; fetching is only attempted in
//! [`FetchMode::FetchIfMissing`].

mod bfile;
mod catalog;
mod client;
mod compare;
mod error;

pub use bfile::{parse_bfile, BFileSeq};
pub use catalog::{check_chain_rows, CHAIN_SEQUENCES};
pub use client::{FetchMode, OeisClient, SequenceId, Transport, TransportError};
pub use compare::{
    compare_prefix, compare_prefix_with_skip, dyck_crosscheck, prime_dyck_crosscheck, DiffReport,
    Mismatch,
};
pub use error::OeisError;
