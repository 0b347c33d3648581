//! Parser totality: arbitrary input never panics, and well-formed input
//! round-trips.

use natmat_oeis::{parse_bfile, OeisError};
use proptest::prelude::*;

proptest! {
    #[test]
    fn parser_is_total(text in any::<String>()) {
        match parse_bfile("A000000", &text) {
            Ok(_) => {}
            Err(OeisError::MalformedLine { .. }) => {}
            Err(other) => prop_assert!(false, "unexpected error: {other}"),
        }
    }

    #[test]
    fn well_formed_lines_round_trip(entries in prop::collection::vec((0i64..1 << 40, any::<u64>()), 0..50)) {
        // Force strictly increasing indices.
        let mut index = -1i64;
        let mut text = String::new();
        let mut expected = Vec::new();
        for (gap, value) in entries {
            index += 1 + (gap % 1000);
            text.push_str(&format!("{index} {value}\n"));
            expected.push((index, value));
        }
        let seq = parse_bfile("A000000", &text).unwrap();
        prop_assert_eq!(seq.entries.len(), expected.len());
        for ((pi, pv), (ei, ev)) in seq.entries.iter().zip(expected) {
            prop_assert_eq!(*pi, ei);
            prop_assert_eq!(pv.to_string(), ev.to_string());
        }
    }
}
