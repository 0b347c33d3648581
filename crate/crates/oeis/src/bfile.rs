use crate::error::OeisError;
use natmat_core::Nat;

/// A parsed OEIS b-file: ordered `(index, value)` pairs with strictly
/// increasing indices and non-negative values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileSeq {
    pub sequence_id: String,
    pub entries: Vec<(i64, Nat)>,
}

impl BFileSeq {
    pub fn values(&self) -> impl Iterator<Item = &Nat> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest value in the file (values of the sequences handled here are
    /// increasing, but this does not assume it).
    pub fn max_value(&self) -> Option<&Nat> {
        self.values().max()
    }
}

/// Parses b-file text: one `index value` pair per line, whitespace
/// separated; `#` comment lines and blank lines are ignored. Total on any
/// input — bad lines come back as [`OeisError::MalformedLine`], never a
/// panic.
pub fn parse_bfile(sequence_id: &str, text: &str) -> Result<BFileSeq, OeisError> {
    let mut entries: Vec<(i64, Nat)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || OeisError::MalformedLine {
            line_no,
            content: line.to_string(),
        };
        let mut tokens = trimmed.split_whitespace();
        let index: i64 = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(malformed)?;
        let value: Nat = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(malformed)?;
        if tokens.next().is_some() {
            return Err(malformed());
        }
        if let Some((prev, _)) = entries.last() {
            if index <= *prev {
                return Err(malformed());
            }
        }
        entries.push((index, value));
    }
    Ok(BFileSeq {
        sequence_id: sequence_id.to_string(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    #[test]
    fn plain_lines() {
        let seq = parse_bfile("A000225", "0 0\n1 1\n2 3\n").unwrap();
        assert_eq!(seq.entries, vec![(0, nat(0)), (1, nat(1)), (2, nat(3))]);
    }

    #[test]
    fn comments_and_blanks_skipped() {
        let seq = parse_bfile("A", "# comment\n\n1 5\n").unwrap();
        assert_eq!(seq.entries, vec![(1, nat(5))]);
    }

    #[test]
    fn bad_token_rejected() {
        assert!(matches!(
            parse_bfile("A", "1 x\n"),
            Err(OeisError::MalformedLine { line_no: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("A", "0 0\n1 2 3\n"),
            Err(OeisError::MalformedLine { line_no: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("A", "5 1\n4 2\n"),
            Err(OeisError::MalformedLine { line_no: 2, .. })
        ));
        // Values are non-negative by invariant.
        assert!(parse_bfile("A", "0 -3\n").is_err());
    }

    #[test]
    fn huge_values_preserved() {
        let v = "9".repeat(300);
        let seq = parse_bfile("A", &format!("7 {v}\n")).unwrap();
        assert_eq!(seq.entries[0].1.to_string(), v);
    }
}
