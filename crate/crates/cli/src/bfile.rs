//! OEIS-style b-file parsing: whitespace-separated "index value" lines,
//! '#' comment lines and blank lines ignored, indices strictly
//! increasing. Values are arbitrary-precision naturals.

use num_bigint::BigUint;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub sequence_id: String,
    pub entries: Vec<(i64, BigUint)>,
}

impl BFile {
    /// Parse b-file text. `sequence_id` is a label for diagnostics only
    /// (conventionally the file stem, e.g. "b001037").
    pub fn parse(sequence_id: &str, text: &str) -> Result<BFile, String> {
        let mut entries: Vec<(i64, BigUint)> = Vec::new();
        for (number, line) in text.lines().enumerate() {
            let number = number + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (index_token, value_token) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(i), Some(v), None) => (i, v),
                _ => {
                    return Err(format!(
                        "{sequence_id} line {number}: expected \"index value\", got {line:?}"
                    ))
                }
            };
            let index = i64::from_str(index_token).map_err(|_| {
                format!("{sequence_id} line {number}: index {index_token:?} is not an integer")
            })?;
            let value = BigUint::from_str(value_token).map_err(|_| {
                format!(
                    "{sequence_id} line {number}: value {value_token:?} is not a nonnegative integer"
                )
            })?;
            if let Some(&(previous, _)) = entries.last() {
                if index <= previous {
                    return Err(format!(
                        "{sequence_id} line {number}: index {index} does not increase past {previous}"
                    ));
                }
            }
            entries.push((index, value));
        }
        Ok(BFile {
            sequence_id: sequence_id.to_string(),
            entries,
        })
    }
}
