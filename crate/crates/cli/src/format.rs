//! Text grammar for permutations, set partitions and restricted growth words.
//!
//! Words are comma- or whitespace-separated decimals (`2,3,1`, `2 3 1`);
//! partitions are comma-separated blocks joined by `/` (`1,3/2,4`). The
//! compact single-digit forms `231` and `13/24` are accepted as input only.

use std::fmt;

use sppm_core::{Permutation, RgfWord, SetPartition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(String);

impl ParseError {
    fn new(message: impl Into<String>) -> Self {
        ParseError(message.into())
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn number(token: &str, position: usize) -> Result<usize, ParseError> {
    let token = token.trim();
    if token.is_empty() {
        return Err(ParseError::new(format!("empty token at position {position}")));
    }
    match token.parse::<usize>() {
        Ok(0) => Err(ParseError::new(format!("value 0 at position {position} is not positive"))),
        Ok(v) => Ok(v),
        Err(_) => Err(ParseError::new(format!("invalid token '{token}' at position {position}"))),
    }
}

/// Compact digit strings: no commas, whitespace or zeros, and at least one
/// multi-digit run.
fn is_compact(text: &str) -> bool {
    text.chars().all(|c| c == '/' || ('1'..='9').contains(&c))
        && text.split('/').any(|run| run.len() > 1)
}

fn word(text: &str) -> Result<Vec<usize>, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if is_compact(text) && !text.contains('/') {
        return Ok(text.bytes().map(|b| (b - b'0') as usize).collect());
    }
    let tokens: Vec<&str> = if text.contains(',') {
        text.split(',').collect()
    } else {
        text.split_whitespace().collect()
    };
    tokens
        .iter()
        .enumerate()
        .map(|(i, t)| number(t, i + 1))
        .collect()
}

pub fn parse_permutation(text: &str) -> Result<Permutation, ParseError> {
    let values = word(text)?;
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for (i, &v) in values.iter().enumerate() {
        if v > n {
            return Err(ParseError::new(format!(
                "value {v} at position {} is outside [1, {n}]",
                i + 1
            )));
        }
        if seen[v] {
            return Err(ParseError::new(format!("duplicate value {v} at position {}", i + 1)));
        }
        seen[v] = true;
    }
    Ok(Permutation::new(values).expect("checked above"))
}

pub fn parse_rgf(text: &str) -> Result<RgfWord, ParseError> {
    RgfWord::new(word(text)?).map_err(|e| ParseError::new(e.to_string()))
}

pub fn parse_partition(text: &str) -> Result<SetPartition, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(SetPartition::empty());
    }
    let compact = is_compact(text);
    let mut blocks = Vec::new();
    let mut position = 0;
    for (b, raw) in text.split('/').enumerate() {
        let raw = raw.trim();
        if raw.is_empty() {
            return Err(ParseError::new(format!("empty block at position {}", b + 1)));
        }
        let mut block = Vec::new();
        if compact {
            for c in raw.bytes() {
                position += 1;
                block.push((c - b'0') as usize);
            }
        } else {
            for token in raw.split(',') {
                position += 1;
                block.push(number(token, position)?);
            }
        }
        blocks.push(block);
    }
    let n = blocks.iter().flatten().copied().max().unwrap_or(0);
    let mut seen = vec![false; n + 1];
    for &x in blocks.iter().flatten() {
        if seen[x] {
            return Err(ParseError::new(format!("repeated element {x}")));
        }
        seen[x] = true;
    }
    if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
        return Err(ParseError::new(format!("missing element {missing}")));
    }
    Ok(SetPartition::new(blocks).expect("checked above"))
}
