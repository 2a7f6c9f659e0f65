//! Greedy LZ-End parsing straight from the definition.
//!
//! Each phrase copies the longest string that occurs ending exactly at an
//! earlier phrase boundary, found by comparing bytes at every boundary and
//! every length. Cubic time; meant for checking [`crate::parse`] on short
//! inputs.

use crate::parsing::{Parsing, Phrase};

/// Ties between equally long sources go to the smallest phrase number.
pub fn naive_parse(input: &[u8]) -> Parsing {
    let n = input.len();
    let mut phrases = Vec::new();
    // bounds[p - 1] = |f_1 .. f_p|
    let mut bounds: Vec<usize> = Vec::new();
    let mut start = 0;
    while start < n {
        let (copy, source) = longest_copy(input, &bounds, start);
        phrases.push(Phrase::new(source, copy + 1, input[start + copy]));
        start += copy + 1;
        bounds.push(start);
    }
    Parsing::new(phrases)
}

/// Longest `len` with `input[b - len .. b] == input[start .. start + len]`
/// for a boundary `b`, leaving at least one byte for the extension.
pub fn longest_copy(input: &[u8], bounds: &[usize], start: usize) -> (usize, usize) {
    let room = input.len() - start - 1;
    let mut best = (0, 0);
    for (k, &b) in bounds.iter().enumerate() {
        for len in (best.0 + 1..=b.min(room)).rev() {
            if input[b - len..b] == input[start..start + len] {
                best = (len, k + 1);
                break;
            }
        }
    }
    best
}
