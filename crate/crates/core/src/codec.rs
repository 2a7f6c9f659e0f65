//! The LZE1 container, full decoding and random access extraction.
//!
//! Layout, all integers little-endian with no padding:
//!
//! ```text
//! "LZE1" | n: u64 | z: u64 | z × (source: u64, len: u64, ext: u8)
//! ```

use thiserror::Error;

use crate::parsing::{Parsing, Phrase};

pub const MAGIC: &[u8; 4] = b"LZE1";
pub const HEADER_LEN: usize = 4 + 8 + 8;
pub const RECORD_LEN: usize = 8 + 8 + 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("bad magic, expected \"LZE1\"")]
    BadMagic,
    #[error("stream truncated: need {needed} bytes, have {available}")]
    Truncated { needed: usize, available: usize },
    #[error("{extra} trailing bytes after the last record")]
    TrailingBytes { extra: usize },
    #[error("phrase lengths sum to {actual}, header says {expected}")]
    LengthMismatch { expected: u64, actual: u128 },
    #[error("phrase {index} has zero length")]
    ZeroLength { index: usize },
    #[error("phrase {index} refers to source {refers_to}, which does not precede it")]
    InvalidSource { index: usize, refers_to: u64 },
    #[error("phrase {index} copies {copy} bytes but only {available} precede its source boundary")]
    Integrity {
        index: usize,
        copy: usize,
        available: usize,
    },
    #[error("range {start}+{len} exceeds text length {n}")]
    OutOfRange { start: usize, len: usize, n: usize },
}

pub fn serialize(parsing: &Parsing) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + RECORD_LEN * parsing.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(parsing.text_len() as u64).to_le_bytes());
    out.extend_from_slice(&(parsing.len() as u64).to_le_bytes());
    for f in parsing.phrases() {
        out.extend_from_slice(&(f.source as u64).to_le_bytes());
        out.extend_from_slice(&(f.len as u64).to_le_bytes());
        out.push(f.ext);
    }
    out
}

fn read_u64(bytes: &[u8], at: usize) -> u64 {
    u64::from_le_bytes(bytes[at..at + 8].try_into().unwrap())
}

fn to_usize(v: u64, err: impl FnOnce() -> FormatError) -> Result<usize, FormatError> {
    usize::try_from(v).map_err(|_| err())
}

/// Parses an LZE1 stream, checking its structure: phrase lengths are
/// positive, sources precede their phrase, and the lengths add up to `n`.
pub fn deserialize(bytes: &[u8]) -> Result<Parsing, FormatError> {
    if bytes.len() < MAGIC.len() {
        return Err(FormatError::Truncated {
            needed: HEADER_LEN,
            available: bytes.len(),
        });
    }
    if &bytes[..4] != MAGIC {
        return Err(FormatError::BadMagic);
    }
    if bytes.len() < HEADER_LEN {
        return Err(FormatError::Truncated {
            needed: HEADER_LEN,
            available: bytes.len(),
        });
    }
    let n = read_u64(bytes, 4);
    let z = read_u64(bytes, 12);
    let body = bytes.len() - HEADER_LEN;
    let needed = (z as u128) * RECORD_LEN as u128;
    if (body as u128) < needed {
        return Err(FormatError::Truncated {
            needed: usize::try_from(needed + HEADER_LEN as u128).unwrap_or(usize::MAX),
            available: bytes.len(),
        });
    }
    if body as u128 > needed {
        return Err(FormatError::TrailingBytes {
            extra: body - needed as usize,
        });
    }

    let z = z as usize;
    let mut phrases = Vec::with_capacity(z);
    let mut total: u128 = 0;
    for (k, rec) in bytes[HEADER_LEN..].chunks_exact(RECORD_LEN).enumerate() {
        let index = k + 1;
        let source = read_u64(rec, 0);
        let len = read_u64(rec, 8);
        if len == 0 {
            return Err(FormatError::ZeroLength { index });
        }
        if source >= index as u64 {
            return Err(FormatError::InvalidSource { index, refers_to: source });
        }
        total += len as u128;
        let mismatch = || FormatError::LengthMismatch {
            expected: n,
            actual: total,
        };
        phrases.push(Phrase::new(
            source as usize,
            to_usize(len, mismatch)?,
            rec[16],
        ));
    }
    if total != n as u128 {
        return Err(FormatError::LengthMismatch {
            expected: n,
            actual: total,
        });
    }
    Ok(Parsing::new(phrases))
}

/// Reconstructs the text left to right.
pub fn decode(parsing: &Parsing) -> Result<Vec<u8>, FormatError> {
    let mut out = Vec::with_capacity(parsing.text_len());
    // ends[k] = |f_1 .. f_{k+1}|
    let mut ends = Vec::with_capacity(parsing.len());
    for (k, f) in parsing.phrases().iter().enumerate() {
        let (from, to) = copy_range(k, f, |p| ends[p - 1])?;
        out.extend_from_within(from..to);
        out.push(f.ext);
        ends.push(out.len());
    }
    Ok(out)
}

/// Source range of the copy part of phrase `k` (0-based). `prefix_len(p)` is
/// the length of the text covered by phrases `1 ..= p`.
fn copy_range(
    k: usize,
    f: &Phrase,
    prefix_len: impl FnOnce(usize) -> usize,
) -> Result<(usize, usize), FormatError> {
    let copy = f.copy_len();
    if f.source > k {
        return Err(FormatError::InvalidSource {
            index: k + 1,
            refers_to: f.source as u64,
        });
    }
    let available = if f.source == 0 { 0 } else { prefix_len(f.source) };
    if copy > available {
        return Err(FormatError::Integrity {
            index: k + 1,
            copy,
            available,
        });
    }
    Ok((available - copy, available))
}

/// Absolute end offsets of the phrases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhraseBoundaries {
    /// `ends[k]` is the position of the last byte of phrase `k + 1`.
    ends: Vec<usize>,
}

impl PhraseBoundaries {
    pub fn new(parsing: &Parsing) -> Self {
        let mut end = 0usize;
        let ends = parsing
            .phrases()
            .iter()
            .map(|f| {
                end += f.len;
                end - 1
            })
            .collect();
        Self { ends }
    }

    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    pub fn text_len(&self) -> usize {
        self.ends.last().map_or(0, |&e| e + 1)
    }

    /// 0-based index of the phrase covering `pos`.
    pub fn phrase_at(&self, pos: usize) -> usize {
        self.ends.partition_point(|&e| e < pos)
    }

    pub fn start(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.ends[k - 1] + 1
        }
    }
}

/// Work done by one extraction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExtractStats {
    /// Contiguous runs resolved, over all levels.
    pub segments: usize,
    /// Longest chain of source references followed.
    pub max_depth: usize,
}

/// `decode(parsing)[start .. start + len]` without decoding the rest.
pub fn extract(
    parsing: &Parsing,
    bounds: &PhraseBoundaries,
    start: usize,
    len: usize,
) -> Result<Vec<u8>, FormatError> {
    extract_with_stats(parsing, bounds, start, len).map(|(bytes, _)| bytes)
}

/// Resolves the request as a worklist of runs. A run inside the copy part of
/// a phrase maps to an equally long run ending at the source boundary; the
/// extension byte of each phrase is written directly.
pub fn extract_with_stats(
    parsing: &Parsing,
    bounds: &PhraseBoundaries,
    start: usize,
    len: usize,
) -> Result<(Vec<u8>, ExtractStats), FormatError> {
    let n = bounds.text_len();
    if start.checked_add(len).is_none_or(|end| end > n) {
        return Err(FormatError::OutOfRange { start, len, n });
    }
    let phrases = parsing.phrases();
    let ends = bounds.ends();
    let mut out = vec![0u8; len];
    let mut stats = ExtractStats::default();

    // (output offset, text position, run length, depth)
    let mut work = vec![(0usize, start, len, 0usize)];
    while let Some((mut at, mut pos, mut rem, depth)) = work.pop() {
        stats.segments += 1;
        stats.max_depth = stats.max_depth.max(depth);
        while rem > 0 {
            let k = bounds.phrase_at(pos);
            let f = &phrases[k];
            let end = ends[k];
            let take = rem.min(end - pos + 1);
            let copied = take.min(end - pos);
            if copied > 0 {
                let (from, _) = copy_range(k, f, |p| ends[p - 1] + 1)?;
                let offset = pos - bounds.start(k);
                work.push((at, from + offset, copied, depth + 1));
            }
            if copied < take {
                out[at + copied] = f.ext;
            }
            at += take;
            pos += take;
            rem -= take;
        }
    }
    Ok((out, stats))
}
