use std::num::NonZeroUsize;

use crate::boundary_dict::DictKind;

/// One LZ-End phrase: copy the last `len - 1` bytes of the prefix ending at
/// the boundary of phrase `source`, then append `ext`.
///
/// Phrase numbers are 1-based; `source == 0` names the empty phrase and only
/// occurs together with `len == 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Phrase {
    pub source: usize,
    pub len: usize,
    pub ext: u8,
}

impl Phrase {
    pub const fn new(source: usize, len: usize, ext: u8) -> Self {
        Self { source, len, ext }
    }

    /// A phrase consisting of a single explicit byte.
    pub const fn literal(ext: u8) -> Self {
        Self::new(0, 1, ext)
    }

    /// Number of bytes taken from the source.
    pub fn copy_len(&self) -> usize {
        self.len - 1
    }
}

/// The phrases `f_1 .. f_z` of a text of length `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Parsing {
    phrases: Vec<Phrase>,
    n: usize,
}

impl Parsing {
    /// The text length is the sum of the phrase lengths.
    pub fn new(phrases: Vec<Phrase>) -> Self {
        let n = phrases.iter().map(|p| p.len).sum();
        Self { phrases, n }
    }

    pub fn phrases(&self) -> &[Phrase] {
        &self.phrases
    }

    pub fn into_phrases(self) -> Vec<Phrase> {
        self.phrases
    }

    /// Length of the parsed text.
    pub fn text_len(&self) -> usize {
        self.n
    }

    /// Number of phrases.
    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    pub fn max_phrase_len(&self) -> usize {
        self.phrases.iter().map(|p| p.len).max().unwrap_or(0)
    }

    pub fn phrase_lengths(&self) -> Vec<usize> {
        self.phrases.iter().map(|p| p.len).collect()
    }

    /// `z / n`, or 0 for the empty text.
    pub fn ratio(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.phrases.len() as f64 / self.n as f64
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseConfig {
    /// Upper bound on phrase length.
    pub max_phrase_len: Option<NonZeroUsize>,
    /// Search merge sources first, with the boundary of the second to last
    /// phrase removed from the dictionary up front. Produces the same phrases.
    pub merge_first: bool,
    /// Boundary dictionary implementation; does not affect the output.
    pub dict: DictKind,
}

impl ParseConfig {
    /// Panics if `h == 0`.
    pub fn with_max_phrase_len(mut self, h: usize) -> Self {
        self.max_phrase_len = Some(NonZeroUsize::new(h).expect("phrase length cap must be at least 1"));
        self
    }

    pub fn with_merge_first(mut self, on: bool) -> Self {
        self.merge_first = on;
        self
    }

    pub fn with_dict(mut self, dict: DictKind) -> Self {
        self.dict = dict;
        self
    }

    pub(crate) fn cap(&self) -> usize {
        self.max_phrase_len.map_or(usize::MAX, NonZeroUsize::get)
    }
}
