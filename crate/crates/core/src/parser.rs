//! Left-to-right LZ-End parsing, one input byte per step.
//!
//! Appending a byte to a text can only change its parsing in three ways: the
//! last two phrases merge into one, the last phrase grows by one byte, or a
//! new one-byte phrase begins. Each step finds copy sources for the first two
//! cases by predecessor and successor searches among the already completed
//! phrase boundaries, which are kept in lex-space so that the copy length is a
//! single range minimum over the LCP array.
//!
//! The boundary of the most recent phrase is never in the dictionary. It is
//! inserted only when a new phrase begins, and a merge removes the boundary of
//! the phrase that disappears.

use crate::boundary_dict::{BitTrieDict, BoundaryDict, DictKind, OrderedDict};
use crate::parsing::{ParseConfig, Parsing, Phrase};
use crate::text_index::TextIndex;

/// Computes the LZ-End parsing of `input`.
pub fn parse(input: &[u8], config: ParseConfig) -> Parsing {
    if input.is_empty() {
        return Parsing::default();
    }
    parse_with_index(input, TextIndex::build(input), config)
}

/// Like [`parse`], with an index that was built for `input` beforehand.
pub fn parse_with_index(input: &[u8], index: TextIndex, config: ParseConfig) -> Parsing {
    if input.is_empty() {
        return Parsing::default();
    }
    match config.dict {
        DictKind::BTree => Parser::<BoundaryDict>::with_dict(input, index, config).finish(),
        DictKind::BitTrie => Parser::<BitTrieDict>::with_dict(input, index, config).finish(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Predecessor search, excluding the probe.
    Smaller,
    /// Successor search, excluding the probe.
    Greater,
}

/// A completed phrase boundary found next to a probe position in lex-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SourceHit {
    /// Lex rank of the boundary.
    pub lex: usize,
    /// Phrase ending at that boundary.
    pub phrase: usize,
    /// Common suffix length of the two prefixes.
    pub copy_len: usize,
}

/// Copy sources that allow extending the last phrase or merging the last two.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Candidates {
    pub extend: Option<usize>,
    pub merge: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepAction {
    /// A new single byte phrase.
    Begin,
    /// The last phrase grew by one byte.
    Extend { source: usize },
    /// The last two phrases became one; `unmarked` is the removed dictionary key.
    Merge { source: usize, unmarked: usize },
}

/// What happened while consuming one input byte.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub pos: usize,
    /// Phrase count before the step.
    pub phrases_before: usize,
    pub action: StepAction,
    /// The last phrase after the step.
    pub phrase: Phrase,
}

/// Operation counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseStats {
    pub begins: usize,
    pub extends: usize,
    pub merges: usize,
    pub dict_inserts: usize,
    pub dict_removes: usize,
    pub dict_queries: usize,
}

/// Parser state; drive it with [`Parser::step`] or run it with [`Parser::finish`].
pub struct Parser<'a, D = BoundaryDict> {
    input: &'a [u8],
    index: TextIndex,
    config: ParseConfig,
    /// `f_1 .. f_z`
    phrases: Vec<Phrase>,
    dict: D,
    pos: usize,
    stats: ParseStats,
}

enum Resolution {
    Begin,
    Extend(usize),
    Merge { source: usize, unmarked: bool },
}

impl<'a> Parser<'a> {
    /// A parser with the B-tree dictionary; `config.dict` is not consulted.
    pub fn new(input: &'a [u8], config: ParseConfig) -> Self {
        Self::with_index(input, TextIndex::build(input), config)
    }

    pub fn with_index(input: &'a [u8], index: TextIndex, config: ParseConfig) -> Self {
        Self::with_dict(input, index, config)
    }
}

impl<'a, D: OrderedDict> Parser<'a, D> {
    /// A parser over any dictionary type.
    pub fn with_dict(input: &'a [u8], index: TextIndex, config: ParseConfig) -> Self {
        assert_eq!(index.len(), input.len(), "index built for a different input");
        Self {
            input,
            index,
            config,
            phrases: Vec::new(),
            dict: D::with_universe(input.len()),
            pos: 0,
            stats: ParseStats::default(),
        }
    }

    /// Next input position to consume.
    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn phrases(&self) -> &[Phrase] {
        &self.phrases
    }

    pub fn dict(&self) -> &D {
        &self.dict
    }

    pub fn index(&self) -> &TextIndex {
        &self.index
    }

    pub fn stats(&self) -> ParseStats {
        self.stats
    }

    pub fn is_done(&self) -> bool {
        self.pos >= self.input.len()
    }

    /// Runs the remaining steps.
    pub fn finish(mut self) -> Parsing {
        while self.step().is_some() {}
        Parsing::new(self.phrases)
    }

    /// Lex rank of the prefix parsed so far, i.e. of the end of the last phrase.
    pub fn current_lex(&self) -> Option<usize> {
        self.pos.checked_sub(1).map(|i| self.index.a_prime()[i])
    }

    /// Nearest completed boundary strictly below `probe` in lex order.
    pub fn lex_smaller_phrase(&mut self, probe: usize) -> Option<SourceHit> {
        self.stats.dict_queries += 1;
        let (lex, phrase) = self.dict.predecessor(probe.checked_sub(1)?)?;
        Some(SourceHit {
            lex,
            phrase,
            copy_len: self.index.lce_distinct(lex, probe),
        })
    }

    /// Nearest completed boundary strictly above `probe` in lex order.
    pub fn lex_greater_phrase(&mut self, probe: usize) -> Option<SourceHit> {
        self.stats.dict_queries += 1;
        let (lex, phrase) = self.dict.successor(probe + 1)?;
        Some(SourceHit {
            lex,
            phrase,
            copy_len: self.index.lce_distinct(probe, lex),
        })
    }

    fn lex_neighbor(&mut self, dir: Direction, probe: usize) -> Option<SourceHit> {
        match dir {
            Direction::Smaller => self.lex_smaller_phrase(probe),
            Direction::Greater => self.lex_greater_phrase(probe),
        }
    }

    fn last_len(&self) -> usize {
        self.phrases.last().map_or(0, |p| p.len)
    }

    fn may_extend(&self, last: usize) -> bool {
        last < self.config.cap()
    }

    fn may_merge(&self, last: usize, prev: usize) -> bool {
        last + prev < self.config.cap()
    }

    /// Looks for extension and merge sources on one side of `probe`, which
    /// must be the lex rank of the current prefix.
    ///
    /// If the nearest boundary belongs to the second to last phrase it cannot
    /// serve a merge, so one more query continues past it. The copy length
    /// from that farther boundary is the smaller of the two hops.
    pub fn find_copy_source(&mut self, dir: Direction, probe: usize, cands: &mut Candidates) {
        let z = self.phrases.len();
        let last = self.last_len();
        if z == 0 || !self.may_extend(last) {
            return;
        }
        let Some(hit) = self.lex_neighbor(dir, probe) else {
            return;
        };
        if hit.copy_len < last {
            return;
        }
        cands.extend = Some(hit.phrase);

        if self.pos > last {
            let prev = self.phrases[z - 2].len;
            if !self.may_merge(last, prev) {
                return;
            }
            let mut source = hit;
            if hit.phrase == z - 1 {
                let Some(next) = self.lex_neighbor(dir, hit.lex) else {
                    return;
                };
                source = SourceHit {
                    copy_len: next.copy_len.min(hit.copy_len),
                    ..next
                };
            }
            if source.copy_len >= last + prev {
                cands.merge = Some(source.phrase);
            }
        }
    }

    /// Candidate search for the current position, smaller side first.
    pub fn candidates(&mut self) -> Candidates {
        let mut cands = Candidates::default();
        let Some(probe) = self.current_lex() else {
            return cands;
        };
        self.find_copy_source(Direction::Smaller, probe, &mut cands);
        if cands.extend.is_none() || cands.merge.is_none() {
            self.find_copy_source(Direction::Greater, probe, &mut cands);
        }
        cands
    }

    fn resolve_default(&mut self) -> Resolution {
        let cands = self.candidates();
        match (cands.merge, cands.extend) {
            (Some(source), _) => Resolution::Merge {
                source,
                unmarked: false,
            },
            (None, Some(source)) => Resolution::Extend(source),
            (None, None) => Resolution::Begin,
        }
    }

    /// Merge sources are searched with the second to last boundary taken out
    /// of the dictionary; it goes back in only if no merge is possible.
    fn resolve_merge_first(&mut self, probe: usize) -> Resolution {
        let z = self.phrases.len();
        let last = self.last_len();
        if z >= 2 && self.may_merge(last, self.phrases[z - 2].len) {
            let prev = self.phrases[z - 2].len;
            let key = self.index.a_prime()[self.pos - last - 1];
            self.dict.remove(key);
            self.stats.dict_removes += 1;
            for dir in [Direction::Smaller, Direction::Greater] {
                if let Some(hit) = self.lex_neighbor(dir, probe) {
                    if hit.copy_len >= last + prev {
                        return Resolution::Merge {
                            source: hit.phrase,
                            unmarked: true,
                        };
                    }
                }
            }
            self.dict.insert(key, z - 1);
            self.stats.dict_inserts += 1;
        }
        if self.may_extend(last) {
            // the greater side wins ties, as in the default search order
            for dir in [Direction::Greater, Direction::Smaller] {
                if let Some(hit) = self.lex_neighbor(dir, probe) {
                    if hit.copy_len >= last {
                        return Resolution::Extend(hit.phrase);
                    }
                }
            }
        }
        Resolution::Begin
    }

    /// Consumes one input byte. Returns `None` once the input is exhausted.
    pub fn step(&mut self) -> Option<Step> {
        let i = self.pos;
        let byte = *self.input.get(i)?;
        let phrases_before = self.phrases.len();

        if i == 0 {
            self.phrases.push(Phrase::literal(byte));
            self.pos = 1;
            self.stats.begins += 1;
            return Some(Step {
                pos: 0,
                phrases_before,
                action: StepAction::Begin,
                phrase: Phrase::literal(byte),
            });
        }

        let probe = self.index.a_prime()[i - 1];
        let resolution = if self.config.merge_first {
            self.resolve_merge_first(probe)
        } else {
            self.resolve_default()
        };

        let z = self.phrases.len();
        let last = self.last_len();
        let action = match resolution {
            Resolution::Merge { source, unmarked } => {
                let key = self.index.a_prime()[i - last - 1];
                if !unmarked {
                    self.dict.remove(key);
                    self.stats.dict_removes += 1;
                }
                let prev = self.phrases[z - 2].len;
                self.phrases[z - 2] = Phrase::new(source, last + prev + 1, byte);
                self.phrases.pop();
                self.stats.merges += 1;
                StepAction::Merge {
                    source,
                    unmarked: key,
                }
            }
            Resolution::Extend(source) => {
                self.phrases[z - 1] = Phrase::new(source, last + 1, byte);
                self.stats.extends += 1;
                StepAction::Extend { source }
            }
            Resolution::Begin => {
                self.dict.insert(probe, z);
                self.stats.dict_inserts += 1;
                self.phrases.push(Phrase::literal(byte));
                self.stats.begins += 1;
                StepAction::Begin
            }
        };
        self.pos = i + 1;
        Some(Step {
            pos: i,
            phrases_before,
            action,
            phrase: *self.phrases.last().unwrap(),
        })
    }

    /// Checks that the dictionary holds exactly the boundaries of
    /// `f_1 .. f_{z-1}`, each mapped to its phrase number.
    pub fn dict_matches_boundaries(&self) -> bool {
        let a_prime = self.index.a_prime();
        let z = self.phrases.len();
        if self.dict.len() != z.saturating_sub(1) {
            return false;
        }
        let mut end = 0;
        for (k, phrase) in self.phrases.iter().enumerate().take(z.saturating_sub(1)) {
            end += phrase.len;
            if self.dict.get(a_prime[end - 1]) != Some(k + 1) {
                return false;
            }
        }
        true
    }
}
