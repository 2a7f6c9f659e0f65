//! Ordered dictionaries of phrase end boundaries in lex-space.
//!
//! Keys are lex ranks in `[0, n)`, values are phrase numbers. Predecessor and
//! successor queries are inclusive. Inserting a present key or removing an
//! absent one is a bug in the caller and panics.

use std::collections::BTreeMap;

/// Operations the parser needs from its boundary dictionary.
pub trait OrderedDict {
    /// An empty dictionary for keys below `universe`.
    fn with_universe(universe: usize) -> Self;
    fn insert(&mut self, key: usize, phrase: usize);
    /// Returns the removed value.
    fn remove(&mut self, key: usize) -> usize;
    /// Largest key `<= y` and its value.
    fn predecessor(&self, y: usize) -> Option<(usize, usize)>;
    /// Smallest key `>= y` and its value.
    fn successor(&self, y: usize) -> Option<(usize, usize)>;
    fn get(&self, key: usize) -> Option<usize>;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Which [`OrderedDict`] backs the parser.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DictKind {
    /// [`BoundaryDict`], a B-tree; space proportional to the phrase count.
    #[default]
    BTree,
    /// [`BitTrieDict`]; space proportional to the text length, fewer cache misses.
    BitTrie,
}

/// Maps lex ranks of phrase ends to phrase numbers and answers inclusive
/// predecessor and successor queries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundaryDict {
    entries: BTreeMap<usize, usize>,
}

impl BoundaryDict {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: usize, phrase: usize) {
        let prev = self.entries.insert(key, phrase);
        assert!(prev.is_none(), "boundary {key} inserted twice");
    }

    pub fn remove(&mut self, key: usize) -> usize {
        match self.entries.remove(&key) {
            Some(phrase) => phrase,
            None => panic!("boundary {key} is not present"),
        }
    }

    pub fn predecessor(&self, y: usize) -> Option<(usize, usize)> {
        self.entries.range(..=y).next_back().map(|(&k, &v)| (k, v))
    }

    pub fn successor(&self, y: usize) -> Option<(usize, usize)> {
        self.entries.range(y..).next().map(|(&k, &v)| (k, v))
    }

    pub fn get(&self, key: usize) -> Option<usize> {
        self.entries.get(&key).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in increasing key order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }
}

impl OrderedDict for BoundaryDict {
    fn with_universe(_: usize) -> Self {
        Self::new()
    }
    fn insert(&mut self, key: usize, phrase: usize) {
        BoundaryDict::insert(self, key, phrase)
    }
    fn remove(&mut self, key: usize) -> usize {
        BoundaryDict::remove(self, key)
    }
    fn predecessor(&self, y: usize) -> Option<(usize, usize)> {
        BoundaryDict::predecessor(self, y)
    }
    fn successor(&self, y: usize) -> Option<(usize, usize)> {
        BoundaryDict::successor(self, y)
    }
    fn get(&self, key: usize) -> Option<usize> {
        BoundaryDict::get(self, key)
    }
    fn len(&self) -> usize {
        BoundaryDict::len(self)
    }
}

/// Predecessor dictionary over a fixed universe: a tree of 64-bit occupancy
/// words, each level summarizing which words of the level below are nonzero,
/// plus a flat value array indexed by key. Queries touch one word per level,
/// about `log64(n)` of them.
#[derive(Clone, Debug)]
pub struct BitTrieDict {
    /// `levels[0]` has one bit per key.
    levels: Vec<Vec<u64>>,
    values: Vec<usize>,
    len: usize,
}

impl BitTrieDict {
    pub fn new(universe: usize) -> Self {
        let mut levels = Vec::new();
        let mut width = universe.max(1);
        loop {
            let words = width.div_ceil(64);
            levels.push(vec![0u64; words]);
            if words == 1 {
                break;
            }
            width = words;
        }
        Self {
            levels,
            values: vec![0; universe],
            len: 0,
        }
    }

    pub fn universe(&self) -> usize {
        self.values.len()
    }

    fn contains(&self, key: usize) -> bool {
        key < self.values.len() && self.levels[0][key >> 6] >> (key & 63) & 1 == 1
    }

    /// Smallest key `>= y`.
    fn next_key(&self, y: usize) -> Option<usize> {
        let mut i = y;
        for (l, level) in self.levels.iter().enumerate() {
            let w = i >> 6;
            if w >= level.len() {
                return None;
            }
            let word = level[w] & (!0u64 << (i & 63));
            if word != 0 {
                let mut key = (w << 6) | word.trailing_zeros() as usize;
                for below in self.levels[..l].iter().rev() {
                    key = (key << 6) | below[key].trailing_zeros() as usize;
                }
                return Some(key);
            }
            i = w + 1;
        }
        None
    }

    /// Largest key `<= y`.
    fn prev_key(&self, y: usize) -> Option<usize> {
        let mut i = y.min(self.values.len().checked_sub(1)?);
        for (l, level) in self.levels.iter().enumerate() {
            let w = i >> 6;
            let word = level[w] & (!0u64 >> (63 - (i & 63)));
            if word != 0 {
                let mut key = (w << 6) | (63 - word.leading_zeros() as usize);
                for below in self.levels[..l].iter().rev() {
                    key = (key << 6) | (63 - below[key].leading_zeros() as usize);
                }
                return Some(key);
            }
            i = w.checked_sub(1)?;
        }
        None
    }
}

impl OrderedDict for BitTrieDict {
    fn with_universe(universe: usize) -> Self {
        Self::new(universe)
    }

    fn insert(&mut self, key: usize, phrase: usize) {
        assert!(!self.contains(key), "boundary {key} inserted twice");
        self.values[key] = phrase;
        self.len += 1;
        let mut i = key;
        for level in &mut self.levels {
            let word = &mut level[i >> 6];
            let was_empty = *word == 0;
            *word |= 1 << (i & 63);
            if !was_empty {
                break;
            }
            i >>= 6;
        }
    }

    fn remove(&mut self, key: usize) -> usize {
        assert!(self.contains(key), "boundary {key} is not present");
        self.len -= 1;
        let mut i = key;
        for level in &mut self.levels {
            let word = &mut level[i >> 6];
            *word &= !(1 << (i & 63));
            if *word != 0 {
                break;
            }
            i >>= 6;
        }
        self.values[key]
    }

    fn predecessor(&self, y: usize) -> Option<(usize, usize)> {
        self.prev_key(y).map(|k| (k, self.values[k]))
    }

    fn successor(&self, y: usize) -> Option<(usize, usize)> {
        self.next_key(y).map(|k| (k, self.values[k]))
    }

    fn get(&self, key: usize) -> Option<usize> {
        self.contains(key).then(|| self.values[key])
    }

    fn len(&self) -> usize {
        self.len
    }
}
