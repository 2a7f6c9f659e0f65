//! LZ-End parsing.
//!
//! [`parse`] computes the LZ-End parsing of a byte string in one left-to-right
//! pass over a suffix/LCP index of the reversed text, keeping completed phrase
//! boundaries in an ordered dictionary. [`codec`] stores parsings in the LZE1
//! format and extracts substrings without full decompression, and
//! [`oracle::naive_parse`] is a direct implementation of the greedy definition
//! for testing.

pub mod bench;
pub mod boundary_dict;
pub mod cli;
pub mod codec;
pub mod corpus;
pub mod oracle;
pub mod parser;
pub mod parsing;
pub mod text_index;

pub use boundary_dict::{BitTrieDict, BoundaryDict, DictKind, OrderedDict};
pub use codec::{decode, deserialize, extract, serialize, FormatError, PhraseBoundaries};
pub use parser::{parse, parse_with_index, Parser};
pub use parsing::{ParseConfig, Parsing, Phrase};
pub use text_index::TextIndex;
