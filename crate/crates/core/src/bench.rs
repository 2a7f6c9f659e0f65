//! Timing of the parse phase, separate from index construction.

use std::time::{Duration, Instant};

use crate::boundary_dict::{BitTrieDict, BoundaryDict, DictKind, OrderedDict};
use crate::parser::{ParseStats, Parser};
use crate::parsing::{ParseConfig, Parsing};
use crate::text_index::TextIndex;

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub n: usize,
    pub z: usize,
    pub max_phrase_len: usize,
    pub merges: usize,
    pub dict_queries: usize,
    pub index_time: Duration,
    pub parse_time: Duration,
}

impl BenchReport {
    pub fn ratio(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.z as f64 / self.n as f64
        }
    }
}

/// Builds the index, then parses; only the second part counts as parse time.
pub fn run(input: &[u8], config: ParseConfig) -> (Parsing, BenchReport) {
    let t0 = Instant::now();
    let index = TextIndex::build(input);
    let index_time = t0.elapsed();

    let t1 = Instant::now();
    let (parsing, stats) = match config.dict {
        DictKind::BTree => timed_parse::<BoundaryDict>(input, index, config),
        DictKind::BitTrie => timed_parse::<BitTrieDict>(input, index, config),
    };
    let parse_time = t1.elapsed();

    let report = BenchReport {
        n: input.len(),
        z: parsing.len(),
        max_phrase_len: parsing.max_phrase_len(),
        merges: stats.merges,
        dict_queries: stats.dict_queries,
        index_time,
        parse_time,
    };
    (parsing, report)
}

fn timed_parse<D: OrderedDict>(input: &[u8], index: TextIndex, config: ParseConfig) -> (Parsing, ParseStats) {
    let mut parser = Parser::<D>::with_dict(input, index, config);
    while parser.step().is_some() {}
    let stats = parser.stats();
    (Parsing::new(parser.phrases().to_vec()), stats)
}
