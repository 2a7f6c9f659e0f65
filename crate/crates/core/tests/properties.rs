use lzend::codec::{self, PhraseBoundaries};
use lzend::oracle::naive_parse;
use lzend::parser::StepAction;
use lzend::text_index::suffix_array;
use lzend::{parse, BitTrieDict, DictKind, OrderedDict, ParseConfig, Parser, Parsing, Phrase, TextIndex};
use proptest::prelude::*;

fn small_alphabet(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    (1u8..=4).prop_flat_map(move |sigma| prop::collection::vec(b'a'..b'a' + sigma, 0..=max_len))
}

fn lengths(p: &Parsing) -> Vec<usize> {
    p.phrase_lengths()
}

/// Each copy part equals the text ending at its source boundary.
fn is_lz_end(input: &[u8], p: &Parsing) -> bool {
    let mut ends = Vec::new();
    let mut start = 0;
    for (k, f) in p.phrases().iter().enumerate() {
        if f.len == 0 || f.source > k {
            return false;
        }
        let copy = f.len - 1;
        let src_end = if f.source == 0 { 0 } else { ends[f.source - 1] };
        if copy > src_end || input[src_end - copy..src_end] != input[start..start + copy] {
            return false;
        }
        if input[start + copy] != f.ext {
            return false;
        }
        start += f.len;
        ends.push(start);
    }
    start == input.len()
}

/// A valid parsing built phrase by phrase, with random sources.
fn valid_parsing() -> impl Strategy<Value = Parsing> {
    prop::collection::vec((any::<u32>(), any::<u32>(), any::<u8>()), 0..40).prop_map(|raw| {
        let mut phrases = Vec::new();
        let mut ends: Vec<usize> = Vec::new();
        for (k, (s, l, ext)) in raw.into_iter().enumerate() {
            let source = s as usize % (k + 1);
            let room = if source == 0 { 0 } else { ends[source - 1] };
            let len = 1 + l as usize % (room + 1);
            phrases.push(Phrase::new(source, len, ext));
            ends.push(ends.last().copied().unwrap_or(0) + len);
        }
        Parsing::new(phrases)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn matches_oracle(s in small_alphabet(120)) {
        let fast = parse(&s, ParseConfig::default());
        let slow = naive_parse(&s);
        prop_assert_eq!(lengths(&fast), lengths(&slow));
        prop_assert!(is_lz_end(&s, &fast));
    }

    #[test]
    fn roundtrip_any_bytes(s in prop::collection::vec(any::<u8>(), 0..400)) {
        let p = parse(&s, ParseConfig::default());
        prop_assert_eq!(p.text_len(), s.len());
        prop_assert_eq!(codec::decode(&p).unwrap(), s);
    }

    #[test]
    fn serialize_inverts(p in valid_parsing()) {
        let bytes = codec::serialize(&p);
        prop_assert_eq!(bytes.len(), 20 + 17 * p.len());
        prop_assert_eq!(codec::deserialize(&bytes).unwrap(), p);
    }

    #[test]
    fn length_corruption_is_rejected(p in valid_parsing(), field in any::<prop::sample::Index>(), delta in 1u64..1000) {
        let mut bytes = codec::serialize(&p);
        // field 0 is n, field k >= 1 is the length of phrase k
        let at = match field.index(p.len() + 1) {
            0 => 4,
            k => 20 + (k - 1) * 17 + 8,
        };
        let old = u64::from_le_bytes(bytes[at..at + 8].try_into().unwrap());
        bytes[at..at + 8].copy_from_slice(&old.wrapping_add(delta).to_le_bytes());
        prop_assert!(codec::deserialize(&bytes).is_err());
    }

    #[test]
    fn extract_matches_decode(s in small_alphabet(200), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let p = parse(&s, ParseConfig::default());
        let text = codec::decode(&p).unwrap();
        let bounds = PhraseBoundaries::new(&p);
        let start = a.index(s.len() + 1);
        let len = b.index(s.len() - start + 1);
        let (got, stats) = codec::extract_with_stats(&p, &bounds, start, len).unwrap();
        prop_assert_eq!(&got[..], &text[start..start + len]);
        prop_assert!(stats.max_depth <= p.len());
    }

    #[test]
    fn capped_phrases_stay_short(s in small_alphabet(300), h in prop::sample::select(vec![1usize, 2, 4, 8, 64])) {
        let p = parse(&s, ParseConfig::default().with_max_phrase_len(h));
        prop_assert!(p.max_phrase_len() <= h);
        prop_assert!(is_lz_end(&s, &p));
        if h >= s.len() {
            prop_assert_eq!(p, parse(&s, ParseConfig::default()));
        }
    }

    #[test]
    fn merge_first_is_equivalent(s in small_alphabet(300), h in prop::option::of(1usize..16)) {
        let mut cfg = ParseConfig::default();
        if let Some(h) = h {
            cfg = cfg.with_max_phrase_len(h);
        }
        prop_assert_eq!(parse(&s, cfg), parse(&s, cfg.with_merge_first(true)));
    }

    #[test]
    fn step_invariants(s in small_alphabet(150), merge_first in any::<bool>()) {
        let mut parser = Parser::new(&s, ParseConfig::default().with_merge_first(merge_first));
        while let Some(step) = parser.step() {
            let z_before = step.phrases_before;
            let z_after = parser.phrases().len();
            match step.action {
                StepAction::Begin => prop_assert_eq!(z_after, z_before + 1),
                StepAction::Extend { source } => {
                    prop_assert_eq!(z_after, z_before);
                    prop_assert!(source < z_before);
                }
                StepAction::Merge { source, .. } => {
                    prop_assert_eq!(z_after + 1, z_before);
                    prop_assert!(source <= z_before - 2);
                }
            }
            prop_assert!(parser.dict_matches_boundaries());
            let covered: usize = parser.phrases().iter().map(|f| f.len).sum();
            prop_assert_eq!(covered, step.pos + 1);
        }
    }

    #[test]
    fn bit_trie_backend_is_equivalent(s in small_alphabet(300), merge_first in any::<bool>(), h in prop::option::of(1usize..16)) {
        let mut cfg = ParseConfig::default().with_merge_first(merge_first);
        if let Some(h) = h {
            cfg = cfg.with_max_phrase_len(h);
        }
        prop_assert_eq!(parse(&s, cfg), parse(&s, cfg.with_dict(DictKind::BitTrie)));
    }

    #[test]
    fn bit_trie_step_invariants(s in small_alphabet(150)) {
        let mut parser = Parser::<BitTrieDict>::with_dict(&s, TextIndex::build(&s), ParseConfig::default());
        while parser.step().is_some() {
            prop_assert!(parser.dict_matches_boundaries());
            prop_assert_eq!(parser.dict().len(), parser.phrases().len() - 1);
        }
    }

    #[test]
    fn a_prime_inverts_suffix_array(s in prop::collection::vec(0u8..3, 0..=64)) {
        let n = s.len();
        let reversed: Vec<u8> = s.iter().rev().copied().collect();
        let mut sa: Vec<usize> = (0..n).collect();
        sa.sort_by(|&a, &b| reversed[a..].cmp(&reversed[b..]));
        prop_assert_eq!(&suffix_array(&reversed), &sa);
        let idx = TextIndex::build(&s);
        for (i, &start) in sa.iter().enumerate() {
            prop_assert_eq!(idx.a_prime()[n - start - 1], i);
        }
        for i in 1..n {
            let naive = reversed[sa[i]..].iter().zip(&reversed[sa[i - 1]..]).take_while(|(x, y)| x == y).count();
            prop_assert_eq!(idx.lcp()[i], naive);
        }
    }

    #[test]
    fn oracle_is_maximal(s in small_alphabet(60)) {
        let p = naive_parse(&s);
        let mut bounds: Vec<usize> = Vec::new();
        let mut start = 0;
        for f in p.phrases() {
            let longer = f.len;
            if start + longer < s.len() {
                let exists = bounds.iter().any(|&b| b >= longer && s[b - longer..b] == s[start..start + longer]);
                prop_assert!(!exists);
            }
            start += f.len;
            bounds.push(start);
        }
    }
}

#[test]
fn deterministic() {
    let s = lzend::corpus::random_text(5000, 3, 9);
    let a = TextIndex::build(&s);
    let b = TextIndex::build(&s);
    assert_eq!(a.a_prime(), b.a_prime());
    assert_eq!(a.lcp(), b.lcp());
    assert_eq!(parse(&s, ParseConfig::default()), parse(&s, ParseConfig::default()));
}

#[test]
fn exhaustive_extract_on_short_strings() {
    for len in 0..=8 {
        for s in lzend::corpus::all_strings(b"ab", len) {
            let p = parse(&s, ParseConfig::default());
            let b = PhraseBoundaries::new(&p);
            for start in 0..=len {
                for l in 0..=len - start {
                    assert_eq!(codec::extract(&p, &b, start, l).unwrap(), &s[start..start + l]);
                }
            }
        }
    }
}
