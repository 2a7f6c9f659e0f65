#![allow(dead_code)]

use lzend::corpus;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All binary strings of length 1..=14, all ternary strings of length 1..=9,
/// and 1000 seeded random strings of length 0..=256.
pub fn oracle_corpus() -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for len in 1..=14 {
        out.extend(corpus::all_strings(b"ab", len));
    }
    for len in 1..=9 {
        out.extend(corpus::all_strings(b"abc", len));
    }
    out.extend(random_strings(1000, 256, 0x5eed));
    out
}

/// Random byte strings; the alphabet size varies so that long phrases occur.
pub fn random_strings(count: usize, max_len: usize, seed: u64) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let len = rng.gen_range(0..=max_len);
            let top: u8 = [1, 2, 3, 4, 8, 26, 255][k % 7];
            (0..len).map(|_| rng.gen_range(0..=top)).collect()
        })
        .collect()
}

/// Fibonacci word prefixes of every Fibonacci length up to 10,000, plus 10,000.
pub fn fibonacci_words() -> Vec<Vec<u8>> {
    let (mut a, mut b) = (1usize, 2usize);
    let mut lens = vec![1];
    while b <= 10_000 {
        lens.push(b);
        (a, b) = (b, a + b);
    }
    lens.push(10_000);
    lens.into_iter().map(corpus::fibonacci_word).collect()
}

/// Strings `w^k` for several words, up to 100,000 bytes.
pub fn periodic_strings() -> Vec<Vec<u8>> {
    let words: [&[u8]; 5] = [b"a", b"ab", b"abaab", b"mississippi", b"the quick brown fox "];
    let mut out = Vec::new();
    for w in words {
        for total in [10, 1000, 100_000] {
            let k = total / w.len();
            out.push(w.repeat(k));
        }
    }
    out.push(corpus::periodic(100_000, 997, 3));
    out
}
