//! Synthetic inputs for benchmarks and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniformly random bytes.
pub fn random_bytes(n: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![0u8; n];
    rng.fill(out.as_mut_slice());
    out
}

/// Random bytes from the first `sigma` lowercase letters.
pub fn random_text(n: usize, sigma: u8, seed: u64) -> Vec<u8> {
    assert!((1..=26).contains(&sigma));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

/// Runs of a repeated byte with geometric-ish lengths up to 64.
pub fn runs(n: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let byte = b'a' + rng.gen_range(0..4u8);
        let len = 1usize << rng.gen_range(0..7);
        let len = rng.gen_range(1..=len).min(n - out.len());
        out.extend(std::iter::repeat_n(byte, len));
    }
    out
}

/// A random word of length `period` repeated up to `n` bytes.
pub fn periodic(n: usize, period: usize, seed: u64) -> Vec<u8> {
    assert!(period > 0);
    let word = random_text(period, 26, seed);
    word.iter().copied().cycle().take(n).collect()
}

/// Prefix of length `n` of the infinite Fibonacci word over {a, b}.
pub fn fibonacci_word(n: usize) -> Vec<u8> {
    let (mut prev, mut cur) = (b"a".to_vec(), b"ab".to_vec());
    while cur.len() < n {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = std::mem::replace(&mut cur, next);
    }
    cur.truncate(n);
    cur
}

/// Every string of length `len` over `alphabet`, in lexicographic order.
pub fn all_strings(alphabet: &[u8], len: usize) -> impl Iterator<Item = Vec<u8>> + '_ {
    let total = alphabet.len().pow(len as u32);
    (0..total).map(move |mut code| {
        let mut s = vec![0u8; len];
        for slot in s.iter_mut().rev() {
            *slot = alphabet[code % alphabet.len()];
            code /= alphabet.len();
        }
        s
    })
}
