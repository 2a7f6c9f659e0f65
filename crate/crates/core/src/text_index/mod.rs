//! Static index over the reversed input.
//!
//! The parser never looks at text positions of the reversed string directly.
//! It works in lex-space: `a_prime[i]` is the rank of the reversed suffix that
//! corresponds to the prefix `input[..=i]`, and the LCP array with range
//! minimum support gives the longest common suffix of any two such prefixes.

mod rmq;
mod sais;

pub use rmq::BlockRmq;
pub use sais::suffix_array;

/// Kasai et al. LCP construction. `lcp[0] = 0`, `lcp[i]` is the longest common
/// prefix of the suffixes at ranks `i - 1` and `i`.
pub fn lcp_array(text: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0usize; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for p in 0..n {
        if rank[p] == 0 {
            h = 0;
            continue;
        }
        let q = sa[rank[p] - 1];
        while p + h < n && q + h < n && text[p + h] == text[q + h] {
            h += 1;
        }
        lcp[rank[p]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

#[derive(Clone, Debug)]
pub struct TextIndex {
    a_prime: Vec<usize>,
    lcp: Vec<usize>,
    rmq: BlockRmq,
}

impl TextIndex {
    /// Builds the index over the reversal of `input`. The suffix array and the
    /// reversed copy are dropped before returning.
    pub fn build(input: &[u8]) -> Self {
        let n = input.len();
        let reversed: Vec<u8> = input.iter().rev().copied().collect();
        let sa = suffix_array(&reversed);
        let lcp = lcp_array(&reversed, &sa);
        drop(reversed);

        let mut a_prime = vec![0usize; n];
        for (rank, &start) in sa.iter().enumerate() {
            a_prime[n - start - 1] = rank;
        }
        drop(sa);

        let rmq = BlockRmq::new(&lcp);
        Self { a_prime, lcp, rmq }
    }

    pub fn len(&self) -> usize {
        self.a_prime.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_prime.is_empty()
    }

    /// Lex rank of the reversed prefix ending at `input[i]`.
    pub fn a_prime(&self) -> &[usize] {
        &self.a_prime
    }

    pub fn lcp(&self) -> &[usize] {
        &self.lcp
    }

    /// Position of a minimum of the LCP array over `[x, y]`.
    pub fn rmq(&self, x: usize, y: usize) -> usize {
        self.rmq.query(&self.lcp, x, y)
    }

    /// Longest common prefix of the reversed suffixes with lex ranks `x` and
    /// `y`. Returns `None` for `x == y`, whose answer is the suffix length
    /// and not stored in the LCP array.
    pub fn lce_lex(&self, x: usize, y: usize) -> Option<usize> {
        (x != y).then(|| self.lce_distinct(x.min(y), x.max(y)))
    }

    /// `lo < hi` required.
    #[inline]
    pub(crate) fn lce_distinct(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo < hi);
        self.lcp[self.rmq(lo + 1, hi)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn figure_arrays() {
        let idx = TextIndex::build(b"abaabaa$");
        assert_eq!(idx.lcp(), &[0, 0, 1, 4, 1, 3, 0, 2]);
        assert_eq!(idx.a_prime(), &[1, 6, 4, 2, 7, 5, 3, 0]);
    }

    #[test]
    fn empty_and_single() {
        let idx = TextIndex::build(b"");
        assert!(idx.is_empty());
        assert!(idx.lcp().is_empty());
        let idx = TextIndex::build(b"z");
        assert_eq!(idx.a_prime(), &[0]);
        assert_eq!(idx.lcp(), &[0]);
    }

    #[test]
    fn lce_examples() {
        let idx = TextIndex::build(b"abaabaa$");
        assert_eq!(idx.lce_lex(3, 2), Some(4));
        assert_eq!(idx.lce_lex(0, 7), Some(0));
        assert_eq!(idx.lce_lex(4, 4), None);
        let idx = TextIndex::build(b"ab");
        assert_eq!(idx.lce_lex(0, 1), Some(0));
    }

    #[test]
    fn lce_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for round in 0..60 {
            let len = rng.gen_range(2..=512);
            let sigma = b"bcz"[round % 3];
            let input: Vec<u8> = (0..len).map(|_| rng.gen_range(b'a'..=sigma)).collect();
            let reversed: Vec<u8> = input.iter().rev().copied().collect();
            let sa: Vec<usize> = {
                let mut sa: Vec<usize> = (0..len).collect();
                sa.sort_by(|&a, &b| reversed[a..].cmp(&reversed[b..]));
                sa
            };
            let idx = TextIndex::build(&input);
            for _ in 0..400 {
                let x = rng.gen_range(0..len);
                let y = rng.gen_range(0..len);
                if x == y {
                    continue;
                }
                let (a, b) = (&reversed[sa[x]..], &reversed[sa[y]..]);
                let naive = a.iter().zip(b).take_while(|(p, q)| p == q).count();
                assert_eq!(idx.lce_lex(x, y), Some(naive));
            }
        }
    }
}
