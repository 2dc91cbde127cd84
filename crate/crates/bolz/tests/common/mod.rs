//! Shared helpers for the integration and acceptance suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random string over an alphabet of `sigma` symbols starting at 'a'.
pub fn random_text(rng: &mut ChaCha8Rng, len: usize, sigma: u8) -> Vec<u8> {
    (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

/// Plain symbol-scan lcp, the machinery-free reference.
pub fn naive_lcp(text: &[u8], a: usize, b: usize) -> usize {
    text[a..].iter().zip(&text[b..]).take_while(|(x, y)| x == y).count()
}

pub fn fibonacci_word(min_len: usize) -> Vec<u8> {
    let mut cur = b"a".to_vec();
    let mut prev = b"b".to_vec();
    while cur.len() < min_len {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = cur;
        cur = next;
    }
    cur
}

pub const CORPUS: &[u8] = include_bytes!("../data/corpus.txt");
