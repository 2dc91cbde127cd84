//! Deterministic mixed-text generator for benchmarks and tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const WORDS: &[&str] = &[
    "the", "of", "and", "to", "in", "that", "was", "his", "he", "it", "with", "is", "for",
    "as", "had", "you", "not", "be", "her", "on", "at", "by", "which", "have", "or", "from",
    "this", "him", "but", "all", "she", "they", "were", "my", "are", "me", "one", "their",
    "so", "an", "said", "them", "we", "who", "would", "been", "will", "no", "when", "there",
    "if", "more", "out", "up", "into", "than", "time", "only", "little", "about", "other",
    "long", "before", "over", "after", "never", "under", "against", "between", "thought",
    "compression", "window", "suffix", "distance", "length", "stream", "buffer", "phrase",
];

/// Pseudo-natural text of exactly `len` bytes, reproducible from the seed.
pub fn mixed_text(len: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(len + 16);
    let mut since_newline = 0usize;
    while out.len() < len {
        let w = WORDS[rng.gen_range(0..WORDS.len())];
        out.extend_from_slice(w.as_bytes());
        since_newline += w.len();
        match rng.gen_range(0..100) {
            0..=2 => out.extend_from_slice(b". "),
            3..=4 => out.extend_from_slice(b", "),
            5 => {
                let num: u32 = rng.gen_range(0..100_000);
                out.extend_from_slice(format!(" {num} ").as_bytes());
            }
            _ => out.push(b' '),
        }
        if since_newline > 60 {
            out.push(b'\n');
            since_newline = 0;
        }
    }
    out.truncate(len);
    out
}
