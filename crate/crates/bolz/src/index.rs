//! Global text index: suffix array, inverse permutation, adjacent-lcp array
//! and a range-minimum structure, giving constant-time lcp queries between
//! arbitrary suffixes.

use crate::error::{Error, Result};
use crate::sais::suffix_array_bytes;
use std::cmp::Ordering;

/// Block size for the two-level range-minimum structure. Queries scan at
/// most two partial blocks and take a sparse-table minimum over whole ones,
/// keeping the structure linear in space.
const RMQ_BLOCK: usize = 16;

#[derive(Debug, Clone)]
pub struct TextIndex {
    text: Vec<u8>,
    sa: Vec<u32>,
    rank: Vec<u32>,
    /// lcp[t] = lcp of the suffixes at sa[t-1] and sa[t]; lcp[0] = 0.
    lcp: Vec<u32>,
    rmq: BlockRmq,
}

impl TextIndex {
    pub fn build(text: impl Into<Vec<u8>>) -> Self {
        let text = text.into();
        assert!(text.len() < u32::MAX as usize, "text too large to index");
        let sa = suffix_array_bytes(&text);
        let n = text.len();
        let mut rank = vec![0u32; n];
        for (t, &p) in sa.iter().enumerate() {
            rank[p as usize] = t as u32;
        }
        let lcp = kasai(&text, &sa, &rank);
        let rmq = BlockRmq::build(&lcp);
        Self { text, sa, rank, lcp, rmq }
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn text(&self) -> &[u8] {
        &self.text
    }

    pub fn suffix_array(&self) -> &[u32] {
        &self.sa
    }

    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    pub fn lcp_array(&self) -> &[u32] {
        &self.lcp
    }

    /// Length of the longest common prefix of the suffixes at `a` and `b`.
    pub fn lcp_query(&self, a: usize, b: usize) -> Result<usize> {
        let n = self.text.len();
        if a >= n || b >= n {
            return Err(Error::Domain(format!(
                "suffix position out of range: {} (text length {})",
                a.max(b),
                n
            )));
        }
        Ok(self.lcp_pos(a, b))
    }

    /// As `lcp_query`, positions assumed in range. `a == n` or `b == n`
    /// denote the empty suffix.
    pub(crate) fn lcp_pos(&self, a: usize, b: usize) -> usize {
        let n = self.text.len();
        debug_assert!(a <= n && b <= n);
        if a == b {
            return n - a;
        }
        if a == n || b == n {
            return 0;
        }
        let (lo, hi) = {
            let (ra, rb) = (self.rank[a] as usize, self.rank[b] as usize);
            if ra < rb {
                (ra, rb)
            } else {
                (rb, ra)
            }
        };
        self.rmq.min(&self.lcp, lo + 1, hi) as usize
    }

    /// Lexicographic order of the suffixes at `a` and `b`, decided by one
    /// lcp query plus a symbol comparison at the first mismatch.
    pub fn compare_suffixes(&self, a: usize, b: usize) -> Result<Ordering> {
        let n = self.text.len();
        if a >= n || b >= n {
            return Err(Error::Domain(format!(
                "suffix position out of range: {} (text length {})",
                a.max(b),
                n
            )));
        }
        Ok(self.compare_pos(a, b))
    }

    pub(crate) fn compare_pos(&self, a: usize, b: usize) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let n = self.text.len();
        let l = self.lcp_pos(a, b);
        match (a + l == n, b + l == n) {
            (true, true) => unreachable!("distinct suffixes cannot be equal"),
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self.text[a + l].cmp(&self.text[b + l]),
        }
    }
}

/// Kasai's adjacent-lcp computation.
fn kasai(text: &[u8], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Two-level range-minimum structure: per-block minima under a sparse table.
#[derive(Debug, Clone)]
struct BlockRmq {
    /// sparse[level][b] = min over 2^level blocks starting at b.
    sparse: Vec<Vec<u32>>,
}

impl BlockRmq {
    fn build(values: &[u32]) -> Self {
        let nb = values.len().div_ceil(RMQ_BLOCK);
        let mut base = Vec::with_capacity(nb);
        for chunk in values.chunks(RMQ_BLOCK) {
            base.push(*chunk.iter().min().unwrap());
        }
        let mut sparse = vec![base];
        let mut width = 1;
        while width * 2 <= nb {
            let prev = sparse.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            sparse.push(next);
            width *= 2;
        }
        Self { sparse }
    }

    /// Minimum of values[lo..=hi].
    fn min(&self, values: &[u32], lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi && hi < values.len());
        let lb = lo / RMQ_BLOCK;
        let rb = hi / RMQ_BLOCK;
        if lb == rb {
            return *values[lo..=hi].iter().min().unwrap();
        }
        let left = *values[lo..(lb + 1) * RMQ_BLOCK].iter().min().unwrap();
        let right = *values[rb * RMQ_BLOCK..=hi].iter().min().unwrap();
        let mut m = left.min(right);
        if lb + 1 < rb {
            m = m.min(self.block_min(lb + 1, rb - 1));
        }
        m
    }

    /// Minimum over whole blocks lo..=hi.
    fn block_min(&self, lo: usize, hi: usize) -> u32 {
        let level = (hi - lo + 1).ilog2() as usize;
        let width = 1usize << level;
        self.sparse[level][lo].min(self.sparse[level][hi + 1 - width])
    }
}
