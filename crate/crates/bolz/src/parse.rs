//! Parse representation and the two parsers: the bit-optimal shortest-path
//! parser driven by on-the-fly edge generation, and the classic greedy
//! longest-match baseline.

use crate::codes::CostModel;
use crate::edge_gen::{EdgeGenerator, MaximalEdge};
use crate::error::{Error, Result};
use crate::index::TextIndex;

/// One parse step: a raw symbol or a back-reference.
///
/// A copy at text position `i` reads `len` symbols starting at `i - dist`,
/// one at a time, so sources may overlap the phrase itself (`dist < len`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phrase {
    Literal(u8),
    Copy { dist: usize, len: usize },
}

#[allow(clippy::len_without_is_empty)]
impl Phrase {
    pub fn len(&self) -> usize {
        match *self {
            Phrase::Literal(_) => 1,
            Phrase::Copy { len, .. } => len,
        }
    }
}

/// A full parse of a text together with its encoded size in bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsing {
    pub phrases: Vec<Phrase>,
    pub total_bits: u64,
}

impl Parsing {
    pub fn empty() -> Self {
        Parsing { phrases: Vec::new(), total_bits: 0 }
    }

    /// Sum of phrase lengths, i.e. the length of the expanded text.
    pub fn expanded_len(&self) -> usize {
        self.phrases.iter().map(Phrase::len).sum()
    }
}

/// Recomputes the bit cost of a parsing from its phrases, validating that
/// every copy stays within the text produced so far.
pub fn parse_cost(parsing: &Parsing, model: &CostModel) -> Result<u64> {
    let mut produced = 0usize;
    let mut bits = 0u64;
    for (k, ph) in parsing.phrases.iter().enumerate() {
        match *ph {
            Phrase::Literal(_) => bits += model.literal_cost(),
            Phrase::Copy { dist, len } => {
                if dist == 0 || len == 0 || dist > produced {
                    return Err(Error::InvalidParsing(format!(
                        "phrase {k}: copy (dist {dist}, len {len}) at produced length {produced}"
                    )));
                }
                bits += model.copy_cost(dist as u64, len as u64)?;
            }
        }
        produced += ph.len();
    }
    Ok(bits)
}

/// Reconstructs the text a parsing describes.
pub fn expand(parsing: &Parsing) -> Result<Vec<u8>> {
    let mut out = Vec::with_capacity(parsing.expanded_len());
    for (k, ph) in parsing.phrases.iter().enumerate() {
        match *ph {
            Phrase::Literal(c) => out.push(c),
            Phrase::Copy { dist, len } => {
                if dist == 0 || dist > out.len() {
                    return Err(Error::InvalidParsing(format!(
                        "phrase {k}: copy distance {dist} exceeds produced length {}",
                        out.len()
                    )));
                }
                let start = out.len() - dist;
                for i in 0..len {
                    out.push(out[start + i]);
                }
            }
        }
    }
    Ok(out)
}

/// Single shortest-path state: best-known bit distance per vertex plus the
/// edge that achieved it.
struct SsspArrays {
    dist: Vec<u64>,
    /// (predecessor vertex, copy distance); copy distance 0 means literal.
    pred: Vec<(u32, u32)>,
}

impl SsspArrays {
    fn new(n: usize) -> Self {
        let mut dist = vec![u64::MAX; n + 1];
        dist[0] = 0;
        SsspArrays { dist, pred: vec![(u32::MAX, 0); n + 1] }
    }

    /// Relaxes one edge. Ties prefer the longer phrase, then the smaller
    /// copy distance, which makes the chosen path deterministic.
    fn relax(&mut self, edge: &MaximalEdge, base: u64) {
        let cand = base + edge.cost;
        let j = edge.target;
        let better = match cand.cmp(&self.dist[j]) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => {
                let (old_pred, old_dist) = self.pred[j];
                let old_len = j - old_pred as usize;
                edge.len() > old_len || (edge.len() == old_len && edge.dist < old_dist as usize)
            }
        };
        if better {
            self.dist[j] = cand;
            self.pred[j] = (edge.source as u32, edge.dist as u32);
        }
    }

    fn into_parsing(self, text: &[u8]) -> Parsing {
        let n = text.len();
        let mut rev = Vec::new();
        let mut j = n;
        while j > 0 {
            let (i, d) = self.pred[j];
            let i = i as usize;
            rev.push(if d == 0 {
                Phrase::Literal(text[i])
            } else {
                Phrase::Copy { dist: d as usize, len: j - i }
            });
            j = i;
        }
        rev.reverse();
        Parsing { phrases: rev, total_bits: self.dist[n] }
    }
}

/// Minimum-bit parse of `text` under `model`, optionally restricting copy
/// sources to the most recent `max_distance` symbols.
///
/// Runs the topological shortest-path sweep over the generator's edges; the
/// result costs exactly the full parse graph's shortest-path distance.
pub fn optimal_parse(
    text: &[u8],
    model: &CostModel,
    max_distance: Option<usize>,
) -> Result<Parsing> {
    let idx = TextIndex::build(text.to_vec());
    optimal_parse_indexed(&idx, model, max_distance)
}

/// As `optimal_parse` for a pre-built index over the same text.
pub fn optimal_parse_indexed(
    idx: &TextIndex,
    model: &CostModel,
    max_distance: Option<usize>,
) -> Result<Parsing> {
    let n = idx.len();
    if n == 0 {
        return Ok(Parsing::empty());
    }
    let mut gen = EdgeGenerator::open(idx, model, max_distance)?;
    let mut state = SsspArrays::new(n);
    let mut star = Vec::new();
    for i in 0..n {
        let base = state.dist[i];
        debug_assert_ne!(base, u64::MAX, "vertex {i} unreachable");
        gen.forward_star(i, &mut star)?;
        for e in &star {
            state.relax(e, base);
        }
    }
    Ok(state.into_parsing(idx.text()))
}

/// Classic greedy parse: at each position take the longest previous match
/// (rightmost source among the longest), else a literal. Costs are charged
/// under the same model as the optimal parser.
pub fn greedy_parse(
    text: &[u8],
    model: &CostModel,
    max_distance: Option<usize>,
) -> Result<Parsing> {
    let idx = TextIndex::build(text.to_vec());
    greedy_parse_indexed(&idx, model, max_distance)
}

/// As `greedy_parse` for a pre-built index over the same text.
pub fn greedy_parse_indexed(
    idx: &TextIndex,
    model: &CostModel,
    max_distance: Option<usize>,
) -> Result<Parsing> {
    let n = idx.len();
    if n == 0 {
        return Ok(Parsing::empty());
    }
    let text = idx.text();
    let mut finder = MatchFinder::new(idx);
    let mut phrases = Vec::new();
    let mut bits = 0u64;
    let mut i = 0usize;
    let mut inserted = 0usize;
    while i < n {
        // Make every position of the scanned prefix available as a source,
        // and expire positions that fell out of the window.
        while inserted < i {
            finder.insert(inserted);
            inserted += 1;
        }
        if let Some(w) = max_distance {
            finder.evict_before(i.saturating_sub(w));
        }
        let step = match finder.longest_match(i) {
            Some((len, src)) => {
                let dist = i - src;
                bits += model.copy_cost(dist as u64, len as u64)?;
                phrases.push(Phrase::Copy { dist, len });
                len
            }
            None => {
                bits += model.literal_cost();
                phrases.push(Phrase::Literal(text[i]));
                1
            }
        };
        i += step;
    }
    Ok(Parsing { phrases, total_bits: bits })
}

/// Longest-previous-match queries over a growing set of source positions.
///
/// Positions are tracked by suffix-array rank: the longest match for the
/// suffix at `i` is attained at one of the rank neighbours of `rank[i]`
/// among the live sources, and the rightmost source achieving it is a
/// range-maximum over the rank interval whose lcp stays at that length.
struct MatchFinder<'a> {
    idx: &'a TextIndex,
    live: std::collections::BTreeSet<u32>,
    seg: MaxSegTree,
    evicted_to: usize,
}

impl<'a> MatchFinder<'a> {
    fn new(idx: &'a TextIndex) -> Self {
        MatchFinder {
            idx,
            live: std::collections::BTreeSet::new(),
            seg: MaxSegTree::new(idx.len()),
            evicted_to: 0,
        }
    }

    fn insert(&mut self, pos: usize) {
        let r = self.idx.rank()[pos];
        self.live.insert(r);
        self.seg.set(r as usize, pos as u32);
    }

    fn evict_before(&mut self, bound: usize) {
        while self.evicted_to < bound {
            let r = self.idx.rank()[self.evicted_to];
            self.live.remove(&r);
            self.seg.clear(r as usize);
            self.evicted_to += 1;
        }
    }

    /// Longest match against any live source; returns (length, source) with
    /// the rightmost source among those of maximal length.
    fn longest_match(&self, i: usize) -> Option<(usize, usize)> {
        let ri = self.idx.rank()[i];
        let lcp_to = |r: u32| {
            let other = self.idx.suffix_array()[r as usize] as usize;
            self.idx.lcp_pos(other, i)
        };
        let mut best = 0usize;
        if let Some(&r) = self.live.range(..ri).next_back() {
            best = best.max(lcp_to(r));
        }
        if let Some(&r) = self.live.range(ri + 1..).next() {
            best = best.max(lcp_to(r));
        }
        if best == 0 {
            return None;
        }
        // Every rank whose lcp with rank[i] is >= best forms a contiguous
        // interval around rank[i]; the rightmost live source in it wins.
        let (lo, hi) = self.lcp_interval(ri as usize, best);
        let src = self.seg.max(lo, hi).expect("a neighbour achieved this length");
        Some((best, src as usize))
    }

    /// Maximal rank interval around `r` whose suffixes share >= `depth`
    /// symbols with the suffix at rank `r` (binary search over adjacent lcps).
    fn lcp_interval(&self, r: usize, depth: usize) -> (usize, usize) {
        let n = self.idx.len();
        let lcp_rank = |a: usize, b: usize| {
            // min of adjacent lcps over (a, b], a < b
            let sa = self.idx.suffix_array();
            self.idx.lcp_pos(sa[a] as usize, sa[b] as usize)
        };
        let mut lo = r;
        if r > 0 {
            let (mut l, mut h) = (0usize, r); // invariant: answer in (l..=h)
            while l < h {
                let mid = (l + h) / 2;
                if lcp_rank(mid, r) >= depth {
                    h = mid;
                } else {
                    l = mid + 1;
                }
            }
            lo = l;
        }
        let mut hi = r;
        if r + 1 < n {
            let (mut l, mut h) = (r, n - 1);
            while l < h {
                let mid = (l + h).div_ceil(2);
                if lcp_rank(r, mid) >= depth {
                    l = mid;
                } else {
                    h = mid - 1;
                }
            }
            hi = l;
        }
        (lo, hi)
    }
}

/// Point-update range-maximum tree over positions, 0 meaning "empty".
struct MaxSegTree {
    size: usize,
    tree: Vec<u32>,
}

impl MaxSegTree {
    fn new(n: usize) -> Self {
        let size = n.next_power_of_two().max(1);
        MaxSegTree { size, tree: vec![0; 2 * size] }
    }

    fn set(&mut self, i: usize, value: u32) {
        self.update(i, value + 1);
    }

    fn clear(&mut self, i: usize) {
        self.update(i, 0);
    }

    fn update(&mut self, i: usize, stored: u32) {
        let mut k = self.size + i;
        self.tree[k] = stored;
        k /= 2;
        while k > 0 {
            self.tree[k] = self.tree[2 * k].max(self.tree[2 * k + 1]);
            k /= 2;
        }
    }

    /// Maximum stored position in [lo, hi], if any.
    fn max(&self, lo: usize, hi: usize) -> Option<u32> {
        let (mut l, mut r) = (self.size + lo, self.size + hi + 1);
        let mut m = 0u32;
        while l < r {
            if l % 2 == 1 {
                m = m.max(self.tree[l]);
                l += 1;
            }
            if r % 2 == 1 {
                r -= 1;
                m = m.max(self.tree[r]);
            }
            l /= 2;
            r /= 2;
        }
        if m == 0 {
            None
        } else {
            Some(m - 1)
        }
    }
}
