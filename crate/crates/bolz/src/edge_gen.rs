//! On-the-fly generation of the parse edges that matter.
//!
//! Instead of materializing every possible copy, the generator runs one
//! logical pass per distance cost class. Each pass walks the text in blocks
//! as wide as its class, and a block trie sweep hands every vertex in the
//! block a source position maximizing the shared prefix over that class's
//! window. A vertex's forward star is then assembled class by class: a
//! class whose best match is no longer than what nearer classes already
//! offered is dominated and contributes nothing; otherwise its span of new
//! lengths is subdivided at the length-code boundaries, one edge per
//! distinct length cost.
//!
//! The emitted set is a supergraph of the cost-boundary edges of the full
//! parse graph and a subgraph of it cost-wise, so relaxing only these edges
//! preserves shortest-path distances. Per vertex it stays within one edge
//! per distance class plus one per length class; resident state across all
//! passes is one candidate per vertex of each class's current block, O(n)
//! overall.

use crate::block_trie::{BlockTrie, NONE};
use crate::codes::{CostClassTable, CostModel};
use crate::error::{Error, Result};
use crate::index::TextIndex;
use std::ops::Range;

/// A parse-graph edge at a cost boundary: either the literal step
/// (`dist == 0`) or a copy of `target - source` symbols from `dist` back.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaximalEdge {
    pub source: usize,
    pub target: usize,
    pub dist: usize,
    pub cost: u64,
}

#[allow(clippy::len_without_is_empty)]
impl MaximalEdge {
    pub fn len(&self) -> usize {
        self.target - self.source
    }

    pub fn is_literal(&self) -> bool {
        self.dist == 0
    }
}

/// State of one distance-class pass: the block currently resident and the
/// best source candidate for each of its vertices.
struct ClassPass {
    dist_lo: usize,
    dist_hi: usize,
    dist_cost: u64,
    block: Range<usize>,
    mp: Vec<u32>,
}

impl ClassPass {
    fn width(&self) -> usize {
        self.dist_hi - self.dist_lo + 1
    }

    fn advance(&mut self, idx: &TextIndex, i: usize) -> Result<()> {
        let end = (i + self.width()).min(idx.len());
        self.block = i..end;
        self.mp.clear();
        if end <= self.dist_lo {
            // Every window of this block starts before the text; no source
            // can exist, so skip the trie entirely.
            self.mp.resize(end - i, NONE);
        } else if self.width() <= 4 {
            // Narrow class: the window has at most four candidates, so the
            // best source comes from a direct scan instead of a trie.
            for h in i..end {
                let mut best = NONE;
                let mut best_len = 0;
                if h >= self.dist_lo {
                    for s in h.saturating_sub(self.dist_hi)..=h - self.dist_lo {
                        let l = idx.lcp_pos(s, h);
                        if l > best_len || best == NONE {
                            best = s as u32;
                            best_len = l;
                        }
                    }
                }
                self.mp.push(best);
            }
        } else {
            let trie = BlockTrie::build(idx, self.block.clone(), self.dist_lo, self.dist_hi)?;
            self.mp = trie.maximal_positions();
        }
        Ok(())
    }
}

/// Generates each vertex's maximal forward edges as the parse sweep visits
/// it, vertices strictly in order.
pub struct EdgeGenerator<'a> {
    idx: &'a TextIndex,
    literal_cost: u64,
    length_classes: CostClassTable,
    passes: Vec<ClassPass>,
    next_vertex: usize,
}

impl<'a> EdgeGenerator<'a> {
    /// Prepares one pass per distance cost class over `1..=max_distance`
    /// (clamped to the text). Fails if either code cannot price the
    /// required distance or length range.
    pub fn open(idx: &'a TextIndex, model: &CostModel, max_distance: Option<usize>) -> Result<Self> {
        let n = idx.len();
        let horizon = n.saturating_sub(1);
        let max_d = max_distance.map_or(horizon, |w| w.min(horizon));
        let passes = if max_d >= 1 {
            model
                .distance_classes(max_d as u64)?
                .classes
                .iter()
                .map(|c| ClassPass {
                    dist_lo: c.lo as usize,
                    dist_hi: c.hi as usize,
                    dist_cost: c.bits as u64,
                    block: 0..0,
                    mp: Vec::new(),
                })
                .collect()
        } else {
            Vec::new()
        };
        let length_classes = if n >= 1 {
            model.length_classes(n as u64)?
        } else {
            CostClassTable { classes: Vec::new(), domain_lo: 1, domain_hi: 0 }
        };
        Ok(EdgeGenerator {
            idx,
            literal_cost: model.literal_cost(),
            length_classes,
            passes,
            next_vertex: 0,
        })
    }

    /// Number of distance-class passes.
    pub fn pass_count(&self) -> usize {
        self.passes.len()
    }

    /// Number of length cost classes used for subdivision.
    pub fn length_class_count(&self) -> usize {
        self.length_classes.classes.len()
    }

    /// Candidate slots currently resident across all passes.
    pub fn resident_candidates(&self) -> usize {
        self.passes.iter().map(|p| p.mp.len()).sum()
    }

    /// Fills `out` with the literal edge and the maximal copy edges of
    /// vertex `i`. Must be called with strictly increasing `i`.
    pub fn forward_star(&mut self, i: usize, out: &mut Vec<MaximalEdge>) -> Result<()> {
        let n = self.idx.len();
        if i >= n {
            return Err(Error::Usage(format!("vertex {i} out of range (n = {n})")));
        }
        if i < self.next_vertex {
            return Err(Error::Usage(format!(
                "forward_star must be called with increasing vertices; got {i} after {}",
                self.next_vertex as i64 - 1
            )));
        }
        self.next_vertex = i + 1;

        out.clear();
        out.push(MaximalEdge { source: i, target: i + 1, dist: 0, cost: self.literal_cost });

        let idx = self.idx;
        let g = &self.length_classes.classes;
        let mut best_len = 0usize;
        for pass in &mut self.passes {
            if i >= pass.block.end {
                pass.advance(idx, i)?;
            }
            let s = pass.mp[i - pass.block.start];
            // Sweep results are hints; anything outside the vertex's own
            // window carries no edge of this class.
            if s == NONE || s as usize >= i {
                continue;
            }
            let d = i - s as usize;
            if d < pass.dist_lo || d > pass.dist_hi {
                continue;
            }
            let q = idx.lcp_pos(s as usize, i);
            if q <= best_len {
                continue;
            }
            let mut k = g.partition_point(|c| (c.hi as usize) < best_len + 1);
            while k < g.len() && (g[k].lo as usize) <= q {
                let l = (g[k].hi as usize).min(q);
                out.push(MaximalEdge {
                    source: i,
                    target: i + l,
                    dist: d,
                    cost: pass.dist_cost + g[k].bits as u64,
                });
                k += 1;
            }
            best_len = q;
        }
        Ok(())
    }
}

/// Lengths `prev_len+1 ..= cand_len` reduced to one entry per length cost
/// class: the longest length the class contributes, with its length cost.
pub fn subdivide_length_classes(
    prev_len: usize,
    cand_len: usize,
    length_classes: &CostClassTable,
) -> Vec<(usize, u64)> {
    let g = &length_classes.classes;
    let mut out = Vec::new();
    let mut k = g.partition_point(|c| (c.hi as usize) < prev_len + 1);
    while k < g.len() && (g[k].lo as usize) <= cand_len {
        out.push(((g[k].hi as usize).min(cand_len), g[k].bits as u64));
        k += 1;
    }
    out
}
