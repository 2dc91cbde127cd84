//! Reference implementation over the fully materialized parse graph.
//!
//! The graph holds every possible parse step of the text: one literal edge
//! per position and one copy edge per (position, length) pair that has a
//! previous occurrence, priced at its rightmost source. Quadratic in the
//! worst case; this module exists as ground truth for the streaming parser
//! and stays on small inputs.

use crate::codes::CostModel;
use crate::edge_gen::MaximalEdge;
use crate::error::Result;
use crate::parse::{Parsing, Phrase};

/// Full parse graph: vertex `i` for each text position plus the final
/// vertex `n`; `copy_dist[i][l-1]` is the rightmost-copy distance for the
/// length-`l` edge out of vertex `i`.
#[derive(Debug, Clone)]
pub struct ParseGraph {
    text: Vec<u8>,
    copy_dist: Vec<Vec<u32>>,
    max_distance: Option<usize>,
}

impl ParseGraph {
    /// Builds the graph by direct scanning: for every pair of positions the
    /// match is extended symbol by symbol, so sources may overlap their
    /// phrase. Intentionally brute force.
    pub fn build(text: &[u8], max_distance: Option<usize>) -> Self {
        let n = text.len();
        let mut copy_dist = vec![Vec::new(); n];
        for i in 0..n {
            let lo = max_distance.map_or(0, |w| i.saturating_sub(w));
            let dists = &mut copy_dist[i];
            for p in (lo..i).rev() {
                let mut m = 0;
                while i + m < n && text[p + m] == text[i + m] {
                    m += 1;
                }
                // Earlier (more recent) sources already claimed the shorter
                // lengths; this source is the rightmost for the rest.
                while dists.len() < m {
                    dists.push((i - p) as u32);
                }
            }
        }
        ParseGraph { text: text.to_vec(), copy_dist, max_distance }
    }

    pub fn n(&self) -> usize {
        self.text.len()
    }

    pub fn max_distance(&self) -> Option<usize> {
        self.max_distance
    }

    /// Copy edges out of vertex `i` as (distance, length) pairs.
    pub fn copies(&self, i: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.copy_dist[i]
            .iter()
            .enumerate()
            .map(|(k, &d)| (d as usize, k + 1))
    }

    /// Longest copy edge out of vertex `i` (0 when none exists).
    pub fn max_copy_len(&self, i: usize) -> usize {
        self.copy_dist[i].len()
    }

    /// Shortest path from the first to the last vertex by dynamic
    /// programming over every edge; ties prefer the longer phrase, then the
    /// smaller distance.
    pub fn shortest_path(&self, model: &CostModel) -> Result<Parsing> {
        let n = self.n();
        if n == 0 {
            return Ok(Parsing::empty());
        }
        let lit = model.literal_cost();
        let mut dist = vec![u64::MAX; n + 1];
        let mut pred: Vec<(u32, u32)> = vec![(u32::MAX, 0); n + 1];
        dist[0] = 0;
        let relax = |dist: &mut Vec<u64>, pred: &mut Vec<(u32, u32)>, i: usize, j: usize, d: usize, cost: u64| {
            let cand = dist[i] + cost;
            let better = match cand.cmp(&dist[j]) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    let old_len = j - pred[j].0 as usize;
                    let len = j - i;
                    len > old_len || (len == old_len && d < pred[j].1 as usize)
                }
            };
            if better {
                dist[j] = cand;
                pred[j] = (i as u32, d as u32);
            }
        };
        for i in 0..n {
            relax(&mut dist, &mut pred, i, i + 1, 0, lit);
            for (d, l) in self.copies(i) {
                let cost = model.copy_cost(d as u64, l as u64)?;
                relax(&mut dist, &mut pred, i, i + l, d, cost);
            }
        }
        let mut rev = Vec::new();
        let mut j = n;
        while j > 0 {
            let (i, d) = pred[j];
            let i = i as usize;
            rev.push(if d == 0 {
                Phrase::Literal(self.text[i])
            } else {
                Phrase::Copy { dist: d as usize, len: j - i }
            });
            j = i;
        }
        rev.reverse();
        Ok(Parsing { phrases: rev, total_bits: dist[n] })
    }

    /// Per-vertex edges whose successor (same source, target one further)
    /// costs strictly more bits, i.e. the cost-boundary edges, plus the
    /// literal edge. Restricting the shortest path to these preserves its
    /// distance.
    pub fn maximal_edges(&self, model: &CostModel) -> Result<Vec<Vec<MaximalEdge>>> {
        let n = self.n();
        let lit = model.literal_cost();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut edges = vec![MaximalEdge { source: i, target: i + 1, dist: 0, cost: lit }];
            let top = self.max_copy_len(i);
            let mut next_cost = u64::MAX;
            let mut keep = Vec::new();
            for (d, l) in self.copies(i).collect::<Vec<_>>().into_iter().rev() {
                let cost = model.copy_cost(d as u64, l as u64)?;
                if cost < next_cost || l == top {
                    keep.push(MaximalEdge { source: i, target: i + l, dist: d, cost });
                }
                next_cost = cost;
            }
            keep.reverse();
            edges.extend(keep);
            out.push(edges);
        }
        Ok(out)
    }

    /// Shortest-path distance using only the maximal edges.
    pub fn shortest_path_over_maximal(&self, model: &CostModel) -> Result<u64> {
        let n = self.n();
        if n == 0 {
            return Ok(0);
        }
        let stars = self.maximal_edges(model)?;
        let mut dist = vec![u64::MAX; n + 1];
        dist[0] = 0;
        for i in 0..n {
            for e in &stars[i] {
                let cand = dist[i] + e.cost;
                if cand < dist[e.target] {
                    dist[e.target] = cand;
                }
            }
        }
        Ok(dist[n])
    }

    /// Graphviz rendering of either the full graph or only the maximal
    /// edges, for inspection of small inputs.
    pub fn to_dot(&self, model: &CostModel, pruned: bool) -> Result<String> {
        use std::fmt::Write;
        let name = if pruned { "pruned" } else { "full" };
        let mut s = format!("digraph {name} {{\n  rankdir=LR;\n");
        let n = self.n();
        for i in 0..=n {
            writeln!(s, "  v{i} [shape=circle];").unwrap();
        }
        let edge = |s: &mut String, e: &MaximalEdge| {
            writeln!(
                s,
                "  v{} -> v{} [label=\"d={} l={} {}b\"];",
                e.source,
                e.target,
                e.dist,
                e.len(),
                e.cost
            )
            .unwrap();
        };
        if pruned {
            for star in self.maximal_edges(model)? {
                for e in &star {
                    edge(&mut s, e);
                }
            }
        } else {
            let lit = model.literal_cost();
            for i in 0..n {
                edge(&mut s, &MaximalEdge { source: i, target: i + 1, dist: 0, cost: lit });
                for (d, l) in self.copies(i) {
                    let cost = model.copy_cost(d as u64, l as u64)?;
                    edge(&mut s, &MaximalEdge { source: i, target: i + l, dist: d, cost });
                }
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}
