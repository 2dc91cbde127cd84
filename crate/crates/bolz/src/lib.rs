//! Bit-optimal LZ77 parsing and a bit-exact container codec.
//!
//! The parser finds, for a chosen pair of integer codes, the phrase
//! sequence of minimum total encoded size by running a shortest-path
//! computation over a pruned parse graph whose edges are generated on the
//! fly. A quadratic reference implementation over the full graph backs it
//! in tests, and a greedy longest-match parser serves as the baseline it
//! is measured against.

pub mod bits;
pub mod block_trie;
pub mod codes;
pub mod container;
pub mod edge_gen;
pub mod error;
pub mod gap;
pub mod graph;
pub mod index;
pub mod parse;
pub mod sais;

pub use bits::{BitReader, BitWriter};
pub use codes::{CostClass, CostClassTable, CostModel, IntegerCode};
pub use container::{compress, decompress, Config, ParserKind};
pub use edge_gen::{EdgeGenerator, MaximalEdge};
pub use error::{Error, Result};
pub use gap::{gap_family_len, generate_gap_family, run_gap_experiment, GapRow};
pub use graph::ParseGraph;
pub use index::TextIndex;
pub use parse::{expand, greedy_parse, optimal_parse, parse_cost, Parsing, Phrase};
