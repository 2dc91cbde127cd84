//! The constructed string family on which greedy parsing loses to the
//! bit-optimal parser by a growing factor, and the harness measuring it.
//!
//! The family interleaves a long unary run with segments `ba, baa, baaa, …`
//! whose greedy copies all reach back across the run, paying a long
//! distance codeword each time, while the optimal parse assembles each
//! segment from its immediate predecessor at a tiny distance.

use crate::codes::CostModel;
use crate::error::{Error, Result};
use crate::index::TextIndex;
use crate::parse::{greedy_parse_indexed, optimal_parse_indexed};

/// Largest supported family parameter; the string length grows as 2^l.
pub const MAX_GAP_PARAM: u32 = 24;

/// Builds the family member for parameter `l`:
/// `b a^l c^(2^l) (ba)(ba^2)...(ba^l)`.
pub fn generate_gap_family(l: u32) -> Result<Vec<u8>> {
    if !(1..=MAX_GAP_PARAM).contains(&l) {
        return Err(Error::Domain(format!(
            "family parameter {l} outside 1..={MAX_GAP_PARAM}"
        )));
    }
    let mut s = Vec::with_capacity(gap_family_len(l));
    s.push(b'b');
    s.extend(std::iter::repeat_n(b'a', l as usize));
    s.extend(std::iter::repeat_n(b'c', 1usize << l));
    for i in 1..=l as usize {
        s.push(b'b');
        s.extend(std::iter::repeat_n(b'a', i));
    }
    debug_assert_eq!(s.len(), gap_family_len(l));
    Ok(s)
}

/// Closed-form length of the family member: 1 + 2l + 2^l + l(l+1)/2.
pub fn gap_family_len(l: u32) -> usize {
    let l = l as usize;
    1 + 2 * l + (1usize << l) + l * (l + 1) / 2
}

/// One measurement row of the greedy-versus-optimal experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct GapRow {
    pub l: u32,
    pub n: usize,
    pub greedy_bits: u64,
    pub optimal_bits: u64,
    pub ratio: f64,
    pub greedy_phrases: usize,
    pub optimal_phrases: usize,
}

/// Runs both parsers over the family members for every `l` in the range.
pub fn run_gap_experiment(
    l_range: std::ops::RangeInclusive<u32>,
    model: &CostModel,
) -> Result<Vec<GapRow>> {
    let mut rows = Vec::new();
    for l in l_range {
        let text = generate_gap_family(l)?;
        let idx = TextIndex::build(text);
        let greedy = greedy_parse_indexed(&idx, model, None)?;
        let optimal = optimal_parse_indexed(&idx, model, None)?;
        rows.push(GapRow {
            l,
            n: idx.len(),
            greedy_bits: greedy.total_bits,
            optimal_bits: optimal.total_bits,
            ratio: greedy.total_bits as f64 / optimal.total_bits as f64,
            greedy_phrases: greedy.phrases.len(),
            optimal_phrases: optimal.phrases.len(),
        });
    }
    Ok(rows)
}

pub const CSV_HEADER: &str = "l,n,greedy_bits,optimal_bits,ratio,greedy_phrases,optimal_phrases";

/// Stable machine-parseable rendering of the experiment rows.
pub fn render_csv(rows: &[GapRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.6},{},{}\n",
            r.l, r.n, r.greedy_bits, r.optimal_bits, r.ratio, r.greedy_phrases, r.optimal_phrases
        ));
    }
    out
}
