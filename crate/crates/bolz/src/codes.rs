//! Variable-length integer codes with monotone codeword lengths, their
//! cost-class tables, and the phrase cost model.
//!
//! Every code here maps positive integers to prefix-free bit strings and
//! satisfies the monotonicity the parser relies on: `x <= y` implies
//! `codeword_len(x) <= codeword_len(y)`. A *cost class* is a maximal run of
//! consecutive values sharing one codeword length; class boundaries are
//! computed in closed form, never by scanning the domain.

use crate::bits::{BitReader, BitWriter};
use crate::error::{Error, Result};

/// Fibonacci numbers 1, 2, 3, 5, ... (largest first index that fits in u64).
const FIB: [u64; 91] = {
    let mut t = [0u64; 91];
    t[0] = 1;
    t[1] = 2;
    let mut i = 2;
    while i < 91 {
        t[i] = t[i - 1] + t[i - 2];
        i += 1;
    }
    t
};

/// A prefix-free variable-length code over positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegerCode {
    /// Equal-length code: x is stored as `x - 1` in exactly `width` bits.
    FixedWidth(u8),
    /// Unary length prefix followed by the binary representation.
    EliasGamma,
    /// Gamma-coded bit length followed by the mantissa bits.
    EliasDelta,
    /// Zeckendorf representation, low Fibonacci term first, closed by "11".
    Fibonacci,
}

impl IntegerCode {
    /// Largest value the code can represent.
    pub fn max_encodable(self) -> u64 {
        match self {
            IntegerCode::FixedWidth(w) => 1u64 << w,
            _ => u64::MAX,
        }
    }

    fn check_domain(self, x: u64) -> Result<()> {
        if x == 0 {
            return Err(Error::Domain("cannot encode 0".into()));
        }
        if x > self.max_encodable() {
            return Err(Error::Domain(format!(
                "{} exceeds the bound of {:?}",
                x, self
            )));
        }
        Ok(())
    }

    /// Exact length in bits of the codeword for `x`.
    pub fn codeword_len(self, x: u64) -> Result<u32> {
        self.check_domain(x)?;
        Ok(match self {
            IntegerCode::FixedWidth(w) => w as u32,
            IntegerCode::EliasGamma => 2 * x.ilog2() + 1,
            IntegerCode::EliasDelta => {
                let l = x.ilog2();
                l + 2 * (l + 1).ilog2() + 1
            }
            IntegerCode::Fibonacci => fib_index(x) as u32 + 2,
        })
    }

    /// Appends the codeword for `x` to `w`; returns the number of bits written.
    pub fn encode_value(self, x: u64, w: &mut BitWriter) -> Result<u32> {
        self.check_domain(x)?;
        let before = w.bit_len();
        match self {
            IntegerCode::FixedWidth(width) => w.write_bits(x - 1, width as u32),
            IntegerCode::EliasGamma => {
                let l = x.ilog2();
                w.write_bits(0, l);
                w.write_bits(x, l + 1);
            }
            IntegerCode::EliasDelta => {
                let l = x.ilog2();
                let marker = (l + 1) as u64;
                let ml = marker.ilog2();
                w.write_bits(0, ml);
                w.write_bits(marker, ml + 1);
                w.write_bits(x - (1u64 << l), l);
            }
            IntegerCode::Fibonacci => {
                let top = fib_index(x);
                let mut rem = x;
                let mut bits = [false; 92];
                for j in (0..=top).rev() {
                    if FIB[j] <= rem {
                        bits[j] = true;
                        rem -= FIB[j];
                    }
                }
                debug_assert_eq!(rem, 0);
                for &b in &bits[..=top] {
                    w.push_bit(b);
                }
                w.push_bit(true);
            }
        }
        Ok((w.bit_len() - before) as u32)
    }

    /// Reads one codeword; returns the value and the bits consumed.
    pub fn decode_value(self, r: &mut BitReader<'_>) -> Result<(u64, u32)> {
        let before = r.position();
        let x = match self {
            IntegerCode::FixedWidth(width) => r.read_bits(width as u32)? + 1,
            IntegerCode::EliasGamma => decode_gamma(r)?,
            IntegerCode::EliasDelta => {
                let l = decode_gamma(r)? - 1;
                if l > 63 {
                    return Err(Error::MalformedCodeword);
                }
                (1u64 << l) | r.read_bits(l as u32)?
            }
            IntegerCode::Fibonacci => {
                let mut acc: u64 = 0;
                let mut prev = false;
                let mut idx = 0;
                loop {
                    let bit = r.read_bit()?;
                    if bit && prev {
                        break;
                    }
                    if bit {
                        if idx >= FIB.len() {
                            return Err(Error::MalformedCodeword);
                        }
                        acc = acc
                            .checked_add(FIB[idx])
                            .ok_or(Error::MalformedCodeword)?;
                        prev = true;
                    } else {
                        prev = false;
                    }
                    idx += 1;
                }
                acc
            }
        };
        Ok((x, (r.position() - before) as u32))
    }

    /// Partitions `[lo, hi]` into maximal runs of equal codeword length.
    pub fn cost_classes(self, lo: u64, hi: u64) -> Result<CostClassTable> {
        if lo == 0 || lo > hi {
            return Err(Error::Domain(format!("empty or invalid domain [{lo}, {hi}]")));
        }
        self.check_domain(hi)?;
        let mut classes = Vec::new();
        let mut cur = lo;
        loop {
            let (run_hi, bits) = match self {
                IntegerCode::FixedWidth(w) => (self.max_encodable(), w as u32),
                IntegerCode::EliasGamma | IntegerCode::EliasDelta => {
                    let l = cur.ilog2();
                    let run_hi = if l >= 63 { u64::MAX } else { (1u64 << (l + 1)) - 1 };
                    (run_hi, self.codeword_len(cur)?)
                }
                IntegerCode::Fibonacci => {
                    let idx = fib_index(cur);
                    let run_hi = if idx + 1 < FIB.len() { FIB[idx + 1] - 1 } else { u64::MAX };
                    (run_hi, idx as u32 + 2)
                }
            };
            let end = run_hi.min(hi);
            classes.push(CostClass { lo: cur, hi: end, bits });
            if end == hi {
                break;
            }
            cur = end + 1;
        }
        Ok(CostClassTable { classes, domain_lo: lo, domain_hi: hi })
    }

    /// Identifier used in the container header.
    pub fn container_id(self) -> Result<u8> {
        match self {
            IntegerCode::FixedWidth(32) => Ok(0),
            IntegerCode::EliasGamma => Ok(1),
            IntegerCode::EliasDelta => Ok(2),
            IntegerCode::Fibonacci => Ok(3),
            IntegerCode::FixedWidth(w) => Err(Error::Domain(format!(
                "fixed-width {w} has no container id (only width 32 does)"
            ))),
        }
    }

    pub fn from_container_id(id: u8) -> Result<IntegerCode> {
        match id {
            0 => Ok(IntegerCode::FixedWidth(32)),
            1 => Ok(IntegerCode::EliasGamma),
            2 => Ok(IntegerCode::EliasDelta),
            3 => Ok(IntegerCode::Fibonacci),
            other => Err(Error::UnknownCodeId(other)),
        }
    }
}

/// Index of the largest Fibonacci number in `FIB` that is `<= x` (x >= 1).
fn fib_index(x: u64) -> usize {
    debug_assert!(x >= 1);
    FIB.partition_point(|&f| f <= x) - 1
}

fn decode_gamma(r: &mut BitReader<'_>) -> Result<u64> {
    let mut zeros = 0u32;
    while !r.read_bit()? {
        zeros += 1;
        if zeros > 63 {
            return Err(Error::MalformedCodeword);
        }
    }
    Ok((1u64 << zeros) | r.read_bits(zeros)?)
}

/// One maximal run of values sharing a codeword length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostClass {
    pub lo: u64,
    pub hi: u64,
    pub bits: u32,
}

/// The ordered cost classes of a code over a value range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostClassTable {
    pub classes: Vec<CostClass>,
    pub domain_lo: u64,
    pub domain_hi: u64,
}

impl CostClassTable {
    /// Number of distinct codeword lengths on the domain.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `x`, if `x` is in the domain.
    pub fn class_of(&self, x: u64) -> Option<usize> {
        if x < self.domain_lo || x > self.domain_hi {
            return None;
        }
        let i = self.classes.partition_point(|c| c.hi < x);
        debug_assert!(self.classes[i].lo <= x && x <= self.classes[i].hi);
        Some(i)
    }
}

/// Bit costs of parse phrases: `f` prices distances, `g` prices lengths.
///
/// Distances are stored shifted by one (`d + 1`) so that the literal marker
/// `d = 0` is representable by codes that cannot express zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostModel {
    pub f: IntegerCode,
    pub g: IntegerCode,
    pub literal_bits: u8,
}

impl CostModel {
    pub fn new(f: IntegerCode, g: IntegerCode, literal_bits: u8) -> Self {
        Self { f, g, literal_bits }
    }

    /// Bits to encode a copy distance (`d = 0` is the literal marker).
    pub fn cost_distance(&self, d: u64) -> Result<u64> {
        Ok(self.f.codeword_len(d + 1)? as u64)
    }

    /// Bits to encode a copy length.
    pub fn cost_length(&self, len: u64) -> Result<u64> {
        Ok(self.g.codeword_len(len)? as u64)
    }

    /// Full cost of a literal phrase: marker plus the raw symbol bits.
    pub fn literal_cost(&self) -> u64 {
        self.f.codeword_len(1).expect("1 is always encodable") as u64 + self.literal_bits as u64
    }

    /// Full cost of a copy phrase.
    pub fn copy_cost(&self, d: u64, len: u64) -> Result<u64> {
        Ok(self.cost_distance(d)? + self.cost_length(len)?)
    }

    /// Cost classes over copy distances `1..=max_dist` (shift-adjusted).
    pub fn distance_classes(&self, max_dist: u64) -> Result<CostClassTable> {
        let shifted = self.f.cost_classes(2, max_dist + 1)?;
        let classes = shifted
            .classes
            .into_iter()
            .map(|c| CostClass { lo: c.lo - 1, hi: c.hi - 1, bits: c.bits })
            .collect();
        Ok(CostClassTable { classes, domain_lo: 1, domain_hi: max_dist })
    }

    /// Cost classes over copy lengths `1..=max_len`.
    pub fn length_classes(&self, max_len: u64) -> Result<CostClassTable> {
        self.g.cost_classes(1, max_len)
    }
}
