//! The container format: a fixed header followed by the phrase bitstream.
//!
//! Layout (see FORMAT.md at the repository root for the byte-exact
//! contract):
//!
//! ```text
//! offset  size  field
//!      0     4  magic "BOLZ"
//!      4     1  version (1)
//!      5     1  distance code id
//!      6     1  length code id
//!      7     1  literal bits per symbol
//!      8     8  max distance, little endian (0 = unbounded)
//!     16     8  original length n, little endian
//!     24     -  phrase bitstream, final partial byte zero-padded
//! ```
//!
//! Each phrase is the distance codeword of `d + 1`; a literal (`d = 0`)
//! is followed by the raw symbol bits (MSB first), a copy by the length
//! codeword. The payload bit count equals the parsing's total bits.

use crate::bits::{BitReader, BitWriter};
use crate::codes::{CostModel, IntegerCode};
use crate::error::{Error, Result};
use crate::parse::{greedy_parse, optimal_parse, Parsing, Phrase};

pub const MAGIC: [u8; 4] = *b"BOLZ";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 24;

/// Which parser produces the phrase stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParserKind {
    #[default]
    Optimal,
    Greedy,
}

/// Compression parameters. The codes must have container ids, so fixed
/// width is restricted to 32 bits here.
#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub f: IntegerCode,
    pub g: IntegerCode,
    pub literal_bits: u8,
    pub max_distance: Option<usize>,
    pub parser: ParserKind,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            f: IntegerCode::EliasGamma,
            g: IntegerCode::EliasGamma,
            literal_bits: 8,
            max_distance: None,
            parser: ParserKind::Optimal,
        }
    }
}

impl Config {
    pub fn model(&self) -> CostModel {
        CostModel::new(self.f, self.g, self.literal_bits)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub f: IntegerCode,
    pub g: IntegerCode,
    pub literal_bits: u8,
    pub max_distance: u64,
    pub original_len: u64,
}

impl Header {
    fn write(&self, out: &mut Vec<u8>) -> Result<()> {
        out.extend_from_slice(&MAGIC);
        out.push(VERSION);
        out.push(self.f.container_id()?);
        out.push(self.g.container_id()?);
        out.push(self.literal_bits);
        out.extend_from_slice(&self.max_distance.to_le_bytes());
        out.extend_from_slice(&self.original_len.to_le_bytes());
        Ok(())
    }

    fn read(data: &[u8]) -> Result<Header> {
        if data.len() < HEADER_LEN {
            return Err(Error::Truncated);
        }
        if data[0..4] != MAGIC {
            return Err(Error::BadMagic);
        }
        if data[4] != VERSION {
            return Err(Error::UnsupportedVersion(data[4]));
        }
        Ok(Header {
            f: IntegerCode::from_container_id(data[5])?,
            g: IntegerCode::from_container_id(data[6])?,
            literal_bits: data[7],
            max_distance: u64::from_le_bytes(data[8..16].try_into().unwrap()),
            original_len: u64::from_le_bytes(data[16..24].try_into().unwrap()),
        })
    }
}

/// Compresses `text` with the configured parser and codes.
pub fn compress(text: &[u8], config: &Config) -> Result<Vec<u8>> {
    let model = config.model();
    let parsing = match config.parser {
        ParserKind::Optimal => optimal_parse(text, &model, config.max_distance)?,
        ParserKind::Greedy => greedy_parse(text, &model, config.max_distance)?,
    };
    compress_parsing(text, &parsing, config)
}

/// Serializes an existing parsing of `text` (mainly to avoid re-parsing
/// when the caller already has one).
pub fn compress_parsing(text: &[u8], parsing: &Parsing, config: &Config) -> Result<Vec<u8>> {
    if config.literal_bits == 0 || config.literal_bits > 32 {
        return Err(Error::Domain(format!(
            "literal bits must be in 1..=32, got {}",
            config.literal_bits
        )));
    }
    let header = Header {
        f: config.f,
        g: config.g,
        literal_bits: config.literal_bits,
        max_distance: config.max_distance.map_or(0, |w| w as u64),
        original_len: text.len() as u64,
    };
    let mut out = Vec::new();
    header.write(&mut out)?;

    let symbol_bound = (1u64 << config.literal_bits).min(256);
    let mut bits = BitWriter::new();
    for ph in &parsing.phrases {
        match *ph {
            Phrase::Literal(c) => {
                if (c as u64) >= symbol_bound && config.literal_bits < 8 {
                    return Err(Error::Domain(format!(
                        "symbol {c:#x} does not fit in {} literal bits",
                        config.literal_bits
                    )));
                }
                config.f.encode_value(1, &mut bits)?;
                bits.write_bits(c as u64, config.literal_bits as u32);
            }
            Phrase::Copy { dist, len } => {
                config.f.encode_value(dist as u64 + 1, &mut bits)?;
                config.g.encode_value(len as u64, &mut bits)?;
            }
        }
    }
    debug_assert_eq!(bits.bit_len() as u64, parsing.total_bits);
    out.extend_from_slice(&bits.into_bytes());
    Ok(out)
}

/// Inverts `compress`, validating the stream byte for byte.
pub fn decompress(data: &[u8]) -> Result<Vec<u8>> {
    let header = Header::read(data)?;
    let n = header.original_len as usize;
    let payload = &data[HEADER_LEN..];
    let mut r = BitReader::new(payload);
    let mut out: Vec<u8> = Vec::with_capacity(n);
    while out.len() < n {
        let (shifted, _) = header.f.decode_value(&mut r)?;
        let dist = shifted - 1;
        if dist == 0 {
            let c = r.read_bits(header.literal_bits as u32)?;
            if c > 0xff {
                return Err(Error::MalformedCodeword);
            }
            out.push(c as u8);
        } else {
            let (len, _) = header.g.decode_value(&mut r)?;
            if dist > out.len() as u64 {
                return Err(Error::InvalidCopy { dist, produced: out.len() as u64 });
            }
            if out.len() as u64 + len > n as u64 {
                return Err(Error::OutputOverrun { declared: n as u64 });
            }
            let start = out.len() - dist as usize;
            for k in 0..len as usize {
                out.push(out[start + k]);
            }
        }
    }
    // The stream must end exactly where the phrases do: zero padding to the
    // byte boundary, no trailing bytes.
    let used_bytes = r.position().div_ceil(8);
    if payload.len() != used_bytes {
        return Err(Error::TrailingData);
    }
    while r.remaining() > 0 {
        if r.read_bit()? {
            return Err(Error::NonzeroPadding);
        }
    }
    Ok(out)
}
