//! Bit-level I/O, MSB-first within each byte.
//!
//! All codeword layouts in this crate are defined in terms of these two
//! cursors: the first bit written lands in the most significant bit of the
//! first byte, and the reader consumes bits in the same order.

use crate::error::{Error, Result};

/// Accumulates bits into a byte buffer, most significant bit first.
#[derive(Debug, Default, Clone)]
pub struct BitWriter {
    buf: Vec<u8>,
    /// Total number of bits written so far.
    len: usize,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_bit(&mut self, bit: bool) {
        let off = self.len % 8;
        if off == 0 {
            self.buf.push(0);
        }
        if bit {
            *self.buf.last_mut().unwrap() |= 1 << (7 - off);
        }
        self.len += 1;
    }

    /// Writes the `width` low bits of `value`, most significant first.
    pub fn write_bits(&mut self, value: u64, width: u32) {
        debug_assert!(width <= 64);
        debug_assert!(width == 64 || value < (1u64 << width));
        for k in (0..width).rev() {
            self.push_bit((value >> k) & 1 == 1);
        }
    }

    /// Number of bits written so far.
    pub fn bit_len(&self) -> usize {
        self.len
    }

    /// Finishes the stream; the final partial byte is zero-padded.
    pub fn into_bytes(self) -> Vec<u8> {
        self.buf
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.buf
    }
}

/// Reads bits from a byte slice, most significant bit first.
#[derive(Debug, Clone)]
pub struct BitReader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    pub fn new(data: &'a [u8]) -> Self {
        Self { data, pos: 0 }
    }

    /// Bits consumed so far.
    pub fn position(&self) -> usize {
        self.pos
    }

    /// Bits left in the underlying slice (including any padding).
    pub fn remaining(&self) -> usize {
        self.data.len() * 8 - self.pos
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        let byte = self.pos / 8;
        if byte >= self.data.len() {
            return Err(Error::Truncated);
        }
        let off = self.pos % 8;
        self.pos += 1;
        Ok((self.data[byte] >> (7 - off)) & 1 == 1)
    }

    pub fn read_bits(&mut self, width: u32) -> Result<u64> {
        debug_assert!(width <= 64);
        let mut v = 0u64;
        for _ in 0..width {
            v = (v << 1) | self.read_bit()? as u64;
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bit_string(w: &BitWriter) -> String {
        let mut s = String::new();
        let mut r = BitReader::new(w.as_bytes());
        for _ in 0..w.bit_len() {
            s.push(if r.read_bit().unwrap() { '1' } else { '0' });
        }
        s
    }

    #[test]
    fn test_msb_first_layout() {
        let mut w = BitWriter::new();
        w.push_bit(true);
        w.write_bits(0b0101, 4);
        assert_eq!(w.bit_len(), 5);
        // 10101 then zero padding -> 0b1010_1000
        assert_eq!(w.as_bytes(), &[0b1010_1000]);
        assert_eq!(bit_string(&w), "10101");
    }

    #[test]
    fn test_cross_byte_write() {
        let mut w = BitWriter::new();
        w.write_bits(0b1_1111_0000, 9);
        w.write_bits(0b101, 3);
        assert_eq!(w.as_bytes(), &[0b1111_1000, 0b0101_0000]);
    }

    #[test]
    fn test_reader_truncation() {
        let mut r = BitReader::new(&[0xff]);
        assert_eq!(r.read_bits(8).unwrap(), 0xff);
        assert_eq!(r.read_bit(), Err(Error::Truncated));
    }

    #[test]
    fn test_roundtrip_values() {
        let mut w = BitWriter::new();
        let vals = [(0u64, 1u32), (1, 1), (5, 3), (1234, 11), (u64::MAX, 64), (0, 7)];
        for &(v, width) in &vals {
            w.write_bits(v, width);
        }
        let bytes = w.into_bytes();
        let mut r = BitReader::new(&bytes);
        for &(v, width) in &vals {
            assert_eq!(r.read_bits(width).unwrap(), v);
        }
    }
}
