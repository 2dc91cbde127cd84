use thiserror::Error;

/// Errors produced by the parsing, coding and container layers.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A value fell outside the domain of an operation (zero for a
    /// positive-integer code, out-of-range position, bad parameter).
    #[error("domain error: {0}")]
    Domain(String),

    /// The stream does not start with the container magic bytes.
    #[error("corrupt stream: bad magic")]
    BadMagic,

    /// The container version byte is not one we understand.
    #[error("corrupt stream: unsupported version {0}")]
    UnsupportedVersion(u8),

    /// The header names an integer code we do not know.
    #[error("corrupt stream: unknown code id {0}")]
    UnknownCodeId(u8),

    /// The stream ended in the middle of a header, codeword or literal.
    #[error("corrupt stream: truncated")]
    Truncated,

    /// A codeword decoded to something impossible for its code.
    #[error("corrupt stream: malformed codeword")]
    MalformedCodeword,

    /// A copy phrase reaches back beyond the output produced so far.
    #[error("corrupt stream: copy distance {dist} exceeds produced length {produced}")]
    InvalidCopy { dist: u64, produced: u64 },

    /// Decoded phrases would produce more symbols than the header promised.
    #[error("corrupt stream: output would overrun declared length {declared}")]
    OutputOverrun { declared: u64 },

    /// Bits after the last phrase in the final byte were not zero.
    #[error("corrupt stream: nonzero padding")]
    NonzeroPadding,

    /// The stream holds more bytes than the encoded phrases account for.
    #[error("corrupt stream: trailing data")]
    TrailingData,

    /// A parsing fails its own structural invariants (used by validation
    /// of externally supplied phrase lists).
    #[error("invalid parsing: {0}")]
    InvalidParsing(String),

    /// The forward-star generator was driven out of order.
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
