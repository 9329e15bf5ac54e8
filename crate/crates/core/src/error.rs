//! Error type shared across the crate.

use std::fmt;
use std::io;

/// Errors surfaced by fallible operations.
///
/// Dimension mismatches on in-memory vector/matrix arithmetic are usage
/// errors and panic instead; this type covers data-driven failures: wire
/// decoding, table domains, and the decoder's iteration cap.
#[derive(Debug)]
pub enum Error {
    /// A compact byte stream contained a byte value of 243 or more, or
    /// ended before the expected number of trits was read.
    MalformedEncoding(&'static str),
    /// A key file failed structural validation (magic, version, length).
    MalformedKey(&'static str),
    /// A signature failed structural validation (header, codec, payload).
    /// Distinct from a signature that is well-formed but invalid.
    MalformedSignature(&'static str),
    /// A rejection-table lookup was made outside the table's domain.
    TableDomain { table: &'static str, index: i64 },
    /// A rejection-table file or cache failed to parse or validate.
    TableFormat(String),
    /// The decoder exceeded its iteration cap without finding a solution.
    DecodeFailure,
    /// Parameter lookup failed (unknown name or id).
    UnknownParamSet,
    /// Underlying I/O failure, kept distinct from verification results.
    Io(io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedEncoding(m) => write!(f, "malformed compact encoding: {m}"),
            Error::MalformedKey(m) => write!(f, "malformed key: {m}"),
            Error::MalformedSignature(m) => write!(f, "malformed signature: {m}"),
            Error::TableDomain { table, index } => {
                write!(f, "index {index} outside the domain of table {table}")
            }
            Error::TableFormat(m) => write!(f, "bad rejection-table data: {m}"),
            Error::DecodeFailure => write!(f, "decoder exceeded its iteration cap"),
            Error::UnknownParamSet => write!(f, "unknown parameter set"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(e: io::Error) -> Self {
        Error::Io(e)
    }
}
