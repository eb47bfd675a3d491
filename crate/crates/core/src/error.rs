//! Error type shared across the toolkit.

use std::fmt;
use std::io;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug)]
pub enum Error {
    /// Grid dimensions incompatible with the requested operation.
    DimensionMismatch { context: &'static str, expected: (usize, usize), found: (usize, usize) },
    /// A grid contained a NaN or infinite entry.
    NonFinite { context: &'static str },
    /// A measurement contained a negative entry.
    NegativeIntensity { context: &'static str },
    /// The image has no entry above the support threshold.
    EmptySupport,
    /// A translation would move nonzero content outside the frame.
    TranslationOutOfBounds { t1: isize, t2: isize },
    /// The DC Fourier coefficient is too small for phase transfer.
    VanishingDc { magnitude: f64, tolerance: f64 },
    /// A phase-matrix entry is not unit modulus.
    NotUnitModulus { index: (usize, usize), modulus: f64 },
    /// The measurement handed to the solver is identically zero.
    ZeroMeasurement,
    /// Invalid configuration value.
    InvalidConfig(String),
    /// Training loss became non-finite.
    Divergence { epoch: usize },
    /// Container file does not start with the expected magic bytes.
    BadMagic,
    /// Container version is not supported.
    BadVersion { found: u16 },
    /// Container file ends before the header is complete.
    TruncatedHeader { length: usize },
    /// Container file ends inside the record with this index.
    TruncatedRecord { index: usize },
    /// Container file has bytes past the last record.
    TrailingData { extra: usize },
    /// Records handed to the writer do not share one shape.
    InhomogeneousRecords { index: usize },
    Io(io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { context, expected, found } => write!(
                f,
                "{context}: dimension mismatch, expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::NonFinite { context } => write!(f, "{context}: non-finite entry"),
            Error::NegativeIntensity { context } => write!(f, "{context}: negative intensity"),
            Error::EmptySupport => write!(f, "image has empty support"),
            Error::TranslationOutOfBounds { t1, t2 } => {
                write!(f, "translation ({t1}, {t2}) moves support outside the frame")
            }
            Error::VanishingDc { magnitude, tolerance } => write!(
                f,
                "DC Fourier coefficient {magnitude:e} below tolerance {tolerance:e}; phase transfer undefined"
            ),
            Error::NotUnitModulus { index, modulus } => {
                write!(f, "phase matrix entry ({}, {}) has modulus {modulus}", index.0, index.1)
            }
            Error::ZeroMeasurement => write!(f, "measurement is identically zero"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::Divergence { epoch } => write!(f, "training diverged at epoch {epoch}"),
            Error::BadMagic => write!(f, "bad container magic"),
            Error::BadVersion { found } => write!(f, "unsupported container version {found}"),
            Error::TruncatedHeader { length } => {
                write!(f, "container truncated inside header ({length} bytes)")
            }
            Error::TruncatedRecord { index } => {
                write!(f, "container truncated inside record {index}")
            }
            Error::TrailingData { extra } => {
                write!(f, "container has {extra} trailing bytes after the last record")
            }
            Error::InhomogeneousRecords { index } => {
                write!(f, "record {index} does not match the dataset dimensions")
            }
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
