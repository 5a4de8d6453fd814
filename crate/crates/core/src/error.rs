use thiserror::Error;

/// Errors raised by the symbolic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unsupported substitution: {0}")]
    UnsupportedSubstitution(String),
    #[error("divergent limit: term `{0}` keeps a negative power")]
    DivergentLimit(String),
    #[error("presentation mismatch: {0}")]
    Mismatch(String),
    #[error("exponent {exponent} exceeds cap {cap}")]
    ExponentOverflow { exponent: u32, cap: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unsupported spectrum: {0}")]
    UnsupportedSpectrum(String),
    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),
    #[error("degenerate pairing: {0}")]
    DegeneratePairing(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
