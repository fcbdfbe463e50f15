use thiserror::Error;

/// Errors produced across the library.
///
/// Every variant maps to a stable machine-readable code string (see
/// [`Error::code`]), which the CLI prints on standard error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("reciprocal sum of {degrees:?} is {sum} >= 1")]
    ReciprocalSumTooLarge { degrees: Vec<u32>, sum: String },

    #[error("{n} annuli is inconsistent with kind {kind}: kind I needs even n, kinds II/III odd n")]
    ParityMismatch { kind: &'static str, n: usize },

    #[error("degree vector of length {n} is too short (need n >= 2)")]
    TooShort { n: usize },

    #[error("invalid degree vector: {reason}")]
    InvalidDegrees { reason: String },

    #[error("tau must be positive, got {tau}")]
    NonPositiveTau { tau: f64 },

    #[error("degenerate similarity system: a single map cannot satisfy the Moran equation")]
    DegenerateSystem,

    #[error("bitmask contains no set pixels")]
    EmptyMask,

    #[error("need at least 4 box sizes spanning 2 octaves, got {got}")]
    InsufficientScales { got: usize },

    #[error("partition does not match the combination: {reason}")]
    PartitionMismatch { reason: String },

    #[error("point {x} lies outside [-1, 0]")]
    OutOfRange { x: f64 },

    #[error("bad image dimensions {width}x{height}")]
    BadImageDims { width: u32, height: u32 },

    #[error("evaluation hit a pole near z = {z}")]
    PoleHit { z: String },

    #[error("radii chain violated: {reason} (tau too large for this alpha margin)")]
    ChainViolation { reason: String },

    #[error("simultaneous root iteration failed to converge within {sweeps} sweeps")]
    RootFindingDiverged { sweeps: u32 },

    #[error("sampling grid {radial}x{angular} is below the minimum 64x256")]
    GridTooCoarse { radial: u32, angular: u32 },

    #[error("structure checks did not pass; refusing to compute envelopes")]
    StructureUnverified,

    #[error("branch group {group} has |F'| minimum {min} <= 1; log map is not expanding")]
    NotExpanding { group: usize, min: f64 },

    #[error("alpha margin {alpha} outside (0, 1/2)")]
    BadAlphaMargin { alpha: f64 },

    #[error("malformed PGM: {reason}")]
    MalformedPgm { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable code string for machine consumption.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ReciprocalSumTooLarge { .. } => "ReciprocalSumTooLarge",
            Error::ParityMismatch { .. } => "ParityMismatch",
            Error::TooShort { .. } => "TooShort",
            Error::InvalidDegrees { .. } => "InvalidDegrees",
            Error::NonPositiveTau { .. } => "NonPositiveTau",
            Error::DegenerateSystem => "DegenerateSystem",
            Error::EmptyMask => "EmptyMask",
            Error::InsufficientScales { .. } => "InsufficientScales",
            Error::PartitionMismatch { .. } => "PartitionMismatch",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::BadImageDims { .. } => "BadImageDims",
            Error::PoleHit { .. } => "PoleHit",
            Error::ChainViolation { .. } => "ChainViolation",
            Error::RootFindingDiverged { .. } => "RootFindingDiverged",
            Error::GridTooCoarse { .. } => "GridTooCoarse",
            Error::StructureUnverified => "StructureUnverified",
            Error::NotExpanding { .. } => "NotExpanding",
            Error::BadAlphaMargin { .. } => "BadAlphaMargin",
            Error::MalformedPgm { .. } => "MalformedPgm",
            Error::Io(_) => "Io",
        }
    }

    /// True for errors that reject the input before any computation starts.
    ///
    /// The CLI exits 1 for these and 2 for failures arising mid-computation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::ReciprocalSumTooLarge { .. }
                | Error::ParityMismatch { .. }
                | Error::TooShort { .. }
                | Error::InvalidDegrees { .. }
                | Error::NonPositiveTau { .. }
                | Error::DegenerateSystem
                | Error::EmptyMask
                | Error::InsufficientScales { .. }
                | Error::PartitionMismatch { .. }
                | Error::OutOfRange { .. }
                | Error::BadImageDims { .. }
                | Error::GridTooCoarse { .. }
                | Error::BadAlphaMargin { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
