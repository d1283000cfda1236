//! A workbench for secret sharing schemes built from linear codes.
//!
//! The pipeline goes: exact arithmetic in small finite fields
//! ([`galois`]), dense linear algebra over those fields ([`matfield`]),
//! linear codes and their minimal-support codewords ([`codes`]),
//! monotone access structures and their composition ([`access`]),
//! vector space constructions including the sum-normalization rescaling
//! of parity-check columns ([`construction`]), and finally dealing,
//! reconstructing and auditing shares ([`scheme`]).
//!
//! Everything is sized for exhaustive verification: fields are capped at
//! 2^20 elements, codeword enumerations at 2^20 words, and subset scans
//! at 20 participants. Within those caps every claim the crate makes is
//! checked by brute force in [`corpus`].

pub mod access;
pub mod codes;
pub mod construction;
pub mod corpus;
pub mod galois;
pub mod matfield;
pub mod scheme;

use thiserror::Error;

/// Crate-wide error type. Every variant names the violated precondition
/// so the CLI can report it verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("characteristic {0} exceeds the trial-division cap 2^16")]
    CharacteristicTooLarge(u64),
    #[error("field size {0} exceeds the cap 2^20")]
    FieldTooLarge(u64),
    #[error("coefficient {value} is not reduced modulo {p}")]
    CoefficientRange { value: u64, p: u64 },
    #[error("encoding {enc} is outside the field of size {size}")]
    EncodingRange { enc: u64, size: u64 },
    #[error("modulus must be monic of length degree + 1")]
    MalformedModulus,
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("division or inversion of zero")]
    DivisionByZero,
    #[error("no embedding: target degree must be a multiple of the source degree over the same characteristic")]
    NoEmbedding,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("generator matrix is rank-deficient")]
    RankDeficient,
    #[error("enumeration of {needed} items exceeds the bound {bound}")]
    EnumerationBound { needed: u64, bound: u64 },
    #[error("subset scan over {n} participants exceeds the bound of {bound}")]
    ScanBound { n: usize, bound: usize },
    #[error("support family must be nonempty")]
    EmptyFamily,
    #[error("support sets must be nonempty")]
    EmptySet,
    #[error("participant index {index} is outside 1..={n}")]
    ParticipantRange { index: usize, n: usize },
    #[error("threshold {t} is outside 1..={n}")]
    ThresholdRange { t: usize, n: usize },
    #[error("stored minimal family is not the antichain of its closure")]
    NotAntichain,
    #[error("block arity mismatch: {0}")]
    BlockMismatch(String),
    #[error("dual code of a full [n,n] code has dimension zero")]
    ZeroDualCode,
    #[error("evaluation points must be distinct")]
    RepeatedPoint,
    #[error("evaluation points must be nonzero")]
    ZeroPoint,
    #[error("code length {n} exceeds the {q} - 1 = {max} nonzero field elements")]
    LengthExceedsField { n: usize, q: u64, max: u64 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("all fields must share one characteristic")]
    CharacteristicMismatch,
    #[error("set {0} is not qualified")]
    UnqualifiedSet(String),
    #[error("share for participant {0} is missing")]
    MissingShare(usize),
    #[error("shares are inconsistent: no dealer vector produces them")]
    InconsistentShares,
    #[error("share file digest {got} does not match the construction digest {want}")]
    DigestMismatch { got: String, want: String },
}

pub type Result<T> = std::result::Result<T, Error>;
