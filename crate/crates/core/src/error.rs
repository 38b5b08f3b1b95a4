use thiserror::Error;

use crate::blade::Signature;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature ({r},{s}): {reason}")]
    InvalidSignature { r: u32, s: u32, reason: &'static str },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("blade mask {mask:#x} has indices beyond n = {n}")]
    BladeOutOfRange { mask: u64, n: u32 },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("n = {n} exceeds the cap of {cap} for this operation")]
    TooLarge { n: u32, cap: u32 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("bracket [{left}, {right}] leaves the subspace")]
    NotClosed { left: String, right: String },

    #[error("({r},{s}) is outside the proved range r >= 3, s >= 3; pass the extrapolation flag to get the unproven table value")]
    OutsideProvedRange { r: u32, s: u32 },

    #[error("classification failed: {0}")]
    Classification(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
