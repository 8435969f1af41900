use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),

    #[error("invalid root system type: {0}")]
    InvalidType(String),

    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: u32 },

    #[error("root system {label} is not closed under its reflections")]
    NotClosed { label: String },

    #[error("invalid root system {label}: {reason}")]
    InvalidRootSystem { label: String, reason: String },

    #[error("vector is not a root of {label}")]
    NotARoot { label: String },

    #[error("{0} is modelled symbolically and has no matrix realization")]
    Symbolic(String),

    #[error(
        "W({label}) has order {order}, above the element budget of {limit}; \
         E8 brute force needs --force-e8"
    )]
    BudgetExceeded {
        label: String,
        order: u128,
        limit: u128,
    },

    #[error("W({label}) has order {order}; enumeration this large requires --slow")]
    SlowRequired { label: String, order: u128 },

    #[error("key of width {rank}x{bits} bits does not fit the packed element key")]
    KeyTooWide { rank: usize, bits: u32 },

    #[error("internal error: {0}")]
    Internal(String),

    #[error("conjugacy class {class} invariant mismatch: {detail}")]
    ClassInvariant { class: usize, detail: String },

    #[error("quaternion is not a unit: norm {0}")]
    NotUnit(String),

    #[error("negative argument {0}")]
    Negative(i64),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("cache {path}: {kind}")]
    Cache { path: PathBuf, kind: CacheError },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CacheError {
    #[error("not a group cache file (bad magic)")]
    BadMagic,
    #[error("format version {found} is not supported (expected {expected})")]
    VersionMismatch { found: u32, expected: u32 },
    #[error("checksum mismatch")]
    Checksum,
    #[error("truncated or malformed file: {0}")]
    Malformed(String),
    #[error("sampled element {0} is not closed under the generators")]
    SampleClosure(u32),
}
