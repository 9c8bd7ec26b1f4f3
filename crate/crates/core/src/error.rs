use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input that does not describe a valid object (negative orders,
    /// non-canonical torsion lists, mismatched matrix shapes, ...).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// An explicit enumeration was requested beyond its hard size caps.
    #[error("capacity exceeded: {what} = {value} exceeds the limit {limit}")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    /// The nilpotency class must be at least 1.
    #[error("nilpotency class must be >= 1, got {0}")]
    InvalidClass(u32),

    /// Higher Ext/Tor are only defined here for degree >= 2.
    #[error("degree must be >= 2 for higher Ext/Tor, got {0}")]
    InvalidDegree(u32),

    /// The Mobius function is only defined on positive integers.
    #[error("mobius function is undefined at 0")]
    MobiusDomain,

    /// Cyclic factors of a free product are not pairwise coprime.
    #[error("free factors Z{0} and Z{1} are not coprime")]
    NotCoprime(String, String),

    /// A closed form disagreed with its independent evaluation, or a
    /// predicted (non-)isomorphism did not hold.
    #[error("verification failed: {0}")]
    Verification(String),

    /// The operation is outside what this library can compute.
    #[error("out of scope: {0}")]
    Scope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
