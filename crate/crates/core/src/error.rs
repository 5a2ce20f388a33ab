//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by field construction, function construction and the
/// spectral operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Field dimension outside the supported range 1..=24.
    #[error("field dimension {0} out of range (supported: 1..=24)")]
    DimensionOutOfRange(usize),
    /// The supplied reduction polynomial factors over GF(2).
    #[error("modulus {modulus:#b} is reducible over GF(2)")]
    ReducibleModulus { modulus: u32 },
    /// The supplied modulus does not have degree n.
    #[error("modulus {modulus:#b} does not have degree {n}")]
    WrongModulusDegree { modulus: u32, n: usize },
    /// Zero has no multiplicative inverse.
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    /// A lookup table had the wrong number of entries.
    #[error("lookup table has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    /// A lookup-table entry does not fit in the output space.
    #[error("entry {entry} at index {index} is not below 2^m = {bound}")]
    EntryOutOfRange { index: usize, entry: u32, bound: u32 },
    /// Component masks must be nonzero.
    #[error("component mask must be nonzero")]
    ZeroMask,
    /// Derivative directions must be nonzero.
    #[error("derivative direction must be nonzero")]
    ZeroDirection,
    /// The requested table or row does not fit under the dimension cap.
    #[error("dimensions n={n}, m={m} exceed the cap {cap} for this operation")]
    TooLarge { n: usize, m: usize, cap: usize },
    /// In-place transforms require power-of-two lengths.
    #[error("length {0} is not a power of two")]
    LengthNotPowerOfTwo(usize),
    /// The function is not a single monomial with a field context.
    #[error("function is not a monomial x^d built over a field context")]
    NotMonomial,
    /// The function is not APN.
    #[error("function is not APN (differential uniformity {0})")]
    NotApn(i64),
    /// Some component function is not plateaued.
    #[error("component v={v} is not plateaued (distinct nonzero Walsh magnitudes)")]
    NotPlateaued { v: u32 },
    /// An affine map that must be a permutation is singular or misshapen.
    #[error("affine map is not an invertible permutation of its space")]
    NotInvertible,
    /// The function is not a permutation.
    #[error("function is not a permutation")]
    NotPermutation,
    /// The lower bound is undefined for this (n, m).
    #[error("bound requires m >= n-1, got n={n}, m={m}")]
    DomainError { n: usize, m: usize },
    /// A quadratic form needs at least one nonzero coefficient.
    #[error("quadratic form has no nonzero coefficient")]
    AllZeroCoefficients,
    /// Family parameters violate the family's constraints.
    #[error("bad parameters: {0}")]
    BadParameters(String),
    /// Catalog index outside the table.
    #[error("catalog index {0} out of range")]
    IndexOutOfRange(usize),
    /// An S-box table file could not be parsed.
    #[error("cannot parse S-box table: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
