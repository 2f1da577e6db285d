use thiserror::Error;

/// Errors raised by the algebraic engine.
///
/// Generator indices carried by the variants are zero-based; the `Display`
/// impls print them one-based, matching the document format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus at index {index} must be at least 1 (got {value})")]
    InvalidModulus { index: usize, value: i64 },

    #[error("modulus {0} exceeds the supported bound 2^62")]
    ModulusTooLarge(u128),

    #[error("elements belong to different groups")]
    ParentMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("map is not well defined: generator {} of order {order} is not sent to an element of compatible order", .generator + 1)]
    NotWellDefined { generator: usize, order: u64 },

    #[error("order incompatibility: [g{}, g{}] is not killed by the order of g{}", .i + 1, .j + 1, .killer + 1)]
    OrderIncompatible { i: usize, j: usize, killer: usize },

    #[error("Jacobi identity fails on generators ({}, {}, {})", .i + 1, .j + 1, .k + 1)]
    JacobiFailure { i: usize, j: usize, k: usize },

    #[error("bracket index pair ({}, {}) is invalid for {rank} generators", .i + 1, .j + 1)]
    BracketIndex { i: usize, j: usize, rank: usize },

    #[error("subgroup is not an ideal: [g{}, s] leaves the subgroup", .generator + 1)]
    NotAnIdeal { generator: usize },

    #[error("ideal is not central: [g{}, s] is nonzero", .generator + 1)]
    NotCentral { generator: usize },

    #[error("subgroup is not contained in the given group")]
    NotASubgroup,

    #[error("not a cocycle: condition ({condition}) fails at x={}, y={}, z={}", .witness.0, .witness.1, .witness.2)]
    NotACocycle {
        condition: u8,
        witness: (usize, usize, usize),
    },

    #[error("pointed map must send 0 to 0")]
    NotPointed,

    #[error("{what}: order {order} exceeds the limit {limit}")]
    ResourceLimit {
        what: &'static str,
        order: u128,
        limit: u128,
    },

    #[error("map is not a Lie ring homomorphism: {0}")]
    NotLieHom(String),

    #[error("invalid central extension: {0}")]
    InvalidExtension(String),

    #[error("sequence is not exact: {0}")]
    NotExact(String),

    #[error("rings or coefficient groups do not match")]
    Mismatch,

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
