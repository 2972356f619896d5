use alloc::string::String;
use core::fmt;

/// Failure modes of the exact computations in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A rational function with a pole at `t = 0` was asked for a Taylor expansion.
    PoleAtOrigin,
    /// Padé recognition found no rational function within the degree bounds.
    NotRational,
    /// The series is too short for the requested degree bounds.
    InsufficientOrder { needed: usize, available: usize },
    /// Every input of an ideal computation was zero.
    ZeroIdeal,
    /// Division by an exact zero.
    DivisionByZero,
    /// `q` must be a positive rational.
    InvalidQ,
    /// A coweight was required to be dominant.
    NotDominant,
    /// A coweight or matrix had the wrong length for the group.
    RankMismatch { expected: usize, found: usize },
    /// Group or realization outside what is supported.
    Unsupported(String),
    /// A character had negative multiplicities where a genuine one was required.
    VirtualCharacter,
    /// The grading is not strictly positive on every weight.
    GradingNotPositive,
    /// A Satake parameter or semisimple element had a zero entry.
    SingularSemisimple,
    /// The nilpotent part does not satisfy `Ad(s) e = q^{-1} e`.
    IncompatibleParameter,
    /// A cone search bound was too small to certify completeness.
    BoundTooSmall,
    /// A toric datum had the wrong degeneracy for the requested operation.
    Degeneracy(&'static str),
    /// An enumeration exceeded its resource bound.
    ResourceBound,
    /// A defining relation failed to hold exactly.
    RelationViolated(&'static str),
    /// Any other invalid argument.
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PoleAtOrigin => f.write_str("pole at origin"),
            Error::NotRational => f.write_str("not rational within bounds"),
            Error::InsufficientOrder { needed, available } => write!(
                f,
                "insufficient order: need truncation order {needed}, have {available}"
            ),
            Error::ZeroIdeal => f.write_str("zero ideal"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::InvalidQ => f.write_str("q must be a positive rational"),
            Error::NotDominant => f.write_str("coweight is not dominant"),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::VirtualCharacter => f.write_str("virtual character where a genuine one is required"),
            Error::GradingNotPositive => f.write_str("grading not positive"),
            Error::SingularSemisimple => f.write_str("singular semisimple part"),
            Error::IncompatibleParameter => {
                f.write_str("nilpotent part incompatible with semisimple part")
            }
            Error::BoundTooSmall => f.write_str("bound too small"),
            Error::Degeneracy(what) => write!(f, "degeneracy: {what}"),
            Error::ResourceBound => f.write_str("resource bound exceeded"),
            Error::RelationViolated(which) => write!(f, "relation violated: {which}"),
            Error::InvalidInput(what) => write!(f, "invalid input: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
