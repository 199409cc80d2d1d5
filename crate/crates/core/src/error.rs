//! Error type shared by every module.

use alloc::string::String;
use core::fmt;

/// Failure modes surfaced by constructions and checks.
///
/// Degeneracies carry enough context to name the failing precondition; the
/// CLI maps them to its own exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Determinant of a non-square matrix was requested.
    NonSquare { rows: usize, cols: usize },
    /// A family parameter sits on an excluded lattice (poles of the defining
    /// Gamma quotients, zero denominators in a three-term recurrence, ...).
    DegenerateParameter(String),
    /// A series was summed outside its region of convergence.
    DivergentSum,
    /// A spec cannot be rewritten in the requested canonical form.
    NotRepresentable(String),
    /// A nonzero-value precondition failed at a concrete index.
    Degeneracy(String),
    /// Truncation point does not dominate the denominator behaviour.
    InvalidTruncation(String),
    /// A continuous weight whose denominator vanishes on the half line.
    InvalidWeight(String),
    /// Index outside the degree set of an exceptional family.
    IndexOutsideSigma { n: i64 },
    /// The chosen entry point does not apply to this measure shape.
    WrongEntryPoint(String),
    /// Malformed input spec (unsorted sets, empty support, bad ranges, ...).
    InvalidSpec(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            Error::DegenerateParameter(msg) => write!(f, "degenerate parameter: {msg}"),
            Error::DivergentSum => write!(f, "series diverges: |a| must lie in (0,1)"),
            Error::NotRepresentable(msg) => write!(f, "not representable: {msg}"),
            Error::Degeneracy(msg) => write!(f, "degeneracy: {msg}"),
            Error::InvalidTruncation(msg) => write!(f, "invalid truncation: {msg}"),
            Error::InvalidWeight(msg) => write!(f, "invalid weight: {msg}"),
            Error::IndexOutsideSigma { n } => {
                write!(f, "index {n} lies outside the family's degree set")
            }
            Error::WrongEntryPoint(msg) => write!(f, "wrong entry point: {msg}"),
            Error::InvalidSpec(msg) => write!(f, "invalid spec: {msg}"),
        }
    }
}
