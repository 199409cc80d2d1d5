//! Exact constructions and checks for deformed discrete orthogonal
//! polynomial families.
//!
//! Everything is computed over arbitrary-precision rationals: the
//! determinantal polynomial families, their measures, norm laws, difference
//! and differential operators, and the admissibility criteria that decide
//! positivity. Floating point appears only in the high-precision quadrature
//! used for the continuous-weight checks, with explicit error estimates.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line live in the companion `krall` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod bigfloat;
pub mod classical;
pub mod error;
pub mod exc_laguerre;
pub mod exc_meixner;
pub mod krall_hahn;
pub mod krall_meixner;
pub mod matrix;
pub mod measure;
pub mod operator;
pub mod quadrature;
pub mod sturm;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod sets;

pub use error::Error;
pub use poly::Poly;
pub use rat::Rat;
pub use ratfunc::RatFunc;

pub type Result<T> = core::result::Result<T, Error>;
