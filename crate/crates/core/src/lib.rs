//! Path models for root systems: LS paths, Hecke paths and the chain
//! conditions that separate them, root operators, tensor-product
//! decompositions and saturation scans.
//!
//! All arithmetic is exact. Coordinates are rationals over an integer type
//! implementing [`num::Int`]; the aliases below fix it to `i64`, and
//! `BigInt` can be used where coordinates may grow.

#![allow(clippy::needless_range_loop)]

mod cache;
pub mod chains;
pub mod error;
pub mod hecke_search;
pub mod num;
pub mod operators;
pub mod paths;
pub mod predicates;
pub mod root_system;
pub mod saturation;
pub mod tensor;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{CartanType, RootSystem};

/// Exact rational with 64-bit numerator and denominator.
pub type Rational = num_rational::Ratio<i64>;
/// Coweight-basis vector with `i64`-backed rationals.
pub type Vector = num::RationalVector<i64>;
/// Path with `i64`-backed rationals.
pub type Path = paths::PLPath<i64>;
/// Coweight-basis vector with arbitrary-precision rationals.
pub type BigVector = num::RationalVector<num_bigint::BigInt>;
/// Path with arbitrary-precision rationals.
pub type BigPath = paths::PLPath<num_bigint::BigInt>;
