//! Computational machinery for iterated wreath products of symmetric and
//! alternating groups: permutations with cycle notation, deterministic
//! Schreier-Sims stabilizer chains, Kaloujnine-style tableaux (one vertex
//! permutation per tree vertex), wreath products as permutation groups on
//! the leaves, and a catalog of named normal subgroups with verification
//! reports.
//!
//! The crate is `no_std` + `alloc`; everything that touches IO lives in the
//! companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod group;
pub mod perm;
pub mod report;
pub mod rng;
pub mod tableau;
pub mod wreath;

use alloc::string::String;
use core::fmt;

pub use group::Group;
pub use perm::Perm;
pub use tableau::{Tableau, WreathSpec};

/// Errors shared across the crate. Messages are stable: the CLI and the
/// tests match on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two permutations (or a tableau entry and its slot) act on different
    /// numbers of points.
    DegreeMismatch { left: usize, right: usize },
    /// An images vector did not describe a bijection.
    NotBijective,
    /// Cycle-notation or tableau-literal syntax error.
    Parse(String),
    /// A spec descriptor or family parameter is out of range.
    BadParameter(String),
    /// The classify flags for depth-2 types were requested on a spec of a
    /// different depth.
    WrongSpecDepth { expected: usize, got: usize },
    /// A leaf permutation does not respect the block structure of the spec.
    NotBlockStructured,
    /// An operation would enumerate more elements than the configured limit.
    EnumerationLimitExceeded { limit: u64 },
    /// The number of leaves exceeds the configured leaf limit.
    LeafLimitExceeded { leaves: u64, limit: u64 },
    /// A normal-closure seed lies outside the ambient group.
    SeedOutsideAmbient,
    /// An operation that requires a subgroup relation was handed a
    /// non-subgroup.
    NotASubgroup,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch ({left} vs {right})")
            }
            Error::NotBijective => write!(f, "images do not form a bijection"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::BadParameter(msg) => write!(f, "parameter out of range: {msg}"),
            Error::WrongSpecDepth { expected, got } => {
                write!(f, "wrong spec depth (need {expected}, got {got})")
            }
            Error::NotBlockStructured => write!(f, "not block-structured"),
            Error::EnumerationLimitExceeded { limit } => {
                write!(f, "enumeration limit exceeded (limit {limit})")
            }
            Error::LeafLimitExceeded { leaves, limit } => {
                write!(f, "leaf count {leaves} exceeds leaf limit {limit}")
            }
            Error::SeedOutsideAmbient => write!(f, "seed outside ambient group"),
            Error::NotASubgroup => write!(f, "not a subgroup of the ambient group"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
