//! Exact combinatorics of Schmidt-type partition counting.
//!
//! The crate has four layers:
//!
//! - [`partition`]: integer partitions as values, with conjugation, the
//!   m-flat/m-distinct/m-regular predicates, vector operations, constrained
//!   enumeration, and the unique flat-regular partition attached to a
//!   residue sequence.
//! - [`stockhofe`]: the weight-preserving bijection between m-flat and
//!   m-regular partitions, its inverse and decomposition, and the colored
//!   reduction that carries Schmidt-counted partitions onto colored
//!   partitions.
//! - [`schmidt`]: the counting statistics (place-weighted sizes, difference
//!   vectors) and exhaustive counting functions for all the partition
//!   families treated here.
//! - [`qseries`]: an exact truncated power-series kernel over `q` with
//!   tracker variables `t`, `t1`, `t2`, Gaussian binomials, the generating
//!   function recurrences and their closed forms, and coefficient-exact
//!   identity checkers.
//!
//! [`verify`] wraps the checkers into structured verdicts for the CLI and
//! the Python bindings.

pub mod partition;
pub mod qseries;
pub mod schmidt;
pub mod stockhofe;
pub mod verify;

pub use partition::{lambda_of_residues, Modulus, Partition, ResidueVector};
pub use schmidt::{DiffVector, SchmidtSpec, WeightVector};
pub use stockhofe::{ColoredPartition, PhiTrace};

use std::fmt;

/// Errors across the crate. Precondition failures carry enough context to
/// name the offending part or index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A modulus below 2 was supplied.
    InvalidModulus(u32),
    /// Parts not weakly decreasing at the given 0-based index.
    NotSorted { index: usize },
    /// A zero or negative part where positive parts are required.
    ZeroPart { index: usize },
    /// A residue entry was 0 mod m (1-based index into the vector).
    InvalidResidue { modulus: u32, index: usize, value: u32 },
    /// Partition is not m-flat; `index` is the 1-based position whose gap
    /// (to the next part, or to 0 after the last part) is >= m.
    NotFlat { modulus: u32, index: usize },
    /// Partition is not m-regular; `index` is the 1-based position of a part
    /// divisible by m.
    NotRegular { modulus: u32, index: usize },
    /// Partition is not m-distinct; `size` repeats m or more times.
    NotDistinct { modulus: u32, size: u32 },
    /// Counted-set spec is invalid (must satisfy 1 in S, S subset of 1..m-1).
    InvalidSpec(String),
    /// Weight vector with a non-positive initial partial sum.
    InvalidWeights { prefix_len: usize },
    /// A colored partition violating the palette or ordering rules.
    InvalidColored(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus(m) => write!(f, "invalid modulus {m}: must be >= 2"),
            Error::NotSorted { index } => {
                write!(f, "parts are not weakly decreasing at index {index}")
            }
            Error::ZeroPart { index } => write!(f, "part at index {index} is not positive"),
            Error::InvalidResidue { modulus, index, value } => write!(
                f,
                "residue vector entry {index} is {value}, not a nonzero residue mod {modulus}"
            ),
            Error::NotFlat { modulus, index } => write!(
                f,
                "partition is not {modulus}-flat: gap at part {index} is >= {modulus}"
            ),
            Error::NotRegular { modulus, index } => write!(
                f,
                "partition is not {modulus}-regular: part {index} is divisible by {modulus}"
            ),
            Error::NotDistinct { modulus, size } => write!(
                f,
                "partition is not {modulus}-distinct: size {size} repeats {modulus} or more times"
            ),
            Error::InvalidSpec(msg) => write!(f, "invalid counted-place spec: {msg}"),
            Error::InvalidWeights { prefix_len } => write!(
                f,
                "weight vector has non-positive partial sum over its first {prefix_len} entries"
            ),
            Error::InvalidColored(msg) => write!(f, "invalid colored partition: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
