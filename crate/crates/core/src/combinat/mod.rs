// SPDX-License-Identifier: Apache-2.0

//! Permanents of 0/1 matrices, canonical certificates, and exhaustive
//! generation of small graphs up to isomorphism.

mod canon;
mod generate;
mod permanent;

use thiserror::Error;

pub use canon::{canonical_cert, canonical_form, CanonicalForm, CANON_MAX_ORDER};
pub use generate::{generate_all, generate_k_regular, Enumeration, ALL_GRAPHS_MAX_ORDER, REGULAR_MAX_ORDER};
pub use permanent::{ryser_permanent, PERMANENT_MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatError {
    #[error("{what} is limited to order {cap}, got {n}")]
    TooLarge { what: &'static str, n: usize, cap: usize },
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("matrix entry ({row}, {col}) is {value}, expected 0 or 1")]
    NotBinary { row: usize, col: usize, value: u8 },
    #[error("k-regular graphs on n vertices need k < n (k = {k}, n = {n})")]
    DegreeTooLarge { n: usize, k: usize },
}
