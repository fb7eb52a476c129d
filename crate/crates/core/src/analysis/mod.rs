// SPDX-License-Identifier: Apache-2.0

//! Reconciliation of computed spectra against published tables, energy
//! equivalence classes, permanent cross-checks and the integer-energy scan.

mod classes;
mod corpus;
mod scan;

use thiserror::Error;

use crate::combinat::CombinatError;
use crate::spectra::SpectraError;

pub use classes::{energy_classes, energy_classes_from, EnergyClass, EnergyClasses, Evidence, DEFAULT_CLASS_TOL};
pub use corpus::{
    cubic10_fixtures, match_corpus, parse_fixtures, permanent_report, CoeffDelta, CorpusMatch, CorpusReport, Fixture,
    PermanentRow, TABLE_ENERGY_TOL,
};
pub use scan::{integer_energy_search, ScanHit, ScanReport, Verdict, DEFAULT_SCAN_TOL};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("fixture data: {0}")]
    Fixture(String),
    #[error("ambiguous corpus match: {0}")]
    Ambiguous(String),
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}
