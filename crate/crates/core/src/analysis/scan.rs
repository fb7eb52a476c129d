// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;
use serde::Serialize;

use super::AnalysisError;
use crate::combinat::{canonical_cert, CANON_MAX_ORDER};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::spectra::sombor_energy;

pub const DEFAULT_SCAN_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Exact energy is an integer.
    ExactInteger,
    /// Exact energy is known and is not an integer.
    ExactNonInteger,
    /// No exact form; only the floating-point gap is known.
    Numerical,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanHit {
    /// Canonical certificate when the order allows one, else the input graph6.
    pub key: String,
    pub graph6: String,
    pub energy: f64,
    pub exact_energy: Option<String>,
    pub nearest_integer: i64,
    pub gap: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub tol: f64,
    pub scanned: usize,
    /// Edgeless graphs have energy 0 and are left out of the scan.
    pub skipped_edgeless: usize,
    /// Sorted by key.
    pub hits: Vec<ScanHit>,
}

/// Reports every graph with at least one edge whose Sombor energy lies within
/// `tol` of an integer. Regular graphs with integral adjacency spectrum carry
/// an exact energy, which settles the question for them.
pub fn integer_energy_search(family: &[Graph], tol: f64) -> Result<ScanReport, AnalysisError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AnalysisError::BadTolerance(tol));
    }
    let skipped_edgeless = family.iter().filter(|g| g.edge_count() == 0).count();
    let mut hits: Vec<ScanHit> = family
        .par_iter()
        .filter(|g| g.edge_count() > 0)
        .map(|g| -> Result<Option<ScanHit>, AnalysisError> {
            let report = sombor_energy(g)?;
            let nearest = report.energy.round();
            let gap = (report.energy - nearest).abs();
            if gap > tol {
                return Ok(None);
            }
            let verdict = match &report.exact_energy {
                Some(e) if e.is_rational() && e.is_integral() => Verdict::ExactInteger,
                Some(_) => Verdict::ExactNonInteger,
                None => Verdict::Numerical,
            };
            let graph6 = to_graph6(g);
            let key = if g.order() <= CANON_MAX_ORDER { canonical_cert(g)?.into_string() } else { graph6.clone() };
            Ok(Some(ScanHit {
                key,
                graph6,
                energy: report.energy,
                exact_energy: report.exact_energy.map(|e| e.to_string()),
                nearest_integer: nearest as i64,
                gap,
                verdict,
            }))
        })
        .filter_map(Result::transpose)
        .collect::<Result<_, _>>()?;
    hits.sort_by(|a, b| a.key.cmp(&b.key).then(a.graph6.cmp(&b.graph6)));
    Ok(ScanReport { tol, scanned: family.len() - skipped_edgeless, skipped_edgeless, hits })
}
