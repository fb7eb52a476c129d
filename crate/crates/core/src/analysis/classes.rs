// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;
use serde::Serialize;

use super::AnalysisError;
use crate::graph::Graph;
use crate::qsqrt2::QSqrt2;
use crate::spectra::sombor_energy;

pub const DEFAULT_CLASS_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Evidence {
    /// Every member has the same exact energy in Q(√2).
    Exact,
    /// Members agree in floating point only.
    Numerical,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnergyClass {
    /// Indices into the input, ascending.
    pub members: Vec<usize>,
    pub energy: f64,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnergyClasses {
    /// Ordered by energy.
    pub classes: Vec<EnergyClass>,
    /// Per input graph: alone in its class.
    pub unique: Vec<bool>,
    pub energies: Vec<f64>,
}

impl EnergyClasses {
    pub fn non_singleton(&self) -> impl Iterator<Item = &EnergyClass> {
        self.classes.iter().filter(|c| c.members.len() > 1)
    }

    pub fn unique_count(&self) -> usize {
        self.unique.iter().filter(|&&u| u).count()
    }
}

pub fn energy_classes(gs: &[Graph], tol: f64) -> Result<EnergyClasses, AnalysisError> {
    let reports = gs.par_iter().map(sombor_energy).collect::<Result<Vec<_>, _>>()?;
    let (energies, exact): (Vec<f64>, Vec<Option<QSqrt2>>) =
        reports.into_iter().map(|r| (r.energy, r.exact_energy)).unzip();
    energy_classes_from(&energies, &exact, tol)
}

/// Single-linkage grouping of precomputed energies. Neighbours in sorted
/// order link when within `tol`, except that two exact energies link only
/// when equal.
pub fn energy_classes_from(energies: &[f64], exact: &[Option<QSqrt2>], tol: f64) -> Result<EnergyClasses, AnalysisError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AnalysisError::BadTolerance(tol));
    }
    assert_eq!(energies.len(), exact.len(), "one exact slot per energy");
    let mut order: Vec<usize> = (0..energies.len()).collect();
    order.sort_by(|&a, &b| energies[a].total_cmp(&energies[b]).then(a.cmp(&b)));

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        let linked = pos > 0 && {
            let j = order[pos - 1];
            match (&exact[i], &exact[j]) {
                (Some(a), Some(b)) => a == b,
                _ => (energies[i] - energies[j]).abs() <= tol,
            }
        };
        match groups.last_mut() {
            Some(g) if linked => g.push(i),
            _ => groups.push(vec![i]),
        }
    }

    let mut unique = vec![false; energies.len()];
    let classes = groups
        .into_iter()
        .map(|mut members| {
            members.sort_unstable();
            if members.len() == 1 {
                unique[members[0]] = true;
            }
            let first = &exact[members[0]];
            let evidence = if first.is_some() && members.iter().all(|&m| exact[m] == *first) {
                Evidence::Exact
            } else {
                Evidence::Numerical
            };
            let energy = members.iter().map(|&m| energies[m]).sum::<f64>() / members.len() as f64;
            EnergyClass { members, energy, evidence }
        })
        .collect();
    Ok(EnergyClasses { classes, unique, energies: energies.to_vec() })
}
