// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Deserialize;

use super::AnalysisError;
use crate::charpoly::charpoly_generic;
use crate::combinat::{canonical_cert, ryser_permanent, CanonicalForm};
use crate::graph::Graph;
use crate::poly::Poly;
use crate::qsqrt2::QSqrt2;
use crate::sombor::sombor_matrix;
use crate::spectra::sombor_energy;

/// Published energies carry three decimals.
pub const TABLE_ENERGY_TOL: f64 = 5e-4;

const CUBIC10: &str = include_str!("../../fixtures/cubic10.json");

/// One transcribed table row: polynomial terms `[power, rational, sqrt2]`,
/// the printed energy, and the printed permanent where one is given.
#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub label: String,
    pub coeffs: Vec<(usize, i64, i64)>,
    pub energy: f64,
    #[serde(default)]
    pub permanent: Option<u64>,
}

impl Fixture {
    pub fn poly(&self) -> Poly<QSqrt2> {
        let deg = self.coeffs.iter().map(|c| c.0).max().unwrap_or(0);
        let mut out = vec![QSqrt2::zero(); deg + 1];
        for &(p, a, b) in &self.coeffs {
            out[p] += &QSqrt2::from_integers(a, b);
        }
        Poly::new(out)
    }
}

pub fn parse_fixtures(json: &str) -> Result<Vec<Fixture>, AnalysisError> {
    serde_json::from_str(json).map_err(|e| AnalysisError::Fixture(e.to_string()))
}

/// The embedded cubic order-10 tables.
pub fn cubic10_fixtures() -> Vec<Fixture> {
    parse_fixtures(CUBIC10).expect("embedded fixtures parse")
}

#[derive(Debug, Clone)]
pub struct CoeffDelta {
    pub power: usize,
    pub computed: QSqrt2,
    pub fixture: QSqrt2,
    /// `computed − fixture`.
    pub delta: QSqrt2,
}

#[derive(Debug, Clone)]
pub struct CorpusMatch {
    pub graph: Graph,
    pub cert: CanonicalForm,
    pub poly: Poly<QSqrt2>,
    /// Label of the fixture whose polynomial equals ours, if any.
    pub label: Option<String>,
    /// Closest fixture; equals `label` when the match is exact.
    pub nearest: String,
    pub poly_delta: Vec<CoeffDelta>,
    pub energy: f64,
    pub exact_energy: Option<QSqrt2>,
    pub table_energy: f64,
    pub energy_delta: f64,
}

impl CorpusMatch {
    pub fn is_exact(&self) -> bool {
        self.label.is_some()
    }
}

#[derive(Debug, Clone)]
pub struct CorpusReport {
    /// In fixture order; unmatched graphs follow, ordered by certificate.
    pub matches: Vec<CorpusMatch>,
    pub exact_rows: usize,
    /// Fixtures that no generated graph matched or came nearest to.
    pub orphan_fixtures: Vec<String>,
}

/// Compares each graph's exact Sombor characteristic polynomial with every
/// fixture. Exact matches claim their fixture; each remaining graph is paired
/// with the unclaimed fixture differing in the fewest coefficients.
pub fn match_corpus(generated: &[Graph], fixtures: &[Fixture]) -> Result<CorpusReport, AnalysisError> {
    let fixture_polys: Vec<Poly<QSqrt2>> = fixtures.iter().map(Fixture::poly).collect();
    for i in 0..fixtures.len() {
        for j in 0..i {
            if fixture_polys[i] == fixture_polys[j] {
                return Err(AnalysisError::Ambiguous(format!(
                    "fixtures {} and {} have the same polynomial",
                    fixtures[j].label, fixtures[i].label
                )));
            }
        }
    }

    struct Computed {
        graph: Graph,
        cert: CanonicalForm,
        poly: Poly<QSqrt2>,
        energy: f64,
        exact_energy: Option<QSqrt2>,
    }
    let computed: Vec<Computed> = generated
        .par_iter()
        .map(|g| -> Result<Computed, AnalysisError> {
            let poly = charpoly_generic(&sombor_matrix(g))
                .poly
                .as_exact()
                .cloned()
                .ok_or_else(|| AnalysisError::Fixture("corpus graphs must have an exact Sombor matrix".into()))?;
            let report = sombor_energy(g)?;
            Ok(Computed {
                graph: g.clone(),
                cert: canonical_cert(g)?,
                poly,
                energy: report.energy,
                exact_energy: report.exact_energy,
            })
        })
        .collect::<Result<_, _>>()?;

    let mut owner: Vec<Option<usize>> = vec![None; fixtures.len()];
    let mut assigned: Vec<Option<usize>> = vec![None; computed.len()];
    for (gi, c) in computed.iter().enumerate() {
        if let Some(fi) = fixture_polys.iter().position(|p| *p == c.poly) {
            if let Some(other) = owner[fi] {
                return Err(AnalysisError::Ambiguous(format!(
                    "{} matches graphs {} and {}",
                    fixtures[fi].label, computed[other].cert, c.cert
                )));
            }
            owner[fi] = Some(gi);
            assigned[gi] = Some(fi);
        }
    }
    let exact_rows = assigned.iter().flatten().count();

    let mut order: Vec<usize> = (0..computed.len()).filter(|&gi| assigned[gi].is_none()).collect();
    order.sort_by(|&a, &b| computed[a].cert.cmp(&computed[b].cert));
    let mut nearest: Vec<Option<usize>> = assigned.clone();
    for gi in order {
        let free: Vec<usize> = (0..fixtures.len()).filter(|&fi| owner[fi].is_none()).collect();
        let pool = if free.is_empty() { (0..fixtures.len()).collect() } else { free };
        let best = pool.into_iter().min_by(|&a, &b| {
            let ka = distance(&computed[gi].poly, &fixture_polys[a]);
            let kb = distance(&computed[gi].poly, &fixture_polys[b]);
            ka.0.cmp(&kb.0).then(ka.1.total_cmp(&kb.1)).then(a.cmp(&b))
        });
        if let Some(fi) = best {
            if owner[fi].is_none() {
                owner[fi] = Some(gi);
            }
            nearest[gi] = Some(fi);
        }
    }

    let mut matches: Vec<(usize, CorpusMatch)> = computed
        .into_iter()
        .zip(nearest)
        .zip(assigned)
        .map(|((c, near), exact)| {
            let fi = near.expect("fixtures are non-empty");
            let f = &fixtures[fi];
            let poly_delta = deltas(&c.poly, &fixture_polys[fi]);
            let m = CorpusMatch {
                label: exact.map(|_| f.label.clone()),
                nearest: f.label.clone(),
                poly_delta,
                table_energy: f.energy,
                energy_delta: (c.energy - f.energy).abs(),
                graph: c.graph,
                cert: c.cert,
                poly: c.poly,
                energy: c.energy,
                exact_energy: c.exact_energy,
            };
            (fi, m)
        })
        .collect();
    matches.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cert.cmp(&b.1.cert)));
    let orphan_fixtures = (0..fixtures.len())
        .filter(|&fi| owner[fi].is_none())
        .map(|fi| fixtures[fi].label.clone())
        .collect();
    Ok(CorpusReport { matches: matches.into_iter().map(|(_, m)| m).collect(), exact_rows, orphan_fixtures })
}

fn deltas(p: &Poly<QSqrt2>, q: &Poly<QSqrt2>) -> Vec<CoeffDelta> {
    let len = p.coeffs().len().max(q.coeffs().len());
    (0..len)
        .rev()
        .filter_map(|k| {
            let (a, b) = (p.coeff(k), q.coeff(k));
            (a != b).then(|| CoeffDelta { power: k, delta: &a - &b, computed: a, fixture: b })
        })
        .collect()
}

/// Number of differing coefficients, then total absolute difference.
fn distance(p: &Poly<QSqrt2>, q: &Poly<QSqrt2>) -> (usize, f64) {
    let d = deltas(p, q);
    (d.len(), d.iter().map(|c| c.delta.to_f64().abs()).sum())
}

#[derive(Debug, Clone)]
pub struct PermanentRow {
    pub label: String,
    pub cert: CanonicalForm,
    pub permanent: BigInt,
    /// The value printed alongside the fixture, if any.
    pub claimed: Option<u64>,
}

impl PermanentRow {
    pub fn agrees(&self) -> Option<bool> {
        self.claimed.map(|c| self.permanent == BigInt::from(c))
    }
}

/// Permanents of the unweighted adjacency matrices of a matched corpus.
pub fn permanent_report(report: &CorpusReport, fixtures: &[Fixture]) -> Result<Vec<PermanentRow>, AnalysisError> {
    report
        .matches
        .iter()
        .map(|m| {
            let permanent = ryser_permanent(&m.graph.adjacency_matrix())?;
            let claimed = fixtures.iter().find(|f| f.label == m.nearest).and_then(|f| f.permanent);
            Ok(PermanentRow { label: m.nearest.clone(), cert: m.cert.clone(), permanent, claimed })
        })
        .collect()
}
