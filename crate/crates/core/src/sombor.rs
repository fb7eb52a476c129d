// SPDX-License-Identifier: Apache-2.0

//! Sombor edge weights `√(d_i² + d_j²)`, the Sombor matrix, and the
//! Sombor and forgotten indices.

use num_integer::Roots;
use serde::Serialize;

use crate::graph::Graph;
use crate::qsqrt2::QSqrt2;

/// How the weight `√squared` is represented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightKind {
    /// `squared = k²`, weight `k`.
    Rational(u64),
    /// `squared = 2k²`, weight `k√2`.
    Sqrt2Multiple(u64),
    /// Neither; only the float value is available.
    Irrational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SomborWeight {
    pub squared: u64,
    pub kind: WeightKind,
}

impl SomborWeight {
    pub fn is_exact(&self) -> bool {
        self.kind != WeightKind::Irrational
    }

    pub fn exact(&self) -> Option<QSqrt2> {
        match self.kind {
            WeightKind::Rational(k) => Some(QSqrt2::integer(k as i64)),
            WeightKind::Sqrt2Multiple(k) => Some(QSqrt2::sqrt2_times(k as i64)),
            WeightKind::Irrational => None,
        }
    }

    pub fn value(&self) -> f64 {
        match self.kind {
            WeightKind::Rational(k) => k as f64,
            WeightKind::Sqrt2Multiple(k) => k as f64 * std::f64::consts::SQRT_2,
            WeightKind::Irrational => (self.squared as f64).sqrt(),
        }
    }
}

/// Weight of an edge between vertices of degrees `di` and `dj`.
pub fn sombor_weight(di: usize, dj: usize) -> SomborWeight {
    let squared = (di * di + dj * dj) as u64;
    let kind = if let Some(k) = exact_sqrt(squared) {
        WeightKind::Rational(k)
    } else if squared % 2 == 0 {
        exact_sqrt(squared / 2).map_or(WeightKind::Irrational, WeightKind::Sqrt2Multiple)
    } else {
        WeightKind::Irrational
    };
    SomborWeight { squared, kind }
}

fn exact_sqrt(x: u64) -> Option<u64> {
    let r = x.sqrt();
    (r * r == x).then_some(r)
}

/// Symmetric Sombor matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SomborMatrix {
    n: usize,
    entries: Vec<Option<SomborWeight>>,
    all_exact: bool,
}

impl SomborMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<SomborWeight> {
        self.entries[i * self.n + j]
    }

    /// True iff every edge weight lies in Q(√2).
    pub fn all_exact(&self) -> bool {
        self.all_exact
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).map_or(0.0, |w| w.value())).collect())
            .collect()
    }

    /// Exact entries, or `None` when some weight is irrational over Q(√2).
    pub fn to_exact(&self) -> Option<Vec<Vec<QSqrt2>>> {
        if !self.all_exact {
            return None;
        }
        Some(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self.entry(i, j).and_then(|w| w.exact()).unwrap_or_default()).collect())
                .collect(),
        )
    }

    /// `trace(A²) = Σ_{ij} a_ij²`, exact.
    pub fn trace_of_square(&self) -> u128 {
        self.entries.iter().flatten().map(|w| u128::from(w.squared)).sum()
    }

    pub fn to_json(&self) -> MatrixJson {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if let Some(w) = self.entry(i, j) {
                    edges.push(EdgeEntry {
                        i,
                        j,
                        squared: w.squared,
                        exact: w.exact().map(|x| x.to_string()),
                        float: w.value(),
                    });
                }
            }
        }
        MatrixJson { n: self.n, all_exact: self.all_exact, entries: edges }
    }
}

/// JSON dump of the nonzero upper-triangle entries.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct MatrixJson {
    pub n: usize,
    pub all_exact: bool,
    pub entries: Vec<EdgeEntry>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct EdgeEntry {
    pub i: usize,
    pub j: usize,
    pub squared: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub float: f64,
}

pub fn sombor_matrix(g: &Graph) -> SomborMatrix {
    let n = g.order();
    let mut entries = vec![None; n * n];
    let mut all_exact = true;
    for (u, v) in g.edges() {
        let w = sombor_weight(g.degree(u), g.degree(v));
        all_exact &= w.is_exact();
        entries[u * n + v] = Some(w);
        entries[v * n + u] = Some(w);
    }
    SomborMatrix { n, entries, all_exact }
}

/// Sombor index `SO(G) = Σ_{uv∈E} √(d_u² + d_v²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SomborIndex {
    pub value: f64,
    /// Present when every edge weight lies in Q(√2).
    pub exact: Option<QSqrt2>,
}

pub fn sombor_index(g: &Graph) -> SomborIndex {
    let weights: Vec<SomborWeight> = g.edges().map(|(u, v)| sombor_weight(g.degree(u), g.degree(v))).collect();
    let exact = weights.iter().map(SomborWeight::exact).sum::<Option<QSqrt2>>();
    let value = match &exact {
        Some(x) => x.to_f64(),
        None => weights.iter().map(SomborWeight::value).sum(),
    };
    SomborIndex { value, exact }
}

/// Forgotten index `F(G) = Σ_v d_v³`, cross-checked against `Σ_{uv∈E} (d_u² + d_v²)`.
pub fn forgotten_index(g: &Graph) -> u128 {
    let by_vertex: u128 = g.degrees().iter().map(|&d| (d as u128).pow(3)).sum();
    let by_edge: u128 = g
        .edges()
        .map(|(u, v)| (g.degree(u) as u128).pow(2) + (g.degree(v) as u128).pow(2))
        .sum();
    assert_eq!(by_vertex, by_edge, "forgotten index formulas disagree");
    by_vertex
}
