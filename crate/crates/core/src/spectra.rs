// SPDX-License-Identifier: Apache-2.0

//! Sombor spectra and energies, the two energy upper bounds, and the
//! closed-form energies of stars, complete and complete bipartite graphs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, RangeError};
use crate::qsqrt2::QSqrt2;
use crate::sombor::{forgotten_index, sombor_index, sombor_matrix, SomborMatrix};

pub const DEFAULT_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;
/// Largest order for which the exact integral-spectrum check is attempted.
const EXACT_SPECTRUM_MAX_ORDER: usize = 40;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectraError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("regular-graph spectrum disagrees with the scaled adjacency spectrum by {0:e}")]
    RegularScaleMismatch(f64),
}

/// Eigenvalues in descending order with matching unit eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// `vectors[i]` belongs to `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

/// Cyclic Jacobi iteration for a real symmetric matrix. Stops once the
/// off-diagonal Frobenius norm is at most `tol` times the total Frobenius norm.
pub fn jacobi_eigen(a: &[Vec<f64>], tol: f64) -> Result<EigenDecomposition, SpectraError> {
    if !(tol > 0.0) {
        return Err(SpectraError::BadTolerance(tol));
    }
    let n = a.len();
    let mut a = a.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect()).collect();
    let total = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let off_norm = |a: &[Vec<f64>]| {
        let mut s = 0.0;
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    s += x * x;
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= tol * total {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectraError::NoConvergence { sweeps, off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
                for k in 0..n {
                    let (x, y) = (a[p][k], a[q][k]);
                    a[p][k] = c * x - s * y;
                    a[q][k] = s * x + c * y;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep their original index order
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = order.iter().map(|&i| a[i][i]).collect();
    let vectors = order.iter().map(|&i| (0..n).map(|k| v[k][i]).collect()).collect();
    Ok(EigenDecomposition { values, vectors, sweeps })
}

/// Eigenvalues of a Sombor matrix, descending.
pub fn eigenvalues_symmetric(m: &SomborMatrix, tol: f64) -> Result<Vec<f64>, SpectraError> {
    Ok(jacobi_eigen(&m.to_f64(), tol)?.values)
}

/// Largest `‖A v_i − ρ_i v_i‖_∞` over all eigenpairs.
pub fn residual(a: &[Vec<f64>], eig: &EigenDecomposition) -> f64 {
    let mut worst: f64 = 0.0;
    for (rho, vec) in eig.values.iter().zip(&eig.vectors) {
        for (row, vi) in a.iter().zip(vec) {
            let av: f64 = row.iter().zip(vec).map(|(x, y)| x * y).sum();
            worst = worst.max((av - rho * vi).abs());
        }
    }
    worst
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
    pub mcclelland_bound: f64,
    pub koolen_moulton_bound: f64,
    /// Set when the Koolen–Moulton radicand came out negative and was clamped.
    pub koolen_moulton_clamped: bool,
    pub residual: f64,
    #[serde(serialize_with = "serialize_opt_display")]
    pub exact_energy: Option<QSqrt2>,
}

fn serialize_opt_display<S: serde::Serializer>(x: &Option<QSqrt2>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

pub fn sombor_energy(g: &Graph) -> Result<SpectrumReport, SpectraError> {
    sombor_energy_with_tol(g, DEFAULT_TOL)
}

pub fn sombor_energy_with_tol(g: &Graph, tol: f64) -> Result<SpectrumReport, SpectraError> {
    let m = sombor_matrix(g);
    let a = m.to_f64();
    let eig = jacobi_eigen(&a, tol)?;
    let residual = residual(&a, &eig);
    let energy = eig.values.iter().map(|x| x.abs()).sum();

    let mut exact_energy = None;
    if let Some(k) = g.regular_degree().filter(|&k| k > 0) {
        let scale = k as f64 * std::f64::consts::SQRT_2;
        let adj: Vec<Vec<f64>> = g.adjacency_matrix().iter().map(|r| r.iter().map(|&x| f64::from(x)).collect()).collect();
        let adj_values = jacobi_eigen(&adj, tol)?.values;
        let gap = adj_values
            .iter()
            .zip(&eig.values)
            .map(|(x, y)| (x * scale - y).abs())
            .fold(0.0, f64::max);
        if gap > 1e-9 {
            return Err(SpectraError::RegularScaleMismatch(gap));
        }
        if g.order() <= EXACT_SPECTRUM_MAX_ORDER {
            exact_energy = integral_adjacency_spectrum(g, &adj_values).map(|roots| {
                let adjacency_energy: i64 = roots.iter().map(|r| r.abs()).sum();
                QSqrt2::sqrt2_times(k as i64 * adjacency_energy)
            });
        }
    } else if g.edge_count() == 0 {
        exact_energy = Some(QSqrt2::zero());
    }

    let km = koolen_moulton_bound(g);
    Ok(SpectrumReport {
        eigenvalues: eig.values,
        energy,
        mcclelland_bound: mcclelland_bound(g),
        koolen_moulton_bound: km.value,
        koolen_moulton_clamped: km.clamped,
        residual,
        exact_energy,
    })
}

/// The adjacency eigenvalues as integers with multiplicity, when the whole
/// spectrum is integral. Candidates come from rounding `approx`; since the
/// matrix is symmetric, the spectrum is integral exactly when the nullities
/// of `A − μI` over the candidates sum to `n`.
pub fn integral_adjacency_spectrum(g: &Graph, approx: &[f64]) -> Option<Vec<i64>> {
    let n = g.order();
    let adj = g.adjacency_matrix();
    let mut candidates: Vec<i64> = approx.iter().map(|x| x.round() as i64).collect();
    candidates.sort_unstable_by(|a, b| b.cmp(a));
    candidates.dedup();
    let mut roots = Vec::with_capacity(n);
    for mu in candidates {
        let shifted: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(i64::from(adj[i][j]) - if i == j { mu } else { 0 })).collect())
            .collect();
        let nullity = n - exact_rank(shifted);
        roots.extend(std::iter::repeat_n(mu, nullity));
    }
    (roots.len() == n).then_some(roots)
}

/// Rank by fraction-free (Bareiss) elimination.
fn exact_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// `√(2·n·F(G))`.
pub fn mcclelland_bound(g: &Graph) -> f64 {
    (2.0 * g.order() as f64 * forgotten_index(g) as f64).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bound {
    pub value: f64,
    pub clamped: bool,
}

/// `2SO/n + √((n−1)(2F − (2SO/n)²))`; a negative radicand (rounding only)
/// is clamped to zero and flagged.
pub fn koolen_moulton_bound(g: &Graph) -> Bound {
    let n = g.order();
    if n == 0 {
        return Bound { value: 0.0, clamped: false };
    }
    let mean = 2.0 * sombor_index(g).value / n as f64;
    let radicand = (n as f64 - 1.0) * (2.0 * forgotten_index(g) as f64 - mean * mean);
    let clamped = radicand < 0.0;
    Bound { value: mean + radicand.max(0.0).sqrt(), clamped }
}

/// `multiplier·√radicand` with `radicand` square-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RadicalEnergy {
    pub multiplier: u64,
    pub radicand: u64,
}

impl RadicalEnergy {
    /// Normalizes `multiplier·√radicand` by pulling square factors out.
    pub fn new(multiplier: u64, radicand: u64) -> Self {
        if radicand == 0 || multiplier == 0 {
            return RadicalEnergy { multiplier: 0, radicand: 1 };
        }
        let mut m = multiplier;
        let mut r = radicand;
        let mut p = 2u64;
        while p * p <= r {
            while r % (p * p) == 0 {
                r /= p * p;
                m *= p;
            }
            p += 1;
        }
        RadicalEnergy { multiplier: m, radicand: r }
    }

    pub fn value(&self) -> f64 {
        self.multiplier as f64 * (self.radicand as f64).sqrt()
    }

    pub fn exact(&self) -> Option<QSqrt2> {
        match self.radicand {
            1 => Some(QSqrt2::integer(self.multiplier as i64)),
            2 => Some(QSqrt2::sqrt2_times(self.multiplier as i64)),
            _ => None,
        }
    }
}

impl fmt::Display for RadicalEnergy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.multiplier, self.radicand) {
            (m, 1) => write!(f, "{m}"),
            (1, r) => write!(f, "sqrt({r})"),
            (m, r) => write!(f, "{m}*sqrt({r})"),
        }
    }
}

/// `En(S_n) = 2√((n−1)(n²−2n+2))`.
pub fn energy_star(n: usize) -> Result<RadicalEnergy, RangeError> {
    if n < 2 {
        return Err(RangeError { family: "energy_star", requirement: "n >= 2", got: n });
    }
    let n = n as u64;
    Ok(RadicalEnergy::new(2, (n - 1) * (n * n - 2 * n + 2)))
}

/// `En(K_n) = 2(n−1)²√2`.
pub fn energy_complete(n: usize) -> Result<QSqrt2, RangeError> {
    if n < 1 {
        return Err(RangeError { family: "energy_complete", requirement: "n >= 1", got: n });
    }
    let k = (n - 1) as i64;
    Ok(QSqrt2::sqrt2_times(2 * k * k))
}

/// `En(K_{m,n}) = 2√(mn(m²+n²))`.
pub fn energy_complete_bipartite(m: usize, n: usize) -> Result<RadicalEnergy, RangeError> {
    if m < 1 || n < 1 {
        return Err(RangeError {
            family: "energy_complete_bipartite",
            requirement: "m >= 1 and n >= 1",
            got: m.min(n),
        });
    }
    let (m, n) = (m as u64, n as u64);
    Ok(RadicalEnergy::new(2, m * n * (m * m + n * n)))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn k2_spectrum() {
        let e = eigenvalues_symmetric(&sombor_matrix(&Graph::complete(2).unwrap()), DEFAULT_TOL).unwrap();
        assert!((e[0] - SQRT2).abs() < 1e-15);
        assert!((e[1] + SQRT2).abs() < 1e-15);
    }

    #[test]
    fn petersen_spectrum() {
        let e = eigenvalues_symmetric(&sombor_matrix(&Graph::petersen()), DEFAULT_TOL).unwrap();
        let mut expected = vec![9.0 * SQRT2];
        expected.extend([3.0 * SQRT2; 5]);
        expected.extend([-6.0 * SQRT2; 4]);
        for (x, y) in e.iter().zip(&expected) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
        let r = sombor_energy(&Graph::petersen()).unwrap();
        assert_eq!(r.exact_energy, Some(QSqrt2::sqrt2_times(48)));
        assert!((r.energy - 67.882250993908562).abs() < 1e-9);
        assert!(r.residual < 1e-12);
    }

    #[test]
    fn isolated_vertices() {
        let e = eigenvalues_symmetric(&sombor_matrix(&Graph::empty(4)), DEFAULT_TOL).unwrap();
        assert_eq!(e, vec![0.0; 4]);
        let r = sombor_energy(&Graph::empty(1)).unwrap();
        assert_eq!(r.energy, 0.0);
        assert_eq!(r.mcclelland_bound, 0.0);
        assert_eq!(r.koolen_moulton_bound, 0.0);
        assert_eq!(r.exact_energy, Some(QSqrt2::zero()));
    }

    #[test]
    fn bad_tolerance() {
        let m = sombor_matrix(&Graph::path(3).unwrap());
        assert!(matches!(eigenvalues_symmetric(&m, 0.0), Err(SpectraError::BadTolerance(_))));
    }

    #[test]
    fn union_energy_adds() {
        let c3 = Graph::cycle(3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let u = sombor_energy(&disjoint_union(&[c3.clone(), c4.clone()])).unwrap().energy;
        let parts = sombor_energy(&c3).unwrap().energy + sombor_energy(&c4).unwrap().energy;
        assert!((u - parts).abs() < 1e-9);
    }

    #[test]
    fn closed_form_energies() {
        assert_eq!(energy_complete(2).unwrap(), QSqrt2::sqrt2_times(2));
        let s5 = energy_star(5).unwrap();
        assert_eq!(s5, RadicalEnergy { multiplier: 4, radicand: 17 });
        assert_eq!(s5.to_string(), "4*sqrt(17)");
        assert!((s5.value() - 16.492422502470642).abs() < 1e-12);
        let k33 = energy_complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.exact(), Some(QSqrt2::sqrt2_times(18)));
        let numeric = sombor_energy(&Graph::complete_bipartite(3, 3).unwrap()).unwrap();
        assert!((numeric.energy - k33.value()).abs() < 1e-9);
        assert_eq!(numeric.exact_energy, k33.exact());
        assert!(energy_star(1).is_err());
        assert!(energy_complete_bipartite(2, 0).is_err());
        assert_eq!(energy_complete(1).unwrap(), QSqrt2::zero());
    }

    #[test]
    fn cubic_bounds() {
        let g = Graph::petersen();
        assert!((mcclelland_bound(&g) - 5400f64.sqrt()).abs() < 1e-12);
        let km = koolen_moulton_bound(&g);
        let expected = 9.0 * SQRT2 + (9.0f64 * (540.0 - 162.0)).sqrt();
        assert!((km.value - expected).abs() < 1e-12);
        assert!((km.value - 71.055).abs() < 1e-3);
        assert!(!km.clamped);
    }

    #[test]
    fn regular_scaling_and_exact_energy() {
        let c6 = sombor_energy(&Graph::cycle(6).unwrap()).unwrap();
        // adjacency spectrum of C_6: 2, 1, 1, −1, −1, −2 → energy 8, scaled by 2√2
        assert_eq!(c6.exact_energy, Some(QSqrt2::sqrt2_times(16)));
        // C_5 has irrational adjacency eigenvalues
        assert_eq!(sombor_energy(&Graph::cycle(5).unwrap()).unwrap().exact_energy, None);
    }

    #[test]
    fn radical_normalization() {
        assert_eq!(RadicalEnergy::new(2, 162), RadicalEnergy { multiplier: 18, radicand: 2 });
        assert_eq!(RadicalEnergy::new(2, 36).to_string(), "12");
        assert_eq!(RadicalEnergy::new(1, 5).to_string(), "sqrt(5)");
        assert_eq!(RadicalEnergy::new(3, 0).value(), 0.0);
    }

    #[test]
    fn rank_with_skipped_columns() {
        let m = |rows: &[&[i64]]| rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(exact_rank(m(&[&[0, 2, 4], &[0, 1, 2], &[0, 3, 7]])), 2);
        assert_eq!(exact_rank(m(&[&[2, 4, 1, 3], &[1, 2, 5, 0], &[3, 6, 6, 3]])), 2);
        assert_eq!(exact_rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(exact_rank(m(&[&[2, 3, 5], &[7, 11, 13], &[17, 19, 23]])), 3);
    }

    #[test]
    fn integral_spectrum_detection() {
        let k5 = Graph::complete(5).unwrap();
        let approx = eigen_adjacency(&k5);
        assert_eq!(integral_adjacency_spectrum(&k5, &approx), Some(vec![4, -1, -1, -1, -1]));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(integral_adjacency_spectrum(&c5, &eigen_adjacency(&c5)), None);
    }

    fn eigen_adjacency(g: &Graph) -> Vec<f64> {
        let a: Vec<Vec<f64>> = g.adjacency_matrix().iter().map(|r| r.iter().map(|&x| f64::from(x)).collect()).collect();
        jacobi_eigen(&a, DEFAULT_TOL).unwrap().values
    }
}
