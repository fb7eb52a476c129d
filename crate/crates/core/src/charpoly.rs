// SPDX-License-Identifier: Apache-2.0

//! Characteristic polynomials `det(λI − A)` of Sombor matrices.
//!
//! The generic engine runs Faddeev–LeVerrier over Q(√2) when every weight is
//! exact, and a Householder tridiagonalization followed by the three-term
//! determinant recurrence otherwise. The closed forms for paths, cycles,
//! stars, complete and complete bipartite graphs are exact.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::graph::RangeError;
use crate::poly::{Poly, SomborPoly};
use crate::qsqrt2::QSqrt2;
use crate::sombor::SomborMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    Generic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharPolyResult {
    pub poly: SomborPoly,
    pub family: Family,
}

pub fn charpoly_generic(m: &SomborMatrix) -> CharPolyResult {
    let poly = match m.to_exact() {
        Some(a) => SomborPoly::Exact(faddeev_leverrier(&a)),
        None => SomborPoly::Float(tridiagonal_charpoly(&m.to_f64())),
    };
    CharPolyResult { poly, family: Family::Generic }
}

/// Exact characteristic polynomial of a square matrix over Q(√2).
///
/// `M_1 = I`, `c_{n−k} = −tr(A·M_k)/k`, `M_{k+1} = A·M_k + c_{n−k}·I`.
/// Zero entries of `A` are skipped in the products.
pub fn faddeev_leverrier(a: &[Vec<QSqrt2>]) -> Poly<QSqrt2> {
    let n = a.len();
    let sparse: Vec<Vec<(usize, &QSqrt2)>> = a
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect();
    let mut coeffs = vec![QSqrt2::zero(); n + 1];
    coeffs[n] = QSqrt2::one();
    let mut m: Vec<Vec<QSqrt2>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { QSqrt2::one() } else { QSqrt2::zero() }).collect())
        .collect();
    for k in 1..=n {
        let mut am = vec![vec![QSqrt2::zero(); n]; n];
        for (i, row) in sparse.iter().enumerate() {
            for &(l, x) in row {
                for (j, y) in m[l].iter().enumerate() {
                    if !y.is_zero() {
                        am[i][j] += &(x * y);
                    }
                }
            }
        }
        let trace: QSqrt2 = (0..n).map(|i| am[i][i].clone()).sum();
        let c = -(trace * QSqrt2::rational(num_rational::BigRational::new(1.into(), (k as i64).into())));
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c;
        }
        coeffs[n - k] = c;
        m = am;
    }
    Poly::new(coeffs)
}

/// Float characteristic polynomial of a symmetric matrix: reduce to
/// tridiagonal form with Householder reflections, then expand
/// `p_k = (λ − d_k)·p_{k−1} − e_k²·p_{k−2}`.
pub fn tridiagonal_charpoly(a: &[Vec<f64>]) -> Poly<f64> {
    let (diag, off) = householder_tridiagonal(a);
    let mut prev = Poly::constant(1.0);
    let Some(&d0) = diag.first() else {
        return prev;
    };
    let mut cur = Poly::new(vec![-d0, 1.0]);
    for k in 1..diag.len() {
        let next = &(&cur.shift(1) - &cur.scale(&diag[k])) - &prev.scale(&(off[k - 1] * off[k - 1]));
        prev = cur;
        cur = next;
    }
    cur
}

/// Diagonal and subdiagonal of an orthogonally similar tridiagonal matrix.
pub fn householder_tridiagonal(a: &[Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut a: Vec<Vec<f64>> = a.to_vec();
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n).map(|i| a[i][k] * a[i][k]).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if a[k + 1][k] > 0.0 { -norm } else { norm };
        let mut v = vec![0.0; n];
        for i in k + 1..n {
            v[i] = a[i][k];
        }
        v[k + 1] -= alpha;
        let vnorm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|x| *x /= vnorm);
        // A ← (I − 2vvᵀ) A (I − 2vvᵀ) = A − 2vpᵀ − 2pvᵀ + 4β vvᵀ with p = Av, β = vᵀp
        let p: Vec<f64> = (0..n).map(|i| (k + 1..n).map(|j| a[i][j] * v[j]).sum()).collect();
        let beta: f64 = (k + 1..n).map(|i| v[i] * p[i]).sum();
        for i in 0..n {
            for j in 0..n {
                a[i][j] += -2.0 * v[i] * p[j] - 2.0 * p[i] * v[j] + 4.0 * beta * v[i] * v[j];
            }
        }
    }
    let diag = (0..n).map(|i| a[i][i]).collect();
    let off = (1..n).map(|i| a[i][i - 1]).collect();
    (diag, off)
}

/// `Λ_k = det` of the k×k tridiagonal matrix with `λ` on the diagonal and
/// `−√8` beside it: `Λ_1 = λ`, `Λ_2 = λ² − 8`, `Λ_k = λΛ_{k−1} − 8Λ_{k−2}`.
pub fn lambda_rec(k: usize) -> Result<Poly<QSqrt2>, RangeError> {
    if k < 1 {
        return Err(RangeError { family: "lambda_rec", requirement: "k >= 1", got: k });
    }
    Ok(lambda_table(k).pop().expect("table has k + 1 entries"))
}

/// `[Λ_0, Λ_1, ..., Λ_k]` with the usual convention `Λ_0 = 1`.
fn lambda_table(k: usize) -> Vec<Poly<QSqrt2>> {
    let eight = QSqrt2::integer(8);
    let mut table = vec![Poly::constant(QSqrt2::one()), Poly::monomial(1)];
    for i in 2..=k {
        let next = &table[i - 1].shift(1) - &table[i - 2].scale(&eight);
        table.push(next);
    }
    table.truncate(k + 1);
    table
}

/// Path `P_n`, `n >= 2`. Small cases are fixed; for `n >= 5`
/// `φ = λ²Λ_{n−2} − 10λΛ_{n−3} + 25Λ_{n−4}`.
pub fn charpoly_path(n: usize) -> Result<Poly<QSqrt2>, RangeError> {
    match n {
        0 | 1 => Err(RangeError { family: "charpoly_path", requirement: "n >= 2", got: n }),
        2 => Ok(Poly::from_integers(&[-2, 0, 1])),
        3 => Ok(Poly::from_integers(&[0, -10, 0, 1])),
        4 => Ok(Poly::from_integers(&[25, 0, -18, 0, 1])),
        _ => {
            let t = lambda_table(n - 2);
            let first = t[n - 2].shift(2);
            let second = t[n - 3].shift(1).scale(&QSqrt2::integer(10));
            let third = t[n - 4].scale(&QSqrt2::integer(25));
            Ok(&(&first - &second) + &third)
        }
    }
}

/// Cycle `C_n`, `n >= 3`: `φ = λΛ_{n−1} − 16Λ_{n−2} − 2(√8)^n`.
pub fn charpoly_cycle(n: usize) -> Result<Poly<QSqrt2>, RangeError> {
    if n < 3 {
        return Err(RangeError { family: "charpoly_cycle", requirement: "n >= 3", got: n });
    }
    let t = lambda_table(n - 1);
    let body = &t[n - 1].shift(1) - &t[n - 2].scale(&QSqrt2::integer(16));
    Ok(&body - &Poly::constant(QSqrt2::integer(2) * sqrt8_pow(n)))
}

/// `(√8)^n = 2^{⌊3n/2⌋}·(√2)^{n mod 2}`.
pub fn sqrt8_pow(n: usize) -> QSqrt2 {
    let power = num_bigint::BigInt::one() << (3 * n / 2);
    if n % 2 == 0 {
        QSqrt2::from_bigints(power, 0.into())
    } else {
        QSqrt2::from_bigints(0.into(), power)
    }
}

/// Star `S_n = K_{1,n−1}`: `φ = λ^{n−2}(λ² − (n−1)(n²−2n+2))`.
pub fn charpoly_star(n: usize) -> Result<Poly<QSqrt2>, RangeError> {
    if n < 2 {
        return Err(RangeError { family: "charpoly_star", requirement: "n >= 2", got: n });
    }
    let c = ((n - 1) * (n * n - 2 * n + 2)) as i64;
    Ok(Poly::from_integers(&[-c, 0, 1]).shift(n - 2))
}

/// Complete graph `K_n`: `φ = (λ − (n−1)²√2)(λ + (n−1)√2)^{n−1}`.
pub fn charpoly_complete(n: usize) -> Result<Poly<QSqrt2>, RangeError> {
    if n < 1 {
        return Err(RangeError { family: "charpoly_complete", requirement: "n >= 1", got: n });
    }
    let k = (n - 1) as i64;
    let top = Poly::linear(QSqrt2::sqrt2_times(k * k));
    let rest = Poly::linear(QSqrt2::sqrt2_times(-k)).pow((n - 1) as u32);
    Ok(&top * &rest)
}

/// `K_{m,n}`: `φ = λ^{m+n−2}(λ² − mn(m²+n²))`. When one side has a single
/// vertex the star form is used.
pub fn charpoly_complete_bipartite(m: usize, n: usize) -> Result<Poly<QSqrt2>, RangeError> {
    if m < 1 || n < 1 {
        return Err(RangeError {
            family: "charpoly_complete_bipartite",
            requirement: "m >= 1 and n >= 1",
            got: m.min(n),
        });
    }
    if m.min(n) == 1 {
        return charpoly_star(m.max(n) + 1);
    }
    let c = (m * n * (m * m + n * n)) as i64;
    Ok(Poly::from_integers(&[-c, 0, 1]).shift(m + n - 2))
}

/// Natural magnitude of each coefficient of `Π(λ − ρ_i)`, used as the scale
/// for float comparisons: the larger of the coefficient of `Π(λ + |ρ_i|)`
/// and `ρ_max` times the next one up, which bounds the first-order effect of
/// moving any eigenvalue by a relative amount.
pub fn coefficient_envelope(eigenvalues: &[f64]) -> Vec<f64> {
    let mut env = vec![1.0];
    for &r in eigenvalues {
        let mut next = vec![0.0; env.len() + 1];
        for (i, &c) in env.iter().enumerate() {
            next[i] += c * r.abs();
            next[i + 1] += c;
        }
        env = next;
    }
    let rho_max = eigenvalues.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    (0..env.len()).map(|k| env[k].max(rho_max * env.get(k + 1).copied().unwrap_or(0.0))).collect()
}

/// Coefficientwise agreement. Two exact polynomials must be equal; otherwise
/// `|p_k − q_k| <= rel · max(|q_k|, envelope_k)` for every `k`.
pub fn coefficients_agree(p: &SomborPoly, q: &SomborPoly, envelope: &[f64], rel: f64) -> bool {
    if let (SomborPoly::Exact(a), SomborPoly::Exact(b)) = (p, q) {
        return a == b;
    }
    let (a, b) = (p.to_float(), q.to_float());
    if a.degree() != b.degree() {
        return false;
    }
    (0..a.coeffs().len()).all(|k| {
        let scale = b.coeff(k).abs().max(envelope.get(k).copied().unwrap_or(0.0));
        (a.coeff(k) - b.coeff(k)).abs() <= rel * scale
    })
}
