// SPDX-License-Identifier: Apache-2.0

//! Dense univariate polynomials in λ, with exact Q(√2) or `f64` coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qsqrt2::QSqrt2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("cannot combine an exact polynomial with a float polynomial")]
    ModeMismatch,
}

/// Ring operations a coefficient type must provide.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + for<'a> CoeffOps<'a>
{
}

pub trait CoeffOps<'a>: Sized {
    fn add_ref(&self, rhs: &'a Self) -> Self;
    fn sub_ref(&self, rhs: &'a Self) -> Self;
    fn mul_ref(&self, rhs: &'a Self) -> Self;
}

impl<'a> CoeffOps<'a> for QSqrt2 {
    fn add_ref(&self, rhs: &'a Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &'a Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &'a Self) -> Self {
        self * rhs
    }
}

impl<'a> CoeffOps<'a> for f64 {
    fn add_ref(&self, rhs: &'a Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &'a Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &'a Self) -> Self {
        self * rhs
    }
}

impl Coefficient for QSqrt2 {}
impl Coefficient for f64 {}

/// `coeffs[i]` is the coefficient of `λ^i`. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        Poly { coeffs }
    }

    /// `λ − root`.
    pub fn linear(root: T) -> Self {
        Poly::new(vec![-root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `λ^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Multiplies by `λ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Poly::constant(T::one()), |acc, _| &acc * self)
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coefficient> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i).add_ref(&rhs.coeff(i))).collect())
    }
}

impl<T: Coefficient> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i).sub_ref(&rhs.coeff(i))).collect())
    }
}

impl<T: Coefficient> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

impl<T: Coefficient> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Poly<QSqrt2> {
    /// Integer polynomial from `i64` coefficients in ascending order.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| QSqrt2::integer(c)).collect())
    }

    pub fn to_float(&self) -> Poly<f64> {
        self.map(QSqrt2::to_f64)
    }

    /// Exact division by `λ − root`; `None` when `root` is not a root.
    pub fn deflate(&self, root: &QSqrt2) -> Option<Self> {
        let n = self.coeffs.len();
        if n == 0 {
            return None;
        }
        let mut quotient = vec![QSqrt2::zero(); n - 1];
        let mut carry = QSqrt2::zero();
        for i in (0..n).rev() {
            let value = &self.coeffs[i] + &(&carry * root);
            if i == 0 {
                return value.is_zero().then(|| Poly::new(quotient));
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }
}

/// Coefficient storage mode of a [`SomborPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// A characteristic polynomial in either exact or float mode.
#[derive(Clone, Debug, PartialEq)]
pub enum SomborPoly {
    Exact(Poly<QSqrt2>),
    Float(Poly<f64>),
}

impl SomborPoly {
    pub fn mode(&self) -> Mode {
        match self {
            SomborPoly::Exact(_) => Mode::Exact,
            SomborPoly::Float(_) => Mode::Float,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            SomborPoly::Exact(p) => p.degree(),
            SomborPoly::Float(p) => p.degree(),
        }
    }

    pub fn as_exact(&self) -> Option<&Poly<QSqrt2>> {
        match self {
            SomborPoly::Exact(p) => Some(p),
            SomborPoly::Float(_) => None,
        }
    }

    /// Float view; exact coefficients are rounded.
    pub fn to_float(&self) -> Poly<f64> {
        match self {
            SomborPoly::Exact(p) => p.to_float(),
            SomborPoly::Float(p) => p.clone(),
        }
    }

    pub fn add(&self, rhs: &SomborPoly) -> Result<SomborPoly, PolyError> {
        match (self, rhs) {
            (SomborPoly::Exact(a), SomborPoly::Exact(b)) => Ok(SomborPoly::Exact(a + b)),
            (SomborPoly::Float(a), SomborPoly::Float(b)) => Ok(SomborPoly::Float(a + b)),
            _ => Err(PolyError::ModeMismatch),
        }
    }

    pub fn mul(&self, rhs: &SomborPoly) -> Result<SomborPoly, PolyError> {
        match (self, rhs) {
            (SomborPoly::Exact(a), SomborPoly::Exact(b)) => Ok(SomborPoly::Exact(a * b)),
            (SomborPoly::Float(a), SomborPoly::Float(b)) => Ok(SomborPoly::Float(a * b)),
            _ => Err(PolyError::ModeMismatch),
        }
    }

    /// Evaluates at a float point in either mode.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_float().eval(&x)
    }

    /// Serializable view: ascending coefficients as Q(√2) strings or doubles.
    pub fn to_json(&self) -> PolyJson {
        let degree = self.degree().unwrap_or(0);
        let coeffs = match self {
            SomborPoly::Exact(p) => p.coeffs().iter().map(|c| serde_json::Value::String(c.to_string())).collect(),
            SomborPoly::Float(p) => p.coeffs().iter().map(|&c| serde_json::json!(c)).collect(),
        };
        PolyJson { degree, mode: self.mode(), coeffs }
    }

    pub fn from_json(json: &PolyJson) -> Result<SomborPoly, String> {
        let poly = match json.mode {
            Mode::Exact => {
                let mut coeffs = Vec::with_capacity(json.coeffs.len());
                for v in &json.coeffs {
                    let s = v.as_str().ok_or("exact coefficient must be a string")?;
                    coeffs.push(s.parse::<QSqrt2>().map_err(|e| e.to_string())?);
                }
                SomborPoly::Exact(Poly::new(coeffs))
            }
            Mode::Float => {
                let mut coeffs = Vec::with_capacity(json.coeffs.len());
                for v in &json.coeffs {
                    coeffs.push(v.as_f64().ok_or("float coefficient must be a number")?);
                }
                SomborPoly::Float(Poly::new(coeffs))
            }
        };
        Ok(poly)
    }
}

/// JSON form `{"degree": n, "mode": "exact"|"float", "coeffs": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: usize,
    pub mode: Mode,
    pub coeffs: Vec<serde_json::Value>,
}

/// Rendering options for human-readable polynomials.
#[derive(Debug, Clone, Copy, Default)]
pub struct PolyStyle {
    pub ascii: bool,
    /// Significant decimals for float coefficients.
    pub float_digits: usize,
}

impl PolyStyle {
    pub fn unicode() -> Self {
        PolyStyle { ascii: false, float_digits: 6 }
    }

    pub fn ascii() -> Self {
        PolyStyle { ascii: true, float_digits: 6 }
    }
}

/// Renders e.g. `λ^4 - 18λ^2 + 25` or `λ^10 - 270λ^8 - 432√2λ^7 + ...`.
pub fn render(poly: &SomborPoly, style: PolyStyle) -> String {
    let var = if style.ascii { "l" } else { "λ" };
    let root2 = if style.ascii { "sqrt(2)" } else { "√2" };
    let terms: Vec<(bool, String, usize)> = match poly {
        SomborPoly::Exact(p) => p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let (neg, body) = render_exact(c, root2, style.ascii);
                (neg, body, k)
            })
            .collect(),
        SomborPoly::Float(p) => p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != 0.0)
            .map(|(k, c)| {
                let body = format!("{:.*}", style.float_digits, c.abs());
                let body = if body.trim_end_matches('0').trim_end_matches('.') == "1" && k > 0 {
                    String::new()
                } else {
                    body
                };
                (*c < 0.0, body, k)
            })
            .collect(),
    };
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body, k)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if body.is_empty() && power.is_empty() {
            out.push('1');
        } else {
            out.push_str(body);
            if style.ascii && !body.is_empty() && !power.is_empty() {
                out.push('*');
            }
            out.push_str(&power);
        }
    }
    out
}

/// Magnitude rendering of an exact coefficient with its sign split off.
/// Unit coefficients render empty so that `λ^k` appears bare.
fn render_exact(c: &QSqrt2, root2: &str, ascii: bool) -> (bool, String) {
    let a = c.rational_part();
    let b = c.sqrt2_part();
    let star = if ascii { "*" } else { "" };
    if b.is_zero() {
        let body = if a.abs().is_one() { String::new() } else { a.abs().to_string() };
        return (a.is_negative(), body);
    }
    if a.is_zero() {
        let body = if b.abs().is_one() { root2.to_string() } else { format!("{}{star}{root2}", b.abs()) };
        return (b.is_negative(), body);
    }
    let sign = if b.is_negative() { "-" } else { "+" };
    let radical = if b.abs().is_one() { root2.to_string() } else { format!("{}{star}{root2}", b.abs()) };
    (false, format!("({a} {sign} {radical})"))
}
