// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic in the real quadratic field Q(√2).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero in Q(sqrt(2))")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a + b*sqrt(2)")]
    Parse(String),
}

/// The number `a + b√2` with rational `a`, `b`.
///
/// Both parts are kept in lowest terms with positive denominators, so
/// structural equality is numerical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QSqrt2 {
    a: BigRational,
    b: BigRational,
}

impl QSqrt2 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_integers(a: i64, b: i64) -> Self {
        QSqrt2::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn from_bigints(a: BigInt, b: BigInt) -> Self {
        QSqrt2::new(BigRational::from_integer(a), BigRational::from_integer(b))
    }

    pub fn rational(a: BigRational) -> Self {
        QSqrt2::new(a, BigRational::zero())
    }

    pub fn integer(a: i64) -> Self {
        QSqrt2::from_integers(a, 0)
    }

    /// `b·√2`.
    pub fn sqrt2_times(b: i64) -> Self {
        QSqrt2::from_integers(0, b)
    }

    pub fn sqrt2() -> Self {
        QSqrt2::sqrt2_times(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when both parts are integers, i.e. the value lies in Z[√2].
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn conjugate(&self) -> Self {
        QSqrt2::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² − 2b²`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let norm = self.norm();
        Ok(QSqrt2::new(&self.a / &norm, -(&self.b / &norm)))
    }

    pub fn checked_div(&self, rhs: &QSqrt2) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QSqrt2::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign of the real number `a + b√2`, decided exactly.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a² with 2b²
        let a2 = &self.a * &self.a;
        let b2 = BigRational::from_integer(2.into()) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Nearest `f64`, evaluating √2 to 53 bits plus guard bits.
    pub fn to_f64(&self) -> f64 {
        self.to_f64_with_precision(53)
    }

    /// Evaluates `a + b√2` with √2 resolved to at least `bits` significant
    /// bits of the result, then rounds to `f64`. Cancellation between the
    /// two parts is handled by raising the working precision until the
    /// result has enough significant bits.
    pub fn to_f64_with_precision(&self, bits: u32) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        if self.b.is_zero() {
            return self.a.to_f64().unwrap_or(f64::NAN);
        }
        let (p, q) = (self.a.numer(), self.a.denom());
        let (r, s) = (self.b.numer(), self.b.denom());
        let denom = q * s;
        let x = p * s;
        let y = r * q;
        let want = u64::from(bits.max(53)) + 8;
        let mut k = want + 8;
        loop {
            let scaled_sq = (&y * &y * BigInt::from(2)) << (2 * k);
            let mut root = scaled_sq.sqrt();
            if y.sign() == Sign::Minus {
                root = -root;
            }
            let total = (&x << k) + root;
            if total.bits() >= want || k > (1 << 20) {
                return BigRational::new(total, &denom << k).to_f64().unwrap_or(f64::NAN);
            }
            k *= 2;
        }
    }
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        QSqrt2::default()
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        QSqrt2::integer(1)
    }
}

impl From<i64> for QSqrt2 {
    fn from(a: i64) -> Self {
        QSqrt2::integer(a)
    }
}

impl From<BigInt> for QSqrt2 {
    fn from(a: BigInt) -> Self {
        QSqrt2::rational(BigRational::from_integer(a))
    }
}

impl From<BigRational> for QSqrt2 {
    fn from(a: BigRational) -> Self {
        QSqrt2::rational(a)
    }
}

impl Add<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let two = BigRational::from_integer(2.into());
        QSqrt2::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

/// Panics on division by zero, like integer division; see [`QSqrt2::checked_div`].
impl Div<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn div(self, rhs: &QSqrt2) -> QSqrt2 {
        self.checked_div(rhs).expect("division by zero in Q(sqrt(2))")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 { (&self).$m(&rhs) }
        }
        impl $tr<&QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: &QSqrt2) -> QSqrt2 { (&self).$m(rhs) }
        }
        impl $tr<QSqrt2> for &QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&QSqrt2> for QSqrt2 {
    fn add_assign(&mut self, rhs: &QSqrt2) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&QSqrt2> for QSqrt2 {
    fn sub_assign(&mut self, rhs: &QSqrt2) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&QSqrt2> for QSqrt2 {
    fn mul_assign(&mut self, rhs: &QSqrt2) {
        *self = &*self * rhs;
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a, -self.b)
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        -self.clone()
    }
}

impl Sum for QSqrt2 {
    fn sum<I: Iterator<Item = QSqrt2>>(iter: I) -> Self {
        iter.fold(QSqrt2::zero(), |acc, x| acc + x)
    }
}

/// Formats as `a + b*sqrt(2)`, dropping zero parts: `23004`, `-432*sqrt(2)`,
/// `1/2 - sqrt(2)`.
impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let mag = self.b.abs();
        let radical = if mag.is_one() { "sqrt(2)".to_string() } else { format!("{mag}*sqrt(2)") };
        match (self.a.is_zero(), self.b.is_negative()) {
            (true, false) => write!(f, "{radical}"),
            (true, true) => write!(f, "-{radical}"),
            (false, false) => write!(f, "{} + {radical}", self.a),
            (false, true) => write!(f, "{} - {radical}", self.a),
        }
    }
}

impl FromStr for QSqrt2 {
    type Err = FieldError;

    fn from_str(text: &str) -> Result<Self, FieldError> {
        let err = || FieldError::Parse(text.to_string());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        let parse_rat = |t: &str| BigRational::from_str(t.strip_prefix('+').unwrap_or(t)).map_err(|_| err());
        let Some(idx) = s.find("sqrt(2)") else {
            return Ok(QSqrt2::rational(parse_rat(&s)?));
        };
        if idx + "sqrt(2)".len() != s.len() {
            return Err(err());
        }
        let head = &s[..idx];
        let (head, starred) = match head.strip_suffix('*') {
            Some(h) => (h, true),
            None => (head, false),
        };
        let split = head.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
        let (a_str, b_str) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None if starred => ("", head),
            None if head.is_empty() || head == "+" || head == "-" => ("", head),
            None => return Err(err()),
        };
        let b = match b_str {
            "" | "+" if !starred => BigRational::one(),
            "-" if !starred => -BigRational::one(),
            _ if starred => parse_rat(b_str)?,
            _ => return Err(err()),
        };
        let a = if a_str.is_empty() { BigRational::zero() } else { parse_rat(a_str)? };
        Ok(QSqrt2::new(a, b))
    }
}

impl Serialize for QSqrt2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QSqrt2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
