//! Scalars shared by the exact (rational) and float backends.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational in canonical reduced form.
pub type Exact = BigRational;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;
    /// Residual threshold; zero for exact arithmetic.
    fn tolerance() -> Self;
    fn residual(&self) -> Residual;
}

impl Scalar for Exact {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn tolerance() -> Self {
        Zero::zero()
    }
    fn residual(&self) -> Residual {
        Residual::Exact {
            num: self.numer().to_string(),
            den: self.denom().to_string(),
        }
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn tolerance() -> Self {
        1e-12
    }
    fn residual(&self) -> Residual {
        Residual::Float(*self)
    }
}

/// Largest absolute entry of a residual matrix, as reported.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Residual {
    Exact { num: String, den: String },
    Float(f64),
}

impl Residual {
    pub fn is_exact_zero(&self) -> bool {
        match self {
            Residual::Exact { num, .. } => num == "0",
            Residual::Float(v) => *v == 0.0,
        }
    }
}

impl std::fmt::Display for Residual {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Residual::Exact { num, den } if den == "1" => f.write_str(num),
            Residual::Exact { num, den } => write!(f, "{num}/{den}"),
            Residual::Float(v) => write!(f, "{v:e}"),
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Parses an integer, a fraction `a/b` or a finite decimal (`-1.25`,
/// `3e-2`) into an exact rational.
pub fn parse_exact(text: &str) -> Option<Exact> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den == BigInt::from(0) {
            return None;
        }
        return Some(Exact::new(num, den));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Exact::from_integer(all_digits.parse().ok()?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Exact::from_integer(BigInt::from(10));
    for _ in 0..scale.unsigned_abs() {
        if scale > 0 {
            value *= &ten;
        } else {
            value /= &ten;
        }
    }
    Some(if negative { -value } else { value })
}

/// Renders an exact value as `a` or `a/b`.
pub fn format_exact(value: &Exact) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(parse_exact("3"), Some(Exact::ratio(3, 1)));
        assert_eq!(parse_exact("-12/10"), Some(Exact::ratio(-6, 5)));
        assert_eq!(parse_exact("0.25"), Some(Exact::ratio(1, 4)));
        assert_eq!(parse_exact("-1.5e1"), Some(Exact::ratio(-15, 1)));
        assert_eq!(parse_exact("2e-3"), Some(Exact::ratio(1, 500)));
        assert_eq!(parse_exact(".5"), Some(Exact::ratio(1, 2)));
        assert_eq!(parse_exact("1/0"), None);
        assert_eq!(parse_exact("abc"), None);
        assert_eq!(parse_exact(""), None);
        assert_eq!(format_exact(&Exact::ratio(12, 5)), "12/5");
        assert_eq!(format_exact(&Exact::ratio(-4, 2)), "-2");
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }
}
