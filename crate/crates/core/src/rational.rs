//! Exact rational scalars and the few numeric helpers built on them.
//!
//! The scalar type is [`num_rational::BigRational`]; everything that crosses
//! into a file is written as `"p/q"` (or `"p"` when the denominator is one).

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serializer;

pub use num_rational::BigRational as Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`; rejects a zero denominator.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseRationalError(text.to_string()));
    }
    if let Some((num, den)) = trimmed.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| ParseRationalError(text.to_string()))?;
        let den = BigInt::from_str(den.trim()).map_err(|_| ParseRationalError(text.to_string()))?;
        if den.is_zero() {
            return Err(ParseRationalError(text.to_string()));
        }
        Ok(Rational::new(num, den))
    } else {
        BigInt::from_str(trimmed)
            .map(Rational::from_integer)
            .map_err(|_| ParseRationalError(text.to_string()))
    }
}

pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn serialize_rational<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

pub fn serialize_rationals<S: Serializer>(values: &[Rational], serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_seq(values.iter().map(|v| v.to_string()))
}

pub fn floor(value: &Rational) -> BigInt {
    value.floor().to_integer()
}

pub fn ceil(value: &Rational) -> BigInt {
    value.ceil().to_integer()
}

pub fn is_integral(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn pow(value: &Rational, exp: u32) -> Rational {
    num_traits::pow(value.clone(), exp as usize)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn ten_pow(digits: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), digits as usize)
}

/// Rational enclosure `lo <= value^(1/k) <= hi` with `hi - lo <= 10^-digits`.
///
/// `value` must be nonnegative and `k >= 1`.
pub fn root_enclosure(value: &Rational, k: u32, digits: u32) -> (Rational, Rational) {
    assert!(!value.is_negative(), "root of a negative rational");
    assert!(k >= 1);
    if k == 1 {
        return (value.clone(), value.clone());
    }
    let scale = ten_pow(digits);
    // floor(value * scale^k), then integer k-th root: r^k <= floor(..) < (r+1)^k.
    let scaled = value * Rational::from_integer(num_traits::pow(scale.clone(), k as usize));
    let base = scaled.floor().to_integer();
    let mut root = base.nth_root(k);
    let exact = num_traits::pow(root.clone(), k as usize) == base && scaled.is_integer();
    let lo = Rational::new(root.clone(), scale.clone());
    if exact {
        return (lo.clone(), lo);
    }
    root += 1;
    (lo, Rational::new(root, scale))
}

/// Decimal rendering truncated toward negative infinity at `digits` places.
pub fn to_decimal(value: &Rational, digits: u32) -> String {
    let scale = ten_pow(digits);
    let scaled = (value * Rational::from_integer(scale.clone())).floor().to_integer();
    let negative = scaled.is_negative();
    let magnitude = scaled.abs();
    let (whole, frac) = magnitude.div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        let frac = frac.to_string();
        out.push('.');
        for _ in frac.len()..digits as usize {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
