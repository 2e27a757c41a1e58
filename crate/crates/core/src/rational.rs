//! Exact rational helpers.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

/// Integer as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` with `q != 0`; the result is reduced.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form: reduced, positive denominator, `"p"` when integral.
pub fn format(q: &Rational) -> String {
    q.to_string()
}

/// Decimal approximation with `digits` significant digits (rounded half-up on
/// the magnitude). Only used for human-facing, explicitly approximate output.
pub fn to_decimal(q: &Rational, digits: usize) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let mut x = q.abs();
    let ten = Rational::from_integer(BigInt::from(10));
    let mut exp: i64 = 0;
    while x >= ten {
        x /= &ten;
        exp += 1;
    }
    while x < Rational::one() {
        x *= &ten;
        exp -= 1;
    }
    // x in [1, 10): scale to an integer with `digits` digits and round.
    let scale = num::pow(BigInt::from(10), digits.saturating_sub(1));
    let scaled = x * Rational::from_integer(scale.clone());
    let mut mantissa = (scaled + Rational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    if mantissa >= scale.clone() * BigInt::from(10) {
        mantissa /= BigInt::from(10);
        exp += 1;
    }
    let m = mantissa.to_string();
    let (head, tail) = m.split_at(1);
    let tail = tail.trim_end_matches('0');
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(head);
    if !tail.is_empty() {
        out.push('.');
        out.push_str(tail);
    }
    if exp != 0 {
        out.push_str(&format!("e{exp}"));
    }
    out
}
