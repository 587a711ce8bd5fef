//! Parsing and formatting of exact rational scalars.
//!
//! Endpoints and matrix entries are `num::BigRational` throughout; this
//! module only adds the string conversions used by the JSON and container
//! formats: "p/q" fractions and plain decimal literals.

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::GeomError;

pub type Rational = num::BigRational;

pub fn from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// n/d as a reduced rational. Panics if d = 0; use for literals only.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Accepts "p/q" with integer parts, plain integers, and decimal literals
/// such as "-1.25". Whitespace around the literal is ignored.
pub fn parse_rational(s: &str) -> Result<Rational, GeomError> {
    let t = s.trim();
    let fail = || GeomError::parse(format!("{t:?}"), "expected \"p/q\" or a decimal literal");
    if t.is_empty() {
        return Err(fail());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| fail())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| fail())?;
        if d.is_zero() {
            return Err(GeomError::parse(format!("{t:?}"), "zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    let (neg, rest) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((i, f)) => (i, f),
        None => (rest, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(fail());
    }
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(fail());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut n = BigInt::from_str(&digits).map_err(|_| fail())?;
    if neg {
        n = -n;
    }
    let d = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(Rational::new(n, d))
}

/// "p/q" for non-integers, "p" otherwise. Always reparseable.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact decimal rendering when the denominator is of the form 2^a 5^b,
/// otherwise None.
pub fn to_decimal_string(r: &Rational) -> Option<String> {
    let mut d = r.denom().clone();
    let (two, five) = (BigInt::from(2u32), BigInt::from(5u32));
    let mut a = 0u32;
    let mut b = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        a += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        b += 1;
    }
    if !d.is_one() {
        return None;
    }
    let e = a.max(b);
    let scaled = (r.numer() * BigInt::from(10u32).pow(e)) / r.denom();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = if digits.len() <= e as usize {
        format!("{}{}", "0".repeat(e as usize + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = digits.len() - e as usize;
    let (int_part, frac_part) = digits.split_at(split);
    let frac_part = frac_part.trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    Some(if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    })
}

/// Decimal string when exact, "p/q" otherwise; round-trips through
/// parse_rational either way.
pub fn format_endpoint(r: &Rational) -> String {
    to_decimal_string(r).unwrap_or_else(|| format_rational(r))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("2").unwrap(), from_int(2));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational(" 0.5 ").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("a").is_err());
    }

    #[test]
    fn decimal_rendering_is_exact_or_declined() {
        assert_eq!(to_decimal_string(&ratio(1, 8)).as_deref(), Some("0.125"));
        assert_eq!(to_decimal_string(&ratio(-3, 20)).as_deref(), Some("-0.15"));
        assert_eq!(to_decimal_string(&from_int(7)).as_deref(), Some("7"));
        assert_eq!(to_decimal_string(&ratio(1, 3)), None);
        assert_eq!(format_endpoint(&ratio(1, 3)), "1/3");
    }

    #[test]
    fn round_trips() {
        for s in ["5/3", "-17/12", "0.0625", "4", "-2.4"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_endpoint(&r)).unwrap(), r);
        }
    }
}
