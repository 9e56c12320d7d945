//! Exact rational scalars and their `"p/q"` string form.
//!
//! Every density, threshold and deficit in this crate is a [`Rational`];
//! no floating point enters any computation. Rationals cross file and CLI
//! boundaries only as `"p/q"` strings (`"3/4"`, `"-1/1024"`, `"2"`), and
//! decimal notation is rejected rather than approximated.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision exact rational scalar.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {literal:?}: {reason}")]
    Invalid { literal: String, reason: &'static str },
    #[error("invalid rational literal {literal:?}: denominator is zero")]
    ZeroDenominator { literal: String },
}

/// Parses a `"p/q"` (or plain integer) literal into a reduced [`Rational`].
///
/// Accepted syntax: optional leading `-`, a decimal integer, and optionally
/// `/` followed by a positive decimal integer. Anything else — in
/// particular decimal-point notation such as `"0.75"` — is an error.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let invalid = |reason: &'static str| RationalParseError::Invalid {
        literal: text.to_owned(),
        reason,
    };
    if trimmed.contains('.') {
        return Err(invalid("decimal notation is not accepted, use p/q"));
    }
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (trimmed, None),
    };
    let numerator = parse_int(num_text, true).ok_or_else(|| invalid("malformed numerator"))?;
    let denominator = match den_text {
        Some(d) => parse_int(d, false).ok_or_else(|| invalid("malformed denominator"))?,
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(RationalParseError::ZeroDenominator {
            literal: text.to_owned(),
        });
    }
    Ok(Rational::new(numerator, denominator))
}

fn parse_int(text: &str, allow_sign: bool) -> Option<BigInt> {
    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) if allow_sign => (true, rest),
        Some(_) => return None,
        None => (false, text),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let magnitude: BigInt = digits.parse().ok()?;
    Some(if negative { -magnitude } else { magnitude })
}

/// Canonical string form: reduced, sign on the numerator, `/q` omitted for
/// integers. `parse_rational(format_rational(r)) == r` for every `r`.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Shorthand for small rational constants.
pub fn ratio(numerator: i64, denominator: i64) -> Rational {
    Rational::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// The integer `n` as a rational.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^exponent` for non-negative integer exponents.
pub fn pow(base: &Rational, exponent: usize) -> Rational {
    let mut result = Rational::one();
    let mut square = base.clone();
    let mut remaining = exponent;
    while remaining > 0 {
        if remaining & 1 == 1 {
            result *= &square;
        }
        remaining >>= 1;
        if remaining > 0 {
            square = &square * &square;
        }
    }
    result
}

/// `2^exponent` as a rational, for possibly negative `exponent`.
pub fn two_pow(exponent: i64) -> Rational {
    let magnitude = BigInt::one() << exponent.unsigned_abs();
    if exponent >= 0 {
        Rational::from_integer(magnitude)
    } else {
        Rational::new(BigInt::one(), magnitude)
    }
}

/// `true` when `value` lies in the closed interval `[0, 1]`.
pub fn in_unit_interval(value: &Rational) -> bool {
    !value.is_negative() && value <= &Rational::one()
}

/// Serde adapters mapping rationals to `"p/q"` strings in JSON.
pub mod serde_ratio {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        format_rational(value).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>` as arrays of `"p/q"` strings.
pub mod serde_ratio_vec {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        values: &[Rational],
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        values
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(deserializer)?;
        texts
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter for matrices of rationals.
pub mod serde_ratio_matrix {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        values: &[Vec<Rational>],
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        values
            .iter()
            .map(|row| row.iter().map(format_rational).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<Vec<Rational>>, D::Error> {
        let texts = Vec::<Vec<String>>::deserialize(deserializer)?;
        texts
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_fraction_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-1/1024").unwrap(), ratio(-1, 1024));
        assert_eq!(parse_rational("7").unwrap(), integer(7));
        assert_eq!(parse_rational("-0").unwrap(), integer(0));
        assert_eq!(parse_rational(" 2/6 ").unwrap(), ratio(1, 3));
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        assert!(matches!(
            parse_rational("0.5"),
            Err(RationalParseError::Invalid { .. })
        ));
        assert!(matches!(parse_rational(""), Err(RationalParseError::Empty)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("--3").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1 / 2").is_err());
    }

    #[test]
    fn format_is_canonical_and_round_trips() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&integer(5)), "5");
        assert_eq!(format_rational(&integer(0)), "0");
        for text in ["3/4", "-19/7", "0", "123456789123456789/2"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn pow_and_two_pow() {
        assert_eq!(pow(&ratio(3, 4), 4), ratio(81, 256));
        assert_eq!(pow(&ratio(-1, 2), 3), ratio(-1, 8));
        assert_eq!(pow(&ratio(5, 7), 0), integer(1));
        assert_eq!(two_pow(10), integer(1024));
        assert_eq!(two_pow(-8), ratio(1, 256));
        assert_eq!(two_pow(0), integer(1));
    }
}
