//! Exact rational scalars.
//!
//! Every coordinate in this crate is a [`Scalar`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in the computational core — all the interesting
//! questions here are boundary-degenerate, and any rounding changes answers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational coordinate type. `num_rational::BigRational` already
/// guarantees the lowest-terms / positive-denominator invariants on every
/// construction, so equality is structural.
pub type Scalar = num_rational::BigRational;

/// Shorthand for an integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `num/den`.
///
/// # Panics
/// Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Midpoint of two scalars.
pub fn midpoint(a: &Scalar, b: &Scalar) -> Scalar {
    (a + b) / int(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational {input:?}: {reason}")]
pub struct ScalarParseError {
    pub input: String,
    pub reason: String,
}

fn parse_bigint(s: &str, input: &str) -> Result<BigInt, ScalarParseError> {
    s.parse::<BigInt>().map_err(|_| ScalarParseError {
        input: input.to_owned(),
        reason: format!("{s:?} is not an integer"),
    })
}

/// Parses `"n"` or `"p/q"` (q > 0). Non-lowest-terms input is normalized
/// silently, e.g. `"2/4"` parses to `1/2`.
pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarParseError> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(parse_bigint(s, s)?)),
        Some((num, den)) => {
            let n = parse_bigint(num, s)?;
            let d = parse_bigint(den, s)?;
            if d.is_zero() || d.is_negative() {
                return Err(ScalarParseError {
                    input: s.to_owned(),
                    reason: "denominator must be positive".to_owned(),
                });
            }
            Ok(Scalar::new(n, d))
        }
    }
}

/// Formats a scalar as `"n"` or `"p/q"` in lowest terms.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Lossy conversion for rendering only; never used by predicates.
pub fn scalar_to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_normalizes_to_lowest_terms() {
        assert_eq!(parse_scalar("2/4").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(parse_scalar(" -3 ").unwrap(), int(-3));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1/-2").is_err());
        assert!(parse_scalar("a/2").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["0", "-11", "1/2", "-7/3"] {
            assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
        }
    }

    #[test]
    fn midpoint_is_exact() {
        assert_eq!(midpoint(&int(0), &int(1)), frac(1, 2));
        assert_eq!(midpoint(&frac(1, 3), &frac(2, 3)), frac(1, 2));
    }
}
