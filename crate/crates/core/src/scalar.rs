//! Exact rational scalars.
//!
//! [`Scalar`] is `num_rational::BigRational`, which is always stored
//! reduced with a positive denominator, so structural equality is value
//! equality. The textual form is `"p/q"` or `"n"` for integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Scalar = num_rational::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn ints(values: &[i64]) -> Vec<Scalar> {
    values.iter().copied().map(int).collect()
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        let d = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("{s:?}: zero denominator")));
        }
        Ok(Scalar::new(n, d))
    } else {
        BigInt::from_str(t)
            .map(Scalar::from_integer)
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Scales a nonzero vector to coprime integers with first nonzero entry
/// positive. The zero vector is returned unchanged.
pub fn primitive(v: &[Scalar]) -> Vec<Scalar> {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return v.to_vec();
    };
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums: Vec<BigInt> = v.iter().map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    if first.is_negative() {
        g = -g;
    }
    nums.into_iter().map(|n| Scalar::from_integer(n / &g)).collect()
}

/// Lowest common multiple of the denominators of `v`.
pub(crate) fn denominator_lcm(v: &[Scalar]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("3/7").unwrap(), ratio(3, 7));
        assert_eq!(parse_scalar("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_scalar("5/-10").unwrap(), ratio(-1, 2));
        assert_eq!(format_scalar(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(-2)), "-2");
        assert_eq!(format_scalar(&int(0)), "0");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1.5").is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let z = ratio(0, -5);
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(z, int(0));
    }

    #[test]
    fn primitive_representative() {
        assert_eq!(primitive(&[ratio(-1, 2), ratio(1, 3), int(0)]), ints(&[3, -2, 0]));
        assert_eq!(primitive(&ints(&[0, -4, 6])), ints(&[0, 2, -3]));
        assert_eq!(primitive(&ints(&[0, 0])), ints(&[0, 0]));
    }
}
