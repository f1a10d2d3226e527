//! Exact rational scalars, backed by `num-rational`'s arbitrary precision type.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::precondition(format!("`{s}` is not a rational number"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Largest integer not above `x`.
pub fn floor_to_bigint(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

pub(crate) fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

pub(crate) fn pow(x: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("6").unwrap(), int(6));
        assert_eq!(parse_rational(" 4/6 ").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("-3/9").unwrap(), ratio(-1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn floors_and_powers() {
        assert_eq!(floor_to_bigint(&ratio(7, 2)), BigInt::from(3));
        assert_eq!(floor_to_bigint(&ratio(-7, 2)), BigInt::from(-4));
        assert_eq!(pow(&ratio(1, 2), 3), ratio(1, 8));
        assert_eq!(pow(&int(5), 0), int(1));
        assert_eq!(ratio(5, 1).to_string(), "5");
        assert_eq!(ratio(143, 2).to_string(), "143/2");
    }
}
