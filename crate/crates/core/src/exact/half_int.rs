use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Error;

/// A number of the form `n / 2` with `n` an integer, stored as `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// `n + 1/2`.
    pub const fn half_odd(n: i64) -> Self {
        HalfInt { twice: 2 * n + 1 }
    }

    pub const fn twice_value(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_positive(self) -> bool {
        self.twice > 0
    }

    /// Integer part when the value is an integer.
    pub const fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub const fn add_int(self, n: i64) -> Self {
        HalfInt {
            twice: self.twice + 2 * n,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.twice), BigInt::from(2))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + rhs.twice,
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice - rhs.twice,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `n`, `n/2` and decimal forms ending in `.5` or `.0`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| err("bad numerator"))?;
            return match den.trim() {
                "1" => Ok(HalfInt::int(num)),
                "2" => Ok(HalfInt::from_twice(num)),
                _ => Err(err("denominator must be 1 or 2")),
            };
        }
        if let Ok(n) = s.parse::<i64>() {
            return Ok(HalfInt::int(n));
        }
        let x: f64 = s.parse().map_err(|_| err("not a number"))?;
        let twice = 2.0 * x;
        if twice.fract() != 0.0 || twice.abs() > i64::MAX as f64 / 2.0 {
            return Err(err("not a half-integer"));
        }
        Ok(HalfInt::from_twice(twice as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        assert_eq!(HalfInt::from_twice(5).to_string(), "5/2");
        assert_eq!(HalfInt::int(-3).to_string(), "-3");
        assert_eq!("5/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(5));
        assert_eq!("-1.5".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-3));
        assert_eq!("4".parse::<HalfInt>().unwrap(), HalfInt::int(4));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.25".parse::<HalfInt>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = HalfInt::half_odd(2);
        assert_eq!(a.to_f64(), 2.5);
        assert_eq!(a + HalfInt::HALF, HalfInt::int(3));
        assert_eq!(a - HalfInt::int(3), HalfInt::from_twice(-1));
        assert!(!(a - HalfInt::int(3)).is_positive());
        assert_eq!(a.add_int(-2), HalfInt::HALF);
        assert!(HalfInt::ZERO < HalfInt::HALF);
    }
}
