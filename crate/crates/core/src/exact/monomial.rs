use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use super::approx::{pi_scaled, sqrt_pi_scaled, ten_pow, Scientific, WORKING_DIGITS};
use crate::error::{Error, Result};

/// Exact value `coeff * pi^(half_pi_exponent / 2)`.
///
/// Zero is always stored with exponent 0. Addition only combines terms with
/// the same pi power; anything else is a [`Error::ExponentMismatch`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiMonomial {
    coeff: BigRational,
    half_pi_exponent: i64,
}

impl PiMonomial {
    pub fn new(coeff: BigRational, half_pi_exponent: i64) -> Self {
        if coeff.is_zero() {
            PiMonomial::zero()
        } else {
            PiMonomial {
                coeff,
                half_pi_exponent,
            }
        }
    }

    pub fn rational(coeff: BigRational) -> Self {
        PiMonomial::new(coeff, 0)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        PiMonomial::rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        PiMonomial {
            coeff: BigRational::zero(),
            half_pi_exponent: 0,
        }
    }

    pub fn one() -> Self {
        PiMonomial::from_integer(1)
    }

    /// `pi^(half_pi_exponent / 2)`.
    pub fn pi_power(half_pi_exponent: i64) -> Self {
        PiMonomial::new(BigRational::one(), half_pi_exponent)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn half_pi_exponent(&self) -> i64 {
        self.half_pi_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive()
    }

    pub fn checked_add(&self, rhs: &PiMonomial) -> Result<PiMonomial> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.half_pi_exponent != rhs.half_pi_exponent {
            return Err(Error::ExponentMismatch {
                left: self.half_pi_exponent,
                right: rhs.half_pi_exponent,
            });
        }
        Ok(PiMonomial::new(
            &self.coeff + &rhs.coeff,
            self.half_pi_exponent,
        ))
    }

    pub fn checked_sub(&self, rhs: &PiMonomial) -> Result<PiMonomial> {
        self.checked_add(&-rhs)
    }

    pub fn checked_div(&self, rhs: &PiMonomial) -> Result<PiMonomial> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(PiMonomial::new(
            &self.coeff / &rhs.coeff,
            self.half_pi_exponent - rhs.half_pi_exponent,
        ))
    }

    pub fn recip(&self) -> Result<PiMonomial> {
        PiMonomial::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> PiMonomial {
        PiMonomial::new(Pow::pow(&self.coeff, e), self.half_pi_exponent * e as i64)
    }

    pub fn scale(&self, factor: &BigRational) -> PiMonomial {
        PiMonomial::new(&self.coeff * factor, self.half_pi_exponent)
    }

    /// Rational approximation of the value, with pi and sqrt(pi) taken to
    /// [`WORKING_DIGITS`] decimals.
    pub fn to_rational_approx(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let scale = ten_pow(WORKING_DIGITS);
        let whole = Integer::div_floor(&self.half_pi_exponent, &2);
        let odd = self.half_pi_exponent.is_odd();
        let pi = BigRational::new(pi_scaled().clone(), scale.clone());
        let mut value = self.coeff.clone();
        let magnitude = whole.unsigned_abs() as u32;
        if whole >= 0 {
            value *= Pow::pow(&pi, magnitude);
        } else {
            value /= Pow::pow(&pi, magnitude);
        }
        if odd {
            value *= BigRational::new(sqrt_pi_scaled().clone(), scale);
        }
        value
    }

    /// Decimal approximation with `digits` significant digits
    /// (pi carried to 100 decimals, so up to ~90 digits are meaningful).
    pub fn to_float(&self, digits: u32) -> Scientific {
        Scientific::from_rational(&self.to_rational_approx(), digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float(25).to_f64()
    }

    /// `log10 |value|`; finite for magnitudes far outside the `f64` range.
    pub fn log10_abs(&self) -> f64 {
        self.to_float(20).log10_abs()
    }

    /// Like the canonical text, but writes a power-of-two denominator as `2^e`.
    pub fn display_pow2(&self) -> String {
        let den = self.coeff.denom();
        let is_pow2 = den.bits() > 1 && (den & (den - 1u32)).is_zero();
        if is_pow2 {
            format!(
                "{}/2^{} * {}",
                self.coeff.numer(),
                den.bits() - 1,
                pi_text(self.half_pi_exponent)
            )
        } else {
            self.to_string()
        }
    }
}

fn pi_text(half_pi_exponent: i64) -> String {
    if half_pi_exponent % 2 == 0 {
        format!("pi^{}", half_pi_exponent / 2)
    } else {
        format!("pi^({half_pi_exponent}/2)")
    }
}

impl fmt::Display for PiMonomial {
    /// Canonical form `num/den * pi^e` (or `pi^(h/2)` for odd `h`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} * {}",
            self.coeff.numer(),
            self.coeff.denom(),
            pi_text(self.half_pi_exponent)
        )
    }
}

impl FromStr for PiMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (coeff_text, pi_part) = match s.split_once('*') {
            Some((c, p)) => (c.trim(), Some(p.trim())),
            None => (s.trim(), None),
        };
        let coeff = parse_coeff(coeff_text).ok_or_else(|| err("bad coefficient"))?;
        let half_pi_exponent = match pi_part {
            None => 0,
            Some("pi") => 2,
            Some(p) => {
                let e = p.strip_prefix("pi^").ok_or_else(|| err("expected pi^"))?;
                if let Some(inner) = e.strip_prefix('(').and_then(|e| e.strip_suffix(')')) {
                    let (h, two) = inner.split_once('/').ok_or_else(|| err("expected h/2"))?;
                    if two.trim() != "2" {
                        return Err(err("pi exponent denominator must be 2"));
                    }
                    h.trim().parse().map_err(|_| err("bad pi exponent"))?
                } else {
                    let whole: i64 = e.trim().parse().map_err(|_| err("bad pi exponent"))?;
                    2 * whole
                }
            }
        };
        Ok(PiMonomial::new(coeff, half_pi_exponent))
    }
}

fn parse_coeff(text: &str) -> Option<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den.split_once('^') {
        Some((base, exp)) => Pow::pow(
            base.trim().parse::<BigInt>().ok()?,
            exp.trim().parse::<u32>().ok()?,
        ),
        None => den.parse().ok()?,
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl Mul for &PiMonomial {
    type Output = PiMonomial;
    fn mul(self, rhs: &PiMonomial) -> PiMonomial {
        PiMonomial::new(
            &self.coeff * &rhs.coeff,
            self.half_pi_exponent + rhs.half_pi_exponent,
        )
    }
}

impl Mul for PiMonomial {
    type Output = PiMonomial;
    fn mul(self, rhs: PiMonomial) -> PiMonomial {
        &self * &rhs
    }
}

impl Neg for &PiMonomial {
    type Output = PiMonomial;
    fn neg(self) -> PiMonomial {
        PiMonomial {
            coeff: -&self.coeff,
            half_pi_exponent: self.half_pi_exponent,
        }
    }
}

impl Neg for PiMonomial {
    type Output = PiMonomial;
    fn neg(self) -> PiMonomial {
        -&self
    }
}
