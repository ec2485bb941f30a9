use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Decimal places carried by the internal pi and sqrt(pi) constants.
pub const WORKING_DIGITS: u32 = 100;

const PI_DIGITS: &str = "31415926535897932384626433832795028841971693993751\
                         058209749445923078164062862089986280348253421170679";

/// `floor(pi * 10^WORKING_DIGITS)`.
pub fn pi_scaled() -> &'static BigInt {
    static PI: OnceLock<BigInt> = OnceLock::new();
    PI.get_or_init(|| PI_DIGITS.parse().expect("pi digits"))
}

/// `floor(sqrt(pi) * 10^WORKING_DIGITS)`.
pub fn sqrt_pi_scaled() -> &'static BigInt {
    static SQRT_PI: OnceLock<BigInt> = OnceLock::new();
    SQRT_PI.get_or_init(|| (pi_scaled() * ten_pow(WORKING_DIGITS)).sqrt())
}

pub(crate) fn ten_pow(n: u32) -> BigInt {
    BigInt::from(10u32).pow(n)
}

/// A decimal approximation `±d.ddd… × 10^exponent` with a fixed number of
/// significant digits, correctly rounded from the exact input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scientific {
    negative: bool,
    /// Exactly `digits` decimal digits, unless the value is zero.
    mantissa: BigUint,
    digits: u32,
    exponent: i64,
}

impl Scientific {
    pub fn zero(digits: u32) -> Self {
        Scientific {
            negative: false,
            mantissa: BigUint::zero(),
            digits,
            exponent: 0,
        }
    }

    /// Correctly rounded decimal of a finite `f64`; `None` for NaN or infinity.
    pub fn from_f64(value: f64, digits: u32) -> Option<Self> {
        BigRational::from_float(value).map(|r| Scientific::from_rational(&r, digits))
    }

    pub fn from_rational(value: &BigRational, digits: u32) -> Self {
        assert!(digits >= 1);
        if value.is_zero() {
            return Scientific::zero(digits);
        }
        let negative = value.is_negative();
        let num = value.numer().abs();
        let den = value.denom().clone();

        // floor(log10 |value|), seeded from bit lengths then corrected.
        let bit_gap = num.bits() as i64 - den.bits() as i64;
        let mut exponent = (bit_gap as f64 * std::f64::consts::LOG10_2).floor() as i64;
        while cmp_scaled(&num, &den, exponent) == std::cmp::Ordering::Less {
            exponent -= 1;
        }
        while cmp_scaled(&num, &den, exponent + 1) != std::cmp::Ordering::Less {
            exponent += 1;
        }

        let shift = digits as i64 - 1 - exponent;
        let (n, d) = if shift >= 0 {
            (num * ten_pow(shift as u32), den)
        } else {
            (num, den * ten_pow((-shift) as u32))
        };
        let (q, r) = n.div_rem(&d);
        let mut mantissa = if (r << 1u32) >= d { q + 1u32 } else { q };
        if mantissa == ten_pow(digits) {
            mantissa /= 10u32;
            exponent += 1;
        }
        Scientific {
            negative,
            mantissa: mantissa.to_biguint().expect("non-negative"),
            digits,
            exponent,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// Decimal exponent of the leading digit.
    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// The digits as an integer, scaled so that `value = mantissa * 10^(exponent - digits + 1)`.
    pub fn mantissa(&self) -> &BigUint {
        &self.mantissa
    }

    /// Nearest `f64`; underflows to zero (or a subnormal) for tiny magnitudes.
    pub fn to_f64(&self) -> f64 {
        self.to_string()
            .parse()
            .expect("scientific text is a valid float")
    }

    /// `log10 |value|`, finite even when [`to_f64`](Self::to_f64) underflows.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let text = self.mantissa.to_string();
        let lead = &text[..text.len().min(17)];
        let lead: f64 = format!("{}.{}", &lead[..1], &lead[1..])
            .parse()
            .unwrap_or(1.0);
        self.exponent as f64 + lead.log10()
    }

    /// Same value rounded to fewer significant digits.
    pub fn round_to(&self, digits: u32) -> Scientific {
        if self.is_zero() || digits >= self.digits {
            return self.clone();
        }
        let r = BigRational::new(
            BigInt::from_biguint(
                if self.negative {
                    Sign::Minus
                } else {
                    Sign::Plus
                },
                self.mantissa.clone(),
            ),
            BigInt::one(),
        );
        let mut out = Scientific::from_rational(&r, digits);
        out.exponent += self.exponent - (self.digits as i64 - 1);
        out
    }
}

fn cmp_scaled(num: &BigInt, den: &BigInt, exponent: i64) -> std::cmp::Ordering {
    // compares num/den with 10^exponent
    if exponent >= 0 {
        num.cmp(&(den * ten_pow(exponent as u32)))
    } else {
        (num * ten_pow((-exponent) as u32)).cmp(den)
    }
}

impl fmt::Display for Scientific {
    /// `-d.ddde-5` style, parseable by `f64::from_str`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0e0");
        }
        let text = self.mantissa.to_string();
        let sign = if self.negative { "-" } else { "" };
        if text.len() == 1 {
            write!(f, "{sign}{text}e{}", self.exponent)
        } else {
            write!(f, "{sign}{}.{}e{}", &text[..1], &text[1..], self.exponent)
        }
    }
}

/// Nearest `f64` to an exact rational.
pub fn rational_to_f64(value: &BigRational) -> f64 {
    Scientific::from_rational(value, 25).to_f64()
}
