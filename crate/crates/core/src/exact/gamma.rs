use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::{HalfInt, PiMonomial};
use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Exact `Gamma(x)` for a positive half-integer `x`.
///
/// Integers give `(x-1)!` with no pi factor; `m + 1/2` gives
/// `(1/2)_m * sqrt(pi)`.
pub fn gamma_exact(x: HalfInt) -> Result<PiMonomial> {
    if !x.is_positive() {
        return Err(Error::GammaPole(x));
    }
    match x.as_integer() {
        Some(n) => Ok(PiMonomial::from_integer(BigInt::from(factorial(
            (n - 1) as u64,
        )))),
        None => {
            let m = (x.twice_value() - 1) / 2;
            Ok(PiMonomial::new(
                pochhammer_exact(HalfInt::HALF, m as u64),
                1,
            ))
        }
    }
}

/// Rising factorial `a (a+1) ... (a+n-1)`; `(a)_0 = 1`.
pub fn pochhammer_exact(a: HalfInt, n: u64) -> BigRational {
    let twice = a.twice_value();
    let numer = (0..n as i64).fold(BigInt::one(), |acc, i| acc * (twice + 2 * i));
    BigRational::new(numer, BigInt::one() << n)
}

pub fn binomial_exact(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let k = k.min(n - k);
    // each prefix product is itself a binomial coefficient, so the division is exact
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Ok(acc.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_exact(HalfInt::HALF).unwrap(), PiMonomial::pi_power(1));
        assert_eq!(
            gamma_exact(HalfInt::from_twice(5)).unwrap(),
            PiMonomial::new(rat(3, 4), 1)
        );
        assert_eq!(
            gamma_exact(HalfInt::int(4)).unwrap(),
            PiMonomial::from_integer(6)
        );
        assert_eq!(gamma_exact(HalfInt::ONE).unwrap(), PiMonomial::one());
    }

    #[test]
    fn gamma_rejects_non_positive() {
        assert_eq!(
            gamma_exact(HalfInt::ZERO),
            Err(Error::GammaPole(HalfInt::ZERO))
        );
        let neg = HalfInt::from_twice(-3);
        assert_eq!(gamma_exact(neg), Err(Error::GammaPole(neg)));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_exact(HalfInt::from_twice(3), 2), rat(15, 4));
        for m in 0..12u64 {
            assert_eq!(
                pochhammer_exact(HalfInt::ONE, m),
                BigRational::from_integer(factorial(m).into())
            );
        }
        assert_eq!(pochhammer_exact(HalfInt::int(-2), 3), rat(0, 1));
        assert_eq!(pochhammer_exact(HalfInt::from_twice(-7), 0), rat(1, 1));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_exact(4, 2).unwrap(), 6.into());
        assert_eq!(binomial_exact(17, 0).unwrap(), 1.into());
        assert_eq!(binomial_exact(10, 5).unwrap(), 252.into());
        assert_eq!(binomial_exact(0, 0).unwrap(), 1.into());
        assert_eq!(
            binomial_exact(3, 4),
            Err(Error::BinomialRange { n: 3, k: 4 })
        );
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(
                    binomial_exact(n, k).unwrap(),
                    binomial_exact(n - 1, k - 1).unwrap() + binomial_exact(n - 1, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn functional_equation_half_odd_up_to_401() {
        for twice in (1..=401).step_by(2) {
            let x = HalfInt::from_twice(twice);
            let lhs = gamma_exact(x.add_int(1)).unwrap();
            let rhs = gamma_exact(x).unwrap().scale(&x.to_rational());
            assert_eq!(lhs, rhs, "x = {x}");
        }
    }

    #[test]
    fn exponent_by_parity() {
        for twice in 1..200 {
            let g = gamma_exact(HalfInt::from_twice(twice)).unwrap();
            assert_eq!(g.half_pi_exponent(), twice % 2);
        }
    }

    #[test]
    fn legendre_duplication() {
        // Gamma(2x) sqrt(pi) = 2^(2x-1) Gamma(x) Gamma(x + 1/2), for x such that 2x is an integer
        for twice in 1..120i64 {
            let x = HalfInt::from_twice(twice);
            let lhs = &gamma_exact(HalfInt::int(twice)).unwrap() * &PiMonomial::pi_power(1);
            let pow2 = BigRational::new(BigInt::one() << (twice - 1) as usize, BigInt::one());
            let rhs =
                (&gamma_exact(x).unwrap() * &gamma_exact(x + HalfInt::HALF).unwrap()).scale(&pow2);
            assert_eq!(lhs, rhs, "x = {x}");
        }
    }

    proptest! {
        #[test]
        fn pochhammer_composes(twice in -60i64..60, n in 0u64..=20, m in 0u64..=20) {
            let a = HalfInt::from_twice(twice);
            let lhs = pochhammer_exact(a, n) * pochhammer_exact(a.add_int(n as i64), m);
            prop_assert_eq!(lhs, pochhammer_exact(a, n + m));
        }
    }
}
