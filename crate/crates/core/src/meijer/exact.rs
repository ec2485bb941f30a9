//! Unit-argument closed forms, evaluated in exact arithmetic only.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{JkIndex, MeijerParams};
use crate::error::{Error, Result};
use crate::exact::{binomial_exact, factorial, gamma_exact, pochhammer_exact, HalfInt, PiMonomial};

/// `G^{2,2}_{3,3}(1 | a1, a2, c; b1, b2, c + n)` as
///
/// ```text
/// Gamma(1-a1+b2) Gamma(1-a2+b2)
///   * sum_{mu=0}^{n} C(n, mu) (c-b1)_{n-mu}
///       Gamma(mu+1-a1+b1) Gamma(mu+1-a2+b1) / Gamma(mu+2-a1-a2+b1+b2)
/// ```
///
/// Every summand carries the same pi power, so the sum stays a monomial;
/// a mismatch surfaces as [`Error::ExponentMismatch`].
pub fn meijer_g_unit(p: &MeijerParams) -> Result<PiMonomial> {
    let args = p.gamma_args()?;
    let n = p.n as u64;
    let mut sum = PiMonomial::zero();
    for mu in 0..=n {
        let shift = mu as i64;
        let weight = BigRational::from_integer(binomial_exact(n, mu)?)
            * pochhammer_exact(args.shift, n - mu);
        if weight.is_zero() {
            continue;
        }
        let numer =
            &gamma_exact(args.upper1.add_int(shift))? * &gamma_exact(args.upper2.add_int(shift))?;
        let term = numer
            .checked_div(&gamma_exact(args.lower.add_int(shift))?)?
            .scale(&weight);
        sum = sum.checked_add(&term)?;
    }
    let outer = &gamma_exact(args.outer1)? * &gamma_exact(args.outer2)?;
    Ok(&outer * &sum)
}

/// Kernel entry `G(j, k)`, computed through both closed forms and checked
/// for exact agreement. The result is always a rational multiple of `pi^2`.
pub fn meijer_g_jk(idx: JkIndex) -> Result<PiMonomial> {
    let gamma_form = jk_gamma_form(idx)?;
    let pi_form = jk_pi_form(idx);
    if gamma_form != pi_form || pi_form.half_pi_exponent() != 4 {
        return Err(Error::FormMismatch {
            j: idx.j(),
            k: idx.k(),
            gamma_form: gamma_form.to_string(),
            pi_form: pi_form.to_string(),
        });
    }
    Ok(pi_form)
}

/// `Gamma(k) Gamma^2(j+k-1/2) sum_{mu<k} Gamma^2(mu+j-1/2) / (Gamma(mu+1) Gamma(mu+2j+k-1))`.
pub fn jk_gamma_form(idx: JkIndex) -> Result<PiMonomial> {
    let (j, k) = (idx.j() as i64, idx.k() as i64);
    let mut sum = PiMonomial::zero();
    for mu in 0..k {
        let top = gamma_exact(HalfInt::half_odd(mu + j - 1))?.pow(2);
        let bottom =
            &gamma_exact(HalfInt::int(mu + 1))? * &gamma_exact(HalfInt::int(mu + 2 * j + k - 1))?;
        sum = sum.checked_add(&top.checked_div(&bottom)?)?;
    }
    let outer = &gamma_exact(HalfInt::int(k))? * &gamma_exact(HalfInt::half_odd(j + k - 1))?.pow(2);
    Ok(&outer * &sum)
}

/// The duplication-formula rewrite using integer factorials only:
///
/// ```text
/// pi^2 Gamma(k) Gamma^2(2j+2k-1) / Gamma^2(j+k)
///   * sum_{mu<k} 16^(2-mu-2j-k) Gamma^2(2mu+2j-1)
///       / (Gamma(mu+1) Gamma^2(mu+j) Gamma(mu+2j+k-1))
/// ```
pub fn jk_pi_form(idx: JkIndex) -> PiMonomial {
    let (j, k) = (idx.j() as u64, idx.k() as u64);
    let fact = |n: u64| BigInt::from(factorial(n));
    let mut sum = BigRational::zero();
    for mu in 0..k {
        let sixteen_exp = 2 - (mu + 2 * j + k) as i64;
        let power = BigInt::one() << (4 * sixteen_exp.unsigned_abs()) as usize;
        let g = fact(2 * mu + 2 * j - 2);
        let numer = &g * &g;
        let m = fact(mu + j - 1);
        let denom = fact(mu) * &m * &m * fact(mu + 2 * j + k - 2);
        sum += if sixteen_exp >= 0 {
            BigRational::new(numer * power, denom)
        } else {
            BigRational::new(numer, denom * power)
        };
    }
    let g = fact(2 * j + 2 * k - 2);
    let h = fact(j + k - 1);
    let outer = BigRational::new(fact(k - 1) * &g * &g, &h * &h);
    PiMonomial::new(outer * sum, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn params(a: i64, b2: i64, n: u32) -> MeijerParams {
        MeijerParams {
            a1: HalfInt::from_twice(a),
            a2: HalfInt::from_twice(a),
            b1: HalfInt::ONE,
            b2: HalfInt::int(b2),
            c: HalfInt::int(2),
            n,
        }
    }

    #[test]
    fn unit_examples() {
        assert_eq!(
            meijer_g_unit(&params(3, 2, 0)).unwrap(),
            PiMonomial::new(rat(1, 4), 4)
        );
        assert_eq!(
            meijer_g_unit(&params(3, 3, 1)).unwrap(),
            PiMonomial::new(rat(39, 128), 4)
        );
        assert_eq!(
            meijer_g_unit(&params(1, 2, 0)).unwrap(),
            PiMonomial::new(rat(3, 128), 4)
        );
    }

    #[test]
    fn jk_examples() {
        let g = |j, k| meijer_g_jk(JkIndex::new(j, k).unwrap()).unwrap();
        assert_eq!(g(1, 1), PiMonomial::new(rat(1, 4), 4));
        assert_eq!(g(3, 2), PiMonomial::new(rat(16695, 262144), 4));
        let corner = BigRational::new(
            "2645687420488987875".parse().unwrap(),
            BigInt::one() << 49usize,
        );
        assert_eq!(g(5, 5), PiMonomial::new(corner, 4));
    }

    #[test]
    fn unit_rejects_pole() {
        // 1 - a1 + b1 = 0
        let p = MeijerParams {
            a1: HalfInt::int(2),
            ..params(3, 2, 0)
        };
        assert!(matches!(
            meijer_g_unit(&p),
            Err(Error::GammaArgument {
                name: "1-a1+b1",
                ..
            })
        ));
    }

    #[test]
    fn unit_mixed_parity_gives_odd_exponent() {
        // a1 half-odd, a2 integer: the sum is rational, one sqrt(pi) comes from Gamma(1-a1+b2)
        let p = MeijerParams {
            a1: HalfInt::from_twice(1),
            a2: HalfInt::int(0),
            b1: HalfInt::ONE,
            b2: HalfInt::int(2),
            c: HalfInt::from_twice(3),
            n: 3,
        };
        let g = meijer_g_unit(&p).unwrap();
        assert!(g.is_positive());
        assert_eq!(g.half_pi_exponent(), 1);
    }

    #[test]
    fn forms_agree_and_exponent_is_four() {
        for j in 1..=20 {
            for k in 1..=20 {
                let idx = JkIndex::new(j, k).unwrap();
                let a = jk_gamma_form(idx).unwrap();
                let b = jk_pi_form(idx);
                assert_eq!(a, b, "(j, k) = ({j}, {k})");
                assert_eq!(b.half_pi_exponent(), 4);
            }
        }
    }

    #[test]
    fn unit_matches_jk_under_substitution() {
        for j in 1..=10 {
            for k in 1..=10 {
                let idx = JkIndex::new(j, k).unwrap();
                assert_eq!(
                    meijer_g_unit(&MeijerParams::from_jk(idx)).unwrap(),
                    meijer_g_jk(idx).unwrap()
                );
            }
        }
    }
}
