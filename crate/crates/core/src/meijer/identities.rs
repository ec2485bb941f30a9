//! Numerical cross-checks of the closed forms against independent routes.

use super::general_z::meijer_g_general_z;
use super::special::{gamma_f64, SeriesConfig};
use super::{JkIndex, MeijerParams};
use crate::error::{Error, Result};
use crate::exact::{gamma_exact, rational_to_f64, HalfInt, PiMonomial};

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs - rhs|`
    pub residual: f64,
    /// `|lhs - rhs| / |rhs|`
    pub relative: f64,
    pub passed: bool,
}

impl IdentityCheck {
    fn absolute(lhs: f64, rhs: f64, tol: f64) -> Self {
        let residual = (lhs - rhs).abs();
        IdentityCheck {
            lhs,
            rhs,
            residual,
            relative: residual / rhs.abs(),
            passed: residual < tol,
        }
    }

    fn relative(lhs: f64, rhs: f64, tol: f64) -> Self {
        let mut check = IdentityCheck::absolute(lhs, rhs, tol);
        check.passed = check.relative < tol;
        check
    }
}

/// Compares the series value of
/// `3F2~(1, j+k-1/2, j+k-1/2; k+1, 2j+2k-1; 1)` with
///
/// ```text
/// Gamma^2(j-1/2) Gamma(k) / Gamma^4(j+k-1/2)
///   - Gamma^-2(j+k-1/2) sum_{mu<k} Gamma^2(mu+j-1/2) / (Gamma(mu+1) Gamma(mu+2j+k-1))
/// ```
///
/// evaluated from exact Gamma values. Passes when the absolute residual is
/// below `tol`.
pub fn check_3f2_identity(idx: JkIndex, tol: f64) -> Result<IdentityCheck> {
    let (j, k) = (idx.j() as f64, idx.k() as f64);
    let upper = j + k - 0.5;
    let lower = [k + 1.0, 2.0 * j + 2.0 * k - 1.0];
    // parameter excess is k > 0, so the unit-argument series converges
    debug_assert!((lower[0] + lower[1] - 1.0 - 2.0 * upper - k).abs() < 1e-12);
    let (series, _) = SeriesConfig::default().hyp3f2_unit([1.0, upper, upper], lower, 1e-10)?;
    let lhs = series / (gamma_f64(lower[0]) * gamma_f64(lower[1]));

    let (ji, ki) = (idx.j() as i64, idx.k() as i64);
    let g_upper = gamma_exact(HalfInt::half_odd(ji + ki - 1))?;
    let first = (&gamma_exact(HalfInt::half_odd(ji - 1))?.pow(2) * &gamma_exact(HalfInt::int(ki))?)
        .checked_div(&g_upper.pow(4))?;
    let mut sum = PiMonomial::zero();
    for mu in 0..ki {
        let top = gamma_exact(HalfInt::half_odd(mu + ji - 1))?.pow(2);
        let bottom =
            &gamma_exact(HalfInt::int(mu + 1))? * &gamma_exact(HalfInt::int(mu + 2 * ji + ki - 1))?;
        sum = sum.checked_add(&top.checked_div(&bottom)?)?;
    }
    let second = sum.checked_div(&g_upper.pow(2))?;
    // the two pieces carry different pi powers; subtract their 100-digit approximations
    let rhs = rational_to_f64(&(first.to_rational_approx() - second.to_rational_approx()));

    Ok(IdentityCheck::absolute(lhs, rhs, tol))
}

/// Central-difference check of the one-step derivative recursion
///
/// ```text
/// G(z | a1, a2, c; b1, b2, c + 1) = -z^(1+c) d/dz [ z^-c G(z | a1, a2, c; b1, b2, c) ]
/// ```
///
/// `base` must have `n = 0`. Passes when the relative residual is below `tol`.
pub fn derivative_recursion_check(
    base: &MeijerParams,
    z: f64,
    step: f64,
    tol: f64,
) -> Result<IdentityCheck> {
    if base.n != 0 {
        return Err(Error::Domain(format!(
            "derivative recursion starts from n = 0, got n = {}",
            base.n
        )));
    }
    let c = base.c.to_f64();
    let series_tol = 1e-17;
    let f = |x: f64| -> Result<f64> { Ok(x.powf(-c) * meijer_g_general_z(base, x, series_tol)?) };
    let derivative = (f(z + step)? - f(z - step)?) / (2.0 * step);
    let lhs = -z.powf(1.0 + c) * derivative;
    let next = MeijerParams { n: 1, ..*base };
    let rhs = meijer_g_general_z(&next, z, series_tol)?;
    Ok(IdentityCheck::relative(lhs, rhs, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(j: u32, k: u32) -> JkIndex {
        JkIndex::new(j, k).unwrap()
    }

    #[test]
    fn three_f_two_examples() {
        assert!(check_3f2_identity(idx(1, 1), 1e-8).unwrap().passed);
        assert!(check_3f2_identity(idx(2, 3), 1e-8).unwrap().passed);
        let tight = check_3f2_identity(idx(1, 1), 1e-12).unwrap();
        assert!(tight.residual < 1e-10, "{tight:?}");
    }

    #[test]
    fn three_f_two_relative_accuracy() {
        for j in 1..=5 {
            for k in 1..=5 {
                let c = check_3f2_identity(idx(j, k), 1e-8).unwrap();
                assert!(c.passed && c.relative < 1e-9, "({j}, {k}): {c:?}");
            }
        }
    }

    #[test]
    fn derivative_recursion_at_point_nine() {
        let base = MeijerParams {
            n: 0,
            ..MeijerParams::from_jk(idx(1, 1))
        };
        let c = derivative_recursion_check(&base, 0.9, 1e-5, 1e-6).unwrap();
        assert!(c.passed, "{c:?}");
    }

    #[test]
    fn derivative_recursion_other_parameters() {
        for (j, k) in [(2, 1), (1, 3), (3, 2)] {
            let base = MeijerParams {
                n: 0,
                ..MeijerParams::from_jk(idx(j, k))
            };
            for &z in &[0.5, 0.9, 1.2] {
                let c = derivative_recursion_check(&base, z, 1e-5, 1e-6).unwrap();
                assert!(c.passed, "({j}, {k}) z = {z}: {c:?}");
            }
        }
    }

    #[test]
    fn derivative_recursion_needs_n_zero() {
        let p = MeijerParams::from_jk(idx(1, 2));
        assert!(derivative_recursion_check(&p, 0.9, 1e-5, 1e-6).is_err());
    }
}
