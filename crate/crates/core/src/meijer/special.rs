//! Float special functions for the general-z evaluator and the identity checks.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Gamma(x)` by the Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula below 1/2. Relative error is around 1e-15.
pub fn gamma_f64(x: f64) -> f64 {
    if x.fract() == 0.0 && (1.0..=30.0).contains(&x) {
        return (2..x as u32).fold(1.0, |acc, i| acc * i as f64);
    }
    if x < 0.5 {
        PI / ((PI * x).sin() * gamma_f64(1.0 - x))
    } else if x > 140.0 {
        ln_gamma_f64(x).exp()
    } else {
        let x = x - 1.0;
        let t = x + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * lanczos_sum(x)
    }
}

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma_f64(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        return (PI / (PI * x).sin()).ln() - ln_gamma_f64(1.0 - x);
    }
    let x = x - 1.0;
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + lanczos_sum(x).ln()
}

fn lanczos_sum(x: f64) -> f64 {
    LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, c)| {
            acc + c / (x + i as f64 + 1.0)
        })
}

/// `1 / Gamma(x)`, exactly zero at the poles.
pub fn rgamma_f64(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        0.0
    } else {
        1.0 / gamma_f64(x)
    }
}

/// Series controls shared by the float evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Hard limit on summed terms before reporting non-convergence.
    pub term_cap: usize,
    /// Number of consecutive sub-tolerance terms that ends a summation.
    pub quiet_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            term_cap: 10_000,
            quiet_terms: 3,
        }
    }
}

/// Regularized Gauss function `2F1(alpha, beta; gamma; w) / Gamma(gamma)`,
/// summed directly for `|w| < 1`.
pub fn hyp2f1_reg(alpha: f64, beta: f64, gamma: f64, w: f64, tol: f64) -> Result<f64> {
    SeriesConfig::default().hyp2f1_reg(alpha, beta, gamma, w, tol)
}

impl SeriesConfig {
    pub fn hyp2f1_reg(&self, alpha: f64, beta: f64, gamma: f64, w: f64, tol: f64) -> Result<f64> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Domain(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        if w.is_nan() || w.abs() >= 1.0 {
            return Err(Error::Domain(format!("2F1 series needs |w| < 1, got {w}")));
        }
        if w == 0.0 {
            return Ok(rgamma_f64(gamma));
        }
        if gamma <= 0.0 && gamma.fract() == 0.0 {
            // The first 1 - gamma terms vanish; what remains is
            // (alpha)_m (beta)_m w^m / m! * 2F1~(alpha + m, beta + m; m + 1; w), m = 1 - gamma.
            let m = (1.0 - gamma) as u32;
            let mut lead = 1.0;
            for i in 0..m {
                let i = i as f64;
                lead *= (alpha + i) * (beta + i) * w / (i + 1.0);
            }
            if lead == 0.0 {
                return Ok(0.0);
            }
            let m = m as f64;
            return Ok(lead * self.hyp2f1_reg(alpha + m, beta + m, m + 1.0, w, tol)?);
        }

        let mut term = rgamma_f64(gamma);
        let mut sum = term;
        let mut quiet = 0;
        for s in 0..self.term_cap {
            let s = s as f64;
            term *= (alpha + s) * (beta + s) * w / ((gamma + s) * (s + 1.0));
            sum += term;
            if term.abs() <= tol * sum.abs() {
                quiet += 1;
                if quiet >= self.quiet_terms {
                    return Ok(sum);
                }
            } else {
                quiet = 0;
            }
        }
        Err(Error::SeriesDiverged {
            terms: self.term_cap,
        })
    }

    /// `3F2(a1, a2, a3; b1, b2; 1)` (not regularized) for positive parameter
    /// excess `s = b1 + b2 - a1 - a2 - a3`.
    ///
    /// The terms decay like `n^-(s+1)`, so the partial sums approach the
    /// limit as `N^-s (d0 + d1/N + ...)`. Partial sums at `128, 256, 512, ...`
    /// are combined by Richardson extrapolation over those known exponents.
    /// Returns the value and an error estimate.
    pub fn hyp3f2_unit(&self, a: [f64; 3], b: [f64; 2], tol: f64) -> Result<(f64, f64)> {
        let excess = b[0] + b[1] - a[0] - a[1] - a[2];
        if excess.is_nan() || excess <= 0.0 {
            return Err(Error::Domain(format!(
                "3F2 at unit argument diverges for parameter excess {excess}"
            )));
        }
        if a.iter().any(|&x| x <= 0.0 && x.fract() == 0.0) {
            // terminating series
            let mut term = 1.0;
            let mut sum = Neumaier::default();
            sum.add(term);
            for n in 0..self.term_cap {
                let n = n as f64;
                term *=
                    (a[0] + n) * (a[1] + n) * (a[2] + n) / ((b[0] + n) * (b[1] + n) * (n + 1.0));
                if term == 0.0 {
                    return Ok((sum.value(), 0.0));
                }
                sum.add(term);
            }
        }

        let mut levels = Vec::new();
        let mut checkpoint = 128usize;
        let mut term = 1.0;
        let mut sum = Neumaier::default();
        let mut n = 0usize;
        while checkpoint <= self.term_cap {
            while n < checkpoint {
                sum.add(term);
                let x = n as f64;
                term *=
                    (a[0] + x) * (a[1] + x) * (a[2] + x) / ((b[0] + x) * (b[1] + x) * (x + 1.0));
                n += 1;
            }
            levels.push(sum.value());
            checkpoint *= 2;
        }
        if levels.len() < 2 {
            return Err(Error::SeriesDiverged {
                terms: self.term_cap,
            });
        }

        // Each pass removes the next power N^-(excess + i).
        let mut table = levels;
        let mut estimates = vec![*table.last().unwrap()];
        for i in 0..table.len() - 1 {
            let factor = 2f64.powf(excess + i as f64);
            table = table
                .windows(2)
                .map(|w| (factor * w[1] - w[0]) / (factor - 1.0))
                .collect();
            estimates.push(*table.last().unwrap());
        }
        let value = estimates[estimates.len() - 1];
        let error = (value - estimates[estimates.len() - 2]).abs();
        if error > tol * value.abs().max(1.0) {
            return Err(Error::SeriesDiverged { terms: n });
        }
        Ok((value, error))
    }
}

/// Compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_float_matches_factorials() {
        let mut fact = 1.0f64;
        for n in 1..30 {
            let g = gamma_f64(n as f64);
            assert!((g - fact).abs() <= 1e-13 * fact, "n = {n}");
            fact *= n as f64;
        }
        assert!((gamma_f64(0.5) - PI.sqrt()).abs() < 1e-14);
        assert!((gamma_f64(-0.5) + 2.0 * PI.sqrt()).abs() < 1e-13);
        let big = gamma_f64(150.5);
        assert!((ln_gamma_f64(150.5) - big.ln()).abs() < 1e-12);
    }

    #[test]
    fn rgamma_poles() {
        assert_eq!(rgamma_f64(0.0), 0.0);
        assert_eq!(rgamma_f64(-3.0), 0.0);
        assert!((rgamma_f64(3.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn hyp2f1_at_zero_is_reciprocal_gamma() {
        assert_eq!(hyp2f1_reg(0.3, 1.7, 3.0, 0.0, 1e-15).unwrap(), 0.5);
    }

    #[test]
    fn hyp2f1_log_closed_form() {
        // 2F1(1, 1; 2; w) = -ln(1 - w) / w, and Gamma(2) = 1
        for &w in &[0.5, -0.5, 0.1, 0.9] {
            let expect = -(1.0f64 - w).ln() / w;
            let got = hyp2f1_reg(1.0, 1.0, 2.0, w, 1e-16).unwrap();
            assert!((got - expect).abs() < 1e-14 * expect.abs(), "w = {w}");
        }
        assert!((hyp2f1_reg(1.0, 1.0, 2.0, 0.5, 1e-16).unwrap() - 2.0 * 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn hyp2f1_half_half_one_against_long_partial_sum() {
        // oracle: 10000-term partial sum in compensated arithmetic
        let w = 0.9f64;
        let mut term = 1.0f64;
        let mut oracle = Neumaier::default();
        oracle.add(term);
        for s in 0..10_000 {
            let s = s as f64;
            term *= (0.5 + s) * (0.5 + s) * w / ((1.0 + s) * (s + 1.0));
            oracle.add(term);
        }
        let got = hyp2f1_reg(0.5, 0.5, 1.0, w, 1e-17).unwrap();
        assert!((got - oracle.value()).abs() < 1e-13 * oracle.value());
    }

    #[test]
    fn hyp2f1_domain_and_cap() {
        assert!(hyp2f1_reg(1.0, 1.0, 2.0, 1.0, 1e-10).is_err());
        assert!(hyp2f1_reg(1.0, 1.0, 2.0, 0.5, 0.0).is_err());
        let tight = SeriesConfig {
            term_cap: 5,
            ..SeriesConfig::default()
        };
        assert_eq!(
            tight.hyp2f1_reg(0.5, 0.5, 1.0, 0.99, 1e-15),
            Err(Error::SeriesDiverged { terms: 5 })
        );
    }

    #[test]
    fn hyp2f1_regularized_at_gamma_pole() {
        // 2F1~(a, b; 0; w) = a b w 2F1(a+1, b+1; 2; w) / 1!
        let (a, b, w) = (0.5, 1.5, 0.3);
        let direct = a * b * w * hyp2f1_reg(a + 1.0, b + 1.0, 2.0, w, 1e-16).unwrap();
        let limit = hyp2f1_reg(a, b, 1e-9, w, 1e-16).unwrap();
        let pole = hyp2f1_reg(a, b, 0.0, w, 1e-16).unwrap();
        assert!((pole - direct).abs() < 1e-14);
        assert!((pole - limit).abs() < 1e-7);
    }

    #[test]
    fn hyp3f2_reduces_to_gauss_sum() {
        // 3F2(a, b, c; d, c; 1) = 2F1(a, b; d; 1) = Gamma(d) Gamma(d-a-b) / (Gamma(d-a) Gamma(d-b))
        let cfg = SeriesConfig::default();
        for &(a, b, d) in &[(1.0, 1.5, 4.0), (0.5, 0.5, 2.0), (1.5, 1.5, 4.5)] {
            let (got, _) = cfg.hyp3f2_unit([a, b, 2.25], [d, 2.25], 1e-10).unwrap();
            let expect =
                gamma_f64(d) * gamma_f64(d - a - b) / (gamma_f64(d - a) * gamma_f64(d - b));
            assert!((got - expect).abs() < 1e-11 * expect, "{got} vs {expect}");
        }
    }

    #[test]
    fn hyp3f2_terminating() {
        // 3F2(-2, 1, 1; 2, 2; 1) = 1 - 2/4 + 1/9 * (-2)(-1)/2 * ... computed by hand: 1 - 1/2 + 1/9
        let (got, err) = SeriesConfig::default()
            .hyp3f2_unit([-2.0, 1.0, 1.0], [2.0, 2.0], 1e-12)
            .unwrap();
        assert!((got - (1.0 - 0.5 + 1.0 / 9.0)).abs() < 1e-15);
        assert_eq!(err, 0.0);
    }

    #[test]
    fn hyp3f2_rejects_divergent() {
        assert!(SeriesConfig::default()
            .hyp3f2_unit([1.0, 1.0, 1.0], [1.5, 1.5], 1e-8)
            .is_err());
    }
}
