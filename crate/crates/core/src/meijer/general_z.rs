//! Float evaluation of the class at general `z` through a finite sum of
//! regularized Gauss functions of `1 - z`.

use super::special::{gamma_f64, SeriesConfig};
use super::MeijerParams;
use crate::error::{Error, Result};

/// ```text
/// G(z) = Gamma(1-a1+b2) Gamma(1-a2+b2)
///   * sum_{mu=0}^{n} C(n, mu) (c-b1)_{n-mu} Gamma(mu+1-a1+b1) Gamma(mu+1-a2+b1)
///       z^(mu+b1) 2F1~(mu+1-a1+b1, mu+1-a2+b1; mu+2-a1-a2+b1+b2; 1-z)
/// ```
///
/// Only `|1 - z| < 1` is supported; no analytic continuation is attempted.
pub fn meijer_g_general_z(p: &MeijerParams, z: f64, tol: f64) -> Result<f64> {
    meijer_g_general_z_with(&SeriesConfig::default(), p, z, tol)
}

pub fn meijer_g_general_z_with(
    cfg: &SeriesConfig,
    p: &MeijerParams,
    z: f64,
    tol: f64,
) -> Result<f64> {
    if z.is_nan() || (1.0 - z).abs() >= 1.0 {
        return Err(Error::OutsideSeriesDomain(z));
    }
    let args = p.gamma_args()?;
    let n = p.n;
    let shift = args.shift.to_f64();
    let w = 1.0 - z;

    let mut sum = 0.0;
    let mut binom = 1.0;
    for mu in 0..=n {
        if mu > 0 {
            binom *= (n - mu + 1) as f64 / mu as f64;
        }
        let poch: f64 = (0..n - mu).map(|i| shift + i as f64).product();
        if poch == 0.0 {
            continue;
        }
        let m = mu as f64;
        let alpha = args.upper1.to_f64() + m;
        let beta = args.upper2.to_f64() + m;
        let gamma = args.lower.to_f64() + m;
        let f = cfg.hyp2f1_reg(alpha, beta, gamma, w, tol)?;
        sum += binom * poch * gamma_f64(alpha) * gamma_f64(beta) * z.powf(m + p.b1.to_f64()) * f;
    }
    Ok(gamma_f64(args.outer1.to_f64()) * gamma_f64(args.outer2.to_f64()) * sum)
}
