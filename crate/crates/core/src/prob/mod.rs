//! Exact probability that all eigenvalues of `X Y` are real, for `X`, `Y`
//! independent `N x N` real Ginibre matrices.
//!
//! ```text
//! p_N = prod_{j=1}^{N} Gamma^-2(j/2) * det K_N
//! ```
//!
//! with `K_N` from [`build_kernel`]. Each kernel column carries a single pi
//! power, so the determinant is taken over the rationals and the pi powers
//! are added back afterwards.

mod bareiss;
mod kernel;

pub use bareiss::{det_bareiss, det_bareiss_int, leading_principal_minors};
pub use kernel::{build_kernel, KernelCache, KernelMatrix};

use std::f64::consts::{LN_10, PI};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{gamma_exact, HalfInt, PiMonomial, Scientific};

#[derive(Debug, Clone, PartialEq)]
pub struct ExactProbability {
    pub dim: u32,
    pub value: PiMonomial,
    /// Nearest `f64`; underflows to 0 once `N` is around 80.
    pub float_value: f64,
    /// `log10 p`, accurate at every `N`.
    pub log10_value: f64,
}

impl ExactProbability {
    fn new(dim: u32, value: PiMonomial) -> Self {
        let approx = value.to_float(25);
        ExactProbability {
            dim,
            float_value: approx.to_f64(),
            log10_value: approx.log10_abs(),
            value,
        }
    }

    /// Rounded to six significant digits.
    pub fn display_float(&self) -> Scientific {
        self.value.to_float(6)
    }
}

/// `prod_{j=1}^{N} 1 / Gamma^2(j/2)`.
pub fn prefactor(n: u32) -> Result<PiMonomial> {
    if n == 0 {
        return Err(Error::Domain("N must be >= 1".into()));
    }
    let mut product = PiMonomial::one();
    for j in 1..=n {
        product = &product * &gamma_exact(HalfInt::from_twice(j as i64))?.pow(2);
    }
    product.recip()
}

/// `(N^2 / 2) ln(pi / 4)`, the log of the leading large-N behaviour.
pub fn asymptotic_log(n: u32) -> f64 {
    let n = n as f64;
    0.5 * n * n * (PI / 4.0).ln()
}

pub fn prob_all_real(n: u32) -> Result<ExactProbability> {
    prob_all_real_cached(n, &KernelCache::new())
}

pub fn prob_all_real_cached(n: u32, cache: &KernelCache) -> Result<ExactProbability> {
    if n == 0 {
        return Err(Error::Domain("N must be >= 1".into()));
    }
    if n == 1 {
        // the product of two 1x1 real matrices is real
        return Ok(ExactProbability::new(1, PiMonomial::one()));
    }
    let kernel = build_kernel(n, cache)?;
    let det = PiMonomial::new(det_bareiss(&kernel.residual()), kernel.total_pi_exponent());
    finish(n, det)
}

fn finish(n: u32, det: PiMonomial) -> Result<ExactProbability> {
    let value = &prefactor(n)? * &det;
    let expected = 2 * (n as i64 / 2);
    if value.half_pi_exponent() != expected {
        return Err(Error::ExponentMismatch {
            left: value.half_pi_exponent(),
            right: expected,
        });
    }
    let p = ExactProbability::new(n, value);
    if !p.value.is_positive() || p.value.to_rational_approx() > BigRational::one() {
        return Err(Error::Domain(format!(
            "probability for N = {n} is outside (0, 1]: {}",
            p.value
        )));
    }
    Ok(p)
}

/// Strips a column's common pi power, failing if an entry disagrees.
fn column_coeffs(column: usize, entries: &[PiMonomial], exponent: i64) -> Result<Vec<BigRational>> {
    entries
        .iter()
        .map(|x| {
            if x.half_pi_exponent() == exponent || x.is_zero() {
                Ok(x.coeff().clone())
            } else {
                Err(Error::KernelColumn {
                    column,
                    first: exponent,
                    found: x.half_pi_exponent(),
                })
            }
        })
        .collect()
}

/// `p_1, ..., p_{n_max}` from two shared eliminations.
///
/// The even kernels are nested top-left blocks of one `G` matrix. Moving the
/// `Gamma^2` column of an odd kernel to the front (sign `(-1)^(m-1)` for `m`
/// rows) nests the odd kernels the same way. Every determinant is then a
/// leading principal minor. Sizes past a vanishing minor fall back to
/// [`prob_all_real_cached`].
pub fn probability_sequence(n_max: u32, cache: &KernelCache) -> Result<Vec<ExactProbability>> {
    if n_max == 0 {
        return Err(Error::Domain("N_max must be >= 1".into()));
    }
    let even_dim = n_max / 2;
    let odd_dim = n_max.div_ceil(2);
    cache.prefill(odd_dim, even_dim.max(odd_dim.saturating_sub(1)))?;

    let g_rows = |rows: u32, cols: u32| -> Result<Vec<Vec<PiMonomial>>> {
        (1..=rows)
            .map(|j| (1..=cols).map(|k| cache.get(j, k)).collect())
            .collect()
    };
    let to_rational =
        |entries: Vec<Vec<PiMonomial>>, exponents: &[i64]| -> Result<Vec<Vec<BigRational>>> {
            let dim = entries.len();
            let mut columns = Vec::with_capacity(dim);
            for (c, &e) in exponents.iter().enumerate() {
                let col: Vec<PiMonomial> = entries.iter().map(|r| r[c].clone()).collect();
                columns.push(column_coeffs(c, &col, e)?);
            }
            Ok((0..dim)
                .map(|r| columns.iter().map(|col| col[r].clone()).collect())
                .collect())
        };

    let even = to_rational(g_rows(even_dim, even_dim)?, &vec![4; even_dim as usize])?;
    let odd = {
        let mut rows = g_rows(odd_dim, odd_dim.saturating_sub(1))?;
        for (j, row) in (1..).zip(rows.iter_mut()) {
            row.insert(0, gamma_exact(HalfInt::half_odd(j - 1))?.pow(2));
        }
        let mut exponents = vec![4; odd_dim as usize];
        if let Some(first) = exponents.first_mut() {
            *first = 2;
        }
        to_rational(rows, &exponents)?
    };
    let (even_minors, odd_minors) = rayon::join(
        || leading_principal_minors(&even),
        || leading_principal_minors(&odd),
    );

    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            if n == 1 {
                return prob_all_real_cached(1, cache);
            }
            let m = (n as usize).div_ceil(2);
            let (minor, exponent) = if n % 2 == 0 {
                (even_minors.get(m - 1).cloned(), 4 * m as i64)
            } else {
                let signed =
                    odd_minors
                        .get(m - 1)
                        .map(|x| if m.is_multiple_of(2) { -x } else { x.clone() });
                (signed, 2 + 4 * (m as i64 - 1))
            };
            match minor {
                Some(d) if !num_traits::Zero::is_zero(&d) => {
                    finish(n, PiMonomial::new(d, exponent))
                }
                _ => prob_all_real_cached(n, cache),
            }
        })
        .collect()
}

/// `4 / pi` as a monomial.
fn four_over_pi() -> PiMonomial {
    PiMonomial::new(BigRational::from_integer(BigInt::from(4)), -2)
}

/// `(4/pi) p_{N-1} p_{N+1} / p_N^2`, computed exactly and rounded at the end.
pub fn ratio_statistic(n: u32) -> Result<f64> {
    ratio_statistic_cached(n, &KernelCache::new())
}

pub fn ratio_statistic_cached(n: u32, cache: &KernelCache) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("ratio needs N >= 2, got {n}")));
    }
    let below = prob_all_real_cached(n - 1, cache)?;
    let at = prob_all_real_cached(n, cache)?;
    let above = prob_all_real_cached(n + 1, cache)?;
    Ok(ratio_of(&below, &at, &above)?.to_f64())
}

fn ratio_of(
    below: &ExactProbability,
    at: &ExactProbability,
    above: &ExactProbability,
) -> Result<PiMonomial> {
    (&(&four_over_pi() * &below.value) * &above.value).checked_div(&at.value.pow(2))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub n: u32,
    pub probability: ExactProbability,
    pub ratio: Option<f64>,
}

pub const TABLE_CSV_HEADER: [&str; 4] = ["N", "exact", "float", "ratio"];

impl TableRow {
    /// `N, canonical exact text, float to 6 significant digits, ratio to 5 decimals`.
    pub fn csv_fields(&self) -> [String; 4] {
        [
            self.n.to_string(),
            self.probability.value.to_string(),
            self.probability.display_float().to_string(),
            self.ratio.map(|r| format!("{r:.5}")).unwrap_or_default(),
        ]
    }
}

/// Rows `1..=n_max`. `p_{n_max + 1}` is also computed so the last row has a ratio.
pub fn probability_table(n_max: u32, cache: &KernelCache) -> Result<Vec<TableRow>> {
    if n_max == 0 {
        return Err(Error::Domain("N_max must be >= 1".into()));
    }
    let probs = probability_sequence(n_max + 1, cache)?;
    (1..=n_max)
        .map(|n| {
            let i = (n - 1) as usize;
            let ratio = if n >= 2 {
                Some(ratio_of(&probs[i - 1], &probs[i], &probs[i + 1])?.to_f64())
            } else {
                None
            };
            Ok(TableRow {
                n,
                probability: probs[i].clone(),
                ratio,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotPoint {
    pub n: u32,
    pub log10_exact: f64,
    pub log10_asymptotic: f64,
}

/// `(N, log10 p_N, log10 (pi/4)^(N^2/2))` for `N = 1..=n_max`.
pub fn plot_series(n_max: u32, cache: &KernelCache) -> Result<Vec<PlotPoint>> {
    if n_max == 0 {
        return Err(Error::Domain("N_max must be >= 1".into()));
    }
    Ok(probability_sequence(n_max, cache)?
        .into_iter()
        .map(|p| PlotPoint {
            n: p.dim,
            log10_exact: p.log10_value,
            log10_asymptotic: asymptotic_log(p.dim) / LN_10,
        })
        .collect())
}
