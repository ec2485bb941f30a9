//! Real eigenvalue counting through the real Schur form.

use super::matrix::DenseMatrix;
use crate::error::{Error, Result};

/// Block discriminants closer to zero than this are reported as borderline.
pub const BORDERLINE_DISCRIMINANT: f64 = 1e-12;

const DEFLATION_EPS: f64 = 4.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EigenCount {
    pub real: usize,
    /// 2x2 blocks whose discriminant was within [`BORDERLINE_DISCRIMINANT`] of 0.
    pub borderline: usize,
}

/// Number of real eigenvalues of `m`, counted with multiplicity.
pub fn real_eigen_count(m: &DenseMatrix) -> Result<usize> {
    classify_eigenvalues(m).map(|c| c.real)
}

/// Hessenberg reduction followed by Francis double-shift QR.
///
/// Each deflated 1x1 block is one real eigenvalue. A deflated 2x2 block
/// `[[y, b], [c, x]]` holds two real eigenvalues when its discriminant
/// `(x - y)^2 + 4bc` is `>= 0` and a conjugate pair otherwise.
pub fn classify_eigenvalues(m: &DenseMatrix) -> Result<EigenCount> {
    if !m.is_finite() {
        return Err(Error::Domain("matrix has non-finite entries".into()));
    }
    let n = m.dim();
    let mut count = EigenCount::default();
    if n == 0 {
        return Ok(count);
    }
    let mut a = m.clone();
    a.to_hessenberg();

    let anorm: f64 = (0..n)
        .flat_map(|i| (i.saturating_sub(1)..n).map(move |j| (i, j)))
        .map(|ij| a[ij].abs())
        .sum();
    let cap = 30 * n;
    let mut nn = n - 1;
    loop {
        let mut its = 0;
        loop {
            let mut l = 0;
            for ll in (1..=nn).rev() {
                let mut s = a[(ll - 1, ll - 1)].abs() + a[(ll, ll)].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[(ll, ll - 1)].abs() <= DEFLATION_EPS * s {
                    a[(ll, ll - 1)] = 0.0;
                    l = ll;
                    break;
                }
            }
            let mut x = a[(nn, nn)];
            if l == nn {
                count.real += 1;
                if nn == 0 {
                    return Ok(count);
                }
                nn -= 1;
                break;
            }
            let mut y = a[(nn - 1, nn - 1)];
            let mut w = a[(nn, nn - 1)] * a[(nn - 1, nn)];
            if l == nn - 1 {
                let half_gap = 0.5 * (y - x);
                let discriminant = 4.0 * (half_gap * half_gap + w);
                if discriminant >= 0.0 {
                    count.real += 2;
                }
                if discriminant.abs() < BORDERLINE_DISCRIMINANT {
                    count.borderline += 1;
                    log::debug!("borderline 2x2 block discriminant {discriminant:e}");
                }
                if nn < 2 {
                    return Ok(count);
                }
                nn -= 2;
                break;
            }

            if its == cap {
                return Err(Error::QrNoConvergence { iterations: its });
            }
            if its > 0 && its % 10 == 0 {
                // exceptional shift
                for i in 0..=nn {
                    a[(i, i)] -= x;
                }
                let s = a[(nn, nn - 1)].abs() + a[(nn - 1, nn - 2)].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;

            let (mut p, mut q, mut r);
            let mut start = nn - 2;
            loop {
                let z = a[(start, start)];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a[(start + 1, start)] + a[(start, start + 1)];
                q = a[(start + 1, start + 1)] - z - rr - ss;
                r = a[(start + 2, start + 1)];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if start == l {
                    break;
                }
                let u = a[(start, start - 1)].abs() * (q.abs() + r.abs());
                let v = p.abs()
                    * (a[(start - 1, start - 1)].abs() + z.abs() + a[(start + 1, start + 1)].abs());
                if u + v == v {
                    break;
                }
                start -= 1;
            }
            for i in start + 2..=nn {
                a[(i, i - 2)] = 0.0;
                if i != start + 2 {
                    a[(i, i - 3)] = 0.0;
                }
            }

            for k in start..nn {
                if k != start {
                    p = a[(k, k - 1)];
                    q = a[(k + 1, k - 1)];
                    r = if k != nn - 1 { a[(k + 2, k - 1)] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = (p * p + q * q + r * r).sqrt().copysign(p);
                if s == 0.0 {
                    continue;
                }
                if k == start {
                    if l != start {
                        a[(k, k - 1)] = -a[(k, k - 1)];
                    }
                } else {
                    a[(k, k - 1)] = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                let z = r / s;
                q /= p;
                r /= p;
                for j in k..=nn {
                    let mut t = a[(k, j)] + q * a[(k + 1, j)];
                    if k != nn - 1 {
                        t += r * a[(k + 2, j)];
                        a[(k + 2, j)] -= t * z;
                    }
                    a[(k + 1, j)] -= t * y;
                    a[(k, j)] -= t * x;
                }
                for i in l..=nn.min(k + 3) {
                    let mut t = x * a[(i, k)] + y * a[(i, k + 1)];
                    if k != nn - 1 {
                        t += z * a[(i, k + 2)];
                        a[(i, k + 2)] -= t * r;
                    }
                    a[(i, k + 1)] -= t * q;
                    a[(i, k)] -= t;
                }
            }
        }
    }
}
