//! Fraction-free determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn scale_rows(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
            (ints, lcm)
        })
        .unzip()
}

/// Exact determinant of a square rational matrix.
///
/// Each row is first multiplied by the lcm of its denominators, then the
/// integer matrix is reduced by Bareiss elimination, whose divisions are all
/// exact. Zero pivots are handled by row exchange; a singular matrix gives 0.
///
/// Panics if `rows` is not square.
pub fn det_bareiss(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let (ints, scales) = scale_rows(rows);
    let scale = scales.iter().product::<BigInt>();
    BigRational::new(det_bareiss_int(ints), scale)
}

/// Leading principal minors `det A[..m, ..m]` for `m = 1, 2, ...`.
///
/// Without row exchanges, the `m`-th Bareiss pivot is exactly the `m`-th
/// leading minor, so one elimination yields all of them. The output stops
/// after the first zero minor, where elimination would need a pivot swap.
pub fn leading_principal_minors(rows: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let (mut a, scales) = scale_rows(rows);
    let mut minors = Vec::with_capacity(n);
    let mut scale = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        scale *= &scales[k];
        let pivot = a[k][k].clone();
        minors.push(BigRational::new(pivot.clone(), scale.clone()));
        if pivot.is_zero() {
            break;
        }
        let (pivot_rows, rest) = a.split_at_mut(k + 1);
        let pivot_row = &pivot_rows[k];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * &pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot;
    }
    minors
}

/// Bareiss elimination over the integers, consuming the matrix.
pub fn det_bareiss_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (pivot_rows, rest) = a.split_at_mut(k + 1);
        let pivot_row = &pivot_rows[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
