use std::fmt;
use std::ops::{Index, IndexMut, Mul};

/// Square row-major `f64` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = DenseMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        DenseMatrix {
            dim,
            data: rows.concat(),
        }
    }

    /// Panics unless `data.len() == dim * dim`.
    pub fn from_row_major(dim: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), dim * dim, "expected {dim}x{dim} entries");
        DenseMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Reduces to upper Hessenberg form by Householder reflections
    /// `P A P`, an orthogonal similarity. Entries below the subdiagonal are
    /// set to exactly zero.
    pub fn to_hessenberg(&mut self) {
        let n = self.dim;
        let mut v = vec![0.0; n];
        for k in 0..n.saturating_sub(2) {
            let alpha_sq: f64 = (k + 1..n).map(|i| self[(i, k)].powi(2)).sum();
            let tail_sq = alpha_sq - self[(k + 1, k)].powi(2);
            if tail_sq == 0.0 {
                continue;
            }
            let x0 = self[(k + 1, k)];
            let alpha = -alpha_sq.sqrt().copysign(x0);
            v[k + 1] = x0 - alpha;
            for i in k + 2..n {
                v[i] = self[(i, k)];
            }
            let v_sq = v[k + 1].powi(2) + tail_sq;
            let beta = 2.0 / v_sq;

            // A <- (I - beta v v^T) A
            for j in k..n {
                let s: f64 = (k + 1..n).map(|i| v[i] * self[(i, j)]).sum();
                let s = beta * s;
                for i in k + 1..n {
                    self[(i, j)] -= s * v[i];
                }
            }
            // A <- A (I - beta v v^T)
            for i in 0..n {
                let s: f64 = (k + 1..n).map(|j| self[(i, j)] * v[j]).sum();
                let s = beta * s;
                for j in k + 1..n {
                    self[(i, j)] -= s * v[j];
                }
            }
            self[(k + 1, k)] = alpha;
            for i in k + 2..n {
                self[(i, k)] = 0.0;
            }
        }
    }

    pub fn is_upper_hessenberg(&self) -> bool {
        (0..self.dim).all(|i| (0..i.saturating_sub(1)).all(|j| self[(i, j)] == 0.0))
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;

    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.data.chunks(self.dim.max(1)) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:e}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_identity() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        let b = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(&a * &DenseMatrix::identity(2), a);
        assert_eq!((&a * &b).as_slice(), &[2.0, 1.0, 4.0, 3.0]);
    }

    #[test]
    fn hessenberg_preserves_invariants() {
        let rows: Vec<Vec<f64>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| ((i * 7 + j * 3) % 11) as f64 - 5.0 + 0.1 * j as f64)
                    .collect()
            })
            .collect();
        let a = DenseMatrix::from_rows(&rows);
        let mut h = a.clone();
        h.to_hessenberg();
        assert!(h.is_upper_hessenberg());
        assert!((h.trace() - a.trace()).abs() <= 1e-10 * a.trace().abs().max(1.0));
        assert!((h.frobenius_norm() - a.frobenius_norm()).abs() <= 1e-10 * a.frobenius_norm());
    }

    #[test]
    fn hessenberg_of_small_matrices_is_identity_map() {
        let mut a = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        let before = a.clone();
        a.to_hessenberg();
        assert_eq!(a, before);
    }
}
