use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::DenseMatrix;

/// Independent substream for trial `index` under `seed`.
///
/// ChaCha is counter based: the stream id selects a disjoint keystream, so
/// trial `i` draws the same numbers no matter which worker runs it.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Box-Muller standard normal generator; caches the second variate of each pair.
#[derive(Debug)]
pub struct NormalSampler<R> {
    rng: R,
    spare: Option<f64>,
}

impl<R: Rng> NormalSampler<R> {
    pub fn new(rng: R) -> Self {
        NormalSampler { rng, spare: None }
    }

    pub fn sample(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // 1 - u lies in (0, 1], keeping the log finite
        let u1 = 1.0 - self.rng.random::<f64>();
        let u2 = self.rng.random::<f64>();
        let radius = (-2.0 * u1.ln()).sqrt();
        let (sin, cos) = (TAU * u2).sin_cos();
        self.spare = Some(radius * sin);
        radius * cos
    }

    pub fn into_inner(self) -> R {
        self.rng
    }
}

/// Two independent real Ginibre matrices with unit-variance entries.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianMatrixPair {
    pub x: DenseMatrix,
    pub y: DenseMatrix,
}

impl GaussianMatrixPair {
    pub fn dim(&self) -> usize {
        self.x.dim()
    }

    pub fn product(&self) -> DenseMatrix {
        &self.x * &self.y
    }
}

/// Draws `X` then `Y`, each row by row.
///
/// Panics if `dim == 0`.
pub fn sample_pair<R: Rng>(dim: usize, rng: &mut R) -> GaussianMatrixPair {
    assert!(dim >= 1, "dimension must be at least 1");
    let mut normals = NormalSampler::new(rng);
    let mut draw =
        || DenseMatrix::from_row_major(dim, (0..dim * dim).map(|_| normals.sample()).collect());
    let x = draw();
    let y = draw();
    GaussianMatrixPair { x, y }
}
