//! Monte Carlo estimate of the probability that `X Y` has only real
//! eigenvalues, as an empirical check on the exact formula.

mod estimate;
mod matrix;
mod sampler;
mod schur;

pub use estimate::{estimate_prob, McEstimate, MAX_DISCARD_FRACTION, MC_CSV_HEADER};
pub use matrix::DenseMatrix;
pub use sampler::{sample_pair, trial_rng, GaussianMatrixPair, NormalSampler};
pub use schur::{classify_eigenvalues, real_eigen_count, EigenCount, BORDERLINE_DISCRIMINANT};
