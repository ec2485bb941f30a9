use rayon::prelude::*;

use super::sampler::{sample_pair, trial_rng};
use super::schur::classify_eigenvalues;
use crate::error::{Error, Result};
use crate::exact::Scientific;

/// Largest tolerated share of discarded trials.
pub const MAX_DISCARD_FRACTION: f64 = 1e-4;

pub const MC_CSV_HEADER: [&str; 7] = [
    "dim",
    "trials",
    "successes",
    "estimate",
    "std_error",
    "discards",
    "seed",
];

#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub dim: usize,
    /// Trials that produced a classification; discards are excluded.
    pub trials: u64,
    pub successes: u64,
    /// `successes / trials`
    pub estimate: f64,
    /// `sqrt(estimate (1 - estimate) / trials)`
    pub std_error: f64,
    pub seed: u64,
    /// Trials dropped because the QR iteration did not converge.
    pub discards: u64,
    /// Counted trials with a 2x2 block discriminant near zero.
    pub borderline: u64,
}

impl McEstimate {
    pub fn csv_fields(&self) -> [String; 7] {
        [
            self.dim.to_string(),
            self.trials.to_string(),
            self.successes.to_string(),
            six_digits(self.estimate),
            six_digits(self.std_error),
            self.discards.to_string(),
            self.seed.to_string(),
        ]
    }
}

fn six_digits(x: f64) -> String {
    Scientific::from_f64(x, 6).map_or_else(|| x.to_string(), |s| s.to_string())
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    counted: u64,
    successes: u64,
    discards: u64,
    borderline: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            counted: self.counted + o.counted,
            successes: self.successes + o.successes,
            discards: self.discards + o.discards,
            borderline: self.borderline + o.borderline,
        }
    }
}

fn run_trial(dim: usize, seed: u64, index: u64) -> Tally {
    let pair = sample_pair(dim, &mut trial_rng(seed, index));
    match classify_eigenvalues(&pair.product()) {
        Ok(c) => {
            assert_eq!((dim - c.real) % 2, 0, "complex eigenvalues must pair up");
            Tally {
                counted: 1,
                successes: (c.real == dim) as u64,
                discards: 0,
                borderline: (c.borderline > 0) as u64,
            }
        }
        Err(e) => {
            log::warn!("discarding trial {index} (seed {seed}, dim {dim}): {e}");
            Tally {
                discards: 1,
                ..Tally::default()
            }
        }
    }
}

/// Fraction of `trials` Gaussian pairs whose product has only real eigenvalues.
///
/// Trial `i` always uses substream `(seed, i)`, so the result does not depend
/// on `workers`.
pub fn estimate_prob(dim: usize, trials: u64, seed: u64, workers: usize) -> Result<McEstimate> {
    if dim == 0 {
        return Err(Error::Domain("dimension must be >= 1".into()));
    }
    if trials == 0 {
        return Err(Error::Domain("trials must be >= 1".into()));
    }
    if workers == 0 {
        return Err(Error::Domain("workers must be >= 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    let tally = pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| run_trial(dim, seed, i))
            .reduce(Tally::default, Tally::merge)
    });
    if tally.borderline > 0 {
        log::info!(
            "{} trials had a near-zero block discriminant",
            tally.borderline
        );
    }
    if tally.discards as f64 >= MAX_DISCARD_FRACTION * trials as f64 || tally.counted == 0 {
        return Err(Error::ExcessiveDiscards {
            discards: tally.discards,
            trials,
        });
    }
    let estimate = tally.successes as f64 / tally.counted as f64;
    Ok(McEstimate {
        dim,
        trials: tally.counted,
        successes: tally.successes,
        estimate,
        std_error: (estimate * (1.0 - estimate) / tally.counted as f64).sqrt(),
        seed,
        discards: tally.discards,
        borderline: tally.borderline,
    })
}
