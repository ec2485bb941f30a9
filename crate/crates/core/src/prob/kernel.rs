use std::collections::HashMap;
use std::sync::RwLock;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{gamma_exact, HalfInt, PiMonomial};
use crate::meijer::{meijer_g_jk, JkIndex};

/// Memo of kernel entries `G(j, k)`, shared across table rows and threads.
///
/// Concurrent inserts of the same key write identical values, so a lost race
/// only costs a recomputation.
#[derive(Debug, Default)]
pub struct KernelCache {
    entries: RwLock<HashMap<(u32, u32), PiMonomial>>,
}

impl KernelCache {
    pub fn new() -> Self {
        KernelCache::default()
    }

    pub fn get(&self, j: u32, k: u32) -> Result<PiMonomial> {
        if let Some(v) = self.entries.read().expect("cache lock").get(&(j, k)) {
            return Ok(v.clone());
        }
        let value = meijer_g_jk(JkIndex::new(j, k)?)?;
        self.entries
            .write()
            .expect("cache lock")
            .insert((j, k), value.clone());
        Ok(value)
    }

    /// Evaluates every missing entry with `j <= max_j`, `k <= max_k` in parallel.
    pub fn prefill(&self, max_j: u32, max_k: u32) -> Result<()> {
        let missing: Vec<(u32, u32)> = {
            let map = self.entries.read().expect("cache lock");
            (1..=max_j)
                .flat_map(|j| (1..=max_k).map(move |k| (j, k)))
                .filter(|key| !map.contains_key(key))
                .collect()
        };
        let computed = missing
            .into_par_iter()
            .map(|(j, k)| Ok(((j, k), meijer_g_jk(JkIndex::new(j, k)?)?)))
            .collect::<Result<Vec<_>>>()?;
        self.entries.write().expect("cache lock").extend(computed);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Determinant argument for `p_{N,N}`.
///
/// Even `N`: `[G(j, k)]` for `j, k = 1..N/2`. Odd `N`: rows `j = 1..(N+1)/2`,
/// columns `G(j, 1..(N-1)/2)` followed by `Gamma^2(j - 1/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelMatrix {
    dim: usize,
    entries: Vec<Vec<PiMonomial>>,
    column_pi_exponents: Vec<i64>,
}

impl KernelMatrix {
    /// Checks that each column carries a single pi power.
    pub fn from_entries(entries: Vec<Vec<PiMonomial>>) -> Result<Self> {
        let dim = entries.len();
        if entries.iter().any(|r| r.len() != dim) {
            return Err(Error::Domain("kernel matrix must be square".into()));
        }
        let mut column_pi_exponents = Vec::with_capacity(dim);
        for col in 0..dim {
            let mut exponent = None;
            for row in &entries {
                let x = &row[col];
                if x.is_zero() {
                    continue;
                }
                match exponent {
                    None => exponent = Some(x.half_pi_exponent()),
                    Some(e) if e != x.half_pi_exponent() => {
                        return Err(Error::KernelColumn {
                            column: col,
                            first: e,
                            found: x.half_pi_exponent(),
                        })
                    }
                    Some(_) => {}
                }
            }
            column_pi_exponents.push(exponent.unwrap_or(0));
        }
        Ok(KernelMatrix {
            dim,
            entries,
            column_pi_exponents,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Vec<PiMonomial>] {
        &self.entries
    }

    pub fn column_pi_exponents(&self) -> &[i64] {
        &self.column_pi_exponents
    }

    /// The kernel with each column's pi power divided out.
    pub fn residual(&self) -> Vec<Vec<BigRational>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| x.coeff().clone()).collect())
            .collect()
    }

    /// Half-pi exponent carried by the determinant.
    pub fn total_pi_exponent(&self) -> i64 {
        self.column_pi_exponents.iter().sum()
    }
}

pub fn build_kernel(n: u32, cache: &KernelCache) -> Result<KernelMatrix> {
    if n < 2 {
        return Err(Error::Domain(format!("kernel needs N >= 2, got {n}")));
    }
    let half = n / 2;
    let entries = if n.is_multiple_of(2) {
        (1..=half)
            .map(|j| {
                (1..=half)
                    .map(|k| cache.get(j, k))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        let rows = n.div_ceil(2);
        (1..=rows)
            .map(|j| {
                let mut row = (1..=half)
                    .map(|k| cache.get(j, k))
                    .collect::<Result<Vec<_>>>()?;
                row.push(gamma_exact(HalfInt::half_odd(j as i64 - 1))?.pow(2));
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?
    };
    KernelMatrix::from_entries(entries)
}
