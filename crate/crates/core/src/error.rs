use thiserror::Error;

use crate::exact::HalfInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("Gamma is undefined at non-positive argument {0}")]
    GammaPole(HalfInt),

    #[error("Gamma argument {name} = {value} is not a positive half-integer")]
    GammaArgument { name: &'static str, value: HalfInt },

    #[error("binomial coefficient C({n}, {k}) requested with k > n")]
    BinomialRange { n: u64, k: u64 },

    #[error("cannot add pi^({left}/2) and pi^({right}/2) terms")]
    ExponentMismatch { left: i64, right: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("series did not converge within {terms} terms")]
    SeriesDiverged { terms: usize },

    #[error("z = {0} is outside the series domain |1 - z| < 1")]
    OutsideSeriesDomain(f64),

    #[error("closed forms disagree at (j, k) = ({j}, {k}): {gamma_form} vs {pi_form}")]
    FormMismatch {
        j: u32,
        k: u32,
        gamma_form: String,
        pi_form: String,
    },

    #[error("kernel column {column} mixes pi exponents {first} and {found}")]
    KernelColumn {
        column: usize,
        first: i64,
        found: i64,
    },

    #[error("QR iteration did not converge after {iterations} iterations")]
    QrNoConvergence { iterations: usize },

    #[error("{discards} of {trials} Monte Carlo trials were discarded (limit 0.01%)")]
    ExcessiveDiscards { discards: u64, trials: u64 },
}

impl Error {
    /// Numeric failures (as opposed to bad input) map to a distinct exit status.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::SeriesDiverged { .. }
                | Error::FormMismatch { .. }
                | Error::KernelColumn { .. }
                | Error::ExponentMismatch { .. }
                | Error::QrNoConvergence { .. }
                | Error::ExcessiveDiscards { .. }
        )
    }
}
