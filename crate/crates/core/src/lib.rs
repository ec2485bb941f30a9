//! Exact closed forms for the Meijer G-functions
//! `G^{2,2}_{3,3}(z | a1, a2, c; b1, b2, c + n)` and the probability that
//! every eigenvalue of `X Y` is real, for `X`, `Y` independent `N x N` real
//! Ginibre matrices.
//!
//! Values live in the monomial ring `Q * pi^(h/2)` ([`exact::PiMonomial`]).
//! The float side ([`meijer::special`], [`meijer::general_z`]) and the
//! Monte Carlo harness ([`mc`]) exist to cross-check the exact side.

pub mod error;
pub mod exact;
pub mod mc;
pub mod meijer;
pub mod prob;

pub use error::{Error, Result};
pub use exact::{BigRational, HalfInt, PiMonomial};
pub use meijer::{JkIndex, MeijerParams};
