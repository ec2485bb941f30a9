//! Exact arithmetic over big rationals and `Q * pi^(h/2)`.

mod approx;
mod gamma;
mod half_int;
mod monomial;

pub use approx::{pi_scaled, rational_to_f64, sqrt_pi_scaled, Scientific, WORKING_DIGITS};
pub use gamma::{binomial_exact, factorial, gamma_exact, pochhammer_exact};
pub use half_int::HalfInt;
pub use monomial::PiMonomial;

pub use num_rational::BigRational;
