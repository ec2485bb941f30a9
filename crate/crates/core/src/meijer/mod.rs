//! The Meijer G class `G^{2,2}_{3,3}(z | a1, a2, c; b1, b2, c + n)`.
//!
//! [`exact`] evaluates it at `z = 1` in `Q * pi^(h/2)`. [`general_z`] is a
//! float-only evaluator of the finite regularized-2F1 sum for `|1 - z| < 1`.
//! The two paths never share code beyond parameter validation.

pub mod exact;
pub mod general_z;
pub mod identities;
pub mod special;

pub use exact::{meijer_g_jk, meijer_g_unit};
pub use general_z::meijer_g_general_z;
pub use identities::{check_3f2_identity, derivative_recursion_check, IdentityCheck};
pub use special::{gamma_f64, hyp2f1_reg, SeriesConfig};

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::HalfInt;

/// Parameters `(a1, a2, b1, b2, c, n)` of `G^{2,2}_{3,3}(z | a1, a2, c; b1, b2, c + n)`.
///
/// Any combination can be constructed; eligibility for the closed forms is
/// checked when an evaluator is called.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MeijerParams {
    pub a1: HalfInt,
    pub a2: HalfInt,
    pub b1: HalfInt,
    pub b2: HalfInt,
    pub c: HalfInt,
    pub n: u32,
}

/// The Gamma arguments shared by the exact and float evaluators.
#[derive(Debug, Clone, Copy)]
pub(crate) struct GammaArgs {
    /// `1 - a1 + b2`
    pub outer1: HalfInt,
    /// `1 - a2 + b2`
    pub outer2: HalfInt,
    /// `1 - a1 + b1`, shifted by `mu` in the sum
    pub upper1: HalfInt,
    /// `1 - a2 + b1`, shifted by `mu`
    pub upper2: HalfInt,
    /// `2 - a1 - a2 + b1 + b2`, shifted by `mu`
    pub lower: HalfInt,
    /// `c - b1`, base of the Pochhammer factor
    pub shift: HalfInt,
}

impl MeijerParams {
    /// The substitution `a1 = a2 = 5/2 - j`, `b1 = 1`, `b2 = k + 1`,
    /// `c = 2`, `n = k - 1` that yields the real-eigenvalue kernel.
    pub fn from_jk(idx: JkIndex) -> Self {
        let a = HalfInt::from_twice(5 - 2 * idx.j as i64);
        MeijerParams {
            a1: a,
            a2: a,
            b1: HalfInt::ONE,
            b2: HalfInt::int(idx.k as i64 + 1),
            c: HalfInt::int(2),
            n: idx.k - 1,
        }
    }

    /// Validates that every Gamma argument in the finite sum is a positive
    /// half-integer. The mu-shifted arguments only grow with mu, so mu = 0
    /// is the binding case.
    pub(crate) fn gamma_args(&self) -> Result<GammaArgs> {
        let one = HalfInt::ONE;
        let args = GammaArgs {
            outer1: one - self.a1 + self.b2,
            outer2: one - self.a2 + self.b2,
            upper1: one - self.a1 + self.b1,
            upper2: one - self.a2 + self.b1,
            lower: HalfInt::int(2) - self.a1 - self.a2 + self.b1 + self.b2,
            shift: self.c - self.b1,
        };
        for (name, value) in [
            ("1-a1+b2", args.outer1),
            ("1-a2+b2", args.outer2),
            ("1-a1+b1", args.upper1),
            ("1-a2+b1", args.upper2),
            ("2-a1-a2+b1+b2", args.lower),
        ] {
            if !value.is_positive() {
                return Err(Error::GammaArgument { name, value });
            }
        }
        Ok(args)
    }
}

impl fmt::Display for MeijerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G(a1={}, a2={}, c={}; b1={}, b2={}, c+n={})",
            self.a1,
            self.a2,
            self.c,
            self.b1,
            self.b2,
            self.c.add_int(self.n as i64)
        )
    }
}

/// Row/column index `(j, k)` of the kernel, both at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JkIndex {
    j: u32,
    k: u32,
}

impl JkIndex {
    pub fn new(j: u32, k: u32) -> Result<Self> {
        if j == 0 || k == 0 {
            return Err(Error::Domain(format!(
                "j and k must be >= 1, got ({j}, {k})"
            )));
        }
        Ok(JkIndex { j, k })
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}
