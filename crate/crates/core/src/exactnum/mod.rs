//! Exact arithmetic substrate.
//!
//! Rationals are `num_rational::BigRational`. Multivariate polynomials live
//! over a fixed, globally ordered variable universe
//!
//!   b < t < N < M < hbar < z < p_1 < ... < p_P
//!
//! so that exponent vectors from different modules compare directly.
//! Fractions of polynomials are kept unreduced (only the integer content and
//! sign of the denominator are normalized) and compared by cross-multiplication.
//! Univariate polynomials and the univariate fraction field used for
//! b-scalars carry exact gcd normalization.

mod graded;
mod linsolve;
mod mpoly;
mod ratfrac;
mod serial;
mod series;
mod unipoly;

pub use graded::{graded_series_exp, graded_series_log, PolySeries, Truncation};
pub use linsolve::{bareiss_solve, BareissSolution};
pub use mpoly::{Monomial, MPoly};
pub use ratfrac::{frac_equal, Bindings, RatFrac};
pub use serial::{FracRecord, PolyRecord, SerialError};
pub use series::{series_at_infinity, TruncSeries};
pub use unipoly::{BFrac, UniPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

pub type Rational = BigRational;

/// Largest power-sum index `P` carried by the variable universe.
pub const MAX_P: usize = 12;

/// Number of variables in the universe.
pub const NVARS: usize = 6 + MAX_P;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("denominator vanishes under substitution")]
    DenominatorVanishes,
    #[error("pole at infinity: numerator degree {num} exceeds denominator degree {den}")]
    PoleAtInfinity { num: u32, den: u32 },
    #[error("series has a nonzero constant term in the grading")]
    NonzeroConstantTerm,
    #[error("series precision exhausted: requested order {requested}, available {available}")]
    PrecisionExhausted { requested: usize, available: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular linear system")]
    SingularSystem,
    #[error("power-sum index {0} outside 1..={MAX_P}")]
    PowerSumIndex(usize),
}

/// A variable of the fixed universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    B,
    T,
    N,
    M,
    Hbar,
    Z,
    /// Power sum `p_i`, `1 <= i <= MAX_P`.
    P(u8),
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::B => 0,
            Var::T => 1,
            Var::N => 2,
            Var::M => 3,
            Var::Hbar => 4,
            Var::Z => 5,
            Var::P(i) => {
                let i = i as usize;
                assert!((1..=MAX_P).contains(&i), "power-sum index {i} out of range");
                5 + i
            }
        }
    }

    pub fn from_index(idx: usize) -> Var {
        match idx {
            0 => Var::B,
            1 => Var::T,
            2 => Var::N,
            3 => Var::M,
            4 => Var::Hbar,
            5 => Var::Z,
            i if i < NVARS => Var::P((i - 5) as u8),
            _ => panic!("variable index {idx} out of range"),
        }
    }

    /// Checked constructor for power sums.
    pub fn p(i: usize) -> Result<Var, ExactError> {
        if (1..=MAX_P).contains(&i) {
            Ok(Var::P(i as u8))
        } else {
            Err(ExactError::PowerSumIndex(i))
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::B => "b".into(),
            Var::T => "t".into(),
            Var::N => "N".into(),
            Var::M => "M".into(),
            Var::Hbar => "hbar".into(),
            Var::Z => "z".into(),
            Var::P(i) => format!("p_{i}"),
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        match s {
            "b" => Some(Var::B),
            "t" => Some(Var::T),
            "N" => Some(Var::N),
            "M" => Some(Var::M),
            "hbar" => Some(Var::Hbar),
            "z" => Some(Var::Z),
            _ => {
                let i: usize = s.strip_prefix("p_")?.parse().ok()?;
                Var::p(i).ok()
            }
        }
    }

    pub fn all() -> impl Iterator<Item = Var> {
        (0..NVARS).map(Var::from_index)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

// ---------------------------------------------------------------------------
// rational helpers

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Format as `p/q` (always with an explicit denominator).
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `p/q` or `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub(crate) fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.gcd(b)
}

pub(crate) fn int_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}
