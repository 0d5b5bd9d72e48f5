//! Exact arithmetic for the counting series of character stacks of
//! non-orientable surfaces.
//!
//! The crate is organized in layers:
//!
//! * [`poly`], [`gcd`], [`ratfun`] — sparse multivariate Laurent polynomials
//!   over big rationals, multivariate gcd, and canonically normalized
//!   rational functions.  Everything downstream is exact.
//! * [`series`], [`plethysm`] — truncated graded series over a coefficient
//!   domain carrying Adams operations, with plethystic Log/Exp.
//! * [`partitions`], [`symfunc`], [`macdonald`] — partitions with hook
//!   statistics, symmetric functions in several variable sets, and modified
//!   Macdonald polynomials computed by the combinatorial filling formula.
//! * [`nonorient`] — the closed (unpunctured) surface engine: involution
//!   counts, the `Z`/`V`/`W`/`M` series pipeline, Γ-orbit counts and the
//!   triple product formula.
//! * [`punctured`] — the punctured surface engine: the Cauchy kernel,
//!   `HH` values, E-series and conjectural mixed Poincaré series.
//! * [`oracle`] — brute-force ground truth over small `GL_n(F_q)`.
//! * [`report`] — machine-readable pass/fail reports shared by the
//!   verification entry points and the CLI.

pub mod gcd;
pub mod macdonald;
pub mod nonorient;
pub mod oracle;
pub mod partitions;
pub mod plethysm;
pub mod poly;
pub mod punctured;
pub mod ratfun;
pub mod report;
pub mod series;
pub mod symbol;
pub mod symfunc;

use thiserror::Error;

/// Errors shared across the crate.  Each variant corresponds to a violated
/// precondition of some operation; computations never silently coerce.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division is not exact: {0}")]
    DivisionNotExact(String),
    #[error("division by zero: {0}")]
    ZeroDivisor(String),
    #[error("log requires constant term 1, found {0}")]
    LogOfNonUnit(String),
    #[error("exp requires constant term 0, found {0}")]
    ExpOfNonzeroConstant(String),
    #[error("series inverse requires an invertible constant term")]
    InverseOfNonUnit,
    #[error("result depends on odd powers of {0}; not a function of its square")]
    OddPowersRemain(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("cutoff exceeded: {0}")]
    CutoffExceeded(String),
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("argument out of range: {0}")]
    RangeError(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("function is not constant on conjugacy classes: {0}")]
    NotClassConstant(String),
    #[error("integrality violated: {0}")]
    IntegralityViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand used throughout: arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
/// Shorthand used throughout: arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// `Rat` from an `i64`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `Rat` from an `i64` fraction.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
