//! Error type shared by every module of the crate.

use std::fmt;

use crate::transform::Rational;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by jet arithmetic, the solvers, and config parsing.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two jets live on different intervals.
    IntervalMismatch,
    /// Two jets have different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// A derivative of order `requested` was asked of a jet of order `order`.
    InsufficientOrder { requested: usize, order: usize },
    /// Interval endpoints violate `a < b`.
    InvalidInterval,
    /// The blend parameter lies outside `[0, 1]`.
    InvalidAlpha(Rational),
    /// The truncation order is below the minimum the operation needs.
    InvalidOrder { min: usize, got: usize },
    /// A boundary condition with `c1 = c2 = 0` constrains nothing.
    InvalidBoundaryCondition,
    /// A boundary row of an eigenvalue problem is identically zero.
    InvalidBoundaryRow,
    /// The forcing polynomial has more coefficients than the truncation order admits.
    ForcingTooLong { len: usize, order: usize },
    /// Fewer than two samples requested for an error table.
    InvalidSamples(usize),
    /// Root scan parameters violate `lo < hi`, `steps >= 2`, or `tol > 0`.
    InvalidScan(String),
    /// The 2x2 boundary system has an exactly zero determinant.
    SingularSystem,
    /// Both rows of the characteristic matrix vanish at the given root.
    DegenerateRoot(f64),
    /// `mu` is (numerically) a Dirichlet eigenvalue, so `sin(mu x)/sin(mu)` is undefined.
    Resonance(f64),
    /// `mu` is not a root of the characteristic function.
    NotAnEigenvalue(f64),
    /// A scalar string is not an integer, a finite decimal, or a `p/q` fraction.
    ParseRational(String),
    /// A polynomial string does not follow the `Display` grammar of `LambdaPoly`.
    ParsePoly(String),
    /// A problem config violates its schema; the message names the offending key.
    Config(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IntervalMismatch => write!(f, "jets are defined on different intervals"),
            Error::OrderMismatch { left, right } => {
                write!(f, "jet orders differ: {left} vs {right}")
            }
            Error::InsufficientOrder { requested, order } => write!(
                f,
                "cannot differentiate {requested} times a jet of order {order}"
            ),
            Error::InvalidInterval => write!(f, "interval endpoints must satisfy a < b"),
            Error::InvalidAlpha(a) => write!(f, "alpha = {a} lies outside [0, 1]"),
            Error::InvalidOrder { min, got } => {
                write!(f, "truncation order must be at least {min}, got {got}")
            }
            Error::InvalidBoundaryCondition => {
                write!(f, "boundary condition needs c1 or c2 nonzero")
            }
            Error::InvalidBoundaryRow => {
                write!(f, "each boundary row needs a nonzero coefficient")
            }
            Error::ForcingTooLong { len, order } => write!(
                f,
                "forcing polynomial has {len} coefficients but order {order} admits at most {}",
                order + 1
            ),
            Error::InvalidSamples(n) => write!(f, "need at least 2 samples, got {n}"),
            Error::InvalidScan(msg) => write!(f, "invalid root scan: {msg}"),
            Error::SingularSystem => write!(f, "boundary system is singular"),
            Error::DegenerateRoot(l) => {
                write!(f, "characteristic matrix vanishes at lambda = {l}")
            }
            Error::Resonance(mu) => {
                write!(f, "mu = {mu} is a resonance (sin mu vanishes)")
            }
            Error::NotAnEigenvalue(mu) => {
                write!(f, "mu = {mu} is not a characteristic root")
            }
            Error::ParseRational(s) => write!(f, "cannot parse `{s}` as an exact rational"),
            Error::ParsePoly(msg) => write!(f, "cannot parse polynomial, {msg}"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
