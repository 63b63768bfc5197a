//! Real-root isolation by uniform sign scan and bisection.
//!
//! This replaces graphical root reading: the scan walks a uniform grid over
//! the requested range, keeps every cell whose endpoint values have opposite
//! signs, and bisects each cell down to the requested tolerance. Roots of
//! even multiplicity that touch zero without crossing are invisible to a
//! sign scan and are not detected — a documented limitation, acceptable for
//! the low-degree characteristic polynomials this crate produces.
//!
//! The same machinery serves both exact polynomials ([`find_real_roots`])
//! and transcendental oracles ([`scan_and_bisect`] over any `f64 -> f64`
//! function).

use crate::error::{Error, Result};
use crate::poly::LambdaPoly;

/// Default number of scan cells: fine enough to separate the handful of
/// eigenvalues a truncated determinant carries.
pub const DEFAULT_SCAN_STEPS: usize = 10_000;

/// Default bracket width at which bisection stops.
pub const DEFAULT_TOL: f64 = 1e-12;

/// One isolated root with the bracket that pinned it down.
#[derive(Debug, Clone, PartialEq)]
pub struct RootEntry {
    /// Final bracket, `bracket_lo < root < bracket_hi`, endpoints of opposite sign.
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// Bracket midpoint after bisection.
    pub root: f64,
    /// `|f(root)|`.
    pub residual: f64,
}

/// All roots found in a scan, sorted ascending, with the scan parameters
/// that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    pub roots: Vec<RootEntry>,
    pub scan_lo: f64,
    pub scan_hi: f64,
    pub scan_steps: usize,
    pub tol: f64,
}

impl RootReport {
    fn empty(lo: f64, hi: f64, steps: usize, tol: f64) -> Self {
        RootReport {
            roots: Vec::new(),
            scan_lo: lo,
            scan_hi: hi,
            scan_steps: steps,
            tol,
        }
    }
}

/// `true` when `a` and `b` lie on opposite sides of zero. Zero itself counts
/// as nonnegative, so a grid point landing exactly on a root still produces
/// one sign change (against a negative neighbor) rather than none or two.
fn different_signs(a: f64, b: f64) -> bool {
    (a < 0.0) != (b < 0.0)
}

fn validate_scan(lo: f64, hi: f64, scan_steps: usize, tol: f64) -> Result<()> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidScan(format!(
            "range [{lo}, {hi}] must satisfy lo < hi"
        )));
    }
    if scan_steps < 2 {
        return Err(Error::InvalidScan(format!(
            "need at least 2 scan steps, got {scan_steps}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidScan(format!("tolerance {tol} must be > 0")));
    }
    Ok(())
}

/// Scans `f` over `[lo, hi]` with `scan_steps` uniform cells and bisects
/// every sign-changing cell until its width is at most `tol`.
///
/// Cells with non-finite endpoint values are skipped. Roots come back sorted
/// ascending; brackets are disjoint because they refine disjoint grid cells.
pub fn scan_and_bisect(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    scan_steps: usize,
    tol: f64,
) -> Result<RootReport> {
    validate_scan(lo, hi, scan_steps, tol)?;
    let mut report = RootReport::empty(lo, hi, scan_steps, tol);
    let step = (hi - lo) / scan_steps as f64;
    let grid = |i: usize| {
        if i == scan_steps {
            hi
        } else {
            lo + step * i as f64
        }
    };
    let mut x_prev = grid(0);
    let mut f_prev = f(x_prev);
    for i in 1..=scan_steps {
        let x_next = grid(i);
        let f_next = f(x_next);
        if f_prev.is_finite() && f_next.is_finite() && different_signs(f_prev, f_next) {
            report.roots.push(bisect(&f, x_prev, x_next, f_prev, tol));
        }
        x_prev = x_next;
        f_prev = f_next;
    }
    Ok(report)
}

/// Bisects a sign-changing bracket down to width `tol`.
fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut f_lo: f64, tol: f64) -> RootEntry {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket narrower than f64 spacing
        }
        let f_mid = f(mid);
        if different_signs(f_lo, f_mid) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    let root = 0.5 * (lo + hi);
    RootEntry {
        bracket_lo: lo,
        bracket_hi: hi,
        root,
        residual: f(root).abs(),
    }
}

/// Isolates the real roots of `p` on `[lo, hi]`.
///
/// A constant (or zero) polynomial has no isolated roots and yields an empty
/// report.
pub fn find_real_roots(
    p: &LambdaPoly,
    lo: f64,
    hi: f64,
    scan_steps: usize,
    tol: f64,
) -> Result<RootReport> {
    validate_scan(lo, hi, scan_steps, tol)?;
    if p.degree().is_none_or(|d| d == 0) {
        return Ok(RootReport::empty(lo, hi, scan_steps, tol));
    }
    scan_and_bisect(|x| p.evaluate_f64(x), lo, hi, scan_steps, tol)
}
