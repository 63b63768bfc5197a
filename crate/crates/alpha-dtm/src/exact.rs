//! Closed-form oracles for the reference problems.
//!
//! Everything the series solvers approximate has a classical closed form
//! here: the Dirichlet solution `sin(μx)/sin(μ)`, the transcendental
//! characteristic function of the general two-point problem, its bracketed
//! roots (the exact eigenvalues `λ = μ²`), and the exact eigenfunctions
//! `C·cos(μx) + D·sin(μx)`. Tests measure the solver modules against this
//! module; nothing here depends on the transform machinery.
//!
//! Root-finding runs on the sin/cos polynomial form of the characteristic
//! function, which is continuous everywhere — never on the equivalent
//! `tan μ` form, whose poles would confuse a sign scan.

use crate::error::{Error, Result};
use crate::roots::{scan_and_bisect, RootEntry};

/// Guard below which `sin μ` counts as vanishing (resonance).
const RESONANCE_EPS: f64 = 1e-12;

/// Exact solution of `y'' + μ²y = 0`, `y(0) = 0`, `y(1) = 1`:
/// `sin(μx)/sin(μ)`.
///
/// Fails when `μ` is (numerically) a Dirichlet eigenvalue, where the BVP has
/// no unique solution.
pub fn dirichlet_solution(mu: f64, x: f64) -> Result<f64> {
    let sin_mu = mu.sin();
    if sin_mu.abs() <= RESONANCE_EPS {
        return Err(Error::Resonance(mu));
    }
    Ok((mu * x).sin() / sin_mu)
}

/// The boundary matrix of `y'' + λy = 0` with `A11·y(0) + A12·y'(0) = 0`,
/// `A21·y(1) + A22·y'(1) = 0`, carrying its transcendental characteristic
/// function in `μ` (`λ = μ²`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactCharFn {
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
}

/// One exact eigenvalue: the bisected root `μ` with its bracket, and
/// `λ = μ²`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactEigenvalue {
    /// Root data in the `μ` variable (`entry.root` is `μ`).
    pub entry: RootEntry,
    /// `μ²`.
    pub lambda: f64,
}

impl ExactEigenvalue {
    pub fn mu(&self) -> f64 {
        self.entry.root
    }
}

impl ExactCharFn {
    /// Requires each row `(Ai1, Ai2)` nonzero.
    pub fn new(a11: f64, a12: f64, a21: f64, a22: f64) -> Result<Self> {
        if (a11 == 0.0 && a12 == 0.0) || (a21 == 0.0 && a22 == 0.0) {
            return Err(Error::InvalidBoundaryRow);
        }
        Ok(ExactCharFn { a11, a12, a21, a22 })
    }

    /// The reference Robin matrix `(1, 1; 1, −1)`.
    pub fn robin() -> Self {
        ExactCharFn {
            a11: 1.0,
            a12: 1.0,
            a21: 1.0,
            a22: -1.0,
        }
    }

    /// The Dirichlet matrix `(1, 0; 1, 0)` with spectrum `(nπ)²`.
    pub fn dirichlet() -> Self {
        ExactCharFn {
            a11: 1.0,
            a12: 0.0,
            a21: 1.0,
            a22: 0.0,
        }
    }

    /// The characteristic value
    /// `(A11·A21 + μ²·A12·A22)·sin μ − μ·(A12·A21 − A11·A22)·cos μ`;
    /// eigenvalues are `μ²` at its positive zeros.
    pub fn char_value(&self, mu: f64) -> f64 {
        (self.a11 * self.a21 + mu * mu * self.a12 * self.a22) * mu.sin()
            - mu * (self.a12 * self.a21 - self.a11 * self.a22) * mu.cos()
    }

    /// Magnitude scale of the two `char_value` terms at `μ`, for relative
    /// residual checks.
    fn char_scale(&self, mu: f64) -> f64 {
        let s = (self.a11 * self.a21).abs()
            + mu * mu * (self.a12 * self.a22).abs()
            + mu.abs() * ((self.a12 * self.a21).abs() + (self.a11 * self.a22).abs());
        s.max(1.0)
    }

    /// Brackets and bisects the roots of `char_value` on `[mu_lo, mu_hi]`,
    /// attaching `λ = μ²` to each. Requires `0 < mu_lo < mu_hi`: the trivial
    /// root `μ = 0` is excluded by keeping the range positive.
    pub fn exact_eigenvalues(
        &self,
        mu_lo: f64,
        mu_hi: f64,
        scan_steps: usize,
        tol: f64,
    ) -> Result<Vec<ExactEigenvalue>> {
        if !(mu_lo > 0.0) {
            return Err(Error::InvalidScan(format!(
                "mu range must start above 0, got {mu_lo}"
            )));
        }
        let report = scan_and_bisect(|mu| self.char_value(mu), mu_lo, mu_hi, scan_steps, tol)?;
        Ok(report
            .roots
            .into_iter()
            .map(|entry| ExactEigenvalue {
                lambda: entry.root * entry.root,
                entry,
            })
            .collect())
    }

    /// Unit-norm `(C, D)` with `y = C·cos(μx) + D·sin(μx)` satisfying both
    /// boundary rows, taken from the better-conditioned row of the exact
    /// 2×2 system; sign fixed by making the first nonzero component
    /// positive. Fails when `μ` is not (numerically) a characteristic root.
    pub fn nullvector(&self, mu: f64) -> Result<(f64, f64)> {
        if self.char_value(mu).abs() > 1e-8 * self.char_scale(mu) {
            return Err(Error::NotAnEigenvalue(mu));
        }
        // Substituting y = C cos(μx) + D sin(μx) into the two conditions:
        // row 1: A11·C + μA12·D; row 2 at x = 1 collects cos/sin of μ.
        let rows = [
            [self.a11, mu * self.a12],
            [
                self.a21 * mu.cos() - mu * self.a22 * mu.sin(),
                self.a21 * mu.sin() + mu * self.a22 * mu.cos(),
            ],
        ];
        let norm = |r: &[f64; 2]| r[0].abs().max(r[1].abs());
        let row = if norm(&rows[0]) >= norm(&rows[1]) {
            rows[0]
        } else {
            rows[1]
        };
        let (mut c, mut d) = (-row[1], row[0]);
        let len = c.hypot(d);
        if !(len > 0.0) || !len.is_finite() {
            return Err(Error::DegenerateRoot(mu));
        }
        c /= len;
        d /= len;
        if c < 0.0 || (c == 0.0 && d < 0.0) {
            c = -c;
            d = -d;
        }
        Ok((c, d))
    }

    /// Value at `x` of the exact eigenfunction attached to the root `μ`.
    pub fn exact_eigenfunction(&self, mu: f64, x: f64) -> Result<f64> {
        let (c, d) = self.nullvector(mu)?;
        Ok(c * (mu * x).cos() + d * (mu * x).sin())
    }
}
