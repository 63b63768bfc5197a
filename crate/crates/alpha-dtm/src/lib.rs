//! Exact-rational solver for two-point boundary-value problems and
//! Sturm–Liouville eigenvalue problems, built on a blended Taylor transform.
//!
//! # The method
//!
//! A function on `[a, b]` is carried as its truncated Taylor coefficient
//! sequences at *both* endpoints (an [`EndpointJet`]). A blend parameter
//! `alpha` in `[0, 1]` mixes the two sequences,
//!
//! ```text
//! d_k = alpha·d_k(a) + (1 − alpha)·d_k(b),      x_alpha = alpha·a + (1 − alpha)·b,
//! ```
//!
//! giving a polynomial approximation `Σ d_k (x − x_alpha)^k` centered inside
//! the interval ([`AlphaSeries`]). At `alpha = 1` or `alpha = 0` this is the
//! classical one-point Taylor/DTM expansion; interior values trade pointwise
//! reproduction for a centered expansion whose error spreads evenly toward
//! both endpoints.
//!
//! Linear ODEs become coefficient recurrences. For a second-order problem
//! the first two blended coefficients `A`, `B` stay free, so:
//!
//! * **BVPs** ([`bvp`]): propagate the recurrence symbolically in `(A, B)`,
//!   impose the two boundary functionals, solve the resulting 2×2 rational
//!   system exactly. Boundary data and the recurrence hold with *zero*
//!   residual; truncation error appears only between the constraints.
//! * **Eigenvalue problems** ([`eig`]): for `y'' + λy = 0` the same
//!   construction yields a 2×2 matrix of exact polynomials in `λ`; its
//!   determinant is the truncated characteristic polynomial, whose real
//!   roots approximate the spectrum. The polynomial itself is exact and
//!   printable ([`LambdaPoly`]); only root isolation runs in floating point.
//!
//! Closed-form oracles for the reference problems live in [`exact`]; root
//! isolation in [`roots`]; the CLI front end in [`cli`].
//!
//! # Example
//!
//! Solve `y'' + y = 0`, `y(0) = 0`, `y(1) = 1` at `alpha = 1/2`, order 16,
//! and compare with the exact `sin(x)/sin(1)`:
//!
//! ```
//! use alpha_dtm::{
//!     solve_bvp, AlphaParam, BoundaryCondition, Endpoint, Interval, LinearOde2, Rational,
//! };
//! use num_traits::{One, Zero};
//!
//! let ode = LinearOde2::oscillator(Rational::one()); // y'' + 1·y = 0
//! let bc1 = BoundaryCondition::value(Endpoint::Left, Rational::zero()); // y(0) = 0
//! let bc2 = BoundaryCondition::value(Endpoint::Right, Rational::one()); // y(1) = 1
//! let sol = solve_bvp(&ode, &bc1, &bc2, &AlphaParam::half(), &Interval::unit(), 16).unwrap();
//!
//! let y = sol.series.evaluate_f64(0.5);
//! let exact = 0.5f64.sin() / 1.0f64.sin();
//! assert!((y - exact).abs() < 1e-10);
//! // The boundary data holds exactly, not approximately:
//! assert!(sol.boundary_residuals.0.eq(&Rational::zero()));
//! ```
//!
//! The `examples/` directory walks every major capability: jet calculus,
//! BVP solving, eigenvalue extraction, and blend/order sweeps.

pub mod bvp;
pub mod cli;
pub mod eig;
pub mod error;
pub mod exact;
pub mod poly;
pub mod roots;
pub mod transform;

pub use bvp::{
    assemble_system, error_report, propagate_recurrence, solve_bvp, BoundaryCondition, BvpSolution,
    ErrorReport, ErrorRow, LinearOde2, LinearSystem2, UnknownLinearSeq,
};
pub use eig::{
    characteristic_entries, parity_sequences, solve_eig, CharacteristicEntries, EigProblem,
    EigSolution, EigenPair,
};
pub use error::{Error, Result};
pub use exact::{dirichlet_solution, ExactCharFn, ExactEigenvalue};
pub use poly::LambdaPoly;
pub use roots::{
    find_real_roots, scan_and_bisect, RootEntry, RootReport, DEFAULT_SCAN_STEPS, DEFAULT_TOL,
};
pub use transform::{
    boundary_weights, parse_rational, rat, rational_to_f64, AlphaParam, AlphaSeries, Endpoint,
    EndpointJet, Interval, Rational, RealSeries,
};
