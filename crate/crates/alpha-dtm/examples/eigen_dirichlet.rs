//! Dirichlet spectrum sanity check: `y'' + λy = 0` with `y(0) = y(1) = 0`
//! has the classical eigenvalues `λ_n = (nπ)²` and eigenfunctions
//! `sin(nπx)`. The truncated determinant recovers them, and its accuracy
//! degrades gracefully with the mode number — higher modes need more terms.
//!
//! Run with: `cargo run --example eigen_dirichlet`

use alpha_dtm::{solve_eig, AlphaParam, EigProblem, DEFAULT_SCAN_STEPS, DEFAULT_TOL};
use std::f64::consts::PI;

fn main() {
    let problem = EigProblem::dirichlet_unit(AlphaParam::half(), 16).unwrap();
    let sol = solve_eig(&problem, 0.5, 120.0, 3, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();

    println!("Dirichlet problem, alpha = 1/2, order 16:");
    println!("  n   lambda_hat            (n*pi)^2              rel. error");
    for (i, pair) in sol.pairs.iter().enumerate() {
        let n = i + 1;
        let exact = (n as f64 * PI).powi(2);
        let rel = (pair.lambda_hat - exact).abs() / exact;
        println!(
            "  {n}   {:<20.14}  {:<20.14}  {rel:.3e}",
            pair.lambda_hat, exact
        );
    }

    // The first eigenfunction should be proportional to sin(pi x): compare
    // the recovered series against the normalized sine on a coarse grid.
    let y = &sol.pairs[0].eigenfunction;
    let scale = y.evaluate(0.5); // sin(pi/2) = 1 at the symmetry point
    println!("\nfirst eigenfunction vs sin(pi·x) (both scaled to 1 at x = 1/2):");
    println!("  x      series           sine             |difference|");
    for i in 0..=4 {
        let x = i as f64 / 4.0;
        let series = y.evaluate(x) / scale;
        let sine = (PI * x).sin();
        println!(
            "  {x:.2}   {series:<15.10}  {sine:<15.10}  {:.2e}",
            (series - sine).abs()
        );
    }

    // The blend parameter matters even for eigenvalues: centering the
    // expansion at the midpoint roughly doubles the effective resolution,
    // and the symmetric alpha = 1/2 is markedly more accurate than either
    // endpoint expansion at the same order.
    println!("\nfirst eigenvalue across blend parameters, order 16:");
    for (label, alpha) in [
        ("alpha = 0  ", AlphaParam::right()),
        (
            "alpha = 1/4",
            AlphaParam::new(alpha_dtm::rat(1, 4)).unwrap(),
        ),
        ("alpha = 1/2", AlphaParam::half()),
        ("alpha = 1  ", AlphaParam::left()),
    ] {
        let problem = EigProblem::dirichlet_unit(alpha, 16).unwrap();
        let sol = solve_eig(&problem, 0.5, 50.0, 1, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
        let rel = (sol.pairs[0].lambda_hat - PI * PI).abs() / (PI * PI);
        println!(
            "  {label}  lambda_1 = {:.14}  rel. error {rel:.3e}",
            sol.pairs[0].lambda_hat
        );
    }
}
