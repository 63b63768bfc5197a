//! Eigenvalues of `y'' + λy = 0` under Robin conditions
//!
//! ```text
//! y(0) + y'(0) = 0,   y(1) − y'(1) = 0,
//! ```
//!
//! via the truncated characteristic determinant — an *exact* polynomial in
//! λ — against the transcendental truth `(1 − μ²)sin μ − 2μ cos μ = 0`,
//! `λ = μ²`.
//!
//! Run with: `cargo run --example eigen_robin`

use alpha_dtm::{
    characteristic_entries, solve_eig, AlphaParam, EigProblem, ExactCharFn, DEFAULT_SCAN_STEPS,
    DEFAULT_TOL,
};

fn main() {
    // Order 6 keeps the polynomial small enough to read whole.
    let problem = EigProblem::robin_unit(AlphaParam::half(), 6).unwrap();
    let entries = characteristic_entries(&problem).unwrap();
    println!("characteristic entries at alpha = 1/2, order 6:");
    println!("  P11 = {}", entries.p11);
    println!("  P12 = {}", entries.p12);
    println!("  P21 = {}", entries.p21);
    println!("  P22 = {}", entries.p22);
    println!("  det = {}", entries.determinant());
    println!("(all coefficients exact; the determinant string re-parses losslessly)");

    // The exact spectrum, from the closed-form characteristic function.
    let oracle = ExactCharFn::robin();
    let exact = oracle
        .exact_eigenvalues(1e-3, 50f64.sqrt(), DEFAULT_SCAN_STEPS, DEFAULT_TOL)
        .unwrap();
    println!("\nexact spectrum on lambda in (0, 50):");
    for (n, root) in exact.iter().enumerate() {
        println!(
            "  mu_{} = {:.12}   lambda_{} = {:.12}",
            n + 1,
            root.mu(),
            n + 1,
            root.lambda
        );
    }

    // Truncated-determinant approximations, order by order.
    println!("\nfirst eigenvalue of the truncated determinant:");
    println!("  order   lambda_hat          rel. error vs exact");
    for order in [6, 10, 14, 18, 20] {
        let problem = EigProblem::robin_unit(AlphaParam::half(), order).unwrap();
        let sol = solve_eig(&problem, 0.0, 50.0, 1, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
        let lambda_hat = sol.pairs[0].lambda_hat;
        let rel = (lambda_hat - exact[0].lambda).abs() / exact[0].lambda;
        println!("  {order:>5}   {lambda_hat:<18.13}  {rel:.3e}");
    }

    // At a healthy order the whole eigen-triple is usable: the nullvector
    // solves the 2x2 system and the eigenfunction satisfies both boundary
    // functionals to floating-point accuracy.
    let problem = EigProblem::robin_unit(AlphaParam::half(), 20).unwrap();
    let sol = solve_eig(&problem, 0.0, 50.0, 3, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
    println!("\norder 20, first {} eigenpairs:", sol.pairs.len());
    for (n, pair) in sol.pairs.iter().enumerate() {
        let y = &pair.eigenfunction;
        let left = y.evaluate(0.0) + y.evaluate_derivative(0.0);
        let right = y.evaluate(1.0) - y.evaluate_derivative(1.0);
        println!(
            "  lambda_{} = {:.12}  (A, B) = ({:+.6}, {:+.6})  bc residuals ({:.1e}, {:.1e})",
            n + 1,
            pair.lambda_hat,
            pair.nullvector.0,
            pair.nullvector.1,
            left.abs(),
            right.abs()
        );
    }
}
