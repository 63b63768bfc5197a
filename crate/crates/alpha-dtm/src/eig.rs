//! Sturm–Liouville eigenvalues of `y'' + λy = 0` via the truncated
//! characteristic determinant.
//!
//! Under the transform, the ODE becomes the recurrence
//! `c[k+2] = −λ·c[k] / ((k+1)(k+2))`, so every coefficient is a polynomial
//! in `λ` times one of the free seeds `A = c[0]`, `B = c[1]`: the parity
//! sequences `u_k(λ)`, `v_k(λ)`. Substituting into the two homogeneous
//! boundary functionals gives a 2×2 matrix of exact λ-polynomials
//! ([`CharacteristicEntries`]); eigenvalue candidates are the real roots of
//! its determinant — an exact rational polynomial whose coefficients can be
//! inspected, printed, and re-parsed losslessly.
//!
//! Only the root isolation step leaves exact arithmetic. Each root `λ̂` is
//! refined by bisection, its nullvector `(A, B)` is read off the
//! better-conditioned matrix row, and the eigenfunction series is resolved
//! numerically from the parity sequences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::LambdaPoly;
use crate::roots::{find_real_roots, RootReport};
use crate::transform::{
    boundary_weights, rational_to_f64, AlphaParam, Endpoint, Interval, Rational, RealSeries,
};

/// The eigenvalue problem `y'' + λy = 0` with separated conditions
/// `A11·y(a) + A12·y'(a) = 0` and `A21·y(b) + A22·y'(b) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigProblem {
    pub interval: Interval,
    pub a11: Rational,
    pub a12: Rational,
    pub a21: Rational,
    pub a22: Rational,
    pub alpha: AlphaParam,
    pub order: usize,
}

impl EigProblem {
    /// Requires each boundary row `(Ai1, Ai2)` nonzero and `order >= 1`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        interval: Interval,
        a11: Rational,
        a12: Rational,
        a21: Rational,
        a22: Rational,
        alpha: AlphaParam,
        order: usize,
    ) -> Result<Self> {
        if (a11.is_zero() && a12.is_zero()) || (a21.is_zero() && a22.is_zero()) {
            return Err(Error::InvalidBoundaryRow);
        }
        if order < 1 {
            return Err(Error::InvalidOrder { min: 1, got: order });
        }
        Ok(EigProblem {
            interval,
            a11,
            a12,
            a21,
            a22,
            alpha,
            order,
        })
    }

    /// The reference Robin problem on the unit interval:
    /// `y(0) + y'(0) = 0`, `y(1) − y'(1) = 0`.
    pub fn robin_unit(alpha: AlphaParam, order: usize) -> Result<Self> {
        Self::new(
            Interval::unit(),
            Rational::one(),
            Rational::one(),
            Rational::one(),
            -Rational::one(),
            alpha,
            order,
        )
    }

    /// Dirichlet conditions `y(a) = y(b) = 0` on the unit interval.
    pub fn dirichlet_unit(alpha: AlphaParam, order: usize) -> Result<Self> {
        Self::new(
            Interval::unit(),
            Rational::one(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            alpha,
            order,
        )
    }
}

/// The seed polynomials of the recurrence `c[k+2] = −λ·c[k]/((k+1)(k+2))`:
/// `u` starts from `(A, 0)`, `v` from `(0, B)`. Entry `k` is
/// `(−λ)^ℓ/(2ℓ)!` at `k = 2ℓ` for `u`, `(−λ)^ℓ/(2ℓ+1)!` at `k = 2ℓ+1` for
/// `v`, and zero on the opposite parity.
pub fn parity_sequences(order: usize) -> Result<(Vec<LambdaPoly>, Vec<LambdaPoly>)> {
    if order < 1 {
        return Err(Error::InvalidOrder { min: 1, got: order });
    }
    let mut u = vec![LambdaPoly::zero(); order + 1];
    let mut v = vec![LambdaPoly::zero(); order + 1];
    u[0] = LambdaPoly::constant(Rational::one());
    v[1] = LambdaPoly::constant(Rational::one());
    let minus_lambda = LambdaPoly::monomial(-Rational::one(), 1);
    for k in 0..order.saturating_sub(1) {
        let inv = Rational::new(BigInt::one(), BigInt::from((k + 1) * (k + 2)));
        u[k + 2] = u[k].mul(&minus_lambda).scale(&inv);
        v[k + 2] = v[k].mul(&minus_lambda).scale(&inv);
    }
    Ok((u, v))
}

/// The 2×2 matrix of the homogeneous system in the seeds `(A, B)`:
/// row 1 is the left condition, row 2 the right, each summed over all
/// coefficient indices `k <= N` (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicEntries {
    pub p11: LambdaPoly,
    pub p12: LambdaPoly,
    pub p21: LambdaPoly,
    pub p22: LambdaPoly,
}

impl CharacteristicEntries {
    /// `P11·P22 − P12·P21`, exact.
    pub fn determinant(&self) -> LambdaPoly {
        self.p11.mul(&self.p22).sub(&self.p12.mul(&self.p21))
    }

    /// Floating-point value of the matrix at `lambda`.
    pub fn evaluate(&self, lambda: f64) -> [[f64; 2]; 2] {
        [
            [self.p11.evaluate_f64(lambda), self.p12.evaluate_f64(lambda)],
            [self.p21.evaluate_f64(lambda), self.p22.evaluate_f64(lambda)],
        ]
    }
}

/// Assembles the characteristic entries: `P11 = Σ_k w^L_k·u_k(λ)` and so on,
/// with `w^L`, `w^R` the boundary weights of the two rows.
pub fn characteristic_entries(problem: &EigProblem) -> Result<CharacteristicEntries> {
    let (u, v) = parity_sequences(problem.order)?;
    let w_left = boundary_weights(
        &problem.alpha,
        &problem.interval,
        problem.order,
        Endpoint::Left,
        &problem.a11,
        &problem.a12,
    );
    let w_right = boundary_weights(
        &problem.alpha,
        &problem.interval,
        problem.order,
        Endpoint::Right,
        &problem.a21,
        &problem.a22,
    );
    let contract = |weights: &[Rational], seq: &[LambdaPoly]| {
        weights
            .iter()
            .zip(seq)
            .fold(LambdaPoly::zero(), |acc, (w, p)| acc.add(&p.scale(w)))
    };
    Ok(CharacteristicEntries {
        p11: contract(&w_left, &u),
        p12: contract(&w_left, &v),
        p21: contract(&w_right, &u),
        p22: contract(&w_right, &v),
    })
}

/// One approximate eigenvalue with its nullvector and eigenfunction.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    /// Root of the truncated characteristic determinant.
    pub lambda_hat: f64,
    /// Seeds `(A, B)` normalized to `|A| + |B| = 1`, first nonzero positive.
    pub nullvector: (f64, f64),
    /// The series `Σ (A·u_k(λ̂) + B·v_k(λ̂))·(x − x_α)^k`.
    pub eigenfunction: RealSeries,
    /// `|det(λ̂)|` left after bisection.
    pub char_residual: f64,
    /// Set when `λ̂ < 0`: outside the positive spectrum the reference
    /// problems have, reported rather than dropped.
    pub negative: bool,
}

/// Everything `solve_eig` knows: the exact entries and determinant (for
/// printing or external refinement), the raw root scan, and one
/// [`EigenPair`] per kept root.
#[derive(Debug, Clone, PartialEq)]
pub struct EigSolution {
    pub entries: CharacteristicEntries,
    pub determinant: LambdaPoly,
    pub report: RootReport,
    pub pairs: Vec<EigenPair>,
}

/// Extracts the nullvector of the characteristic matrix at `lambda` from its
/// larger max-norm row, normalized to `|A| + |B| = 1` with the first nonzero
/// component positive. Fails when both rows vanish numerically.
pub fn nullvector_at(entries: &CharacteristicEntries, lambda: f64) -> Result<(f64, f64)> {
    let m = entries.evaluate(lambda);
    let norm = |row: &[f64; 2]| row[0].abs().max(row[1].abs());
    let row = if norm(&m[0]) >= norm(&m[1]) {
        m[0]
    } else {
        m[1]
    };
    let (mut a, mut b) = (-row[1], row[0]);
    let scale = a.abs() + b.abs();
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::DegenerateRoot(lambda));
    }
    a /= scale;
    b /= scale;
    if a < 0.0 || (a == 0.0 && b < 0.0) {
        a = -a;
        b = -b;
    }
    Ok((a, b))
}

/// Full eigenvalue solve: assemble the determinant, isolate up to
/// `num_roots` roots in `[lambda_lo, lambda_hi]` (ascending), and recover a
/// nullvector and eigenfunction per root.
pub fn solve_eig(
    problem: &EigProblem,
    lambda_lo: f64,
    lambda_hi: f64,
    num_roots: usize,
    scan_steps: usize,
    tol: f64,
) -> Result<EigSolution> {
    let entries = characteristic_entries(problem)?;
    let determinant = entries.determinant();
    let mut report = find_real_roots(&determinant, lambda_lo, lambda_hi, scan_steps, tol)?;
    report.roots.truncate(num_roots);

    let (u, v) = parity_sequences(problem.order)?;
    let center = rational_to_f64(&problem.interval.center(&problem.alpha));
    let mut pairs = Vec::with_capacity(report.roots.len());
    for entry in &report.roots {
        let lambda_hat = entry.root;
        let (a, b) = nullvector_at(&entries, lambda_hat)?;
        let coeffs = u
            .iter()
            .zip(&v)
            .map(|(uk, vk)| a * uk.evaluate_f64(lambda_hat) + b * vk.evaluate_f64(lambda_hat))
            .collect();
        pairs.push(EigenPair {
            lambda_hat,
            nullvector: (a, b),
            eigenfunction: RealSeries::new(center, coeffs),
            char_residual: entry.residual,
            negative: lambda_hat < 0.0,
        });
    }
    Ok(EigSolution {
        entries,
        determinant,
        report,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{DEFAULT_SCAN_STEPS, DEFAULT_TOL};
    use crate::transform::rat;

    /// λ₁ = μ₁² with μ₁ the (2, 3) root of (1−μ²)sin μ − 2μ cos μ,
    /// frozen from the closed-form characteristic function.
    const ROBIN_LAMBDA_1: f64 = 5.434131505846556;

    fn poly(coeffs: &[(i64, i64)]) -> LambdaPoly {
        LambdaPoly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn problem_validation() {
        assert_eq!(
            EigProblem::new(
                Interval::unit(),
                rat(0, 1),
                rat(0, 1),
                rat(1, 1),
                rat(0, 1),
                AlphaParam::half(),
                4,
            )
            .unwrap_err(),
            Error::InvalidBoundaryRow
        );
        assert!(matches!(
            EigProblem::robin_unit(AlphaParam::half(), 0).unwrap_err(),
            Error::InvalidOrder { min: 1, got: 0 }
        ));
    }

    #[test]
    fn parity_sequences_low_order() {
        let (u, v) = parity_sequences(3).unwrap();
        assert_eq!(u[0], poly(&[(1, 1)]));
        assert_eq!(u[1], LambdaPoly::zero());
        assert_eq!(u[2], poly(&[(0, 1), (-1, 2)]));
        assert_eq!(u[3], LambdaPoly::zero());
        assert_eq!(v[0], LambdaPoly::zero());
        assert_eq!(v[1], poly(&[(1, 1)]));
        assert_eq!(v[2], LambdaPoly::zero());
        assert_eq!(v[3], poly(&[(0, 1), (-1, 6)]));
    }

    #[test]
    fn parity_sequences_second_iteration() {
        let (u, v) = parity_sequences(5).unwrap();
        assert_eq!(u[4], poly(&[(0, 1), (0, 1), (1, 24)]));
        assert_eq!(v[5], poly(&[(0, 1), (0, 1), (1, 120)]));
        assert!(parity_sequences(0).is_err());
    }

    #[test]
    fn robin_entries_match_hand_expansion() {
        let problem = EigProblem::robin_unit(AlphaParam::half(), 6).unwrap();
        let entries = characteristic_entries(&problem).unwrap();
        assert_eq!(entries.p11, poly(&[(1, 1), (3, 8), (-7, 384), (11, 46080)]));
        // At alpha = 1/2 the weight symmetry forces P22 = -P12 exactly.
        assert_eq!(entries.p22, entries.p12.neg());
    }

    #[test]
    fn dirichlet_entries_at_left_anchor() {
        // alpha = 1 puts the center at the left endpoint: t = 0 kills every
        // weight beyond k = 0, so row 1 reads the seeds directly.
        let problem = EigProblem::dirichlet_unit(AlphaParam::left(), 2).unwrap();
        let entries = characteristic_entries(&problem).unwrap();
        assert_eq!(entries.p11, LambdaPoly::constant(rat(1, 1)));
        assert_eq!(entries.p12, LambdaPoly::zero());
    }

    #[test]
    fn determinant_reproduces_reference_polynomial() {
        let problem = EigProblem::robin_unit(AlphaParam::half(), 6).unwrap();
        let det = characteristic_entries(&problem).unwrap().determinant();
        assert_eq!(
            det,
            poly(&[
                (-1, 1),
                (-1, 6),
                (11, 120),
                (-89, 15360),
                (299, 2211840),
                (-11, 9830400),
            ])
        );
    }

    #[test]
    fn determinant_edge_identities() {
        let zero = CharacteristicEntries {
            p11: LambdaPoly::zero(),
            p12: LambdaPoly::zero(),
            p21: LambdaPoly::zero(),
            p22: LambdaPoly::zero(),
        };
        assert_eq!(zero.determinant(), LambdaPoly::zero());

        // Listing the two boundary conditions in the other order swaps the
        // matrix rows, which negates the determinant.
        let problem = EigProblem::robin_unit(AlphaParam::half(), 6).unwrap();
        let entries = characteristic_entries(&problem).unwrap();
        let swapped = CharacteristicEntries {
            p11: entries.p21.clone(),
            p12: entries.p22.clone(),
            p21: entries.p11.clone(),
            p22: entries.p12.clone(),
        };
        assert_eq!(swapped.determinant(), entries.determinant().neg());
    }

    #[test]
    fn robin_first_eigenvalue_low_order() {
        let problem = EigProblem::robin_unit(AlphaParam::half(), 6).unwrap();
        let sol = solve_eig(&problem, 0.0, 50.0, 5, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
        assert!(!sol.pairs.is_empty());
        let rel = (sol.pairs[0].lambda_hat - ROBIN_LAMBDA_1).abs() / ROBIN_LAMBDA_1;
        assert!(rel < 0.02, "relative error {rel} exceeds 2%");
        assert!(!sol.pairs[0].negative);
    }

    #[test]
    fn dirichlet_first_eigenvalue_near_pi_squared() {
        let problem = EigProblem::dirichlet_unit(AlphaParam::half(), 16).unwrap();
        let sol = solve_eig(&problem, 0.5, 50.0, 3, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
        let pi2 = std::f64::consts::PI.powi(2);
        let rel = (sol.pairs[0].lambda_hat - pi2).abs() / pi2;
        assert!(rel < 0.01, "relative error {rel} exceeds 1%");
    }

    #[test]
    fn num_roots_caps_the_output() {
        let problem = EigProblem::robin_unit(AlphaParam::half(), 14).unwrap();
        let sol = solve_eig(&problem, 0.0, 100.0, 2, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
        assert_eq!(sol.pairs.len(), 2);
        assert!(sol.pairs[0].lambda_hat < sol.pairs[1].lambda_hat);
    }

    #[test]
    fn nullvector_is_normalized_and_annihilated() {
        let problem = EigProblem::robin_unit(AlphaParam::half(), 12).unwrap();
        let sol = solve_eig(&problem, 0.0, 50.0, 2, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
        for pair in &sol.pairs {
            let (a, b) = pair.nullvector;
            assert!((a.abs() + b.abs() - 1.0).abs() < 1e-14);
            let m = sol.entries.evaluate(pair.lambda_hat);
            let entries_norm = m.iter().flatten().fold(0.0f64, |acc, x| acc.max(x.abs()));
            let residual = (m[0][0] * a + m[0][1] * b)
                .abs()
                .max((m[1][0] * a + m[1][1] * b).abs());
            assert!(
                residual <= 10.0 * DEFAULT_TOL * entries_norm.max(1.0),
                "nullvector residual {residual} too large"
            );
        }
    }

    #[test]
    fn eigenfunction_satisfies_boundary_functionals() {
        let problem = EigProblem::robin_unit(AlphaParam::half(), 12).unwrap();
        let sol = solve_eig(&problem, 0.0, 50.0, 1, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
        let y = &sol.pairs[0].eigenfunction;
        let left = y.evaluate(0.0) + y.evaluate_derivative(0.0);
        let right = y.evaluate(1.0) - y.evaluate_derivative(1.0);
        assert!(left.abs() < 1e-6, "left residual {left}");
        assert!(right.abs() < 1e-6, "right residual {right}");
        // Nontrivial function: its sup over a coarse grid is positive.
        let sup = (0..=10)
            .map(|i| y.evaluate(i as f64 / 10.0).abs())
            .fold(0.0f64, f64::max);
        assert!(sup > 1e-3);
    }

    #[test]
    fn degenerate_matrix_is_reported() {
        let zero = CharacteristicEntries {
            p11: LambdaPoly::zero(),
            p12: LambdaPoly::zero(),
            p21: LambdaPoly::zero(),
            p22: LambdaPoly::zero(),
        };
        assert!(matches!(
            nullvector_at(&zero, 1.0).unwrap_err(),
            Error::DegenerateRoot(_)
        ));
    }

    #[test]
    fn truncation_error_decreases_with_order() {
        let mut prev = f64::INFINITY;
        for order in [6usize, 10, 14, 18] {
            let problem = EigProblem::robin_unit(AlphaParam::half(), order).unwrap();
            let sol = solve_eig(&problem, 0.0, 50.0, 1, DEFAULT_SCAN_STEPS, DEFAULT_TOL).unwrap();
            let err = (sol.pairs[0].lambda_hat - ROBIN_LAMBDA_1).abs();
            assert!(
                err <= prev,
                "error {err} at order {order} exceeds previous {prev}"
            );
            prev = err;
        }
        assert!(prev < 1e-9);
    }
}
