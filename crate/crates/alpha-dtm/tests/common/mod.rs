//! Shared helpers for the integration tests: a symbolic polynomial oracle in
//! the monomial basis, deterministic rational generators, and a
//! high-precision rational sine for assertions below the f64 noise floor.
//!
//! Each integration test binary compiles its own copy, so not every helper
//! is used from every binary.
#![allow(dead_code)]

use alpha_dtm::{rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Coefficients in the monomial basis: `poly[j]` multiplies `x^j`.
pub type Poly = Vec<Rational>;

pub fn poly_eval(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn poly_add(f: &[Rational], g: &[Rational]) -> Poly {
    (0..f.len().max(g.len()))
        .map(|j| {
            f.get(j).cloned().unwrap_or_else(Rational::zero)
                + g.get(j).cloned().unwrap_or_else(Rational::zero)
        })
        .collect()
}

pub fn poly_scale(c: &Rational, f: &[Rational]) -> Poly {
    f.iter().map(|x| x * c).collect()
}

pub fn poly_mul(f: &[Rational], g: &[Rational]) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// `m`-th symbolic derivative in the monomial basis.
pub fn poly_derivative(f: &[Rational], m: usize) -> Poly {
    let mut current: Poly = f.to_vec();
    for _ in 0..m {
        current = current
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * Rational::from_integer(BigInt::from(j)))
            .collect();
    }
    current
}

/// A small random rational with numerator in `[-limit, limit]` and
/// denominator in `[1, limit]`.
pub fn random_rational(rng: &mut impl Rng, limit: i64) -> Rational {
    let num = rng.gen_range(-limit..=limit);
    let den = rng.gen_range(1..=limit);
    rat(num, den)
}

/// A random polynomial of degree at most `max_degree` (possibly lower after
/// trailing zeros).
pub fn random_poly(rng: &mut impl Rng, max_degree: usize, limit: i64) -> Poly {
    let degree = rng.gen_range(0..=max_degree);
    (0..=degree).map(|_| random_rational(rng, limit)).collect()
}

/// Taylor sine with exact rational arithmetic:
/// `Σ_{m<terms} (−1)^m x^(2m+1) / (2m+1)!`.
///
/// For `|x| <= 1` the truncation remainder is below `1/(2·terms+1)!`
/// (`terms = 25` gives < 10⁻⁶⁶), so exact comparisons of quantities down to
/// ~10⁻²⁰ are meaningful.
pub fn rational_sine(x: &Rational, terms: usize) -> Rational {
    let mut sum = Rational::zero();
    let mut term = x.clone(); // x^(2m+1) / (2m+1)!, starting at m = 0
    let x2 = x * x;
    for m in 0..terms {
        sum += &term;
        let next_den = BigInt::from((2 * m + 2) * (2 * m + 3));
        term = -(term * &x2) / Rational::from_integer(next_den);
    }
    sum
}

/// Sanity guard for the helper itself, used by multiple test files.
pub fn assert_sine_helper_is_consistent() {
    let one = Rational::one();
    let sin1 = rational_sine(&one, 25);
    let as_f64 = alpha_dtm::rational_to_f64(&sin1);
    assert!(
        (as_f64 - 1.0f64.sin()).abs() < 1e-15,
        "rational sine drifted"
    );
}
