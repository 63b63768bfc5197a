//! Exact-arithmetic jet calculus over interval endpoints.
//!
//! A function on `[a, b]` is represented by an [`EndpointJet`]: its truncated
//! Taylor coefficient sequences at *both* endpoints, stored as exact
//! rationals. Entry `k` of the sequence at endpoint `e` is `f^(k)(e) / k!`.
//! Blending the two sequences with a parameter `alpha in [0, 1]`,
//!
//! ```text
//! d_k = alpha * d_k(a) + (1 - alpha) * d_k(b),
//! ```
//!
//! yields an [`AlphaSeries`]: a polynomial in `x - x_alpha` centered at
//! `x_alpha = alpha*a + (1-alpha)*b`. At `alpha = 1` (resp. `alpha = 0`) the
//! blend degenerates to the plain Taylor expansion about `a` (resp. `b`) and
//! reproduces polynomials exactly; for interior `alpha` it is a genuinely
//! different approximation (see `jet_calculus` in the examples directory).
//!
//! The jet operations (sum, scalar multiple, product, derivative) act on both
//! endpoint sequences at once. The product rule needs the endpoint sequences
//! separately — the blend of a product is *not* a function of the factors'
//! blends — which is why blending is a terminal operation here.
//!
//! Everything in this module is immutable and exact; floating point enters
//! only through the `*_f64` evaluation helpers.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact scalar used throughout: arbitrary-precision rational in lowest terms
/// with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for `num/den` as a [`Rational`].
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn rat_pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Parses an exact scalar from an integer (`-3`), a fraction (`11/120`), or a
/// finite decimal with optional exponent (`0.5`, `-1.25e-3`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let fail = || Error::ParseRational(text.to_string());
    if s.is_empty() {
        return Err(fail());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| fail())?;
        let den: BigInt = den.trim().parse().map_err(|_| fail())?;
        if den.is_zero() {
            return Err(fail());
        }
        return Ok(Rational::new(num, den));
    }
    // Decimal form: [sign] digits [. digits] [eE [sign] digits]
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| fail())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        return Err(fail());
    }
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(fail());
    }
    let numerator: BigInt = digits.parse().map_err(|_| fail())?;
    let ten = BigInt::from(10);
    let scale = exponent - frac_part.len() as i64;
    let value = if scale >= 0 {
        Rational::from_integer(numerator * ten.pow(scale as u32))
    } else {
        Rational::new(numerator, ten.pow((-scale) as u32))
    };
    Ok(value)
}

/// One of the two interval endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Left,
    Right,
}

/// A nondegenerate real interval `[a, b]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    a: Rational,
    b: Rational,
}

impl Interval {
    /// Requires `a < b`.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a < b {
            Ok(Interval { a, b })
        } else {
            Err(Error::InvalidInterval)
        }
    }

    /// The unit interval `[0, 1]`.
    pub fn unit() -> Self {
        Interval {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn endpoint(&self, which: Endpoint) -> &Rational {
        match which {
            Endpoint::Left => &self.a,
            Endpoint::Right => &self.b,
        }
    }

    /// Expansion center `x_alpha = alpha*a + (1-alpha)*b`.
    pub fn center(&self, alpha: &AlphaParam) -> Rational {
        alpha.value() * &self.a + alpha.complement() * &self.b
    }
}

/// Blend parameter `alpha in [0, 1]` weighting the left endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaParam(Rational);

impl AlphaParam {
    /// Requires `0 <= value <= 1`.
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_negative() || value > Rational::one() {
            Err(Error::InvalidAlpha(value))
        } else {
            Ok(AlphaParam(value))
        }
    }

    /// `alpha = 1`: the classical transform about the left endpoint.
    pub fn left() -> Self {
        AlphaParam(Rational::one())
    }

    /// `alpha = 0`: the classical transform about the right endpoint.
    pub fn right() -> Self {
        AlphaParam(Rational::zero())
    }

    /// `alpha = 1/2`: the midpoint blend.
    pub fn half() -> Self {
        AlphaParam(rat(1, 2))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `1 - alpha`.
    pub fn complement(&self) -> Rational {
        Rational::one() - &self.0
    }
}

/// Truncated Taylor coefficient sequences of one function at both interval
/// endpoints. Entry `k` at endpoint `e` is `f^(k)(e) / k!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointJet {
    interval: Interval,
    coeffs_a: Vec<Rational>,
    coeffs_b: Vec<Rational>,
}

impl EndpointJet {
    /// Builds a jet directly from both coefficient sequences.
    ///
    /// Both sequences must have the same length (the truncation order plus one).
    pub fn from_coeffs(
        interval: Interval,
        coeffs_a: Vec<Rational>,
        coeffs_b: Vec<Rational>,
    ) -> Result<Self> {
        if coeffs_a.len() != coeffs_b.len() || coeffs_a.is_empty() {
            return Err(Error::OrderMismatch {
                left: coeffs_a.len().saturating_sub(1),
                right: coeffs_b.len().saturating_sub(1),
            });
        }
        Ok(EndpointJet {
            interval,
            coeffs_a,
            coeffs_b,
        })
    }

    /// The jet of the zero function.
    pub fn zero(interval: Interval, order: usize) -> Self {
        EndpointJet {
            interval,
            coeffs_a: vec![Rational::zero(); order + 1],
            coeffs_b: vec![Rational::zero(); order + 1],
        }
    }

    /// The jet of the constant function `c`.
    pub fn constant(c: Rational, interval: Interval, order: usize) -> Self {
        let mut jet = Self::zero(interval, order);
        jet.coeffs_a[0] = c.clone();
        jet.coeffs_b[0] = c;
        jet
    }

    /// The jet of the monomial `x^m`: entry `k` at endpoint `e` is
    /// `C(m, k) * e^(m-k)` for `k <= m` and `0` beyond.
    pub fn monomial(m: usize, interval: Interval, order: usize) -> Self {
        let mut coeffs_a = Vec::with_capacity(order + 1);
        let mut coeffs_b = Vec::with_capacity(order + 1);
        for k in 0..=order {
            if k > m {
                coeffs_a.push(Rational::zero());
                coeffs_b.push(Rational::zero());
            } else {
                let binom = Rational::from_integer(binomial(BigInt::from(m), BigInt::from(k)));
                coeffs_a.push(&binom * rat_pow(&interval.a, m - k));
                coeffs_b.push(binom * rat_pow(&interval.b, m - k));
            }
        }
        EndpointJet {
            interval,
            coeffs_a,
            coeffs_b,
        }
    }

    /// The jet of the polynomial with monomial coefficients `poly`
    /// (`poly[j]` multiplies `x^j`).
    pub fn from_polynomial(poly: &[Rational], interval: Interval, order: usize) -> Self {
        let mut jet = Self::zero(interval, order);
        for (j, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::monomial(j, jet.interval.clone(), order).scale(c);
            jet.coeffs_a
                .iter_mut()
                .zip(&term.coeffs_a)
                .for_each(|(x, t)| *x += t);
            jet.coeffs_b
                .iter_mut()
                .zip(&term.coeffs_b)
                .for_each(|(x, t)| *x += t);
        }
        jet
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    /// Truncation order `N`; both sequences hold `N + 1` entries.
    pub fn order(&self) -> usize {
        self.coeffs_a.len() - 1
    }

    pub fn coeffs_a(&self) -> &[Rational] {
        &self.coeffs_a
    }

    pub fn coeffs_b(&self) -> &[Rational] {
        &self.coeffs_b
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.interval != other.interval {
            return Err(Error::IntervalMismatch);
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Entrywise sum at each endpoint; jets must share interval and order.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(EndpointJet {
            interval: self.interval.clone(),
            coeffs_a: zip_with(&self.coeffs_a, &other.coeffs_a, |x, y| x + y),
            coeffs_b: zip_with(&self.coeffs_b, &other.coeffs_b, |x, y| x + y),
        })
    }

    /// Entrywise difference at each endpoint.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(EndpointJet {
            interval: self.interval.clone(),
            coeffs_a: zip_with(&self.coeffs_a, &other.coeffs_a, |x, y| x - y),
            coeffs_b: zip_with(&self.coeffs_b, &other.coeffs_b, |x, y| x - y),
        })
    }

    /// Every entry multiplied by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        EndpointJet {
            interval: self.interval.clone(),
            coeffs_a: self.coeffs_a.iter().map(|x| x * c).collect(),
            coeffs_b: self.coeffs_b.iter().map(|x| x * c).collect(),
        }
    }

    /// Truncated Cauchy product, performed independently at each endpoint.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let cauchy = |f: &[Rational], g: &[Rational]| -> Vec<Rational> {
            let n = f.len();
            let mut out = vec![Rational::zero(); n];
            for (i, fi) in f.iter().enumerate() {
                if fi.is_zero() {
                    continue;
                }
                for (j, gj) in g.iter().enumerate().take(n - i) {
                    if !gj.is_zero() {
                        out[i + j] += fi * gj;
                    }
                }
            }
            out
        };
        Ok(EndpointJet {
            interval: self.interval.clone(),
            coeffs_a: cauchy(&self.coeffs_a, &other.coeffs_a),
            coeffs_b: cauchy(&self.coeffs_b, &other.coeffs_b),
        })
    }

    /// The jet of the `m`-th derivative: entry `k` becomes
    /// `(k+m)!/k! * `entry `k+m`, reducing the order by exactly `m`.
    pub fn differentiate(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Ok(self.clone());
        }
        if m > self.order() {
            return Err(Error::InsufficientOrder {
                requested: m,
                order: self.order(),
            });
        }
        let shift = |src: &[Rational]| -> Vec<Rational> {
            (0..src.len() - m)
                .map(|k| {
                    let mut factor = BigInt::one();
                    for j in 1..=m {
                        factor *= BigInt::from(k + j);
                    }
                    &src[k + m] * Rational::from_integer(factor)
                })
                .collect()
        };
        Ok(EndpointJet {
            interval: self.interval.clone(),
            coeffs_a: shift(&self.coeffs_a),
            coeffs_b: shift(&self.coeffs_b),
        })
    }

    /// Blends the two endpoint sequences into a single series centered at
    /// `x_alpha`. This is lossy: the endpoint sequences cannot be recovered
    /// for interior `alpha`.
    pub fn alpha_combine(&self, alpha: &AlphaParam) -> AlphaSeries {
        let w_a = alpha.value();
        let w_b = alpha.complement();
        let coeffs = zip_with(&self.coeffs_a, &self.coeffs_b, |x, y| w_a * x + &w_b * y);
        AlphaSeries {
            alpha: alpha.clone(),
            center: self.interval.center(alpha),
            coeffs,
        }
    }
}

fn zip_with(
    f: &[Rational],
    g: &[Rational],
    op: impl Fn(&Rational, &Rational) -> Rational,
) -> Vec<Rational> {
    f.iter().zip(g).map(|(x, y)| op(x, y)).collect()
}

/// The blended coefficient sequence `d_k = alpha*d_k(a) + (1-alpha)*d_k(b)`
/// together with its expansion center `x_alpha`.
///
/// Evaluation sums `d_k (x - x_alpha)^k`; it is exact for rational abscissae.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSeries {
    alpha: AlphaParam,
    center: Rational,
    coeffs: Vec<Rational>,
}

impl AlphaSeries {
    /// Assembles a series from explicit coefficients; the center is derived
    /// from the interval so it always matches `alpha`.
    pub fn new(alpha: AlphaParam, interval: &Interval, coeffs: Vec<Rational>) -> Self {
        let center = interval.center(&alpha);
        AlphaSeries {
            alpha,
            center,
            coeffs,
        }
    }

    pub fn alpha(&self) -> &AlphaParam {
        &self.alpha
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation of `sum_k d_k (x - x_alpha)^k`, exact.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let dx = x - &self.center;
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &dx + c;
        }
        acc
    }

    /// Termwise-differentiated Horner evaluation, exact. A constant series
    /// yields zero.
    pub fn evaluate_derivative(&self, x: &Rational) -> Rational {
        let dx = x - &self.center;
        let mut acc = Rational::zero();
        for k in (1..self.coeffs.len()).rev() {
            acc = acc * &dx + &self.coeffs[k] * Rational::from_integer(BigInt::from(k));
        }
        acc
    }

    /// Floating-point counterpart of [`evaluate`](Self::evaluate).
    pub fn evaluate_f64(&self, x: f64) -> f64 {
        self.to_real().evaluate(x)
    }

    /// Floating-point counterpart of [`evaluate_derivative`](Self::evaluate_derivative).
    pub fn evaluate_derivative_f64(&self, x: f64) -> f64 {
        self.to_real().evaluate_derivative(x)
    }

    /// Rounds the coefficients to `f64`, e.g. for plotting or sampling.
    pub fn to_real(&self) -> RealSeries {
        RealSeries {
            center: rational_to_f64(&self.center),
            coeffs: self.coeffs.iter().map(rational_to_f64).collect(),
        }
    }
}

/// `f64` rendering of a rational (used at the floating-point boundary).
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A truncated power series with `f64` coefficients, centered at `center`.
///
/// This is the floating-point counterpart of [`AlphaSeries`], used where the
/// coefficients themselves are only known numerically (eigenfunctions).
#[derive(Debug, Clone, PartialEq)]
pub struct RealSeries {
    center: f64,
    coeffs: Vec<f64>,
}

impl RealSeries {
    pub fn new(center: f64, coeffs: Vec<f64>) -> Self {
        RealSeries { center, coeffs }
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let dx = x - self.center;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * dx + c)
    }

    pub fn evaluate_derivative(&self, x: f64) -> f64 {
        let dx = x - self.center;
        let mut acc = 0.0;
        for k in (1..self.coeffs.len()).rev() {
            acc = acc * dx + self.coeffs[k] * k as f64;
        }
        acc
    }
}

/// Weights of the boundary functional `c1*y + c2*y'` at an endpoint,
/// expressed on the blended coefficients: `w_k = c1*t^k + c2*k*t^(k-1)` with
/// `t = endpoint - x_alpha` (the `k = 0` derivative term vanishes by the
/// convention `0 * t^-1 = 0`).
///
/// On `[0, 1]` these reduce to powers of `alpha - 1` (left) and `alpha`
/// (right).
pub fn boundary_weights(
    alpha: &AlphaParam,
    interval: &Interval,
    order: usize,
    endpoint: Endpoint,
    c1: &Rational,
    c2: &Rational,
) -> Vec<Rational> {
    let t = interval.endpoint(endpoint) - interval.center(alpha);
    let mut weights = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut w = c1 * rat_pow(&t, k);
        if k >= 1 {
            w += c2 * Rational::from_integer(BigInt::from(k)) * rat_pow(&t, k - 1);
        }
        weights.push(w);
    }
    weights
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Interval {
        Interval::unit()
    }

    fn rats(vals: &[(i64, i64)]) -> Vec<Rational> {
        vals.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    fn ints(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&n| rat(n, 1)).collect()
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("2.50").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("-1.25e2").unwrap(), rat(-125, 1));
        assert_eq!(parse_rational(" 11/120 ").unwrap(), rat(11, 120));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("nan").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn interval_rejects_degenerate() {
        assert_eq!(
            Interval::new(rat(1, 1), rat(1, 1)).unwrap_err(),
            Error::InvalidInterval
        );
        assert!(Interval::new(rat(2, 1), rat(1, 1)).is_err());
    }

    #[test]
    fn alpha_range_checked() {
        assert!(AlphaParam::new(rat(1, 2)).is_ok());
        assert!(AlphaParam::new(rat(-1, 10)).is_err());
        assert!(AlphaParam::new(rat(11, 10)).is_err());
    }

    #[test]
    fn monomial_square_on_unit() {
        let jet = EndpointJet::monomial(2, unit(), 3);
        assert_eq!(jet.coeffs_a(), ints(&[0, 0, 1, 0]).as_slice());
        assert_eq!(jet.coeffs_b(), ints(&[1, 2, 1, 0]).as_slice());
    }

    #[test]
    fn monomial_constant_case() {
        let iv = Interval::new(rat(-2, 1), rat(7, 3)).unwrap();
        let jet = EndpointJet::monomial(0, iv, 2);
        assert_eq!(jet.coeffs_a(), ints(&[1, 0, 0]).as_slice());
        assert_eq!(jet.coeffs_b(), ints(&[1, 0, 0]).as_slice());
    }

    #[test]
    fn monomial_linear_blend_at_half() {
        // C(1,0)*(1/2*0 + 1/2*1) = 1/2 at k = 0; the k = m entry is 1.
        let series = EndpointJet::monomial(1, unit(), 1).alpha_combine(&AlphaParam::half());
        assert_eq!(series.coeffs(), rats(&[(1, 2), (1, 1)]).as_slice());
    }

    #[test]
    fn add_matches_polynomial_sum() {
        let x = EndpointJet::monomial(1, unit(), 2);
        let x2 = EndpointJet::monomial(2, unit(), 2);
        let sum = x.add(&x2).unwrap();
        assert_eq!(sum.coeffs_a(), ints(&[0, 1, 1]).as_slice());
        assert_eq!(sum.coeffs_b(), ints(&[2, 3, 1]).as_slice());
    }

    #[test]
    fn add_identity_and_cancellation() {
        let x2 = EndpointJet::monomial(2, unit(), 2);
        let zero = EndpointJet::zero(unit(), 2);
        assert_eq!(x2.add(&zero).unwrap(), x2);
        let neg = x2.scale(&rat(-1, 1));
        assert_eq!(x2.add(&neg).unwrap(), zero);
    }

    #[test]
    fn add_rejects_shape_mismatch() {
        let f = EndpointJet::monomial(1, unit(), 2);
        let g = EndpointJet::monomial(1, unit(), 3);
        assert!(matches!(
            f.add(&g).unwrap_err(),
            Error::OrderMismatch { left: 2, right: 3 }
        ));
        let h = EndpointJet::monomial(1, Interval::new(rat(0, 1), rat(2, 1)).unwrap(), 2);
        assert_eq!(f.add(&h).unwrap_err(), Error::IntervalMismatch);
    }

    #[test]
    fn scale_cases() {
        let x = EndpointJet::monomial(1, unit(), 1);
        assert_eq!(x.scale(&rat(0, 1)), EndpointJet::zero(unit(), 1));
        assert_eq!(x.scale(&rat(1, 1)), x);
        let tripled = x.scale(&rat(3, 1));
        assert_eq!(tripled.coeffs_a(), ints(&[0, 3]).as_slice());
        assert_eq!(tripled.coeffs_b(), ints(&[3, 3]).as_slice());
    }

    #[test]
    fn product_of_x_with_itself_blends_like_x_squared() {
        let x = EndpointJet::monomial(1, unit(), 2);
        let prod = x.mul(&x).unwrap().alpha_combine(&AlphaParam::half());
        assert_eq!(prod.coeffs(), rats(&[(1, 2), (1, 1), (1, 1)]).as_slice());
        // Same blend as the monomial jet of x^2.
        let direct = EndpointJet::monomial(2, unit(), 2).alpha_combine(&AlphaParam::half());
        assert_eq!(prod, direct);
    }

    #[test]
    fn product_identity_and_truncation() {
        let x = EndpointJet::monomial(1, unit(), 2);
        let one = EndpointJet::constant(rat(1, 1), unit(), 2);
        assert_eq!(x.mul(&one).unwrap(), x);
        // x * x^2 truncated to order 2 keeps the tail of (1 + (x-1))^3 at b.
        let x2 = EndpointJet::monomial(2, unit(), 2);
        let cubic = x.mul(&x2).unwrap();
        assert_eq!(cubic.coeffs_a(), ints(&[0, 0, 0]).as_slice());
        assert_eq!(cubic.coeffs_b(), ints(&[1, 3, 3]).as_slice());
    }

    #[test]
    fn differentiate_square_and_cube() {
        let dx2 = EndpointJet::monomial(2, unit(), 2)
            .differentiate(1)
            .unwrap();
        assert_eq!(dx2.coeffs_a(), ints(&[0, 2]).as_slice());
        assert_eq!(dx2.coeffs_b(), ints(&[2, 2]).as_slice());

        let d2x3 = EndpointJet::monomial(3, unit(), 3)
            .differentiate(2)
            .unwrap();
        assert_eq!(d2x3.coeffs_a(), ints(&[0, 6]).as_slice());
        assert_eq!(d2x3.coeffs_b(), ints(&[6, 6]).as_slice());
    }

    #[test]
    fn differentiate_to_constant() {
        let n = 4;
        let jet = EndpointJet::monomial(n, unit(), n)
            .differentiate(n)
            .unwrap();
        assert_eq!(jet.order(), 0);
        assert_eq!(jet.coeffs_a(), ints(&[24]).as_slice());
        assert_eq!(jet.coeffs_b(), ints(&[24]).as_slice());
    }

    #[test]
    fn differentiate_past_order_fails() {
        let jet = EndpointJet::monomial(2, unit(), 2);
        assert!(matches!(
            jet.differentiate(3).unwrap_err(),
            Error::InsufficientOrder {
                requested: 3,
                order: 2
            }
        ));
    }

    #[test]
    fn alpha_combine_endpoint_reduction() {
        let jet = EndpointJet::monomial(2, unit(), 3);
        let at_a = jet.alpha_combine(&AlphaParam::left());
        assert_eq!(at_a.coeffs(), jet.coeffs_a());
        assert_eq!(at_a.center(), &rat(0, 1));
        let at_b = jet.alpha_combine(&AlphaParam::right());
        assert_eq!(at_b.coeffs(), jet.coeffs_b());
        assert_eq!(at_b.center(), &rat(1, 1));
    }

    #[test]
    fn alpha_combine_square_at_half() {
        let s = EndpointJet::monomial(2, unit(), 2).alpha_combine(&AlphaParam::half());
        assert_eq!(s.coeffs(), rats(&[(1, 2), (1, 1), (1, 1)]).as_slice());
        assert_eq!(s.center(), &rat(1, 2));
    }

    #[test]
    fn evaluate_constant_series() {
        let s = EndpointJet::constant(rat(7, 3), unit(), 4).alpha_combine(&AlphaParam::half());
        assert_eq!(s.evaluate(&rat(-5, 1)), rat(7, 3));
        assert_eq!(s.evaluate(&rat(1, 3)), rat(7, 3));
        assert_eq!(s.evaluate_derivative(&rat(1, 3)), rat(0, 1));
    }

    #[test]
    fn evaluate_blended_square_shows_offset() {
        // The alpha = 1/2 blend of x^2 is x^2 + 1/4, so x = 1/2 gives 1/2.
        let s = EndpointJet::monomial(2, unit(), 2).alpha_combine(&AlphaParam::half());
        assert_eq!(s.evaluate(&rat(1, 2)), rat(1, 2));
    }

    #[test]
    fn evaluate_endpoint_alpha_is_exact() {
        let s = EndpointJet::monomial(2, unit(), 2).alpha_combine(&AlphaParam::left());
        assert_eq!(s.evaluate(&rat(3, 4)), rat(9, 16));
    }

    #[test]
    fn derivative_series_cases() {
        let s = EndpointJet::monomial(2, unit(), 2).alpha_combine(&AlphaParam::left());
        assert_eq!(s.evaluate_derivative(&rat(1, 2)), rat(1, 1));
        // (0, 1, 1) centered at 1/2: derivative at 0 is 1 + 2*(-1/2) = 0.
        let s = AlphaSeries::new(AlphaParam::half(), &unit(), rats(&[(0, 1), (1, 1), (1, 1)]));
        assert_eq!(s.evaluate_derivative(&rat(0, 1)), rat(0, 1));
    }

    #[test]
    fn order_zero_series_derivative_is_zero() {
        let s = AlphaSeries::new(AlphaParam::half(), &unit(), vec![rat(5, 1)]);
        assert_eq!(s.evaluate_derivative(&rat(2, 1)), rat(0, 1));
        assert_eq!(s.evaluate_derivative_f64(0.3), 0.0);
    }

    #[test]
    fn boundary_weights_value_only() {
        let alpha = AlphaParam::half();
        let left = boundary_weights(&alpha, &unit(), 2, Endpoint::Left, &rat(1, 1), &rat(0, 1));
        assert_eq!(left, rats(&[(1, 1), (-1, 2), (1, 4)]));
        let right = boundary_weights(&alpha, &unit(), 2, Endpoint::Right, &rat(1, 1), &rat(0, 1));
        assert_eq!(right, rats(&[(1, 1), (1, 2), (1, 4)]));
    }

    #[test]
    fn boundary_weights_with_derivative_part() {
        let alpha = AlphaParam::half();
        let w = boundary_weights(&alpha, &unit(), 2, Endpoint::Left, &rat(1, 1), &rat(1, 1));
        assert_eq!(w, rats(&[(1, 1), (1, 2), (-3, 4)]));
    }

    #[test]
    fn boundary_weights_zero_t_uses_convention() {
        // alpha = 1 puts the center at the left endpoint, so t = 0: the k = 0
        // weight must be exactly c1 (no 0^-1 blowup) and k = 1 exactly c2.
        let w = boundary_weights(
            &AlphaParam::left(),
            &unit(),
            3,
            Endpoint::Left,
            &rat(5, 1),
            &rat(7, 1),
        );
        assert_eq!(w, ints(&[5, 7, 0, 0]));
    }

    #[test]
    fn general_interval_weights_specialize() {
        // On [0, 2] with alpha = 1/2 the center is 1, so t = -1 and +1.
        let iv = Interval::new(rat(0, 1), rat(2, 1)).unwrap();
        let alpha = AlphaParam::half();
        let wl = boundary_weights(&alpha, &iv, 2, Endpoint::Left, &rat(1, 1), &rat(0, 1));
        assert_eq!(wl, ints(&[1, -1, 1]));
        let wr = boundary_weights(&alpha, &iv, 2, Endpoint::Right, &rat(1, 1), &rat(0, 1));
        assert_eq!(wr, ints(&[1, 1, 1]));
    }

    #[test]
    fn real_series_evaluation() {
        let s = RealSeries::new(0.5, vec![1.0, 2.0, 3.0]);
        assert_eq!(s.evaluate(0.5), 1.0);
        assert_eq!(s.evaluate(1.5), 1.0 + 2.0 + 3.0);
        assert_eq!(s.evaluate_derivative(1.5), 2.0 + 6.0);
    }
}
