//! Property-based invariants for the jet calculus, the blend operation, and
//! the exact parsers. Everything here is checked with *exact* rational
//! equality — any violation is a genuine algebra bug, not roundoff.

mod common;

use alpha_dtm::{parse_rational, rat, AlphaParam, EndpointJet, Interval, LambdaPoly, Rational};
use common::{poly_add, poly_derivative, poly_eval, poly_mul, poly_scale, Poly};
use num_traits::Zero;
use proptest::prelude::*;

const ORDER: usize = 12;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(arb_rational(), 1..=9) // degree <= 8
}

fn arb_alpha() -> impl Strategy<Value = AlphaParam> {
    (0i64..=24, 1i64..=24).prop_map(|(n, d)| {
        let (n, d) = if n <= d { (n, d) } else { (d, n) };
        AlphaParam::new(rat(n, d)).expect("n/d lies in [0, 1] by construction")
    })
}

fn arb_interval() -> impl Strategy<Value = Interval> {
    (arb_rational(), 1i64..=8, 1i64..=6).prop_map(|(a, wn, wd)| {
        let b = &a + rat(wn, wd);
        Interval::new(a, b).expect("width is positive by construction")
    })
}

proptest! {
    /// `alpha_combine` is linear: blending the sum equals summing the blends.
    #[test]
    fn combine_is_linear(
        f in arb_poly(),
        g in arb_poly(),
        alpha in arb_alpha(),
        interval in arb_interval(),
    ) {
        let jf = EndpointJet::from_polynomial(&f, interval.clone(), ORDER);
        let jg = EndpointJet::from_polynomial(&g, interval.clone(), ORDER);
        let lhs = jf.add(&jg).unwrap().alpha_combine(&alpha);
        let sum_series: Vec<Rational> = jf
            .alpha_combine(&alpha)
            .coeffs()
            .iter()
            .zip(jg.alpha_combine(&alpha).coeffs())
            .map(|(x, y)| x + y)
            .collect();
        prop_assert_eq!(lhs.coeffs(), &sum_series[..]);

        // And the sum jet agrees with the jet of the symbolic sum.
        let symbolic = EndpointJet::from_polynomial(&poly_add(&f, &g), interval, ORDER);
        prop_assert_eq!(jf.add(&jg).unwrap(), symbolic);
    }

    /// Scaling commutes with blending and with the symbolic scale.
    #[test]
    fn scale_commutes(
        f in arb_poly(),
        c in arb_rational(),
        alpha in arb_alpha(),
        interval in arb_interval(),
    ) {
        let jet = EndpointJet::from_polynomial(&f, interval.clone(), ORDER);
        let scaled_then_combined = jet.scale(&c).alpha_combine(&alpha);
        let combined_then_scaled: Vec<Rational> = jet
            .alpha_combine(&alpha)
            .coeffs()
            .iter()
            .map(|x| x * &c)
            .collect();
        prop_assert_eq!(scaled_then_combined.coeffs(), &combined_then_scaled[..]);

        let symbolic = EndpointJet::from_polynomial(&poly_scale(&c, &f), interval, ORDER);
        prop_assert_eq!(jet.scale(&c), symbolic);
    }

    /// The product theorem on monomials: `jet(x^i) * jet(x^j)` equals
    /// `jet(x^(i+j))` exactly whenever `i + j` fits inside the order.
    #[test]
    fn product_of_monomials(
        i in 0usize..=6,
        j in 0usize..=6,
        interval in arb_interval(),
    ) {
        let ji = EndpointJet::monomial(i, interval.clone(), ORDER);
        let jj = EndpointJet::monomial(j, interval.clone(), ORDER);
        let product = ji.mul(&jj).unwrap();
        prop_assert_eq!(product, EndpointJet::monomial(i + j, interval, ORDER));
    }

    /// The product theorem on general polynomials, against the symbolic
    /// product (degrees kept small enough that nothing truncates).
    #[test]
    fn product_matches_symbolic(
        f in prop::collection::vec(arb_rational(), 1..=7), // degree <= 6
        g in prop::collection::vec(arb_rational(), 1..=7),
        interval in arb_interval(),
    ) {
        let jf = EndpointJet::from_polynomial(&f, interval.clone(), ORDER);
        let jg = EndpointJet::from_polynomial(&g, interval.clone(), ORDER);
        let symbolic = EndpointJet::from_polynomial(&poly_mul(&f, &g), interval, ORDER);
        prop_assert_eq!(jf.mul(&jg).unwrap(), symbolic);
    }

    /// The derivative theorem: shifting the jet of `p` by `m` equals the jet
    /// of the `m`-th symbolic derivative of `p`, at the reduced order.
    #[test]
    fn derivative_matches_symbolic(
        f in arb_poly(),
        m in 0usize..=4,
        interval in arb_interval(),
    ) {
        let jet = EndpointJet::from_polynomial(&f, interval.clone(), ORDER);
        let shifted = jet.differentiate(m).unwrap();
        let symbolic =
            EndpointJet::from_polynomial(&poly_derivative(&f, m), interval, ORDER - m);
        prop_assert_eq!(shifted, symbolic);
    }

    /// Constants survive any blend: the combined series of `jet(c)` evaluates
    /// to `c` everywhere.
    #[test]
    fn constants_are_reproduced(
        c in arb_rational(),
        alpha in arb_alpha(),
        interval in arb_interval(),
        x in arb_rational(),
    ) {
        let series = EndpointJet::constant(c.clone(), interval, ORDER)
            .alpha_combine(&alpha);
        prop_assert_eq!(series.evaluate(&x), c);
        prop_assert_eq!(series.evaluate_derivative(&x), Rational::zero());
    }

    /// At the boundary values of `alpha` the blend reduces to the classical
    /// one-point expansion, so a polynomial of degree within the order is
    /// reproduced *exactly* at every rational point.
    #[test]
    fn endpoint_alphas_reproduce_polynomials(
        f in arb_poly(),
        interval in arb_interval(),
        xs in prop::collection::vec(arb_rational(), 20),
    ) {
        let jet = EndpointJet::from_polynomial(&f, interval, ORDER);
        let left = jet.alpha_combine(&AlphaParam::left());
        let right = jet.alpha_combine(&AlphaParam::right());
        prop_assert_eq!(left.coeffs(), jet.coeffs_a());
        prop_assert_eq!(right.coeffs(), jet.coeffs_b());
        for x in &xs {
            let expected = poly_eval(&f, x);
            prop_assert_eq!(left.evaluate(x), expected.clone());
            prop_assert_eq!(right.evaluate(x), expected);
        }
    }

    /// Interior `alpha` does *not* reproduce general polynomials — that bias
    /// is the method's documented semantics — but affine functions are still
    /// exact for every blend, because their endpoint jets agree beyond
    /// degree 0.
    #[test]
    fn interior_alpha_reproduces_affine_functions(
        c0 in arb_rational(),
        c1 in arb_rational(),
        alpha in arb_alpha(),
        interval in arb_interval(),
        x in arb_rational(),
    ) {
        let f = vec![c0.clone(), c1.clone()];
        let series = EndpointJet::from_polynomial(&f, interval, ORDER).alpha_combine(&alpha);
        prop_assert_eq!(series.evaluate(&x), poly_eval(&f, &x));
        prop_assert_eq!(series.evaluate_derivative(&x), c1);
    }

    /// For quadratics the interior blend is off by *exactly* the constant
    /// `alpha·(1 − alpha)·(b − a)²` — the two-point variance. This
    /// generalizes the `x² + 1/4` witness to every interval and blend, and
    /// pins the sign and size of the interior bias.
    #[test]
    fn interior_alpha_bias_on_quadratics_is_the_variance(
        alpha in arb_alpha(),
        interval in arb_interval(),
        x in arb_rational(),
    ) {
        let series = EndpointJet::monomial(2, interval.clone(), ORDER).alpha_combine(&alpha);
        let width = interval.b() - interval.a();
        let bias = alpha.value() * alpha.complement() * (&width * &width);
        prop_assert_eq!(series.evaluate(&x), &x * &x + bias);
        // The bias is constant, so the derivative is reproduced exactly.
        prop_assert_eq!(series.evaluate_derivative(&x), rat(2, 1) * &x);
    }

    /// `parse_rational` round-trips the canonical `num/den` rendering.
    #[test]
    fn rational_roundtrip(r in arb_rational()) {
        let text = r.to_string();
        prop_assert_eq!(parse_rational(&text).unwrap(), r);
    }

    /// `LambdaPoly` survives a display/parse round trip losslessly.
    #[test]
    fn lambda_poly_roundtrip(coeffs in prop::collection::vec(arb_rational(), 0..=8)) {
        let poly = LambdaPoly::new(coeffs);
        let text = poly.to_string();
        let parsed: LambdaPoly = text.parse().unwrap();
        prop_assert_eq!(parsed, poly);
    }
}

/// Decimal strings parse to the exact represented rational, not an f64
/// approximation.
#[test]
fn decimals_parse_exactly() {
    assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
    assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
    assert_eq!(parse_rational("2.5e-1").unwrap(), rat(1, 4));
    assert_eq!(parse_rational("1e3").unwrap(), rat(1000, 1));
    // A decimal that f64 cannot represent exactly still parses exactly.
    assert_eq!(parse_rational("0.1").unwrap(), rat(1, 10));
}
