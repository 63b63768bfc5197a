//! Jet calculus from the ground up: endpoint coefficient sequences, the
//! operational rules (sum, scale, product, derivative), and the blended
//! series with its interior expansion center.
//!
//! Run with: `cargo run --example jet_calculus`

use alpha_dtm::{rat, AlphaParam, EndpointJet, Interval};

fn show(label: &str, jet: &EndpointJet) {
    let fmt = |coeffs: &[alpha_dtm::Rational]| {
        coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("{label}");
    println!("  at a: ({})", fmt(jet.coeffs_a()));
    println!("  at b: ({})", fmt(jet.coeffs_b()));
}

fn main() {
    let interval = Interval::unit();
    let order = 4;

    // A jet stores the scaled Taylor coefficients f^(k)(endpoint)/k! of one
    // function at BOTH endpoints of the interval, as exact rationals.
    let x = EndpointJet::monomial(1, interval.clone(), order);
    let x2 = EndpointJet::monomial(2, interval.clone(), order);
    show("jet of x on [0, 1]:", &x);
    show("jet of x² on [0, 1]:", &x2);

    // The operational rules act on both endpoint sequences at once, exactly.
    show("jet of x + x²:", &x.add(&x2).unwrap());
    show("jet of 3·x²:", &x2.scale(&rat(3, 1)));
    show(
        "jet of x·x² (Cauchy product, truncated at order 4):",
        &x.mul(&x2).unwrap(),
    );
    show(
        "jet of (x²)′ = 2x (derivative shift):",
        &x2.differentiate(1).unwrap(),
    );

    // Blending the endpoint sequences with a parameter alpha gives a single
    // series centered at x_alpha = alpha·a + (1 − alpha)·b. The endpoints
    // reproduce the classical one-point expansions...
    let at_a = x2.alpha_combine(&AlphaParam::left());
    let at_b = x2.alpha_combine(&AlphaParam::right());
    println!(
        "\nblend of x² at alpha = 1: center {}, coeffs {:?}",
        at_a.center(),
        at_a.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );
    println!(
        "blend of x² at alpha = 0: center {}, coeffs {:?}",
        at_b.center(),
        at_b.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );

    // ...while an interior alpha is a genuinely different object: the
    // alpha = 1/2 blend of x² is x² + 1/4, NOT x². The offset is the price
    // of averaging two expansions of a non-linear function.
    let mid = x2.alpha_combine(&AlphaParam::half());
    println!(
        "\nblend of x² at alpha = 1/2: center {}, coeffs {:?}",
        mid.center(),
        mid.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );
    for i in 0..=4 {
        let p = rat(i, 4);
        let value = mid.evaluate(&p);
        let diff = &value - &p * &p;
        println!("  at x = {p}: blend = {value}, blend − x² = {diff}");
    }
    println!("(the difference is identically 1/4: exact, not a rounding artifact)");

    // Where the blend shines: for solutions of differential equations the
    // coefficients come from a recurrence, not from f itself, and interior
    // alpha centers the expansion inside the interval. See the bvp_dirichlet
    // and eigen_robin examples for that payoff.
}
