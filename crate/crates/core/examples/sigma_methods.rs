// σ-polynomials of a few named graphs by every method, with χ and the
// chromatic polynomial recovered from the falling-factorial expansion.
//
//     cargo run --example sigma_methods

use sigmaroots::graph::Graph;
use sigmaroots::poly::from_falling_factorial;
use sigmaroots::sigma::{chromatic_polynomial, SigmaMethod, SigmaPolynomial};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let named = [
        ("C5", Graph::cycle(5)?),
        ("P6", Graph::path(6)?),
        ("K4", Graph::complete(4)?),
        ("Petersen", Graph::petersen()),
    ];
    for (name, g) in &named {
        let s = SigmaMethod::CliqueCover.compute(g)?;
        println!("{name}: σ = {}  χ = {}", s.poly(), s.chi());
        for method in [
            SigmaMethod::BruteForce,
            SigmaMethod::Chromatic,
            SigmaMethod::Recursive,
            SigmaMethod::Matching,
        ] {
            match method.compute(g) {
                Ok(other) => {
                    assert_eq!(other, s);
                    println!("  {method:?} agrees");
                }
                Err(e) => println!("  {method:?} does not apply: {e}"),
            }
        }
        // P(G, x) = Σ a_i (x)_i
        assert_eq!(from_falling_factorial(s.coefficients()), chromatic_polynomial(g)?);
    }

    // σ is multiplicative over joins
    let (c5, k2) = (Graph::cycle(5)?, Graph::complete(2)?);
    let joined = SigmaMethod::CliqueCover.compute(&c5.join(&k2)?)?;
    let product = SigmaPolynomial::from_coefficients(
        (SigmaMethod::CliqueCover.compute(&c5)?.poly() * SigmaMethod::CliqueCover.compute(&k2)?.poly())
            .into_coeffs(),
    );
    assert_eq!(joined, product);
    println!("σ(C5 ∨ K2) = {}", joined.poly());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
