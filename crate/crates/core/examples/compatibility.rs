// Compatible polynomials: every positive combination stays real-rooted
// exactly when the two root sequences share an interleaver.

use sigmaroots::poly::{RatPoly, Rational};
use sigmaroots::realroots::{are_compatible, common_interleaver_exists, compatible_combo_probe, interleaves};

fn product(roots: &[i64]) -> RatPoly {
    roots.iter().fold(RatPoly::one(), |acc, &r| {
        &acc * &RatPoly::linear(Rational::from_integer(r.into()))
    })
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = product(&[-1, -4, -7]);
    let g = product(&[-2, -5, -8]);
    let h = product(&[-3, -4]);
    let far = product(&[-1, -2, -3, -4]);

    println!("{f} interleaves {g}: {}", interleaves(&f, &g)?);
    println!("compatible(f, g) = {}", are_compatible(&f, &g)?);
    println!("compatible(f, h) = {}", are_compatible(&f, &h)?);
    println!("compatible(h, x⁴ …) = {}", are_compatible(&h, &far)?);
    println!(
        "common interleaver for f, g, h: {}",
        common_interleaver_exists(&[f.clone(), g.clone(), h.clone()])?
    );

    for c in [1, 10, 1000] {
        let c = Rational::from_integer(c.into());
        let cert = compatible_combo_probe(&h, &far, &c)?;
        println!("{c}·h + far is real-rooted: {}", cert.verdict);
    }
    assert!(are_compatible(&f, &g)?);
    assert!(!are_compatible(&h, &far)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
