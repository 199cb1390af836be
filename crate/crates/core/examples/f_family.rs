// The F families: Sturm data of the variant 2 and 3 cubics, and certified
// σ for the graphs of variants 4 and 5.

use sigmaroots::families::{f45_construction, f_family_cubic, f_family_sigma};
use sigmaroots::graph::chromatic_number;
use sigmaroots::realroots::SturmChain;
use sigmaroots::sigma::sigma;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for variant in [2, 3] {
        for m in [0, 1, 5] {
            let cubic = f_family_cubic(variant, m)?;
            let chain = SturmChain::unnormalized(&cubic.to_rational())?;
            let lead: Vec<String> = chain
                .leading_coefficients()
                .iter()
                .map(ToString::to_string)
                .collect();
            println!(
                "F{variant}, m = {m}: {cubic}; chain leading values {}",
                lead.join(", ")
            );
            assert_eq!(chain.leading_signs(), [1, 1, 1, 1]);
        }
        let closed = f_family_sigma(variant, 100)?;
        println!("F{variant}, m = 100: degree {:?}", closed.degree());
    }
    for variant in [4, 5] {
        let g = f45_construction(variant, 3)?;
        let s = sigma(&g);
        println!(
            "F{variant}, m = 3: n = {}, χ = {}, real-rooted {}",
            g.order(),
            chromatic_number(&g),
            s.certify()?.verdict
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
