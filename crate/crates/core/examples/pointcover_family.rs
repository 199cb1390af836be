// The point-cover family: closed-form σ against brute force, then the root
// interlacing of the cubic and quadratics that drives the χ = n − 3 proof.

use sigmaroots::families::{
    pointcover_complement, quadratic_compatibility_check, root_chain_check, sigma_pointcover_formula,
    AlphaBeta, PointCoverParams,
};
use sigmaroots::graph::chromatic_number;
use sigmaroots::sigma::sigma_bruteforce;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = PointCoverParams::new(1, 2, 1, 1, 2, 1);
    let g = pointcover_complement(&p)?.complement();
    let formula = sigma_pointcover_formula(&p)?;
    println!("{p:?}: n = {}, χ = {}", g.order(), chromatic_number(&g));
    println!("  formula     {}", formula.poly());
    println!("  brute force {}", sigma_bruteforce(&g)?.poly());
    assert_eq!(formula, sigma_bruteforce(&g)?);
    println!("  real-rooted: {}", formula.certify()?.verdict);

    let ab = p.alpha_beta();
    println!("α = {}, β = {}: cubic {}", ab.alpha, ab.beta, ab.cubic());
    println!("  q_J = {}, q_K = {}", ab.quadratic_j(), ab.quadratic_k());
    println!("  quadratics compatible: {}", quadratic_compatibility_check(ab)?);
    println!("  root chain {:?}", root_chain_check(ab)?);

    // the strict chain needs α, β ≥ 2
    println!("α = β = 1: {:?}", root_chain_check(AlphaBeta::new(1, 1))?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
