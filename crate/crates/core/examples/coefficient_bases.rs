// Moving between σ, the chromatic polynomial and Stirling numbers, and the
// log-concavity that real-rootedness forces on the coefficients.

use num_bigint::BigInt;
use sigmaroots::graph::Graph;
use sigmaroots::poly::{from_falling_factorial, is_log_concave, stirling2_row, to_falling_factorial};
use sigmaroots::sigma::{chromatic_polynomial, sigma};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // the edgeless graph: σ(E_n) counts all set partitions
    let row = stirling2_row(6);
    println!("S(6, ·) = {row:?}");
    assert_eq!(sigma(&Graph::empty(6)?).coefficients(), row.as_slice());

    let g = Graph::cycle(7)?;
    let p = chromatic_polynomial(&g)?;
    let back = to_falling_factorial(&p);
    println!("P(C7) = {p}");
    println!("in falling factorials: {back:?}");
    assert_eq!(from_falling_factorial(&back), p);
    assert_eq!(back, sigma(&g).coefficients());

    let lc = is_log_concave(sigma(&g).coefficients());
    println!("σ(C7) log-concave: {}", lc.holds);
    let bumpy: Vec<BigInt> = [1, 1, 5, 1].into_iter().map(BigInt::from).collect();
    println!("1, 1, 5, 1: {:?}", is_log_concave(&bumpy));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
