// Sturm certificates for σ(G, x)/x^χ, one real-rooted and one not.

use sigmaroots::graph::{parse_graph6, Graph};
use sigmaroots::realroots::{isolate_roots, SturmChain};
use sigmaroots::sigma::sigma;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [("C6", Graph::cycle(6)?), ("GKNNfw", parse_graph6("GKNNfw")?)];
    for (name, g) in &graphs {
        let s = sigma(g);
        let cert = s.certify()?;
        let reduced = s.reduced().to_rational();
        let chain = SturmChain::new(&reduced)?;
        println!("{name}: σ/x^χ = {reduced}");
        println!(
            "  chain degrees {:?}, leading signs {:?}",
            chain.degrees(),
            chain.leading_signs()
        );
        println!("  real-rooted: {} (witness {:?})", cert.verdict, cert.witness);
        for iv in isolate_roots(&reduced)? {
            println!("  root in ({}, {}]", iv.lo, iv.hi);
        }
    }
    assert!(sigma(&graphs[0].1).certify()?.verdict);
    assert!(!sigma(&graphs[1].1).certify()?.verdict);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
