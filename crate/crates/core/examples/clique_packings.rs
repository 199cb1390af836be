// Top coefficients of σ from clique packings of the complement: a_{n−k} is
// the number of ways to place vertex-disjoint cliques of total excess k in Ḡ.

use num_bigint::BigUint;
use sigmaroots::families::is_proper_k_star;
use sigmaroots::graph::{vertex_cover_number, Graph};
use sigmaroots::sigma::{eta_count, forbidden_shapes, sigma};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::petersen();
    let h = g.complement();
    let n = g.order();
    let s = sigma(&g);
    for k in 1..=4 {
        let mut total = BigUint::from(0u32);
        for shape in forbidden_shapes(k) {
            let count = eta_count(&h, &shape);
            println!("  η({:?}) = {count}", shape.orders());
            total += count;
        }
        println!("a_{{n−{k}}} = {total}");
        assert_eq!(total, s.coeff(n - k).to_biguint().expect("nonnegative"));
    }

    let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])?;
    println!(
        "K1,4: vertex cover {}, proper 1-star {}",
        vertex_cover_number(&star),
        is_proper_k_star(&star, 1)
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
