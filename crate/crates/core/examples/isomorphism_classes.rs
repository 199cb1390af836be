// Canonical forms, exhaustive class enumeration and extension by one vertex.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sigmaroots::graph::{are_isomorphic, canonical_form, Graph};
use sigmaroots::harness::{classes_up_to, enumerate_small, extend_classes};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::petersen();
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(3));
    let h = g.permute(&perm);
    println!("relabelled Petersen: {h}, canonical {}", canonical_form(&h));
    assert!(are_isomorphic(&g, &h));
    assert_eq!(canonical_form(&g), canonical_form(&h));

    for (n, level) in classes_up_to(6).iter().enumerate() {
        println!("order {n}: {} classes", level.len());
    }
    let seven = enumerate_small(7)?;
    let eight = extend_classes(&seven);
    println!(
        "order 7: {} classes, order 8 by extension: {}",
        seven.len(),
        eight.len()
    );
    assert_eq!((seven.len(), eight.len()), (1044, 12_346));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
