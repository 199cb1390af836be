// Seeded audit of every σ method against the others, plus the join identity.

use sigmaroots::harness::{crosscheck, CrosscheckConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = CrosscheckConfig {
        exhaustive_max_n: 5,
        random_count: 200,
        random_orders: 8..=10,
        join_pairs: 100,
        ..CrosscheckConfig::default()
    };
    let report = crosscheck(&config)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    assert!(report.is_clean());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
