// Family grids described in JSON, certified member by member.

use sigmaroots::families::FamilySpec;
use sigmaroots::harness::{scan_families, ScanConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let specs: Vec<FamilySpec> = serde_json::from_str(
        r#"[
            {"family": "pointcover", "m1": [0, 2], "m2": 1, "m3": [0, 1], "r": 0, "j": [1, 2], "k": 1, "t": [0, 2]},
            {"family": "f45", "variant": [4, 5], "m": [0, 4]},
            {"family": "f_closed", "variant": [2, 3], "m": [0, 20]}
        ]"#,
    )?;
    for spec in &specs {
        let members = spec.members()?;
        println!("{} members, first {}", members.len(), members[0].label());
    }
    let summary = scan_families(&specs, &ScanConfig::default())?;
    println!("{}", serde_json::to_string_pretty(&summary)?);
    assert!(summary.is_clean());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
