// Scan a corpus with chromatic filters, quarantining anything with a nonreal
// root. The corpus here is every graph of order at most 6 plus the two
// order-8 graphs whose σ has nonreal roots.

use sigmaroots::graph::parse_graph6;
use sigmaroots::harness::{classes_up_to, scan, verify_brenti, ChiFilter, ScanConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut corpus: Vec<_> = classes_up_to(6).concat();
    corpus.push(parse_graph6("GKNNfw")?);
    corpus.push(parse_graph6("GBje~w")?);

    let dir = std::env::temp_dir().join(format!("sigmaroots-quarantine-{}", std::process::id()));
    let config = ScanConfig {
        quarantine: Some(dir.clone()),
        agreement_every: 8,
        ..ScanConfig::default()
    };
    let all = scan(&corpus, &config)?;
    println!(
        "{} graphs, {} nonreal {:?}, {} cross-checked",
        all.total, all.nonreal_count, all.nonreal, all.method_checks
    );
    let mut files: Vec<_> = std::fs::read_dir(&dir)?
        .map(|e| e.map(|e| e.file_name()))
        .collect::<Result<_, _>>()?;
    files.sort();
    println!("quarantined: {files:?}");
    std::fs::remove_dir_all(&dir)?;
    assert_eq!(all.nonreal_count, 2);

    let filtered = scan(
        &corpus,
        &ScanConfig {
            filters: vec!["n-4".parse::<ChiFilter>()?],
            ..ScanConfig::default()
        },
    )?;
    println!(
        "χ = n−4: {} selected, {} nonreal",
        filtered.selected, filtered.nonreal_count
    );

    let brenti = verify_brenti(&corpus, &ScanConfig::default())?;
    println!(
        "χ ≥ n−3: {} selected, clean {}",
        brenti.selected,
        brenti.is_clean()
    );
    assert!(brenti.is_clean());
    println!("{}", serde_json::to_string_pretty(&brenti.filter_counts)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
