// Reading and writing graph6 corpora. Lenient reading keeps going past bad
// lines and reports them; strict reading stops at the first one.

use sigmaroots::graph::{parse_edge_list, to_edge_list, to_graph6, Graph};
use sigmaroots::harness::{read_graph6, write_graph6};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = vec![Graph::petersen(), Graph::cycle(5)?, Graph::complete(3)?];
    let mut buf = Vec::new();
    write_graph6(&mut buf, &graphs)?;
    let text = String::from_utf8(buf)?;
    print!("{text}");

    let damaged = format!("{text}bogus line \u{7f}\n");
    let corpus = read_graph6(damaged.as_bytes(), false)?;
    println!(
        "read {} graphs, {} malformed",
        corpus.graphs.len(),
        corpus.malformed.len()
    );
    for m in &corpus.malformed {
        println!("  line {}: {}", m.line, m.error);
    }
    assert_eq!(corpus.graphs, graphs);
    assert!(read_graph6(damaged.as_bytes(), true).is_err());

    let listed = to_edge_list(&Graph::cycle(4)?);
    println!("edge list of C4:\n{listed}");
    assert_eq!(
        to_graph6(&parse_edge_list(&listed)?),
        to_graph6(&Graph::cycle(4)?)
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
