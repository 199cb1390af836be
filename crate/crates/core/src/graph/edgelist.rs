//! Plain-text edge lists: first line is the order `n`, then one `u v` pair
//! per line. Blank lines and `#` comments are ignored.

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines.next().ok_or(GraphError::EdgeList {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = first.parse().map_err(|_| GraphError::EdgeList {
        line,
        msg: format!("bad vertex count {first:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => edges.push((u, v)),
            _ => {
                return Err(GraphError::EdgeList {
                    line,
                    msg: format!("expected two vertex indices, got {l:?}"),
                })
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
