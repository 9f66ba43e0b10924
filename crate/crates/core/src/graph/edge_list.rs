use super::Graph;
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        message: message.into(),
    }
}

fn field(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("invalid {what} '{tok}'")))
}

/// Parses the DIMACS-style edge list: a `p edge <n> <m>` line followed by
/// exactly `m` lines `e <u> <v>` with 1-based endpoints. Blank lines and
/// `c` comment lines are skipped. Repeated edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen_edges = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(err(line_no, "duplicate problem line"));
                }
                if toks.next() != Some("edge") {
                    return Err(err(line_no, "expected 'p edge <n> <m>'"));
                }
                let n = field(toks.next(), line_no, "vertex count")?;
                let m = field(toks.next(), line_no, "edge count")?;
                graph = Some((Graph::empty(n), m));
            }
            Some("e") => {
                let (g, _) = graph.as_mut().ok_or_else(|| err(line_no, "edge before problem line"))?;
                let u = field(toks.next(), line_no, "endpoint")?;
                let v = field(toks.next(), line_no, "endpoint")?;
                let n = g.n();
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line_no, format!("vertex {x} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(line_no, format!("self-loop at vertex {u}")));
                }
                g.add_edge(u - 1, v - 1);
                seen_edges += 1;
            }
            Some(other) => return Err(err(line_no, format!("unknown line type '{other}'"))),
        }
        if toks.next().is_some() {
            return Err(err(line_no, "trailing tokens"));
        }
    }
    let (g, m) = graph.ok_or_else(|| err(0, "missing problem line"))?;
    if seen_edges != m {
        return Err(err(
            text.lines().count(),
            format!("header declares {m} edges but {seen_edges} were listed"),
        ));
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_complete;

    #[test]
    fn triangle() {
        let g = parse_edge_list("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, gen_complete(3).unwrap());
        assert_eq!(emit_edge_list(&g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn isolated_vertices() {
        let g = parse_edge_list("p edge 2 0").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
    }

    #[test]
    fn rejects_bad_input() {
        let e = parse_edge_list("p edge 2 1\ne 1 1").unwrap_err();
        assert!(matches!(e, Error::EdgeList { line: 2, ref message } if message.contains("self-loop")));
        assert!(parse_edge_list("p edge 2 1\ne 1 3").is_err());
        assert!(parse_edge_list("p edge 3 2\ne 1 2").is_err());
        assert!(parse_edge_list("e 1 2").is_err());
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_edge_list("c dup\np edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(emit_edge_list(&g), "p edge 2 1\ne 1 2\n");
    }
}
