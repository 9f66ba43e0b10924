use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use clique_homotopy::harness::parse_corpus_text;
use clique_homotopy::Graph;

use crate::CliError;

fn read_source(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

/// Reads exactly one graph (graph6 or DIMACS) from a file, or stdin when
/// the path is absent or `-`. Lines starting with `#` are ignored.
pub fn read_graph(path: Option<&PathBuf>) -> Result<Graph, CliError> {
    let text = read_source(path.map(PathBuf::as_path))?;
    let mut entries = parse_corpus_text(&text).into_iter();
    let g = match entries.next() {
        None => return Err(CliError::Usage("no graph in input".into())),
        Some(Err(f)) => return Err(CliError::Usage(format!("line {}: {}", f.line, f.error))),
        Some(Ok(g)) => g,
    };
    let extra = entries.count();
    if extra > 0 {
        return Err(CliError::Usage(format!("expected one graph, found {}", extra + 1)));
    }
    Ok(g)
}
