use std::fmt::Write as _;

use super::Move;
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, parse_graph6, Graph};

/// Audit trail of a reduction: the starting graph, the moves applied in
/// order, and the graph they produced.
///
/// Text form, one item per line:
///
/// ```text
/// trace <n> <m> <graph6>
/// dom <x> <y>
/// edge <u> <v>
/// twinclass <kept> <removed...>
/// final <graph6>
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: Graph,
    pub moves: Vec<Move>,
    pub final_graph: Graph,
}

impl ReductionTrace {
    pub fn new(initial: Graph, moves: Vec<Move>, final_graph: Graph) -> Self {
        Self {
            initial,
            moves,
            final_graph,
        }
    }

    /// `(n, m, graph6)` of the initial graph.
    pub fn fingerprint(&self) -> (usize, usize, String) {
        (self.initial.n(), self.initial.edge_count(), emit_graph6(&self.initial))
    }

    pub fn to_text(&self) -> String {
        let (n, m, g6) = self.fingerprint();
        let mut out = format!("trace {n} {m} {g6}\n");
        for mv in &self.moves {
            match mv {
                Move::RemoveDominatedVertex { x, dominator } => {
                    writeln!(out, "dom {x} {dominator}").unwrap();
                }
                Move::RemoveEdge { u, v, .. } => writeln!(out, "edge {u} {v}").unwrap(),
                Move::RemoveTwinClass { kept, removed } => {
                    write!(out, "twinclass {kept}").unwrap();
                    for r in removed {
                        write!(out, " {r}").unwrap();
                    }
                    out.push('\n');
                }
            }
        }
        writeln!(out, "final {}", emit_graph6(&self.final_graph)).unwrap();
        out
    }

    /// Parses the text form. Moves are not validated here; see [`replay`].
    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |line: usize, message: String| Error::EdgeList { line, message };
        let mut initial = None;
        let mut final_graph = None;
        let mut moves = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let toks: Vec<&str> = raw.split_whitespace().collect();
            let Some((&kind, args)) = toks.split_first() else {
                continue;
            };
            if final_graph.is_some() {
                return Err(bad(line, "content after the final line".into()));
            }
            let nums = |args: &[&str]| -> Result<Vec<usize>> {
                args.iter()
                    .map(|a| a.parse().map_err(|_| bad(line, format!("invalid index '{a}'"))))
                    .collect()
            };
            match (kind, initial.is_some()) {
                ("trace", false) => {
                    let [n, m, g6] = args else {
                        return Err(bad(line, "expected 'trace <n> <m> <graph6>'".into()));
                    };
                    let g = parse_graph6(g6)?;
                    if nums(&[n, m])? != [g.n(), g.edge_count()] {
                        return Err(bad(line, "fingerprint does not match the graph".into()));
                    }
                    initial = Some(g);
                }
                ("trace", true) => return Err(bad(line, "duplicate header".into())),
                (_, false) => return Err(bad(line, "missing 'trace' header".into())),
                ("dom", true) => match nums(args)?[..] {
                    [x, dominator] => moves.push(Move::RemoveDominatedVertex { x, dominator }),
                    _ => return Err(bad(line, "expected 'dom <x> <y>'".into())),
                },
                ("edge", true) => match nums(args)?[..] {
                    [u, v] => moves.push(Move::RemoveEdge {
                        u,
                        v,
                        closed_edge_neighborhood: Vec::new(),
                    }),
                    _ => return Err(bad(line, "expected 'edge <u> <v>'".into())),
                },
                ("twinclass", true) => {
                    let v = nums(args)?;
                    let Some((&kept, removed)) = v.split_first() else {
                        return Err(bad(line, "expected 'twinclass <kept> <removed...>'".into()));
                    };
                    moves.push(Move::RemoveTwinClass {
                        kept,
                        removed: removed.to_vec(),
                    });
                }
                ("final", true) => {
                    let [g6] = args else {
                        return Err(bad(line, "expected 'final <graph6>'".into()));
                    };
                    final_graph = Some(parse_graph6(g6)?);
                }
                (other, true) => return Err(bad(line, format!("unknown move '{other}'"))),
            }
        }
        match (initial, final_graph) {
            (Some(initial), Some(final_graph)) => Ok(Self::new(initial, moves, final_graph)),
            _ => Err(bad(
                text.lines().count(),
                "trace is missing its header or final line".into(),
            )),
        }
    }
}

/// Re-applies every move, re-checking its precondition, and confirms the
/// recorded final graph.
pub fn replay(trace: &ReductionTrace) -> Result<Graph> {
    let mut g = trace.initial.clone();
    for (index, mv) in trace.moves.iter().enumerate() {
        g = mv.apply(&g).map_err(|e| Error::TraceCorrupted {
            index,
            message: e.to_string(),
        })?;
    }
    if g != trace.final_graph {
        return Err(Error::TraceCorrupted {
            index: trace.moves.len(),
            message: "replayed graph differs from the recorded final graph".into(),
        });
    }
    Ok(g)
}
