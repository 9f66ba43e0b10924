use std::collections::HashMap;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::graph::{isomorphic_unguarded, parse_edge_list, parse_graph6, Graph, VertexSet};

/// Largest vertex count for generated corpora.
pub const GENERATED_MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSource {
    /// Connected graphs on `1..=max_n` vertices with degree bound
    /// `max_degree`. With `dedup`, one graph per isomorphism class;
    /// without, every labeled graph.
    Generated { dedup: bool },
    /// One graph6 line per graph.
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub max_n: usize,
    pub max_degree: usize,
    pub source: CorpusSource,
    /// `O_3` is dropped unless this is set.
    pub include_octahedron: bool,
}

impl CorpusSpec {
    /// Connected graphs with `Δ ≤ 4` up to isomorphism, without `O_3`.
    pub fn low_degree(max_n: usize) -> Self {
        Self {
            max_n,
            max_degree: 4,
            source: CorpusSource::Generated { dedup: true },
            include_octahedron: false,
        }
    }

    /// All connected graphs up to isomorphism.
    pub fn all_connected(max_n: usize) -> Self {
        Self {
            max_n,
            max_degree: usize::MAX,
            source: CorpusSource::Generated { dedup: true },
            include_octahedron: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let CorpusSource::Generated { .. } = self.source {
            if self.max_n == 0 || self.max_n > GENERATED_MAX_N {
                return Err(Error::InvalidArgument(format!(
                    "generated corpora need 1 <= max_n <= {GENERATED_MAX_N}, got {}",
                    self.max_n
                )));
            }
        }
        Ok(())
    }

    fn keep(&self, g: &Graph) -> bool {
        g.n() <= self.max_n
            && g.max_degree() <= self.max_degree
            && g.is_connected()
            && (self.include_octahedron || g.octahedron_order() != Some(3))
    }
}

/// A corpus line that failed to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseFailure {
    pub line: usize,
    pub text: String,
    pub error: String,
}

pub type CorpusEntry = std::result::Result<Graph, ParseFailure>;

/// Materializes the corpus in a deterministic order.
///
/// Generated corpora (deduplicated) are built by vertex augmentation: every
/// connected graph arises from a connected graph on one vertex fewer plus a
/// new vertex (remove a non-cut vertex), so extending each class
/// representative by every admissible neighborhood and discarding
/// isomorphic duplicates yields each class exactly once.
pub fn enumerate_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>> {
    spec.validate()?;
    match &spec.source {
        CorpusSource::Generated { dedup: true } => Ok(connected_classes(spec.max_n, spec.max_degree)
            .into_iter()
            .filter(|g| spec.keep(g))
            .map(Ok)
            .collect()),
        CorpusSource::Generated { dedup: false } => {
            Ok(labeled_graphs(spec.max_n).filter(|g| spec.keep(g)).map(Ok).collect())
        }
        CorpusSource::File(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
            Ok(parse_corpus_text(&text)
                .into_iter()
                .filter(|e| e.as_ref().map_or(true, |g| spec.keep(g)))
                .collect())
        }
    }
}

/// Reads graph6 lines, keeping going past unparsable ones. A text whose
/// first meaningful line is a `p edge` header is read as one edge list.
pub fn parse_corpus_text(text: &str) -> Vec<CorpusEntry> {
    let meaningful = |l: &&str| !l.trim().is_empty() && !l.starts_with('#');
    let first = text.lines().find(meaningful).unwrap_or("");
    if first.starts_with("p ") || first.starts_with("c ") || first == "c" {
        return vec![parse_edge_list(text).map_err(|e| ParseFailure {
            line: 1,
            text: first.to_string(),
            error: e.to_string(),
        })];
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| meaningful(l))
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| ParseFailure {
                line: i + 1,
                text: l.to_string(),
                error: e.to_string(),
            })
        })
        .collect()
}

/// Every labeled graph on `1..=max_n` vertices, in order of `n` and then of
/// the edge bit-pattern.
pub fn labeled_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let mut g = Graph::empty(n);
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
            g
        })
    })
}

/// Cheap isomorphism invariant used to bucket candidates.
fn invariant_key(g: &Graph) -> Vec<u64> {
    let mut per_vertex: Vec<u64> = (0..g.n())
        .map(|v| {
            let nb = g.neighbors(v);
            let tri: usize = nb.iter().map(|u| g.neighbors(u).intersection_len(nb)).sum::<usize>() / 2;
            let mut nd: Vec<usize> = nb.iter().map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            let nd_code = nd.iter().fold(0u64, |acc, &d| acc * 31 + d as u64 + 1);
            ((g.degree(v) as u64) << 56) ^ ((tri as u64) << 48) ^ nd_code
        })
        .collect();
    per_vertex.sort_unstable();
    per_vertex.insert(0, g.edge_count() as u64);
    per_vertex.insert(0, g.n() as u64);
    per_vertex
}

/// Isomorphism-class representatives accumulated in first-seen order.
struct ClassSet {
    buckets: HashMap<Vec<u64>, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl ClassSet {
    fn new() -> Self {
        Self {
            buckets: HashMap::new(),
            graphs: Vec::new(),
        }
    }

    fn insert(&mut self, g: Graph) {
        let bucket = self.buckets.entry(invariant_key(&g)).or_default();
        if bucket.iter().any(|&i| isomorphic_unguarded(&self.graphs[i], &g)) {
            return;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
    }
}

/// One representative per isomorphism class of connected graphs with
/// `1 <= n <= max_n` and maximum degree at most `max_degree`.
pub fn connected_classes(max_n: usize, max_degree: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_n == 0 {
        return out;
    }
    let mut level = vec![Graph::empty(1)];
    for n in 2..=max_n {
        out.append(&mut level.clone());
        let mut next = ClassSet::new();
        for parent in &level {
            let open: Vec<usize> = (0..parent.n()).filter(|&v| parent.degree(v) < max_degree).collect();
            for mask in 1u32..1 << open.len() {
                if mask.count_ones() as usize > max_degree {
                    continue;
                }
                let nbrs = VertexSet::from_vertices(n, (0..open.len()).filter(|b| mask >> b & 1 == 1).map(|b| open[b]));
                next.insert(augment(parent, &nbrs));
            }
        }
        level = next.graphs;
    }
    out.append(&mut level);
    out
}

fn augment(parent: &Graph, nbrs: &VertexSet) -> Graph {
    let n = parent.n() + 1;
    let mut g = Graph::empty(n);
    for (u, v) in parent.edges() {
        g.add_edge(u, v);
    }
    for u in nbrs {
        g.add_edge(u, n - 1);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: &CorpusSpec) -> usize {
        enumerate_corpus(spec).unwrap().len()
    }

    #[test]
    fn small_corpus_counts() {
        assert_eq!(count(&CorpusSpec::low_degree(2)), 2);
        assert_eq!(count(&CorpusSpec::low_degree(3)), 4);
        assert_eq!(count(&CorpusSpec::low_degree(4)), 10);
    }

    #[test]
    fn connected_graph_counts_match_known_sequence() {
        // connected unlabeled graphs on n vertices: 1, 1, 2, 6, 21, 112, 853
        let all = connected_classes(7, usize::MAX);
        let per_n: Vec<usize> = (1..=7).map(|n| all.iter().filter(|g| g.n() == n).count()).collect();
        assert_eq!(per_n, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn octahedron_inclusion() {
        let mut spec = CorpusSpec::low_degree(6);
        let without = count(&spec);
        spec.include_octahedron = true;
        assert_eq!(count(&spec), without + 1);
    }

    #[test]
    fn labeled_enumeration() {
        let spec = CorpusSpec {
            max_n: 3,
            max_degree: 4,
            source: CorpusSource::Generated { dedup: false },
            include_octahedron: false,
        };
        // labeled connected graphs: 1 + 1 + 4
        assert_eq!(count(&spec), 6);
    }

    #[test]
    fn guard() {
        assert!(enumerate_corpus(&CorpusSpec::low_degree(9)).is_err());
        assert!(enumerate_corpus(&CorpusSpec::low_degree(0)).is_err());
    }

    #[test]
    fn corrupt_lines_are_reported_in_place() {
        let entries = parse_corpus_text("A_\n\nA_x\u{7f}\nBw\n");
        assert_eq!(entries.len(), 3);
        assert!(entries[0].is_ok());
        let fail = entries[1].as_ref().unwrap_err();
        assert_eq!(fail.line, 3);
        assert!(entries[2].is_ok());
        let dimacs = parse_corpus_text("p edge 2 1\ne 1 2\n");
        assert_eq!(dimacs.len(), 1);
        assert_eq!(dimacs[0].as_ref().unwrap().edge_count(), 1);
    }
}
