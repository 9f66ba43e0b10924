//! Simple undirected graphs over dense vertex indices `0..n`, stored as
//! bit-set adjacency rows.

mod bitset;
mod edge_list;
mod generators;
mod graph6;
mod iso;

pub use bitset::VertexSet;
pub use edge_list::{emit_edge_list, parse_edge_list};
pub use generators::{gen_complete, gen_cycle, gen_octahedron, gen_path, gen_sun3};
pub use graph6::{emit_graph6, parse_graph6};
pub(crate) use iso::isomorphic_unguarded;
pub use iso::{compare as compare_graphs, is_isomorphic, permute, IsoVerdict, ISO_LIMIT};

use crate::error::{Error, Result};

/// An immutable finite simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Old-to-new vertex map produced by a vertex removal or induced subgraph.
/// Surviving vertices keep their relative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Relabeling {
    fn from_kept(n: usize, kept: &VertexSet) -> Self {
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::with_capacity(kept.len());
        for v in kept {
            old_to_new[v] = Some(new_to_old.len());
            new_to_old.push(v);
        }
        Self { old_to_new, new_to_old }
    }
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and
    /// irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let g = Self { adj };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// Checks symmetry, irreflexivity and the universe size of every row.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (v, row) in self.adj.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::InvariantViolation(format!(
                    "row {v} has universe {} but n = {n}",
                    row.universe()
                )));
            }
            if row.contains(v) {
                return Err(Error::InvariantViolation(format!("self-loop at {v}")));
            }
            for u in row {
                if !self.adj[u].contains(v) {
                    return Err(Error::InvariantViolation(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N[e] = N[u] ∩ N[v]` for the edge `e = {u, v}`.
    pub fn edge_closed_neighborhood(&self, u: usize, v: usize) -> VertexSet {
        self.closed_neighborhood(u).intersection(&self.closed_neighborhood(v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_complete_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_complete(&self) -> bool {
        self.is_complete_set(&self.vertex_set())
    }

    /// Number of connected components (0 for the empty graph).
    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            count += 1;
            seen.insert(s);
            stack.push(s);
            while let Some(v) = stack.pop() {
                for u in &self.adj[v] {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Induced subgraph on `keep`, reindexed order-preservingly.
    pub fn induced(&self, keep: &VertexSet) -> Result<(Graph, Relabeling)> {
        if keep.universe() != self.n() {
            return Err(Error::InvalidArgument(format!(
                "vertex set over {} vertices used with a graph on {}",
                keep.universe(),
                self.n()
            )));
        }
        let map = Relabeling::from_kept(self.n(), keep);
        let m = map.new_to_old.len();
        let mut g = Graph::empty(m);
        for (new_u, &old_u) in map.new_to_old.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(keep).iter() {
                let new_v = map.old_to_new[old_v].expect("kept vertex");
                if new_v > new_u {
                    g.add_edge(new_u, new_v);
                }
            }
        }
        #[cfg(test)]
        g.validate().expect("induced subgraph is a valid graph");
        Ok((g, map))
    }

    pub fn remove_vertex(&self, x: usize) -> Result<(Graph, Relabeling)> {
        self.check_vertex(x)?;
        let mut keep = self.vertex_set();
        keep.remove(x);
        self.induced(&keep)
    }

    pub fn remove_vertices(&self, xs: &VertexSet) -> Result<(Graph, Relabeling)> {
        self.induced(&self.vertex_set().difference(xs))
    }

    /// `G − e`; vertex indices are unchanged.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.delete_edge(u, v);
        #[cfg(test)]
        g.validate().expect("edge removal keeps the graph valid");
        Ok(g)
    }

    /// `N[x] ⊆ N[y]`.
    pub fn is_dominated(&self, x: usize, y: usize) -> Result<bool> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::InvalidArgument(
                "a vertex cannot dominate itself for removal purposes".into(),
            ));
        }
        Ok(self.dominates_unchecked(y, x))
    }

    #[inline]
    pub(crate) fn dominates_unchecked(&self, y: usize, x: usize) -> bool {
        // N[x] ⊆ N[y] with x ≠ y forces x ~ y.
        self.has_edge(x, y) && {
            let mut nx = self.adj[x].clone();
            nx.remove(y);
            let mut ny = self.adj[y].clone();
            ny.insert(x);
            nx.is_subset(&ny)
        }
    }

    /// `N[x] = N[y]`.
    pub fn are_twins(&self, x: usize, y: usize) -> Result<bool> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::InvalidArgument("twin test needs two distinct vertices".into()));
        }
        Ok(self.closed_neighborhood(x) == self.closed_neighborhood(y))
    }

    /// Returns `Some(k)` when the graph is the octahedron `O_k`, the
    /// complement of a perfect matching on `2k` vertices.
    pub fn octahedron_order(&self) -> Option<usize> {
        let n = self.n();
        if n == 0 || n % 2 == 1 {
            return None;
        }
        if (0..n).any(|v| self.degree(v) != n - 2) {
            return None;
        }
        // (n−2)-regular means each vertex misses exactly one other; the
        // missing relation is symmetric, hence a perfect matching.
        for v in 0..n {
            let mut missing = self.closed_neighborhood(v);
            missing = VertexSet::full(n).difference(&missing);
            let partner = missing.first()?;
            let back = VertexSet::full(n).difference(&self.closed_neighborhood(partner));
            if back.first() != Some(v) {
                return None;
            }
        }
        Some(n / 2)
    }

    pub fn is_octahedron(&self) -> bool {
        self.octahedron_order().is_some()
    }

    /// Connected, maximum degree at most four, and not `O_3`.
    pub fn is_low_degree(&self) -> bool {
        self.is_connected() && self.max_degree() <= 4 && self.octahedron_order() != Some(3)
    }

    /// Explains why the graph is not low degree, if it is not.
    pub fn low_degree_violation(&self) -> Option<String> {
        if !self.is_connected() {
            Some("graph is not connected".into())
        } else if self.max_degree() > 4 {
            Some(format!("maximum degree {} exceeds 4", self.max_degree()))
        } else if self.octahedron_order() == Some(3) {
            Some("graph is the octahedron O_3".into())
        } else {
            None
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domination_examples() {
        let k3 = gen_complete(3).unwrap();
        assert!(k3.is_dominated(0, 1).unwrap());
        let c4 = gen_cycle(4).unwrap();
        assert!(!c4.is_dominated(0, 2).unwrap());
        let sun = gen_sun3();
        assert!(sun.is_dominated(3, 0).unwrap());
        assert!(!sun.is_dominated(0, 3).unwrap());
        assert!(matches!(k3.is_dominated(1, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(k3.is_dominated(0, 7), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn twin_examples() {
        let k4 = gen_complete(4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                if x != y {
                    assert!(k4.are_twins(x, y).unwrap());
                }
            }
        }
        let c5 = gen_cycle(5).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                if x != y {
                    assert!(!c5.are_twins(x, y).unwrap());
                }
            }
        }
        let o3 = gen_octahedron(3).unwrap();
        assert!(!o3.has_edge(0, 1));
        assert!(!o3.are_twins(0, 1).unwrap());
    }

    #[test]
    fn octahedron_recognition() {
        assert_eq!(gen_octahedron(3).unwrap().octahedron_order(), Some(3));
        assert_eq!(gen_cycle(4).unwrap().octahedron_order(), Some(2));
        assert_eq!(gen_complete(4).unwrap().octahedron_order(), None);
        assert_eq!(Graph::empty(2).octahedron_order(), Some(1));
        assert_eq!(Graph::empty(0).octahedron_order(), None);
        // 4-regular on 6 vertices is forced to be O_3, but C_6 is 2-regular.
        assert_eq!(gen_cycle(6).unwrap().octahedron_order(), None);
        for k in 1..=8 {
            assert_eq!(gen_octahedron(k).unwrap().octahedron_order(), Some(k));
        }
    }

    #[test]
    fn low_degree_examples() {
        assert!(gen_sun3().is_low_degree());
        assert!(!gen_octahedron(3).unwrap().is_low_degree());
        assert!(gen_complete(5).unwrap().is_low_degree());
        assert!(!gen_complete(6).unwrap().is_low_degree());
        assert!(!Graph::empty(2).is_low_degree());
        assert!(Graph::empty(1).is_low_degree());
    }

    #[test]
    fn removals() {
        let k3 = gen_complete(3).unwrap();
        let (k2, map) = k3.remove_vertex(2).unwrap();
        assert_eq!(k2, gen_complete(2).unwrap());
        assert_eq!(map.old_to_new, vec![Some(0), Some(1), None]);

        let c4 = gen_cycle(4).unwrap();
        let p4 = c4.remove_edge(0, 1).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.is_connected());
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2, 2]);
        assert!(matches!(p4.remove_edge(0, 1), Err(Error::MissingEdge(0, 1))));
        assert!(c4.remove_vertex(4).is_err());
    }

    #[test]
    fn induced_octahedron_four_vertices_with_one_matching_pair() {
        let o3 = gen_octahedron(3).unwrap();
        // enumerate all 4-subsets containing exactly one antipodal pair
        let mut checked = 0;
        for mask in 0u32..64 {
            if mask.count_ones() != 4 {
                continue;
            }
            let pairs = (0..3).filter(|i| mask >> (2 * i) & 3 == 3).count();
            if pairs != 1 {
                continue;
            }
            let s = VertexSet::from_vertices(6, (0..6).filter(|v| mask >> v & 1 == 1));
            let (h, _) = o3.induced(&s).unwrap();
            assert_eq!(h.edge_count(), 5);
            checked += 1;
        }
        assert_eq!(checked, 12);
    }

    #[test]
    fn from_adjacency_rejects_asymmetry() {
        let mut rows = vec![VertexSet::new(2), VertexSet::new(2)];
        rows[0].insert(1);
        assert!(Graph::from_adjacency(rows).is_err());
    }
}
