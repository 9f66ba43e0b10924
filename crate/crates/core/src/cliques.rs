//! Maximal cliques, the clique graph operator `K`, and the star / necktie
//! taxonomy of the vertices of `K²(G)`.

use crate::error::{Error, Result};
use crate::graph::{isomorphic_unguarded, Graph, VertexSet, ISO_LIMIT};

/// Maximal cliques of a fixed graph in lexicographic order of their sorted
/// vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueList {
    cliques: Vec<VertexSet>,
}

impl CliqueList {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn get(&self, i: usize) -> &VertexSet {
        &self.cliques[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.cliques.iter()
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// ω, the largest clique order.
    pub fn clique_number(&self) -> usize {
        self.cliques.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Index of an exact clique, if present.
    pub fn position(&self, q: &VertexSet) -> Option<usize> {
        self.cliques.binary_search(q).ok()
    }

    /// Intersection of the cliques indexed by `members`.
    pub fn common_vertices(&self, members: &VertexSet) -> VertexSet {
        let mut it = members.iter();
        let Some(first) = it.next() else {
            return VertexSet::new(self.universe());
        };
        let mut acc = self.cliques[first].clone();
        for i in it {
            acc.intersect_with(&self.cliques[i]);
        }
        acc
    }

    fn universe(&self) -> usize {
        self.cliques.first().map(VertexSet::universe).unwrap_or(0)
    }
}

impl<'a> IntoIterator for &'a CliqueList {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.cliques.iter()
    }
}

/// All maximal cliques of `g`.
pub fn maximal_cliques(g: &Graph) -> Result<CliqueList> {
    maximal_cliques_bounded(g, usize::MAX)
}

/// As [`maximal_cliques`], but gives up with
/// [`Error::CliqueBudgetExceeded`] once more than `limit` cliques exist.
pub fn maximal_cliques_bounded(g: &Graph, limit: usize) -> Result<CliqueList> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, g.vertex_set(), VertexSet::new(g.n()), &mut out, limit)?;
    // pivot order must not leak into results
    out.sort();
    Ok(CliqueList { cliques: out })
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
    limit: usize,
) -> Result<()> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() == limit {
                return Err(Error::CliqueBudgetExceeded { budget: limit });
            }
            out.push(VertexSet::from_vertices(g.n(), r.iter().copied()));
        }
        return Ok(());
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| p.intersection_len(g.neighbors(u)))
        .expect("P is nonempty");
    let candidates = p.difference(g.neighbors(pivot));
    for v in &candidates {
        r.push(v);
        let np = p.intersection(g.neighbors(v));
        let nx = x.intersection(g.neighbors(v));
        bron_kerbosch(g, r, np, nx, out, limit)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// The clique graph `K(G)` together with the clique each of its vertices
/// stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueGraphResult {
    pub kg: Graph,
    pub labels: CliqueList,
}

pub fn clique_graph(g: &Graph) -> Result<CliqueGraphResult> {
    let labels = maximal_cliques(g)?;
    Ok(CliqueGraphResult {
        kg: intersection_graph(&labels),
        labels,
    })
}

fn intersection_graph(labels: &CliqueList) -> Graph {
    let c = labels.len();
    let mut kg = Graph::empty(c);
    for i in 0..c {
        for j in (i + 1)..c {
            if labels.get(i).intersects(labels.get(j)) {
                kg.add_edge(i, j);
            }
        }
    }
    kg
}

/// Iterates above this size record only their vertex count.
pub const RETENTION_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IterationStatus {
    /// All requested steps were computed.
    Completed(usize),
    /// Computing `K^step` would produce more than the budget allows; at
    /// least `vertices_at_least` cliques were found.
    BudgetExceeded { step: usize, vertices_at_least: usize },
    /// `K^step ≅ K^(step−1)`, confirmed by exact isomorphism.
    FixedPointDetected(usize),
}

#[derive(Clone, Debug)]
pub struct IterationOutcome {
    /// `|K^i(G)|` for every computed iterate, starting with `i = 0`.
    pub sizes: Vec<usize>,
    /// `graphs[i]` is `K^i(G)` when it fit under [`RETENTION_CAP`].
    pub graphs: Vec<Option<Graph>>,
    pub status: IterationStatus,
}

/// Computes `K^0(G), …, K^steps(G)`, stopping early when an iterate would
/// exceed `max_vertices` or a fixed point is confirmed.
pub fn iterate_clique_graph(g: &Graph, steps: usize, max_vertices: usize) -> Result<IterationOutcome> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if max_vertices < g.n() {
        return Err(Error::InvalidArgument(format!(
            "vertex budget {max_vertices} is smaller than the input ({} vertices)",
            g.n()
        )));
    }
    let retain = |h: &Graph| (h.n() <= RETENTION_CAP).then(|| h.clone());
    let mut sizes = vec![g.n()];
    let mut graphs = vec![retain(g)];
    let mut current = g.clone();
    for step in 1..=steps {
        let labels = match maximal_cliques_bounded(&current, max_vertices) {
            Ok(l) => l,
            Err(Error::CliqueBudgetExceeded { .. }) => {
                return Ok(IterationOutcome {
                    sizes,
                    graphs,
                    status: IterationStatus::BudgetExceeded {
                        step,
                        vertices_at_least: max_vertices + 1,
                    },
                });
            }
            Err(e) => return Err(e),
        };
        let next = intersection_graph(&labels);
        sizes.push(next.n());
        graphs.push(retain(&next));
        let fixed =
            step < steps && next.n() <= ISO_LIMIT && current.n() <= ISO_LIMIT && isomorphic_unguarded(&next, &current);
        current = next;
        if fixed {
            return Ok(IterationOutcome {
                sizes,
                graphs,
                status: IterationStatus::FixedPointDetected(step),
            });
        }
    }
    Ok(IterationOutcome {
        sizes,
        graphs,
        status: IterationStatus::Completed(steps),
    })
}

/// `x*`: indices of the cliques containing `x`.
pub fn star(g: &Graph, cliques: &CliqueList, x: usize) -> Result<VertexSet> {
    g.check_vertex(x)?;
    Ok(VertexSet::from_vertices(
        cliques.len(),
        cliques
            .iter()
            .enumerate()
            .filter(|(_, q)| q.contains(x))
            .map(|(i, _)| i),
    ))
}

/// Whether `x*` is a maximal complete subgraph of `K(G)`.
pub fn is_normal_vertex(g: &Graph, x: usize) -> Result<bool> {
    let cliques = maximal_cliques(g)?;
    let s = star(g, &cliques, x)?;
    let extendable = cliques
        .iter()
        .enumerate()
        .filter(|(i, _)| !s.contains(*i))
        .any(|(_, q)| s.iter().all(|j| q.intersects(cliques.get(j))));
    Ok(!extendable)
}

/// Classification of one vertex `Q` of `K²(G)`, i.e. one clique of `K(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K2Vertex {
    /// Members of `Q` as indices into the clique list of `G`.
    pub members: VertexSet,
    pub class: K2VertexClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K2VertexClass {
    /// `Q = x*` with `x` the smallest such vertex; `all` lists every vertex
    /// whose star is `Q`.
    Star { vertex: usize, all: Vec<usize> },
    /// `∩Q = ∅`. The center and ears (vertex sets of `G`) are identified
    /// when `G` is low degree.
    Necktie { shape: Option<NecktieShape> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecktieShape {
    pub center: VertexSet,
    pub ears: [VertexSet; 3],
}

impl K2Vertex {
    pub fn is_necktie(&self) -> bool {
        matches!(self.class, K2VertexClass::Necktie { .. })
    }
}

/// Classifies every clique of `K(G)` as a star or a necktie of `G`.
pub fn classify_k2_vertices(g: &Graph) -> Result<Vec<K2Vertex>> {
    let kg = clique_graph(g)?;
    let low_degree = g.is_low_degree();
    let k2 = maximal_cliques(&kg.kg)?;
    k2.iter()
        .map(|members| classify_one(g, &kg.labels, members, low_degree))
        .collect()
}

fn classify_one(g: &Graph, cliques: &CliqueList, members: &VertexSet, low_degree: bool) -> Result<K2Vertex> {
    let common = cliques.common_vertices(members);
    let class = if let Some(vertex) = common.first() {
        // x ∈ ∩Q gives Q ⊆ x*, and x* is complete in K(G), so maximality of
        // Q forces Q = x* for every such x.
        debug_assert!(common.iter().all(|x| star(g, cliques, x).as_ref() == Ok(members)));
        K2VertexClass::Star {
            vertex,
            all: common.to_vec(),
        }
    } else {
        let shape = if low_degree {
            Some(necktie_shape(cliques, members)?)
        } else {
            None
        };
        K2VertexClass::Necktie { shape }
    };
    Ok(K2Vertex {
        members: members.clone(),
        class,
    })
}

/// Checks that a necktie of a low degree graph is `Q_T = {T, T1, T2, T3}`
/// with every member a triangle, `T` internal and the `T ∩ Ti` the three
/// edges of `T`.
fn necktie_shape(cliques: &CliqueList, members: &VertexSet) -> Result<NecktieShape> {
    let sets: Vec<&VertexSet> = members.iter().map(|i| cliques.get(i)).collect();
    let violation = |why: &str| {
        let listed: Vec<String> = sets.iter().map(|q| q.to_string()).collect();
        Error::InvariantViolation(format!("necktie [{}] {why}", listed.join(" ")))
    };
    if sets.len() != 4 {
        return Err(violation("does not have exactly four members"));
    }
    if sets.iter().any(|q| q.len() != 3) {
        return Err(violation("has a member that is not a triangle"));
    }
    for (ci, &center) in members.iter().zip(&sets) {
        let ears: Vec<&VertexSet> = sets.iter().copied().filter(|q| *q != center).collect();
        let mut edges: Vec<VertexSet> = ears.iter().map(|e| e.intersection(center)).collect();
        if edges.iter().any(|e| e.len() != 2) {
            continue;
        }
        edges.sort();
        edges.dedup();
        if edges.len() != 3 {
            continue;
        }
        if !is_internal(cliques, ci) {
            return Err(violation("has a center that is not internal"));
        }
        if qt_indices(cliques, center) != *members {
            return Err(violation("differs from Q_T of its center"));
        }
        return Ok(NecktieShape {
            center: center.clone(),
            ears: [ears[0].clone(), ears[1].clone(), ears[2].clone()],
        });
    }
    Err(violation(
        "has no center triangle meeting the others in its three edges",
    ))
}

fn is_internal(cliques: &CliqueList, idx: usize) -> bool {
    let t = cliques.get(idx);
    if t.len() != 3 {
        return false;
    }
    let vs = t.to_vec();
    [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])].iter().all(|&(a, b)| {
        cliques
            .iter()
            .enumerate()
            .any(|(j, q)| j != idx && q.contains(a) && q.contains(b))
    })
}

fn qt_indices(cliques: &CliqueList, t: &VertexSet) -> VertexSet {
    VertexSet::from_vertices(
        cliques.len(),
        cliques
            .iter()
            .enumerate()
            .filter(|(_, q)| q.intersection_len(t) >= 2)
            .map(|(i, _)| i),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HellyResult {
    pub helly: bool,
    /// A necktie when the graph is not Helly.
    pub witness: Option<K2Vertex>,
}

/// A graph is Helly exactly when it has no neckties. Stops at the first
/// necktie found; its shape is validated when `G` is low degree.
pub fn is_helly(g: &Graph) -> Result<HellyResult> {
    let kg = clique_graph(g)?;
    let k2 = maximal_cliques(&kg.kg)?;
    for members in &k2 {
        if kg.labels.common_vertices(members).is_empty() {
            let witness = classify_one(g, &kg.labels, members, g.is_low_degree())?;
            return Ok(HellyResult {
                helly: false,
                witness: Some(witness),
            });
        }
    }
    Ok(HellyResult {
        helly: true,
        witness: None,
    })
}

/// Triangles that are cliques and whose three edges each lie in another
/// clique.
pub fn internal_triangles(g: &Graph) -> Result<Vec<VertexSet>> {
    let cliques = maximal_cliques(g)?;
    Ok(internal_triangle_indices(&cliques)
        .into_iter()
        .map(|i| cliques.get(i).clone())
        .collect())
}

/// Indices (into `cliques`) of the internal triangles.
pub fn internal_triangle_indices(cliques: &CliqueList) -> Vec<usize> {
    (0..cliques.len()).filter(|&i| is_internal(cliques, i)).collect()
}

/// `Q_T`: indices of the cliques meeting the internal triangle `T` in at
/// least two vertices. For low degree graphs the shape `{T, T1, T2, T3}`
/// is validated.
pub fn necktie_of(g: &Graph, t: &VertexSet) -> Result<VertexSet> {
    let cliques = maximal_cliques(g)?;
    let idx = cliques
        .position(t)
        .filter(|&i| is_internal(&cliques, i))
        .ok_or_else(|| Error::InvalidArgument(format!("{t} is not an internal triangle")))?;
    let qt = qt_indices(&cliques, cliques.get(idx));
    if g.is_low_degree() {
        let shape = necktie_shape(&cliques, &qt)?;
        if shape.center != *t {
            return Err(Error::InvariantViolation(format!(
                "Q_T of {t} is centered at {}",
                shape.center
            )));
        }
    }
    Ok(qt)
}

/// Six vertices inducing `O_3`, if any exist. The witness is ordered so that
/// positions `2i` and `2i+1` are the non-adjacent pairs.
pub fn find_induced_octahedron(g: &Graph) -> Option<[usize; 6]> {
    let n = g.n();
    for v in 0..n {
        if g.degree(v) < 4 {
            continue;
        }
        // v is the smallest vertex of the octahedron: its four neighbors in
        // the octahedron induce a 4-cycle, and its antipode is adjacent to
        // all four of them.
        let cand: Vec<usize> = g.neighbors(v).iter().filter(|&u| u > v && g.degree(u) >= 4).collect();
        let k = cand.len();
        for a in 0..k {
            for b in (a + 1)..k {
                let (p, q) = (cand[a], cand[b]);
                if g.has_edge(p, q) {
                    continue;
                }
                for c in (a + 1)..k {
                    if c == b {
                        continue;
                    }
                    let r = cand[c];
                    if !g.has_edge(p, r) || !g.has_edge(q, r) {
                        continue;
                    }
                    for (d, &s) in cand.iter().enumerate().skip(c + 1) {
                        if d == b {
                            continue;
                        }
                        if g.has_edge(r, s) || !g.has_edge(p, s) || !g.has_edge(q, s) {
                            continue;
                        }
                        let mut common = g.neighbors(p).intersection(g.neighbors(q));
                        common.intersect_with(g.neighbors(r));
                        common.intersect_with(g.neighbors(s));
                        if let Some(w) = common.iter().find(|&w| w > v && !g.has_edge(v, w)) {
                            return Some([v, w, p, q, r, s]);
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn contains_induced_octahedron(g: &Graph) -> bool {
    find_induced_octahedron(g).is_some()
}

/// Two distinct cliques sharing three vertices, if any. Such a pair exists
/// exactly when some triangle lies in more than one clique.
pub fn shared_triangle_witness(cliques: &CliqueList) -> Option<(usize, usize)> {
    let c = cliques.len();
    for i in 0..c {
        if cliques.get(i).len() < 3 {
            continue;
        }
        for j in (i + 1)..c {
            if cliques.get(i).intersection_len(cliques.get(j)) >= 3 {
                return Some((i, j));
            }
        }
    }
    None
}

/// Whether every triangle of `g` lies in exactly one clique.
pub fn triangles_in_unique_cliques(g: &Graph) -> Result<bool> {
    if g.n() == 0 {
        return Ok(true);
    }
    Ok(shared_triangle_witness(&maximal_cliques(g)?).is_none())
}
