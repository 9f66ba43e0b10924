use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by the exact isomorphism test.
pub const ISO_LIMIT: usize = 12;

/// Outcome of comparing two graphs that may exceed [`ISO_LIMIT`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
    /// Invariants agree but the graphs are too large to decide exactly.
    Undetermined,
}

/// Relabels `g` so that old vertex `v` becomes `perm[v]`.
pub fn permute(g: &Graph, perm: &[usize]) -> Result<Graph> {
    let n = g.n();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::InvalidArgument("not a permutation of the vertex set".into()));
    }
    let mut h = Graph::empty(n);
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    Ok(h)
}

/// Per-vertex label: degree, then the sorted degrees of its neighbors.
fn vertex_profiles(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            let mut p: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            p.sort_unstable();
            p.insert(0, g.degree(v));
            p
        })
        .collect()
}

/// Exact isomorphism test for graphs with at most [`ISO_LIMIT`] vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.n().max(h.n());
    if n > ISO_LIMIT {
        return Err(Error::TooLargeForIsomorphism { n, limit: ISO_LIMIT });
    }
    Ok(isomorphic_unguarded(g, h))
}

/// Backtracking search with degree and neighborhood-degree pruning. Also
/// used for corpus deduplication where sizes are bounded by the caller.
pub(crate) fn isomorphic_unguarded(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.n();
    if n == 0 {
        return true;
    }
    let pg = vertex_profiles(g);
    let ph = vertex_profiles(h);
    let mut sg = pg.clone();
    let mut sh = ph.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return false;
    }

    // Map G's vertices in an order where each next vertex has as many
    // already-mapped neighbors as possible, rarest profile first.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let rarity = |v: usize| pg.iter().filter(|p| **p == pg[v]).count();
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                (linked, std::cmp::Reverse(rarity(v)), g.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &pg, &ph, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    pg: &[Vec<usize>],
    ph: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n() {
        if used[w] || ph[w] != pg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, pg, ph, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Decides isomorphism exactly when possible; otherwise compares octahedron
/// recognition and cheap invariants (order, size, degree multiset).
pub fn compare(g: &Graph, h: &Graph) -> (IsoVerdict, &'static str) {
    if g.n() <= ISO_LIMIT && h.n() <= ISO_LIMIT {
        let v = if isomorphic_unguarded(g, h) {
            IsoVerdict::Isomorphic
        } else {
            IsoVerdict::NotIsomorphic
        };
        return (v, "exact");
    }
    match (g.octahedron_order(), h.octahedron_order()) {
        (Some(a), Some(b)) => {
            let v = if a == b {
                IsoVerdict::Isomorphic
            } else {
                IsoVerdict::NotIsomorphic
            };
            return (v, "octahedron");
        }
        (Some(_), None) | (None, Some(_)) => return (IsoVerdict::NotIsomorphic, "octahedron"),
        (None, None) => {}
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        (IsoVerdict::NotIsomorphic, "invariants")
    } else {
        (IsoVerdict::Undetermined, "invariants")
    }
}
