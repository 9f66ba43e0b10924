//! Homotopy-preserving reductions: dominated-vertex removal, removal of an
//! edge whose closed neighborhood is complete, and removal of twin classes.
//! Every pipeline records a replayable [`ReductionTrace`].

mod retraction;
mod trace;
mod wedge;

pub use retraction::{build_h_clique_level, build_h_invariance, hash_retract, CliqueLevelH, HashRetraction};
pub use trace::{replay, ReductionTrace};
pub use wedge::{low_degree_reduce, WedgeReduction};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One reduction step. Vertex indices refer to the graph the move is
/// applied to; vertex removals reindex the survivors order-preservingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    RemoveDominatedVertex {
        x: usize,
        dominator: usize,
    },
    RemoveEdge {
        u: usize,
        v: usize,
        /// `N[e]` at application time; empty when not recorded.
        closed_edge_neighborhood: Vec<usize>,
    },
    RemoveTwinClass {
        kept: usize,
        removed: Vec<usize>,
    },
}

impl Move {
    /// Applies the move after re-checking its precondition on `g`.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match self {
            Move::RemoveDominatedVertex { x, dominator } => {
                if !g.is_dominated(*x, *dominator)? {
                    return Err(Error::InvariantViolation(format!(
                        "vertex {x} is not dominated by {dominator}"
                    )));
                }
                Ok(g.remove_vertex(*x)?.0)
            }
            Move::RemoveEdge {
                u,
                v,
                closed_edge_neighborhood,
            } => {
                g.check_vertex(*u)?;
                g.check_vertex(*v)?;
                if u == v || !g.has_edge(*u, *v) {
                    return Err(Error::MissingEdge(*u.min(v), *u.max(v)));
                }
                let ne = g.edge_closed_neighborhood(*u, *v);
                if !is_removable(g, &ne) {
                    return Err(Error::InvariantViolation(format!(
                        "edge {{{u}, {v}}} has N[e] = {ne}, which is not a complete proper superset"
                    )));
                }
                if !closed_edge_neighborhood.is_empty() && ne.to_vec() != *closed_edge_neighborhood {
                    return Err(Error::InvariantViolation(format!(
                        "edge {{{u}, {v}}} has N[e] = {ne}, recorded {closed_edge_neighborhood:?}"
                    )));
                }
                g.remove_edge(*u, *v)
            }
            Move::RemoveTwinClass { kept, removed } => {
                let mut gone = VertexSet::new(g.n());
                for &r in removed {
                    if r == *kept || !g.are_twins(*kept, r)? {
                        return Err(Error::InvariantViolation(format!("vertex {r} is not a twin of {kept}")));
                    }
                    gone.insert(r);
                }
                Ok(g.remove_vertices(&gone)?.0)
            }
        }
    }
}

fn is_removable(g: &Graph, closed_edge_nbhd: &VertexSet) -> bool {
    closed_edge_nbhd.len() > 2 && g.is_complete_set(closed_edge_nbhd)
}

/// Edges `e` with `e ⊊ N[e]` and `N[e]` complete; removing any one of them
/// preserves the homotopy type.
pub fn removable_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| is_removable(g, &g.edge_closed_neighborhood(u, v)))
        .collect()
}

/// Smallest dominated vertex together with its smallest dominator.
pub fn first_dominated(g: &Graph) -> Option<(usize, usize)> {
    (0..g.n()).find_map(|x| {
        g.neighbors(x)
            .iter()
            .find(|&y| g.dominates_unchecked(y, x))
            .map(|y| (x, y))
    })
}

/// Every `(x, y)` with `x` dominated by `y ≠ x`.
pub fn dominated_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..g.n() {
        for y in g.neighbors(x) {
            if g.dominates_unchecked(y, x) {
                out.push((x, y));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Dismantling {
    pub core: Graph,
    pub trace: ReductionTrace,
    pub dismantlable: bool,
}

/// Greedily removes the smallest dominated vertex until none is left.
pub fn dismantle(g: &Graph) -> Result<Dismantling> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut current = g.clone();
    let mut moves = Vec::new();
    while let Some((x, dominator)) = first_dominated(&current) {
        let m = Move::RemoveDominatedVertex { x, dominator };
        current = m.apply(&current)?;
        moves.push(m);
    }
    let dismantlable = current.n() == 1;
    Ok(Dismantling {
        trace: ReductionTrace::new(g.clone(), moves, current.clone()),
        core: current,
        dismantlable,
    })
}
