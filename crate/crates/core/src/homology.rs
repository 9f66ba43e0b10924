//! Clique complexes and their GF(2) homology. This is the independent
//! oracle every homotopy claim is checked against.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_SIMPLEX_BUDGET: usize = 2_000_000;

/// The clique (flag) complex of a graph: every complete subgraph is a
/// simplex. `simplices[d]` holds the d-simplices in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<VertexSet>>,
}

impl SimplicialComplex {
    pub fn dimension(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    pub fn simplices(&self, d: usize) -> &[VertexSet] {
        self.simplices.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }
}

/// Builds `Cl(G)`. A `max_dim` cap below `ω(G) − 1` is rejected rather
/// than silently truncating the complex; `budget` bounds the total number
/// of simplices.
pub fn clique_complex(g: &Graph, max_dim: Option<usize>, budget: usize) -> Result<SimplicialComplex> {
    let omega = maximal_cliques(g)?.clique_number();
    if let Some(cap) = max_dim {
        if cap + 1 < omega {
            return Err(Error::InvalidArgument(format!(
                "dimension cap {cap} is below ω(G) − 1 = {}",
                omega - 1
            )));
        }
    }
    let mut simplices: Vec<Vec<VertexSet>> = vec![Vec::new(); omega];
    let mut count = 0usize;
    let mut stack = Vec::with_capacity(omega);
    for v in 0..g.n() {
        let mut later = g.neighbors(v).clone();
        for u in 0..=v {
            later.remove(u);
        }
        stack.push(v);
        extend(g, &mut stack, later, &mut simplices, &mut count, budget)?;
        stack.pop();
    }
    Ok(SimplicialComplex { simplices })
}

fn extend(
    g: &Graph,
    stack: &mut Vec<usize>,
    candidates: VertexSet,
    simplices: &mut [Vec<VertexSet>],
    count: &mut usize,
    budget: usize,
) -> Result<()> {
    *count += 1;
    if *count > budget {
        return Err(Error::SimplexBudgetExceeded { budget });
    }
    simplices[stack.len() - 1].push(VertexSet::from_vertices(g.n(), stack.iter().copied()));
    for u in &candidates {
        let mut next = candidates.intersection(g.neighbors(u));
        for w in candidates.iter().take_while(|&w| w <= u) {
            next.remove(w);
        }
        stack.push(u);
        extend(g, stack, next, simplices, count, budget)?;
        stack.pop();
    }
    Ok(())
}

pub fn euler_characteristic(complex: &SimplicialComplex) -> i64 {
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum()
}

/// Euler characteristic and GF(2) Betti numbers of a clique complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomotopySignature {
    pub euler: i64,
    /// `b_0, b_1, …` with trailing zeros trimmed (`b_0` is always kept).
    pub betti: Vec<usize>,
}

impl HomotopySignature {
    /// Connected with the homology of a wedge of circles: `(1, k)` or `(1)`.
    pub fn is_wedge_of_circles(&self) -> bool {
        self.betti.first() == Some(&1) && self.betti.len() <= 2
    }

    pub fn b1(&self) -> usize {
        self.betti.get(1).copied().unwrap_or(0)
    }

    /// Whether the Betti numbers are those of a point.
    pub fn is_acyclic(&self) -> bool {
        self.betti == [1]
    }
}

impl fmt::Display for HomotopySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.betti.iter().map(usize::to_string).collect();
        write!(f, "chi={} betti={}", self.euler, b.join(","))
    }
}

/// Rank over GF(2) of the boundary map from d-simplices to (d−1)-simplices,
/// by column reduction on sparse columns.
fn boundary_rank(faces: &[VertexSet], cells: &[VertexSet]) -> usize {
    let index: HashMap<&VertexSet, u32> = faces.iter().zip(0u32..).collect();
    // pivot (largest row index) -> reduced column
    let mut pivots: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut rank = 0;
    for cell in cells {
        let mut col: Vec<u32> = cell
            .iter()
            .map(|v| {
                let mut f = cell.clone();
                f.remove(v);
                index[&f]
            })
            .collect();
        col.sort_unstable();
        while let Some(&low) = col.last() {
            match pivots.get(&low) {
                Some(other) => col = symmetric_difference(&col, other),
                None => {
                    pivots.insert(low, col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn symmetric_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `b_d = dim ker ∂_d − rank ∂_{d+1}` over GF(2).
pub fn betti_gf2(complex: &SimplicialComplex) -> HomotopySignature {
    let f = complex.f_vector();
    let top = f.len();
    // ranks[d] = rank of ∂_d : C_d → C_{d−1}; ∂_0 = 0
    let mut ranks: Vec<usize> = (0..=top)
        .into_par_iter()
        .map(|d| {
            if d == 0 || d >= top {
                0
            } else {
                boundary_rank(complex.simplices(d - 1), complex.simplices(d))
            }
        })
        .collect();
    ranks.push(0);
    let mut betti: Vec<usize> = (0..top).map(|d| f[d] - ranks[d] - ranks[d + 1]).collect();
    while betti.len() > 1 && betti.last() == Some(&0) {
        betti.pop();
    }
    HomotopySignature {
        euler: euler_characteristic(complex),
        betti,
    }
}

pub fn homotopy_signature(g: &Graph) -> Result<HomotopySignature> {
    homotopy_signature_with_budget(g, DEFAULT_SIMPLEX_BUDGET)
}

/// Signature of `Cl(G)`, refusing (never truncating) complexes with more
/// than `budget` simplices.
pub fn homotopy_signature_with_budget(g: &Graph, budget: usize) -> Result<HomotopySignature> {
    Ok(betti_gf2(&clique_complex(g, None, budget)?))
}
