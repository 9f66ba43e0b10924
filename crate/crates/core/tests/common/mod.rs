//! Test-only oracles, independent of the library's reduction code paths.
#![allow(dead_code)]

use std::collections::HashMap;

use clique_homotopy::Graph;
use rand::Rng;

/// Dismantlability by exhaustive search over every removal order, memoized
/// on the surviving vertex subset.
pub fn dismantlable_exhaustive(g: &Graph) -> bool {
    assert!(g.n() <= 20);
    let full: u32 = (1u32 << g.n()) - 1;
    let adj: Vec<u32> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut memo = HashMap::new();
    search(&adj, full, &mut memo)
}

fn search(adj: &[u32], alive: u32, memo: &mut HashMap<u32, bool>) -> bool {
    if alive.count_ones() == 1 {
        return true;
    }
    if let Some(&r) = memo.get(&alive) {
        return r;
    }
    let mut result = false;
    'outer: for x in 0..adj.len() {
        if alive >> x & 1 == 0 {
            continue;
        }
        let nx = (adj[x] | 1 << x) & alive;
        for y in 0..adj.len() {
            if y == x || alive >> y & 1 == 0 {
                continue;
            }
            let ny = (adj[y] | 1 << y) & alive;
            if nx & !ny == 0 && search(adj, alive & !(1 << x), memo) {
                result = true;
                break 'outer;
            }
        }
    }
    memo.insert(alive, result);
    result
}

/// Erdős–Rényi graph on `n` vertices.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
