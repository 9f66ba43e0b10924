//! Randomized invariants checked against brute-force oracles.

use clique_homotopy::cliques::{classify_k2_vertices, clique_graph, maximal_cliques, K2VertexClass};
use clique_homotopy::graph::{emit_graph6, is_isomorphic, parse_graph6, permute};
use clique_homotopy::homology::{clique_complex, euler_characteristic, homotopy_signature, DEFAULT_SIMPLEX_BUDGET};
use clique_homotopy::reduce::{dismantle, dominated_pairs, removable_edges, replay, ReductionTrace};
use clique_homotopy::{Graph, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Every complete vertex subset, maximal or not, by subset enumeration.
fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let complete: Vec<u32> = (1u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || g.has_edge(u, v)))
        })
        .collect();
    let mut out: Vec<VertexSet> = complete
        .iter()
        .filter(|&&m| !complete.iter().any(|&o| o != m && o & m == m))
        .map(|&m| VertexSet::from_vertices(n, (0..n).filter(|&v| m >> v & 1 == 1)))
        .collect();
    out.sort();
    out
}

/// Components counted by union-find, independent of the graph's traversal.
fn union_find_components(g: &Graph) -> usize {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..g.n()).filter(|&x| find(&mut parent, x) == x).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let s = emit_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back), s);
    }

    #[test]
    fn twins_dominate_each_other(g in arb_graph(9)) {
        for x in 0..g.n() {
            for y in 0..g.n() {
                if x != y && g.are_twins(x, y).unwrap() {
                    prop_assert!(g.is_dominated(x, y).unwrap());
                    prop_assert!(g.is_dominated(y, x).unwrap());
                }
            }
        }
    }

    #[test]
    fn isomorphic_under_relabeling((g, perm) in arb_graph_with_perm(9)) {
        let h = permute(&g, &perm).unwrap();
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(g.degree_sequence(), h.degree_sequence());
    }

    #[test]
    fn cliques_match_subset_enumeration(g in arb_graph(8)) {
        let found: Vec<VertexSet> = maximal_cliques(&g).unwrap().iter().cloned().collect();
        prop_assert_eq!(found, brute_maximal_cliques(&g));
    }

    #[test]
    fn clique_graph_edges_are_intersections(g in arb_graph(8)) {
        let r = clique_graph(&g).unwrap();
        for i in 0..r.kg.n() {
            for j in i + 1..r.kg.n() {
                prop_assert_eq!(r.kg.has_edge(i, j), r.labels.get(i).intersects(r.labels.get(j)));
            }
        }
    }

    #[test]
    fn k2_vertices_are_stars_or_neckties(g in arb_graph(7)) {
        prop_assume!(g.is_connected());
        let kg = clique_graph(&g).unwrap();
        let k2 = clique_graph(&kg.kg).unwrap();
        let classes = classify_k2_vertices(&g).unwrap();
        prop_assert_eq!(classes.len(), k2.kg.n());
        for v in &classes {
            let common = kg.labels.common_vertices(&v.members);
            match &v.class {
                K2VertexClass::Star { vertex, .. } => prop_assert!(common.contains(*vertex)),
                K2VertexClass::Necktie { .. } => prop_assert!(common.is_empty()),
            }
        }
    }

    #[test]
    fn euler_matches_betti(g in arb_graph(9)) {
        let complex = clique_complex(&g, None, DEFAULT_SIMPLEX_BUDGET).unwrap();
        let sig = homotopy_signature(&g).unwrap();
        let alternating: i64 = sig.betti.iter().enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        prop_assert_eq!(euler_characteristic(&complex), sig.euler);
        prop_assert_eq!(alternating, sig.euler);
        prop_assert_eq!(sig.betti[0], union_find_components(&g));
    }

    #[test]
    fn triangle_free_signature_is_cycle_rank(g in arb_graph(10)) {
        prop_assume!(g.is_connected());
        let triangle_free = maximal_cliques(&g).unwrap().clique_number() <= 2;
        prop_assume!(triangle_free);
        let sig = homotopy_signature(&g).unwrap();
        let rank = g.edge_count() + 1 - g.n();
        let expected: Vec<usize> = if rank == 0 { vec![1] } else { vec![1, rank] };
        prop_assert_eq!(sig.betti, expected);
    }

    #[test]
    fn moves_preserve_signature(g in arb_graph(8)) {
        let base = homotopy_signature(&g).unwrap();
        for (x, _) in dominated_pairs(&g) {
            prop_assert_eq!(&homotopy_signature(&g.remove_vertex(x).unwrap().0).unwrap(), &base);
        }
        for (u, v) in removable_edges(&g) {
            prop_assert_eq!(&homotopy_signature(&g.remove_edge(u, v).unwrap()).unwrap(), &base);
        }
    }

    #[test]
    fn dismantle_trace_replays(g in arb_graph(9)) {
        let d = dismantle(&g).unwrap();
        prop_assert_eq!(&replay(&d.trace).unwrap(), &d.core);
        let text = d.trace.to_text();
        let parsed = ReductionTrace::from_text(&text).unwrap();
        prop_assert_eq!(parsed.to_text(), text);
        prop_assert_eq!(replay(&parsed).unwrap(), d.core);
    }
}
