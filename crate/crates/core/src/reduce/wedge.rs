use super::{Move, ReductionTrace};
use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A triangle-free graph homotopy equivalent to the input, with the moves
/// that produced it. `wedge_count = m − n + 1` is the number of circles.
#[derive(Clone, Debug)]
pub struct WedgeReduction {
    pub triangle_free: Graph,
    pub trace: ReductionTrace,
    pub wedge_count: usize,
}

struct Reducer {
    graph: Graph,
    moves: Vec<Move>,
}

impl Reducer {
    fn apply(&mut self, mv: Move) -> Result<()> {
        self.graph = mv
            .apply(&self.graph)
            .map_err(|e| Error::InvariantViolation(format!("move {mv:?} failed: {e}")))?;
        self.moves.push(mv);
        if self.graph.octahedron_order() == Some(3) {
            return Err(Error::InvariantViolation(
                "reduction produced the octahedron O_3".into(),
            ));
        }
        Ok(())
    }

    fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let ne = self.graph.edge_closed_neighborhood(u, v).to_vec();
        self.apply(Move::RemoveEdge {
            u,
            v,
            closed_edge_neighborhood: ne,
        })
    }
}

/// Reduces a low degree graph to a triangle-free one through dominated
/// vertex and edge removals: first every 4-clique is broken, then triangles
/// are opened one edge at a time.
pub fn low_degree_reduce(g: &Graph) -> Result<WedgeReduction> {
    if let Some(why) = g.low_degree_violation() {
        return Err(Error::NotLowDegree(why));
    }
    let mut r = Reducer {
        graph: g.clone(),
        moves: Vec::new(),
    };

    if maximal_cliques(g)?.clique_number() >= 5 {
        // K_5 is the only low degree graph with a 5-clique
        if !(g.n() == 5 && g.is_complete()) {
            return Err(Error::InvariantViolation(
                "low degree graph with a 5-clique other than K_5".into(),
            ));
        }
        while r.graph.n() > 1 {
            r.apply(Move::RemoveDominatedVertex { x: 0, dominator: 1 })?;
        }
    } else {
        break_four_cliques(&mut r)?;
        open_triangles(&mut r)?;
    }

    let h = &r.graph;
    if !h.is_connected() {
        return Err(Error::InvariantViolation("reduction disconnected the graph".into()));
    }
    if maximal_cliques(h)?.clique_number() > 2 {
        return Err(Error::InvariantViolation("reduction left a triangle".into()));
    }
    let wedge_count = h.edge_count() + 1 - h.n();
    Ok(WedgeReduction {
        trace: ReductionTrace::new(g.clone(), r.moves, h.clone()),
        triangle_free: r.graph,
        wedge_count,
    })
}

fn break_four_cliques(r: &mut Reducer) -> Result<()> {
    loop {
        let cliques = maximal_cliques(&r.graph)?;
        let Some(q) = cliques.iter().find(|q| q.len() >= 4).cloned() else {
            return Ok(());
        };
        if q.len() > 4 {
            return Err(Error::InvariantViolation(format!(
                "5-clique {q} appeared mid-reduction"
            )));
        }
        let g = &r.graph;
        let members = q.to_vec();

        // a vertex whose neighborhood lies inside q is dominated by q
        if let Some(&x) = members.iter().find(|&&x| g.closed_neighborhood(x) == q) {
            let dominator = *members.iter().find(|&&y| y != x).expect("|q| = 4");
            r.apply(Move::RemoveDominatedVertex { x, dominator })?;
            continue;
        }

        // two vertices of q with a common neighbor outside q are twins
        let outside = |v: usize| g.neighbors(v).difference(&q);
        let shared = members.iter().enumerate().find_map(|(i, &x)| {
            members[i + 1..]
                .iter()
                .find(|&&y| outside(x).intersects(&outside(y)))
                .map(|&y| (x, y))
        });
        if let Some((x, dominator)) = shared {
            r.apply(Move::RemoveDominatedVertex { x, dominator })?;
            continue;
        }

        // every vertex of q has its own outside neighbor, so N[e] = q
        r.remove_edge(members[0], members[1])?;
    }
}

fn open_triangles(r: &mut Reducer) -> Result<()> {
    loop {
        let cliques = maximal_cliques(&r.graph)?;
        if cliques.clique_number() < 3 {
            return Ok(());
        }
        let edge = r.graph.edges().into_iter().find(|&(u, v)| {
            let mut containing = cliques.iter().filter(|q| q.contains(u) && q.contains(v));
            matches!((containing.next(), containing.next()), (Some(q), None) if q.len() == 3)
        });
        let Some((u, v)) = edge else {
            return Err(Error::InvariantViolation(
                "every triangle is internal but the graph is not O_3".into(),
            ));
        };
        r.remove_edge(u, v)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_octahedron, gen_sun3};
    use crate::homology::homotopy_signature;
    use crate::reduce::replay;

    #[test]
    fn k5_collapses_to_a_point() {
        let r = low_degree_reduce(&gen_complete(5).unwrap()).unwrap();
        assert_eq!(r.triangle_free.n(), 1);
        assert_eq!(r.wedge_count, 0);
        assert_eq!(replay(&r.trace).unwrap(), r.triangle_free);
    }

    #[test]
    fn sun_is_contractible() {
        let r = low_degree_reduce(&gen_sun3()).unwrap();
        assert_eq!(r.wedge_count, 0);
        assert_eq!(r.triangle_free.edge_count() + 1, r.triangle_free.n());
        assert_eq!(homotopy_signature(&r.triangle_free).unwrap().betti, vec![1]);
        assert_eq!(replay(&r.trace).unwrap(), r.triangle_free);
    }

    #[test]
    fn triangle_free_input_is_untouched() {
        let c7 = gen_cycle(7).unwrap();
        let r = low_degree_reduce(&c7).unwrap();
        assert_eq!(r.triangle_free, c7);
        assert_eq!(r.wedge_count, 1);
        assert!(r.trace.moves.is_empty());
        assert_eq!(replay(&r.trace).unwrap(), c7);
    }

    #[test]
    fn four_clique_cases() {
        // K_4 alone: every vertex has N[x] = q
        let r = low_degree_reduce(&gen_complete(4).unwrap()).unwrap();
        assert_eq!(r.wedge_count, 0);
        assert!(matches!(r.trace.moves[0], Move::RemoveDominatedVertex { .. }));

        // K_4 with a pendant vertex per corner: the edge branch is taken
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        let r = low_degree_reduce(&g).unwrap();
        assert!(matches!(r.trace.moves[0], Move::RemoveEdge { u: 0, v: 1, .. }));
        assert_eq!(r.wedge_count, 0);

        // two K_4's sharing a triangle: 3 has N[3] = q
        let g = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)],
        )
        .unwrap();
        let r = low_degree_reduce(&g).unwrap();
        assert_eq!(r.trace.moves[0], Move::RemoveDominatedVertex { x: 3, dominator: 0 });
        assert_eq!(r.wedge_count, 0);

        // K_4 on {0,1,2,3} where 0 and 1 share the outside neighbor 4, and
        // 2, 3 each have a private neighbor: 0 is dominated by its twin 1
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (1, 4),
                (2, 5),
                (3, 6),
            ],
        )
        .unwrap();
        let r = low_degree_reduce(&g).unwrap();
        assert_eq!(r.trace.moves[0], Move::RemoveDominatedVertex { x: 0, dominator: 1 });
        assert_eq!(r.wedge_count, 0);
    }

    #[test]
    fn octahedron_is_rejected() {
        assert!(matches!(
            low_degree_reduce(&gen_octahedron(3).unwrap()),
            Err(Error::NotLowDegree(_))
        ));
    }
}
