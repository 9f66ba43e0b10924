use std::collections::{BTreeMap, HashMap};

use super::{Move, ReductionTrace};
use crate::cliques::{
    clique_graph, contains_induced_octahedron, internal_triangle_indices, triangles_in_unique_cliques,
    CliqueGraphResult,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Certificate for `G #→ H₀`: every vertex outside `kept` is dominated in
/// the source graph by a vertex of `kept`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HashRetraction {
    pub source: Graph,
    pub kept: VertexSet,
    /// Removed vertex → its dominator, both as source-graph indices.
    pub dominators: BTreeMap<usize, usize>,
}

impl HashRetraction {
    /// Re-checks every domination against the source graph.
    pub fn validate(&self) -> Result<()> {
        let g = &self.source;
        if self.kept.universe() != g.n() {
            return Err(Error::InvalidArgument(
                "kept set does not match the source graph".into(),
            ));
        }
        if self.kept.is_empty() {
            return Err(Error::InvalidArgument("kept set is empty".into()));
        }
        for v in 0..g.n() {
            let assigned = self.dominators.get(&v).copied();
            match (self.kept.contains(v), assigned) {
                (true, None) => {}
                (true, Some(_)) => {
                    return Err(Error::InvalidArgument(format!(
                        "kept vertex {v} has a dominator assigned"
                    )))
                }
                (false, None) => return Err(Error::InvalidArgument(format!("removed vertex {v} has no dominator"))),
                (false, Some(y)) => {
                    if y >= g.n() || !self.kept.contains(y) || !g.dominates_unchecked(y, v) {
                        return Err(Error::InvalidCertificate {
                            vertex: v,
                            dominator: y,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The retraction as a sequence of moves on the source graph. Removed
    /// vertices sharing a dominator that are all its twins become one
    /// `twinclass` move; everything else becomes `dom` moves.
    pub fn to_trace(&self) -> Result<ReductionTrace> {
        let g = &self.source;
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&v, &y) in &self.dominators {
            groups.entry(y).or_default().push(v);
        }
        let mut position: Vec<Option<usize>> = (0..g.n()).map(Some).collect();
        let mut current = g.clone();
        let mut moves = Vec::new();
        let at = |position: &[Option<usize>], v: usize| position[v].expect("vertex still present");
        for (y, removed) in groups {
            let twins = removed
                .iter()
                .all(|&v| g.closed_neighborhood(v) == g.closed_neighborhood(y));
            let batch: Vec<Move> = if twins {
                vec![Move::RemoveTwinClass {
                    kept: at(&position, y),
                    removed: removed.iter().map(|&v| at(&position, v)).collect(),
                }]
            } else {
                removed
                    .iter()
                    .map(|&v| Move::RemoveDominatedVertex {
                        x: at(&position, v),
                        dominator: at(&position, y),
                    })
                    .collect()
            };
            for mv in batch {
                let gone: Vec<usize> = match &mv {
                    Move::RemoveTwinClass { removed, .. } => removed.clone(),
                    Move::RemoveDominatedVertex { x, .. } => vec![*x],
                    Move::RemoveEdge { .. } => unreachable!(),
                };
                current = mv.apply(&current)?;
                moves.push(mv);
                for p in position.iter_mut() {
                    if let Some(i) = *p {
                        *p = if gone.contains(&i) {
                            None
                        } else {
                            Some(i - gone.iter().filter(|&&r| r < i).count())
                        };
                    }
                }
            }
        }
        Ok(ReductionTrace::new(g.clone(), moves, current))
    }
}

/// Validates the certificate and returns the induced subgraph on `kept`.
pub fn hash_retract(
    g: &Graph,
    kept: &VertexSet,
    dominators: &BTreeMap<usize, usize>,
) -> Result<(Graph, HashRetraction)> {
    let cert = HashRetraction {
        source: g.clone(),
        kept: kept.clone(),
        dominators: dominators.clone(),
    };
    cert.validate()?;
    let (h, _) = g.induced(kept)?;
    Ok((h, cert))
}

fn require_low_degree(g: &Graph) -> Result<()> {
    match g.low_degree_violation() {
        Some(why) => Err(Error::NotLowDegree(why)),
        None => Ok(()),
    }
}

/// Post-conditions shared by both H-constructions: `H` is `O_3`-free and
/// each of its triangles lies in a single clique.
fn check_h(h: &Graph, stage: &str) -> Result<()> {
    if contains_induced_octahedron(h) {
        return Err(Error::InvariantViolation(format!("{stage}: H contains an induced O_3")));
    }
    if !triangles_in_unique_cliques(h)? {
        return Err(Error::InvariantViolation(format!(
            "{stage}: H has a triangle in two different cliques"
        )));
    }
    Ok(())
}

/// Removes all but the smallest vertex of every twin class of size at
/// least three, giving `G #→ H` where `H` satisfies the hypotheses of the
/// triangle-in-unique-clique criterion.
pub fn build_h_invariance(g: &Graph) -> Result<(Graph, HashRetraction)> {
    require_low_degree(g)?;
    let mut classes: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for v in 0..g.n() {
        classes.entry(g.closed_neighborhood(v)).or_default().push(v);
    }
    let mut kept = g.vertex_set();
    let mut dominators = BTreeMap::new();
    for class in classes.values().filter(|c| c.len() >= 3) {
        let keep = class[0];
        for &v in &class[1..] {
            kept.remove(v);
            dominators.insert(v, keep);
        }
    }
    let (h, cert) = hash_retract(g, &kept, &dominators)?;
    check_h(&h, "twin-class reduction")?;
    Ok((h, cert))
}

/// Result of the clique-level H-construction: `K(G) #→ H`.
#[derive(Clone, Debug)]
pub struct CliqueLevelH {
    pub clique_graph: CliqueGraphResult,
    pub h: Graph,
    /// Certificate over the vertices of `K(G)`.
    pub retraction: HashRetraction,
}

/// Removes internal triangles from `K(G)`: one survivor per component of
/// the shares-an-edge relation among internal triangles, and isolated
/// internal triangles are removed in favor of a dominating ear.
pub fn build_h_clique_level(g: &Graph) -> Result<CliqueLevelH> {
    require_low_degree(g)?;
    let kg = clique_graph(g)?;
    let labels = &kg.labels;
    let internal = internal_triangle_indices(labels);

    // components of the shares-an-edge relation
    let mut comp: Vec<Option<usize>> = vec![None; internal.len()];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..internal.len() {
        if comp[start].is_some() {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        comp[start] = Some(id);
        let mut i = 0;
        while i < members.len() {
            let a = labels.get(internal[members[i]]);
            for (j, &t) in internal.iter().enumerate() {
                if comp[j].is_none() && a.intersection_len(labels.get(t)) == 2 {
                    comp[j] = Some(id);
                    members.push(j);
                }
            }
            i += 1;
        }
        components.push(members.into_iter().map(|j| internal[j]).collect());
    }

    let mut kept = kg.kg.vertex_set();
    let mut dominators = BTreeMap::new();
    for members in &components {
        if members.len() >= 2 {
            let keep = *members.iter().min().expect("nonempty component");
            for &t in members.iter().filter(|&&t| t != keep) {
                kept.remove(t);
                dominators.insert(t, keep);
            }
        } else {
            let t = members[0];
            let center = labels.get(t);
            let ear = (0..labels.len())
                .filter(|&q| q != t && labels.get(q).intersection_len(center) >= 2)
                .find(|&q| kg.kg.dominates_unchecked(q, t))
                .ok_or_else(|| {
                    Error::InvariantViolation(format!("internal triangle {center} has no dominating ear in K(G)"))
                })?;
            kept.remove(t);
            dominators.insert(t, ear);
        }
    }
    let (h, retraction) = hash_retract(&kg.kg, &kept, &dominators)?;
    check_h(&h, "clique-level reduction")?;
    Ok(CliqueLevelH {
        clique_graph: kg,
        h,
        retraction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_cycle, gen_octahedron, gen_sun3};
    use crate::reduce::replay;

    fn two_k4_sharing_triangle() -> Graph {
        Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)],
        )
        .unwrap()
    }

    #[test]
    fn hash_retract_examples() {
        let k4 = gen_complete(4).unwrap();
        let kept = VertexSet::from_vertices(4, [0]);
        let doms = BTreeMap::from([(1, 0), (2, 0), (3, 0)]);
        let (h, cert) = hash_retract(&k4, &kept, &doms).unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(replay(&cert.to_trace().unwrap()).unwrap(), h);

        let sun = gen_sun3();
        let (h, _) = hash_retract(&sun, &sun.vertex_set(), &BTreeMap::new()).unwrap();
        assert_eq!(h, sun);

        let c5 = gen_cycle(5).unwrap();
        let kept = VertexSet::from_vertices(5, [0, 1, 2, 3]);
        for y in 0..4 {
            let err = hash_retract(&c5, &kept, &BTreeMap::from([(4, y)])).unwrap_err();
            assert_eq!(
                err,
                Error::InvalidCertificate {
                    vertex: 4,
                    dominator: y
                }
            );
        }
        assert!(hash_retract(&c5, &kept, &BTreeMap::new()).is_err());
    }

    #[test]
    fn h_invariance_examples() {
        let c5 = gen_cycle(5).unwrap();
        assert_eq!(build_h_invariance(&c5).unwrap().0, c5);
        let sun = gen_sun3();
        assert_eq!(build_h_invariance(&sun).unwrap().0, sun);

        let g = two_k4_sharing_triangle();
        let (h, cert) = build_h_invariance(&g).unwrap();
        assert_eq!(cert.kept.to_vec(), vec![0, 3, 4]);
        assert_eq!(cert.dominators, BTreeMap::from([(1, 0), (2, 0)]));
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
        let trace = cert.to_trace().unwrap();
        assert_eq!(
            trace.moves,
            vec![Move::RemoveTwinClass {
                kept: 0,
                removed: vec![1, 2]
            }]
        );
        assert_eq!(replay(&trace).unwrap(), h);

        assert!(matches!(
            build_h_invariance(&gen_octahedron(3).unwrap()),
            Err(Error::NotLowDegree(_))
        ));
    }

    #[test]
    fn h_clique_level_examples() {
        let r = build_h_clique_level(&gen_sun3()).unwrap();
        assert_eq!(r.clique_graph.kg.n(), 4);
        assert!(r.clique_graph.kg.is_complete());
        assert_eq!(r.h, gen_complete(3).unwrap());
        let center = r
            .clique_graph
            .labels
            .position(&VertexSet::from_vertices(6, [0, 1, 2]))
            .unwrap();
        assert!(!r.retraction.kept.contains(center));

        let c6 = gen_cycle(6).unwrap();
        let r = build_h_clique_level(&c6).unwrap();
        assert_eq!(r.h, r.clique_graph.kg);
        assert!(r.retraction.dominators.is_empty());
    }

    /// Two triangles {0,1,2} and {0,1,3} sharing the edge {0,1}, each made
    /// internal by ears on their other edges.
    pub(crate) fn two_internal_triangles_sharing_an_edge() -> Graph {
        // 0,1 shared; 2,3 apexes; 4 ear on {0,2} and {0,3}; 5 ear on {1,2} and {1,3}
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 3),
                (0, 4),
                (2, 4),
                (3, 4),
                (1, 5),
                (2, 5),
                (3, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn h_clique_level_keeps_one_of_twin_internal_triangles() {
        let g = two_internal_triangles_sharing_an_edge();
        assert!(g.is_low_degree());
        let kg = clique_graph(&g).unwrap();
        let internal = internal_triangle_indices(&kg.labels);
        let t1 = kg.labels.position(&VertexSet::from_vertices(6, [0, 1, 2])).unwrap();
        let t2 = kg.labels.position(&VertexSet::from_vertices(6, [0, 1, 3])).unwrap();
        assert!(internal.contains(&t1) && internal.contains(&t2));
        assert!(kg.kg.are_twins(t1, t2).unwrap());

        let r = build_h_clique_level(&g).unwrap();
        let survivors = [t1, t2].iter().filter(|&&t| r.retraction.kept.contains(t)).count();
        assert_eq!(survivors, 1);
    }
}
