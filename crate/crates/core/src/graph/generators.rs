use super::Graph;
use crate::error::{Error, Result};

/// `O_k`: the complement of `k` disjoint edges `{2i, 2i+1}`.
pub fn gen_octahedron(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("octahedron order must be at least 1".into()));
    }
    let n = 2 * k;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if u / 2 != v / 2 {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

pub fn gen_cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
    }
    let mut g = Graph::empty(k);
    for v in 0..k {
        g.add_edge(v, (v + 1) % k);
    }
    Ok(g)
}

pub fn gen_path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("a path needs at least 1 vertex".into()));
    }
    let mut g = Graph::empty(k);
    for v in 1..k {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

pub fn gen_complete(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "a complete graph needs at least 1 vertex".into(),
        ));
    }
    let mut g = Graph::empty(k);
    for u in 0..k {
        for v in (u + 1)..k {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Triangle `{0,1,2}` with ears `{0,1,3}`, `{1,2,4}`, `{0,2,5}`.
pub fn gen_sun3() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)],
    )
    .expect("static edge list")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_validated() {
        assert!(gen_octahedron(0).is_err());
        assert!(gen_cycle(2).is_err());
        assert!(gen_complete(0).is_err());
        assert!(gen_path(0).is_err());
    }

    #[test]
    fn shapes() {
        let o1 = gen_octahedron(1).unwrap();
        assert_eq!((o1.n(), o1.edge_count()), (2, 0));
        let o3 = gen_octahedron(3).unwrap();
        assert_eq!((o3.n(), o3.edge_count()), (6, 12));
        assert_eq!(o3.degree_sequence(), vec![4; 6]);
        let k5 = gen_complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let sun = gen_sun3();
        assert_eq!((sun.n(), sun.edge_count(), sun.max_degree()), (6, 9, 4));
        assert_eq!(sun.degree_sequence(), vec![2, 2, 2, 4, 4, 4]);
        assert!(crate::graph::is_isomorphic(&gen_cycle(4).unwrap(), &gen_octahedron(2).unwrap()).unwrap());
    }
}
