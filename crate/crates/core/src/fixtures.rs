//! Small named graphs that come up repeatedly in tests and examples.

use crate::graph::Graph;

/// Two spiders joined at their bodies: central edge `0-1` with four pendant
/// paths of length two at each end (18 vertices). It has `D = 2`, `D' = 3`.
pub fn spider_pair() -> Graph {
    let mut edges = vec![(0, 1)];
    let mut next = 2;
    for end in [0, 1] {
        for _ in 0..4 {
            edges.push((end, next));
            edges.push((next, next + 1));
            next += 2;
        }
    }
    Graph::new(next, edges).expect("valid tree")
}

/// Central edge `0-1` with `a` leaves on vertex 0 and `b` leaves on vertex 1.
pub fn double_star_ab(a: usize, b: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::new(2 + a + b, edges).expect("valid tree")
}

/// The double star `S(2,2)`.
pub fn double_star() -> Graph {
    double_star_ab(2, 2)
}

/// A cycle `0..t` with a pendant leaf attached to each listed cycle vertex.
pub fn cycle_with_leaves(t: usize, at: &[usize]) -> Graph {
    let mut edges: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
    edges.extend(at.iter().enumerate().map(|(j, &v)| (v, t + j)));
    Graph::new(t + at.len(), edges).expect("valid unicyclic graph")
}
