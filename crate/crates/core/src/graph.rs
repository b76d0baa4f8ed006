//! Simple undirected graphs on the dense vertex set `0..n`, the edge-list
//! text format, and the structural tests used to route a graph to the tree
//! or unicyclic machinery.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, ParseErrorKind, Result};

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair to `(min, max)`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Undirected simple graph. Edges are kept sorted; adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be at least 1".into()));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {{{}, {}}}",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// The star `K_{1,m}` with center 0.
    pub fn star(m: usize) -> Self {
        Graph::new(m + 1, (1..=m).map(|i| (0, i))).expect("valid star")
    }

    /// Order of the graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the graph.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge(u, v)).ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// The image of this graph under a vertex permutation.
    pub fn permuted(&self, perm: &Permutation) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm.apply(u), perm.apply(v))),
        )
        .expect("permutation of a valid graph is valid")
    }

    /// Serializes to the edge-list format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

/// A bijection on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{image:?}")));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// True iff the permutation maps every edge of `g` onto an edge.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.len() == g.n()
            && g
                .edges()
                .iter()
                .all(|&(u, v)| g.has_edge(self.apply(u), self.apply(v)))
    }
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
/// Lines starting with `#` and blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let perr = |kind| Error::Parse {
            line: line_no,
            kind,
        };
        if fields.len() != 2 {
            return Err(perr(ParseErrorKind::Malformed(format!(
                "expected two integers, got {:?}",
                line
            ))));
        }
        let a: usize = fields[0]
            .parse()
            .map_err(|_| perr(ParseErrorKind::Malformed(format!("bad integer {:?}", fields[0]))))?;
        let b: usize = fields[1]
            .parse()
            .map_err(|_| perr(ParseErrorKind::Malformed(format!("bad integer {:?}", fields[1]))))?;
        let Some((n, _)) = header else {
            if a == 0 {
                return Err(perr(ParseErrorKind::Malformed(
                    "vertex count must be at least 1".into(),
                )));
            }
            header = Some((a, b));
            continue;
        };
        for x in [a, b] {
            if x >= n {
                return Err(perr(ParseErrorKind::VertexOutOfRange { vertex: x, n }));
            }
        }
        if a == b {
            return Err(perr(ParseErrorKind::SelfLoop(a)));
        }
        let e = edge(a, b);
        if !seen.insert(e) {
            return Err(perr(ParseErrorKind::DuplicateEdge { u: e.0, v: e.1 }));
        }
        edges.push(e);
    }
    let (n, m) = header.ok_or(Error::MissingHeader)?;
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges)
}

pub fn is_tree(g: &Graph) -> bool {
    g.m() + 1 == g.n() && g.is_connected()
}

pub fn is_unicyclic(g: &Graph) -> bool {
    g.m() == g.n() && g.is_connected()
}

/// The unique cycle of a connected graph with `m = n`, or `None` otherwise.
///
/// The sequence starts at the smallest cycle vertex and continues towards
/// its smaller cycle neighbor, i.e. it is the lexicographically smallest
/// of all rotations and reflections.
pub fn unicyclic_cycle(g: &Graph) -> Option<Vec<usize>> {
    if !is_unicyclic(g) {
        return None;
    }
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let on_cycle = |v: usize| !removed[v];
    let start = (0..n).find(|&v| on_cycle(v))?;
    let next_of = |v: usize, prev: usize| {
        g.neighbors(v)
            .iter()
            .copied()
            .find(|&w| on_cycle(w) && w != prev)
    };
    // the smaller of start's two cycle neighbors
    let first = g.neighbors(start).iter().copied().find(|&w| on_cycle(w))?;
    let mut cycle = vec![start];
    let (mut prev, mut cur) = (start, first);
    while cur != start {
        cycle.push(cur);
        let nxt = next_of(cur, prev)?;
        prev = cur;
        cur = nxt;
    }
    Some(cycle)
}
