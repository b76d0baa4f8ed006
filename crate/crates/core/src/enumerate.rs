//! Exhaustive generators for trees, rooted trees and connected unicyclic
//! graphs, plus the census that classifies everything they emit.
//!
//! Rooted trees are built bottom-up as multisets of smaller shapes, so every
//! shape id stands for exactly one rooted isomorphism class. Free trees are
//! read off at their center; unicyclic graphs are sequences of shapes around
//! the cycle, kept only when lexicographically minimal under the dihedral
//! group.

use std::collections::HashSet;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::oracle::OracleConfig;
use crate::parallel::par_map;
use crate::report::{classify, cross_check, Family, Report};
use crate::rooted::{center, free_tree_code};
use crate::unicyclic::Dihedral;

/// Largest tree order the generators accept.
pub const MAX_TREE_ORDER: usize = 16;
/// Largest unicyclic order the generators accept.
pub const MAX_UNICYCLIC_ORDER: usize = 12;

#[derive(Debug, Clone)]
struct Shape {
    size: usize,
    height: usize,
    /// Child shape ids, non-increasing.
    children: Vec<usize>,
}

/// Every rooted tree up to a given order, one id per isomorphism class.
/// Ids grow with size.
#[derive(Debug, Clone)]
pub struct RootedShapes {
    shapes: Vec<Shape>,
    by_size: Vec<Range<usize>>,
}

impl RootedShapes {
    pub fn up_to(n: usize) -> Self {
        let mut s = RootedShapes {
            shapes: Vec::new(),
            by_size: Vec::from([0..0]),
        };
        s.extend_to(n);
        s
    }

    pub fn max_size(&self) -> usize {
        self.by_size.len() - 1
    }

    fn extend_to(&mut self, n: usize) {
        while self.max_size() < n {
            let size = self.max_size() + 1;
            let start = self.shapes.len();
            let mut cur = Vec::new();
            self.multisets(size - 1, start, &mut cur, size);
            self.by_size.push(start..self.shapes.len());
        }
    }

    /// Appends every shape whose children are a non-increasing id sequence
    /// below `bound` extending `cur` with total size `remaining`.
    fn multisets(&mut self, remaining: usize, bound: usize, cur: &mut Vec<usize>, size: usize) {
        if remaining == 0 {
            let height = cur.iter().map(|&c| self.shapes[c].height + 1).max().unwrap_or(0);
            self.shapes.push(Shape {
                size,
                height,
                children: cur.clone(),
            });
            return;
        }
        // ids grow with size, so everything below `fits` is small enough
        let fits = self.by_size[remaining].end.min(bound);
        for id in (0..fits).rev() {
            let s = self.shapes[id].size;
            cur.push(id);
            self.multisets(remaining - s, id + 1, cur, size);
            cur.pop();
        }
    }

    pub fn ids(&self, size: usize) -> Range<usize> {
        self.by_size.get(size).cloned().unwrap_or(0..0)
    }

    pub fn count(&self, size: usize) -> usize {
        self.ids(size).len()
    }

    pub fn size(&self, id: usize) -> usize {
        self.shapes[id].size
    }

    pub fn height(&self, id: usize) -> usize {
        self.shapes[id].height
    }

    /// Edges of shape `id` with its root numbered `root` and the remaining
    /// vertices numbered from `next` in breadth-first order.
    fn write_edges(&self, id: usize, root: usize, next: &mut usize, edges: &mut Vec<Edge>) {
        let mut queue = std::collections::VecDeque::from([(id, root)]);
        while let Some((s, v)) = queue.pop_front() {
            for &c in &self.shapes[s].children {
                let w = *next;
                *next += 1;
                edges.push((v, w));
                queue.push_back((c, w));
            }
        }
    }

    /// The shape as a graph rooted at vertex 0.
    pub fn graph(&self, id: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        self.write_edges(id, 0, &mut next, &mut edges);
        Graph::new(self.size(id), edges).expect("shapes are trees")
    }
}

/// All rooted trees on `n` vertices, each rooted at vertex 0.
pub fn all_rooted_trees(n: usize) -> Result<Vec<Graph>> {
    check_bound(n, 1, MAX_TREE_ORDER)?;
    let shapes = RootedShapes::up_to(n);
    Ok(shapes.ids(n).map(|id| shapes.graph(id)).collect())
}

fn check_bound(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall { required: min, actual: n });
    }
    if n > max {
        return Err(Error::SizeBound { n, bound: max });
    }
    Ok(())
}

fn trees_from(shapes: &RootedShapes, n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n <= 2 {
        out.push(Graph::path(n));
        return out;
    }
    // unicentric: at least two children reach the full height
    for id in shapes.ids(n) {
        let h = shapes.height(id);
        let tall = shapes.shapes[id]
            .children
            .iter()
            .filter(|&&c| shapes.height(c) + 1 == h)
            .count();
        if tall >= 2 {
            out.push(shapes.graph(id));
        }
    }
    // bicentric: two halves of equal height joined at their roots
    for a_size in 1..=n / 2 {
        let b_size = n - a_size;
        for a in shapes.ids(a_size) {
            for b in shapes.ids(b_size) {
                if (a_size == b_size && b < a) || shapes.height(a) != shapes.height(b) {
                    continue;
                }
                let mut edges = vec![(0, a_size)];
                let mut next = 1;
                shapes.write_edges(a, 0, &mut next, &mut edges);
                next = a_size + 1;
                shapes.write_edges(b, a_size, &mut next, &mut edges);
                out.push(Graph::new(n, edges).expect("joined halves form a tree"));
            }
        }
    }
    // the construction is already exact; the center-anchored code guards it
    let mut seen = HashSet::new();
    out.retain(|t| seen.insert(free_tree_code(t).expect("generated graphs are trees")));
    out
}

/// Every tree on `n` vertices up to isomorphism, in a fixed order.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    check_bound(n, 1, MAX_TREE_ORDER)?;
    Ok(trees_from(&RootedShapes::up_to(n), n))
}

fn unicyclic_from(shapes: &RootedShapes, n: usize, cycle_lengths: &Range<usize>) -> Vec<Graph> {
    let mut out = Vec::new();
    for t in 3..=n {
        if !cycle_lengths.contains(&t) {
            continue;
        }
        let group = Dihedral::all(t);
        let mut seq = Vec::with_capacity(t);
        sequences(shapes, t, n, &mut seq, &mut |s| {
            if group.iter().all(|d| d.act_vertices(s).as_slice() >= s) {
                out.push(unicyclic_graph(shapes, s, n));
            }
        });
    }
    out
}

/// Calls `emit` for every length-`t` sequence of shape ids with total size `n`.
fn sequences(shapes: &RootedShapes, t: usize, n: usize, seq: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    let left = t - seq.len();
    if left == 0 {
        if n == 0 {
            emit(seq);
        }
        return;
    }
    for size in 1..=n + 1 - left {
        for id in shapes.ids(size) {
            seq.push(id);
            sequences(shapes, t, n - size, seq, emit);
            seq.pop();
        }
    }
}

fn unicyclic_graph(shapes: &RootedShapes, seq: &[usize], n: usize) -> Graph {
    let t = seq.len();
    let mut edges: Vec<Edge> = (0..t).map(|i| (i, (i + 1) % t)).collect();
    let mut next = t;
    for (i, &id) in seq.iter().enumerate() {
        shapes.write_edges(id, i, &mut next, &mut edges);
    }
    Graph::new(n, edges).expect("generated graphs are simple")
}

/// Every connected unicyclic graph on `n` vertices up to isomorphism.
pub fn all_unicyclic(n: usize) -> Result<Vec<Graph>> {
    check_bound(n, 3, MAX_UNICYCLIC_ORDER)?;
    Ok(unicyclic_from(&RootedShapes::up_to(n - 2), n, &(3..n + 1)))
}

/// Position of a stream: the next graph to emit is number `index` of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cursor {
    pub family: Family,
    pub n: usize,
    pub index: usize,
}

/// Lazily generates graphs order by order. Each order is materialized when
/// the stream reaches it.
#[derive(Debug, Clone)]
pub struct GraphStream {
    family: Family,
    max_n: usize,
    cycle_lengths: Range<usize>,
    n: usize,
    index: usize,
    batch: Vec<Graph>,
    loaded: Option<usize>,
    shapes: RootedShapes,
}

impl GraphStream {
    pub fn new(family: Family, min_n: usize, max_n: usize) -> Result<Self> {
        Self::resume(Cursor { family, n: min_n, index: 0 }, max_n)
    }

    pub fn resume(cursor: Cursor, max_n: usize) -> Result<Self> {
        let (min, max) = match cursor.family {
            Family::Tree => (1, MAX_TREE_ORDER),
            Family::Unicyclic => (3, MAX_UNICYCLIC_ORDER),
        };
        check_bound(max_n, min, max)?;
        Ok(GraphStream {
            family: cursor.family,
            max_n,
            cycle_lengths: 3..usize::MAX,
            n: cursor.n.max(min),
            index: cursor.index,
            batch: Vec::new(),
            loaded: None,
            shapes: RootedShapes::up_to(1),
        })
    }

    /// Restricts unicyclic output to cycle lengths in `range`.
    pub fn with_cycle_lengths(mut self, range: Range<usize>) -> Self {
        self.cycle_lengths = range;
        self
    }

    /// Where a resumed stream would continue.
    pub fn cursor(&self) -> Cursor {
        Cursor {
            family: self.family,
            n: self.n,
            index: self.index,
        }
    }
}

impl Iterator for GraphStream {
    type Item = (Cursor, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.n > self.max_n {
                return None;
            }
            if self.loaded != Some(self.n) {
                self.shapes.extend_to(self.n.max(1));
                self.batch = match self.family {
                    Family::Tree => trees_from(&self.shapes, self.n),
                    Family::Unicyclic => unicyclic_from(&self.shapes, self.n, &self.cycle_lengths),
                };
                self.loaded = Some(self.n);
            }
            if let Some(g) = self.batch.get(self.index) {
                let at = self.cursor();
                self.index += 1;
                return Some((at, g.clone()));
            }
            self.n += 1;
            self.index = 0;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub family: Family,
    pub min_n: usize,
    pub max_n: usize,
    pub bicentric_only: bool,
    pub in_family_t_only: bool,
    pub cycle_lengths: Option<Range<usize>>,
}

impl GeneratorConfig {
    pub fn new(family: Family, max_n: usize) -> Self {
        GeneratorConfig {
            family,
            min_n: family.min_order(),
            max_n,
            bicentric_only: false,
            in_family_t_only: false,
            cycle_lengths: None,
        }
    }

    pub fn stream(&self) -> Result<GraphStream> {
        let s = GraphStream::new(self.family, self.min_n, self.max_n)?;
        Ok(match &self.cycle_lengths {
            Some(r) => s.with_cycle_lengths(r.clone()),
            None => s,
        })
    }

    fn keeps_graph(&self, g: &Graph) -> bool {
        !self.bicentric_only
            || (self.family == Family::Tree && center(g).map(|c| c.is_bicentric()).unwrap_or(false))
    }

    fn keeps_report(&self, r: &Report) -> bool {
        !self.in_family_t_only || r.in_family_t == Some(true)
    }
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub witness: bool,
    /// Cross-check instances up to this order against the oracle.
    pub oracle_max_n: Option<usize>,
    pub oracle: OracleConfig,
    pub jobs: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            witness: true,
            oracle_max_n: None,
            oracle: OracleConfig::default(),
            jobs: 1,
        }
    }
}

fn census_one(g: &Graph, opts: &CensusOptions) -> Result<Report> {
    let mut r = classify(g, opts.witness)?;
    if opts.oracle_max_n.is_some_and(|m| g.n() <= m) {
        cross_check(g, &mut r, &opts.oracle)?;
    }
    Ok(r)
}

/// Lazily classified census. Graphs of one order are classified together
/// (in parallel when `jobs > 1`) and emitted in generation order.
pub struct Census {
    config: GeneratorConfig,
    opts: CensusOptions,
    stream: std::iter::Peekable<GraphStream>,
    pending: std::collections::VecDeque<Result<(Graph, Report)>>,
    failed: bool,
}

impl Iterator for Census {
    type Item = Result<(Graph, Report)>;

    fn next(&mut self) -> Option<Self::Item> {
        while self.pending.is_empty() && !self.failed {
            let (first, g) = self.stream.next()?;
            let mut batch = vec![g];
            while let Some((_, g)) = self.stream.next_if(|(c, _)| c.n == first.n) {
                batch.push(g);
            }
            batch.retain(|g| self.config.keeps_graph(g));
            let reports = par_map(batch, self.opts.jobs, |g| census_one(g, &self.opts));
            for (g, r) in reports {
                match r {
                    Ok(r) if self.config.keeps_report(&r) => self.pending.push_back(Ok((g, r))),
                    Ok(_) => {}
                    Err(e) => {
                        self.pending.push_back(Err(e));
                        self.failed = true;
                        break;
                    }
                }
            }
        }
        self.pending.pop_front()
    }
}

pub fn census(config: &GeneratorConfig, opts: &CensusOptions) -> Result<Census> {
    Ok(Census {
        config: config.clone(),
        opts: opts.clone(),
        stream: config.stream()?.peekable(),
        pending: Default::default(),
        failed: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_tree, is_unicyclic, Permutation};
    use crate::unicyclic::unicyclic_code;

    #[test]
    fn rooted_counts() {
        let shapes = RootedShapes::up_to(10);
        let counts: Vec<usize> = (1..=10).map(|n| shapes.count(n)).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| all_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(all_trees(9).unwrap().iter().all(is_tree));
        assert_eq!(all_trees(17).unwrap_err(), Error::SizeBound { n: 17, bound: 16 });
    }

    #[test]
    fn four_vertex_trees() {
        let t = all_trees(4).unwrap();
        let codes: HashSet<_> = t.iter().map(|g| free_tree_code(g).unwrap()).collect();
        assert!(codes.contains(&free_tree_code(&Graph::path(4)).unwrap()));
        assert!(codes.contains(&free_tree_code(&Graph::star(3)).unwrap()));
    }

    /// Decodes a Prüfer sequence into the edges of a labeled tree.
    fn prufer_tree(seq: &[usize], n: usize) -> Graph {
        let mut degree = vec![1; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut edges = Vec::new();
        for &x in seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, x));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn prufer_cross_check() {
        for n in 3..=8usize {
            let mut seen = HashSet::new();
            let total = n.pow(n as u32 - 2);
            for mut code in 0..total {
                let mut seq = vec![0; n - 2];
                for x in seq.iter_mut() {
                    *x = code % n;
                    code /= n;
                }
                seen.insert(free_tree_code(&prufer_tree(&seq, n)).unwrap());
            }
            let generated: HashSet<_> = all_trees(n).unwrap().iter().map(|g| free_tree_code(g).unwrap()).collect();
            assert_eq!(seen, generated, "n = {n}");
        }
    }

    #[test]
    fn unicyclic_counts() {
        let counts: Vec<usize> = (3..=9).map(|n| all_unicyclic(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 13, 33, 89, 240]);
        for n in 3..=8 {
            let gs = all_unicyclic(n).unwrap();
            assert!(gs.iter().all(is_unicyclic));
            let codes: HashSet<_> = gs.iter().map(|g| unicyclic_code(g).unwrap()).collect();
            assert_eq!(codes.len(), gs.len());
        }
        assert_eq!(all_unicyclic(2).unwrap_err(), Error::OrderTooSmall { required: 3, actual: 2 });
    }

    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn perms(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
            if cur.len() == k {
                return f(cur);
            }
            for v in 0..k {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    let hit = perms(k, cur, used, f);
                    cur.pop();
                    used[v] = false;
                    if hit {
                        return true;
                    }
                }
            }
            false
        }
        let n = a.n();
        perms(n, &mut Vec::new(), &mut vec![false; n], &mut |p| {
            a.permuted(&Permutation::new(p.to_vec()).unwrap()).edges() == b.edges()
        })
    }

    #[test]
    fn five_vertex_unicyclic_by_brute_force() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut classes: Vec<Graph> = Vec::new();
        for mask in 0u32..1 << pairs.len() {
            if mask.count_ones() != 5 {
                continue;
            }
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(5, edges).unwrap();
            if g.is_connected() && !classes.iter().any(|h| isomorphic(h, &g)) {
                classes.push(g);
            }
        }
        let generated = all_unicyclic(5).unwrap();
        assert_eq!(classes.len(), 5);
        assert!(generated.iter().all(|g| classes.iter().filter(|h| isomorphic(h, g)).count() == 1));
    }

    #[test]
    fn streams_resume() {
        let all: Vec<_> = GraphStream::new(Family::Tree, 3, 7).unwrap().collect();
        assert_eq!(all.len(), 1 + 2 + 3 + 6 + 11);
        let (cursor, _) = all[5].clone();
        let rest: Vec<_> = GraphStream::resume(cursor, 7).unwrap().collect();
        assert_eq!(rest, all[5..].to_vec());
        let cycles: Vec<_> = GraphStream::new(Family::Unicyclic, 3, 6)
            .unwrap()
            .with_cycle_lengths(6..7)
            .collect();
        assert_eq!(cycles.len(), 1);
    }

    #[test]
    fn census_filters() {
        let mut cfg = GeneratorConfig::new(Family::Tree, 6);
        cfg.in_family_t_only = true;
        let members: Vec<_> = census(&cfg, &CensusOptions::default()).unwrap().map(Result::unwrap).collect();
        let s22 = free_tree_code(&crate::fixtures::double_star()).unwrap();
        assert!(members.iter().any(|(g, _)| free_tree_code(g).unwrap() == s22));
        assert!(members.iter().all(|(_, r)| r.dprime == r.d + 1));

        let uni = GeneratorConfig::new(Family::Unicyclic, 5);
        let opts = CensusOptions { jobs: 2, oracle_max_n: Some(5), ..Default::default() };
        let reports: Vec<_> = census(&uni, &opts).unwrap().map(Result::unwrap).collect();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|(_, r)| r.d == r.dprime && r.checked_against_oracle));

        let mut bi = GeneratorConfig::new(Family::Tree, 5);
        bi.bicentric_only = true;
        assert_eq!(census(&bi, &CensusOptions::default()).unwrap().count(), 2);
    }
}
