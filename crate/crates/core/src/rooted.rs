//! Tree centers, rooted trees and their canonical (AHU-style) codes.
//!
//! A code is a length-prefixed byte string: four big-endian bytes giving the
//! payload length, then the payload. The payload of a vertex is an optional
//! vertex label followed by the lexicographically sorted entries of its
//! children, where an entry is an optional incoming-edge label followed by
//! the child's code. Every code is self-delimiting, so equal codes mean
//! rooted-isomorphic (labeled) trees and vice versa.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{is_tree, Edge, Graph};
use crate::labeling::{EdgeLabeling, Label, VertexLabeling};

/// Opaque canonical byte string of a (possibly labeled) rooted tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn assemble(prefix: Option<Label>, mut entries: Vec<Vec<u8>>) -> (Self, bool) {
        entries.sort_unstable();
        let distinct = entries.windows(2).all(|w| w[0] != w[1]);
        let mut payload = Vec::with_capacity(4 + entries.iter().map(Vec::len).sum::<usize>());
        if let Some(l) = prefix {
            payload.extend_from_slice(&l.to_be_bytes());
        }
        for e in entries {
            payload.extend_from_slice(&e);
        }
        let mut bytes = Vec::with_capacity(payload.len() + 4);
        bytes.extend_from_slice(&(payload.len() as u32).to_be_bytes());
        bytes.extend_from_slice(&payload);
        (CanonicalCode(bytes), distinct)
    }

    /// Tagged concatenation, used for free-tree and cycle codes.
    pub(crate) fn tagged(tag: u8, parts: &[&CanonicalCode]) -> CanonicalCode {
        let mut bytes = vec![tag];
        for p in parts {
            bytes.extend_from_slice(&p.0);
        }
        CanonicalCode(bytes)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CenterInfo {
    Unicentric(usize),
    /// Central edge `{v, w}` with `v < w`.
    Bicentric(usize, usize),
}

impl CenterInfo {
    pub fn is_bicentric(&self) -> bool {
        matches!(self, CenterInfo::Bicentric(..))
    }
}

/// Center of a tree by iterated leaf removal.
pub fn center(t: &Graph) -> Result<CenterInfo> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let n = t.n();
    if n == 1 {
        return Ok(CenterInfo::Unicentric(0));
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
        }
        for &v in &layer {
            for &w in t.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let last: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    match last.as_slice() {
        [c] => Ok(CenterInfo::Unicentric(*c)),
        [a, b] => Ok(CenterInfo::Bicentric((*a).min(*b), (*a).max(*b))),
        _ => Err(Error::Internal(format!("center computation left {last:?}"))),
    }
}

/// A tree with a designated root. Vertices keep their indices from the
/// graph the tree was cut out of; children are sorted by canonical code
/// and then by vertex index.
#[derive(Debug, Clone)]
pub struct RootedTree {
    root: usize,
    graph_order: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    member: Vec<bool>,
    /// Breadth-first order from the root.
    order: Vec<usize>,
    codes: Vec<CanonicalCode>,
}

impl RootedTree {
    /// The component of `root` in `g` after deleting the vertices in
    /// `blocked`, rooted at `root`. Fails if that component has a cycle.
    pub fn component(g: &Graph, root: usize, blocked: &[usize]) -> Result<Self> {
        let n = g.n();
        if root >= n {
            return Err(Error::InvalidGraph(format!("root {root} out of range")));
        }
        let mut member = vec![false; n];
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        member[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if blocked.contains(&w) || Some(w) == parent[u] {
                    continue;
                }
                if member[w] {
                    return Err(Error::NotATree);
                }
                member[w] = true;
                parent[w] = Some(u);
                children[u].push(w);
                order.push(w);
                queue.push_back(w);
            }
        }
        let mut codes = vec![CanonicalCode::default(); n];
        for &v in order.iter().rev() {
            let entries = children[v].iter().map(|&c| codes[c].0.clone()).collect();
            codes[v] = CanonicalCode::assemble(None, entries).0;
            let kids = &mut children[v];
            kids.sort_by(|&a, &b| codes[a].cmp(&codes[b]).then(a.cmp(&b)));
        }
        Ok(RootedTree {
            root,
            graph_order: n,
            parent,
            children,
            member,
            order,
            codes,
        })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Order of the graph the tree lives in (labelings are indexed over it).
    pub fn graph_order(&self) -> usize {
        self.graph_order
    }

    /// Number of vertices of the rooted tree itself.
    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.graph_order && self.member[v]
    }

    /// Vertices in breadth-first order from the root.
    pub fn vertices(&self) -> &[usize] {
        &self.order
    }

    /// Tree edges as `(child, parent)` pairs in breadth-first order.
    pub fn parent_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.order[1..]
            .iter()
            .map(|&c| (c, self.parent[c].expect("non-root has a parent")))
    }

    /// Unlabeled code of the subtree hanging at `v`.
    pub fn code_of(&self, v: usize) -> &CanonicalCode {
        &self.codes[v]
    }

    /// Children of `v` grouped into runs of identical subtree codes.
    pub fn child_groups(&self, v: usize) -> impl Iterator<Item = &[usize]> + '_ {
        self.children[v].chunk_by(move |&a, &b| self.codes[a] == self.codes[b])
    }

    /// The tree as a standalone graph on `0..size`, together with the map
    /// from new to original vertex indices. The root becomes vertex 0.
    pub fn to_graph(&self) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.graph_order];
        for (i, &v) in self.order.iter().enumerate() {
            local[v] = i;
        }
        let g = Graph::new(
            self.size(),
            self.parent_edges().map(|(c, p)| (local[c], local[p])),
        )
        .expect("rooted tree edges form a simple graph");
        (g, self.order.clone())
    }
}

/// Roots a tree at `r`.
pub fn root_at(t: &Graph, r: usize) -> Result<RootedTree> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    RootedTree::component(t, r, &[])
}

pub fn ahu_code(r: &RootedTree) -> CanonicalCode {
    r.codes[r.root].clone()
}

pub fn rooted_isomorphic(a: &RootedTree, b: &RootedTree) -> bool {
    a.code_of(a.root()) == b.code_of(b.root())
}

/// A labeling that can be folded into rooted-tree codes.
pub trait RootedLabeling {
    fn check_rooted_domain(&self, r: &RootedTree) -> Result<()>;
    /// Label stored in front of a vertex's own payload.
    fn vertex_prefix(&self, v: usize) -> Option<Label>;
    /// Label stored in front of a child's entry in its parent's payload.
    fn incoming(&self, child: usize, parent: usize) -> Option<Label>;
}

impl RootedLabeling for VertexLabeling {
    fn check_rooted_domain(&self, r: &RootedTree) -> Result<()> {
        if self.len() != r.graph_order() {
            return Err(Error::DomainMismatch(format!(
                "vertex labeling has {} entries, expected {}",
                self.len(),
                r.graph_order()
            )));
        }
        Ok(())
    }

    fn vertex_prefix(&self, v: usize) -> Option<Label> {
        Some(self.get(v))
    }

    fn incoming(&self, _: usize, _: usize) -> Option<Label> {
        None
    }
}

impl RootedLabeling for EdgeLabeling {
    fn check_rooted_domain(&self, r: &RootedTree) -> Result<()> {
        match r.parent_edges().find(|&(c, p)| self.get(c, p).is_none()) {
            Some((c, p)) => Err(Error::DomainMismatch(format!("edge {{{c}, {p}}} is unlabeled"))),
            None => Ok(()),
        }
    }

    fn vertex_prefix(&self, _: usize) -> Option<Label> {
        None
    }

    fn incoming(&self, child: usize, parent: usize) -> Option<Label> {
        self.get(child, parent)
    }
}

/// Labeled codes of every subtree, plus whether every vertex has pairwise
/// distinct labeled child entries.
pub(crate) fn labeled_codes<L: RootedLabeling + ?Sized>(
    r: &RootedTree,
    l: &L,
) -> Result<(Vec<CanonicalCode>, bool)> {
    l.check_rooted_domain(r)?;
    let mut codes = vec![CanonicalCode::default(); r.graph_order];
    let mut all_distinct = true;
    for &v in r.order.iter().rev() {
        let entries = r.children[v]
            .iter()
            .map(|&c| {
                let mut e = Vec::new();
                if let Some(x) = l.incoming(c, v) {
                    e.extend_from_slice(&x.to_be_bytes());
                }
                e.extend_from_slice(&codes[c].0);
                e
            })
            .collect();
        let (code, distinct) = CanonicalCode::assemble(l.vertex_prefix(v), entries);
        all_distinct &= distinct;
        codes[v] = code;
    }
    Ok((codes, all_distinct))
}

/// Code of the labeled rooted tree. Vertex labelings include the root's
/// label; edge labelings attach each edge label to the child below it.
pub fn labeled_code<L: RootedLabeling + ?Sized>(r: &RootedTree, l: &L) -> Result<CanonicalCode> {
    let (mut codes, _) = labeled_codes(r, l)?;
    Ok(std::mem::take(&mut codes[r.root]))
}

/// The center-anchored rooting of a tree.
#[derive(Debug, Clone)]
pub enum Anchored {
    Unicentric {
        center: usize,
        tree: RootedTree,
    },
    /// Halves of `T - vw`, rooted at `v` and `w`.
    Bicentric {
        v: usize,
        w: usize,
        tv: RootedTree,
        tw: RootedTree,
    },
}

impl Anchored {
    pub fn of(t: &Graph) -> Result<Self> {
        Ok(match center(t)? {
            CenterInfo::Unicentric(c) => Anchored::Unicentric {
                center: c,
                tree: RootedTree::component(t, c, &[])?,
            },
            CenterInfo::Bicentric(v, w) => Anchored::Bicentric {
                v,
                w,
                tv: RootedTree::component(t, v, &[w])?,
                tw: RootedTree::component(t, w, &[v])?,
            },
        })
    }

    pub fn center(&self) -> CenterInfo {
        match *self {
            Anchored::Unicentric { center, .. } => CenterInfo::Unicentric(center),
            Anchored::Bicentric { v, w, .. } => CenterInfo::Bicentric(v, w),
        }
    }

    pub fn central_edge(&self) -> Option<Edge> {
        match *self {
            Anchored::Bicentric { v, w, .. } => Some((v, w)),
            _ => None,
        }
    }
}

/// Code identifying a free tree up to isomorphism.
pub fn free_tree_code(t: &Graph) -> Result<CanonicalCode> {
    Ok(match Anchored::of(t)? {
        Anchored::Unicentric { tree, .. } => CanonicalCode::tagged(b'U', &[&ahu_code(&tree)]),
        Anchored::Bicentric { tv, tw, .. } => {
            let (a, b) = (ahu_code(&tv), ahu_code(&tw));
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            CanonicalCode::tagged(b'B', &[&lo, &hi])
        }
    })
}

fn rooted_aut_order(r: &RootedTree) -> BigUint {
    let mut order = BigUint::from(1u32);
    for &v in r.vertices() {
        for group in r.child_groups(v) {
            for i in 2..=group.len() {
                order *= i as u64;
            }
        }
    }
    order
}

/// Order of the automorphism group of a tree.
pub fn tree_aut_order(t: &Graph) -> Result<BigUint> {
    Ok(match Anchored::of(t)? {
        Anchored::Unicentric { tree, .. } => rooted_aut_order(&tree),
        Anchored::Bicentric { tv, tw, .. } => {
            let swap = if rooted_isomorphic(&tv, &tw) { 2u32 } else { 1 };
            rooted_aut_order(&tv) * rooted_aut_order(&tw) * swap
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{double_star, spider_pair};

    #[test]
    fn centers() {
        assert_eq!(center(&Graph::path(5)).unwrap(), CenterInfo::Unicentric(2));
        assert_eq!(center(&Graph::path(4)).unwrap(), CenterInfo::Bicentric(1, 2));
        assert_eq!(center(&Graph::star(4)).unwrap(), CenterInfo::Unicentric(0));
        assert_eq!(center(&Graph::path(1)).unwrap(), CenterInfo::Unicentric(0));
        assert_eq!(center(&Graph::path(2)).unwrap(), CenterInfo::Bicentric(0, 1));
        assert_eq!(center(&Graph::path(3)).unwrap(), CenterInfo::Unicentric(1));
        assert_eq!(center(&Graph::cycle(4)), Err(Error::NotATree));
        assert!(center(&spider_pair()).unwrap().is_bicentric());
    }

    #[test]
    fn rooting_p3() {
        let p3 = Graph::path(3);
        let end = root_at(&p3, 0).unwrap();
        assert_eq!(end.children(0), &[1]);
        assert_eq!(end.children(1), &[2]);
        let mid = root_at(&p3, 1).unwrap();
        assert_eq!(mid.children(1), &[0, 2]);
        assert_ne!(ahu_code(&end), ahu_code(&mid));
        assert_eq!(ahu_code(&root_at(&Graph::path(1), 0).unwrap()).as_bytes(), &[0, 0, 0, 0]);
    }

    #[test]
    fn spider_pair_halves() {
        let t = spider_pair();
        let Anchored::Bicentric { v, tv, tw, .. } = Anchored::of(&t).unwrap() else {
            panic!("expected bicentric");
        };
        assert_eq!(tv.children(v).len(), 4);
        assert!(tv.children(v).iter().all(|&c| tv.children(c).len() == 1));
        assert_eq!(tv.size(), 9);
        assert!(rooted_isomorphic(&tv, &tw));
    }

    #[test]
    fn isomorphism_cases() {
        let p4 = Graph::path(4);
        let a = RootedTree::component(&p4, 1, &[2]).unwrap();
        let b = RootedTree::component(&p4, 2, &[1]).unwrap();
        assert!(rooted_isomorphic(&a, &b));
        let k13 = Graph::star(3);
        assert!(!rooted_isomorphic(&root_at(&k13, 0).unwrap(), &root_at(&k13, 1).unwrap()));
        // relabeled copy of a rooted shape
        let g1 = Graph::new(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        let g2 = Graph::new(5, [(4, 3), (4, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(ahu_code(&root_at(&g1, 0).unwrap()), ahu_code(&root_at(&g2, 4).unwrap()));
    }

    #[test]
    fn edge_labeled_codes() {
        let cherry = Graph::star(2);
        let r = root_at(&cherry, 0).unwrap();
        let l = |a, b| EdgeLabeling::new([((0, 1), a), ((0, 2), b)], 2).unwrap();
        assert_eq!(labeled_code(&r, &l(1, 2)).unwrap(), labeled_code(&r, &l(2, 1)).unwrap());
        assert_ne!(labeled_code(&r, &l(1, 1)).unwrap(), labeled_code(&r, &l(1, 2)).unwrap());
        let chain = root_at(&Graph::path(3), 0).unwrap();
        let c = |a, b| EdgeLabeling::new([((0, 1), a), ((1, 2), b)], 2).unwrap();
        assert_ne!(labeled_code(&chain, &c(1, 2)).unwrap(), labeled_code(&chain, &c(2, 1)).unwrap());
        let missing = EdgeLabeling::new([((0, 1), 1)], 1).unwrap();
        assert!(matches!(labeled_code(&r, &missing), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn vertex_labeled_codes_include_root() {
        let r = root_at(&Graph::path(2), 0).unwrap();
        let a = VertexLabeling::new(vec![1, 2], 2).unwrap();
        let b = VertexLabeling::new(vec![2, 2], 2).unwrap();
        assert_ne!(labeled_code(&r, &a).unwrap(), labeled_code(&r, &b).unwrap());
        assert!(labeled_code(&r, &VertexLabeling::constant(3, 1)).is_err());
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(tree_aut_order(&Graph::path(4)).unwrap(), 2u32.into());
        assert_eq!(tree_aut_order(&Graph::star(3)).unwrap(), 6u32.into());
        assert_eq!(tree_aut_order(&double_star()).unwrap(), 8u32.into());
        assert_eq!(tree_aut_order(&spider_pair()).unwrap(), 1152u32.into());
    }
}
