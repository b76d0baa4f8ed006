//! Brute-force reference implementations.
//!
//! Nothing here knows about centers, codes or cycles: automorphisms are
//! found by backtracking over vertex images, pruned only by iterated
//! color refinement, and distinguishing numbers by enumerating labelings.
//! The fast algorithms in the rest of the crate are checked against it.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};
use crate::labeling::{EdgeLabeling, Label, VertexLabeling};
use crate::rooted::{labeled_code, RootedTree};

/// Explicit limits; exceeding any of them is an error, never an approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest graph order accepted.
    pub max_n: usize,
    /// Largest automorphism group [`automorphisms_with`] will list.
    pub max_automorphisms: usize,
    /// Largest number of labelings examined by one enumeration.
    pub labeling_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n: 20,
            max_automorphisms: 5_000_000,
            labeling_budget: 200_000_000,
        }
    }
}

impl OracleConfig {
    fn check_size(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_n {
            return Err(Error::SizeBound { n: g.n(), bound: self.max_n });
        }
        Ok(())
    }
}

const UNMAPPED: usize = usize::MAX;

/// A graph with vertex colors and optional edge colors (indexed like
/// [`Graph::edges`]). Automorphisms must preserve both.
struct Colored<'a> {
    g: &'a Graph,
    edge_colors: Option<&'a [u32]>,
}

impl Colored<'_> {
    fn edge_color(&self, u: usize, v: usize) -> u32 {
        match self.edge_colors {
            Some(c) => c[self.g.edge_index(u, v).expect("edge exists")],
            None => 0,
        }
    }

    /// Coarsest equitable refinement of `colors`.
    fn refine(&self, colors: &[u32]) -> Vec<u32> {
        let mut colors = colors.to_vec();
        let mut classes = colors.iter().collect::<HashSet<_>>().len();
        loop {
            let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..self.g.n())
                .map(|v| {
                    let mut nb: Vec<(u32, u32)> = self
                        .g
                        .neighbors(v)
                        .iter()
                        .map(|&w| (self.edge_color(v, w), colors[w]))
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let ids: BTreeMap<&(u32, Vec<(u32, u32)>), u32> = sigs
                .iter()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .enumerate()
                .map(|(i, s)| (s, i as u32))
                .collect();
            let next: Vec<u32> = sigs.iter().map(|s| ids[s]).collect();
            let count = ids.len();
            colors = next;
            if count == classes {
                return colors;
            }
            classes = count;
        }
    }

    /// Breadth-first vertex order starting at `start`, covering all
    /// components, with each vertex's already-ordered neighbor (if any).
    fn search_order(&self, start: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut anchor = vec![None; n];
        for s in std::iter::once(start).chain(0..n) {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in self.g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        anchor[w] = Some(u);
                        queue.push_back(w);
                    }
                }
            }
        }
        (order, anchor)
    }

    fn consistent(&self, x: usize, y: usize, map: &[usize]) -> bool {
        self.g.neighbors(x).iter().all(|&z| {
            let mz = map[z];
            mz == UNMAPPED
                || (self.g.has_edge(y, mz) && self.edge_color(x, z) == self.edge_color(y, mz))
        })
    }

    /// Depth-first extension of `map` along `order`. `visit` is called on
    /// every complete automorphism and returns `true` to stop the search.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        order: &[usize],
        anchor: &[Option<usize>],
        colors: &[u32],
        map: &mut [usize],
        used: &mut [bool],
        pos: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let Some(&x) = order.get(pos) else {
            return visit(map);
        };
        if map[x] != UNMAPPED {
            return self.extend(order, anchor, colors, map, used, pos + 1, visit);
        }
        let all: Vec<usize>;
        let candidates: &[usize] = match anchor[x] {
            Some(a) => self.g.neighbors(map[a]),
            None => {
                all = (0..self.g.n()).collect();
                &all
            }
        };
        for &y in candidates {
            if used[y] || colors[y] != colors[x] || !self.consistent(x, y, map) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            let stop = self.extend(order, anchor, colors, map, used, pos + 1, visit);
            map[x] = UNMAPPED;
            used[y] = false;
            if stop {
                return true;
            }
        }
        false
    }

    /// Whether some color-preserving automorphism maps `u` to `v`.
    fn maps(&self, colors: &[u32], u: usize, v: usize) -> bool {
        let n = self.g.n();
        let (order, anchor) = self.search_order(u);
        let mut map = vec![UNMAPPED; n];
        let mut used = vec![false; n];
        map[u] = v;
        used[v] = true;
        self.extend(&order, &anchor, colors, &mut map, &mut used, 0, &mut |_| true)
    }

    /// Whether a non-identity color-preserving automorphism exists.
    fn has_nontrivial_automorphism(&self, vertex_colors: &[u32]) -> bool {
        let mut colors = self.refine(vertex_colors);
        loop {
            let mut cells: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for (v, &c) in colors.iter().enumerate() {
                cells.entry(c).or_default().push(v);
            }
            let Some(cell) = cells.into_values().filter(|c| c.len() > 1).min_by_key(|c| c.len())
            else {
                // discrete equitable partition: only the identity survives
                return false;
            };
            let u = cell[0];
            if cell[1..].iter().any(|&v| self.maps(&colors, u, v)) {
                return true;
            }
            // every automorphism fixes u
            let fresh = colors.iter().max().map_or(0, |m| m + 1);
            colors[u] = fresh;
            colors = self.refine(&colors);
        }
    }
}

/// All automorphisms of `g`, identity included.
pub fn automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    automorphisms_with(g, &OracleConfig::default())
}

pub fn automorphisms_with(g: &Graph, cfg: &OracleConfig) -> Result<Vec<Permutation>> {
    cfg.check_size(g)?;
    let c = Colored { g, edge_colors: None };
    let colors = c.refine(&vec![0; g.n()]);
    let (order, anchor) = c.search_order(0);
    let mut map = vec![UNMAPPED; g.n()];
    let mut used = vec![false; g.n()];
    let mut found = Vec::new();
    let mut overflow = false;
    c.extend(&order, &anchor, &colors, &mut map, &mut used, 0, &mut |m| {
        if found.len() >= cfg.max_automorphisms {
            overflow = true;
            return true;
        }
        found.push(Permutation::new(m.to_vec()).expect("bijection"));
        false
    });
    if overflow {
        return Err(Error::BudgetExceeded(format!(
            "more than {} automorphisms",
            cfg.max_automorphisms
        )));
    }
    Ok(found)
}

/// A labeling the oracle can turn into vertex and edge colors.
pub trait OracleLabeling {
    fn colors(&self, g: &Graph) -> Result<(Vec<u32>, Option<Vec<u32>>)>;
    /// Whether `alpha` preserves the labeling.
    fn preserved_by(&self, g: &Graph, alpha: &Permutation) -> bool;
}

impl OracleLabeling for VertexLabeling {
    fn colors(&self, g: &Graph) -> Result<(Vec<u32>, Option<Vec<u32>>)> {
        self.check_domain(g)?;
        Ok((self.labels().to_vec(), None))
    }

    fn preserved_by(&self, _: &Graph, alpha: &Permutation) -> bool {
        (0..self.len()).all(|x| self.get(x) == self.get(alpha.apply(x)))
    }
}

impl OracleLabeling for EdgeLabeling {
    fn colors(&self, g: &Graph) -> Result<(Vec<u32>, Option<Vec<u32>>)> {
        Ok((vec![0; g.n()], Some(self.to_graph_order(g)?)))
    }

    fn preserved_by(&self, _: &Graph, alpha: &Permutation) -> bool {
        self.iter()
            .all(|((u, v), l)| self.get(alpha.apply(u), alpha.apply(v)) == Some(l))
    }
}

/// True iff no non-identity automorphism of `g` preserves `l`.
pub fn is_distinguishing<L: OracleLabeling + ?Sized>(g: &Graph, l: &L) -> Result<bool> {
    OracleConfig::default().check_size(g)?;
    let (vc, ec) = l.colors(g)?;
    let c = Colored { g, edge_colors: ec.as_deref() };
    Ok(!c.has_nontrivial_automorphism(&vc))
}

/// The literal definition: check `l` against an explicit automorphism list.
pub fn is_distinguishing_by_enumeration<L: OracleLabeling + ?Sized>(
    g: &Graph,
    l: &L,
    auts: &[Permutation],
) -> bool {
    auts.iter()
        .filter(|a| !a.is_identity())
        .all(|a| !l.preserved_by(g, a))
}

/// Calls `visit` on every labeling of `len` items with labels `1..=k` in
/// first-occurrence normal form that uses all `k` labels. Stops early when
/// `visit` returns `true`; returns whether it stopped.
fn for_each_normal_labeling(
    len: usize,
    k: usize,
    budget: &mut u64,
    visit: &mut dyn FnMut(&[Label]) -> bool,
) -> Result<bool> {
    fn rec(
        buf: &mut Vec<Label>,
        len: usize,
        k: usize,
        max: usize,
        budget: &mut u64,
        visit: &mut dyn FnMut(&[Label]) -> bool,
    ) -> Result<bool> {
        if buf.len() == len {
            if max < k {
                return Ok(false);
            }
            if *budget == 0 {
                return Err(Error::BudgetExceeded("labeling enumeration budget".into()));
            }
            *budget -= 1;
            return Ok(visit(buf));
        }
        // not enough positions left to introduce the missing labels
        if k - max > len - buf.len() {
            return Ok(false);
        }
        for l in 1..=(max + 1).min(k) {
            buf.push(l as Label);
            let stop = rec(buf, len, k, max.max(l), budget, visit)?;
            buf.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
    rec(&mut Vec::with_capacity(len), len, k, 0, budget, visit)
}

fn brute_min(
    len: usize,
    upper: usize,
    budget: u64,
    mut distinguishing: impl FnMut(&[Label]) -> bool,
) -> Result<usize> {
    if len == 0 {
        return Ok(1);
    }
    let mut budget = budget;
    for k in 1..=upper.min(len) {
        let mut hit = false;
        for_each_normal_labeling(len, k, &mut budget, &mut |l| {
            hit = distinguishing(l);
            hit
        })?;
        if hit {
            return Ok(k);
        }
    }
    Err(Error::NoDistinguishingLabeling(format!(
        "none with at most {upper} labels"
    )))
}

/// Distinguishing number by exhaustive search.
pub fn brute_d(g: &Graph) -> Result<usize> {
    brute_d_with(g, &OracleConfig::default())
}

pub fn brute_d_with(g: &Graph, cfg: &OracleConfig) -> Result<usize> {
    cfg.check_size(g)?;
    let c = Colored { g, edge_colors: None };
    brute_min(g.n(), g.n(), cfg.labeling_budget, |l| {
        !c.has_nontrivial_automorphism(l)
    })
}

/// Distinguishing index by exhaustive search.
pub fn brute_dprime(g: &Graph) -> Result<usize> {
    brute_dprime_with(g, &OracleConfig::default())
}

pub fn brute_dprime_with(g: &Graph, cfg: &OracleConfig) -> Result<usize> {
    cfg.check_size(g)?;
    let zero = vec![0; g.n()];
    brute_min(g.m(), g.n().max(g.m()), cfg.labeling_budget, |l| {
        let c = Colored { g, edge_colors: Some(l) };
        !c.has_nontrivial_automorphism(&zero)
    })
}

/// Root-fixing variant: the rooted tree as a standalone graph with its
/// root (local vertex 0) singled out by color.
fn rooted_graph(r: &RootedTree) -> (Graph, Vec<usize>) {
    r.to_graph()
}

fn root_marked(colors: impl Iterator<Item = u32>) -> Vec<u32> {
    colors
        .enumerate()
        .map(|(i, c)| (c << 1) | u32::from(i == 0))
        .collect()
}

/// Whether `l` is distinguishing for `r` as a rooted tree, by automorphism search.
pub fn is_rooted_distinguishing_vertex(r: &RootedTree, l: &VertexLabeling) -> Result<bool> {
    let (h, orig) = rooted_graph(r);
    if l.len() != r.graph_order() {
        return Err(Error::DomainMismatch("vertex labeling size".into()));
    }
    let colors = root_marked(orig.iter().map(|&v| l.get(v)));
    Ok(!Colored { g: &h, edge_colors: None }.has_nontrivial_automorphism(&colors))
}

pub fn is_rooted_distinguishing_edge(r: &RootedTree, l: &EdgeLabeling) -> Result<bool> {
    let (h, orig) = rooted_graph(r);
    let ec = h
        .edges()
        .iter()
        .map(|&(a, b)| {
            l.get(orig[a], orig[b])
                .ok_or_else(|| Error::DomainMismatch("edge labeling misses a tree edge".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let colors = root_marked(std::iter::repeat_n(0, h.n()));
    Ok(!Colored { g: &h, edge_colors: Some(&ec) }.has_nontrivial_automorphism(&colors))
}

/// Least `k` admitting a distinguishing vertex labeling of the rooted tree.
pub fn brute_rooted_d_vertex(r: &RootedTree) -> Result<usize> {
    let (h, _) = rooted_graph(r);
    let c = Colored { g: &h, edge_colors: None };
    brute_min(h.n(), h.n(), OracleConfig::default().labeling_budget, |l| {
        !c.has_nontrivial_automorphism(&root_marked(l.iter().copied()))
    })
}

/// Least `k` admitting a distinguishing edge labeling of the rooted tree.
pub fn brute_rooted_d_edge(r: &RootedTree) -> Result<usize> {
    let (h, _) = rooted_graph(r);
    let colors = root_marked(std::iter::repeat_n(0, h.n()));
    brute_min(h.m(), h.n(), OracleConfig::default().labeling_budget, |l| {
        !Colored { g: &h, edge_colors: Some(l) }.has_nontrivial_automorphism(&colors)
    })
}

/// Exact number of rooted-isomorphism classes of distinguishing edge
/// `k`-labelings of `r`, by enumerating all `k^(|r| - 1)` labelings.
pub fn brute_class_count(r: &RootedTree, k: u32) -> Result<u64> {
    brute_class_count_with(r, k, &OracleConfig::default())
}

pub fn brute_class_count_with(r: &RootedTree, k: u32, cfg: &OracleConfig) -> Result<u64> {
    let edges: Vec<(usize, usize)> = r.parent_edges().collect();
    let total = (k as u64).checked_pow(edges.len() as u32);
    if total.is_none_or(|t| t > cfg.labeling_budget) {
        return Err(Error::BudgetExceeded(format!(
            "{k}^{} edge labelings",
            edges.len()
        )));
    }
    let mut labels = vec![1 as Label; edges.len()];
    let mut classes = HashSet::new();
    loop {
        let l = EdgeLabeling::new(edges.iter().copied().zip(labels.iter().copied()), k)?;
        if is_rooted_distinguishing_edge(r, &l)? {
            classes.insert(labeled_code(r, &l)?);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == labels.len() {
                return Ok(classes.len() as u64);
            }
            if labels[i] < k {
                labels[i] += 1;
                break;
            }
            labels[i] = 1;
            i += 1;
        }
    }
}
