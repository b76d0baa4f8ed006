//! Distinguishing number and index of trees.
//!
//! Everything rests on `N(R, k)`, the number of rooted-isomorphism classes
//! of distinguishing edge `k`-labelings of a rooted tree `R`. Children of a
//! vertex that carry isomorphic subtrees must receive pairwise different
//! (edge label, labeled subtree class) pairs, so
//!
//! ```text
//! N(R, k) = prod over child classes S with multiplicity m of C(k * N(S, k), m)
//! ```
//!
//! A vertex labeling class of `R` is an edge class together with a root
//! label, which gives `k * N(R, k)` vertex classes.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use crate::colabel::{to_colabel, write_from_colabel};
use crate::error::{Error, Result};
use crate::graph::{edge, is_tree, Edge, Graph};
use crate::labeling::{EdgeLabeling, Label, VertexLabeling};
use crate::rooted::{rooted_isomorphic, Anchored, CanonicalCode, CenterInfo, RootedTree};

/// A count clamped at `cap`. A saturated count means "at least `cap`".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SatCount {
    value: u64,
    saturated: bool,
    cap: u64,
}

impl SatCount {
    pub fn new(value: u64, cap: u64) -> Self {
        assert!(cap >= 2, "a cap below 2 cannot separate one class from many");
        if value >= cap {
            SatCount { value: cap, saturated: true, cap }
        } else {
            SatCount { value, saturated: false, cap }
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    /// The exact count, unless saturated.
    pub fn exact(&self) -> Option<u64> {
        (!self.saturated).then_some(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.exact() == Some(1)
    }

    /// Whether the true count is at least `x`; requires `x <= cap`.
    pub fn at_least(&self, x: u64) -> bool {
        debug_assert!(x <= self.cap);
        self.value >= x
    }
}

impl PartialOrd for SatCount {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        (self.cap == other.cap).then(|| self.value.cmp(&other.value))
    }
}

impl fmt::Display for SatCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.saturated {
            write!(f, ">={}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

trait ClassCount: Clone {
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, k: u64) -> Self;
    fn choose(&self, m: usize) -> Self;
}

impl ClassCount for SatCount {
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return SatCount::new(0, self.cap);
        }
        if self.saturated || other.saturated {
            return SatCount::new(self.cap, self.cap);
        }
        let p = (self.value as u128) * (other.value as u128);
        SatCount::new(p.min(self.cap as u128) as u64, self.cap)
    }

    fn scaled(&self, k: u64) -> Self {
        self.times(&SatCount::new(k.min(self.cap), self.cap))
    }

    fn choose(&self, m: usize) -> Self {
        let m = m as u64;
        if m == 0 {
            return SatCount::new(1, self.cap);
        }
        if self.saturated {
            // true x >= cap > m, hence C(x, m) >= x >= cap
            assert!(m < self.cap, "binomial argument exceeds the saturation cap");
            return *self;
        }
        let x = self.value;
        if m > x {
            return SatCount::new(0, self.cap);
        }
        // C(x, i) is nondecreasing for i <= x/2, so stopping early is exact
        let j = m.min(x - m);
        let mut c: u128 = 1;
        for i in 0..j {
            c = c * (x - i) as u128 / (i + 1) as u128;
            if c >= self.cap as u128 {
                return SatCount::new(self.cap, self.cap);
            }
        }
        SatCount::new(c as u64, self.cap)
    }
}

impl ClassCount for BigUint {
    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn scaled(&self, k: u64) -> Self {
        self * k
    }

    fn choose(&self, m: usize) -> Self {
        let mut c = BigUint::from(1u32);
        for i in 0..m as u64 {
            if *self < BigUint::from(i + 1) {
                return BigUint::from(0u32);
            }
            c = c * (self - i) / (i + 1);
        }
        c
    }
}

fn count_classes<C: ClassCount>(r: &RootedTree, k: u64, one: C) -> C {
    let mut memo: HashMap<&CanonicalCode, C> = HashMap::new();
    for &v in r.vertices().iter().rev() {
        let code = r.code_of(v);
        if memo.contains_key(code) {
            continue;
        }
        let mut total = one.clone();
        for group in r.child_groups(v) {
            let sub = &memo[r.code_of(group[0])];
            total = total.times(&sub.scaled(k).choose(group.len()));
        }
        memo.insert(code, total);
    }
    memo.remove(r.code_of(r.root())).expect("root visited")
}

fn saturation_cap(r: &RootedTree) -> u64 {
    (r.graph_order().max(r.size()) as u64).max(2)
}

/// `N(r, k)` in saturating arithmetic with cap `max(n, 2)`, `n` the order
/// of the ambient graph.
pub fn count_edge_classes(r: &RootedTree, k: u64) -> SatCount {
    let cap = saturation_cap(r);
    count_classes(r, k, SatCount::new(1, cap))
}

/// `N(r, k)` computed exactly.
pub fn count_edge_classes_exact(r: &RootedTree, k: u64) -> BigUint {
    count_classes(r, k, BigUint::from(1u32))
}

fn min_k(limit: usize, mut ok: impl FnMut(u64) -> bool) -> Result<usize> {
    (1..=limit.max(2))
        .find(|&k| ok(k as u64))
        .ok_or_else(|| Error::Internal(format!("no feasible label count up to {limit}")))
}

/// Least `k` with `N(r, k) >= 1`: the distinguishing number (and index) of `r`.
pub fn rooted_d(r: &RootedTree) -> usize {
    min_k(r.size(), |k| !count_edge_classes(r, k).is_zero()).expect("k = size always suffices")
}

/// Outcome of the three membership conditions for the extremal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyMembership {
    pub bicentric: bool,
    /// `None` when unicentric.
    pub halves_isomorphic: Option<bool>,
    /// `N(T_v, D)`; `None` unless both earlier conditions hold.
    pub classes_at_d: Option<SatCount>,
}

impl FamilyMembership {
    pub fn is_member(&self) -> bool {
        self.bicentric
            && self.halves_isomorphic == Some(true)
            && self.classes_at_d.is_some_and(|c| c.is_one())
    }

    /// Names of the failed conditions, in order.
    pub fn failed_conditions(&self) -> Vec<&'static str> {
        let mut failed = Vec::new();
        if !self.bicentric {
            failed.push("bicentric");
        } else if self.halves_isomorphic != Some(true) {
            failed.push("isomorphic halves");
        } else if !self.classes_at_d.is_some_and(|c| c.is_one()) {
            failed.push("unique distinguishing labeling of a half");
        }
        failed
    }
}

/// A tree together with its center-anchored rooting; all tree-level
/// quantities are computed from this.
#[derive(Debug, Clone)]
pub struct TreeAnalysis {
    n: usize,
    central_edge: Option<Edge>,
    anchored: Anchored,
}

impl TreeAnalysis {
    pub fn new(t: &Graph) -> Result<Self> {
        if !is_tree(t) {
            return Err(Error::NotATree);
        }
        let anchored = Anchored::of(t)?;
        Ok(TreeAnalysis {
            n: t.n(),
            central_edge: anchored.central_edge(),
            anchored,
        })
    }

    pub fn center(&self) -> CenterInfo {
        self.anchored.center()
    }

    pub fn anchored(&self) -> &Anchored {
        &self.anchored
    }

    fn require_order(&self, required: usize) -> Result<()> {
        if self.n < required {
            return Err(Error::OrderTooSmall { required, actual: self.n });
        }
        Ok(())
    }

    fn isomorphic_half(&self) -> Option<&RootedTree> {
        match &self.anchored {
            Anchored::Bicentric { tv, tw, .. } if rooted_isomorphic(tv, tw) => Some(tv),
            _ => None,
        }
    }

    /// Distinguishing number.
    pub fn d(&self) -> Result<usize> {
        self.require_order(2)?;
        match &self.anchored {
            Anchored::Unicentric { tree, .. } => Ok(rooted_d(tree)),
            Anchored::Bicentric { tv, .. } if self.isomorphic_half().is_some() => {
                // the two halves need different vertex-labeled classes
                min_k(self.n, |k| count_edge_classes(tv, k).scaled(k).at_least(2))
            }
            Anchored::Bicentric { tv, tw, .. } => Ok(rooted_d(tv).max(rooted_d(tw))),
        }
    }

    /// Distinguishing index, computed directly from the half structure
    /// (not from family membership).
    pub fn dprime(&self) -> Result<usize> {
        self.require_order(3)?;
        match &self.anchored {
            Anchored::Unicentric { tree, .. } => Ok(rooted_d(tree)),
            Anchored::Bicentric { tv, .. } if self.isomorphic_half().is_some() => {
                // the central edge is fixed by the swap, so the halves need
                // different edge-labeled classes
                min_k(self.n, |k| count_edge_classes(tv, k).at_least(2))
            }
            Anchored::Bicentric { tv, tw, .. } => Ok(rooted_d(tv).max(rooted_d(tw))),
        }
    }

    pub fn membership(&self) -> Result<FamilyMembership> {
        self.require_order(3)?;
        Ok(match &self.anchored {
            Anchored::Unicentric { .. } => FamilyMembership {
                bicentric: false,
                halves_isomorphic: None,
                classes_at_d: None,
            },
            Anchored::Bicentric { tv, tw, .. } => {
                let iso = rooted_isomorphic(tv, tw);
                FamilyMembership {
                    bicentric: true,
                    halves_isomorphic: Some(iso),
                    classes_at_d: if iso {
                        Some(count_edge_classes(tv, self.d()? as u64))
                    } else {
                        None
                    },
                }
            }
        })
    }

    /// Distinguishing vertex labeling with `D` labels.
    pub fn witness_vertex(&self) -> Result<VertexLabeling> {
        let d = self.d()?;
        let k = d as u64;
        let mut labels = vec![1; self.n];
        match &self.anchored {
            Anchored::Unicentric { tree, .. } => {
                write_from_colabel(tree, &first_class(tree, k)?, 1, &mut labels)?;
            }
            Anchored::Bicentric { tv, tw, .. } if self.isomorphic_half().is_some() => {
                let cv = edge_classes(tv, k, 2);
                let cw = edge_classes(tw, k, 2);
                if cv.len() >= 2 {
                    write_from_colabel(tv, &cv[0], 1, &mut labels)?;
                    write_from_colabel(tw, &cw[1], 1, &mut labels)?;
                } else if let (Some(a), Some(b)) = (cv.first(), cw.first()) {
                    // one edge class only: the root labels tell the halves apart
                    write_from_colabel(tv, a, 1, &mut labels)?;
                    write_from_colabel(tw, b, 2, &mut labels)?;
                } else {
                    return Err(Error::Internal("half has no distinguishing labeling".into()));
                }
            }
            Anchored::Bicentric { tv, tw, .. } => {
                write_from_colabel(tv, &first_class(tv, k)?, 1, &mut labels)?;
                write_from_colabel(tw, &first_class(tw, k)?, 1, &mut labels)?;
            }
        }
        VertexLabeling::new(labels, d as Label)
    }

    /// Distinguishing edge labeling. Uses `D` labels, or `D + 1` for
    /// members of the extremal family.
    pub fn witness_edge(&self) -> Result<EdgeLabeling> {
        self.require_order(3)?;
        let d = self.d()?;
        let f = self.witness_vertex()?;
        match &self.anchored {
            Anchored::Unicentric { tree, .. } => to_colabel(tree, &f),
            Anchored::Bicentric { v, w, tv, tw } => {
                let central = (edge(*v, *w), 1);
                if self.isomorphic_half().is_some() {
                    let member = self.membership()?.is_member();
                    if member {
                        // co-labelings agree on both halves; one extra label
                        // on a single edge of T_v breaks the swap
                        let mut labels: Vec<(Edge, Label)> = to_colabel(tv, &f)?.iter().collect();
                        labels.extend(to_colabel(tw, &f)?.iter());
                        let (c, p) = tv.parent_edges().next().expect("half has an edge");
                        let first = edge(c, p);
                        for (e, l) in labels.iter_mut() {
                            if *e == first {
                                *l = d as Label + 1;
                            }
                        }
                        labels.push(central);
                        return EdgeLabeling::new(labels, d as Label + 1);
                    }
                    let cv = edge_classes(tv, d as u64, 2);
                    let cw = edge_classes(tw, d as u64, 2);
                    if cv.len() < 2 || cw.len() < 2 {
                        return Err(Error::Internal("expected two edge classes per half".into()));
                    }
                    let labels = cv[0].iter().chain(cw[1].iter()).chain([central]);
                    return EdgeLabeling::new(labels, d as Label);
                }
                let labels = to_colabel(tv, &f)?
                    .iter()
                    .chain(to_colabel(tw, &f)?.iter())
                    .chain([central])
                    .collect::<Vec<_>>();
                EdgeLabeling::new(labels, d as Label)
            }
        }
    }

    pub fn central_edge(&self) -> Option<Edge> {
        self.central_edge
    }
}

pub fn tree_d(t: &Graph) -> Result<usize> {
    TreeAnalysis::new(t)?.d()
}

pub fn tree_dprime(t: &Graph) -> Result<usize> {
    TreeAnalysis::new(t)?.dprime()
}

pub fn in_family_t(t: &Graph) -> Result<FamilyMembership> {
    TreeAnalysis::new(t)?.membership()
}

pub fn witness_labelings(t: &Graph) -> Result<(VertexLabeling, EdgeLabeling)> {
    let a = TreeAnalysis::new(t)?;
    Ok((a.witness_vertex()?, a.witness_edge()?))
}

/// Everything known about one tree.
#[derive(Debug, Clone)]
pub struct TreeClassification {
    pub d: usize,
    pub dprime: usize,
    pub center: CenterInfo,
    pub membership: FamilyMembership,
    pub witness_vertex: VertexLabeling,
    pub witness_edge: EdgeLabeling,
}

impl TreeClassification {
    pub fn in_family_t(&self) -> bool {
        self.membership.is_member()
    }
}

pub fn classify_tree(t: &Graph) -> Result<TreeClassification> {
    let a = TreeAnalysis::new(t)?;
    Ok(TreeClassification {
        d: a.d()?,
        dprime: a.dprime()?,
        center: a.center(),
        membership: a.membership()?,
        witness_vertex: a.witness_vertex()?,
        witness_edge: a.witness_edge()?,
    })
}

fn first_class(r: &RootedTree, k: u64) -> Result<EdgeLabeling> {
    edge_classes(r, k, 1)
        .pop()
        .ok_or_else(|| Error::Internal(format!("no distinguishing {k}-labeling of a rooted tree")))
}

/// Advances `c` to the next `m`-subset of `0..p` in lexicographic order.
fn next_combination(c: &mut [usize], p: usize) -> bool {
    let m = c.len();
    for i in (0..m).rev() {
        if c[i] < p - m + i {
            c[i] += 1;
            for j in i + 1..m {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

type Assignment = Vec<(usize, Label)>;

/// Up to `limit` pairwise non-isomorphic distinguishing edge `k`-labelings
/// of `r`, in a deterministic order. Rooted-isomorphic inputs produce
/// corresponding outputs position by position.
pub fn edge_classes(r: &RootedTree, k: u64, limit: usize) -> Vec<EdgeLabeling> {
    if limit == 0 {
        return Vec::new();
    }
    let k_us = k as usize;
    let n = r.graph_order();
    let mut want = vec![0usize; n];
    want[r.root()] = limit;
    for &v in r.vertices() {
        for group in r.child_groups(v) {
            let need = (group.len().saturating_add(want[v]) - 1).div_ceil(k_us);
            for &c in group {
                want[c] = need;
            }
        }
    }
    let mut classes: Vec<Vec<Assignment>> = vec![Vec::new(); n];
    for &v in r.vertices().iter().rev() {
        let mut per_group: Vec<Vec<Assignment>> = Vec::new();
        let mut feasible = true;
        for group in r.child_groups(v) {
            let m = group.len();
            let options = k_us * classes[group[0]].len();
            if options < m {
                feasible = false;
                break;
            }
            let mut choices = Vec::new();
            let mut comb: Vec<usize> = (0..m).collect();
            loop {
                let mut a = Assignment::new();
                for (&c, &o) in group.iter().zip(&comb) {
                    a.push((c, (o % k_us) as Label + 1));
                    a.extend_from_slice(&classes[c][o / k_us]);
                }
                choices.push(a);
                if choices.len() >= want[v] || !next_combination(&mut comb, options) {
                    break;
                }
            }
            per_group.push(choices);
        }
        if !feasible {
            continue;
        }
        // lexicographic product of the group choices, last group fastest
        let mut idx = vec![0usize; per_group.len()];
        let mut out = Vec::new();
        'product: loop {
            let mut a = Assignment::new();
            for (g, &i) in per_group.iter().zip(&idx) {
                a.extend_from_slice(&g[i]);
            }
            out.push(a);
            if out.len() >= want[v] {
                break;
            }
            for pos in (0..idx.len()).rev() {
                idx[pos] += 1;
                if idx[pos] < per_group[pos].len() {
                    continue 'product;
                }
                idx[pos] = 0;
            }
            break;
        }
        classes[v] = out;
    }
    std::mem::take(&mut classes[r.root()])
        .into_iter()
        .map(|a| {
            EdgeLabeling::new(
                a.into_iter().map(|(c, l)| ((c, r.parent(c).expect("non-root")), l)),
                k as Label,
            )
            .expect("labels within 1..=k")
        })
        .collect()
}
