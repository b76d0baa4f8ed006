//! Distinguishing number and index of connected unicyclic graphs.
//!
//! A unicyclic graph is its cycle `v_0 .. v_{t-1}` with a rooted tree `T_i`
//! hanging at every `v_i`. An automorphism permutes the cycle by a dihedral
//! element `σ` with `T_i ≅ T_σ(i)` for all `i`, and every such `σ` lifts to
//! an automorphism. So a labeling is distinguishing iff each `T_i` is
//! labeled distinguishingly as a rooted tree and no non-identity `σ` of the
//! induced cycle group maps the sequence of labeled classes onto itself.
//!
//! Cycle edge `j` joins `v_j` and `v_{j+1}` (indices mod `t`).

use std::collections::{BTreeMap, BTreeSet};

use crate::colabel::{to_colabel, write_from_colabel};
use crate::error::{Error, Result};
use crate::graph::{edge, unicyclic_cycle, Graph};
use crate::labeling::{EdgeLabeling, Label, VertexLabeling};
use crate::rooted::{labeled_codes, CanonicalCode, RootedTree};
use crate::tree_dist::{count_edge_classes, edge_classes};

/// An element of the dihedral group acting on positions `0..t` of a cycle:
/// `i -> i + shift` for rotations, `i -> shift - i` for reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    t: usize,
    reflect: bool,
    shift: usize,
}

impl Dihedral {
    pub fn identity(t: usize) -> Self {
        Dihedral { t, reflect: false, shift: 0 }
    }

    pub fn rotation(t: usize, shift: usize) -> Self {
        Dihedral { t, reflect: false, shift: shift % t }
    }

    pub fn reflection(t: usize, shift: usize) -> Self {
        Dihedral { t, reflect: true, shift: shift % t }
    }

    /// All `2t` elements: rotations first, then reflections.
    pub fn all(t: usize) -> Vec<Self> {
        (0..t)
            .map(|s| Self::rotation(t, s))
            .chain((0..t).map(|s| Self::reflection(t, s)))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        !self.reflect && self.shift == 0
    }

    pub fn is_reflection(&self) -> bool {
        self.reflect
    }

    /// Image of vertex position `i`.
    #[inline]
    pub fn vertex(&self, i: usize) -> usize {
        if self.reflect {
            (self.shift + self.t - i % self.t) % self.t
        } else {
            (i + self.shift) % self.t
        }
    }

    /// Image of edge position `j`; a reflection `i -> s - i` sends edge
    /// `{j, j+1}` to `{s-j-1, s-j}`, i.e. edge `s - 1 - j`.
    #[inline]
    pub fn edge(&self, j: usize) -> usize {
        if self.reflect {
            (self.shift + 2 * self.t - 1 - j % self.t) % self.t
        } else {
            (j + self.shift) % self.t
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Dihedral) -> Dihedral {
        let (a, b) = (self.vertex(other.vertex(0)), self.vertex(other.vertex(1)));
        *Dihedral::all(self.t)
            .iter()
            .find(|d| d.vertex(0) == a && d.vertex(1) == b)
            .expect("dihedral group is closed")
    }

    pub fn inverse(&self) -> Dihedral {
        if self.reflect {
            *self
        } else {
            Dihedral::rotation(self.t, self.t - self.shift)
        }
    }

    /// `(σ·s)[σ(i)] = s[i]` for vertex sequences.
    pub fn act_vertices<T: Clone>(&self, s: &[T]) -> Vec<T> {
        let mut out = s.to_vec();
        for (i, x) in s.iter().enumerate() {
            out[self.vertex(i)] = x.clone();
        }
        out
    }

    /// `(σ·s)[σ(j)] = s[j]` for edge sequences.
    pub fn act_edges<T: Clone>(&self, s: &[T]) -> Vec<T> {
        let mut out = s.to_vec();
        for (j, x) in s.iter().enumerate() {
            out[self.edge(j)] = x.clone();
        }
        out
    }

    pub fn fixes_vertex_seq<T: PartialEq>(&self, s: &[T]) -> bool {
        (0..s.len()).all(|i| s[self.vertex(i)] == s[i])
    }

    pub fn fixes_edge_seq<T: PartialEq>(&self, s: &[T]) -> bool {
        (0..s.len()).all(|j| s[self.edge(j)] == s[j])
    }
}

/// Dihedral stabilizer of a vertex-position sequence.
pub fn vertex_stabilizer<T: PartialEq>(s: &[T]) -> BTreeSet<Dihedral> {
    Dihedral::all(s.len())
        .into_iter()
        .filter(|d| d.fixes_vertex_seq(s))
        .collect()
}

/// Dihedral stabilizer of an edge-position sequence.
pub fn edge_stabilizer<T: PartialEq>(s: &[T]) -> BTreeSet<Dihedral> {
    Dihedral::all(s.len())
        .into_iter()
        .filter(|d| d.fixes_edge_seq(s))
        .collect()
}

#[derive(Debug, Clone)]
pub struct UnicyclicDecomposition {
    cycle: Vec<usize>,
    hanging: Vec<RootedTree>,
}

impl UnicyclicDecomposition {
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// The tree hanging at cycle position `i`, rooted at `cycle[i]`.
    pub fn hanging(&self, i: usize) -> &RootedTree {
        &self.hanging[i]
    }

    /// Cycle edge `j` as a normalized vertex pair.
    pub fn cycle_edge(&self, j: usize) -> (usize, usize) {
        let t = self.cycle.len();
        edge(self.cycle[j], self.cycle[(j + 1) % t])
    }

    fn codes(&self) -> Vec<&CanonicalCode> {
        self.hanging.iter().map(|r| r.code_of(r.root())).collect()
    }
}

pub fn decompose(g: &Graph) -> Result<UnicyclicDecomposition> {
    let cycle = unicyclic_cycle(g).ok_or(Error::NotUnicyclic)?;
    let hanging = cycle
        .iter()
        .map(|&v| {
            let others: Vec<usize> = cycle.iter().copied().filter(|&w| w != v).collect();
            RootedTree::component(g, v, &others)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UnicyclicDecomposition { cycle, hanging })
}

/// Dihedral elements induced on the cycle by automorphisms of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSymmetryGroup {
    t: usize,
    elements: Vec<Dihedral>,
}

impl CycleSymmetryGroup {
    pub fn elements(&self) -> &[Dihedral] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Dihedral> {
        self.elements.iter().filter(|d| !d.is_identity())
    }
}

pub fn cycle_symmetries(d: &UnicyclicDecomposition) -> CycleSymmetryGroup {
    let codes = d.codes();
    CycleSymmetryGroup {
        t: d.len(),
        elements: Dihedral::all(d.len())
            .into_iter()
            .filter(|s| s.fixes_vertex_seq(&codes))
            .collect(),
    }
}

/// Code identifying a unicyclic graph up to isomorphism: the smallest
/// rotation/reflection of the sequence of hanging-tree codes.
pub fn unicyclic_code(g: &Graph) -> Result<CanonicalCode> {
    let d = decompose(g)?;
    let codes = d.codes();
    let best = Dihedral::all(d.len())
        .iter()
        .map(|s| s.act_vertices(&codes))
        .min()
        .expect("non-empty group");
    Ok(CanonicalCode::tagged(b'C', &best))
}

/// A connected unicyclic graph prepared for the distinguishing computations.
#[derive(Debug, Clone)]
pub struct UnicyclicAnalysis {
    n: usize,
    decomposition: UnicyclicDecomposition,
    group: CycleSymmetryGroup,
    /// Per position, how many positions share its hanging-tree type.
    type_sizes: Vec<usize>,
}

/// A solution of the class-level search: a class index per position and,
/// for edge labelings, a label per cycle edge.
struct Choice {
    classes: Vec<usize>,
    cycle_labels: Vec<Label>,
}

impl UnicyclicAnalysis {
    pub fn new(g: &Graph) -> Result<Self> {
        let decomposition = decompose(g)?;
        let group = cycle_symmetries(&decomposition);
        let codes = decomposition.codes();
        let type_sizes = codes
            .iter()
            .map(|c| codes.iter().filter(|&&o| o == *c).count())
            .collect();
        Ok(UnicyclicAnalysis {
            n: g.n(),
            decomposition,
            group,
            type_sizes,
        })
    }

    pub fn decomposition(&self) -> &UnicyclicDecomposition {
        &self.decomposition
    }

    pub fn group(&self) -> &CycleSymmetryGroup {
        &self.group
    }

    /// Per-position class budgets; at most as many distinct classes are
    /// useful as there are positions of the same type.
    fn options(&self, k: u64, vertex: bool) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(self.decomposition.len());
        for (i, r) in self.decomposition.hanging.iter().enumerate() {
            // the count is clamped at a cap no smaller than n, so clamping
            // again at the type size loses nothing
            let c = count_edge_classes(r, k).value();
            let c = if vertex { c.saturating_mul(k) } else { c };
            let avail = (c as usize).min(self.type_sizes[i]);
            if avail == 0 {
                return None;
            }
            out.push(avail);
        }
        Some(out)
    }

    fn search(&self, options: &[usize], edge_labels: Option<Label>) -> Option<Choice> {
        let t = self.decomposition.len();
        let mut classes = vec![0usize; t];
        // cycle edge labels minus one
        let mut cycle_labels = vec![0usize; t];
        let breaks_all = |c: &[usize], e: &[usize]| {
            self.group.non_identity().all(|s| {
                !(s.fixes_vertex_seq(c) && (edge_labels.is_none() || s.fixes_edge_seq(e)))
            })
        };
        // odometer over the class choices, then over the cycle edge labels
        let k = edge_labels.unwrap_or(1);
        loop {
            loop {
                if breaks_all(&classes, &cycle_labels) {
                    let cycle_labels = cycle_labels.iter().map(|&l| l as Label + 1).collect();
                    return Some(Choice { classes, cycle_labels });
                }
                if !advance(&mut cycle_labels, |_| k as usize) {
                    break;
                }
            }
            if !advance(&mut classes, |i| options[i]) {
                return None;
            }
        }
    }

    fn find(&self, k: u64, vertex: bool) -> Option<Choice> {
        let options = self.options(k, vertex)?;
        self.search(&options, (!vertex).then_some(k as Label))
    }

    fn min_k(&self, vertex: bool) -> Result<usize> {
        (1..=self.n as u64)
            .find(|&k| self.find(k, vertex).is_some())
            .map(|k| k as usize)
            .ok_or_else(|| Error::Internal(format!("no distinguishing labeling up to {}", self.n)))
    }

    /// Distinguishing number.
    pub fn d(&self) -> Result<usize> {
        self.min_k(true)
    }

    /// Distinguishing index.
    pub fn dprime(&self) -> Result<usize> {
        self.min_k(false)
    }

    /// Edge classes per position for a solved choice; positions of one
    /// type share the same request so equal indices mean isomorphic classes.
    fn materialize(&self, k: u64, needed: impl Fn(usize) -> usize) -> Vec<Vec<EdgeLabeling>> {
        let codes = self.decomposition.codes();
        let mut per_type: BTreeMap<&CanonicalCode, usize> = BTreeMap::new();
        for (i, &c) in codes.iter().enumerate() {
            let e = per_type.entry(c).or_default();
            *e = (*e).max(needed(i));
        }
        self.decomposition
            .hanging
            .iter()
            .zip(&codes)
            .map(|(r, c)| edge_classes(r, k, per_type[c]))
            .collect()
    }

    pub fn witness_vertex_with(&self, k: usize) -> Result<Option<VertexLabeling>> {
        let k64 = k as u64;
        let Some(choice) = self.find(k64, true) else {
            return Ok(None);
        };
        let lists = self.materialize(k64, |i| choice.classes[i] / k + 1);
        let mut labels = vec![1; self.n];
        for (i, &c) in choice.classes.iter().enumerate() {
            let r = &self.decomposition.hanging[i];
            write_from_colabel(r, &lists[i][c / k], (c % k) as Label + 1, &mut labels)?;
        }
        Ok(Some(VertexLabeling::new(labels, k as Label)?))
    }

    pub fn witness_edge_with(&self, k: usize) -> Result<Option<EdgeLabeling>> {
        let k64 = k as u64;
        let Some(choice) = self.find(k64, false) else {
            return Ok(None);
        };
        let lists = self.materialize(k64, |i| choice.classes[i] + 1);
        let mut labels = Vec::with_capacity(self.n);
        for (i, &c) in choice.classes.iter().enumerate() {
            labels.extend(lists[i][c].iter());
        }
        for (j, &l) in choice.cycle_labels.iter().enumerate() {
            labels.push((self.decomposition.cycle_edge(j), l));
        }
        Ok(Some(EdgeLabeling::new(labels, k as Label)?))
    }

    pub fn witness_vertex(&self) -> Result<VertexLabeling> {
        self.witness_vertex_with(self.d()?)?
            .ok_or_else(|| Error::Internal("search found no witness at D".into()))
    }

    pub fn witness_edge(&self) -> Result<EdgeLabeling> {
        self.witness_edge_with(self.dprime()?)?
            .ok_or_else(|| Error::Internal("search found no witness at D'".into()))
    }

    /// Structural check of a vertex labeling of the whole graph.
    pub fn is_distinguishing_vertex(&self, f: &VertexLabeling) -> Result<bool> {
        if f.len() != self.n {
            return Err(Error::DomainMismatch("vertex labeling size".into()));
        }
        let mut seq = Vec::with_capacity(self.decomposition.len());
        for r in &self.decomposition.hanging {
            let (mut codes, distinct) = labeled_codes(r, f)?;
            if !distinct {
                return Ok(false);
            }
            seq.push(std::mem::take(&mut codes[r.root()]));
        }
        Ok(self.group.non_identity().all(|s| !s.fixes_vertex_seq(&seq)))
    }

    /// Structural check of an edge labeling of the whole graph.
    pub fn is_distinguishing_edge(&self, f: &EdgeLabeling) -> Result<bool> {
        let mut seq = Vec::with_capacity(self.decomposition.len());
        for r in &self.decomposition.hanging {
            let (mut codes, distinct) = labeled_codes(r, f)?;
            if !distinct {
                return Ok(false);
            }
            seq.push(std::mem::take(&mut codes[r.root()]));
        }
        let cyc = self.cycle_edge_labels(f)?;
        Ok(self
            .group
            .non_identity()
            .all(|s| !(s.fixes_vertex_seq(&seq) && s.fixes_edge_seq(&cyc))))
    }

    fn cycle_edge_labels(&self, f: &EdgeLabeling) -> Result<Vec<Label>> {
        (0..self.decomposition.len())
            .map(|j| {
                let (u, v) = self.decomposition.cycle_edge(j);
                f.get(u, v)
                    .ok_or_else(|| Error::DomainMismatch(format!("cycle edge {{{u}, {v}}} unlabeled")))
            })
            .collect()
    }

    /// Vertex labeling built from a distinguishing edge labeling with the
    /// same label bound: co-labelings on the hanging trees, and on the cycle
    /// a labeling whose dihedral stabilizer lies inside that of the input.
    pub fn edge_to_vertex(&self, f: &EdgeLabeling) -> Result<VertexLabeling> {
        if !self.is_distinguishing_edge(f)? {
            return Err(Error::NotDistinguishing);
        }
        let k = f.k();
        let mut labels = vec![1; self.n];
        for r in &self.decomposition.hanging {
            write_from_colabel(r, f, 1, &mut labels)?;
        }
        let input = self.cycle_edge_labels(f)?;
        let t = input.len();
        let cyc = if k == 1 {
            vec![1; t]
        } else if t >= 6 {
            asymmetric_two_labeling(t)
        } else if distinct_count(&input) >= 3 {
            asymmetric_three_labeling(t, false)
        } else {
            table_edge_to_vertex(&input)?
        };
        if !vertex_stabilizer(&cyc).is_subset(&edge_stabilizer(&input)) {
            return Err(Error::Internal("cycle transformation enlarged the stabilizer".into()));
        }
        for (i, &l) in cyc.iter().enumerate() {
            labels[self.decomposition.cycle[i]] = l;
        }
        let out = VertexLabeling::new(labels, k)?;
        if !self.is_distinguishing_vertex(&out)? {
            return Err(Error::Internal("edge-to-vertex output is not distinguishing".into()));
        }
        Ok(out)
    }

    /// Edge labeling built from a distinguishing vertex labeling with the
    /// same label bound.
    pub fn vertex_to_edge(&self, f: &VertexLabeling) -> Result<EdgeLabeling> {
        if !self.is_distinguishing_vertex(f)? {
            return Err(Error::NotDistinguishing);
        }
        let k = f.k();
        let mut labels = Vec::with_capacity(self.n);
        for r in &self.decomposition.hanging {
            labels.extend(to_colabel(r, f)?.iter());
        }
        let input: Vec<Label> = self.decomposition.cycle.iter().map(|&v| f.get(v)).collect();
        let t = input.len();
        let cyc = if k == 1 {
            vec![1; t]
        } else if t >= 6 {
            asymmetric_two_labeling(t)
        } else if distinct_count(&input) >= 3 {
            asymmetric_three_labeling(t, true)
        } else {
            table_vertex_to_edge(&input)?
        };
        if !edge_stabilizer(&cyc).is_subset(&vertex_stabilizer(&input)) {
            return Err(Error::Internal("cycle transformation enlarged the stabilizer".into()));
        }
        labels.extend((0..t).map(|j| (self.decomposition.cycle_edge(j), cyc[j])));
        let out = EdgeLabeling::new(labels, k)?;
        if !self.is_distinguishing_edge(&out)? {
            return Err(Error::Internal("vertex-to-edge output is not distinguishing".into()));
        }
        Ok(out)
    }
}

/// Mixed-radix increment with digits in `0..radix(i)`, position 0
/// fastest. Returns false on wrap-around.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for (i, d) in digits.iter_mut().enumerate() {
        *d += 1;
        if *d < radix(i) {
            return true;
        }
        *d = 0;
    }
    false
}

fn distinct_count(s: &[Label]) -> usize {
    s.iter().collect::<BTreeSet<_>>().len()
}

/// Label 2 on positions 0, 1 and 3, label 1 elsewhere. The gaps 1, 2 and
/// `t - 3` are pairwise different for `t >= 6`, so only the identity
/// preserves it, under both the vertex and the edge action.
pub fn asymmetric_two_labeling(t: usize) -> Vec<Label> {
    assert!(t >= 6);
    (0..t).map(|i| if matches!(i, 0 | 1 | 3) { 2 } else { 1 }).collect()
}

fn all_sequences(t: usize, k: Label) -> impl Iterator<Item = Vec<Label>> {
    let total = (k as usize).pow(t as u32);
    (0..total).map(move |mut code| {
        // most significant first, so the iteration is lexicographic
        let mut s = vec![1; t];
        for i in (0..t).rev() {
            s[i] = (code % k as usize) as Label + 1;
            code /= k as usize;
        }
        s
    })
}

/// Lexicographically smallest 3-labeling of a short cycle with trivial
/// stabilizer under the edge action (`edges`) or the vertex action.
pub fn asymmetric_three_labeling(t: usize, edges: bool) -> Vec<Label> {
    all_sequences(t, 3)
        .find(|s| {
            let stab = if edges { edge_stabilizer(s) } else { vertex_stabilizer(s) };
            stab.len() == 1
        })
        .expect("short cycles have distinguishing 3-labelings")
}

/// Transformation tables for 2-labelings of `C_3`, `C_4`, `C_5`, keyed by
/// the lexicographically smallest member of each dihedral class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTransformTable {
    pub edge_to_vertex: BTreeMap<usize, BTreeMap<Vec<Label>, Vec<Label>>>,
    pub vertex_to_edge: BTreeMap<usize, BTreeMap<Vec<Label>, Vec<Label>>>,
}

fn class_rep(s: &[Label], edges: bool) -> (Vec<Label>, Dihedral) {
    Dihedral::all(s.len())
        .into_iter()
        .map(|d| (if edges { d.act_edges(s) } else { d.act_vertices(s) }, d))
        .min()
        .expect("non-empty group")
}

fn derive_direction(t: usize, from_edges: bool) -> Result<BTreeMap<Vec<Label>, Vec<Label>>> {
    let reps: BTreeSet<Vec<Label>> = all_sequences(t, 2).map(|s| class_rep(&s, from_edges).0).collect();
    let mut table = BTreeMap::new();
    for rep in reps {
        let allowed = if from_edges { edge_stabilizer(&rep) } else { vertex_stabilizer(&rep) };
        let out = all_sequences(t, 2)
            .find(|o| {
                let stab = if from_edges { vertex_stabilizer(o) } else { edge_stabilizer(o) };
                stab.is_subset(&allowed)
            })
            .ok_or_else(|| Error::Internal(format!("no transformation for {rep:?} on C_{t}")))?;
        table.insert(rep, out);
    }
    Ok(table)
}

/// Re-derives both transformation directions for `t = 3, 4, 5` by
/// exhaustive search with lexicographic tie-breaking.
pub fn derive_cycle_tables() -> Result<CycleTransformTable> {
    let mut e2v = BTreeMap::new();
    let mut v2e = BTreeMap::new();
    for t in 3..=5 {
        e2v.insert(t, derive_direction(t, true)?);
        v2e.insert(t, derive_direction(t, false)?);
    }
    Ok(CycleTransformTable {
        edge_to_vertex: e2v,
        vertex_to_edge: v2e,
    })
}

fn cycle_tables() -> &'static CycleTransformTable {
    static TABLES: std::sync::OnceLock<CycleTransformTable> = std::sync::OnceLock::new();
    TABLES.get_or_init(|| derive_cycle_tables().expect("tables exist for short cycles"))
}

/// Renames the (at most two) labels used to 1 and 2, smaller first.
fn normalize_two(s: &[Label]) -> Result<Vec<Label>> {
    let used: Vec<Label> = s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if used.len() > 2 {
        return Err(Error::Internal("table lookup needs at most two labels".into()));
    }
    Ok(s.iter().map(|&l| if l == used[0] { 1 } else { 2 }).collect())
}

fn table_lookup(input: &[Label], from_edges: bool) -> Result<Vec<Label>> {
    let t = input.len();
    let norm = normalize_two(input)?;
    let (rep, sigma) = class_rep(&norm, from_edges);
    let tables = cycle_tables();
    let table = if from_edges { &tables.edge_to_vertex } else { &tables.vertex_to_edge };
    let out = table
        .get(&t)
        .and_then(|m| m.get(&rep))
        .ok_or_else(|| Error::Internal(format!("no table entry for C_{t}")))?;
    // rep = σ·norm, so σ⁻¹ carries the entry back onto the input's frame
    let back = sigma.inverse();
    Ok(if from_edges { back.act_vertices(out) } else { back.act_edges(out) })
}

/// Cycle vertex labeling for a short cycle edge 2-labeling, via the table.
pub fn table_edge_to_vertex(input: &[Label]) -> Result<Vec<Label>> {
    table_lookup(input, true)
}

/// Cycle edge labeling for a short cycle vertex 2-labeling, via the table.
pub fn table_vertex_to_edge(input: &[Label]) -> Result<Vec<Label>> {
    table_lookup(input, false)
}

pub fn unicyclic_d(g: &Graph) -> Result<usize> {
    UnicyclicAnalysis::new(g)?.d()
}

pub fn unicyclic_dprime(g: &Graph) -> Result<usize> {
    UnicyclicAnalysis::new(g)?.dprime()
}

pub fn edge_to_vertex(g: &Graph, f: &EdgeLabeling) -> Result<VertexLabeling> {
    f.check_domain(g)?;
    UnicyclicAnalysis::new(g)?.edge_to_vertex(f)
}

pub fn vertex_to_edge(g: &Graph, f: &VertexLabeling) -> Result<EdgeLabeling> {
    f.check_domain(g)?;
    UnicyclicAnalysis::new(g)?.vertex_to_edge(f)
}

#[derive(Debug, Clone)]
pub struct UnicyclicClassification {
    pub d: usize,
    pub dprime: usize,
    pub cycle_length: usize,
    pub witness_vertex: VertexLabeling,
    pub witness_edge: EdgeLabeling,
}

pub fn classify_unicyclic(g: &Graph) -> Result<UnicyclicClassification> {
    let a = UnicyclicAnalysis::new(g)?;
    Ok(UnicyclicClassification {
        d: a.d()?,
        dprime: a.dprime()?,
        cycle_length: a.decomposition.len(),
        witness_vertex: a.witness_vertex()?,
        witness_edge: a.witness_edge()?,
    })
}
