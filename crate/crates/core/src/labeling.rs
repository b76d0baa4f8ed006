//! Vertex and edge labelings with labels drawn from `1..=k`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

pub type Label = u32;

/// Total map from vertices `0..n` to labels in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    labels: Vec<Label>,
    k: Label,
}

impl VertexLabeling {
    pub fn new(labels: Vec<Label>, k: Label) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l == 0 || l > k) {
            return Err(Error::InvalidLabeling(format!("label {bad} not in 1..={k}")));
        }
        Ok(VertexLabeling { labels, k })
    }

    /// Uses the largest label as the bound.
    pub fn from_labels(labels: Vec<Label>) -> Result<Self> {
        let k = labels.iter().copied().max().unwrap_or(1).max(1);
        Self::new(labels, k)
    }

    pub fn constant(n: usize, label: Label) -> Self {
        VertexLabeling {
            labels: vec![label; n],
            k: label.max(1),
        }
    }

    #[inline]
    pub fn get(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn k(&self) -> Label {
        self.k
    }

    /// Number of distinct labels actually used.
    pub fn used(&self) -> usize {
        self.labels.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.n() {
            return Err(Error::DomainMismatch(format!(
                "vertex labeling has {} entries, graph has {} vertices",
                self.labels.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Map from unordered edges to labels in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: BTreeMap<Edge, Label>,
    k: Label,
}

impl EdgeLabeling {
    pub fn new(labels: impl IntoIterator<Item = (Edge, Label)>, k: Label) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((u, v), l) in labels {
            if l == 0 || l > k {
                return Err(Error::InvalidLabeling(format!("label {l} not in 1..={k}")));
            }
            if map.insert(edge(u, v), l).is_some() {
                return Err(Error::InvalidLabeling(format!("edge {{{u}, {v}}} labeled twice")));
            }
        }
        Ok(EdgeLabeling { labels: map, k })
    }

    /// Labels given in the order of [`Graph::edges`].
    pub fn for_graph(g: &Graph, labels: &[Label], k: Label) -> Result<Self> {
        if labels.len() != g.m() {
            return Err(Error::DomainMismatch(format!(
                "{} labels for {} edges",
                labels.len(),
                g.m()
            )));
        }
        Self::new(g.edges().iter().copied().zip(labels.iter().copied()), k)
    }

    pub fn constant(g: &Graph, label: Label) -> Self {
        EdgeLabeling {
            labels: g.edges().iter().map(|&e| (e, label)).collect(),
            k: label.max(1),
        }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<Label> {
        self.labels.get(&edge(u, v)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Label)> + '_ {
        self.labels.iter().map(|(&e, &l)| (e, l))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn k(&self) -> Label {
        self.k
    }

    pub fn used(&self) -> usize {
        self.labels.values().collect::<BTreeSet<_>>().len()
    }

    /// Labels in the order of [`Graph::edges`]; fails unless the domain is exactly `E(g)`.
    pub fn to_graph_order(&self, g: &Graph) -> Result<Vec<Label>> {
        self.check_domain(g)?;
        Ok(g.edges().iter().map(|e| self.labels[e]).collect())
    }

    pub fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.m() || g.edges().iter().any(|e| !self.labels.contains_key(e)) {
            return Err(Error::DomainMismatch(
                "edge labeling domain differs from the edge set".into(),
            ));
        }
        Ok(())
    }
}
