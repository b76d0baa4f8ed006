//! Classification reports: the serialized summary of one graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{is_tree, is_unicyclic, Graph};
use crate::labeling::{EdgeLabeling, Label, VertexLabeling};
use crate::oracle::{self, OracleConfig};
use crate::tree_dist::classify_tree;
use crate::unicyclic::classify_unicyclic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Tree,
    Unicyclic,
}

impl Family {
    /// Smallest order for which the family is handled.
    pub fn min_order(self) -> usize {
        3
    }

    pub fn detect(g: &Graph) -> Result<Family> {
        if is_tree(g) {
            Ok(Family::Tree)
        } else if is_unicyclic(g) {
            Ok(Family::Unicyclic)
        } else {
            Err(Error::Unsupported)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CenterKind {
    Unicentric,
    Bicentric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub family: Family,
    #[serde(rename = "D")]
    pub d: usize,
    #[serde(rename = "Dprime")]
    pub dprime: usize,
    #[serde(rename = "in_family_T", default, skip_serializing_if = "Option::is_none")]
    pub in_family_t: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<CenterKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_vertex: Option<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_edge: Option<Vec<(usize, usize, Label)>>,
    pub checked_against_oracle: bool,
}

impl Report {
    pub fn vertex_witness(&self) -> Option<Result<VertexLabeling>> {
        let w = self.witness_vertex.as_ref()?;
        let k = w.iter().copied().max().unwrap_or(1).max(1);
        Some(VertexLabeling::new(w.clone(), k))
    }

    pub fn edge_witness(&self) -> Option<Result<EdgeLabeling>> {
        let w = self.witness_edge.as_ref()?;
        let k = w.iter().map(|e| e.2).max().unwrap_or(1).max(1);
        Some(EdgeLabeling::new(w.iter().map(|&(u, v, l)| ((u, v), l)), k))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Classifies a tree or connected unicyclic graph of order at least 3.
/// Witnesses are attached when `witness` is set.
pub fn classify(g: &Graph, witness: bool) -> Result<Report> {
    let family = Family::detect(g)?;
    if g.n() < family.min_order() {
        return Err(Error::OrderTooSmall {
            required: family.min_order(),
            actual: g.n(),
        });
    }
    let edges = |e: &EdgeLabeling| e.iter().map(|((u, v), l)| (u, v, l)).collect::<Vec<_>>();
    let report = match family {
        Family::Tree => {
            let c = classify_tree(g)?;
            Report {
                n: g.n(),
                m: g.m(),
                family,
                d: c.d,
                dprime: c.dprime,
                in_family_t: Some(c.in_family_t()),
                center: Some(if c.center.is_bicentric() {
                    CenterKind::Bicentric
                } else {
                    CenterKind::Unicentric
                }),
                witness_vertex: witness.then(|| c.witness_vertex.labels().to_vec()),
                witness_edge: witness.then(|| edges(&c.witness_edge)),
                checked_against_oracle: false,
            }
        }
        Family::Unicyclic => {
            let c = classify_unicyclic(g)?;
            Report {
                n: g.n(),
                m: g.m(),
                family,
                d: c.d,
                dprime: c.dprime,
                in_family_t: None,
                center: None,
                witness_vertex: witness.then(|| c.witness_vertex.labels().to_vec()),
                witness_edge: witness.then(|| edges(&c.witness_edge)),
                checked_against_oracle: false,
            }
        }
    };
    Ok(report)
}

/// Recomputes `D` and `D'` by brute force and re-checks any witnesses.
/// On success the report is marked as checked.
pub fn cross_check(g: &Graph, report: &mut Report, cfg: &OracleConfig) -> Result<()> {
    let d = oracle::brute_d_with(g, cfg)?;
    let dprime = oracle::brute_dprime_with(g, cfg)?;
    if (d, dprime) != (report.d, report.dprime) {
        return Err(Error::OracleDisagreement(format!(
            "fast (D, D') = ({}, {}), oracle ({d}, {dprime})",
            report.d, report.dprime
        )));
    }
    if let Some(w) = report.vertex_witness() {
        let w = w?;
        if w.used() > d || !oracle::is_distinguishing(g, &w)? {
            return Err(Error::OracleDisagreement("vertex witness rejected".into()));
        }
    }
    if let Some(w) = report.edge_witness() {
        let w = w?;
        w.check_domain(g)?;
        if w.used() > dprime || !oracle::is_distinguishing(g, &w)? {
            return Err(Error::OracleDisagreement("edge witness rejected".into()));
        }
    }
    report.checked_against_oracle = true;
    Ok(())
}
