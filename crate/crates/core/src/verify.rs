//! Exhaustive verification sweeps over every tree or unicyclic graph up to
//! a given order.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use crate::enumerate::{all_trees, all_unicyclic};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::OracleConfig;
use crate::parallel::par_map;
use crate::report::{classify, cross_check, Family, Report};

/// The statement checked on every instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// Trees: `D' = D + 1` exactly for members of the extremal family,
    /// `D' = D` otherwise.
    Trees,
    /// Unicyclic graphs: `D' = D`.
    Unicyclic,
    /// Trees and unicyclic graphs: `D' <= D + 1`.
    Bound,
}

impl Claim {
    fn families(self) -> &'static [Family] {
        match self {
            Claim::Trees => &[Family::Tree],
            Claim::Unicyclic => &[Family::Unicyclic],
            Claim::Bound => &[Family::Tree, Family::Unicyclic],
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub claim: Claim,
    pub max_n: usize,
    /// Instances up to this order are also recomputed by brute force.
    pub oracle_max_n: Option<usize>,
    pub jobs: usize,
    pub oracle: OracleConfig,
}

impl VerifyConfig {
    pub fn new(claim: Claim, max_n: usize) -> Self {
        VerifyConfig {
            claim,
            max_n,
            oracle_max_n: None,
            jobs: 1,
            oracle: OracleConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub family: Family,
    pub graph: Graph,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {:?}, n = {}: {}", self.family, self.graph.n(), self.reason)?;
        write!(f, "{}", self.graph.to_edge_list())
    }
}

#[derive(Debug, Clone, Default)]
pub struct OrderStats {
    pub instances: usize,
    pub oracle_checked: usize,
}

#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub per_order: BTreeMap<(Family, usize), OrderStats>,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl VerifySummary {
    pub fn instances(&self) -> usize {
        self.per_order.values().map(|s| s.instances).sum()
    }

    pub fn oracle_checked(&self) -> usize {
        self.per_order.values().map(|s| s.oracle_checked).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((family, n), s) in &self.per_order {
            writeln!(
                f,
                "{family:?} n={n}: {} instances, {} oracle-checked",
                s.instances, s.oracle_checked
            )?;
        }
        write!(
            f,
            "total: {} instances, {} oracle-checked, {} violations, {:.2?}",
            self.instances(),
            self.oracle_checked(),
            self.violations.len(),
            self.elapsed
        )
    }
}

/// Checks one instance. `Ok(Some(reason))` is a violation; errors other than
/// oracle disagreement abort the sweep.
pub fn check_instance(g: &Graph, claim: Claim, oracle: Option<&OracleConfig>) -> Result<Option<String>> {
    let mut r = classify(g, oracle.is_some())?;
    if let Some(reason) = claim_violation(&r, claim) {
        return Ok(Some(reason));
    }
    if let Some(cfg) = oracle {
        match cross_check(g, &mut r, cfg) {
            Ok(()) => {}
            Err(Error::OracleDisagreement(msg)) => return Ok(Some(msg)),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

fn claim_violation(r: &Report, claim: Claim) -> Option<String> {
    if r.dprime > r.d + 1 {
        return Some(format!("D' = {} exceeds D + 1 = {}", r.dprime, r.d + 1));
    }
    match (claim, r.family) {
        (Claim::Trees, Family::Tree) => {
            let member = r.in_family_t == Some(true);
            let expected = if member { r.d + 1 } else { r.d };
            (r.dprime != expected).then(|| {
                format!(
                    "D = {}, D' = {}, but family membership is {member}",
                    r.d, r.dprime
                )
            })
        }
        (Claim::Unicyclic, Family::Unicyclic) => {
            (r.dprime != r.d).then(|| format!("D = {} differs from D' = {}", r.d, r.dprime))
        }
        _ => None,
    }
}

pub fn verify(cfg: &VerifyConfig) -> Result<VerifySummary> {
    if cfg.max_n < 3 {
        return Err(Error::OrderTooSmall { required: 3, actual: cfg.max_n });
    }
    let start = Instant::now();
    let mut per_order = BTreeMap::new();
    let mut violations = Vec::new();
    for &family in cfg.claim.families() {
        for n in 3..=cfg.max_n {
            let graphs = match family {
                Family::Tree => all_trees(n)?,
                Family::Unicyclic => all_unicyclic(n)?,
            };
            let oracle = cfg.oracle_max_n.is_some_and(|m| n <= m).then_some(&cfg.oracle);
            let stats = OrderStats {
                instances: graphs.len(),
                oracle_checked: if oracle.is_some() { graphs.len() } else { 0 },
            };
            for (graph, outcome) in par_map(graphs, cfg.jobs, |g| check_instance(g, cfg.claim, oracle)) {
                if let Some(reason) = outcome? {
                    violations.push(Violation { family, graph, reason });
                }
            }
            per_order.insert((family, n), stats);
        }
    }
    Ok(VerifySummary {
        per_order,
        violations,
        elapsed: start.elapsed(),
    })
}
