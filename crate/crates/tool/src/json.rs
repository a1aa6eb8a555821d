//! JSON shapes for ideals, Hasse diagrams and verification reports.

use std::sync::Arc;

use kunz_core::{
    AbstractPoset, CheckReport, Error, IdealPoset, KunzVector, NormalizedIdeal, NumericalSemigroup,
};
use serde::{Deserialize, Serialize};

use crate::ToolResult;

/// Which order a Hasse diagram is drawn for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Order {
    /// `I ⪯ J` iff `I + K = J` for some ideal `K`.
    #[default]
    Preceq,
    /// Set inclusion.
    Subseteq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ambient: Vec<u64>,
    pub kunz: Vec<u32>,
}

impl From<&NormalizedIdeal> for IdealJson {
    fn from(ideal: &NormalizedIdeal) -> Self {
        IdealJson {
            ambient: ideal.ambient().minimal_generators().to_vec(),
            kunz: ideal.kunz().entries().to_vec(),
        }
    }
}

impl IdealJson {
    pub fn to_ideal(&self) -> ToolResult<NormalizedIdeal> {
        let ambient = NumericalSemigroup::from_generators(&self.ambient)?;
        let kunz = KunzVector::new(self.kunz.clone());
        Ok(NormalizedIdeal::from_kunz(Arc::new(ambient), kunz)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    #[serde(default)]
    pub kunz: Vec<u32>,
    #[serde(default)]
    pub idempotent: bool,
    #[serde(default)]
    pub depth: u32,
}

/// Hasse diagram export. Only `nodes[].id` and `covers` are needed to read
/// one back as an [`AbstractPoset`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    #[serde(default)]
    pub ambient: Vec<u64>,
    pub nodes: Vec<NodeJson>,
    pub covers: Vec<[usize; 2]>,
}

/// Cover edges `(lo, hi)` of the chosen order.
pub fn hasse_edges(poset: &IdealPoset, order: Order) -> Vec<(usize, usize)> {
    match order {
        Order::Preceq => poset.covers(),
        Order::Subseteq => poset.subseteq_covers(),
    }
}

/// Longest chain from each node up to the top. Edges go from lower to
/// higher index, so one backward pass suffices.
pub fn depths(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut depth = vec![0u32; n];
    let mut sorted = edges.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    for (lo, hi) in sorted {
        depth[lo] = depth[lo].max(depth[hi] + 1);
    }
    depth
}

impl PosetJson {
    pub fn from_poset(poset: &IdealPoset, order: Order) -> Self {
        let edges = hasse_edges(poset, order);
        let depth = depths(poset.len(), &edges);
        PosetJson {
            ambient: poset.ambient().minimal_generators().to_vec(),
            nodes: poset
                .ideals()
                .iter()
                .enumerate()
                .map(|(id, ideal)| NodeJson {
                    id,
                    kunz: ideal.kunz().entries().to_vec(),
                    idempotent: poset.is_idempotent(id),
                    depth: depth[id],
                })
                .collect(),
            covers: edges.into_iter().map(|(lo, hi)| [lo, hi]).collect(),
        }
    }

    /// Drops every label. Node ids must be exactly `0..n` in some order.
    pub fn to_abstract(&self) -> ToolResult<AbstractPoset> {
        let n = self.nodes.len();
        let mut seen = vec![false; n];
        for node in &self.nodes {
            match seen.get_mut(node.id) {
                Some(slot) if !*slot => *slot = true,
                _ => {
                    return Err(Error::InvalidPoset(format!(
                        "node ids must be 0..{n} without repeats, found {}",
                        node.id
                    ))
                    .into())
                }
            }
        }
        let edges = self.covers.iter().map(|&[lo, hi]| (lo, hi)).collect();
        Ok(AbstractPoset::new(n, edges)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub semigroup: Vec<u64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub check: String,
    pub max_genus: u64,
    pub instances: usize,
    pub failures: Vec<FailureJson>,
}

impl From<&CheckReport> for ReportJson {
    fn from(r: &CheckReport) -> Self {
        ReportJson {
            check: r.check.name().to_string(),
            max_genus: r.max_genus,
            instances: r.instances,
            failures: r
                .failures
                .iter()
                .map(|f| FailureJson {
                    semigroup: f.semigroup.minimal_generators().to_vec(),
                    detail: f.detail.clone(),
                })
                .collect(),
        }
    }
}
