//! JSON file formats and report schemas.

use serde::{Deserialize, Serialize};

use crate::bicrossed::BicrossedGroup;
use crate::cyclic::{BranchCounts, CyclicPair, TheoremReport};
use crate::error::{Error, Result};
use crate::factorization::{ExactFactorization, Recovered};
use crate::group::{FiniteGroup, OrderProfile};
use crate::iso::IsoClass;
use crate::matched_pair::{LeftAction, MatchedPair, RightAction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationInfo {
    pub h_order: usize,
    pub g_order: usize,
    pub encoding: String,
}

/// `{"order": N, "table": [[...]], "labels": [...]?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationInfo>,
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile {
            order: g.order(),
            table: g.rows(),
            labels: g.labels().map(<[String]>::to_vec),
            factorization: None,
        }
    }

    pub fn from_bicrossed(p: &BicrossedGroup) -> Self {
        GroupFile {
            factorization: Some(FactorizationInfo {
                h_order: p.h_order(),
                g_order: p.g_order(),
                encoding: "row-major".into(),
            }),
            ..Self::from_group(p.group())
        }
    }

    /// Validates the table, moving the identity to index 0 if needed.
    /// Returns the group and `perm[old index] = new index`.
    pub fn load(&self) -> Result<(FiniteGroup, Vec<usize>)> {
        if self.order != self.table.len() {
            return Err(Error::ShapeMismatch(format!(
                "order is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        let (group, perm) = FiniteGroup::from_rows_reindexed(&self.table)?;
        let group = match &self.labels {
            Some(labels) => {
                if labels.len() != self.order {
                    return Err(Error::ShapeMismatch("label count differs from order".into()));
                }
                let mut moved = labels.clone();
                for (old, label) in labels.iter().enumerate() {
                    moved[perm[old]] = label.clone();
                }
                group.with_labels(moved)?
            }
            None => group,
        };
        Ok((group, perm))
    }
}

pub fn read_group(json: &str) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(json)?;
    Ok(file.load()?.0)
}

/// `{"H": <group>, "G": <group>, "alpha": [[...]], "beta": [[...]]}`, both
/// tables indexed `[g][h]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedPairFile {
    #[serde(rename = "H")]
    pub h: GroupFile,
    #[serde(rename = "G")]
    pub g: GroupFile,
    pub alpha: Vec<Vec<usize>>,
    pub beta: Vec<Vec<usize>>,
}

impl MatchedPairFile {
    pub fn from_pair(mp: &MatchedPair) -> Self {
        MatchedPairFile {
            h: GroupFile::from_group(mp.h()),
            g: GroupFile::from_group(mp.g()),
            alpha: mp.alpha().rows(),
            beta: mp.beta().rows(),
        }
    }

    /// Loads both groups, translates the action tables through any
    /// re-indexing, and validates the matched pair.
    pub fn load(&self) -> Result<MatchedPair> {
        let (h, ph) = self.h.load()?;
        let (g, pg) = self.g.load()?;
        let (nh, ng) = (h.order(), g.order());
        let shape_ok = |t: &Vec<Vec<usize>>| t.len() == ng && t.iter().all(|r| r.len() == nh);
        if !shape_ok(&self.alpha) || !shape_ok(&self.beta) {
            return Err(Error::ShapeMismatch(format!("action tables must be {ng}×{nh}")));
        }
        let mut alpha = vec![vec![0; nh]; ng];
        let mut beta = vec![vec![0; nh]; ng];
        for x in 0..ng {
            for y in 0..nh {
                let (a, b) = (self.alpha[x][y], self.beta[x][y]);
                if a >= nh {
                    return Err(Error::IndexOutOfRange { index: a, size: nh });
                }
                if b >= ng {
                    return Err(Error::IndexOutOfRange { index: b, size: ng });
                }
                alpha[pg[x]][ph[y]] = ph[a];
                beta[pg[x]][ph[y]] = pg[b];
            }
        }
        let alpha = LeftAction::new(&g, &h, &alpha)?;
        let beta = RightAction::new(&g, &h, &beta)?;
        MatchedPair::new(h, g, alpha, beta)
    }
}

pub fn read_matched_pair(json: &str) -> Result<MatchedPair> {
    let file: MatchedPairFile = serde_json::from_str(json)?;
    file.load()
}

/// One entry of the `factorize` output.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationEntry {
    pub h: Vec<usize>,
    pub g: Vec<usize>,
    pub alpha: Vec<Vec<usize>>,
    pub beta: Vec<Vec<usize>>,
}

impl FactorizationEntry {
    pub fn new(f: &ExactFactorization, r: &Recovered) -> Self {
        FactorizationEntry {
            h: f.h.elements().to_vec(),
            g: f.g.elements().to_vec(),
            alpha: r.pair.alpha().rows(),
            beta: r.pair.beta().rows(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumeratedPair {
    pub theta: Vec<usize>,
    pub phi: Vec<usize>,
    pub alpha: Vec<Vec<usize>>,
    pub beta: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub m: usize,
    pub seeds: usize,
    pub count: usize,
    pub pairs: Vec<EnumeratedPair>,
}

impl EnumerationReport {
    pub fn new(n: usize, m: usize, seeds: usize, pairs: &[CyclicPair]) -> Self {
        EnumerationReport {
            n,
            m,
            seeds,
            count: pairs.len(),
            pairs: pairs
                .iter()
                .map(|cp| EnumeratedPair {
                    theta: cp.seed.theta.clone(),
                    phi: cp.seed.phi.clone(),
                    alpha: cp.pair.alpha().rows(),
                    beta: cp.pair.beta().rows(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub m: usize,
    pub pairs: usize,
    pub classes: Vec<IsoClass>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremPairJson {
    pub theta: Vec<usize>,
    pub phi: Vec<usize>,
    pub group_order_profile: OrderProfile,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremMatchJson {
    pub pair: usize,
    pub semidirect_r: usize,
    pub orientation: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub pair: usize,
    pub orientation: &'static str,
    pub t: usize,
    pub c: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    pub a_tilde: usize,
    pub central_subgroup: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReportJson {
    pub p: usize,
    pub m: usize,
    pub pairs: Vec<TheoremPairJson>,
    pub matches: Vec<TheoremMatchJson>,
    pub witness_branches: BranchCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessJson>>,
    pub all_matched: bool,
}

impl TheoremReportJson {
    /// `trace` adds the per-pair witness data.
    pub fn new(report: &TheoremReport, trace: bool) -> Self {
        let pairs = report
            .pairs
            .iter()
            .map(|p| TheoremPairJson {
                theta: p.seed.theta.clone(),
                phi: p.seed.phi.clone(),
                group_order_profile: p.product.group().order_profile(),
            })
            .collect();
        let matches = report
            .pairs
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                p.matched.as_ref().map(|mt| {
                    let s = &report.semidirects[mt.semidirect];
                    TheoremMatchJson {
                        pair: i,
                        semidirect_r: s.r,
                        orientation: s.orientation.name(),
                    }
                })
            })
            .collect();
        let witnesses = trace.then(|| {
            report
                .pairs
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let w = &p.witness;
                    WitnessJson {
                        pair: i,
                        orientation: w.orientation.name(),
                        t: w.t,
                        c: w.c,
                        u: w.u,
                        a_tilde: w.a_tilde,
                        central_subgroup: w.central_h.clone(),
                    }
                })
                .collect()
        });
        TheoremReportJson {
            p: report.p,
            m: report.m,
            pairs,
            matches,
            witness_branches: report.branch_counts(),
            witnesses,
            all_matched: report.all_matched,
        }
    }
}
