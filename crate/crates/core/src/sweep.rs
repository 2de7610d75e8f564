//! Batch check that every Cambrian interval is trim, over many systems and
//! Coxeter elements.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coxeter::{Bond, CoxeterSystem, Element};
use crate::error::Error;
use crate::formats::SystemFile;
use crate::lattice::FiniteLattice;
use crate::report::PropertyReport;
use crate::sortable::{cambrian_interval_with, is_sortable, CoxeterElement, IntervalOptions};
use crate::systems;
use crate::weak::upper_covers;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    #[serde(default)]
    pub systems: Vec<SweepSystem>,
    /// Reduced words of the Coxeter elements to use; every generator order when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gammas: Option<Vec<String>>,
    pub max_len: usize,
    pub max_elems: usize,
    /// Check every `[u, v]` below each top, not only `[ε, v]`.
    #[serde(default = "default_true")]
    pub sub_intervals: bool,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepSystem {
    #[serde(flatten)]
    pub source: SystemSource,
    /// Overrides the global length cap for this entry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SystemSource {
    Preset { preset: String },
    /// Every system of the family with bond labels drawn from `labels` (`0` is ∞).
    Family { family: Family, labels: Vec<u32> },
    Matrix(SystemFile),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Dihedral,
    /// Rank 3, one system per multiset of three labels.
    Rank3,
}

fn bond_name(m: u32) -> String {
    Bond::from_encoded(m).to_string()
}

impl SweepSystem {
    /// Named systems this entry stands for.
    pub fn expand(&self) -> Result<Vec<(String, CoxeterSystem)>, Error> {
        match &self.source {
            SystemSource::Preset { preset } => {
                let sys = systems::preset(preset).ok_or_else(|| Error::Input(format!("unknown preset {preset}")))?;
                Ok(vec![(preset.clone(), sys)])
            }
            SystemSource::Family { family: Family::Dihedral, labels } => Ok(labels
                .iter()
                .map(|&m| (format!("I2({})", bond_name(m)), systems::dihedral(Bond::from_encoded(m))))
                .collect()),
            SystemSource::Family { family: Family::Rank3, labels } => {
                let mut labels = labels.clone();
                labels.sort_by_key(|&m| if m == 0 { u32::MAX } else { m });
                labels.dedup();
                let mut out = Vec::new();
                for (i, &a) in labels.iter().enumerate() {
                    for (j, &b) in labels.iter().enumerate().skip(i) {
                        for &c in &labels[j..] {
                            let name = format!("rank3({},{},{})", bond_name(a), bond_name(b), bond_name(c));
                            out.push((name, systems::rank3(a, b, c)?));
                        }
                    }
                }
                Ok(out)
            }
            SystemSource::Matrix(file) => {
                let name = format!("matrix{:?}", file.m);
                Ok(vec![(name, file.build()?)])
            }
        }
    }
}

/// An interval family abandoned because its weak-order ideal was too large.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkipRecord {
    pub system: String,
    pub gamma: String,
    pub top: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    /// One report per system and Coxeter element, in configuration order.
    pub reports: Vec<PropertyReport>,
    pub skipped: Vec<SkipRecord>,
}

impl SweepReport {
    pub fn intervals_checked(&self) -> u64 {
        self.reports.iter().filter_map(|r| r.instance.get("intervals").and_then(Value::as_u64)).sum()
    }

    /// Reports with a failed verdict.
    pub fn contradictions(&self) -> Vec<&PropertyReport> {
        self.reports.iter().filter(|r| !r.all_hold()).collect()
    }
}

/// Sortable elements of length at most `max_len`, by length then word.
///
/// Every prefix of a sorting word of a sortable element is sortable, so
/// each length level is obtained by extending the previous one by a letter.
pub fn sortables_up_to(sys: &CoxeterSystem, gamma: &CoxeterElement, max_len: usize) -> Result<Vec<Element>, Error> {
    let mut all = vec![sys.identity()];
    let mut level = vec![sys.identity()];
    for _ in 0..max_len {
        let mut next = HashSet::new();
        for x in &level {
            for y in upper_covers(x)? {
                if !next.contains(&y) && is_sortable(&y, gamma)? {
                    next.insert(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next.into_iter().collect();
        level.sort();
        all.extend(level.iter().cloned());
    }
    Ok(all)
}

/// `None` when the lattice is trim and, if graded, distributive.
pub fn theorem_failure(lattice: &FiniteLattice) -> Option<Value> {
    let names = |c: &[usize]| c.iter().map(|&i| lattice.label(i).to_string()).collect::<Vec<_>>();
    if !lattice.is_extremal() {
        return Some(json!({
            "not_extremal": {
                "length": lattice.length(),
                "join_irreducibles": names(&lattice.join_irreducibles()),
                "meet_irreducibles": names(&lattice.meet_irreducibles()),
            }
        }));
    }
    if lattice.find_left_modular_chain().is_none() {
        return Some(json!({ "no_left_modular_chain": names(&lattice.left_modular_elements()) }));
    }
    if lattice.is_graded() {
        if let Some((x, y, z)) = lattice.distributivity_violation() {
            return Some(json!({ "graded_not_distributive": names(&[x, y, z]) }));
        }
    }
    None
}

struct Unit {
    intervals: u64,
    failure: Option<Value>,
    skip: Option<String>,
}

fn check_top(
    top: &Element,
    gamma: &CoxeterElement,
    sortable: &HashSet<Element>,
    config: &SweepConfig,
) -> Result<Unit, Error> {
    let lookup = |x: &Element| -> Result<bool, Error> { Ok(sortable.contains(x)) };
    let options = IntervalOptions { max_elems: Some(config.max_elems), sortable: Some(&lookup) };
    let interval = match cambrian_interval_with(&top.system().identity(), top, gamma, &options) {
        Ok(i) => i,
        Err(e @ Error::ResourceLimit { .. }) => return Ok(Unit { intervals: 0, failure: None, skip: Some(e.to_string()) }),
        Err(e) => return Err(e),
    };
    let lattice = interval.lattice();
    let bottoms: Vec<usize> = if config.sub_intervals { (0..lattice.size()).collect() } else { vec![lattice.bottom()] };
    let mut intervals = 0;
    for u in bottoms {
        intervals += 1;
        let sub = if u == lattice.bottom() { lattice.clone() } else { lattice.sublattice_interval(u, lattice.top())? };
        if let Some(why) = theorem_failure(&sub) {
            let failure = json!({ "bottom": lattice.label(u), "top": lattice.label(lattice.top()), "reason": why });
            return Ok(Unit { intervals, failure: Some(failure), skip: None });
        }
    }
    Ok(Unit { intervals, failure: None, skip: None })
}

/// Runs the configured sweep.
///
/// Parallel across tops; reports and skip records come out in
/// configuration order regardless of scheduling.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport, Error> {
    let mut out = SweepReport::default();
    for entry in &config.systems {
        let max_len = entry.max_len.unwrap_or(config.max_len);
        for (name, sys) in entry.expand()? {
            let gammas = match &config.gammas {
                Some(words) => words.iter().map(|w| CoxeterElement::parse(&sys, w)).collect::<Result<Vec<_>, _>>()?,
                None => CoxeterElement::all(sys.rank()),
            };
            for gamma in gammas {
                let sortables = sortables_up_to(&sys, &gamma, max_len)?;
                let lookup: HashSet<Element> = sortables.iter().cloned().collect();
                let units: Vec<Unit> = sortables
                    .par_iter()
                    .map(|top| check_top(top, &gamma, &lookup, config))
                    .collect::<Result<_, _>>()?;

                let gamma_label = gamma.label(&sys);
                let mut report = PropertyReport::default();
                report.describe("system", json!(name));
                report.describe("gamma", json!(gamma_label));
                report.describe("max_len", json!(max_len));
                report.describe("sortables", json!(sortables.len()));
                report.describe("intervals", json!(units.iter().map(|u| u.intervals).sum::<u64>()));
                let failure = units.iter().find_map(|u| u.failure.clone());
                report.record("theorem_holds", failure.is_none(), failure);
                let mut skipped = 0;
                for (top, unit) in sortables.iter().zip(&units) {
                    if let Some(reason) = &unit.skip {
                        skipped += 1;
                        out.skipped.push(SkipRecord {
                            system: name.clone(),
                            gamma: gamma_label.clone(),
                            top: top.label(),
                            reason: reason.clone(),
                        });
                    }
                }
                report.describe("skipped", json!(skipped));
                out.reports.push(report);
            }
        }
    }
    Ok(out)
}
