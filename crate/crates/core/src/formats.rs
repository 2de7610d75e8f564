//! JSON file formats shared by the command line and the fixtures.

use serde::{Deserialize, Serialize};

use crate::coxeter::{Arithmetic, CoxeterMatrix, CoxeterSystem};
use crate::error::Error;
use crate::lattice::{FiniteLattice, LatticeError};
use crate::report::PropertyReport;
use crate::sortable::CambrianInterval;
use crate::systems;

/// `{"rank": n, "names": [...], "m": [[...]]}` with `0` for `∞` and `1` on the diagonal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemFile {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
    pub m: Vec<Vec<u32>>,
}

impl SystemFile {
    pub fn build(&self) -> Result<CoxeterSystem, Error> {
        let matrix = CoxeterMatrix::from_encoded(&self.m)?;
        if matrix.rank() != self.rank {
            return Err(Error::Input(format!("rank {} with a {}×{} matrix", self.rank, matrix.rank(), matrix.rank())));
        }
        let names = if self.names.is_empty() {
            (0..self.rank).map(|i| format!("s{i}")).collect()
        } else {
            self.names.clone()
        };
        Ok(CoxeterSystem::with_arithmetic(matrix, names, Arithmetic::Auto)?)
    }

    pub fn from_system(sys: &CoxeterSystem) -> Self {
        SystemFile { rank: sys.rank(), names: sys.names().to_vec(), m: sys.matrix().encoded_rows() }
    }
}

/// A preset name such as `affine-c3` or `i2:5`, or a path to a [`SystemFile`].
pub fn load_system(source: &str) -> Result<CoxeterSystem, String> {
    if let Some(sys) = systems::preset(source) {
        return Ok(sys);
    }
    let text = std::fs::read_to_string(source).map_err(|e| format!("{source}: not a preset and unreadable ({e})"))?;
    let file: SystemFile = serde_json::from_str(&text).map_err(|e| format!("{source}: {e}"))?;
    file.build().map_err(|e| format!("{source}: {e}"))
}

/// `{"labels": [...], "covers": [[i, j], ...]}`; other keys are ignored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub labels: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

impl LatticeFile {
    pub fn build(&self) -> Result<FiniteLattice, LatticeError> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        FiniteLattice::from_covers(self.labels.clone(), &covers)
    }

    pub fn from_lattice(l: &FiniteLattice) -> Self {
        LatticeFile { labels: l.labels().to_vec(), covers: l.covers().into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

/// A Cambrian interval as written by `cambrian interval --json`.
///
/// Carries `labels` and `covers`, so it reads back as a [`LatticeFile`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalFile {
    pub system: SystemFile,
    pub gamma: String,
    pub bottom: String,
    pub top: String,
    /// Canonical (ShortLex) words, index-aligned with `labels`.
    pub elements: Vec<String>,
    /// Sorting words.
    pub labels: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    pub sorting_chain: Vec<usize>,
    /// Lattice properties, exactly as `analyze` reports them.
    pub report: PropertyReport,
    /// Statements expected to hold for every Cambrian interval.
    pub checks: PropertyReport,
}

impl IntervalFile {
    pub fn new(interval: &CambrianInterval, report: PropertyReport, checks: PropertyReport) -> Result<Self, Error> {
        let sys = interval.system();
        let lattice = interval.lattice();
        Ok(IntervalFile {
            system: SystemFile::from_system(sys),
            gamma: interval.gamma().label(sys),
            bottom: interval.bottom().label(),
            top: interval.top().label(),
            elements: interval.elements().iter().map(|e| e.label()).collect(),
            labels: lattice.labels().to_vec(),
            covers: LatticeFile::from_lattice(lattice).covers,
            sorting_chain: interval.sorting_chain_indices()?,
            report,
            checks,
        })
    }
}
