//! Hand-transcribed reference lattices shipped with the crate.
//!
//! Labels are kept exactly as drawn so the data can be audited against the
//! source diagrams; comparisons against computed lattices go through label
//! sets, never indices.

use serde::Deserialize;

use crate::coxeter::Element;
use crate::error::Error;
use crate::lattice::FiniteLattice;
use crate::sortable::{CambrianInterval, CoxeterElement};
use crate::systems;

const TRIM_NOT_SEMIDISTRIBUTIVE: &str = include_str!("../fixtures/trim_not_semidistributive.json");
const SEMIDISTRIBUTIVE_NOT_TRIM: &str = include_str!("../fixtures/semidistributive_not_trim.json");
const AFFINE_C3_INTERVAL: &str = include_str!("../fixtures/affine_c3_interval.json");

/// A drawn Hasse diagram, optionally with a highlighted maximal chain.
#[derive(Debug, Clone, Deserialize)]
pub struct DrawnLattice {
    pub labels: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default)]
    pub highlighted_chain: Vec<usize>,
}

impl DrawnLattice {
    pub fn lattice(&self) -> FiniteLattice {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        FiniteLattice::from_covers(self.labels.clone(), &covers).expect("fixture is a lattice")
    }

    pub fn highlighted_labels(&self) -> Vec<&str> {
        self.highlighted_chain.iter().map(|&i| self.labels[i].as_str()).collect()
    }
}

/// The drawn C̃₃ interval together with its published irreducibles.
#[derive(Debug, Clone, Deserialize)]
pub struct AffineIntervalFixture {
    #[serde(flatten)]
    pub drawing: DrawnLattice,
    pub gamma: String,
    pub bottom: String,
    pub top: String,
    pub join_irreducibles: Vec<String>,
    pub meet_irreducibles: Vec<String>,
    pub avoiding_initial_meet_irreducible: String,
}

impl AffineIntervalFixture {
    pub fn gamma(&self) -> CoxeterElement {
        CoxeterElement::parse(&systems::affine_c3(), &self.gamma).expect("fixture γ parses")
    }

    /// Computes `[bottom, top]_γ` afresh in a new copy of C̃₃.
    pub fn compute(&self) -> Result<CambrianInterval, Error> {
        let sys = systems::affine_c3();
        let gamma = CoxeterElement::parse(&sys, &self.gamma)?;
        let bottom: Element = sys.parse_element(&self.bottom)?;
        let top = sys.parse_element(&self.top)?;
        crate::sortable::cambrian_interval(&bottom, &top, &gamma)
    }
}

/// Seven elements, length 4: trim but not semidistributive.
pub fn trim_not_semidistributive() -> DrawnLattice {
    serde_json::from_str(TRIM_NOT_SEMIDISTRIBUTIVE).expect("fixture parses")
}

/// A hexagon: semidistributive, four join- and meet-irreducibles, length 3.
pub fn semidistributive_not_trim() -> DrawnLattice {
    serde_json::from_str(SEMIDISTRIBUTIVE_NOT_TRIM).expect("fixture parses")
}

/// The 26-element interval `[ε, s0 s1 s2 s3 s1 s2 s3 s1 s2 s3]` for `γ = s0 s1 s2 s3` in C̃₃.
pub fn affine_c3_interval() -> AffineIntervalFixture {
    serde_json::from_str(AFFINE_C3_INTERVAL).expect("fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_lattices() {
        assert_eq!(trim_not_semidistributive().lattice().size(), 7);
        assert_eq!(semidistributive_not_trim().lattice().size(), 6);
        let c3 = affine_c3_interval();
        assert_eq!(c3.drawing.lattice().size(), 26);
        assert_eq!(c3.drawing.highlighted_chain.len(), 11);
    }
}
