use crate::coxeter::CoxeterError;
use crate::lattice::LatticeError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("invalid Coxeter element: {0}")]
    InvalidCoxeterElement(String),
    #[error("{role} {word} is not sortable: blocks {blocks} do not decrease")]
    NotSortable { role: &'static str, word: String, blocks: String },
    #[error("{bottom} is not below {top} in the weak order")]
    NotBelow { bottom: String, top: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{what} exceeds the limit of {limit} elements")]
    ResourceLimit { what: &'static str, limit: usize },
}
