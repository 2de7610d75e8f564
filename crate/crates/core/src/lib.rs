//! Coxeter groups in the simple-root representation, the weak order,
//! c-sortable elements and Cambrian intervals, plus a property analyzer for
//! finite lattices.
//!
//! ```
//! use cambrian::{systems, sortable::{sorting_word, CoxeterElement}};
//!
//! let sys = systems::affine_c3();
//! let gamma = CoxeterElement::standard(sys.rank());
//! let w = sys.parse_element("s0 s2 s3 s2").unwrap();
//! let word = sorting_word(&w, &gamma).unwrap();
//! assert_eq!(word.render(), "s0 s2 s3 | s2");
//! assert!(word.is_sortable());
//! ```

pub mod arith;
pub mod cli;
pub mod coxeter;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod lattice;
pub mod report;
pub mod sample;
pub mod sortable;
pub mod sweep;
pub mod systems;
pub mod verify;
pub mod weak;

pub use coxeter::{Bond, CoxeterError, CoxeterMatrix, CoxeterSystem, Element};
pub use error::Error;
pub use lattice::{FiniteLattice, LatticeError};
pub use report::{PropertyReport, Verdict};
pub use sortable::{CambrianInterval, CoxeterElement, SortingWord};
