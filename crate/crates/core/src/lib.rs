//! Irreducible sets, the SI topology, `≪_Irr` and Irr-convergence on finite
//! T0-spaces and on a catalog of infinite example spaces.

pub mod catalog;
pub mod convergence;
pub mod error;
pub mod irr;
pub mod pointset;
pub mod poset;
pub mod properties;
pub mod si;
pub mod space;
pub mod theorem_lab;

pub use error::{Error, Result};
pub use pointset::{PointSet, MAX_POINTS};
pub use poset::{LabeledPoset, Poset, PosetJson};
pub use properties::{check_properties, PropertyReport, Witness};
pub use space::{FiniteSpace, SpaceJson, Topology};
