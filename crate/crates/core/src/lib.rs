//! Exact computation of graded Lie rings given by homogeneous presentations
//! over the integers, aimed at the Lie rings attached to pure braid groups
//! and pure mapping class groups of the punctured sphere.
//!
//! The pipeline is:
//!
//! * [`lyndon`]: Lyndon words and their standard bracketings, the basis of
//!   the free Lie ring;
//! * [`freelie`]: exact bracket arithmetic in Lyndon coordinates;
//! * [`zmodule`]: Hermite and Smith normal forms of integer lattices;
//! * [`presentations`]: the Kohno, Ihara and sphere presentations as data;
//! * [`gradedquotient`]: free rank and torsion of each graded piece of a
//!   presented Lie ring;
//! * [`braidcheck`]: braid group identities decided through the Artin
//!   action on a free group;
//! * [`table`] and [`verify`]: rank tables and named checks used by the
//!   `glie` binary.

pub mod braidcheck;
pub mod error;
pub mod freelie;
pub mod gradedquotient;
pub mod lyndon;
pub mod presentations;
pub mod table;
pub mod verify;
pub mod zmodule;

pub use error::{Error, Result};
