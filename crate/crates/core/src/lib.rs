//! Band-move calculus on knot diagrams: braid closures, planar-diagram
//! surgery, exact polynomial invariants, pinch sequences on torus knots, and
//! an invariant-targeted band search.

pub mod braid;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod pinch;
pub mod search;
pub mod table;

pub use braid::{braid_permutation, torus_braid, BraidWord, Permutation};
pub use diagram::{closure, orient, OrientedDiagram, PlanarDiagram};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Var};
