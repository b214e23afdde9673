//! Exact knot invariants and the certification profile.

pub mod alexander;
pub mod bracket;
pub mod burau;
pub mod factor;
pub mod goeritz;
pub mod jones;
pub mod matrix;
pub mod profile;
pub mod seifert;
pub mod torus;

pub use alexander::{
    alexander_from_diagram, alexander_from_seifert, determinant_from_alexander,
    normalize_alexander,
};
pub use bracket::{kauffman_bracket, kauffman_bracket_with, BracketLimits};
pub use burau::burau_alexander;
pub use factor::{factor_z, fox_milnor_test, ZPoly};
pub use goeritz::{determinant_from_diagram, signature_from_diagram};
pub use jones::{jones, jones_with};
pub use matrix::IntMatrix;
pub use profile::{invariant_profile, invariant_profile_with, symmetrized_invariants, InvariantProfile};
pub use seifert::{extract_braid, seifert_circle_count, seifert_matrix, seifert_matrix_from_braid};
pub use torus::{torus_closed_forms, TorusClosedForms};
