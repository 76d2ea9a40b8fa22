//! Artinian local algebras given by monomial relations, their modules as
//! representations, trace ideals, and minimal free resolutions.

mod algebra;
mod matrix;
mod module;
mod resolution;

pub use algebra::{ArtinianAlgebra, IdealSubspace};
pub use matrix::RMatrix;
pub use module::{check_lemma_matrix_trace, PresentedModule};
pub use resolution::{
    matrix_ideal, minimal_resolution, residue_field_resolution, trace_via_presentation,
    FreeResolution, MAX_FREE_DIM, MAX_STEPS,
};
