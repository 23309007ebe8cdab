//! Finite-dimensional representations of bound quivers and their morphisms.
mod decompose;
mod hom;
mod presentation;
mod rep;

pub use decompose::{
    certify_local, decompose, end_algebra_structure, is_brick, is_indecomposable, Decomposition, EndAlgebra, Locality,
};
pub use hom::{hom_basis, hom_dim, is_isomorphic};
#[allow(unused_imports)]
pub(crate) use hom::{for_each_vector, random_combination, random_scalar, small_enough};
pub(crate) use rep::same_algebra;
pub use rep::{factor_through_epi, factor_through_mono, quotient_from_rows, sub_from_columns, sum_of_images, Morphism, Representation};
pub use presentation::{
    generator_index, lift_from_projective, map_from_generators, minimal_projective_presentation, projective_cover,
    projective_sum, radical, top, Presentation, ProjectiveCover,
};
