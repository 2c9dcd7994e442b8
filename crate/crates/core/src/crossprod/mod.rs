//! Algebras, unital actions of inverse monoids, crossed products, induced
//! partial actions, bimodules and Hochschild (co)homology.

mod action;
mod algebra;
mod bimodule;
mod collapse;
mod crossed;
mod hochschild;
mod partial;

pub use action::{
    conjugation_action, is_compatible, trivial_action, validate_action, ActionReport, UnitalAction,
};
pub use algebra::{
    diagonal_algebra, dual_numbers, idempotent_algebra, matrix_algebra, semigroup_algebra, Algebra,
};
pub use bimodule::{coinvariants, invariants_sub, module_as_ks, Bimodule};
pub use collapse::{
    verify_separable_collapse_cohomology, verify_separable_collapse_cohomology_capped,
    verify_separable_collapse_homology, verify_separable_collapse_homology_capped, CollapseReport,
};
pub use crossed::{class_sum_criterion, crossed_product, ClassSumReport, CrossedProduct};
pub use hochschild::{
    hochschild_chain_complex, hochschild_cochain_complex, hochschild_cohomology,
    hochschild_cohomology_capped, hochschild_homology, hochschild_homology_capped, is_separable,
    separability_idempotent,
};
pub use partial::{
    ideal_sum_unit, induced_partial_action, ks_as_crossed_product, phi_map, skew_group_algebra,
    KsReport, PartialGroupAction, PhiReport, SkewGroupAlgebra,
};
