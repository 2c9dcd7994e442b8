//! Modules over `KS` and the explicit complexes computing `H_n(S, V)` and
//! `Hⁿ(S, V)`, plus the free resolution of `KE(S)` used as a self-check.

mod complex;
mod module;
mod resolution;

pub(crate) use complex::Summand;
pub use complex::{
    cohomology, cohomology_capped, cohomology_complex, cohomology_complex_capped, homology,
    homology_capped, homology_complex, homology_complex_capped, Block, ChainComplexData, Direction,
    DEFAULT_CAP_COLUMNS,
};
pub use module::{
    constant_module, direct_sum, filter_character, regular_module, trivial_module_ke, KSModule,
    Side,
};
pub use resolution::{build_resolution, build_resolution_capped, ResolutionComplex};
