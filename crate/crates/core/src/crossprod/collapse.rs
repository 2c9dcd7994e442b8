use serde::Serialize;

use super::bimodule::{coinvariants, invariants_sub, Bimodule};
use super::crossed::CrossedProduct;
use super::hochschild::{hochschild_cohomology_capped, hochschild_homology_capped, is_separable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monhom::{cohomology_capped, homology_capped, DEFAULT_CAP_COLUMNS};

/// Two Betti lists that should agree degreewise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseReport {
    /// Monoid side: `H_n(S, M/[A,M])` or `Hⁿ(S, M^A)`.
    pub lhs: Vec<usize>,
    /// Algebra side: `H_n(A⋊S, M)` or `Hⁿ(A⋊S, M)`.
    pub rhs: Vec<usize>,
    /// Dimension of the coefficient module on the monoid side.
    pub coefficient_dim: usize,
}

impl CollapseReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `H_n(S, M/[A,M]) = H_n(A ⋊_θ S, M)` for separable `A`.
pub fn verify_separable_collapse_homology<F: Field>(
    c: &CrossedProduct<F>,
    m: &Bimodule<F>,
    max_deg: usize,
) -> Result<CollapseReport> {
    verify_separable_collapse_homology_capped(c, m, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn verify_separable_collapse_homology_capped<F: Field>(
    c: &CrossedProduct<F>,
    m: &Bimodule<F>,
    max_deg: usize,
    cap: usize,
) -> Result<CollapseReport> {
    if !is_separable(c.action().algebra()) {
        return Err(Error::NotSeparable);
    }
    let (_, v) = coinvariants(m, c)?;
    let lhs = homology_capped(c.action().monoid(), &v, max_deg, cap)?;
    let rhs = hochschild_homology_capped(c.algebra(), m, max_deg, cap)?;
    Ok(CollapseReport {
        lhs,
        rhs,
        coefficient_dim: v.dim(),
    })
}

/// `Hⁿ(S, M^A) = Hⁿ(A ⋊_θ S, M)` for separable `A`.
pub fn verify_separable_collapse_cohomology<F: Field>(
    c: &CrossedProduct<F>,
    m: &Bimodule<F>,
    max_deg: usize,
) -> Result<CollapseReport> {
    verify_separable_collapse_cohomology_capped(c, m, max_deg, DEFAULT_CAP_COLUMNS)
}

pub fn verify_separable_collapse_cohomology_capped<F: Field>(
    c: &CrossedProduct<F>,
    m: &Bimodule<F>,
    max_deg: usize,
    cap: usize,
) -> Result<CollapseReport> {
    if !is_separable(c.action().algebra()) {
        return Err(Error::NotSeparable);
    }
    let (_, v) = invariants_sub(m, c)?;
    let lhs = cohomology_capped(c.action().monoid(), &v, max_deg, cap)?;
    let rhs = hochschild_cohomology_capped(c.algebra(), m, max_deg, cap)?;
    Ok(CollapseReport {
        lhs,
        rhs,
        coefficient_dim: v.dim(),
    })
}
