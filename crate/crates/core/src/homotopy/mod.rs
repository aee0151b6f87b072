//! Homotopy-obstruction engine.
//!
//! Given odd link sphere dimensions `(l1, l2)`, the engine asks which
//! compact groups `H` acting on a sphere `S^k` could produce the same
//! homotopy type of Borel construction as the circle acting on
//! `S^{l1} × S^{l2}`. Constraints are read off the two long exact
//! sequences degree by degree and intersected over a finite catalog of
//! compact groups; the search is bounded by `k_max` and reports either the
//! surviving `(H, k)` pairs or that no solution exists within the bound.

mod fg;
mod les;
mod search;
mod spheres;

pub use fg::FgAbelianGroup;
pub use les::{
    circle_fibration_constraints, les_quotient_constraints, les_sphere_quotient_constraints,
    GroupRef, LesConstraint, LowDegreeShape, Relation,
};
pub use search::{
    obstruction_search, standard_catalog, CompactGroupDescriptor, DerivationEntry, SearchOutcome,
    SearchResult, SurvivorEntry,
};
pub use spheres::{sphere_pi, sphere_pi_finite, SphereTableError, TABLE_BAND, TABLE_MAX};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error(transparent)]
    OutOfTable(#[from] SphereTableError),
    /// A live candidate forced a sphere lookup beyond the shipped table.
    #[error("catalog insufficient: candidate {candidate} needs pi_{degree}(S^{sphere}) beyond the table")]
    CatalogInsufficient {
        candidate: String,
        degree: u32,
        sphere: u32,
    },
    #[error("invalid compact group descriptor {name}: {reason}")]
    InvalidDescriptor { name: String, reason: String },
    #[error("link sphere dimensions must be odd and >= 1, got ({l1}, {l2})")]
    InvalidLinkDims { l1: u32, l2: u32 },
}
