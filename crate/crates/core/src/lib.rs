//! Desk-scale analysis of linear Hamiltonian circle actions on `C^n`.
//!
//! Fix an integer weight vector `(α_1, …, α_n)` and let the circle act on
//! `C^n` by `e^{iθ}·(z_1,…,z_n) = (e^{α_1 iθ} z_1, …, e^{α_n iθ} z_n)`.
//! This crate computes, in exact arithmetic where the objects are exact:
//!
//! * [`weights`] — normalization to an effective action, sign profiles,
//!   stabilizer subgroups, and the orbit-type stratification with its
//!   frontier/depth bookkeeping;
//! * [`momentum`] — the quadratic momentum map `Φ(z) = ½ Σ α_i |z_i|²`,
//!   regular-value detection, the cone/link structure of `Φ⁻¹(0)`, reduced
//!   dimensions, and a deterministic zero-fiber sampler;
//! * [`invariant`] — the minimal Hilbert basis of circle-invariant monomial
//!   exponents and the real generator list of the induced quotient embedding;
//! * [`homotopy`] — finitely generated abelian group calculus, a table of
//!   homotopy groups of spheres, long-exact-sequence constraint generators
//!   for the two fibrations comparing a circle quotient of a sphere product
//!   with a sphere quotient `S^k/H`, and the obstruction search over a
//!   catalog of compact groups;
//! * [`nerve`] — finite groupoids, their nerves and simplicial identities,
//!   fundamental groups of classifying spaces via coset enumeration, and
//!   Morita/Borel comparison checks;
//! * [`verdict`] — the representability trichotomy for a symplectic quotient
//!   of the linear model, the reduced-dimension cross-check, consistency
//!   audits, and the aggregated JSON analysis bundle.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to call concurrently.

pub mod homotopy;
pub mod invariant;
pub mod momentum;
pub mod nerve;
pub(crate) mod snf;
pub mod verdict;
pub mod weights;

pub use homotopy::{
    obstruction_search, sphere_pi, sphere_pi_finite, standard_catalog, CompactGroupDescriptor,
    FgAbelianGroup, SearchOutcome, SearchResult,
};
pub use invariant::{invariant_monoid_basis, real_generators, HilbertBasis, MonomialExponent};
pub use momentum::{
    cone_link_decomposition, is_regular_value, momentum, reduced_dimension, sample_zero_fiber,
    ConeLinkDecomposition, FiberKind, Point,
};
pub use nerve::FiniteGroupoid;
pub use verdict::{analyze, consistency_audit, hss_cross_check, main_theorem_verdict, Verdict};
pub use weights::{SignProfile, Stabilizer, StratumDescriptor, Support, WeightVector};

/// Version tag stamped on every JSON analysis bundle.
pub const SCHEMA_VERSION: &str = "s1redux/1";
