//! Long-exact-sequence constraint generators for the two fibrations that
//! compare a circle quotient with a sphere quotient.
//!
//! Writing `X` for the common homotopy type of the two Borel constructions,
//! the first fibration is `S¹ → E S¹ × T → X` with total space `T` a product
//! of spheres (the link ellipsoids), and the second is `H → E H × S^k → X`.
//! Constraints are emitted only at degrees where exactness forces an
//! isomorphism or a finite list of options; ambiguous connecting maps show
//! up as disjunctions, never as guesses.

use serde::Serialize;

use super::fg::FgAbelianGroup;
use super::search::CompactGroupDescriptor;
use super::spheres::{sphere_pi, SphereTableError};

/// A group appearing in a constraint: either a known normal form or the
/// unknown `π_p(X)` of the base space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum GroupRef {
    Known(FgAbelianGroup),
    PiBase(u32),
}

impl std::fmt::Display for GroupRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupRef::Known(g) => write!(f, "{g}"),
            GroupRef::PiBase(p) => write!(f, "pi_{p}(X)"),
        }
    }
}

/// What the low degrees of the base can look like, given the fundamental
/// group of the total space of the circle fibration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LowDegreeShape {
    /// Simply connected total space: `π_2(X) ≅ Z` and `π_1(X) ≅ 1`.
    SimplyConnectedTotal,
    /// One circle factor: the five-term sequence
    /// `1 → π_2(X) → Z → Z → π_1(X) → 1` leaves exactly the options
    /// `(π_2, π_1) = (Z, Z)` or `(1, Z_q)` for some `q ≥ 1`.
    OneCircleFactor,
    /// Two circle factors with an effective action: the orbit inclusion
    /// `Z → Z²` is primitive, so `π_2(X) ≅ 1` and `π_1(X) ≅ Z`.
    TwoCircleFactors,
}

/// One constraint extracted from a long exact sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Relation {
    Iso {
        lhs: GroupRef,
        rhs: GroupRef,
    },
    /// `1 → π_2(X) → Z → Z^t → π_1(X) → 1` with an unknown middle map.
    FiveTerm {
        middle_rank: usize,
        shape: LowDegreeShape,
    },
    /// `π_1(X)` is a subquotient of the (finite) component group: finite,
    /// with order dividing the modulus.
    OrderDivides {
        target: GroupRef,
        modulus: u64,
    },
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Relation::Iso { lhs, rhs } => write!(f, "{lhs} = {rhs}"),
            Relation::FiveTerm { middle_rank, .. } => write!(
                f,
                "exact: 1 -> pi_2(X) -> Z -> Z^{middle_rank} -> pi_1(X) -> 1"
            ),
            Relation::OrderDivides { target, modulus } => {
                write!(f, "{target} is finite with order dividing {modulus}")
            }
        }
    }
}

/// A constraint together with the degree it lives at and where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LesConstraint {
    pub p: u32,
    pub relation: Relation,
    pub provenance: String,
}

/// Constraints on `π_*(X)` from the circle fibration over `X` with total
/// space a product of spheres of the given dimensions.
///
/// For `p ≥ 3` both `π_p(S¹)` and `π_{p−1}(S¹)` vanish, so exactness pins
/// `π_p(X)` to the total space's group. The low degrees depend on how many
/// circle factors the total space has.
pub fn circle_fibration_constraints(
    total_sphere_dims: &[u32],
    p_max: u32,
) -> Result<Vec<LesConstraint>, SphereTableError> {
    let provenance = circle_fibration_provenance(total_sphere_dims);
    let circle_factors = total_sphere_dims.iter().filter(|&&d| d == 1).count();
    let mut constraints = Vec::new();

    match circle_factors {
        0 => {
            constraints.push(LesConstraint {
                p: 1,
                relation: Relation::Iso {
                    lhs: GroupRef::PiBase(1),
                    rhs: GroupRef::Known(FgAbelianGroup::trivial()),
                },
                provenance: format!("{provenance} at p=1,2 (total space simply connected)"),
            });
            constraints.push(LesConstraint {
                p: 2,
                relation: Relation::Iso {
                    lhs: GroupRef::PiBase(2),
                    rhs: GroupRef::Known(FgAbelianGroup::integers()),
                },
                provenance: format!("{provenance} at p=1,2 (total space simply connected)"),
            });
        }
        1 => {
            constraints.push(LesConstraint {
                p: 2,
                relation: Relation::FiveTerm {
                    middle_rank: 1,
                    shape: LowDegreeShape::OneCircleFactor,
                },
                provenance: format!("{provenance} at p=1,2 (one circle factor in the total)"),
            });
        }
        _ => {
            constraints.push(LesConstraint {
                p: 1,
                relation: Relation::Iso {
                    lhs: GroupRef::PiBase(1),
                    rhs: GroupRef::Known(FgAbelianGroup::integers()),
                },
                provenance: format!(
                    "{provenance} at p=1,2 (orbit inclusion primitive by effectiveness)"
                ),
            });
            constraints.push(LesConstraint {
                p: 2,
                relation: Relation::Iso {
                    lhs: GroupRef::PiBase(2),
                    rhs: GroupRef::Known(FgAbelianGroup::trivial()),
                },
                provenance: format!(
                    "{provenance} at p=1,2 (orbit inclusion primitive by effectiveness)"
                ),
            });
        }
    }

    for p in 3..=p_max {
        let mut total = FgAbelianGroup::trivial();
        for &d in total_sphere_dims {
            total = total.direct_sum(&sphere_pi(p, d)?);
        }
        constraints.push(LesConstraint {
            p,
            relation: Relation::Iso {
                lhs: GroupRef::PiBase(p),
                rhs: GroupRef::Known(total),
            },
            provenance: format!("{provenance} at p={p} (fiber homotopy vanishes)"),
        });
    }
    Ok(constraints)
}

/// Spec-facing entry point for the link fibration with two sphere factors.
pub fn les_quotient_constraints(
    l1: u32,
    l2: u32,
    p_max: u32,
) -> Result<Vec<LesConstraint>, SphereTableError> {
    circle_fibration_constraints(&[l1, l2], p_max)
}

/// Constraints on `π_*(X)` from the fibration `H → E H × S^k → X`.
///
/// For `2 ≤ p ≤ k − 1` the sphere's homotopy vanishes on both sides, so
/// `π_p(X) ≅ π_{p−1}(H)` (emitted only where the descriptor knows the
/// group). At `p = 1` (for `k ≥ 2`) the fundamental group of the base is a
/// subquotient of the finite component group.
pub fn les_sphere_quotient_constraints(
    k: u32,
    h: &CompactGroupDescriptor,
    p_max: u32,
) -> Vec<LesConstraint> {
    let provenance = sphere_quotient_provenance(k, &h.name);
    let mut constraints = Vec::new();
    if k >= 2 {
        let modulus = h.pi0.order().expect("component group is finite");
        constraints.push(LesConstraint {
            p: 1,
            relation: Relation::OrderDivides {
                target: GroupRef::PiBase(1),
                modulus,
            },
            provenance: format!("{provenance} at p=1 (covering by the component group)"),
        });
    }
    let upper = p_max.min(k.saturating_sub(1));
    for p in 2..=upper {
        if let Some(group) = h.pi(p - 1) {
            constraints.push(LesConstraint {
                p,
                relation: Relation::Iso {
                    lhs: GroupRef::PiBase(p),
                    rhs: GroupRef::Known(group),
                },
                provenance: format!("{provenance} at p={p} (sphere homotopy vanishes)"),
            });
        }
    }
    constraints
}

pub(super) fn circle_fibration_provenance(total_sphere_dims: &[u32]) -> String {
    let total = total_sphere_dims
        .iter()
        .map(|d| format!("S^{d}"))
        .collect::<Vec<_>>()
        .join(" x ");
    format!("LES of S^1 -> {total} -> X")
}

pub(super) fn sphere_quotient_provenance(k: u32, name: &str) -> String {
    format!("LES of H -> S^{k} -> X for H = {name}")
}
