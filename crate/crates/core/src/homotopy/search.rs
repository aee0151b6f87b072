//! Catalog of compact groups and the bounded obstruction search.

use serde::{Deserialize, Serialize};

use super::fg::FgAbelianGroup;
use super::les::{circle_fibration_provenance, sphere_quotient_provenance};
use super::spheres::{sphere_pi, TABLE_MAX};
use super::HomotopyError;

/// Homotopy signature of a compact Lie group, as far as the engine needs
/// it. Connected entries follow the structure `(torus × K)/Γ` with `K`
/// trivial or semisimple: `π_2` is always trivial and `π_3` is free of the
/// recorded rank; degrees four and up are unknown exactly when a
/// semisimple factor is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CompactGroupDescriptor {
    pub name: String,
    pub dim: u32,
    pub pi0: FgAbelianGroup,
    pub pi1: FgAbelianGroup,
    pub pi2: FgAbelianGroup,
    pub pi3_rank: u32,
    pub semisimple_factor: bool,
}

impl CompactGroupDescriptor {
    pub fn new(
        name: impl Into<String>,
        dim: u32,
        pi0: FgAbelianGroup,
        pi1: FgAbelianGroup,
        pi3_rank: u32,
        semisimple_factor: bool,
    ) -> Result<Self, HomotopyError> {
        let name = name.into();
        if !pi0.is_finite() {
            return Err(HomotopyError::InvalidDescriptor {
                name,
                reason: "component group must be finite".into(),
            });
        }
        if semisimple_factor && pi3_rank == 0 {
            return Err(HomotopyError::InvalidDescriptor {
                name,
                reason: "a semisimple factor forces infinite pi_3".into(),
            });
        }
        Ok(CompactGroupDescriptor {
            name,
            dim,
            pi0,
            pi1,
            pi2: FgAbelianGroup::trivial(),
            pi3_rank,
            semisimple_factor,
        })
    }

    /// `π_p(H)` where the descriptor pins it down; `None` above degree 3
    /// when a semisimple factor makes the tail unknown.
    pub fn pi(&self, p: u32) -> Option<FgAbelianGroup> {
        match p {
            0 => Some(self.pi0.clone()),
            1 => Some(self.pi1.clone()),
            2 => Some(FgAbelianGroup::trivial()),
            3 => Some(FgAbelianGroup::free(self.pi3_rank as usize)),
            _ if !self.semisimple_factor => Some(FgAbelianGroup::trivial()),
            _ => None,
        }
    }

    pub fn product(&self, other: &CompactGroupDescriptor) -> CompactGroupDescriptor {
        CompactGroupDescriptor {
            name: format!("{} x {}", self.name, other.name),
            dim: self.dim + other.dim,
            pi0: self.pi0.direct_sum(&other.pi0),
            pi1: self.pi1.direct_sum(&other.pi1),
            pi2: FgAbelianGroup::trivial(),
            pi3_rank: self.pi3_rank + other.pi3_rank,
            semisimple_factor: self.semisimple_factor || other.semisimple_factor,
        }
    }
}

/// The default catalog: the trivial group, cyclic groups up to order 12,
/// the circle and 2-torus, the two dimension-3 types, the mixed quotient
/// types `U(2)` and `SO(4)`, and products of at most two factors.
pub fn standard_catalog() -> Vec<CompactGroupDescriptor> {
    let triv = FgAbelianGroup::trivial;
    let z = FgAbelianGroup::integers;
    let mut catalog = Vec::new();
    let mk = |name: &str, dim, pi0, pi1, pi3_rank, ss| {
        CompactGroupDescriptor::new(name, dim, pi0, pi1, pi3_rank, ss)
            .expect("catalog entries are well-formed")
    };

    catalog.push(mk("1", 0, triv(), triv(), 0, false));
    for q in 2..=12 {
        catalog.push(mk(
            &format!("Z_{q}"),
            0,
            FgAbelianGroup::cyclic(q),
            triv(),
            0,
            false,
        ));
    }
    let circle = mk("S^1", 1, triv(), z(), 0, false);
    let su2 = mk("SU(2)", 3, triv(), triv(), 1, true);
    let so3 = mk("SO(3)", 3, triv(), FgAbelianGroup::cyclic(2), 1, true);
    catalog.push(mk("T^2", 2, triv(), FgAbelianGroup::free(2), 0, false));
    // quotient types (torus x K)/Gamma
    catalog.push(mk("U(2)", 4, triv(), z(), 1, true));
    catalog.push(mk("SO(4)", 6, triv(), FgAbelianGroup::cyclic(2), 2, true));
    // products of two factors
    catalog.push(circle.product(&su2));
    catalog.push(circle.product(&so3));
    catalog.push(su2.product(&su2));
    catalog.push(su2.product(&so3));
    catalog.push(so3.product(&so3));
    let z2 = mk("Z_2", 0, FgAbelianGroup::cyclic(2), triv(), 0, false);
    catalog.push(z2.product(&circle));
    catalog.push(z2.product(&su2));
    catalog.push(circle.clone());
    catalog.push(su2);
    catalog.push(so3);
    catalog
}

/// One line of the machine-readable derivation log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DerivationEntry {
    pub degree: u32,
    pub constraint: String,
    pub provenance: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    /// No candidate within the bound satisfies every constraint.
    #[serde(rename = "NO_SOLUTION")]
    NoSolution,
    #[serde(rename = "SURVIVORS")]
    Survivors,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SurvivorEntry {
    pub name: String,
    pub dim_h: u32,
    pub k: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchResult {
    pub l1: u32,
    pub l2: u32,
    pub k_max: u32,
    pub outcome: SearchOutcome,
    pub survivors: Vec<SurvivorEntry>,
    /// Catalog entries whose forced `k` exceeds the bound; they were not
    /// examined, so "no solution" always means within the bound.
    pub excluded_by_bound: Vec<String>,
    pub log: Vec<DerivationEntry>,
}

/// Searches the catalog for pairs `(H, k)` whose sphere quotient could be
/// homotopy equivalent to the circle quotient of `S^{l1} × S^{l2}`.
///
/// The dimension ledger forces `k = l1 + l2 − 1 + dim H` for every
/// candidate; constraints from the two long exact sequences are then
/// intersected degree by degree. Output order is canonical (survivors
/// sorted by `(dim H, name, k)`), independent of catalog order.
pub fn obstruction_search(
    l1: u32,
    l2: u32,
    k_max: u32,
    catalog: &[CompactGroupDescriptor],
) -> Result<SearchResult, HomotopyError> {
    if l1 % 2 == 0 || l2 % 2 == 0 || l1 < 1 || l2 < 1 {
        return Err(HomotopyError::InvalidLinkDims { l1, l2 });
    }
    let mut ordered: Vec<&CompactGroupDescriptor> = catalog.iter().collect();
    ordered.sort_by(|a, b| (a.dim, &a.name).cmp(&(b.dim, &b.name)));
    ordered.dedup_by(|a, b| a.name == b.name);

    let mut log = generic_facts(l1, l2);
    let mut survivors = Vec::new();
    let mut excluded_by_bound = Vec::new();

    for h in ordered {
        let k = l1 + l2 - 1 + h.dim;
        if k > k_max {
            excluded_by_bound.push(h.name.clone());
            continue;
        }
        match evaluate_candidate(l1, l2, h, k)? {
            CandidateFate::Survives => {
                log.push(DerivationEntry {
                    degree: k.saturating_sub(1).min(TABLE_MAX),
                    constraint: format!(
                        "candidate {} (k={k}) survives every constraint in range",
                        h.name
                    ),
                    provenance: both_les_provenance(l1, l2, k, &h.name),
                });
                survivors.push(SurvivorEntry {
                    name: h.name.clone(),
                    dim_h: h.dim,
                    k,
                });
            }
            CandidateFate::Killed { degree, reason } => {
                log.push(DerivationEntry {
                    degree,
                    constraint: reason,
                    provenance: both_les_provenance(l1, l2, k, &h.name),
                });
            }
        }
    }

    survivors.sort_by(|a, b| (a.dim_h, &a.name, a.k).cmp(&(b.dim_h, &b.name, b.k)));
    let outcome = if survivors.is_empty() {
        SearchOutcome::NoSolution
    } else {
        SearchOutcome::Survivors
    };
    Ok(SearchResult {
        l1,
        l2,
        k_max,
        outcome,
        survivors,
        excluded_by_bound,
        log,
    })
}

enum CandidateFate {
    Survives,
    Killed { degree: u32, reason: String },
}

/// Low-degree knowledge about `π_1(X)` and `π_2(X)` from the circle side.
enum LowDegrees {
    Exact {
        pi1: FgAbelianGroup,
        pi2: FgAbelianGroup,
    },
    /// Five-term sequence with unknown middle map: either
    /// `(π_2, π_1) = (Z, Z)` or `(1, Z_q)`.
    FiveTerm,
}

fn evaluate_candidate(
    l1: u32,
    l2: u32,
    h: &CompactGroupDescriptor,
    k: u32,
) -> Result<CandidateFate, HomotopyError> {
    let circle_factors = [l1, l2].iter().filter(|&&l| l == 1).count();
    let mut low = match circle_factors {
        0 => LowDegrees::Exact {
            pi1: FgAbelianGroup::trivial(),
            pi2: FgAbelianGroup::integers(),
        },
        1 => LowDegrees::FiveTerm,
        _ => LowDegrees::Exact {
            pi1: FgAbelianGroup::integers(),
            pi2: FgAbelianGroup::trivial(),
        },
    };

    // degree 1: pi_1(X) must be a subquotient of the component group
    if k >= 2 {
        let pi0 = &h.pi0;
        match &low {
            LowDegrees::Exact { pi1, .. } => {
                if !pi1.is_finite() {
                    return Ok(CandidateFate::Killed {
                        degree: 1,
                        reason: format!(
                            "candidate {} (k={k}) rejected at p=1: pi_1(X) = {pi1} is \
                             infinite but must be a subquotient of pi_0(H) = {pi0}",
                            h.name
                        ),
                    });
                }
                if !is_finite_abelian_subquotient(pi1, pi0) {
                    return Ok(CandidateFate::Killed {
                        degree: 1,
                        reason: format!(
                            "candidate {} (k={k}) rejected at p=1: pi_1(X) = {pi1} is \
                             not a subquotient of pi_0(H) = {pi0}",
                            h.name
                        ),
                    });
                }
            }
            LowDegrees::FiveTerm => {
                // pi_1(X) is a subquotient of a finite group, hence finite;
                // the five-term sequence then forces pi_2(X) = 1 and
                // pi_1(X) cyclic, which is satisfiable for any catalog H.
                low = LowDegrees::Exact {
                    pi1: FgAbelianGroup::trivial(), // placeholder: only pi2 is pinned
                    pi2: FgAbelianGroup::trivial(),
                };
            }
        }
    }

    // degree 2: pi_2(X) = pi_1(H)
    if k >= 3 {
        let pi2 = match &low {
            LowDegrees::Exact { pi2, .. } => pi2.clone(),
            // k >= 3 implies k >= 2, so the five-term case was resolved
            LowDegrees::FiveTerm => unreachable!("resolved at degree 1"),
        };
        if pi2 != h.pi1 {
            return Ok(CandidateFate::Killed {
                degree: 2,
                reason: format!(
                    "candidate {} (k={k}) rejected at p=2: quotient side gives \
                     pi_2(X) = {pi2} but sphere side needs pi_2(X) = pi_1(H) = {}",
                    h.name, h.pi1
                ),
            });
        }
    }

    // degrees 3..k-1: pi_p(X) = pi_p(S^{l1}) + pi_p(S^{l2}) = pi_{p-1}(H)
    let upper = (k.saturating_sub(1)).min(TABLE_MAX);
    for p in 3..=upper {
        let Some(h_side) = h.pi(p - 1) else {
            continue; // the descriptor does not pin this degree down
        };
        let quotient_side = quotient_pi(l1, l2, p).map_err(|e| {
            HomotopyError::CatalogInsufficient {
                candidate: h.name.clone(),
                degree: e_degree(&e),
                sphere: e_sphere(&e),
            }
        })?;
        if quotient_side != h_side {
            return Ok(CandidateFate::Killed {
                degree: p,
                reason: format!(
                    "candidate {} (k={k}) rejected at p={p}: quotient side gives \
                     pi_{p}(X) = {quotient_side} but sphere side needs \
                     pi_{p}(X) = pi_{}(H) = {h_side}",
                    h.name,
                    p - 1
                ),
            });
        }
    }
    Ok(CandidateFate::Survives)
}

fn quotient_pi(
    l1: u32,
    l2: u32,
    p: u32,
) -> Result<FgAbelianGroup, super::spheres::SphereTableError> {
    Ok(sphere_pi(p, l1)?.direct_sum(&sphere_pi(p, l2)?))
}

fn e_degree(e: &super::spheres::SphereTableError) -> u32 {
    let super::spheres::SphereTableError::OutOfTable { p, .. } = e;
    *p
}

fn e_sphere(e: &super::spheres::SphereTableError) -> u32 {
    let super::spheres::SphereTableError::OutOfTable { k, .. } = e;
    *k
}

/// A finite abelian group is a subquotient of another iff its invariant
/// factors divide the other's, aligned from the largest downwards.
fn is_finite_abelian_subquotient(a: &FgAbelianGroup, b: &FgAbelianGroup) -> bool {
    debug_assert!(a.is_finite() && b.is_finite());
    let aa = a.torsion();
    let bb = b.torsion();
    if aa.len() > bb.len() {
        return false;
    }
    let offset = bb.len() - aa.len();
    aa.iter().zip(&bb[offset..]).all(|(x, y)| y % x == 0)
}

fn both_les_provenance(l1: u32, l2: u32, k: u32, name: &str) -> String {
    format!(
        "{}; {}",
        circle_fibration_provenance(&[l1, l2]),
        sphere_quotient_provenance(k, name)
    )
}

/// Candidate-independent facts of the derivation, in deduction order.
fn generic_facts(l1: u32, l2: u32) -> Vec<DerivationEntry> {
    let circle = circle_fibration_provenance(&[l1, l2]);
    let sphere = "LES of H -> S^k -> X";
    let mut log = vec![DerivationEntry {
        degree: 0,
        constraint: format!("k = l1 + l2 - 1 + dim H = {} + dim H", l1 + l2 - 1),
        provenance: format!(
            "dimension ledger: the slice sphere S^k over H matches the cone link S^{l1} x S^{l2} over S^1"
        ),
    }];
    let circle_factors = [l1, l2].iter().filter(|&&l| l == 1).count();
    match circle_factors {
        0 => {
            log.push(DerivationEntry {
                degree: 1,
                constraint: "1 = pi_1(X) = pi_0(H)".into(),
                provenance: format!("{circle} at p=1,2; {sphere} at p=1"),
            });
            log.push(DerivationEntry {
                degree: 2,
                constraint: "Z = pi_2(X) = pi_1(H)".into(),
                provenance: format!("{circle} at p=1,2; {sphere} at p=2"),
            });
            log.push(DerivationEntry {
                degree: 3,
                constraint: "pi_p(S^l1) x pi_p(S^l2) = pi_p(X) = pi_{p-1}(H) for 2 < p < k".into(),
                provenance: format!("{circle} at p>=3; {sphere} at 2 <= p <= k-1"),
            });
        }
        1 => {
            let l2 = l1.max(l2);
            log.push(DerivationEntry {
                degree: 2,
                constraint: "exact: 1 -> pi_2(X) -> Z -> Z -> pi_1(X) -> 1".into(),
                provenance: format!("{circle} at p=1,2"),
            });
            log.push(DerivationEntry {
                degree: 1,
                constraint: "pi_1(X) = Z_q for some q, or is trivial".into(),
                provenance: format!(
                    "{sphere} at p=1 (finite component group) with the five-term sequence"
                ),
            });
            log.push(DerivationEntry {
                degree: 2,
                constraint: "pi_2(X) = pi_1(H)".into(),
                provenance: format!("{sphere} at p=2"),
            });
            log.push(DerivationEntry {
                degree: 3,
                constraint: format!("pi_p(S^{l2}) = pi_p(X) = pi_{{p-1}}(H) for 2 < p < k"),
                provenance: format!("{circle} at p>=3; {sphere} at 2 <= p <= k-1"),
            });
        }
        _ => {
            log.push(DerivationEntry {
                degree: 1,
                constraint: "Z = pi_1(X)".into(),
                provenance: format!("{circle} at p=1 (orbit inclusion primitive by effectiveness)"),
            });
            log.push(DerivationEntry {
                degree: 2,
                constraint: "pi_p(X) = 1 for p >= 2".into(),
                provenance: format!("{circle} at p>=2 (torus total space)"),
            });
        }
    }
    log
}

#[cfg(test)]
mod tests {
    use super::*;

    fn search(l1: u32, l2: u32, k_max: u32) -> SearchResult {
        obstruction_search(l1, l2, k_max, &standard_catalog()).unwrap()
    }

    #[test]
    fn no_solution_for_three_three() {
        let result = search(3, 3, 15);
        assert_eq!(result.outcome, SearchOutcome::NoSolution);
        assert!(result.survivors.is_empty());
    }

    #[test]
    fn one_five_survivors_are_zero_dimensional() {
        let result = search(1, 5, 15);
        assert_eq!(result.outcome, SearchOutcome::Survivors);
        assert!(!result.survivors.is_empty());
        for s in &result.survivors {
            assert_eq!(s.dim_h, 0, "{}", s.name);
            assert_eq!(s.k, 5);
        }
    }

    #[test]
    fn one_one_has_finite_cyclic_survivors() {
        let result = search(1, 1, 6);
        assert_eq!(result.outcome, SearchOutcome::Survivors);
        let names: Vec<&str> = result.survivors.iter().map(|s| s.name.as_str()).collect();
        assert!(names.contains(&"Z_2"));
        assert!(names.contains(&"Z_12"));
        assert!(names.contains(&"1"));
        for s in &result.survivors {
            assert_eq!(s.dim_h, 0);
            assert_eq!(s.k, 1);
        }
    }

    #[test]
    fn dimension_ledger_holds_for_survivors() {
        for (l1, l2) in [(1, 1), (1, 3), (1, 5), (1, 7)] {
            let result = search(l1, l2, 15);
            for s in &result.survivors {
                assert_eq!(s.k - s.dim_h, l1 + l2 - 1);
            }
        }
    }

    #[test]
    fn derivation_log_contains_chain_of_facts_in_order() {
        let result = search(5, 5, 15);
        let facts: Vec<&str> = result.log.iter().map(|e| e.constraint.as_str()).collect();
        let i0 = facts
            .iter()
            .position(|&f| f == "1 = pi_1(X) = pi_0(H)")
            .expect("connectedness fact");
        let i1 = facts
            .iter()
            .position(|&f| f == "Z = pi_2(X) = pi_1(H)")
            .expect("fundamental group fact");
        let i2 = facts
            .iter()
            .position(|&f| f == "pi_p(S^l1) x pi_p(S^l2) = pi_p(X) = pi_{p-1}(H) for 2 < p < k")
            .expect("chain fact");
        assert!(i0 < i1 && i1 < i2);
        assert!(result.log.iter().all(|e| !e.provenance.is_empty()));
    }

    #[test]
    fn search_is_independent_of_catalog_order() {
        let forward = standard_catalog();
        let mut reversed = standard_catalog();
        reversed.reverse();
        for (l1, l2) in [(3, 3), (1, 3), (1, 1), (3, 7)] {
            let a = obstruction_search(l1, l2, 15, &forward).unwrap();
            let b = obstruction_search(l1, l2, 15, &reversed).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn even_link_dimensions_are_rejected() {
        assert!(matches!(
            obstruction_search(2, 3, 15, &standard_catalog()),
            Err(HomotopyError::InvalidLinkDims { .. })
        ));
    }

    #[test]
    fn bound_exclusions_are_reported() {
        let result = search(7, 7, 15);
        // dim-3 and larger entries force k >= 16
        assert!(result.excluded_by_bound.contains(&"SU(2)".to_string()));
        assert_eq!(result.outcome, SearchOutcome::NoSolution);
    }

    #[test]
    fn descriptor_invariants_are_enforced() {
        assert!(CompactGroupDescriptor::new(
            "bad",
            1,
            FgAbelianGroup::integers(),
            FgAbelianGroup::trivial(),
            0,
            false
        )
        .is_err());
        assert!(CompactGroupDescriptor::new(
            "bad",
            3,
            FgAbelianGroup::trivial(),
            FgAbelianGroup::trivial(),
            0,
            true
        )
        .is_err());
    }

    #[test]
    fn subquotient_criterion() {
        let z4 = FgAbelianGroup::cyclic(4);
        let z2 = FgAbelianGroup::cyclic(2);
        let klein = FgAbelianGroup::from_parts(0, &[2, 2]);
        assert!(is_finite_abelian_subquotient(&z2, &z4));
        assert!(is_finite_abelian_subquotient(&z2, &klein));
        assert!(!is_finite_abelian_subquotient(&z4, &klein));
        assert!(is_finite_abelian_subquotient(&FgAbelianGroup::trivial(), &z2));
    }
}
