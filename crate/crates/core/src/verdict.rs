//! The representability trichotomy for symplectic quotients of the linear
//! circle model, with the dimension cross-check, audits, and the
//! aggregated JSON analysis bundle.
//!
//! At a regular level the quotient is an orbifold. At the critical level
//! zero with one-sided weights it is a flat smooth model. With at least
//! two positive and two negative weights the quotient cannot be the orbit
//! space of any effective proper action compatible with its links. In the
//! remaining mixed case (exactly one weight on some side) the quotient is
//! only a candidate: orbifold-ness is deliberately not asserted.

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homotopy::{obstruction_search, standard_catalog, HomotopyError, SearchResult};
use crate::invariant::{default_degree_cap, invariant_monoid_basis};
use crate::momentum::{
    cone_link_decomposition, is_regular_value, reduced_dimension, ConeLinkDecomposition,
    MomentumError,
};
use crate::weights::{SignProfile, WeightVector};
use crate::SCHEMA_VERSION;

/// Bound for the obstruction search run by [`analyze`].
pub const DEFAULT_K_MAX: u32 = 15;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerdictError {
    #[error(transparent)]
    Momentum(#[from] MomentumError),
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("malformed bundle: {0}")]
    MalformedBundle(String),
}

/// The trichotomy outcome (the candidate case never asserts orbifold-ness).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    #[serde(rename = "REGULAR_ORBIFOLD")]
    RegularOrbifold,
    #[serde(rename = "SMOOTH_MODEL")]
    SmoothModel,
    #[serde(rename = "WEAKLY_UNREPRESENTABLE")]
    WeaklyUnrepresentable,
    #[serde(rename = "ORBIFOLD_CANDIDATE")]
    OrbifoldCandidate,
}

/// Which clause fired and the sign data it fired on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct Evidence {
    pub clause: String,
    pub sign_profile: SignProfile,
    pub nonzero_count: usize,
    /// In the linear model every fixed point in the zero fiber shares the
    /// one weight multiset, so the per-fixed-point wording collapses to a
    /// single sign census.
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct Verdict {
    pub outcome: Outcome,
    /// Reduced dimension `< 4` criterion; defined when all weights are
    /// nonzero (the hypothesis of the dimension criterion).
    pub hss_orbifold: Option<bool>,
    pub reduced_dim: usize,
    pub evidence: Evidence,
}

/// The trichotomy at level `a` for an effective weight vector.
pub fn main_theorem_verdict(w: &WeightVector, a: f64) -> Result<Verdict, VerdictError> {
    let profile = w.classify_signs();
    let reduced_dim = reduced_dimension(w, a)?;
    let (outcome, clause) = if is_regular_value(w, a) {
        (
            Outcome::RegularOrbifold,
            "regular level: no fixed point meets the level set, the quotient is an orbifold",
        )
    } else if !profile.is_mixed() {
        (
            Outcome::SmoothModel,
            "critical level, one-sided weights: the quotient is a flat smooth model",
        )
    } else if profile.num_negative >= 2 && profile.num_positive >= 2 {
        (
            Outcome::WeaklyUnrepresentable,
            "critical level with at least two positive and two negative weights",
        )
    } else {
        (
            Outcome::OrbifoldCandidate,
            "critical level with exactly one weight on some side; orbifold-ness is not asserted",
        )
    };
    let hss_orbifold = if profile.num_zero == 0 {
        Some(reduced_dimension(w, 0.0)? < 4)
    } else {
        None
    };
    Ok(Verdict {
        outcome,
        hss_orbifold,
        reduced_dim,
        evidence: Evidence {
            clause: clause.to_string(),
            sign_profile: profile,
            nonzero_count: profile.num_negative + profile.num_positive,
            note: "linear model: all fixed points in the zero fiber share one weight multiset"
                .to_string(),
        },
    })
}

/// Dimension criterion at level zero: the reduced space is an orbifold in
/// the regular-diffeomorphism sense iff its dimension is `< 4`. Requires
/// all weights nonzero and mixed signs.
pub fn hss_cross_check(w: &WeightVector) -> Result<bool, VerdictError> {
    let profile = w.classify_signs();
    if profile.num_zero > 0 {
        return Err(VerdictError::HypothesisViolated(
            "dimension criterion requires all weights nonzero".into(),
        ));
    }
    if !profile.is_mixed() {
        return Err(VerdictError::HypothesisViolated(
            "dimension criterion requires weights of both signs".into(),
        ));
    }
    Ok(reduced_dimension(w, 0.0)? < 4)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditViolation {
    pub weights: Vec<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub vectors_checked: usize,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Enumerates every effective mixed-sign nonzero weight vector with
/// `n ≤ max_n` and `|α_i| ≤ max_weight` (deduplicated after
/// normalization) and checks:
/// (i) weak unrepresentability forces the dimension criterion to fail,
/// (ii) the verdict is invariant under permutation of the weights,
/// (iii) the verdict is invariant under global negation.
pub fn consistency_audit(max_n: usize, max_weight: i64) -> AuditReport {
    let mut seen = std::collections::HashSet::new();
    let mut violations = Vec::new();
    for n in 2..=max_n {
        let mut raw = vec![-max_weight; n];
        'outer: loop {
            audit_vector(&raw, &mut seen, &mut violations);
            let mut i = 0;
            loop {
                raw[i] += 1;
                if raw[i] == 0 {
                    raw[i] = 1; // nonzero entries only
                }
                if raw[i] <= max_weight {
                    break;
                }
                raw[i] = -max_weight;
                i += 1;
                if i == n {
                    break 'outer;
                }
            }
        }
    }
    AuditReport {
        vectors_checked: seen.len(),
        violations,
    }
}

fn audit_vector(
    raw: &[i64],
    seen: &mut std::collections::HashSet<Vec<i64>>,
    violations: &mut Vec<AuditViolation>,
) {
    let Ok(w) = WeightVector::normalize_effective(raw) else {
        return;
    };
    if !w.classify_signs().is_mixed() {
        return;
    }
    if !seen.insert(w.entries().to_vec()) {
        return;
    }
    let verdict = match main_theorem_verdict(&w, 0.0) {
        Ok(v) => v,
        Err(e) => {
            violations.push(AuditViolation {
                weights: w.entries().to_vec(),
                detail: format!("verdict failed: {e}"),
            });
            return;
        }
    };
    if verdict.outcome == Outcome::WeaklyUnrepresentable {
        match hss_cross_check(&w) {
            Ok(false) => {}
            other => violations.push(AuditViolation {
                weights: w.entries().to_vec(),
                detail: format!(
                    "weakly unrepresentable but dimension criterion gave {other:?}"
                ),
            }),
        }
    }
    for perm in w.entries().iter().copied().permutations(w.len()).unique() {
        let wp = WeightVector::normalize_effective(&perm).expect("permutation stays effective");
        if main_theorem_verdict(&wp, 0.0).map(|v| v.outcome) != Ok(verdict.outcome) {
            violations.push(AuditViolation {
                weights: w.entries().to_vec(),
                detail: format!("verdict changed under permutation {perm:?}"),
            });
            break;
        }
    }
    let negated = w.negated();
    if main_theorem_verdict(&negated, 0.0).map(|v| v.outcome) != Ok(verdict.outcome) {
        violations.push(AuditViolation {
            weights: w.entries().to_vec(),
            detail: "verdict changed under global negation".into(),
        });
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct HilbertSummary {
    pub k: usize,
    pub generator_count: usize,
    pub complete: bool,
}

/// Everything the toolkit knows about one `(weights, level)` pair, in one
/// versioned document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct AnalysisBundle {
    pub schema: String,
    pub weights: WeightVector,
    pub level: f64,
    pub sign_profile: SignProfile,
    pub decomposition: ConeLinkDecomposition,
    pub reduced_dim: usize,
    pub hilbert: HilbertSummary,
    /// Present exactly when the zero fiber is a cone.
    pub obstruction: Option<SearchResult>,
    pub verdict: Verdict,
}

impl AnalysisBundle {
    /// Parses a bundle, rejecting unknown fields and schema mismatches.
    pub fn from_json(input: &str) -> Result<AnalysisBundle, VerdictError> {
        let bundle: AnalysisBundle = serde_json::from_str(input)
            .map_err(|e| VerdictError::MalformedBundle(e.to_string()))?;
        if bundle.schema != SCHEMA_VERSION {
            return Err(VerdictError::MalformedBundle(format!(
                "schema {} is not {}",
                bundle.schema, SCHEMA_VERSION
            )));
        }
        Ok(bundle)
    }
}

/// Runs the full pipeline on one weight vector and level.
pub fn analyze(w: &WeightVector, a: f64) -> Result<AnalysisBundle, VerdictError> {
    let verdict = main_theorem_verdict(w, a)?;
    let decomposition = cone_link_decomposition(w);
    let basis = invariant_monoid_basis(w, default_degree_cap(w));
    let obstruction = decomposition
        .link_dims_sorted()
        .map(|(l1, l2)| obstruction_search(l1, l2, DEFAULT_K_MAX, &standard_catalog()))
        .transpose()?;
    Ok(AnalysisBundle {
        schema: SCHEMA_VERSION.to_string(),
        weights: w.clone(),
        level: a,
        sign_profile: w.classify_signs(),
        reduced_dim: verdict.reduced_dim,
        decomposition,
        hilbert: HilbertSummary {
            k: basis.k,
            generator_count: basis.generators.len(),
            complete: basis.complete,
        },
        obstruction,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::SearchOutcome;
    use crate::momentum::FiberKind;

    fn w(raw: &[i64]) -> WeightVector {
        WeightVector::normalize_effective(raw).unwrap()
    }

    #[test]
    fn trichotomy_examples() {
        assert_eq!(
            main_theorem_verdict(&w(&[1, 1, -1, -1]), 0.0).unwrap().outcome,
            Outcome::WeaklyUnrepresentable
        );
        assert_eq!(
            main_theorem_verdict(&w(&[1, 2]), 0.5).unwrap().outcome,
            Outcome::RegularOrbifold
        );
        assert_eq!(
            main_theorem_verdict(&w(&[-1, 1, 1]), 0.0).unwrap().outcome,
            Outcome::OrbifoldCandidate
        );
        assert_eq!(
            main_theorem_verdict(&w(&[1, 2]), 0.0).unwrap().outcome,
            Outcome::SmoothModel
        );
    }

    #[test]
    fn empty_level_set_propagates() {
        assert!(matches!(
            main_theorem_verdict(&w(&[1, 2]), -1.0),
            Err(VerdictError::Momentum(MomentumError::EmptyLevelSet))
        ));
    }

    #[test]
    fn dimension_criterion_examples() {
        assert_eq!(hss_cross_check(&w(&[1, -1])).unwrap(), true);
        assert_eq!(hss_cross_check(&w(&[1, 1, -1, -1])).unwrap(), false);
        // boundary case: dimension four is not less than four
        assert_eq!(hss_cross_check(&w(&[-1, 1, 1])).unwrap(), false);
        assert!(hss_cross_check(&w(&[1, -1, 0])).is_err());
        assert!(hss_cross_check(&w(&[1, 2])).is_err());
    }

    #[test]
    fn hss_flag_in_verdict() {
        assert_eq!(
            main_theorem_verdict(&w(&[1, -1]), 0.0).unwrap().hss_orbifold,
            Some(true)
        );
        assert_eq!(
            main_theorem_verdict(&w(&[1, 1, -1, -1]), 0.0).unwrap().hss_orbifold,
            Some(false)
        );
        assert_eq!(
            main_theorem_verdict(&w(&[1, -1, 0]), 0.0).unwrap().hss_orbifold,
            None
        );
    }

    #[test]
    fn audit_small_range_is_clean() {
        let report = consistency_audit(4, 3);
        assert!(report.ok(), "{:?}", report.violations);
        assert!(report.vectors_checked > 50);
    }

    #[test]
    fn negation_example() {
        let a = main_theorem_verdict(&w(&[2, -3]), 0.0).unwrap();
        let b = main_theorem_verdict(&w(&[-2, 3]), 0.0).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.reduced_dim, b.reduced_dim);
    }

    #[test]
    fn analyze_hyperbolic_pair() {
        let bundle = analyze(&w(&[1, -1]), 0.0).unwrap();
        assert_eq!(bundle.schema, SCHEMA_VERSION);
        assert_eq!(bundle.hilbert.k, 4);
        assert_eq!(bundle.decomposition.kind, FiberKind::Cone);
        assert_eq!(bundle.decomposition.l_minus, 1);
        assert_eq!(bundle.decomposition.l_plus, 1);
        assert_eq!(bundle.verdict.outcome, Outcome::OrbifoldCandidate);
        let search = bundle.obstruction.as_ref().unwrap();
        assert_eq!(search.outcome, SearchOutcome::Survivors);
    }

    #[test]
    fn analyze_regular_level_has_no_obstruction_section() {
        let bundle = analyze(&w(&[3, 5]), 1.0).unwrap();
        assert_eq!(bundle.verdict.outcome, Outcome::RegularOrbifold);
        assert!(bundle.obstruction.is_none());
    }

    #[test]
    fn analyze_unrepresentable_is_coherent_with_search() {
        let bundle = analyze(&w(&[1, 1, -1, -1]), 0.0).unwrap();
        assert_eq!(bundle.verdict.outcome, Outcome::WeaklyUnrepresentable);
        let search = bundle.obstruction.as_ref().unwrap();
        assert_eq!((search.l1, search.l2), (3, 3));
        assert_eq!(search.outcome, SearchOutcome::NoSolution);
    }

    #[test]
    fn bundle_round_trip_and_unknown_field_rejection() {
        let bundle = analyze(&w(&[1, -1]), 0.0).unwrap();
        let json = serde_json::to_string(&bundle).unwrap();
        let back = AnalysisBundle::from_json(&json).unwrap();
        assert_eq!(back, bundle);

        let mut value: serde_json::Value = serde_json::from_str(&json).unwrap();
        value
            .as_object_mut()
            .unwrap()
            .insert("surprise".into(), serde_json::json!(1));
        assert!(AnalysisBundle::from_json(&value.to_string()).is_err());

        let mut wrong_schema: serde_json::Value = serde_json::from_str(&json).unwrap();
        wrong_schema["schema"] = serde_json::json!("s1redux/0");
        assert!(AnalysisBundle::from_json(&wrong_schema.to_string()).is_err());
    }
}
