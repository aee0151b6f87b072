//! Hilbert bases of circle-invariant monomial exponents and the real
//! generators of the induced quotient embedding.
//!
//! A monomial `z^a z̄^b` is invariant iff `Σ α_i (a_i − b_i) = 0`. The set
//! of invariant exponent pairs `(a,b) ∈ N^{2n}` is the solution monoid of a
//! single homogeneous linear Diophantine equation; its unique minimal
//! generating set is computed by a bounded frontier completion with
//! domination pruning, in exact integer arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::momentum::Point;
use crate::weights::WeightVector;

/// Two points on the same orbit must agree on every generator to this
/// absolute tolerance.
pub const INVARIANCE_TOLERANCE: f64 = 1e-9;
/// Generator values agreeing to this tolerance are treated as a match that
/// the separation oracle must explain by orbit proximity.
pub const MATCH_TOLERANCE: f64 = 1e-6;
/// Angular resolution of the orbit-distance minimization grid.
pub const ORBIT_GRID: usize = 2048;

#[derive(Debug, Clone, Error)]
pub enum InvariantError {
    /// The numeric oracle found two points whose generator values agree but
    /// whose orbits stay far apart under the grid minimization.
    #[error("separation failure: generator values agree but orbits stay {distance} apart")]
    SeparationFailure {
        witness: Box<(Point, Point)>,
        distance: f64,
    },
}

/// Exponent pair of an invariant monomial `z^a z̄^b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialExponent {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl MonomialExponent {
    pub fn total_degree(&self) -> u32 {
        self.a.iter().sum::<u32>() + self.b.iter().sum::<u32>()
    }

    /// The conjugate monomial `z^b z̄^a`.
    pub fn conjugate(&self) -> MonomialExponent {
        MonomialExponent {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.a == self.b
    }

    /// Exact invariance: `Σ α_i (a_i − b_i) = 0`.
    pub fn is_invariant_for(&self, w: &WeightVector) -> bool {
        w.entries()
            .iter()
            .zip(self.a.iter().zip(&self.b))
            .map(|(&alpha, (&ai, &bi))| alpha * (ai as i64 - bi as i64))
            .sum::<i64>()
            == 0
    }

    /// Graded-lexicographic order: total degree first, then lex on the
    /// concatenation `(a, b)`.
    fn graded_lex(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for MonomialExponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialExponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graded_lex(other)
    }
}

/// Minimal generating set of the invariant exponent monoid, in graded-lex
/// order. `complete` is false when the frontier was still growing at the
/// degree cap, in which case the basis may be missing generators beyond it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HilbertBasis {
    pub generators: Vec<MonomialExponent>,
    /// Number of real generators induced by the basis (one per
    /// self-conjugate generator, two per conjugate pair).
    pub k: usize,
    pub complete: bool,
}

impl HilbertBasis {
    /// The embedding dimension of the induced real quotient map.
    pub fn embedding_dim(&self) -> usize {
        self.k
    }
}

/// Degree cap that is empirically past the maximal generator degree for a
/// single weight equation: `2·Σ|α_i| + 2`.
pub fn default_degree_cap(w: &WeightVector) -> u32 {
    2 * w.entries().iter().map(|a| a.unsigned_abs() as u32).sum::<u32>() + 2
}

/// Computes the Hilbert basis of `{(a,b) ∈ N^{2n} : Σ α_i (a_i − b_i) = 0}`
/// by breadth-first completion with domination pruning.
///
/// The frontier grows one total degree per round; a vector extends only in
/// coordinate directions that move its defect toward zero, and is dropped
/// as soon as it dominates a known generator. The result is independent of
/// `degree_cap` once the cap exceeds the true maximal generator degree;
/// exhausting the cap with a live frontier is reported via
/// `complete = false` rather than an error.
pub fn invariant_monoid_basis(w: &WeightVector, degree_cap: u32) -> HilbertBasis {
    let n = w.len();
    // coefficient vector of the single equation over (a, b)
    let c: Vec<i64> = w
        .entries()
        .iter()
        .copied()
        .chain(w.entries().iter().map(|&a| -a))
        .collect();
    let dim = 2 * n;

    let defect = |u: &[u32]| -> i64 {
        u.iter()
            .zip(&c)
            .map(|(&ui, &ci)| ui as i64 * ci)
            .sum::<i64>()
    };

    let mut basis: Vec<Vec<u32>> = Vec::new();
    let mut frontier: BTreeSet<Vec<u32>> = (0..dim)
        .map(|k| {
            let mut e = vec![0u32; dim];
            e[k] = 1;
            e
        })
        .collect();

    let mut level = 1u32;
    let complete = loop {
        if frontier.is_empty() {
            break true;
        }
        if level > degree_cap {
            break false;
        }
        let (solutions, open): (Vec<Vec<u32>>, Vec<Vec<u32>>) =
            frontier.iter().cloned().partition(|u| defect(u) == 0);
        // solutions at this level are pairwise incomparable and not
        // dominated by earlier generators, hence minimal
        basis.extend(solutions);
        let mut next = BTreeSet::new();
        for u in open {
            let d = defect(&u);
            for k in 0..dim {
                if d * c[k] < 0 {
                    let mut v = u.clone();
                    v[k] += 1;
                    if !basis.iter().any(|b| dominates(&v, b)) {
                        next.insert(v);
                    }
                }
            }
        }
        frontier = next;
        level += 1;
    };

    let mut generators: Vec<MonomialExponent> = basis
        .into_iter()
        .map(|u| MonomialExponent {
            a: u[..n].to_vec(),
            b: u[n..].to_vec(),
        })
        .collect();
    generators.sort();
    let k = count_real_generators(&generators);
    HilbertBasis {
        generators,
        k,
        complete,
    }
}

fn dominates(v: &[u32], b: &[u32]) -> bool {
    v.iter().zip(b).all(|(x, y)| x >= y)
}

fn count_real_generators(generators: &[MonomialExponent]) -> usize {
    // One modulus per self-conjugate generator and a Re/Im pair per
    // conjugate pair; the basis is conjugation-closed, so this is exactly
    // the generator count.
    generators.len()
}

/// One real-valued generator of the quotient embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub enum RealGenerator {
    /// `|z|^{2a} = Π |z_i|^{2 a_i}` from a self-conjugate exponent.
    Modulus { a: Vec<u32> },
    /// `Re(z^a z̄^b)` from a conjugate pair.
    RealPart { a: Vec<u32>, b: Vec<u32> },
    /// `Im(z^a z̄^b)` from a conjugate pair.
    ImagPart { a: Vec<u32>, b: Vec<u32> },
}

impl RealGenerator {
    pub fn evaluate(&self, z: &Point) -> f64 {
        match self {
            RealGenerator::Modulus { a } => a
                .iter()
                .zip(&z.0)
                .map(|(&ai, zi)| zi.norm_sqr().powi(ai as i32))
                .product(),
            RealGenerator::RealPart { a, b } => monomial_value(a, b, z).re,
            RealGenerator::ImagPart { a, b } => monomial_value(a, b, z).im,
        }
    }
}

impl std::fmt::Display for RealGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn powers(prefix: &str, exps: &[u32], out: &mut Vec<String>) {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => out.push(format!("{prefix}{}", i + 1)),
                    _ => out.push(format!("{prefix}{}^{e}", i + 1)),
                }
            }
        }
        match self {
            RealGenerator::Modulus { a } => {
                let mut parts = Vec::new();
                for (i, &e) in a.iter().enumerate() {
                    if e > 0 {
                        parts.push(format!("|z{}|^{}", i + 1, 2 * e));
                    }
                }
                write!(f, "{}", parts.join(" "))
            }
            RealGenerator::RealPart { a, b } | RealGenerator::ImagPart { a, b } => {
                let mut parts = Vec::new();
                powers("z", a, &mut parts);
                powers("zb", b, &mut parts);
                let tag = if matches!(self, RealGenerator::RealPart { .. }) {
                    "Re"
                } else {
                    "Im"
                };
                write!(f, "{tag}({})", parts.join(" "))
            }
        }
    }
}

fn monomial_value(a: &[u32], b: &[u32], z: &Point) -> Complex64 {
    let mut v = Complex64::new(1.0, 0.0);
    for ((&ai, &bi), zi) in a.iter().zip(b).zip(&z.0) {
        v *= zi.powi(ai as i32) * zi.conj().powi(bi as i32);
    }
    v
}

/// Expands a Hilbert basis into the real generator list of the quotient
/// embedding: one modulus per self-conjugate generator, a Re/Im pair per
/// conjugate pair (Re first).
pub fn real_generators(h: &HilbertBasis) -> Vec<RealGenerator> {
    let mut out = Vec::new();
    let mut seen: BTreeSet<&MonomialExponent> = BTreeSet::new();
    for g in &h.generators {
        if g.is_self_conjugate() {
            out.push(RealGenerator::Modulus { a: g.a.clone() });
        } else if !seen.contains(g) {
            let conj = g.conjugate();
            out.push(RealGenerator::RealPart {
                a: g.a.clone(),
                b: g.b.clone(),
            });
            out.push(RealGenerator::ImagPart {
                a: g.a.clone(),
                b: g.b.clone(),
            });
            seen.insert(h.generators.iter().find(|x| **x == conj).unwrap_or(g));
        }
    }
    out
}

/// Outcome of the numeric embedding oracle.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeparationReport {
    pub trials: usize,
    /// Pairs constructed on the same orbit (invariance direction).
    pub same_orbit_pairs: usize,
    /// Pairs whose generator values matched and had to be explained by
    /// orbit proximity.
    pub matched_pairs: usize,
    pub max_same_orbit_value_gap: f64,
    pub max_matched_orbit_distance: f64,
}

/// Random two-sided check that the real generators separate orbits.
///
/// For each trial the oracle checks both directions: a pair on the same
/// orbit must agree on every generator to `1e-9`, and a pair agreeing on
/// every generator to `1e-6` must have orbits that approach each other
/// under minimization over a circle grid of 2048 angles. The distance
/// threshold is dominated by the grid resolution.
pub fn embedding_separation_check(
    w: &WeightVector,
    gens: &[RealGenerator],
    trials: usize,
    seed: u64,
) -> Result<SeparationReport, InvariantError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = w.len();
    let mut report = SeparationReport {
        trials,
        same_orbit_pairs: 0,
        matched_pairs: 0,
        max_same_orbit_value_gap: 0.0,
        max_matched_orbit_distance: 0.0,
    };
    for trial in 0..trials {
        let z = random_point(n, &mut rng);
        // invariance direction: rotate within the orbit
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let z_rot = z.rotated(w, theta);
        report.same_orbit_pairs += 1;
        for g in gens {
            let gap = (g.evaluate(&z) - g.evaluate(&z_rot)).abs();
            report.max_same_orbit_value_gap = report.max_same_orbit_value_gap.max(gap);
            if gap > INVARIANCE_TOLERANCE {
                return Err(InvariantError::SeparationFailure {
                    witness: Box::new((z, z_rot)),
                    distance: gap,
                });
            }
        }
        // separation direction: alternate an independent point with a
        // disguised orbit mate so the matched branch is exercised
        let z2 = if trial % 2 == 0 {
            random_point(n, &mut rng)
        } else {
            z.rotated(w, rng.gen_range(0.0..std::f64::consts::TAU))
        };
        let all_match = gens
            .iter()
            .all(|g| (g.evaluate(&z) - g.evaluate(&z2)).abs() <= MATCH_TOLERANCE);
        if all_match {
            report.matched_pairs += 1;
            let dist = orbit_distance(w, &z, &z2);
            report.max_matched_orbit_distance = report.max_matched_orbit_distance.max(dist);
            let scale = 1.0 + z.0.iter().map(|c| c.norm()).fold(0.0, f64::max);
            if dist > 0.05 * scale {
                return Err(InvariantError::SeparationFailure {
                    witness: Box::new((z, z2)),
                    distance: dist,
                });
            }
        }
    }
    Ok(report)
}

/// Minimum distance between `z` and the orbit of `z2`, over the angle grid.
pub fn orbit_distance(w: &WeightVector, z: &Point, z2: &Point) -> f64 {
    (0..ORBIT_GRID)
        .map(|i| {
            let theta = std::f64::consts::TAU * i as f64 / ORBIT_GRID as f64;
            z.distance(&z2.rotated(w, theta))
        })
        .fold(f64::INFINITY, f64::min)
}

/// Gaussian point rescaled to a moderate norm so that high-degree monomial
/// evaluations keep well inside the stated tolerances.
fn random_point(n: usize, rng: &mut ChaCha8Rng) -> Point {
    let raw: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm: f64 = raw.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let target: f64 = rng.gen_range(0.3..1.4);
    let scale = if norm > 1e-9 { target / norm } else { 1.0 };
    Point(raw.into_iter().map(|c| c * scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightVector;

    fn w(raw: &[i64]) -> WeightVector {
        WeightVector::normalize_effective(raw).unwrap()
    }

    fn exp(a: &[u32], b: &[u32]) -> MonomialExponent {
        MonomialExponent {
            a: a.to_vec(),
            b: b.to_vec(),
        }
    }

    /// Brute-force minimal basis: enumerate every invariant exponent of
    /// total degree ≤ bound and drop the ones that split as a sum of two
    /// nonzero invariant exponents.
    pub(super) fn brute_force_basis(wv: &WeightVector, bound: u32) -> Vec<MonomialExponent> {
        let n = wv.len();
        let dim = 2 * n;
        let mut all: Vec<Vec<u32>> = Vec::new();
        let mut current = vec![0u32; dim];
        enumerate(&mut current, 0, bound, &mut |u| {
            let m = MonomialExponent {
                a: u[..n].to_vec(),
                b: u[n..].to_vec(),
            };
            if m.total_degree() > 0 && m.is_invariant_for(wv) {
                all.push(u.to_vec());
            }
        });
        let mut minimal: Vec<MonomialExponent> = all
            .iter()
            .filter(|u| {
                !all.iter().any(|v| {
                    v != *u
                        && v.iter().zip(u.iter()).all(|(x, y)| x <= y)
                        && v.iter().sum::<u32>() < u.iter().sum::<u32>()
                })
            })
            .map(|u| MonomialExponent {
                a: u[..n].to_vec(),
                b: u[n..].to_vec(),
            })
            .collect();
        minimal.sort();
        minimal
    }

    fn enumerate(current: &mut Vec<u32>, idx: usize, left: u32, f: &mut dyn FnMut(&[u32])) {
        if idx == current.len() {
            f(current);
            return;
        }
        for v in 0..=left {
            current[idx] = v;
            enumerate(current, idx + 1, left - v, f);
        }
        current[idx] = 0;
    }

    #[test]
    fn hyperbolic_pair_basis() {
        let basis = invariant_monoid_basis(&w(&[1, -1]), 6);
        assert!(basis.complete);
        let expected = vec![
            exp(&[0, 0], &[1, 1]),
            exp(&[0, 1], &[0, 1]),
            exp(&[1, 0], &[1, 0]),
            exp(&[1, 1], &[0, 0]),
        ];
        assert_eq!(basis.generators, expected);
        assert_eq!(basis.k, 4);
    }

    #[test]
    fn single_weight_basis() {
        let basis = invariant_monoid_basis(&w(&[1]), 4);
        assert!(basis.complete);
        assert_eq!(basis.generators, vec![exp(&[1], &[1])]);
        assert_eq!(basis.k, 1);
    }

    #[test]
    fn two_minus_three_basis() {
        let basis = invariant_monoid_basis(&w(&[2, -3]), default_degree_cap(&w(&[2, -3])));
        assert!(basis.complete);
        // graded-lex: the two degree-2 moduli precede the degree-5 pair
        let expected = vec![
            exp(&[0, 1], &[0, 1]),
            exp(&[1, 0], &[1, 0]),
            exp(&[0, 0], &[3, 2]),
            exp(&[3, 2], &[0, 0]),
        ];
        assert_eq!(basis.generators, expected);
        assert_eq!(basis.k, 4);
    }

    #[test]
    fn degree_cap_too_low_is_flagged_not_silent() {
        let basis = invariant_monoid_basis(&w(&[2, -3]), 2);
        assert!(!basis.complete);
        // the degree-2 generators are still there
        assert!(basis.generators.contains(&exp(&[1, 0], &[1, 0])));
    }

    #[test]
    fn completion_matches_brute_force_small_range() {
        // fast subset of the acceptance sweep
        for raw in [
            vec![1i64, -1],
            vec![2, -3],
            vec![1, -2],
            vec![3, -4],
            vec![1, 1, -2],
            vec![2, -2, 3],
            vec![1, 0, -1],
        ] {
            let wv = w(&raw);
            let max_abs = wv.entries().iter().map(|a| a.unsigned_abs() as u32).max().unwrap();
            let bound = 2 * max_abs + 2;
            let basis = invariant_monoid_basis(&wv, default_degree_cap(&wv));
            assert!(basis.complete, "w={raw:?}");
            assert_eq!(basis.generators, brute_force_basis(&wv, bound), "w={raw:?}");
        }
    }

    #[test]
    fn basis_is_conjugation_closed_and_exactly_invariant() {
        for raw in [vec![1i64, -1], vec![2, -3], vec![1, 2, -2], vec![4, -3, 0]] {
            let wv = w(&raw);
            let basis = invariant_monoid_basis(&wv, default_degree_cap(&wv));
            for g in &basis.generators {
                assert!(g.is_invariant_for(&wv));
                assert!(basis.generators.contains(&g.conjugate()));
            }
        }
    }

    #[test]
    fn zero_weight_adds_exactly_two_real_generators() {
        for raw in [vec![1i64, -1], vec![2, -3], vec![3, -4, 2]] {
            let wv = w(&raw);
            let mut with_zero = raw.clone();
            with_zero.push(0);
            let wz = w(&with_zero);
            let k0 = invariant_monoid_basis(&wv, default_degree_cap(&wv)).k;
            let k1 = invariant_monoid_basis(&wz, default_degree_cap(&wz)).k;
            assert_eq!(k1, k0 + 2, "w={raw:?}");
        }
    }

    #[test]
    fn real_generator_list_for_hyperbolic_pair() {
        let basis = invariant_monoid_basis(&w(&[1, -1]), 6);
        let gens = real_generators(&basis);
        assert_eq!(gens.len(), 4);
        let rendered: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert!(rendered.contains(&"|z1|^2".to_string()));
        assert!(rendered.contains(&"|z2|^2".to_string()));
        // conjugate pair appears as a Re/Im pair with Re first
        let re_pos = rendered.iter().position(|s| s.starts_with("Re(")).unwrap();
        let im_pos = rendered.iter().position(|s| s.starts_with("Im(")).unwrap();
        assert_eq!(im_pos, re_pos + 1);
    }

    #[test]
    fn real_generator_count_matches_k() {
        for raw in [vec![1i64, -1], vec![2, -3], vec![1, 1, -2], vec![1, -1, 0]] {
            let wv = w(&raw);
            let basis = invariant_monoid_basis(&wv, default_degree_cap(&wv));
            assert_eq!(real_generators(&basis).len(), basis.k);
        }
    }

    #[test]
    fn rotation_preserves_generator_values() {
        let wv = w(&[1, -1]);
        let basis = invariant_monoid_basis(&wv, 6);
        let gens = real_generators(&basis);
        let z = Point::from(vec![(0.7, 0.2), (-0.3, 0.5)]);
        let z_rot = z.rotated(&wv, 1.0);
        for g in &gens {
            assert!((g.evaluate(&z) - g.evaluate(&z_rot)).abs() < 1e-12);
        }
    }

    #[test]
    fn moduli_separate_the_axes() {
        let wv = w(&[1, -1]);
        let basis = invariant_monoid_basis(&wv, 6);
        let gens = real_generators(&basis);
        let z1 = Point::from(vec![(1.0, 0.0), (0.0, 0.0)]);
        let z2 = Point::from(vec![(0.0, 0.0), (1.0, 0.0)]);
        assert!(gens
            .iter()
            .any(|g| (g.evaluate(&z1) - g.evaluate(&z2)).abs() > 0.5));
    }

    #[test]
    fn separation_oracle_runs_clean() {
        let wv = w(&[2, -3]);
        let basis = invariant_monoid_basis(&wv, default_degree_cap(&wv));
        let gens = real_generators(&basis);
        let report = embedding_separation_check(&wv, &gens, 200, 7).unwrap();
        assert_eq!(report.trials, 200);
        assert!(report.matched_pairs > 0, "matched branch must be exercised");
        assert!(report.max_same_orbit_value_gap <= INVARIANCE_TOLERANCE);
    }

    #[test]
    fn basis_json_shape() {
        let basis = invariant_monoid_basis(&w(&[1, -1]), 6);
        let json = serde_json::to_value(&basis).unwrap();
        assert!(json.get("generators").is_some());
        assert_eq!(json.get("k").unwrap(), 4);
        assert_eq!(json.get("complete").unwrap(), true);
        let back: HilbertBasis = serde_json::from_value(json).unwrap();
        assert_eq!(back, basis);
    }
}
