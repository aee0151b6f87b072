//! The quadratic momentum map of a linear circle action and the geometry
//! of its zero fiber.
//!
//! For weights `(α_1,…,α_n)` the momentum map is `Φ(z) = ½ Σ α_i |z_i|²`.
//! With `m` negative and `j−m` positive weights among the `j` nonzero ones,
//! the zero fiber is a point (`j = n`, one-sided), a flat factor `C^{n−j}`
//! (one-sided with zero weights), or the cone over a product of ellipsoids
//! times the flat factor. Only the diffeomorphism type of the ellipsoids is
//! recorded: they are spheres of dimensions `2m−1` and `2(j−m)−1`.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weights::WeightVector;

/// Absolute tolerance for membership in the zero fiber.
pub const FIBER_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MomentumError {
    #[error("point has {got} coordinates but the weight vector has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    /// The requested level does not meet the image of the momentum map
    /// (for example a positive level with all weights negative).
    #[error("level set is empty: no weight has the sign of the level")]
    EmptyLevelSet,
}

/// A point of `C^n`, stored as complex coordinates. Serialized as an array
/// of `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(pub Vec<Complex64>);

impl Point {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Scalar rescaling `t·z`.
    pub fn scaled(&self, t: f64) -> Point {
        Point(self.0.iter().map(|z| z * t).collect())
    }

    /// The action applied at angle `θ`: the i-th coordinate rotates with
    /// speed `α_i`.
    pub fn rotated(&self, w: &WeightVector, theta: f64) -> Point {
        Point(
            self.0
                .iter()
                .zip(w.entries())
                .map(|(z, &a)| z * Complex64::from_polar(1.0, a as f64 * theta))
                .collect(),
        )
    }

    /// Euclidean distance in `C^n ≅ R^{2n}`.
    pub fn distance(&self, other: &Point) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

impl From<Vec<(f64, f64)>> for Point {
    fn from(pairs: Vec<(f64, f64)>) -> Self {
        Point(pairs.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.0.iter().map(|z| [z.re, z.im]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let pairs = Vec::<[f64; 2]>::deserialize(deserializer)?;
        Ok(Point(
            pairs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect(),
        ))
    }
}

/// Evaluates `Φ(z) = ½ Σ α_i |z_i|²`.
pub fn momentum(w: &WeightVector, z: &Point) -> Result<f64, MomentumError> {
    if z.len() != w.len() {
        return Err(MomentumError::DimensionMismatch {
            expected: w.len(),
            got: z.len(),
        });
    }
    Ok(0.5
        * w.entries()
            .iter()
            .zip(&z.0)
            .map(|(&a, zi)| a as f64 * zi.norm_sqr())
            .sum::<f64>())
}

/// A level `a` is regular iff the fixed-point set misses `Φ⁻¹(a)`. The
/// fixed set of the linear model sits inside `Φ⁻¹(0)`, so this is `a ≠ 0`.
pub fn is_regular_value(_w: &WeightVector, a: f64) -> bool {
    a != 0.0
}

/// Diffeomorphism type of the zero fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberKind {
    /// `Φ⁻¹(0) = {0}`: all weights nonzero and one-sided.
    #[serde(rename = "POINT_FIBER")]
    PointFiber,
    /// `Φ⁻¹(0) = C^{n−j}`: one-sided with zero weights present.
    #[serde(rename = "FLAT_FIBER")]
    FlatFiber,
    /// `Φ⁻¹(0) = Cone(S^{l−} × S^{l+}) × C^{n−j}`: mixed signs.
    #[serde(rename = "CONE")]
    Cone,
}

/// Structure of `Φ⁻¹(0)` for an effective weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct ConeLinkDecomposition {
    pub kind: FiberKind,
    /// Number of negative weights.
    pub m: usize,
    /// `2m − 1`; the negative ellipsoid is a sphere of this dimension
    /// (−1 denotes the empty sphere when there are no negative weights).
    pub l_minus: i64,
    /// `2(j−m) − 1` for `j` nonzero weights.
    pub l_plus: i64,
    /// Real dimension `2(n−j)` of the flat factor of zero-weight directions.
    pub flat_factor_dim: usize,
}

impl ConeLinkDecomposition {
    /// Symbolic record of the link of the cone point, when there is one.
    pub fn link_description(&self) -> Option<String> {
        match self.kind {
            FiberKind::Cone => Some(format!(
                "(S^{} x S^{})/S^1",
                self.l_minus, self.l_plus
            )),
            _ => None,
        }
    }

    /// The two link sphere dimensions in ascending order.
    pub fn link_dims_sorted(&self) -> Option<(u32, u32)> {
        match self.kind {
            FiberKind::Cone => {
                let lo = self.l_minus.min(self.l_plus);
                let hi = self.l_minus.max(self.l_plus);
                Some((lo as u32, hi as u32))
            }
            _ => None,
        }
    }
}

/// Computes the cone/link structure of the zero fiber.
pub fn cone_link_decomposition(w: &WeightVector) -> ConeLinkDecomposition {
    let profile = w.classify_signs();
    let m = profile.num_negative;
    let j = profile.num_negative + profile.num_positive;
    let n = w.len();
    let kind = if profile.is_mixed() {
        FiberKind::Cone
    } else if j == n {
        FiberKind::PointFiber
    } else {
        FiberKind::FlatFiber
    };
    ConeLinkDecomposition {
        kind,
        m,
        l_minus: 2 * m as i64 - 1,
        l_plus: 2 * (j - m) as i64 - 1,
        flat_factor_dim: 2 * (n - j),
    }
}

/// Real dimension of the symplectic quotient `Φ⁻¹(a)/S¹`.
///
/// At `a = 0` with mixed nonzero weights the generic stabilizer on the
/// fiber is finite, so the quotient loses one dimension: `2(n−j) + 2j − 2`.
/// One-sided actions give the flat quotient `C^{n−j}`. A regular level
/// gives `2n − 2`.
pub fn reduced_dimension(w: &WeightVector, a: f64) -> Result<usize, MomentumError> {
    let profile = w.classify_signs();
    let n = w.len();
    let j = profile.num_negative + profile.num_positive;
    if a == 0.0 {
        if profile.is_mixed() {
            Ok(2 * (n - j) + 2 * j - 2)
        } else {
            Ok(2 * (n - j))
        }
    } else {
        let attainable = (a > 0.0 && profile.num_positive > 0)
            || (a < 0.0 && profile.num_negative > 0);
        if !attainable {
            return Err(MomentumError::EmptyLevelSet);
        }
        Ok(2 * n - 2)
    }
}

/// Draws `count` points of the zero fiber, deterministically for a fixed
/// seed.
///
/// Mixed-sign vectors are sampled by rescaling standard Gaussian draws
/// onto each ellipsoid of the link and stretching by a cone parameter
/// `t ≥ 0`; the construction is rejection-free and every output satisfies
/// `|Φ(z)| ≤ 1e-9`. Zero-weight directions are sampled freely. One-sided
/// vectors yield the degenerate fiber (the flat factor, or the origin).
pub fn sample_zero_fiber(w: &WeightVector, count: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = w.len();
    let profile = w.classify_signs();
    let mixed = profile.is_mixed();
    let mut points = Vec::with_capacity(count);
    for _ in 0..count {
        let mut z = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            if w.entries()[i] == 0 {
                z[i] = Complex64::new(standard_normal(&mut rng), standard_normal(&mut rng));
            }
        }
        if mixed {
            let neg: Vec<usize> = (0..n).filter(|&i| w.entries()[i] < 0).collect();
            let pos: Vec<usize> = (0..n).filter(|&i| w.entries()[i] > 0).collect();
            let t: f64 = rng.gen_range(0.0..2.0);
            fill_ellipsoid(w, &neg, t, &mut z, &mut rng);
            fill_ellipsoid(w, &pos, t, &mut z, &mut rng);
        }
        points.push(Point(z));
    }
    points
}

/// Scales a Gaussian draw on the given coordinates onto the ellipsoid
/// `Σ |α_i| |z_i|² = t²`.
fn fill_ellipsoid(
    w: &WeightVector,
    idx: &[usize],
    t: f64,
    z: &mut [Complex64],
    rng: &mut ChaCha8Rng,
) {
    loop {
        let draws: Vec<Complex64> = idx
            .iter()
            .map(|_| Complex64::new(standard_normal(rng), standard_normal(rng)))
            .collect();
        let s: f64 = idx
            .iter()
            .zip(&draws)
            .map(|(&i, g)| w.entries()[i].unsigned_abs() as f64 * g.norm_sqr())
            .sum();
        if s > 1e-12 {
            let scale = t / s.sqrt();
            for (&i, g) in idx.iter().zip(&draws) {
                z[i] = g * scale;
            }
            return;
        }
        // astronomically unlikely Gaussian draw at the origin; redraw
    }
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; one value per draw keeps the stream layout simple.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightVector;

    fn w(raw: &[i64]) -> WeightVector {
        WeightVector::normalize_effective(raw).unwrap()
    }

    fn p(coords: &[(f64, f64)]) -> Point {
        Point::from(coords.to_vec())
    }

    #[test]
    fn momentum_examples() {
        assert_eq!(
            momentum(&w(&[1, -1]), &p(&[(1.0, 0.0), (1.0, 0.0)])).unwrap(),
            0.0
        );
        assert_eq!(
            momentum(&w(&[2, 3]), &p(&[(1.0, 0.0), (0.0, 0.0)])).unwrap(),
            1.0
        );
        let sqrt2 = 2f64.sqrt();
        let v = momentum(&w(&[-1, 1, 1]), &p(&[(sqrt2, 0.0), (1.0, 0.0), (0.0, 0.0)])).unwrap();
        assert!((v + 0.5).abs() < 1e-15);
    }

    #[test]
    fn momentum_rejects_dimension_mismatch() {
        assert_eq!(
            momentum(&w(&[1, -1]), &p(&[(1.0, 0.0)])),
            Err(MomentumError::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn regular_values() {
        assert!(is_regular_value(&w(&[1, -1]), 0.5));
        assert!(!is_regular_value(&w(&[1, 1]), 0.0));
        assert!(!is_regular_value(&w(&[1, -1, 0]), 0.0));
    }

    #[test]
    fn decomposition_examples() {
        let d = cone_link_decomposition(&w(&[-1, 1, 1]));
        assert_eq!(d.kind, FiberKind::Cone);
        assert_eq!((d.m, d.l_minus, d.l_plus, d.flat_factor_dim), (1, 1, 3, 0));
        assert_eq!(d.link_description().unwrap(), "(S^1 x S^3)/S^1");

        let d = cone_link_decomposition(&w(&[1, 1]));
        assert_eq!(d.kind, FiberKind::PointFiber);

        let d = cone_link_decomposition(&w(&[1, 2, 0]));
        assert_eq!(d.kind, FiberKind::FlatFiber);
        assert_eq!(d.flat_factor_dim, 2);
    }

    #[test]
    fn decomposition_dimension_ledger() {
        // For a cone, lMinus + lPlus + 1 + flat = 2n − 1 = dim Φ⁻¹(0).
        for raw in [vec![1i64, -1], vec![2, -3, 5], vec![1, 1, -1, -1, 0]] {
            let wv = w(&raw);
            let d = cone_link_decomposition(&wv);
            if d.kind == FiberKind::Cone {
                assert_eq!(
                    d.l_minus + d.l_plus + 1 + d.flat_factor_dim as i64,
                    2 * wv.len() as i64 - 1
                );
            }
        }
    }

    #[test]
    fn negation_swaps_link_spheres() {
        for raw in [vec![1i64, -1], vec![-1, 2, 3], vec![1, 1, -2, 0]] {
            let wv = w(&raw);
            let d = cone_link_decomposition(&wv);
            let dn = cone_link_decomposition(&wv.negated());
            assert_eq!(d.kind, dn.kind);
            assert_eq!(d.l_minus, dn.l_plus);
            assert_eq!(d.l_plus, dn.l_minus);
            assert_eq!(d.flat_factor_dim, dn.flat_factor_dim);
        }
    }

    #[test]
    fn reduced_dimensions() {
        assert_eq!(reduced_dimension(&w(&[1, -1]), 0.0).unwrap(), 2);
        assert_eq!(reduced_dimension(&w(&[1, 1, -1, -1]), 0.0).unwrap(), 6);
        assert_eq!(reduced_dimension(&w(&[1, 2]), 0.0).unwrap(), 0);
        assert_eq!(reduced_dimension(&w(&[1, 2]), 0.5).unwrap(), 2);
        assert_eq!(
            reduced_dimension(&w(&[1, 2]), -0.5),
            Err(MomentumError::EmptyLevelSet)
        );
    }

    #[test]
    fn reduced_dimension_matches_fiber_dimension() {
        // dim Φ⁻¹(0) − 1 for mixed signs (finite generic stabilizer),
        // dim Φ⁻¹(0) for one-sided weights.
        for raw in [vec![1i64, -1], vec![2, -3, 0], vec![1, 2], vec![1, 2, 0]] {
            let wv = w(&raw);
            let d = cone_link_decomposition(&wv);
            let fiber_dim = match d.kind {
                FiberKind::Cone => d.l_minus + d.l_plus + 1 + d.flat_factor_dim as i64,
                _ => d.flat_factor_dim as i64,
            };
            let expected = match d.kind {
                FiberKind::Cone => fiber_dim - 1,
                _ => fiber_dim,
            };
            assert_eq!(reduced_dimension(&wv, 0.0).unwrap() as i64, expected);
        }
    }

    #[test]
    fn sampler_hits_fiber() {
        let wv = w(&[1, -1]);
        let pts = sample_zero_fiber(&wv, 1, 0);
        assert_eq!(pts.len(), 1);
        let z = &pts[0];
        assert!((z.0[0].norm() - z.0[1].norm()).abs() < 1e-9);

        for z in sample_zero_fiber(&w(&[-1, 2]), 100, 7) {
            assert!(momentum(&w(&[-1, 2]), &z).unwrap().abs() <= FIBER_TOLERANCE);
            assert!((2.0 * z.0[1].norm_sqr() - z.0[0].norm_sqr()).abs() < 1e-9);
        }
    }

    #[test]
    fn sampler_degenerate_fiber_is_origin() {
        let wv = w(&[1, 1]);
        for z in sample_zero_fiber(&wv, 3, 42) {
            assert_eq!(z, p(&[(0.0, 0.0), (0.0, 0.0)]));
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let wv = w(&[2, -3, 0]);
        assert_eq!(sample_zero_fiber(&wv, 10, 5), sample_zero_fiber(&wv, 10, 5));
        assert_ne!(sample_zero_fiber(&wv, 10, 5), sample_zero_fiber(&wv, 10, 6));
    }

    #[test]
    fn homogeneity_and_cone_closure() {
        let wv = w(&[2, -3, 0, 1]);
        for (idx, z) in sample_zero_fiber(&wv, 50, 11).into_iter().enumerate() {
            let base = momentum(&wv, &z).unwrap();
            for t in [0.0, 0.5, 2.0] {
                let scaled = momentum(&wv, &z.scaled(t)).unwrap();
                assert!(
                    (scaled - t * t * base).abs() <= 1e-12,
                    "sample {idx}, t={t}"
                );
            }
            // cone closure: the fiber is invariant under t ≥ 0 scaling
            assert!(momentum(&wv, &z.scaled(1.7)).unwrap().abs() <= 1e-9);
        }
    }

    #[test]
    fn point_json_shape() {
        let z = p(&[(1.0, 2.0), (0.0, -1.0)]);
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            "[[1.0,2.0],[0.0,-1.0]]"
        );
        let back: Point = serde_json::from_str("[[1.0,2.0],[0.0,-1.0]]").unwrap();
        assert_eq!(back, z);
    }
}
