//! Weight vectors of linear circle actions and their orbit-type data.
//!
//! A weight vector is stored in *effective normal form*: the gcd of the
//! absolute values of its nonzero entries is 1. Entry order is preserved,
//! since index identity matters for supports and strata.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    /// Every entry of the raw weight list is zero; the circle would act
    /// trivially and no effective normalization exists.
    #[error("all weights are zero: no effective circle action")]
    AllZeroWeights,
    /// The raw weight list is empty.
    #[error("weight vector must have at least one entry")]
    Empty,
}

/// An effective integer weight vector `(α_1, …, α_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector {
    entries: Vec<i64>,
}

impl WeightVector {
    /// Normalizes a raw integer list to effective form by dividing out the
    /// gcd of the absolute values of the nonzero entries. Idempotent.
    pub fn normalize_effective(raw: &[i64]) -> Result<Self, WeightError> {
        if raw.is_empty() {
            return Err(WeightError::Empty);
        }
        let g = raw
            .iter()
            .filter(|&&a| a != 0)
            .fold(0i64, |acc, &a| acc.gcd(&a.abs()));
        if g == 0 {
            return Err(WeightError::AllZeroWeights);
        }
        Ok(WeightVector {
            entries: raw.iter().map(|&a| a / g).collect(),
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The same action run backwards: every weight negated.
    pub fn negated(&self) -> WeightVector {
        WeightVector {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn classify_signs(&self) -> SignProfile {
        let mut profile = SignProfile {
            num_negative: 0,
            num_zero: 0,
            num_positive: 0,
        };
        for &a in &self.entries {
            match a.signum() {
                -1 => profile.num_negative += 1,
                0 => profile.num_zero += 1,
                _ => profile.num_positive += 1,
            }
        }
        profile
    }

    /// 0-based indices carrying a nonzero weight.
    pub fn nonzero_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i] != 0).collect()
    }

    /// 0-based indices carrying weight zero (the flat directions).
    pub fn zero_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i] == 0).collect()
    }

    /// Stabilizer of a point supported exactly on `support`.
    ///
    /// The full circle fixes the point iff every supported weight vanishes
    /// (in particular for the origin); otherwise the stabilizer is the
    /// cyclic group of order `gcd{|α_i| : i ∈ support, α_i ≠ 0}`.
    ///
    /// Panics if `support` mentions an index `≥ n`.
    pub fn stabilizer(&self, support: &Support) -> Stabilizer {
        let mut g: u64 = 0;
        for &i in support.indices() {
            assert!(i < self.len(), "support index {i} out of range");
            g = g.gcd(&(self.entries[i].unsigned_abs()));
        }
        if g == 0 {
            Stabilizer::FullCircle
        } else {
            Stabilizer::Cyclic(g)
        }
    }

    /// Enumerates the orbit-type strata of the action, one descriptor per
    /// stabilizer class, with dimensions and frontier depth populated.
    ///
    /// The stratum with stabilizer `Z_g` consists of points supported (on
    /// the nonzero-weight side) exactly on indices whose weight `g`
    /// divides; the flat zero-weight directions are free in every stratum.
    pub fn enumerate_orbit_types(&self) -> Vec<StratumDescriptor> {
        let zero: BTreeSet<usize> = self.zero_indices().into_iter().collect();
        let nonzero = self.nonzero_indices();

        // Realized finite stabilizer orders: d is realized iff the set
        // D_d = {i : d | α_i, α_i ≠ 0} is nonempty with gcd exactly d.
        // Every candidate d divides some |α_i|.
        let mut candidates: BTreeSet<u64> = BTreeSet::new();
        for &i in &nonzero {
            let a = self.entries[i].unsigned_abs();
            let mut d = 1;
            while d * d <= a {
                if a % d == 0 {
                    candidates.insert(d);
                    candidates.insert(a / d);
                }
                d += 1;
            }
        }

        let mut strata = Vec::new();
        for &d in &candidates {
            let divisible: Vec<usize> = nonzero
                .iter()
                .copied()
                .filter(|&i| self.entries[i].unsigned_abs() % d == 0)
                .collect();
            if divisible.is_empty() {
                continue;
            }
            let g = divisible
                .iter()
                .fold(0u64, |acc, &i| acc.gcd(&self.entries[i].unsigned_abs()));
            if g != d {
                continue;
            }
            let mut max_support: BTreeSet<usize> = zero.clone();
            max_support.extend(divisible.iter().copied());
            let dim_m = 2 * max_support.len();
            strata.push(StratumDescriptor {
                stabilizer: Stabilizer::Cyclic(d),
                max_support: Support::from_indices(max_support),
                dimension_in_m: dim_m,
                dimension_in_quotient: dim_m - 1,
                depth: 0,
            });
        }

        // Fixed-point stratum: all points supported inside the flat factor.
        let dim_fixed = 2 * zero.len();
        strata.push(StratumDescriptor {
            stabilizer: Stabilizer::FullCircle,
            max_support: Support::from_indices(zero),
            dimension_in_m: dim_fixed,
            dimension_in_quotient: dim_fixed,
            depth: 0,
        });

        populate_depths(&mut strata);
        strata.sort_by_key(|s| (s.depth, s.stabilizer.sort_key()));
        strata
    }
}

impl TryFrom<Vec<i64>> for WeightVector {
    type Error = WeightError;

    fn try_from(raw: Vec<i64>) -> Result<Self, WeightError> {
        WeightVector::normalize_effective(&raw)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        WeightVector::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Sign census of a weight vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct SignProfile {
    pub num_negative: usize,
    pub num_zero: usize,
    pub num_positive: usize,
}

impl SignProfile {
    /// True iff the nonzero weights occur with both signs.
    pub fn is_mixed(&self) -> bool {
        self.num_negative >= 1 && self.num_positive >= 1
    }
}

/// Stabilizer subgroup of the circle at a point of `C^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stabilizer {
    /// The whole circle fixes the point.
    FullCircle,
    /// The cyclic subgroup of the given order (order 1 = trivial).
    Cyclic(u64),
}

impl Stabilizer {
    /// Finite order, or `None` for the full circle.
    pub fn order(&self) -> Option<u64> {
        match self {
            Stabilizer::FullCircle => None,
            Stabilizer::Cyclic(g) => Some(*g),
        }
    }

    /// Subgroup containment inside the circle: `Z_a ⊇ Z_b` iff `b | a`,
    /// with the full circle on top.
    pub fn contains(&self, other: &Stabilizer) -> bool {
        match (self, other) {
            (Stabilizer::FullCircle, _) => true,
            (Stabilizer::Cyclic(_), Stabilizer::FullCircle) => false,
            (Stabilizer::Cyclic(a), Stabilizer::Cyclic(b)) => a % b == 0,
        }
    }

    fn sort_key(&self) -> u64 {
        match self {
            Stabilizer::Cyclic(g) => *g,
            Stabilizer::FullCircle => u64::MAX,
        }
    }
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stabilizer::FullCircle => write!(f, "FULL_CIRCLE"),
            Stabilizer::Cyclic(g) => write!(f, "Z_{g}"),
        }
    }
}

impl Serialize for Stabilizer {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Stabilizer::FullCircle => serializer.serialize_str("FULL_CIRCLE"),
            Stabilizer::Cyclic(g) => serializer.serialize_u64(*g),
        }
    }
}

/// A set of 0-based coordinate indices. Serialized as a sorted array of
/// 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Support(BTreeSet<usize>);

impl Support {
    pub fn empty() -> Self {
        Support(BTreeSet::new())
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Support(indices.into_iter().collect())
    }

    /// Builds from 1-based indices as used in the JSON interface.
    pub fn from_indices_1based<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Support(
            indices
                .into_iter()
                .map(|i| i.checked_sub(1).expect("1-based index must be positive"))
                .collect(),
        )
    }

    pub fn indices(&self) -> impl Iterator<Item = &usize> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Support) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_strict_subset(&self, other: &Support) -> bool {
        self.0.is_subset(&other.0) && self.0.len() < other.0.len()
    }
}

impl Serialize for Support {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.0.iter().map(|i| i + 1).collect();
        one_based.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Support {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let one_based = Vec::<usize>::deserialize(deserializer)?;
        if one_based.iter().any(|&i| i == 0) {
            return Err(serde::de::Error::custom("support indices are 1-based"));
        }
        Ok(Support::from_indices_1based(one_based))
    }
}

/// One orbit-type stratum of the stratification, identified by its
/// stabilizer class. Supports with the same stabilizer are merged; the
/// class is recorded by its maximal support set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StratumDescriptor {
    /// `FULL_CIRCLE` exactly for the fixed-point stratum.
    pub stabilizer: Stabilizer,
    /// Union of all supports realizing this stabilizer class.
    pub max_support: Support,
    /// Real dimension of the orbit-type subset of `C^n`.
    pub dimension_in_m: usize,
    /// Real dimension of its image in the quotient (drops by one for the
    /// strata with finite stabilizer, where orbits are circles).
    pub dimension_in_quotient: usize,
    /// Length of the longest ascending frontier chain starting here.
    pub depth: usize,
}

/// Frontier partial order: `a < b` iff `a` lies in the closure of `b`,
/// which for these strata is strict containment of maximal supports.
pub fn frontier_lt(a: &StratumDescriptor, b: &StratumDescriptor) -> bool {
    a.max_support.is_strict_subset(&b.max_support)
}

fn populate_depths(strata: &mut [StratumDescriptor]) {
    let n = strata.len();
    let mut depth = vec![None; n];
    fn longest(i: usize, strata: &[StratumDescriptor], depth: &mut Vec<Option<usize>>) -> usize {
        if let Some(d) = depth[i] {
            return d;
        }
        let mut best = 0;
        for j in 0..strata.len() {
            if i != j && frontier_lt(&strata[i], &strata[j]) {
                best = best.max(1 + longest(j, strata, depth));
            }
        }
        depth[i] = Some(best);
        best
    }
    for i in 0..n {
        let d = longest(i, strata, &mut depth);
        strata[i].depth = d;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn w(raw: &[i64]) -> WeightVector {
        WeightVector::normalize_effective(raw).unwrap()
    }

    #[test]
    fn normalize_divides_by_gcd() {
        assert_eq!(w(&[2, 4, -6]).entries(), &[1, 2, -3]);
        assert_eq!(w(&[1, -1]).entries(), &[1, -1]);
        assert_eq!(w(&[0, 3, 0, -6]).entries(), &[0, 1, 0, -2]);
    }

    #[test]
    fn normalize_rejects_degenerate_input() {
        assert_eq!(
            WeightVector::normalize_effective(&[0, 0]),
            Err(WeightError::AllZeroWeights)
        );
        assert_eq!(
            WeightVector::normalize_effective(&[]),
            Err(WeightError::Empty)
        );
    }

    #[test]
    fn sign_profiles() {
        let p = w(&[1, 1, -1, -1, 0]).classify_signs();
        assert_eq!((p.num_negative, p.num_zero, p.num_positive), (2, 1, 2));
        let p = w(&[2, 3, 5]).classify_signs();
        assert_eq!((p.num_negative, p.num_zero, p.num_positive), (0, 0, 3));
        let p = w(&[-1, 1, 1]).classify_signs();
        assert_eq!((p.num_negative, p.num_zero, p.num_positive), (1, 0, 2));
    }

    /// Brute-force stabilizer: count the k in Z_N with k·α_j ≡ 0 mod N for
    /// all supported j, where N = lcm of the nonzero |α_i|.
    fn brute_force_stabilizer(wv: &WeightVector, support: &Support) -> Stabilizer {
        let all_zero = support
            .indices()
            .all(|&i| wv.entries()[i] == 0);
        if support.is_empty() || all_zero {
            return Stabilizer::FullCircle;
        }
        let n: u64 = wv
            .entries()
            .iter()
            .filter(|&&a| a != 0)
            .fold(1u64, |acc, &a| acc.lcm(&a.unsigned_abs()));
        let count = (0..n)
            .filter(|&k| {
                support
                    .indices()
                    .all(|&i| (k * wv.entries()[i].unsigned_abs()) % n == 0)
            })
            .count() as u64;
        Stabilizer::Cyclic(count)
    }

    #[test]
    fn stabilizer_examples() {
        let wv = w(&[2, 3]);
        assert_eq!(
            wv.stabilizer(&Support::from_indices([0])),
            Stabilizer::Cyclic(2)
        );
        assert_eq!(wv.stabilizer(&Support::empty()), Stabilizer::FullCircle);
        assert_eq!(
            wv.stabilizer(&Support::from_indices([0, 1])),
            Stabilizer::Cyclic(1)
        );
    }

    /// Visits every vector in {lo..=hi}^n.
    fn for_each_vector(n: usize, lo: i64, hi: i64, f: &mut dyn FnMut(&[i64])) {
        let mut raw = vec![lo; n];
        loop {
            f(&raw);
            let mut i = 0;
            while i < n {
                raw[i] += 1;
                if raw[i] <= hi {
                    break;
                }
                raw[i] = lo;
                i += 1;
            }
            if i == n {
                return;
            }
        }
    }

    #[test]
    fn stabilizer_matches_brute_force_exhaustively() {
        // All effective vectors with n ≤ 4 and |α| ≤ 6, all supports.
        for n in 1..=4usize {
            for_each_vector(n, -6, 6, &mut |raw| {
                let Ok(wv) = WeightVector::normalize_effective(raw) else {
                    return;
                };
                for mask in 0..(1u32 << n) {
                    let support =
                        Support::from_indices((0..n).filter(|&i| mask & (1 << i) != 0));
                    assert_eq!(
                        wv.stabilizer(&support),
                        brute_force_stabilizer(&wv, &support),
                        "w={wv} support={support:?}"
                    );
                }
            });
        }
    }

    #[test]
    fn stabilizer_monotone_under_support_inclusion() {
        for raw in [[2i64, 3, 4], [6, -4, 0], [5, 10, -3]] {
            let wv = w(&raw);
            let n = wv.len();
            for m1 in 0..(1u32 << n) {
                for m2 in 0..(1u32 << n) {
                    if m1 & m2 != m1 {
                        continue; // need m1 ⊆ m2
                    }
                    let s1 = Support::from_indices((0..n).filter(|&i| m1 & (1 << i) != 0));
                    let s2 = Support::from_indices((0..n).filter(|&i| m2 & (1 << i) != 0));
                    assert!(wv.stabilizer(&s1).contains(&wv.stabilizer(&s2)));
                }
            }
        }
    }

    #[test]
    fn orbit_types_hyperbolic_pair() {
        let strata = w(&[1, -1]).enumerate_orbit_types();
        assert_eq!(strata.len(), 2);
        let principal = &strata[0];
        assert_eq!(principal.stabilizer, Stabilizer::Cyclic(1));
        assert_eq!(principal.dimension_in_m, 4);
        assert_eq!(principal.dimension_in_quotient, 3);
        assert_eq!(principal.depth, 0);
        let fixed = &strata[1];
        assert_eq!(fixed.stabilizer, Stabilizer::FullCircle);
        assert_eq!(fixed.dimension_in_m, 0);
        assert_eq!(fixed.dimension_in_quotient, 0);
        assert_eq!(fixed.depth, 1);
    }

    #[test]
    fn orbit_types_two_three() {
        let strata = w(&[2, 3]).enumerate_orbit_types();
        let orders: Vec<Option<u64>> = strata.iter().map(|s| s.stabilizer.order()).collect();
        assert_eq!(strata.len(), 4);
        assert!(orders.contains(&Some(1)));
        assert!(orders.contains(&Some(2)));
        assert!(orders.contains(&Some(3)));
        assert!(orders.contains(&None));
        let fixed = strata.iter().find(|s| s.stabilizer == Stabilizer::FullCircle).unwrap();
        assert_eq!(fixed.depth, 2);
    }

    #[test]
    fn orbit_types_single_weight() {
        let strata = w(&[1]).enumerate_orbit_types();
        assert_eq!(strata.len(), 2);
        assert_eq!(strata[0].stabilizer, Stabilizer::Cyclic(1));
        assert_eq!(strata[1].stabilizer, Stabilizer::FullCircle);
    }

    #[test]
    fn zero_weights_contribute_flat_dimensions_only() {
        let strata = w(&[1, -1, 0]).enumerate_orbit_types();
        assert_eq!(strata.len(), 2);
        let fixed = strata.iter().find(|s| s.stabilizer == Stabilizer::FullCircle).unwrap();
        assert_eq!(fixed.dimension_in_m, 2);
        assert_eq!(fixed.dimension_in_quotient, 2);
        let principal = strata.iter().find(|s| s.stabilizer == Stabilizer::Cyclic(1)).unwrap();
        assert_eq!(principal.dimension_in_m, 6);
        assert_eq!(principal.dimension_in_quotient, 5);
    }

    /// Longest-chain depth computed directly from the definition.
    fn chain_depth(i: usize, strata: &[StratumDescriptor]) -> usize {
        (0..strata.len())
            .filter(|&j| j != i && frontier_lt(&strata[i], &strata[j]))
            .map(|j| 1 + chain_depth(j, strata))
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn frontier_is_strict_partial_order_and_depth_matches_chains() {
        for raw in [
            vec![1i64, -1],
            vec![2, 3],
            vec![2, -3, 6],
            vec![4, 6, -3, 0],
            vec![2, 4, 6],
        ] {
            let strata = w(&raw).enumerate_orbit_types();
            for (i, a) in strata.iter().enumerate() {
                assert!(!frontier_lt(a, a), "irreflexive");
                for b in &strata {
                    for c in &strata {
                        if frontier_lt(a, b) && frontier_lt(b, c) {
                            assert!(frontier_lt(a, c), "transitive");
                        }
                    }
                }
                assert_eq!(a.depth, chain_depth(i, &strata), "w={raw:?}");
            }
        }
    }

    #[test]
    fn support_json_is_one_based_and_sorted() {
        let s = Support::from_indices([2, 0]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,3]");
        let back: Support = serde_json::from_str("[1,3]").unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn weight_vector_json_round_trip() {
        let wv = w(&[1, 2, -3]);
        assert_eq!(serde_json::to_string(&wv).unwrap(), "[1,2,-3]");
        let back: WeightVector = serde_json::from_str("[2,4,-6]").unwrap();
        assert_eq!(back, wv);
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent_and_sign_preserving(
            raw in proptest::collection::vec(-20i64..=20, 1..=8)
        ) {
            prop_assume!(raw.iter().any(|&a| a != 0));
            let once = WeightVector::normalize_effective(&raw).unwrap();
            let twice = WeightVector::normalize_effective(once.entries()).unwrap();
            prop_assert_eq!(&once, &twice);
            for (a, b) in raw.iter().zip(once.entries()) {
                prop_assert_eq!(a.signum(), b.signum());
            }
        }
    }
}
