//! Finitely generated abelian groups in invariant-factor normal form.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A finitely generated abelian group `Z^rank ⊕ Z_{d_1} ⊕ … ⊕ Z_{d_t}` with
/// `d_1 | d_2 | … | d_t` and every `d_i ≥ 2`. Equality is structural
/// equality of `(rank, torsion)`, which by the normal form is isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<u64>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    /// Cyclic group of order `n ≥ 1` (`Z_1` is the trivial group).
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1, "cyclic group needs a positive order");
        if n == 1 {
            Self::trivial()
        } else {
            FgAbelianGroup {
                rank: 0,
                torsion: vec![n],
            }
        }
    }

    /// Builds from a free rank and an arbitrary multiset of cyclic orders,
    /// renormalizing to the invariant-factor chain.
    pub fn from_parts(rank: usize, cyclic_orders: &[u64]) -> Self {
        FgAbelianGroup {
            rank,
            torsion: invariant_factors(cyclic_orders),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders = self.torsion.clone();
        orders.extend_from_slice(&other.torsion);
        FgAbelianGroup {
            rank: self.rank + other.rank,
            torsion: invariant_factors(&orders),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group when finite.
    pub fn order(&self) -> Option<u64> {
        if self.is_finite() {
            Some(self.torsion.iter().product())
        } else {
            None
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank == 0 && self.torsion.len() <= 1
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z_{d}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Normalizes a multiset of cyclic orders to the invariant-factor chain.
///
/// Bucket the prime-power contributions per prime with exponents sorted
/// descending; the j-th largest invariant factor is the product of the
/// j-th largest prime power over all primes.
fn invariant_factors(cyclic_orders: &[u64]) -> Vec<u64> {
    use std::collections::BTreeMap;
    let mut buckets: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &n in cyclic_orders {
        assert!(n >= 1, "cyclic order must be positive");
        for (p, e) in factorize(n) {
            buckets.entry(p).or_default().push(e);
        }
    }
    let levels = buckets.values().map(|v| v.len()).max().unwrap_or(0);
    for exps in buckets.values_mut() {
        exps.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut factors = Vec::new();
    for j in 0..levels {
        let mut d: u64 = 1;
        for (p, exps) in &buckets {
            if let Some(&e) = exps.get(j) {
                d *= p.pow(e);
            }
        }
        factors.push(d);
    }
    factors.reverse(); // ascending divisibility chain
    debug_assert!(factors.windows(2).all(|w| w[1] % w[0] == 0));
    factors
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
