//! Lookup table for homotopy groups of spheres `π_p(S^k)` in the desk
//! range `1 ≤ k ≤ 15`, `0 ≤ p ≤ 15`.
//!
//! Below the diagonal the groups vanish; on the diagonal they are `Z`; the
//! first seven rows above the diagonal are tabulated (they stabilize for
//! `k ≥ i + 2`). The circle is special-cased: its universal cover is
//! contractible, so everything above degree one dies.

use thiserror::Error;

use super::fg::FgAbelianGroup;

/// Largest degree and sphere dimension the table covers.
pub const TABLE_MAX: u32 = 15;
/// Tabulated band above the diagonal: `π_{k+i}(S^k)` for `i ≤ 7`.
pub const TABLE_BAND: u32 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphereTableError {
    #[error("pi_{p}(S^{k}) is outside the shipped table")]
    OutOfTable { p: u32, k: u32 },
}

/// `π_p(S^k)` from the table.
pub fn sphere_pi(p: u32, k: u32) -> Result<FgAbelianGroup, SphereTableError> {
    if !(1..=TABLE_MAX).contains(&k) || p > TABLE_MAX {
        return Err(SphereTableError::OutOfTable { p, k });
    }
    if k == 1 {
        return Ok(if p == 1 {
            FgAbelianGroup::integers()
        } else {
            FgAbelianGroup::trivial()
        });
    }
    if p < k {
        return Ok(FgAbelianGroup::trivial());
    }
    if p == k {
        return Ok(FgAbelianGroup::integers());
    }
    let i = p - k;
    if i > TABLE_BAND {
        return Err(SphereTableError::OutOfTable { p, k });
    }
    let z = FgAbelianGroup::integers;
    let c = FgAbelianGroup::cyclic;
    let group = match (i, k) {
        (1, 2) => z(),
        (1, _) => c(2),
        (2, _) => c(2),
        (3, 2) => c(2),
        (3, 3) => c(12),
        (3, 4) => z().direct_sum(&c(12)),
        (3, _) => c(24),
        (4, 2) => c(12),
        (4, 3) => c(2),
        (4, 4) => FgAbelianGroup::from_parts(0, &[2, 2]),
        (4, 5) => c(2),
        (4, _) => FgAbelianGroup::trivial(),
        (5, 2) => c(2),
        (5, 3) => c(2),
        (5, 4) => FgAbelianGroup::from_parts(0, &[2, 2]),
        (5, 5) => c(2),
        (5, 6) => z(),
        (5, _) => FgAbelianGroup::trivial(),
        (6, 2) => c(2),
        (6, 3) => c(3),
        (6, 4) => FgAbelianGroup::from_parts(0, &[24, 3]),
        (6, _) => c(2),
        (7, 2) => c(3),
        (7, 3) => c(15),
        (7, 4) => c(15),
        (7, 5) => c(30),
        (7, 6) => c(60),
        (7, 7) => c(120),
        (7, 8) => z().direct_sum(&c(120)),
        _ => unreachable!("band and table caps keep (i, k) in range"),
    };
    Ok(group)
}

/// Finiteness of `π_p(S^k)` for every `p ≥ 0`, `k ≥ 1`: infinite exactly
/// on the diagonal `p = k` and at `p = 2k − 1` for even `k`.
pub fn sphere_pi_finite(p: u32, k: u32) -> bool {
    assert!(k >= 1);
    !(p == k || (k % 2 == 0 && p == 2 * k - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_below_diagonal_and_z_on_it() {
        assert!(sphere_pi(2, 3).unwrap().is_trivial());
        assert_eq!(sphere_pi(3, 3).unwrap(), FgAbelianGroup::integers());
        assert_eq!(sphere_pi(3, 2).unwrap(), FgAbelianGroup::integers());
    }

    #[test]
    fn circle_has_no_higher_homotopy() {
        for p in 2..=TABLE_MAX {
            assert!(sphere_pi(p, 1).unwrap().is_trivial());
        }
        assert_eq!(sphere_pi(1, 1).unwrap(), FgAbelianGroup::integers());
        assert!(sphere_pi(0, 1).unwrap().is_trivial());
    }

    #[test]
    fn spot_checks_against_classical_values() {
        let c = FgAbelianGroup::cyclic;
        assert_eq!(sphere_pi(4, 2).unwrap(), c(2));
        assert_eq!(sphere_pi(6, 3).unwrap(), c(12));
        assert_eq!(sphere_pi(7, 4).unwrap(), FgAbelianGroup::integers().direct_sum(&c(12)));
        assert_eq!(sphere_pi(8, 5).unwrap(), c(24));
        assert_eq!(sphere_pi(10, 4).unwrap(), FgAbelianGroup::from_parts(0, &[24, 3]));
        assert_eq!(sphere_pi(10, 3).unwrap(), c(15));
        assert_eq!(sphere_pi(11, 6).unwrap(), FgAbelianGroup::integers());
        assert_eq!(sphere_pi(14, 7).unwrap(), c(120));
        assert_eq!(
            sphere_pi(15, 8).unwrap(),
            FgAbelianGroup::integers().direct_sum(&c(120))
        );
        assert_eq!(sphere_pi(15, 9).unwrap(), c(2));
        assert_eq!(sphere_pi(15, 12).unwrap(), c(24));
    }

    #[test]
    fn out_of_table_is_reported() {
        assert!(sphere_pi(12, 3).is_err());
        assert!(sphere_pi(16, 4).is_err());
        assert!(sphere_pi(3, 16).is_err());
        assert!(sphere_pi(3, 0).is_err());
    }

    #[test]
    fn finiteness_formula_matches_table_everywhere() {
        for k in 1..=TABLE_MAX {
            for p in 0..=TABLE_MAX {
                if let Ok(group) = sphere_pi(p, k) {
                    assert_eq!(
                        group.is_finite(),
                        sphere_pi_finite(p, k),
                        "pi_{p}(S^{k}) = {group}"
                    );
                }
            }
        }
    }

    #[test]
    fn finiteness_examples() {
        assert!(sphere_pi_finite(4, 3)); // Z_2
        assert!(!sphere_pi_finite(5, 5)); // diagonal
        assert!(!sphere_pi_finite(7, 4)); // k even, p = 2k − 1
    }
}
