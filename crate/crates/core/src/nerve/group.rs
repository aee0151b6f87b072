//! Finite groups given by multiplication tables, and the isomorphism
//! certificates used to compare fundamental groups across constructions.

use num_integer::Integer;
use serde::Serialize;

use super::NerveError;
use crate::homotopy::FgAbelianGroup;
use crate::snf;

/// A finite group as a multiplication table: `mul[a][b] = a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub elements: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    identity: usize,
}

impl GroupTable {
    pub fn new(elements: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self, NerveError> {
        let n = elements.len();
        let bad = |reason: &str| NerveError::InvalidGroupTable(reason.to_string());
        if n == 0 || mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(bad("multiplication table must be square and nonempty"));
        }
        if mul.iter().flatten().any(|&x| x >= n) {
            return Err(bad("table entry out of range"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| bad("no identity element"))?;
        for a in 0..n {
            if !(0..n).any(|b| mul[a][b] == identity && mul[b][a] == identity) {
                return Err(bad("element without inverse"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(bad("multiplication is not associative"));
                    }
                }
            }
        }
        Ok(GroupTable {
            elements,
            mul,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.mul[a][b] == self.identity)
            .expect("validated group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul[x][a];
            k += 1;
        }
        k
    }

    /// The cyclic group `Z_n` written additively.
    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n >= 1);
        let elements = (0..n).map(|i| i.to_string()).collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        GroupTable::new(elements, mul).expect("cyclic table is a group")
    }

    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let n = self.order();
        let m = other.order();
        let elements = (0..n * m)
            .map(|i| format!("({},{})", self.elements[i / m], other.elements[i % m]))
            .collect();
        let mul = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| {
                        let a = self.mul[x / m][y / m];
                        let b = other.mul[x % m][y % m];
                        a * m + b
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(elements, mul).expect("product table is a group")
    }

    pub fn klein_four() -> GroupTable {
        GroupTable::cyclic(2).direct_product(&GroupTable::cyclic(2))
    }

    /// The symmetric group on three letters, via permutation composition.
    pub fn symmetric3() -> GroupTable {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
        ];
        let names = ["e", "r", "r2", "s12", "s23", "s13"];
        let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] {
            [a[b[0]], a[b[1]], a[b[2]]]
        };
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c = compose(a, b);
                        perms.iter().position(|p| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(names.iter().map(|s| s.to_string()).collect(), mul)
            .expect("S3 table is a group")
    }

    /// Isomorphism certificate: order, exponent, the element-order
    /// multiset, and for abelian groups the invariant-factor normal form.
    /// The multiset determines abelian groups up to isomorphism; for the
    /// non-abelian desk cases it is the agreed order/exponent certificate.
    pub fn certificate(&self) -> GroupCertificate {
        let n = self.order();
        let mut element_orders: Vec<u64> = (0..n).map(|a| self.element_order(a)).collect();
        element_orders.sort_unstable();
        let exponent = element_orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
        let abelian = if self.is_abelian() {
            // present by the full table and read off the normal form
            let mut relations = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    let mut row = vec![0i128; n];
                    row[a] += 1;
                    row[b] += 1;
                    row[self.mul[a][b]] -= 1;
                    relations.push(row);
                }
            }
            let (rank, torsion) = snf::abelian_quotient(n, &relations);
            debug_assert_eq!(rank, 0);
            Some(FgAbelianGroup::from_parts(rank, &torsion))
        } else {
            None
        };
        GroupCertificate {
            order: n as u64,
            exponent,
            element_orders,
            abelian,
        }
    }
}

/// Comparable identity card of a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupCertificate {
    pub order: u64,
    pub exponent: u64,
    pub element_orders: Vec<u64>,
    /// Normal form when the group is abelian, `None` otherwise.
    pub abelian: Option<FgAbelianGroup>,
}

impl GroupCertificate {
    pub fn matches(&self, other: &GroupCertificate) -> bool {
        self == other
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_certificate() {
        let c = GroupTable::cyclic(6).certificate();
        assert_eq!(c.order, 6);
        assert_eq!(c.exponent, 6);
        assert_eq!(c.abelian, Some(FgAbelianGroup::cyclic(6)));
    }

    #[test]
    fn klein_four_certificate() {
        let c = GroupTable::klein_four().certificate();
        assert_eq!(c.order, 4);
        assert_eq!(c.exponent, 2);
        assert_eq!(c.abelian, Some(FgAbelianGroup::from_parts(0, &[2, 2])));
        assert_eq!(c.element_orders, vec![1, 2, 2, 2]);
    }

    #[test]
    fn s3_certificate_distinguishes_from_z6() {
        let s3 = GroupTable::symmetric3().certificate();
        let z6 = GroupTable::cyclic(6).certificate();
        assert_eq!(s3.order, 6);
        assert_eq!(s3.exponent, 6);
        assert_eq!(s3.abelian, None);
        assert!(!s3.matches(&z6));
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(GroupTable::new(vec!["a".into()], vec![vec![1]]).is_err());
        // associativity failure: tweak Z_4
        let mut mul: Vec<Vec<usize>> = (0..4usize)
            .map(|a| (0..4).map(|b| (a + b) % 4).collect())
            .collect();
        mul[1][1] = 3;
        assert!(GroupTable::new(
            (0..4).map(|i| i.to_string()).collect(),
            mul
        )
        .is_err());
    }
}
