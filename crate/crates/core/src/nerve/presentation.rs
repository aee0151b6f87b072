//! Finite group presentations and their identification.
//!
//! A presentation is identified by running coset enumeration over the
//! trivial subgroup; the resulting regular action is closed into a full
//! multiplication table, from which the certificate (order, exponent,
//! element orders, abelian normal form) is read off.

use std::collections::HashMap;

use serde::Serialize;

use super::group::{GroupCertificate, GroupTable};
use super::todd_coxeter::enumerate_cosets;
use super::NerveError;

/// Budget for coset enumeration when identifying fundamental groups.
pub const COSET_BUDGET: usize = 100_000;

/// A finite presentation; relation words are signed 1-based generator
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<i32>>,
}

impl GroupPresentation {
    /// Abelianization in invariant-factor normal form, from the exponent
    /// matrix of the relations.
    pub fn abelianization(&self) -> crate::homotopy::FgAbelianGroup {
        let n = self.generators.len();
        let rows: Vec<Vec<i128>> = self
            .relations
            .iter()
            .map(|word| {
                let mut row = vec![0i128; n];
                for &letter in word {
                    let idx = letter.unsigned_abs() as usize - 1;
                    row[idx] += letter.signum() as i128;
                }
                row
            })
            .collect();
        let (rank, torsion) = crate::snf::abelian_quotient(n, &rows);
        crate::homotopy::FgAbelianGroup::from_parts(rank, &torsion)
    }
}

/// A presentation together with the group it was identified as.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentifiedGroup {
    pub certificate: GroupCertificate,
    pub presentation: GroupPresentation,
}

/// Identifies the presented group by coset enumeration within the given
/// budget, reconstructing the full multiplication table from the regular
/// action.
pub fn identify_presented_group(
    presentation: &GroupPresentation,
    budget: usize,
) -> Result<IdentifiedGroup, NerveError> {
    let enumeration = enumerate_cosets(
        presentation.generators.len(),
        &presentation.relations,
        budget,
    )?;
    let table = regular_representation_table(enumeration.coset_count, &enumeration.action)?;
    // the abelianization gives an independent consistency handle: for an
    // abelian identification the two routes must agree
    let certificate = table.certificate();
    if let Some(normal_form) = &certificate.abelian {
        debug_assert_eq!(normal_form, &presentation.abelianization());
    }
    Ok(IdentifiedGroup {
        certificate,
        presentation: presentation.clone(),
    })
}

/// Closes the generator permutations of the regular action into the full
/// element set and multiplication table.
fn regular_representation_table(
    count: usize,
    action: &[Vec<usize>],
) -> Result<GroupTable, NerveError> {
    let identity: Vec<usize> = (0..count).collect();
    let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut frontier = vec![0usize];
    while let Some(e) = frontier.pop() {
        for gen in action {
            let perm: Vec<usize> = elements[e].iter().map(|&c| gen[c]).collect();
            if !index.contains_key(&perm) {
                let id = elements.len();
                index.insert(perm.clone(), id);
                elements.push(perm);
                frontier.push(id);
            }
        }
    }
    if elements.len() != count {
        return Err(NerveError::InvalidGroupoid(format!(
            "regular action closure has {} elements for {} cosets",
            elements.len(),
            count
        )));
    }
    let mul: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| {
                    // right multiplication: c·(a·b) = (c·a)·b
                    let prod: Vec<usize> = (0..count).map(|c| b[a[c]]).collect();
                    index[&prod]
                })
                .collect()
        })
        .collect();
    let names = (0..count).map(|i| format!("g{i}")).collect();
    GroupTable::new(names, mul)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::FgAbelianGroup;

    fn pres(gens: usize, relations: &[&[i32]]) -> GroupPresentation {
        GroupPresentation {
            generators: (0..gens).map(|i| format!("x{i}")).collect(),
            relations: relations.iter().map(|r| r.to_vec()).collect(),
        }
    }

    #[test]
    fn identify_cyclic() {
        let p = pres(1, &[&[1, 1, 1]]);
        let g = identify_presented_group(&p, 1000).unwrap();
        assert_eq!(g.certificate.order, 3);
        assert_eq!(g.certificate.abelian, Some(FgAbelianGroup::cyclic(3)));
    }

    #[test]
    fn identify_s3_as_nonabelian() {
        let p = pres(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]);
        let g = identify_presented_group(&p, 1000).unwrap();
        assert_eq!(g.certificate.order, 6);
        assert_eq!(g.certificate.exponent, 6);
        assert_eq!(g.certificate.abelian, None);
    }

    #[test]
    fn abelianization_of_s3_is_z2() {
        let p = pres(2, &[&[1, 1], &[2, 2, 2], &[1, 2, 1, 2]]);
        assert_eq!(p.abelianization(), FgAbelianGroup::cyclic(2));
    }

    #[test]
    fn budget_error_surfaces() {
        let p = pres(1, &[]);
        assert!(matches!(
            identify_presented_group(&p, 20),
            Err(NerveError::EnumerationBudgetExceeded { .. })
        ));
    }

    #[test]
    fn free_abelianization_keeps_rank() {
        let p = pres(2, &[&[1, 2, -1, -2]]);
        assert_eq!(p.abelianization(), FgAbelianGroup::free(2));
    }
}
