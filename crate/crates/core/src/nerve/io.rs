//! JSON input formats for groupoids and finite group actions.
//!
//! Groupoids load from `{objects, arrows: [{id, src, tgt}], compose:
//! [[g, h, gh]]}`; actions from `{group: "Z_n" | {elements, mul}, set,
//! action: [[g, x, gx]]}`. Unknown fields are rejected, not ignored.

use serde::Deserialize;

use super::group::GroupTable;
use super::{Arrow, FiniteGroupoid, NerveError};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupoidSpec {
    objects: Vec<String>,
    arrows: Vec<ArrowSpec>,
    compose: Vec<[String; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowSpec {
    id: String,
    src: String,
    tgt: String,
}

/// Parses and validates a groupoid from its JSON description.
pub fn groupoid_from_json(input: &str) -> Result<FiniteGroupoid, NerveError> {
    let spec: GroupoidSpec =
        serde_json::from_str(input).map_err(|e| NerveError::Malformed(e.to_string()))?;
    let object_index = |name: &str| -> Result<usize, NerveError> {
        spec.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| NerveError::UnknownIdentifier(format!("object {name}")))
    };
    let arrows: Vec<Arrow> = spec
        .arrows
        .iter()
        .map(|a| {
            Ok(Arrow {
                id: a.id.clone(),
                src: object_index(&a.src)?,
                tgt: object_index(&a.tgt)?,
            })
        })
        .collect::<Result<_, NerveError>>()?;
    let arrow_index = |name: &str| -> Result<usize, NerveError> {
        arrows
            .iter()
            .position(|a| a.id == name)
            .ok_or_else(|| NerveError::UnknownIdentifier(format!("arrow {name}")))
    };
    let compositions: Vec<(usize, usize, usize)> = spec
        .compose
        .iter()
        .map(|[g, h, gh]| Ok((arrow_index(g)?, arrow_index(h)?, arrow_index(gh)?)))
        .collect::<Result<_, NerveError>>()?;
    FiniteGroupoid::new(spec.objects, arrows, &compositions)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionSpec {
    group: GroupSpec,
    set: Vec<String>,
    action: Vec<[String; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GroupSpec {
    Named(String),
    Table {
        elements: Vec<String>,
        mul: Vec<Vec<String>>,
    },
}

/// A parsed finite group action.
#[derive(Debug, Clone)]
pub struct ActionInput {
    pub group: GroupTable,
    pub set: Vec<String>,
    pub action: Vec<Vec<usize>>,
}

/// Parses a finite group action from its JSON description. The action
/// table must cover every `(g, x)` pair exactly once.
pub fn action_from_json(input: &str) -> Result<ActionInput, NerveError> {
    let spec: ActionSpec =
        serde_json::from_str(input).map_err(|e| NerveError::Malformed(e.to_string()))?;
    let group = match &spec.group {
        GroupSpec::Named(name) => {
            let Some(order) = name
                .strip_prefix("Z_")
                .and_then(|rest| rest.parse::<usize>().ok())
                .filter(|&n| n >= 1)
            else {
                return Err(NerveError::UnknownIdentifier(format!(
                    "group name {name} (expected Z_n or an explicit table)"
                )));
            };
            GroupTable::cyclic(order)
        }
        GroupSpec::Table { elements, mul } => {
            let index = |name: &str| -> Result<usize, NerveError> {
                elements
                    .iter()
                    .position(|e| e == name)
                    .ok_or_else(|| NerveError::UnknownIdentifier(format!("group element {name}")))
            };
            let table: Vec<Vec<usize>> = mul
                .iter()
                .map(|row| row.iter().map(|e| index(e)).collect())
                .collect::<Result<_, NerveError>>()?;
            GroupTable::new(elements.clone(), table)?
        }
    };
    let set_index = |name: &str| -> Result<usize, NerveError> {
        spec.set
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| NerveError::UnknownIdentifier(format!("set element {name}")))
    };
    let elem_index = |name: &str| -> Result<usize, NerveError> {
        group
            .elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| NerveError::UnknownIdentifier(format!("group element {name}")))
    };
    let mut action = vec![vec![usize::MAX; spec.set.len()]; group.order()];
    for [g, x, gx] in &spec.action {
        let (g, x, gx) = (elem_index(g)?, set_index(x)?, set_index(gx)?);
        if action[g][x] != usize::MAX {
            return Err(NerveError::InvalidAction(format!(
                "action of {} on {} given twice",
                group.elements[g], spec.set[x]
            )));
        }
        action[g][x] = gx;
    }
    if action.iter().flatten().any(|&v| v == usize::MAX) {
        return Err(NerveError::InvalidAction(
            "action table does not cover every (g, x) pair".into(),
        ));
    }
    Ok(ActionInput {
        group,
        set: spec.set,
        action,
    })
}
