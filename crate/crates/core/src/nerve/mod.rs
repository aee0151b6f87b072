//! Finite groupoids, their nerves, and desk-scale classifying-space checks.
//!
//! Composition follows the fibre-product convention: `g ∘ h` is defined
//! exactly when `s(g) = t(h)`, and a level-`n` nerve tuple `(g_1, …, g_n)`
//! is a chain with `s(g_i) = t(g_{i+1})`. Face maps drop the outer arrows
//! or merge adjacent ones; degeneracies insert units.

mod group;
mod io;
mod presentation;
mod todd_coxeter;

pub use group::{GroupCertificate, GroupTable};
pub use io::{action_from_json, groupoid_from_json, ActionInput};
pub use presentation::{
    identify_presented_group, GroupPresentation, IdentifiedGroup, COSET_BUDGET,
};
pub use todd_coxeter::{enumerate_cosets, Enumeration};

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

/// Nerve levels above this are refused (size guard).
pub const MAX_NERVE_LEVEL: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("nerve level {requested} exceeds the guard ({max})")]
    LevelTooLarge { requested: usize, max: usize },
    #[error("coset enumeration exceeded the budget of {budget} cosets")]
    EnumerationBudgetExceeded { budget: usize },
    #[error("functor is not a weak equivalence: {0}")]
    NotAWeakEquivalence(String),
    #[error("unknown identifier: {0}")]
    UnknownIdentifier(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

/// An arrow of a finite groupoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite groupoid with an explicit composition table. All axioms are
/// checked exhaustively at construction; the data is immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    compose: Vec<Vec<Option<usize>>>,
    units: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroupoid {
    /// Builds and validates a groupoid from objects, arrows, and the list
    /// of composition triples `(g, h, g∘h)`.
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        compositions: &[(usize, usize, usize)],
    ) -> Result<Self, NerveError> {
        let bad = |reason: String| NerveError::InvalidGroupoid(reason);
        if objects.is_empty() {
            return Err(bad("groupoid needs at least one object".into()));
        }
        let n_obj = objects.len();
        let n_arr = arrows.len();
        for a in &arrows {
            if a.src >= n_obj || a.tgt >= n_obj {
                return Err(bad(format!("arrow {} has out-of-range endpoints", a.id)));
            }
        }
        let mut compose = vec![vec![None; n_arr]; n_arr];
        for &(g, h, gh) in compositions {
            if g >= n_arr || h >= n_arr || gh >= n_arr {
                return Err(bad("composition triple references a missing arrow".into()));
            }
            if arrows[g].src != arrows[h].tgt {
                return Err(bad(format!(
                    "pair ({}, {}) is not composable",
                    arrows[g].id, arrows[h].id
                )));
            }
            if compose[g][h].replace(gh).is_some() {
                return Err(bad(format!(
                    "pair ({}, {}) composed twice",
                    arrows[g].id, arrows[h].id
                )));
            }
            if arrows[gh].src != arrows[h].src || arrows[gh].tgt != arrows[g].tgt {
                return Err(bad(format!(
                    "product of ({}, {}) has mismatched endpoints",
                    arrows[g].id, arrows[h].id
                )));
            }
        }
        for g in 0..n_arr {
            for h in 0..n_arr {
                if arrows[g].src == arrows[h].tgt && compose[g][h].is_none() {
                    return Err(bad(format!(
                        "composable pair ({}, {}) has no product",
                        arrows[g].id, arrows[h].id
                    )));
                }
            }
        }

        // units: the idempotent self-loop at each object acting as identity
        let mut units = Vec::with_capacity(n_obj);
        for x in 0..n_obj {
            let candidates: Vec<usize> = (0..n_arr)
                .filter(|&u| {
                    arrows[u].src == x
                        && arrows[u].tgt == x
                        && compose[u][u] == Some(u)
                        && (0..n_arr).all(|g| {
                            (arrows[g].src != x || compose[g][u] == Some(g))
                                && (arrows[g].tgt != x || compose[u][g] == Some(g))
                        })
                })
                .collect();
            match candidates.as_slice() {
                [u] => units.push(*u),
                [] => return Err(bad(format!("object {} has no unit", objects[x]))),
                _ => return Err(bad(format!("object {} has several units", objects[x]))),
            }
        }

        let mut inverses = Vec::with_capacity(n_arr);
        for g in 0..n_arr {
            let inv = (0..n_arr).find(|&h| {
                compose[g].get(h).copied().flatten() == Some(units[arrows[g].tgt])
                    && compose[h][g] == Some(units[arrows[g].src])
            });
            match inv {
                Some(h) => inverses.push(h),
                None => return Err(bad(format!("arrow {} has no inverse", arrows[g].id))),
            }
        }

        for g in 0..n_arr {
            for h in 0..n_arr {
                if arrows[g].src != arrows[h].tgt {
                    continue;
                }
                let gh = compose[g][h].unwrap();
                for k in 0..n_arr {
                    if arrows[h].src != arrows[k].tgt {
                        continue;
                    }
                    let hk = compose[h][k].unwrap();
                    if compose[gh][k] != compose[g][hk] {
                        return Err(bad(format!(
                            "composition is not associative at ({}, {}, {})",
                            arrows[g].id, arrows[h].id, arrows[k].id
                        )));
                    }
                }
            }
        }

        Ok(FiniteGroupoid {
            objects,
            arrows,
            compose,
            units,
            inverses,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn unit(&self, object: usize) -> usize {
        self.units[object]
    }

    pub fn inverse(&self, arrow: usize) -> usize {
        self.inverses[arrow]
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose[g][h]
    }

    pub fn is_unit(&self, arrow: usize) -> bool {
        self.units[self.arrows[arrow].src] == arrow
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    /// The one-object groupoid of a finite group.
    pub fn from_group(table: &GroupTable) -> FiniteGroupoid {
        let arrows = table
            .elements
            .iter()
            .map(|e| Arrow {
                id: e.clone(),
                src: 0,
                tgt: 0,
            })
            .collect();
        let mut comps = Vec::new();
        for g in 0..table.order() {
            for h in 0..table.order() {
                comps.push((g, h, table.mul[g][h]));
            }
        }
        FiniteGroupoid::new(vec!["*".into()], arrows, &comps)
            .expect("group table yields a groupoid")
    }

    /// The pair groupoid on `k` objects: one arrow between any two objects.
    pub fn pair(k: usize) -> FiniteGroupoid {
        assert!(k >= 1);
        let objects = (0..k).map(|i| format!("x{i}")).collect();
        // arrow (i, j) goes j -> i, stored at index i*k + j
        let arrows = (0..k * k)
            .map(|n| Arrow {
                id: format!("a{}_{}", n / k, n % k),
                src: n % k,
                tgt: n / k,
            })
            .collect();
        let mut comps = Vec::new();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    comps.push((i * k + j, j * k + l, i * k + l));
                }
            }
        }
        FiniteGroupoid::new(objects, arrows, &comps).expect("pair groupoid is a groupoid")
    }

    /// The trivial groupoid: only unit arrows.
    pub fn trivial(object_names: &[&str]) -> FiniteGroupoid {
        let objects: Vec<String> = object_names.iter().map(|s| s.to_string()).collect();
        let arrows = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Arrow {
                id: format!("id_{o}"),
                src: i,
                tgt: i,
            })
            .collect();
        let comps: Vec<(usize, usize, usize)> =
            (0..objects.len()).map(|i| (i, i, i)).collect();
        FiniteGroupoid::new(objects, arrows, &comps).expect("trivial groupoid is a groupoid")
    }

    /// The action groupoid `G ⋉ X` of a finite group action. The arrow
    /// `(g, x)` runs from `x` to `g·x`; `(g₂, g₁·x) ∘ (g₁, x) = (g₂g₁, x)`.
    pub fn action_groupoid(
        group: &GroupTable,
        set: &[String],
        action: &[Vec<usize>],
    ) -> Result<FiniteGroupoid, NerveError> {
        validate_action(group, set.len(), action)?;
        let n = group.order();
        let m = set.len();
        let arrows: Vec<Arrow> = (0..n * m)
            .map(|idx| {
                let (g, x) = (idx / m, idx % m);
                Arrow {
                    id: format!("{}|{}", group.elements[g], set[x]),
                    src: x,
                    tgt: action[g][x],
                }
            })
            .collect();
        let mut comps = Vec::new();
        for g2 in 0..n {
            for g1 in 0..n {
                for x in 0..m {
                    let mid = action[g1][x];
                    comps.push((g2 * m + mid, g1 * m + x, group.mul[g2][g1] * m + x));
                }
            }
        }
        FiniteGroupoid::new(set.to_vec(), arrows, &comps)
    }

    /// Composable tuples at nerve level `n` (`n ≥ 1`).
    fn tuples_at(&self, n: usize) -> Vec<Vec<usize>> {
        let mut tuples: Vec<Vec<usize>> = (0..self.arrows.len()).map(|g| vec![g]).collect();
        for _ in 1..n {
            let mut next = Vec::new();
            for t in &tuples {
                let last = *t.last().unwrap();
                for h in 0..self.arrows.len() {
                    if self.arrows[last].src == self.arrows[h].tgt {
                        let mut ext = t.clone();
                        ext.push(h);
                        next.push(ext);
                    }
                }
            }
            tuples = next;
        }
        tuples
    }

    /// The level-`n` piece of the nerve.
    pub fn nerve_level(&self, n: usize) -> Result<NerveLevel, NerveError> {
        if n > MAX_NERVE_LEVEL {
            return Err(NerveError::LevelTooLarge {
                requested: n,
                max: MAX_NERVE_LEVEL,
            });
        }
        let cells = if n == 0 {
            (0..self.objects.len()).map(NerveCell::Object).collect()
        } else {
            self.tuples_at(n).into_iter().map(NerveCell::Tuple).collect()
        };
        Ok(NerveLevel { n, cells })
    }

    /// Face map `∂ⁿ_i` on a level-`n` cell (`n ≥ 1`).
    pub fn face(&self, cell: &NerveCell, i: usize) -> NerveCell {
        let NerveCell::Tuple(t) = cell else {
            panic!("faces are defined on tuples, not objects");
        };
        let n = t.len();
        assert!(i <= n, "face index out of range");
        if n == 1 {
            return NerveCell::Object(if i == 0 {
                self.arrows[t[0]].src
            } else {
                self.arrows[t[0]].tgt
            });
        }
        let out = if i == 0 {
            t[1..].to_vec()
        } else if i == n {
            t[..n - 1].to_vec()
        } else {
            let mut out = Vec::with_capacity(n - 1);
            out.extend_from_slice(&t[..i - 1]);
            out.push(
                self.compose[t[i - 1]][t[i]].expect("nerve tuples are composable chains"),
            );
            out.extend_from_slice(&t[i + 1..]);
            out
        };
        NerveCell::Tuple(out)
    }

    /// Degeneracy map `εⁿ_i` on a level-`n` cell, landing in level `n + 1`.
    pub fn degeneracy(&self, cell: &NerveCell, i: usize) -> NerveCell {
        match cell {
            NerveCell::Object(x) => {
                assert!(i == 0, "objects only have the 0-th degeneracy");
                NerveCell::Tuple(vec![self.units[*x]])
            }
            NerveCell::Tuple(t) => {
                let n = t.len();
                assert!(i <= n, "degeneracy index out of range");
                let mut out = Vec::with_capacity(n + 1);
                if i == 0 {
                    out.push(self.units[self.arrows[t[0]].tgt]);
                    out.extend_from_slice(t);
                } else {
                    out.extend_from_slice(&t[..i]);
                    out.push(self.units[self.arrows[t[i - 1]].src]);
                    out.extend_from_slice(&t[i..]);
                }
                NerveCell::Tuple(out)
            }
        }
    }

    /// Exhaustively verifies the simplicial identities on every cell up to
    /// level `n_max ≤ 5`. Violations are report content, not errors.
    pub fn check_simplicial_identities(&self, n_max: usize) -> SimplicialReport {
        assert!(n_max <= MAX_NERVE_LEVEL - 1, "level guard");
        let mut cells_checked = 0usize;
        for level in 0..=n_max {
            let cells = self
                .nerve_level(level)
                .expect("guarded level")
                .cells;
            for cell in &cells {
                cells_checked += 1;
                // ∂_i ∂_j = ∂_{j-1} ∂_i for i < j
                if level >= 2 {
                    for j in 1..=level {
                        for i in 0..j {
                            let lhs = self.face(&self.face(cell, j), i);
                            let rhs = self.face(&self.face(cell, i), j - 1);
                            if lhs != rhs {
                                return self.violation(level, cell, cells_checked, format!(
                                    "d_{i} d_{j} != d_{} d_{i}",
                                    j - 1
                                ));
                            }
                        }
                    }
                }
                // ∂_i ε_j identities
                if level + 1 <= n_max {
                    for j in 0..=level {
                        let degenerate = self.degeneracy(cell, j);
                        for i in 0..=level + 1 {
                            let lhs = self.face(&degenerate, i);
                            let rhs = if i == j || i == j + 1 {
                                cell.clone()
                            } else if i < j {
                                self.degeneracy(&self.face(cell, i), j - 1)
                            } else {
                                self.degeneracy(&self.face(cell, i - 1), j)
                            };
                            if lhs != rhs {
                                return self.violation(level, cell, cells_checked, format!(
                                    "d_{i} e_{j} mismatch"
                                ));
                            }
                        }
                    }
                }
                // ε_i ε_j = ε_{j+1} ε_i for i ≤ j
                if level + 2 <= n_max {
                    for j in 0..=level {
                        for i in 0..=j {
                            let lhs = self.degeneracy(&self.degeneracy(cell, j), i);
                            let rhs = self.degeneracy(&self.degeneracy(cell, i), j + 1);
                            if lhs != rhs {
                                return self.violation(level, cell, cells_checked, format!(
                                    "e_{i} e_{j} != e_{} e_{i}",
                                    j + 1
                                ));
                            }
                        }
                    }
                }
            }
        }
        SimplicialReport {
            ok: true,
            levels_checked: n_max,
            cells_checked,
            violation: None,
        }
    }

    fn violation(
        &self,
        level: usize,
        cell: &NerveCell,
        cells_checked: usize,
        identity: String,
    ) -> SimplicialReport {
        let cell_desc = match cell {
            NerveCell::Object(x) => vec![self.objects[*x].clone()],
            NerveCell::Tuple(t) => t.iter().map(|&g| self.arrows[g].id.clone()).collect(),
        };
        SimplicialReport {
            ok: false,
            levels_checked: level,
            cells_checked,
            violation: Some(SimplicialViolation {
                level,
                identity,
                cell: cell_desc,
            }),
        }
    }

    /// Connected component ids of the objects (arrows taken undirected).
    pub fn components(&self) -> Vec<usize> {
        let n = self.objects.len();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for a in &self.arrows {
                    for (from, to) in [(a.src, a.tgt), (a.tgt, a.src)] {
                        if from == x && comp[to] == usize::MAX {
                            comp[to] = next;
                            stack.push(to);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// The 2-skeleton presentation of the fundamental group of the
    /// basepoint's component: generators are the component's arrows
    /// outside a spanning tree (units excluded, being degenerate), one
    /// relation per composable pair.
    pub fn pi1_presentation(&self, basepoint: usize) -> GroupPresentation {
        assert!(basepoint < self.objects.len(), "basepoint out of range");
        // spanning tree by BFS over undirected arrows
        let mut reached = vec![false; self.objects.len()];
        reached[basepoint] = true;
        let mut tree: BTreeSet<usize> = BTreeSet::new();
        let mut queue = std::collections::VecDeque::from([basepoint]);
        while let Some(x) = queue.pop_front() {
            for (idx, a) in self.arrows.iter().enumerate() {
                for (from, to) in [(a.src, a.tgt), (a.tgt, a.src)] {
                    if from == x && !reached[to] {
                        reached[to] = true;
                        tree.insert(idx);
                        queue.push_back(to);
                    }
                }
            }
        }
        let in_component =
            |arrow: &Arrow| reached[arrow.src] && reached[arrow.tgt];

        let mut gen_index: BTreeMap<usize, i32> = BTreeMap::new();
        let mut generators = Vec::new();
        for (idx, a) in self.arrows.iter().enumerate() {
            if in_component(a) && !tree.contains(&idx) && !self.is_unit(idx) {
                generators.push(a.id.clone());
                gen_index.insert(idx, generators.len() as i32);
            }
        }
        let letter = |arrow: usize| -> Option<i32> { gen_index.get(&arrow).copied() };

        let mut relations: BTreeSet<Vec<i32>> = BTreeSet::new();
        for g in 0..self.arrows.len() {
            if !in_component(&self.arrows[g]) {
                continue;
            }
            for h in 0..self.arrows.len() {
                let Some(gh) = self.compose[g][h] else {
                    continue;
                };
                if !in_component(&self.arrows[h]) {
                    continue;
                }
                let mut word = Vec::new();
                word.extend(letter(g));
                word.extend(letter(h));
                if let Some(l) = letter(gh) {
                    word.push(-l);
                }
                let word = free_reduce(word);
                if !word.is_empty() {
                    relations.insert(word);
                }
            }
        }
        GroupPresentation {
            generators,
            relations: relations.into_iter().collect(),
        }
    }

    /// Fundamental group of the classifying space at the basepoint's
    /// component. Identified via coset enumeration when the enumeration
    /// closes within the budget; otherwise the presentation is returned.
    pub fn pi1_of_classifying_space(&self, basepoint: usize) -> Result<Pi1, NerveError> {
        let presentation = self.pi1_presentation(basepoint);
        match identify_presented_group(&presentation, COSET_BUDGET) {
            Ok(identified) => Ok(Pi1::Identified(identified)),
            Err(NerveError::EnumerationBudgetExceeded { .. }) => {
                Ok(Pi1::Presentation(presentation))
            }
            Err(other) => Err(other),
        }
    }
}

fn free_reduce(word: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for letter in word {
        if out.last() == Some(&-letter) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    out
}

fn validate_action(
    group: &GroupTable,
    set_size: usize,
    action: &[Vec<usize>],
) -> Result<(), NerveError> {
    let bad = |reason: String| NerveError::InvalidAction(reason);
    if set_size == 0 {
        return Err(bad("action needs a nonempty set".into()));
    }
    if action.len() != group.order() || action.iter().any(|row| row.len() != set_size) {
        return Err(bad("action table shape must be |G| x |X|".into()));
    }
    if action.iter().flatten().any(|&x| x >= set_size) {
        return Err(bad("action table entry out of range".into()));
    }
    let e = group.identity();
    if (0..set_size).any(|x| action[e][x] != x) {
        return Err(bad("identity must act trivially".into()));
    }
    for g in 0..group.order() {
        for h in 0..group.order() {
            for x in 0..set_size {
                if action[group.mul[g][h]][x] != action[g][action[h][x]] {
                    return Err(bad(format!(
                        "action is not compatible with multiplication at ({}, {}, {x})",
                        group.elements[g], group.elements[h]
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A cell of the nerve: an object at level 0, a composable tuple above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NerveCell {
    Object(usize),
    Tuple(Vec<usize>),
}

/// One level of the nerve.
#[derive(Debug, Clone)]
pub struct NerveLevel {
    pub n: usize,
    pub cells: Vec<NerveCell>,
}

impl NerveLevel {
    pub fn size(&self) -> usize {
        self.cells.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SimplicialViolation {
    pub level: usize,
    pub identity: String,
    pub cell: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SimplicialReport {
    pub ok: bool,
    pub levels_checked: usize,
    pub cells_checked: usize,
    pub violation: Option<SimplicialViolation>,
}

/// Fundamental group result: identified when coset enumeration closed,
/// otherwise the raw presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Pi1 {
    Identified(IdentifiedGroup),
    Presentation(GroupPresentation),
}

impl Pi1 {
    pub fn certificate(&self) -> Option<&GroupCertificate> {
        match self {
            Pi1::Identified(g) => Some(&g.certificate),
            Pi1::Presentation(_) => None,
        }
    }
}

/// Functor data between two finite groupoids: images of objects and arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub object_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MoritaComponentComparison {
    pub g1_basepoint: String,
    pub g2_basepoint: String,
    pub pi1_g1: GroupCertificate,
    pub pi1_g2: GroupCertificate,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MoritaReport {
    pub components: Vec<MoritaComponentComparison>,
    pub ok: bool,
}

/// Checks that a witnessed weak equivalence preserves the fundamental
/// groups of classifying spaces, component by component.
///
/// The witness must be a functor that is fully faithful and essentially
/// surjective on the finite data; anything less is rejected.
pub fn morita_pi1_check(
    g1: &FiniteGroupoid,
    g2: &FiniteGroupoid,
    witness: &FunctorData,
) -> Result<MoritaReport, NerveError> {
    validate_weak_equivalence(g1, g2, witness)?;
    let comps = g1.components();
    let mut seen = BTreeSet::new();
    let mut comparisons = Vec::new();
    for (obj, &comp) in comps.iter().enumerate() {
        if !seen.insert(comp) {
            continue;
        }
        let image = witness.object_map[obj];
        let pi1_g1 = expect_identified(g1.pi1_of_classifying_space(obj)?)?;
        let pi1_g2 = expect_identified(g2.pi1_of_classifying_space(image)?)?;
        let agree = pi1_g1.matches(&pi1_g2);
        comparisons.push(MoritaComponentComparison {
            g1_basepoint: g1.objects[obj].clone(),
            g2_basepoint: g2.objects[image].clone(),
            pi1_g1,
            pi1_g2,
            agree,
        });
    }
    let ok = comparisons.iter().all(|c| c.agree);
    Ok(MoritaReport {
        components: comparisons,
        ok,
    })
}

fn expect_identified(pi1: Pi1) -> Result<GroupCertificate, NerveError> {
    match pi1 {
        Pi1::Identified(g) => Ok(g.certificate),
        Pi1::Presentation(_) => Err(NerveError::EnumerationBudgetExceeded {
            budget: COSET_BUDGET,
        }),
    }
}

fn validate_weak_equivalence(
    g1: &FiniteGroupoid,
    g2: &FiniteGroupoid,
    f: &FunctorData,
) -> Result<(), NerveError> {
    let bad = |reason: String| NerveError::NotAWeakEquivalence(reason);
    if f.object_map.len() != g1.objects.len() || f.arrow_map.len() != g1.arrows.len() {
        return Err(bad("functor data has wrong shape".into()));
    }
    if f.object_map.iter().any(|&x| x >= g2.objects.len())
        || f.arrow_map.iter().any(|&a| a >= g2.arrows.len())
    {
        return Err(bad("functor data is out of range".into()));
    }
    for (idx, a) in g1.arrows.iter().enumerate() {
        let fa = &g2.arrows[f.arrow_map[idx]];
        if fa.src != f.object_map[a.src] || fa.tgt != f.object_map[a.tgt] {
            return Err(bad(format!("functor breaks endpoints of arrow {}", a.id)));
        }
    }
    for x in 0..g1.objects.len() {
        if f.arrow_map[g1.units[x]] != g2.units[f.object_map[x]] {
            return Err(bad(format!("functor breaks the unit at {}", g1.objects[x])));
        }
    }
    for g in 0..g1.arrows.len() {
        for h in 0..g1.arrows.len() {
            if let Some(gh) = g1.compose[g][h] {
                let lhs = f.arrow_map[gh];
                let rhs = g2.compose[f.arrow_map[g]][f.arrow_map[h]];
                if rhs != Some(lhs) {
                    return Err(bad("functor breaks composition".into()));
                }
            }
        }
    }
    // fully faithful: bijection on every hom-set
    for x in 0..g1.objects.len() {
        for y in 0..g1.objects.len() {
            let hom1: Vec<usize> = (0..g1.arrows.len())
                .filter(|&a| g1.arrows[a].src == x && g1.arrows[a].tgt == y)
                .collect();
            let image: BTreeSet<usize> = hom1.iter().map(|&a| f.arrow_map[a]).collect();
            let hom2 = (0..g2.arrows.len())
                .filter(|&a| {
                    g2.arrows[a].src == f.object_map[x] && g2.arrows[a].tgt == f.object_map[y]
                })
                .count();
            if image.len() != hom1.len() || image.len() != hom2 {
                return Err(bad(format!(
                    "hom-set from {} to {} is not mapped bijectively",
                    g1.objects[x], g1.objects[y]
                )));
            }
        }
    }
    // essentially surjective: every object of g2 connects to the image
    let image_objects: BTreeSet<usize> = f.object_map.iter().copied().collect();
    for y in 0..g2.objects.len() {
        let connected = image_objects.contains(&y)
            || g2.arrows.iter().any(|a| {
                (a.src == y && image_objects.contains(&a.tgt))
                    || (a.tgt == y && image_objects.contains(&a.src))
            });
        if !connected {
            return Err(bad(format!(
                "object {} is not reached up to isomorphism",
                g2.objects[y]
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BorelReport {
    pub object: String,
    pub stabilizer_order: u64,
    pub stabilizer_certificate: GroupCertificate,
    pub pi1_certificate: GroupCertificate,
    pub agree: bool,
    pub note: String,
}

/// Compares the fundamental group of the classifying space of `G ⋉ X` at
/// an object with the stabilizer of that object. The component of the
/// classifying space is a model for the Borel construction of the orbit,
/// which deformation-retracts onto the classifying space of the
/// stabilizer.
pub fn borel_stabilizer_check(
    group: &GroupTable,
    set: &[String],
    action: &[Vec<usize>],
    object: usize,
) -> Result<BorelReport, NerveError> {
    if object >= set.len() {
        return Err(NerveError::UnknownIdentifier(format!(
            "object index {object} out of range"
        )));
    }
    validate_action(group, set.len(), action)?;

    let stab_elements: Vec<usize> = (0..group.order())
        .filter(|&g| action[g][object] == object)
        .collect();
    let pos: HashMap<usize, usize> = stab_elements
        .iter()
        .enumerate()
        .map(|(i, &g)| (g, i))
        .collect();
    let stab_mul: Vec<Vec<usize>> = stab_elements
        .iter()
        .map(|&g| {
            stab_elements
                .iter()
                .map(|&h| pos[&group.mul[g][h]])
                .collect()
        })
        .collect();
    let stab_table = GroupTable::new(
        stab_elements
            .iter()
            .map(|&g| group.elements[g].clone())
            .collect(),
        stab_mul,
    )?;
    let stabilizer_certificate = stab_table.certificate();

    let groupoid = FiniteGroupoid::action_groupoid(group, set, action)?;
    let pi1 = expect_identified(groupoid.pi1_of_classifying_space(object)?)?;
    let agree = pi1.matches(&stabilizer_certificate);
    Ok(BorelReport {
        object: set[object].clone(),
        stabilizer_order: stab_table.order() as u64,
        stabilizer_certificate,
        pi1_certificate: pi1,
        agree,
        note: "component of the classifying space of the action groupoid carries the \
               homotopy type of the Borel construction of the orbit, whose fundamental \
               group is the stabilizer"
            .into(),
    })
}
