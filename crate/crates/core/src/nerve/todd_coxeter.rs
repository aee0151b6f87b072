//! Coset enumeration for finite presentations (trivial subgroup).
//!
//! Standard relator-scanning enumeration with a union-find coincidence
//! queue. Words are slices of signed 1-based generator indices; the budget
//! caps the total number of cosets ever defined.

use super::NerveError;

/// A completed enumeration: the live cosets renumbered `0..count`, with
/// the right action of each generator as a permutation.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub coset_count: usize,
    /// `action[g][c]` is the coset `c · x_g`.
    pub action: Vec<Vec<usize>>,
}

struct Tables {
    n_gens: usize,
    /// `table[c][col]`, columns `2g` for `x_g` and `2g+1` for `x_g⁻¹`.
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    defined: usize,
    budget: usize,
}

fn column(letter: i32) -> usize {
    if letter > 0 {
        2 * (letter as usize - 1)
    } else {
        2 * ((-letter) as usize - 1) + 1
    }
}

fn inverse_column(letter: i32) -> usize {
    column(-letter)
}

impl Tables {
    fn new(n_gens: usize, budget: usize) -> Self {
        Tables {
            n_gens,
            table: vec![vec![None; 2 * n_gens]],
            parent: vec![0],
            defined: 1,
            budget,
        }
    }

    fn rep(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            let up = self.parent[self.parent[c]];
            self.parent[c] = up;
            c = up;
        }
        c
    }

    fn get(&mut self, c: usize, col: usize) -> Option<usize> {
        self.table[c][col].map(|t| self.rep(t))
    }

    fn set(&mut self, c: usize, col: usize, t: usize) {
        self.table[c][col] = Some(t);
        self.table[t][col ^ 1] = Some(c);
    }

    fn define(&mut self, c: usize, col: usize) -> Result<usize, NerveError> {
        if self.defined >= self.budget {
            return Err(NerveError::EnumerationBudgetExceeded {
                budget: self.budget,
            });
        }
        let fresh = self.table.len();
        self.table.push(vec![None; 2 * self.n_gens]);
        self.parent.push(fresh);
        self.defined += 1;
        self.set(c, col, fresh);
        Ok(fresh)
    }

    fn merge(&mut self, a: usize, b: usize) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let a = self.rep(a);
            let b = self.rep(b);
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop] = keep;
            for col in 0..2 * self.n_gens {
                if let Some(t) = self.get(drop, col) {
                    match self.get(keep, col) {
                        None => self.set(keep, col, t),
                        Some(u) if u != t => queue.push((t, u)),
                        _ => {}
                    }
                }
            }
        }
    }

    /// Traces `word` from coset `c`, filling gaps (defining cosets for
    /// gaps of length ≥ 2, deducing for length 1) and recording a
    /// coincidence when both ends meet disagreeing.
    fn scan_and_fill(&mut self, c: usize, word: &[i32]) -> Result<(), NerveError> {
        let mut f = self.rep(c);
        let mut b = f;
        let mut i = 0usize;
        let mut j = word.len(); // word[i..j] is the unscanned middle
        loop {
            while i < j {
                match self.get(f, column(word[i])) {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                if f != b {
                    self.merge(f, b);
                }
                return Ok(());
            }
            while j > i {
                match self.get(b, inverse_column(word[j - 1])) {
                    Some(prev) => {
                        b = prev;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if i == j {
                if f != b {
                    self.merge(f, b);
                }
                return Ok(());
            }
            if i + 1 == j {
                // single gap: deduction
                self.set(f, column(word[i]), b);
                return Ok(());
            }
            f = self.define(f, column(word[i]))?;
            i += 1;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup, i.e. the elements of the
/// presented group. Fails with the budget error if more than `max_cosets`
/// cosets get defined before the table closes.
pub fn enumerate_cosets(
    n_gens: usize,
    relations: &[Vec<i32>],
    max_cosets: usize,
) -> Result<Enumeration, NerveError> {
    if n_gens == 0 {
        return Ok(Enumeration {
            coset_count: 1,
            action: Vec::new(),
        });
    }
    let mut t = Tables::new(n_gens, max_cosets.max(1));
    let mut current = 0usize;
    loop {
        // next live coset at or after `current`
        while current < t.table.len() && t.parent[current] != current {
            current += 1;
        }
        if current >= t.table.len() {
            break;
        }
        for rel in relations {
            if t.parent[current] != current {
                break; // merged away mid-processing
            }
            t.scan_and_fill(current, rel)?;
        }
        if t.parent[current] == current {
            for col in 0..2 * t.n_gens {
                if t.parent[current] != current {
                    break;
                }
                if t.get(current, col).is_none() {
                    t.define(current, col)?;
                }
            }
        }
        current += 1;
    }

    // compress live cosets
    let live: Vec<usize> = (0..t.table.len()).filter(|&c| t.parent[c] == c).collect();
    let index: std::collections::HashMap<usize, usize> =
        live.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut action = vec![vec![0usize; live.len()]; n_gens];
    for (i, &c) in live.iter().enumerate() {
        for g in 0..n_gens {
            let t_c = t
                .get(c, 2 * g)
                .expect("closed table has a complete row for every live coset");
            action[g][i] = index[&t_c];
        }
    }
    Ok(Enumeration {
        coset_count: live.len(),
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group() {
        // <x | x^5>
        let e = enumerate_cosets(1, &[vec![1, 1, 1, 1, 1]], 1000).unwrap();
        assert_eq!(e.coset_count, 5);
    }

    #[test]
    fn klein_four() {
        // <a, b | a^2, b^2, abab>
        let e = enumerate_cosets(2, &[vec![1, 1], vec![2, 2], vec![1, 2, 1, 2]], 1000).unwrap();
        assert_eq!(e.coset_count, 4);
    }

    #[test]
    fn symmetric_group_s3() {
        // <a, b | a^2, b^3, (ab)^2>
        let e = enumerate_cosets(
            2,
            &[vec![1, 1], vec![2, 2, 2], vec![1, 2, 1, 2]],
            1000,
        )
        .unwrap();
        assert_eq!(e.coset_count, 6);
    }

    #[test]
    fn free_generator_blows_budget() {
        // <x | > is infinite
        let err = enumerate_cosets(1, &[], 50).unwrap_err();
        assert!(matches!(
            err,
            NerveError::EnumerationBudgetExceeded { budget: 50 }
        ));
    }

    #[test]
    fn trivializing_relation() {
        // <x | x>
        let e = enumerate_cosets(1, &[vec![1]], 10).unwrap();
        assert_eq!(e.coset_count, 1);
    }

    #[test]
    fn quaternion_group() {
        // <a, b | a^4, a^2 b^-2, b^-1 a b a>
        let e = enumerate_cosets(
            2,
            &[
                vec![1, 1, 1, 1],
                vec![1, 1, -2, -2],
                vec![-2, 1, 2, 1],
            ],
            1000,
        )
        .unwrap();
        assert_eq!(e.coset_count, 8);
    }
}
