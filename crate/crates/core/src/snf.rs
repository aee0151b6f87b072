//! Smith normal form for small integer matrices.
//!
//! Desk-scale inputs only (presentation matrices with a few dozen rows and
//! columns); entries are widened to `i128` so intermediate elimination
//! cannot overflow at these sizes.

/// Reduces `m` to Smith normal form and returns the diagonal entries
/// `d_1 | d_2 | …` (nonnegative, divisibility chain, zeros trailing).
pub(crate) fn smith_diagonal(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let rank_bound = rows.min(cols);
    let mut diag = Vec::with_capacity(rank_bound);

    let mut t = 0;
    while t < rank_bound {
        let Some((pi, pj)) = pivot(&m, t) else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            // clear column t below the pivot
            for i in t + 1..rows {
                while m[i][t] != 0 {
                    let q = m[i][t].div_euclid(m[t][t]);
                    for j in t..cols {
                        let v = m[t][j];
                        m[i][j] -= q * v;
                    }
                    if m[i][t] != 0 {
                        m.swap(t, i);
                    }
                }
            }
            // clear row t to the right of the pivot
            let mut row_clear = true;
            for j in t + 1..cols {
                while m[t][j] != 0 {
                    let q = m[t][j].div_euclid(m[t][t]);
                    for row in m.iter_mut().skip(t) {
                        let v = row[t];
                        row[j] -= q * v;
                    }
                    if m[t][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        row_clear = false;
                    }
                }
            }
            if row_clear && (t + 1..rows).all(|i| m[i][t] == 0) {
                break;
            }
        }

        // enforce divisibility: the pivot must divide every remaining entry
        let p = m[t][t];
        if let Some((i, _)) = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| m[i][j] % p != 0)
        {
            for j in t..cols {
                let v = m[i][j];
                m[t][j] += v;
            }
            continue; // redo this pivot with the merged row
        }

        diag.push(m[t][t].abs());
        t += 1;
    }

    while diag.len() < rank_bound {
        diag.push(0);
    }
    diag
}

/// Invariant factors of the abelian group `Z^generators / rows(relations)`:
/// returns `(rank, torsion)` with `torsion` the factors `> 1` in a
/// divisibility chain.
pub(crate) fn abelian_quotient(generators: usize, relations: &[Vec<i128>]) -> (usize, Vec<u64>) {
    debug_assert!(relations.iter().all(|r| r.len() == generators));
    let diag = smith_diagonal(relations.to_vec());
    let nonzero: Vec<i128> = diag.iter().copied().filter(|&d| d != 0).collect();
    let rank = generators - nonzero.len();
    let torsion = nonzero
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| d as u64)
        .collect();
    (rank, torsion)
}

fn pivot(m: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().skip(t) {
            if v != 0 && best.map_or(true, |(bi, bj)| v.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix() {
        let diag = smith_diagonal(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(diag, vec![1, 6]);
    }

    #[test]
    fn chain_is_divisible() {
        let diag = smith_diagonal(vec![vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]);
        assert_eq!(diag.len(), 3);
        for w in diag.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0, "{diag:?}");
            }
        }
        // |det| preserved
        assert_eq!(diag.iter().product::<i128>(), 240);
    }

    #[test]
    fn rank_deficient() {
        // Z^3 / <(1,1,0), (2,2,0)> = Z^2
        let (rank, torsion) = abelian_quotient(3, &[vec![1, 1, 0], vec![2, 2, 0]]);
        assert_eq!((rank, torsion), (2, vec![]));
    }

    #[test]
    fn klein_four_presentation() {
        // Z^2 / <2e1, 2e2>
        let (rank, torsion) = abelian_quotient(2, &[vec![2, 0], vec![0, 2]]);
        assert_eq!((rank, torsion), (0, vec![2, 2]));
    }
}
