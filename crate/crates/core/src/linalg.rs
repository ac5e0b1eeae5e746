//! Small dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::semifield::Rational;

/// Row echelon data: the reduced rows and the pivot column of each row.
pub(crate) struct Echelon {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form of `rows`, each of length `cols`.
pub(crate) fn rref(mut rows: Vec<Vec<Rational>>, cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v /= &lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..rows[i].len() {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

pub(crate) fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    rref(rows.to_vec(), cols).pivots.len()
}

/// Solves `A x = b`, returning one solution (free variables set to zero)
/// or `None` when the system is inconsistent.
pub(crate) fn solve(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    let augmented: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let ech = rref(augmented, cols + 1);
    if ech.pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// A basis of the right null space of `rows`.
pub(crate) fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let ech = rref(rows.to_vec(), cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !ech.pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Calls `visit` with every `k`-element subset of `0..n` in lexicographic
/// order. Stops early when `visit` returns `false`.
pub(crate) fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::int;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_and_solve() {
        let a = vec![row(&[1, 2]), row(&[2, 4])];
        assert_eq!(rank(&a, 2), 1);
        assert!(solve(&a, &row(&[1, 3]), 2).is_none());
        let x = solve(&a, &row(&[1, 2]), 2).unwrap();
        assert_eq!(dot(&a[0], &x), int(1));
    }

    #[test]
    fn nullspace_basis() {
        let a = vec![row(&[1, 1, 0])];
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(dot(&a[0], v), int(0));
        }
    }

    #[test]
    fn subsets() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        let mut empty = 0;
        for_each_subset(3, 0, |_| {
            empty += 1;
            true
        });
        assert_eq!(empty, 1);
    }
}
