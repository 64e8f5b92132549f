//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::ring::Q;

/// Outcome of solving A x = b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Q>),
    /// Consistent, with this many free variables.
    Underdetermined(usize),
    Inconsistent,
}

/// Row-reduces `rows` in place and returns the pivot columns.
fn reduce(rows: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                let pivot_row = rows[r].clone();
                for (v, p) in rows[i].iter_mut().zip(pivot_row) {
                    *v -= f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(matrix: &[Vec<Q>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rows = matrix.to_vec();
    reduce(&mut rows, cols).len()
}

pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Solution {
    let n = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(*v);
            r
        })
        .collect();
    let pivots = reduce(&mut rows, n + 1);
    if pivots.contains(&n) {
        return Solution::Inconsistent;
    }
    if pivots.len() < n {
        return Solution::Underdetermined(n - pivots.len());
    }
    Solution::Unique(rows.iter().take(n).map(|r| r[n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::ring::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn unique_and_degenerate() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(solve(&a, &[q(3), q(4)]), Solution::Unique(vec![q(1), q(1)]));
        let a = m(&[&[36, 3], &[36, 3]]);
        assert_eq!(solve(&a, &[q(36), q(36)]), Solution::Underdetermined(1));
        assert_eq!(solve(&a, &[q(36), q(35)]), Solution::Inconsistent);
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]])), 2);
    }
}
