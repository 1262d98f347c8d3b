//! Small exact linear-algebra routines: rational rank by Gaussian
//! elimination and integer determinants by fraction-free (Bareiss)
//! elimination. Desk-scale matrices only.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Rank of the row system by exact Gauss elimination.
pub(crate) fn rank(mut rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row][col].clone();
        for r in pivot_row + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            // factor by which the pivot row must be scaled before subtracting
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let delta = rows[pivot_row][c].clone() * factor.clone();
                let scaled = rows[r][c].clone() * pivot.clone();
                rows[r][c] = scaled - delta;
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(found) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if found != col {
            m.swap(col, found);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                let num = &m[r][c] * &m[col][col] - &m[r][col] * &m[col][c];
                m[r][c] = num / &prev; // exact by Bareiss' identity
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[col][col].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn rank_of_small_systems() {
        assert_eq!(rank(vec![vec![q(1), q(2)], vec![q(2), q(4)]], 2), 1);
        assert_eq!(rank(vec![vec![q(1), q(0)], vec![q(0), q(3)]], 2), 2);
        assert_eq!(rank(vec![vec![q(0), q(0)]], 2), 0);
        // dependent third row
        let rows = vec![
            vec![q(1), q(1), q(0)],
            vec![q(0), q(1), q(1)],
            vec![q(1), q(2), q(1)],
        ];
        assert_eq!(rank(rows, 3), 2);
    }

    #[test]
    fn determinants_match_cofactor_values() {
        let b = |v: i64| BigInt::from(v);
        assert_eq!(bareiss_determinant(vec![vec![b(7)]]), b(7));
        assert_eq!(
            bareiss_determinant(vec![vec![b(1), b(2)], vec![b(3), b(4)]]),
            b(-2)
        );
        // needs a row swap
        assert_eq!(
            bareiss_determinant(vec![vec![b(0), b(1)], vec![b(1), b(0)]]),
            b(-1)
        );
        let m = vec![
            vec![b(2), b(0), b(1)],
            vec![b(1), b(3), b(2)],
            vec![b(0), b(1), b(4)],
        ];
        // cofactor expansion: 2*(12-2) - 0 + 1*(1-0) = 21
        assert_eq!(bareiss_determinant(m), b(21));
        // singular
        let s = vec![
            vec![b(1), b(2), b(3)],
            vec![b(2), b(4), b(6)],
            vec![b(0), b(1), b(1)],
        ];
        assert_eq!(bareiss_determinant(s), b(0));
    }
}
