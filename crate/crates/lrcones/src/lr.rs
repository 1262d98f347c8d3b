//! Littlewood-Richardson triangles: membership and boundary type.
//!
//! An array A in T_k is an LR triangle when it satisfies
//!
//! - (P)   `a[i][j] >= 0` for `1 <= i < j <= k`,
//! - (CS)  `sum(a[p][j] for p=0..=i-1) >= sum(a[p][j+1] for p=0..=i)`
//!   for `1 <= i <= j < k`,
//! - (LR)  `sum(a[i][q] for q=i..=j) >= sum(a[i+1][q] for q=i+1..=j+1)`
//!   for `1 <= i <= j < k`.
//!
//! Boundary entries `a[0][j]` and `a[j][j]` may be negative without
//! violating membership.

use num_traits::Zero;

use crate::error::{CheckReport, Error};
use crate::rational::Rational;
use crate::triangle::{Scalar, TriangularArray};
use crate::weights::{TriangleType, WeightVector};

/// Prefix sums within row j: `col[j][i] = a[0][j] + ... + a[i][j]`.
fn column_prefixes<T: Scalar>(a: &TriangularArray<T>) -> Vec<Vec<T>> {
    a.rows()
        .iter()
        .map(|row| {
            let mut acc = T::zero();
            row.iter()
                .map(|v| {
                    acc = acc.clone() + v.clone();
                    acc.clone()
                })
                .collect()
        })
        .collect()
}

/// Range sums `row[i][j] = a[i][i] + ... + a[i][j]`, indexed by `[i][j - i]`.
fn row_ranges<T: Scalar>(a: &TriangularArray<T>) -> Vec<Vec<T>> {
    let k = a.k();
    (0..=k)
        .map(|i| {
            let mut acc = T::zero();
            (i..=k)
                .map(|j| {
                    acc = acc.clone() + a.get(i, j).clone();
                    acc.clone()
                })
                .collect()
        })
        .collect()
}

/// Checks (P), (CS), (LR); reports the first violated inequality, families
/// in that order, each scanned by ascending (i, j).
pub fn lr_validate<T: Scalar + PartialOrd>(a: &TriangularArray<T>) -> CheckReport {
    let k = a.k();
    let zero = T::zero();
    for i in 1..=k {
        for j in (i + 1)..=k {
            if *a.get(i, j) < zero {
                return CheckReport::fail("P", i, j);
            }
        }
    }
    let col = column_prefixes(a);
    for i in 1..k {
        for j in i..k {
            if col[j][i - 1] < col[j + 1][i] {
                return CheckReport::fail("CS", i, j);
            }
        }
    }
    let row = row_ranges(a);
    for i in 1..k {
        for j in i..k {
            if row[i][j - i] < row[i + 1][j + 1 - (i + 1)] {
                return CheckReport::fail("LR", i, j);
            }
        }
    }
    CheckReport::ok()
}

/// Raw boundary sums (B1)-(B3) without any membership check:
/// `mu[j] = a[0][j]`, `lambda[j] = sum of column j`, `nu[i] = sum of row i`,
/// each indexed 1..=k (returned 0-based).
///
/// Outside the LR cone these vectors carry no semantics; [`lr_type`] is the
/// checked variant.
pub fn lr_boundary_unchecked<T: Scalar>(a: &TriangularArray<T>) -> (Vec<T>, Vec<T>, Vec<T>) {
    let k = a.k();
    let col = column_prefixes(a);
    let row = row_ranges(a);
    let lambda: Vec<T> = (1..=k).map(|j| col[j][j].clone()).collect();
    let mu: Vec<T> = (1..=k).map(|j| a.get(0, j).clone()).collect();
    let nu: Vec<T> = (1..=k).map(|i| row[i][k - i].clone()).collect();
    (lambda, mu, nu)
}

/// Boundary type of an LR cone member. Rejects non-members.
///
/// For members the three vectors are weakly decreasing and satisfy
/// |lambda| = |mu| + |nu|.
pub fn lr_type(a: &TriangularArray<Rational>) -> Result<TriangleType, Error> {
    lr_validate(a).into_result()?;
    let (lambda, mu, nu) = lr_boundary_unchecked(a);
    let t = TriangleType::new(
        WeightVector::new(lambda)?,
        WeightVector::new(mu)?,
        WeightVector::new(nu)?,
    )?;
    debug_assert!(t.lambda.is_weakly_decreasing());
    debug_assert!(t.mu.is_weakly_decreasing());
    debug_assert!(t.nu.is_weakly_decreasing());
    debug_assert!(crate::weights::type_sum_check(&t));
    Ok(t)
}

/// The implied inequality `sum of column j >= sum of column j+1` for
/// `1 <= j < k`; holds on every LR cone member (it follows from (CS) and
/// (LR) at i = j) and is exposed only as a property-test hook.
pub fn redundant_inequality_check<T: Scalar + PartialOrd>(a: &TriangularArray<T>) -> bool {
    let k = a.k();
    let col = column_prefixes(a);
    (1..k).all(|j| col[j][j] >= col[j + 1][j + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::weights::type_sum_check;

    #[test]
    fn fig3_is_a_member() {
        let fig3 = fixtures::fig3_triangle();
        assert!(lr_validate(&fig3).is_ok());
        assert!(redundant_inequality_check(&fig3));
    }

    #[test]
    fn zero_array_is_a_member() {
        let zero: TriangularArray = TriangularArray::zero(4);
        assert!(lr_validate(&zero).is_ok());
        let t = lr_type(&zero).unwrap();
        assert!(t.lambda.entries().iter().all(|e| e.is_zero()));
        assert!(t.nu.entries().iter().all(|e| e.is_zero()));
    }

    #[test]
    fn sign_flip_fails_p() {
        let mut fig3 = fixtures::fig3_triangle();
        fig3.set(1, 2, Rational::from(-1));
        let report = lr_validate(&fig3);
        assert_eq!(report, CheckReport::fail("P", 1, 2));
    }

    #[test]
    fn fig3_type_is_the_running_example() {
        let t = lr_type(&fixtures::fig3_triangle()).unwrap();
        assert_eq!(t, fixtures::eq1_type());
        assert!(type_sum_check(&t));
    }

    #[test]
    fn negative_boundary_entries_are_allowed() {
        // k=2 member with a negative diagonal entry
        let rows = vec![
            vec![0.into()],
            vec![0.into(), 0.into()],
            vec![0.into(), 0.into(), Rational::from(-1)],
        ];
        let a = TriangularArray::from_rows(rows).unwrap();
        assert!(lr_validate(&a).is_ok());
        let t = lr_type(&a).unwrap();
        assert_eq!(t.nu.get(1), &Rational::from(-1));
        // negative left-boundary entry, k=1 has no constraints at all
        let b = TriangularArray::from_rows(vec![
            vec![0.into()],
            vec![Rational::from(-5), 3.into()],
        ])
        .unwrap();
        assert!(lr_validate(&b).is_ok());
    }

    #[test]
    fn type_refused_outside_the_cone() {
        let mut bad = fixtures::fig3_triangle();
        bad.set(1, 2, Rational::from(-1));
        assert!(lr_type(&bad).is_err());
        // the unchecked accessor still computes raw sums
        let (lambda, _, _) = lr_boundary_unchecked(&bad);
        assert_eq!(lambda[1], Rational::from(13));
    }

    #[test]
    fn first_violation_is_lexicographically_first() {
        // break (CS) at (1,1) and (LR) at (1,1); (CS) is reported first
        let rows = vec![
            vec![0.into()],
            vec![0.into(), 0.into()],
            vec![5.into(), 1.into(), 0.into()],
        ];
        let a = TriangularArray::from_rows(rows).unwrap();
        assert_eq!(lr_validate(&a), CheckReport::fail("CS", 1, 1));
    }
}
