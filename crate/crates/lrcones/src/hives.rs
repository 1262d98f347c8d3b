//! Hives: rhombus membership and boundary type.
//!
//! A hive of size k is a triangular array H (same storage and text format
//! as LR triangles, `h[0][0] = 0`) in which, for every rhombus of the grid,
//! the labels at the obtuse vertices sum to at least the labels at the
//! acute vertices:
//!
//! - (R)  `h[i][j] - h[i][j-1] >= h[i-1][j] - h[i-1][j-1]` for `1 <= i < j <= k`,
//! - (V)  `h[i-1][j] - h[i-1][j-1] >= h[i][j+1] - h[i][j]` for `1 <= i <= j < k`,
//! - (L)  `h[i][j] - h[i-1][j] >= h[i+1][j+1] - h[i][j+1]` for `1 <= i <= j < k`.
//!
//! The quantifier ranges are exactly these; no extra boundary inequalities
//! exist.

use num_traits::Zero;

use crate::error::{CheckReport, Error};
use crate::rational::Rational;
use crate::triangle::{Scalar, TriangularArray};
use crate::weights::{TriangleType, WeightVector};

/// A hive is a plain triangular array; only the inequality system differs.
pub type Hive = TriangularArray<Rational>;

/// Checks h00 = 0 and (R), (V), (L); reports the first violation, families
/// in that order, each scanned by ascending (i, j).
pub fn hive_validate<T: Scalar + PartialOrd>(h: &TriangularArray<T>) -> CheckReport {
    let k = h.k();
    if !h.get(0, 0).is_zero() {
        return CheckReport::fail("h00", 0, 0);
    }
    let d = |a: &T, b: &T| a.clone() - b.clone();
    for i in 1..=k {
        for j in (i + 1)..=k {
            if d(h.get(i, j), h.get(i, j - 1)) < d(h.get(i - 1, j), h.get(i - 1, j - 1)) {
                return CheckReport::fail("R", i, j);
            }
        }
    }
    for i in 1..=k {
        for j in i..k {
            if d(h.get(i - 1, j), h.get(i - 1, j - 1)) < d(h.get(i, j + 1), h.get(i, j)) {
                return CheckReport::fail("V", i, j);
            }
        }
    }
    for i in 1..=k {
        for j in i..k {
            if d(h.get(i, j), h.get(i - 1, j)) < d(h.get(i + 1, j + 1), h.get(i, j + 1)) {
                return CheckReport::fail("L", i, j);
            }
        }
    }
    CheckReport::ok()
}

/// Raw boundary differences (B1')-(B3') without a membership check:
/// `mu[j] = h[0][j] - h[0][j-1]`, `lambda[j] = h[j][j] - h[j-1][j-1]`,
/// `nu[i] = h[i][k] - h[i-1][k]`, each indexed 1..=k (returned 0-based).
pub fn hive_boundary_unchecked<T: Scalar>(h: &TriangularArray<T>) -> (Vec<T>, Vec<T>, Vec<T>) {
    let k = h.k();
    let d = |a: &T, b: &T| a.clone() - b.clone();
    let lambda = (1..=k).map(|j| d(h.get(j, j), h.get(j - 1, j - 1))).collect();
    let mu = (1..=k).map(|j| d(h.get(0, j), h.get(0, j - 1))).collect();
    let nu = (1..=k).map(|i| d(h.get(i, k), h.get(i - 1, k))).collect();
    (lambda, mu, nu)
}

/// Boundary type of a hive cone member. Rejects non-members.
///
/// All three vectors telescope to h[k][k] resp. h[0][k], so
/// |lambda| = |mu| + |nu| holds exactly for every member.
pub fn hive_type(h: &Hive) -> Result<TriangleType, Error> {
    hive_validate(h).into_result()?;
    let (lambda, mu, nu) = hive_boundary_unchecked(h);
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
