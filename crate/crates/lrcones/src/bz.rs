//! Berenstein-Zelevinsky labelings.
//!
//! A labeling of size k carries a triple `(x[i][j], y[i][j], z[i][j])` for
//! each `1 <= i <= j <= k` (triangle i on level j). Levels are stored top
//! down, so the space has 3*C(k+1,2) scalars.
//!
//! `W_k` is the subspace where every hexagon's opposite edge sums agree:
//!
//! - (BZ1) `y[i][j] + z[i][j] = y[i+1][j+1] + z[i][j+1]`
//! - (BZ2) `x[i][j+1] + y[i][j] = x[i+1][j+1] + y[i+1][j+1]`
//! - (BZ3) `x[i][j+1] + z[i][j+1] = x[i+1][j+1] + z[i][j]`
//!
//! for `1 <= i <= j < k`; any one of the three follows from the other two.
//! BZ triangles are W_k members with nonnegative entries. A BZ triangle
//! does not have a unique type: `bz_type_match` tests a candidate
//! (lambda, mu, nu) against the boundary conditions (B1'')-(B3'').

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{CheckReport, Error};
use crate::linalg;
use crate::rational::Rational;
use crate::triangle::Scalar;
use crate::weights::TriangleType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BzTriple<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BZLabeling<T = Rational> {
    k: usize,
    levels: Vec<Vec<BzTriple<T>>>,
}

impl<T: Scalar> BZLabeling<T> {
    pub fn zero(k: usize) -> Self {
        assert!(k >= 1, "size k must be positive");
        BZLabeling {
            k,
            levels: (1..=k)
                .map(|j| {
                    (0..j)
                        .map(|_| BzTriple {
                            x: T::zero(),
                            y: T::zero(),
                            z: T::zero(),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Builds a labeling from levels 1..=k; level j holds j triples.
    pub fn from_levels(levels: Vec<Vec<BzTriple<T>>>) -> Result<Self, Error> {
        let k = levels.len();
        if k < 1 {
            return Err(Error::Size("labeling needs size k >= 1".into()));
        }
        for (idx, level) in levels.iter().enumerate() {
            if level.len() != idx + 1 {
                return Err(Error::Size(format!(
                    "level {} has {} triples, expected {}",
                    idx + 1,
                    level.len(),
                    idx + 1
                )));
            }
        }
        Ok(BZLabeling { k, levels })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of scalar labels, 3*C(k+1,2).
    pub fn scalar_count(&self) -> usize {
        3 * self.k * (self.k + 1) / 2
    }

    pub fn triple(&self, i: usize, j: usize) -> &BzTriple<T> {
        debug_assert!(1 <= i && i <= j && j <= self.k);
        &self.levels[j - 1][i - 1]
    }

    pub fn triple_mut(&mut self, i: usize, j: usize) -> &mut BzTriple<T> {
        debug_assert!(1 <= i && i <= j && j <= self.k);
        &mut self.levels[j - 1][i - 1]
    }

    pub fn x(&self, i: usize, j: usize) -> &T {
        &self.triple(i, j).x
    }

    pub fn y(&self, i: usize, j: usize) -> &T {
        &self.triple(i, j).y
    }

    pub fn z(&self, i: usize, j: usize) -> &T {
        &self.triple(i, j).z
    }

    pub fn levels(&self) -> &[Vec<BzTriple<T>>] {
        &self.levels
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BZLabeling<U> {
        BZLabeling {
            k: self.k,
            levels: self
                .levels
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .map(|t| BzTriple {
                            x: f(&t.x),
                            y: f(&t.y),
                            z: f(&t.z),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl BZLabeling<i64> {
    pub fn to_rational(&self) -> BZLabeling<Rational> {
        self.map(|&v| Rational::from(v))
    }
}

/// Membership in the hexagon subspace W_k. All three equality families are
/// checked even though each hexagon only contributes two independent ones;
/// the first failure is reported family-major, then by ascending (i, j).
pub fn in_wk<T: Scalar>(x: &BZLabeling<T>) -> CheckReport {
    let k = x.k();
    let sum = |a: &T, b: &T| a.clone() + b.clone();
    for i in 1..k {
        for j in i..k {
            if sum(x.y(i, j), x.z(i, j)) != sum(x.y(i + 1, j + 1), x.z(i, j + 1)) {
                return CheckReport::fail("BZ1", i, j);
            }
        }
    }
    for i in 1..k {
        for j in i..k {
            if sum(x.x(i, j + 1), x.y(i, j)) != sum(x.x(i + 1, j + 1), x.y(i + 1, j + 1)) {
                return CheckReport::fail("BZ2", i, j);
            }
        }
    }
    for i in 1..k {
        for j in i..k {
            if sum(x.x(i, j + 1), x.z(i, j + 1)) != sum(x.x(i + 1, j + 1), x.z(i, j)) {
                return CheckReport::fail("BZ3", i, j);
            }
        }
    }
    CheckReport::ok()
}

/// A BZ triangle is a W_k member with nonnegative entries.
pub fn bz_validate<T: Scalar + PartialOrd>(x: &BZLabeling<T>) -> CheckReport {
    let w = in_wk(x);
    if !w.is_ok() {
        return w;
    }
    let zero = T::zero();
    for i in 1..=x.k() {
        for j in i..=x.k() {
            let t = x.triple(i, j);
            if t.x < zero {
                return CheckReport::fail("nonneg(x)", i, j);
            }
            if t.y < zero {
                return CheckReport::fail("nonneg(y)", i, j);
            }
            if t.z < zero {
                return CheckReport::fail("nonneg(z)", i, j);
            }
        }
    }
    CheckReport::ok()
}

/// Boundary match (B1'')-(B3'') against raw length-(k+1) weight slices.
pub(crate) fn type_match_raw<T: Scalar>(x: &BZLabeling<T>, lambda: &[T], mu: &[T], nu: &[T]) -> bool {
    let k = x.k();
    debug_assert!(lambda.len() == k + 1 && mu.len() == k + 1 && nu.len() == k + 1);
    let sum = |a: &T, b: &T| a.clone() + b.clone();
    let diff = |v: &[T], idx: usize| v[idx - 1].clone() - v[idx].clone();
    (1..=k).all(|j| sum(x.x(1, j), x.y(1, j)) == diff(mu, j))
        && (1..=k).all(|j| sum(x.x(j, j), x.z(j, j)) == diff(lambda, j))
        && (1..=k).all(|i| sum(x.y(i, k), x.z(i, k)) == diff(nu, i))
}

/// Tests whether the labeling matches the candidate type (lambda, mu, nu)
/// of length k+1. Only consecutive differences are constrained, so a
/// labeling matches a whole family of candidate triples; whether a
/// candidate also satisfies |lambda| = |mu| + |nu| is a separate check
/// ([`crate::weights::type_sum_check`]).
pub fn bz_type_match(x: &BZLabeling<Rational>, t: &TriangleType) -> Result<bool, Error> {
    if t.len() != x.k() + 1 {
        return Err(Error::Size(format!(
            "type has length {}, labeling of size {} needs length {}",
            t.len(),
            x.k(),
            x.k() + 1
        )));
    }
    Ok(type_match_raw(
        x,
        t.lambda.entries(),
        t.mu.entries(),
        t.nu.entries(),
    ))
}

/// Index of variable (i, j, component) in the order
/// x11, y11, z11, x12, y12, z12, x22, ..., zkk (levels outermost).
fn var_index(i: usize, j: usize, comp: usize) -> usize {
    3 * (j * (j - 1) / 2 + (i - 1)) + comp
}

/// Rank of the (BZ2)+(BZ3) constraint system over the 3*C(k+1,2)
/// variables, computed by exact elimination.
pub fn wk_constraint_rank(k: usize) -> usize {
    assert!(k >= 1);
    let nvars = 3 * k * (k + 1) / 2;
    let mut rows = Vec::new();
    for i in 1..k {
        for j in i..k {
            // BZ2: x(i,j+1) + y(i,j) - x(i+1,j+1) - y(i+1,j+1) = 0
            let mut row = vec![Rational::zero(); nvars];
            row[var_index(i, j + 1, 0)] = Rational::from(1);
            row[var_index(i, j, 1)] = Rational::from(1);
            row[var_index(i + 1, j + 1, 0)] = Rational::from(-1);
            row[var_index(i + 1, j + 1, 1)] = Rational::from(-1);
            rows.push(row);
            // BZ3: x(i,j+1) + z(i,j+1) - x(i+1,j+1) - z(i,j) = 0
            let mut row = vec![Rational::zero(); nvars];
            row[var_index(i, j + 1, 0)] = Rational::from(1);
            row[var_index(i, j + 1, 2)] = Rational::from(1);
            row[var_index(i + 1, j + 1, 0)] = Rational::from(-1);
            row[var_index(i, j, 2)] = Rational::from(-1);
            rows.push(row);
        }
    }
    linalg::rank(rows, nvars)
}

/// Dimension of W_k: 3*C(k+1,2) minus the exact rank of the hexagon
/// system. Equals k(k+5)/2.
pub fn dim_wk(k: usize) -> usize {
    3 * k * (k + 1) / 2 - wk_constraint_rank(k)
}

#[derive(Serialize, Deserialize)]
struct BzDoc {
    k: usize,
    levels: Vec<Vec<[Rational; 3]>>,
}

impl BZLabeling<Rational> {
    /// Parses the BZ JSON document `{"k":n,"levels":[[[x,y,z],...],...]}`.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let doc: BzDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.levels.len() != doc.k {
            return Err(Error::Size(format!(
                "k={} but {} levels given",
                doc.k,
                doc.levels.len()
            )));
        }
        let levels = doc
            .levels
            .into_iter()
            .map(|level| {
                level
                    .into_iter()
                    .map(|[x, y, z]| BzTriple { x, y, z })
                    .collect()
            })
            .collect();
        Self::from_levels(levels)
    }

    /// Canonical JSON form: sorted keys, compact separators, trailing
    /// newline, integral entries as JSON integers.
    pub fn to_json(&self) -> String {
        let doc = BzDoc {
            k: self.k,
            levels: self
                .levels
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .map(|t| [t.x.clone(), t.y.clone(), t.z.clone()])
                        .collect()
                })
                .collect(),
        };
        let mut s = serde_json::to_string(&doc).expect("labeling serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn to_integer(&self) -> Result<BZLabeling<i64>, Error> {
        let mut levels = Vec::with_capacity(self.k);
        for (idx, level) in self.levels.iter().enumerate() {
            let j = idx + 1;
            let mut out = Vec::with_capacity(level.len());
            for (off, t) in level.iter().enumerate() {
                let conv = |v: &Rational| {
                    v.to_i64().ok_or(Error::NonInteger { i: off + 1, j })
                };
                out.push(BzTriple {
                    x: conv(&t.x)?,
                    y: conv(&t.y)?,
                    z: conv(&t.z)?,
                });
            }
            levels.push(out);
        }
        Ok(BZLabeling { k: self.k, levels })
    }
}
