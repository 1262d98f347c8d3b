//! Triangular arrays: the shared storage for LR triangles and hives.
//!
//! An array of size k labels the vertices of the triangular grid with
//! entries `a[i][j]` for `0 <= i <= j <= k`, stored by rows `j = 0..=k`,
//! row j holding `(a[0][j], ..., a[j][j])`. The apex `a[0][0]` is pinned
//! to zero, so the ambient space has dimension C(k+2,2) - 1.

use std::fmt::Write as _;
use std::ops::Sub;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::Rational;

/// Entry scalar for triangular arrays and the linear maps between them.
///
/// Implemented by `Rational`, by machine integers, and by the counting
/// scalars the test suites use to meter arithmetic-operation budgets.
pub trait Scalar: Clone + PartialEq + Zero + Sub<Output = Self> {}

impl<T: Clone + PartialEq + Zero + Sub<Output = T>> Scalar for T {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularArray<T = Rational> {
    k: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> TriangularArray<T> {
    /// The all-zero array of size k (the cone apex).
    pub fn zero(k: usize) -> Self {
        assert!(k >= 1, "size k must be positive");
        TriangularArray {
            k,
            rows: (0..=k).map(|j| vec![T::zero(); j + 1]).collect(),
        }
    }

    /// Builds an array from rows `j = 0..=k`, row j holding j+1 entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, Error> {
        if rows.len() < 2 {
            return Err(Error::Size("triangular array needs size k >= 1".into()));
        }
        let k = rows.len() - 1;
        for (j, row) in rows.iter().enumerate() {
            if row.len() != j + 1 {
                return Err(Error::Size(format!(
                    "row {j} has {} entries, expected {}",
                    row.len(),
                    j + 1
                )));
            }
        }
        if !rows[0][0].is_zero() {
            return Err(Error::NotMember(crate::error::Violation {
                rule: "a00",
                i: 0,
                j: 0,
            }));
        }
        Ok(TriangularArray { k, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of stored entries, C(k+2,2).
    pub fn entry_count(&self) -> usize {
        (self.k + 1) * (self.k + 2) / 2
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        debug_assert!(i <= j && j <= self.k);
        &self.rows[j][i]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        debug_assert!(i <= j && j <= self.k);
        self.rows[j][i] = value;
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// All `((i, j), entry)` pairs in row order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(j, row)| row.iter().enumerate().map(move |(i, v)| ((i, j), v)))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TriangularArray<U> {
        TriangularArray {
            k: self.k,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }
}

impl TriangularArray<Rational> {
    /// Integer view of the array; fails on the first non-integer entry.
    pub fn to_integer(&self) -> Result<TriangularArray<i64>, Error> {
        let mut rows = Vec::with_capacity(self.k + 1);
        for (j, row) in self.rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (i, v) in row.iter().enumerate() {
                out.push(v.to_i64().ok_or(Error::NonInteger { i, j })?);
            }
            rows.push(out);
        }
        Ok(TriangularArray { k: self.k, rows })
    }

    /// Parses the triangle text format: a `k=<n>` header line followed by
    /// n+1 lines, line j holding the j+1 entries `a[0][j] ... a[j][j]`.
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let k: usize = header
            .trim()
            .strip_prefix("k=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected `k=<n>` header, got `{header}`")))?;
        if k < 1 {
            return Err(Error::Parse("size k must be positive".into()));
        }
        let mut rows = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {j}")))?;
            let row: Vec<Rational> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_, _>>()?;
            if row.len() != j + 1 {
                return Err(Error::Parse(format!(
                    "row {j} has {} entries, expected {}",
                    row.len(),
                    j + 1
                )));
            }
            rows.push(row);
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after last row".into()));
        }
        Self::from_rows(rows)
    }
}

impl TriangularArray<i64> {
    pub fn to_rational(&self) -> TriangularArray<Rational> {
        self.map(|&v| Rational::from(v))
    }
}

impl<T: Scalar + std::fmt::Display> TriangularArray<T> {
    /// Canonical text form: `k=<n>` header, one line per row, entries in
    /// lowest terms separated by single spaces, trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = format!("k={}\n", self.k);
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
                first = false;
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG3_TEXT: &str = "k=5\n0\n15 8\n9 4 5\n5 2 5 3\n2 0 1 6 2\n0 2 0 1 3 2\n";

    #[test]
    fn text_round_trip() {
        let arr = TriangularArray::from_text(FIG3_TEXT).unwrap();
        assert_eq!(arr.k(), 5);
        assert_eq!(arr.get(0, 1), &Rational::from(15));
        assert_eq!(arr.get(1, 1), &Rational::from(8));
        assert_eq!(arr.get(3, 4), &Rational::from(6));
        assert_eq!(arr.get(5, 5), &Rational::from(2));
        assert_eq!(arr.to_text(), FIG3_TEXT);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(TriangularArray::from_text("").is_err());
        assert!(TriangularArray::from_text("k=0\n0\n").is_err());
        assert!(TriangularArray::from_text("k=2\n0\n1 2\n").is_err());
        assert!(TriangularArray::from_text("k=1\n0\n1 2\n").is_err());
        assert!(TriangularArray::from_text("k=1\n1\n2 3\n").is_err()); // a00 != 0
        assert!(TriangularArray::from_text("k=1\n0\n2 3\nextra\n").is_err());
    }

    #[test]
    fn rational_entries_survive_round_trip() {
        let text = "k=1\n0\n-3/2 7/2\n";
        let arr = TriangularArray::from_text(text).unwrap();
        assert_eq!(arr.to_text(), text);
        assert!(arr.to_integer().is_err());
    }

    #[test]
    fn integer_conversion() {
        let arr = TriangularArray::from_text(FIG3_TEXT).unwrap();
        let int = arr.to_integer().unwrap();
        assert_eq!(*int.get(4, 5), 3);
        assert_eq!(int.to_rational(), arr);
        assert_eq!(int.entry_count(), 21);
    }
}
