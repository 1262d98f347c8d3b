//! Skew tableaux, words, lattice permutations, the coding of LR tableaux
//! as triangular arrays, and the brute-force LR tableau enumerator that
//! serves as the independent counting oracle for every other counter in
//! the crate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Violation};
use crate::rational::Rational;
use crate::triangle::TriangularArray;
use crate::weights::{contains, is_partition, Partition};

/// The skew diagram lambda/mu: cells `(r, c)` with `1 <= r <= k` and
/// `mu_r < c <= lambda_r`. Both partitions are kept at a common length k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self, Error> {
        let k = lambda.len().max(mu.nonzero_len());
        let lambda = lambda.padded(k)?;
        let mu = mu.padded(k)?;
        if !contains(&mu, &lambda) {
            return Err(Error::Type(format!("mu={mu} is not contained in lambda={lambda}")));
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Number of rows k (including empty ones).
    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    /// Cells in row r (1-based).
    pub fn row_len(&self, r: usize) -> usize {
        (self.lambda.part(r - 1) - self.mu.part(r - 1)) as usize
    }

    /// |lambda/mu|, the total number of cells.
    pub fn cell_count(&self) -> usize {
        (1..=self.rows()).map(|r| self.row_len(r)).sum()
    }

    /// Whether column c of row r (both 1-based) is a cell of the diagram.
    pub fn has_cell(&self, r: usize, c: u64) -> bool {
        r >= 1 && r <= self.rows() && c > self.mu.part(r - 1) && c <= self.lambda.part(r - 1)
    }
}

/// A filling of a skew diagram with positive integers, stored row by row;
/// row r holds its `lambda_r - mu_r` skew entries left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        if rows.len() != shape.rows() {
            return Err(Error::Size(format!(
                "expected {} rows, got {}",
                shape.rows(),
                rows.len()
            )));
        }
        for (idx, row) in rows.iter().enumerate() {
            let r = idx + 1;
            if row.len() != shape.row_len(r) {
                return Err(Error::Size(format!(
                    "row {r} has {} entries, expected {}",
                    row.len(),
                    shape.row_len(r)
                )));
            }
            if row.iter().any(|&v| v == 0) {
                return Err(Error::Type(format!("row {r} contains a zero entry")));
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at row r, column c (1-based diagram coordinates).
    pub fn entry(&self, r: usize, c: u64) -> Option<u32> {
        if !self.shape.has_cell(r, c) {
            return None;
        }
        let offset = (c - self.shape.mu.part(r - 1) - 1) as usize;
        Some(self.rows[r - 1][offset])
    }

    /// Parses the tableau JSON document
    /// `{"lambda":[...],"mu":[...],"rows":[[...],...]}`.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let doc: TableauDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.try_into()
    }

    /// Canonical JSON form: sorted keys, mu padded to lambda's length,
    /// compact separators, trailing newline.
    pub fn to_json(&self) -> String {
        let doc = TableauDoc {
            lambda: self.shape.lambda.parts().to_vec(),
            mu: self.shape.mu.parts().to_vec(),
            rows: self.rows.clone(),
        };
        let mut s = serde_json::to_string(&doc).expect("tableau serialization cannot fail");
        s.push('\n');
        s
    }
}

#[derive(Serialize, Deserialize)]
struct TableauDoc {
    lambda: Vec<u64>,
    mu: Vec<u64>,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<TableauDoc> for SkewTableau {
    type Error = Error;

    fn try_from(doc: TableauDoc) -> Result<Self, Error> {
        let lambda = Partition::new(doc.lambda)?;
        let mu = Partition::new(doc.mu)?;
        SkewTableau::new(SkewShape::new(lambda, mu)?, doc.rows)
    }
}

/// The word of a tableau: entries read right to left in successive rows,
/// starting with the top row.
pub fn word(t: &SkewTableau) -> Vec<u32> {
    t.rows
        .iter()
        .flat_map(|row| row.iter().rev().copied())
        .collect()
}

/// The content (gamma_1, ..., gamma_m): gamma_i counts the i's, m is the
/// largest entry.
pub fn content(t: &SkewTableau) -> Vec<u64> {
    let max = t.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; max];
    for &v in t.rows.iter().flatten() {
        counts[(v - 1) as usize] += 1;
    }
    counts
}

/// Rows weakly increase left to right; columns strictly increase top to
/// bottom across the skew cells.
pub fn is_semistandard(t: &SkewTableau) -> bool {
    semistandard_violation(t).is_none()
}

fn semistandard_violation(t: &SkewTableau) -> Option<Violation> {
    for (idx, row) in t.rows.iter().enumerate() {
        let r = idx + 1;
        for c in 1..row.len() {
            if row[c - 1] > row[c] {
                return Some(Violation {
                    rule: "row",
                    i: r,
                    j: t.shape.mu.part(idx) as usize + c + 1,
                });
            }
        }
    }
    for r in 2..=t.shape.rows() {
        for c in t.shape.mu.part(r - 1) + 1..=t.shape.lambda.part(r - 1) {
            if let (Some(above), Some(here)) = (t.entry(r - 1, c), t.entry(r, c)) {
                if above >= here {
                    return Some(Violation {
                        rule: "column",
                        i: r,
                        j: c as usize,
                    });
                }
            }
        }
    }
    None
}

/// Every prefix of w contains at least as many i's as (i+1)'s, for all i.
pub fn is_lattice_permutation(w: &[u32]) -> bool {
    lattice_violation(w).is_none()
}

fn lattice_violation(w: &[u32]) -> Option<Violation> {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; max + 1];
    for (pos, &v) in w.iter().enumerate() {
        let v = v as usize;
        counts[v] += 1;
        if v >= 2 && counts[v] > counts[v - 1] {
            return Some(Violation {
                rule: "lattice",
                i: pos + 1,
                j: v,
            });
        }
    }
    None
}

/// Semistandard with a lattice-permutation word.
pub fn is_lr_tableau(t: &SkewTableau) -> bool {
    lr_tableau_violation(t).is_none()
}

fn lr_tableau_violation(t: &SkewTableau) -> Option<Violation> {
    semistandard_violation(t).or_else(|| lattice_violation(&word(t)))
}

/// Codes an LR tableau as a triangular array of size k:
/// `a[0][j] = mu_j` and `a[i][j]` = number of i's in row j of the tableau.
///
/// Rejects non-LR input, naming the first violated condition (`row`,
/// `column` or `lattice`).
pub fn tableau_to_triangle(t: &SkewTableau, k: usize) -> Result<TriangularArray<Rational>, Error> {
    if k < 1 {
        return Err(Error::Size("size k must be positive".into()));
    }
    if (k..t.shape.rows()).any(|idx| t.shape.row_len(idx + 1) > 0) {
        return Err(Error::Size(format!(
            "tableau has {} rows, does not fit size k={k}",
            t.shape.rows()
        )));
    }
    if let Some(v) = lr_tableau_violation(t) {
        return Err(Error::NotMember(v));
    }
    let mut arr = TriangularArray::zero(k);
    for j in 1..=k {
        arr.set(0, j, Rational::from(t.shape.mu.part(j - 1)));
    }
    for (idx, row) in t.rows.iter().enumerate() {
        let j = idx + 1;
        for &v in row {
            let i = v as usize;
            debug_assert!(i <= j, "lattice word places letter {i} in row {j}");
            let cur = arr.get(i, j).clone();
            arr.set(i, j, cur + Rational::from(1u64));
        }
    }
    Ok(arr)
}

/// Decodes an integer LR triangle back into its LR tableau: row j receives
/// `a[i][j]` copies of i, in weakly increasing order.
///
/// Rejects non-integer arrays, non-members, and members whose type is not a
/// partition triple (the bijection is only defined there).
pub fn triangle_to_tableau(a: &TriangularArray<Rational>) -> Result<SkewTableau, Error> {
    let int = a.to_integer()?;
    crate::lr::lr_validate(a).into_result()?;
    let t = crate::lr::lr_type(a)?;
    for (name, v) in [("lambda", &t.lambda), ("mu", &t.mu), ("nu", &t.nu)] {
        if !is_partition(v) {
            return Err(Error::Type(format!("{name}={v} is not a partition")));
        }
    }
    let to_partition = |v: &crate::weights::WeightVector| {
        Partition::new(
            v.entries()
                .iter()
                .map(|e| u64::try_from(e.to_bigint().expect("checked integer")).unwrap())
                .collect(),
        )
    };
    let shape = SkewShape::new(to_partition(&t.lambda)?, to_partition(&t.mu)?)?;
    let k = a.k();
    let mut rows = Vec::with_capacity(k);
    for j in 1..=k {
        let mut row = Vec::with_capacity(shape.row_len(j));
        for i in 1..=j {
            let count = *int.get(i, j);
            debug_assert!(count >= 0);
            row.extend(std::iter::repeat(i as u32).take(count as usize));
        }
        rows.push(row);
    }
    let tab = SkewTableau::new(shape, rows)?;
    debug_assert!(is_lr_tableau(&tab));
    Ok(tab)
}

/// Streams every LR tableau of shape lambda/mu and content nu exactly once;
/// the number of items is the Littlewood-Richardson coefficient.
///
/// Infeasible shape or content yields an empty stream; a size mismatch
/// |lambda| != |mu| + |nu| is a usage error.
pub fn enumerate_lr_tableaux(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<LrTableauxIter, Error> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::Usage(format!(
            "|lambda| = {} but |mu| + |nu| = {}",
            lambda.size(),
            mu.size() + nu.size()
        )));
    }
    Ok(LrTableauxIter::new(lambda, mu, nu))
}

struct Cell {
    row: usize,
    /// Value of the cell directly above, by index into `values`, if the
    /// diagram has one. It is always filled earlier in word order.
    above: Option<usize>,
    /// Index of the right-hand neighbour; filled immediately before this
    /// cell within the same row.
    right: Option<usize>,
    /// Whether this cell completes its row.
    last_in_row: bool,
}

/// Backtracking enumerator over fillings in word order (row by row, right
/// to left). Lattice-prefix counts and the semistandard constraints are
/// maintained incrementally, so each candidate value is admitted or
/// refused in O(1); letter capacities per remaining rows prune dead rows.
pub struct LrTableauxIter {
    shape: Option<SkewShape>,
    nu: Vec<u64>,
    cells: Vec<Cell>,
    /// Remaining cell capacity for letter v in rows >= r: `capacity[r][v-1]`.
    capacity: Vec<Vec<u64>>,
    values: Vec<u32>,
    cursor: Vec<u32>,
    counts: Vec<u64>,
    pos: usize,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

impl LrTableauxIter {
    fn new(lambda: &Partition, mu: &Partition, nu: &Partition) -> Self {
        let empty = || LrTableauxIter {
            shape: None,
            nu: Vec::new(),
            cells: Vec::new(),
            capacity: Vec::new(),
            values: Vec::new(),
            cursor: Vec::new(),
            counts: Vec::new(),
            pos: 0,
            state: IterState::Done,
        };
        let Ok(shape) = SkewShape::new(lambda.clone(), mu.clone()) else {
            return empty(); // mu not contained in lambda: no fillings
        };
        let k = shape.rows();
        let Ok(nu) = nu.padded(k.max(nu.nonzero_len())) else {
            return empty();
        };
        if nu.len() > k {
            return empty(); // content needs more letters than there are rows
        }
        let nu: Vec<u64> = nu.parts().to_vec();

        let mut cells = Vec::with_capacity(shape.cell_count());
        let mut index_of = std::collections::HashMap::new();
        for r in 1..=k {
            let lo = shape.mu().part(r - 1) + 1;
            let hi = shape.lambda().part(r - 1);
            for c in (lo..=hi).rev() {
                let above = shape.has_cell(r - 1, c).then(|| index_of[&(r - 1, c)]);
                let right = (c < hi).then(|| index_of[&(r, c + 1)]);
                index_of.insert((r, c), cells.len());
                cells.push(Cell {
                    row: r,
                    above,
                    right,
                    last_in_row: c == lo,
                });
            }
        }

        // capacity[r][v-1] = cells available for letter v in rows > r
        // (letters only ever sit in rows >= their value)
        let mut capacity = vec![vec![0u64; k]; k + 1];
        for r in (0..k).rev() {
            for v in 1..=k {
                let here = if r + 1 >= v { shape.row_len(r + 1) as u64 } else { 0 };
                capacity[r][v - 1] = capacity[r + 1][v - 1] + here;
            }
        }

        let n = cells.len();
        LrTableauxIter {
            nu,
            capacity,
            values: vec![0; n],
            cursor: vec![1; n],
            counts: vec![0; k + 1],
            pos: 0,
            state: IterState::Fresh,
            cells,
            shape: Some(shape),
        }
    }

    fn admissible(&self, p: usize, v: u32) -> bool {
        let vi = v as usize;
        if self.counts[vi] >= self.nu[vi - 1] {
            return false; // content cap reached
        }
        if vi >= 2 && self.counts[vi] >= self.counts[vi - 1] {
            return false; // placing v would break the lattice prefix
        }
        if let Some(a) = self.cells[p].above {
            if self.values[a] >= v {
                return false; // column must strictly increase
            }
        }
        true
    }

    /// After completing row r, every letter's remaining demand must fit in
    /// the rows that can still hold it.
    fn row_capacity_ok(&self, r: usize) -> bool {
        (1..self.nu.len() + 1)
            .all(|v| self.nu[v - 1] - self.counts[v] <= self.capacity[r][v - 1])
    }

    fn build(&self) -> SkewTableau {
        let shape = self.shape.clone().expect("nonempty iterator has a shape");
        let mut rows: Vec<Vec<u32>> = (1..=shape.rows())
            .map(|r| Vec::with_capacity(shape.row_len(r)))
            .collect();
        for (cell, &v) in self.cells.iter().zip(&self.values) {
            rows[cell.row - 1].push(v);
        }
        for row in &mut rows {
            row.reverse(); // cells were visited right to left
        }
        SkewTableau::new(shape, rows).expect("enumerated filling has the right shape")
    }

    /// Pops the cell below `pos`, releasing its letter.
    fn step_back(&mut self) {
        self.pos -= 1;
        self.counts[self.values[self.pos] as usize] -= 1;
    }
}

impl Iterator for LrTableauxIter {
    type Item = SkewTableau;

    fn next(&mut self) -> Option<SkewTableau> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                if self.cells.is_empty() {
                    self.state = IterState::Done;
                    // the empty filling, iff there is no content to place
                    return self.nu.iter().all(|&n| n == 0).then(|| self.build());
                }
                if !self.row_capacity_ok(0) {
                    self.state = IterState::Done;
                    return None;
                }
            }
            IterState::Running => {
                // resume the search behind the previously yielded filling
                self.step_back();
            }
        }

        loop {
            let cell = &self.cells[self.pos];
            let hi = match cell.right {
                Some(rgt) => self.values[rgt],
                None => cell.row as u32,
            }
            .min(cell.row as u32);

            let mut chosen = None;
            let mut v = self.cursor[self.pos];
            while v <= hi {
                if self.admissible(self.pos, v) {
                    let row_done = cell.last_in_row;
                    self.counts[v as usize] += 1;
                    if !row_done || self.row_capacity_ok(cell.row) {
                        chosen = Some(v);
                        break;
                    }
                    self.counts[v as usize] -= 1;
                }
                v += 1;
            }

            match chosen {
                Some(v) => {
                    self.values[self.pos] = v;
                    self.cursor[self.pos] = v + 1;
                    self.pos += 1;
                    if self.pos == self.cells.len() {
                        return Some(self.build());
                    }
                    self.cursor[self.pos] = 1;
                }
                None => {
                    if self.pos == 0 {
                        self.state = IterState::Done;
                        return None;
                    }
                    self.step_back();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn section2_tableau() -> SkewTableau {
        let shape = SkewShape::new(part("6,4,4,3"), part("3,2")).unwrap();
        SkewTableau::new(
            shape,
            vec![
                vec![1, 1, 7],
                vec![1, 4],
                vec![1, 4, 5, 7],
                vec![3, 5, 7],
            ],
        )
        .unwrap()
    }

    #[test]
    fn word_of_the_section2_example() {
        let w = word(&section2_tableau());
        assert_eq!(w, vec![7, 1, 1, 4, 1, 7, 5, 4, 1, 7, 5, 3]);
        assert_eq!(w.len(), 12); // |lambda/mu| = 17 - 5
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(&section2_tableau()), vec![4, 0, 1, 2, 2, 0, 3]);
        assert_eq!(content(&fixtures::fig1_tableau()), vec![16, 11, 10, 5, 2]);
        let empty = SkewTableau::new(
            SkewShape::new(part("2,1"), part("2,1")).unwrap(),
            vec![vec![], vec![]],
        )
        .unwrap();
        assert_eq!(content(&empty), Vec::<u64>::new());
        assert_eq!(word(&empty), Vec::<u32>::new());
    }

    #[test]
    fn semistandard_examples() {
        assert!(is_semistandard(&section2_tableau()));
        assert!(is_semistandard(&fixtures::fig1_tableau()));
        let shape = SkewShape::new(part("1,1"), part("0,0")).unwrap();
        let stacked = SkewTableau::new(shape, vec![vec![2], vec![2]]).unwrap();
        assert!(!is_semistandard(&stacked));
    }

    #[test]
    fn lattice_permutation_examples() {
        assert!(!is_lattice_permutation(&word(&section2_tableau())));
        assert!(is_lattice_permutation(&[1, 1, 2]));
        assert!(is_lattice_permutation(&[1, 2, 1]));
        assert!(!is_lattice_permutation(&[1, 2, 2]));
        assert!(is_lattice_permutation(&[]));
    }

    #[test]
    fn lr_tableau_examples() {
        assert!(is_lr_tableau(&fixtures::fig1_tableau()));
        assert!(!is_lr_tableau(&section2_tableau()));
        let empty = SkewTableau::new(
            SkewShape::new(part("3"), part("3")).unwrap(),
            vec![vec![]],
        )
        .unwrap();
        assert!(is_lr_tableau(&empty));
    }

    #[test]
    fn fig1_codes_to_fig3() {
        let arr = tableau_to_triangle(&fixtures::fig1_tableau(), 5).unwrap();
        assert_eq!(arr, fixtures::fig3_triangle());
    }

    #[test]
    fn empty_tableau_codes_to_mu_boundary() {
        let empty = SkewTableau::new(
            SkewShape::new(part("0"), part("0")).unwrap(),
            vec![vec![]],
        )
        .unwrap();
        let arr = tableau_to_triangle(&empty, 1).unwrap();
        assert_eq!(arr, TriangularArray::zero(1));
    }

    #[test]
    fn small_shape_codes_by_rule() {
        // lambda/mu = (3,2,1)/(2,1), word 1,1,2
        let shape = SkewShape::new(part("3,2,1"), part("2,1")).unwrap();
        let t = SkewTableau::new(shape, vec![vec![1], vec![1], vec![2]]).unwrap();
        let arr = tableau_to_triangle(&t, 3).unwrap();
        let expect = TriangularArray::from_text("k=3\n0\n2 1\n1 1 0\n0 0 1 0\n").unwrap();
        assert_eq!(arr, expect);
        assert_eq!(triangle_to_tableau(&arr).unwrap(), t);
    }

    #[test]
    fn non_lr_input_is_rejected_with_first_violation() {
        let err = tableau_to_triangle(&section2_tableau(), 7).unwrap_err();
        match err {
            Error::NotMember(v) => assert_eq!(v.rule, "lattice"),
            other => panic!("unexpected error {other:?}"),
        }
        let shape = SkewShape::new(part("2,1"), part("0,0")).unwrap();
        let bad_row = SkewTableau::new(shape, vec![vec![2, 1], vec![3]]).unwrap();
        let err = tableau_to_triangle(&bad_row, 2).unwrap_err();
        match err {
            Error::NotMember(v) => assert_eq!(v.rule, "row"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn fig3_decodes_to_fig1() {
        let t = triangle_to_tableau(&fixtures::fig3_triangle()).unwrap();
        assert_eq!(t, fixtures::fig1_tableau());
    }

    #[test]
    fn zero_triangle_decodes_to_empty_tableau() {
        let zero: TriangularArray = TriangularArray::zero(3);
        let t = triangle_to_tableau(&zero).unwrap();
        assert_eq!(t.shape().cell_count(), 0);
    }

    #[test]
    fn enumerator_finds_both_small_fillings() {
        let tabs: Vec<_> = enumerate_lr_tableaux(&part("3,2,1"), &part("2,1"), &part("2,1"))
            .unwrap()
            .collect();
        assert_eq!(tabs.len(), 2);
        let words: Vec<Vec<u32>> = tabs.iter().map(word).collect();
        assert!(words.contains(&vec![1, 1, 2]));
        assert!(words.contains(&vec![1, 2, 1]));
        for t in &tabs {
            assert!(is_lr_tableau(t));
            assert_eq!(content(t), vec![2, 1]);
        }
    }

    #[test]
    fn trivial_and_unique_counts() {
        let same = part("4,2,2");
        let n = enumerate_lr_tableaux(&same, &same, &Partition::empty())
            .unwrap()
            .count();
        assert_eq!(n, 1);
        let n = enumerate_lr_tableaux(&part("2,1"), &part("1"), &part("1,1"))
            .unwrap()
            .count();
        assert_eq!(n, 1);
    }

    #[test]
    fn infeasible_inputs_yield_empty_streams() {
        // mu not contained in lambda
        let n = enumerate_lr_tableaux(&part("2,2"), &part("3"), &part("1"))
            .unwrap()
            .count();
        assert_eq!(n, 0);
        // content with more letters than rows
        let n = enumerate_lr_tableaux(&part("2,2"), &part("1"), &part("1,1,1"))
            .unwrap()
            .count();
        assert_eq!(n, 0);
        // size mismatch is a usage error
        assert!(enumerate_lr_tableaux(&part("2"), &part("1"), &part("2")).is_err());
    }

    #[test]
    fn enumerated_fillings_are_distinct_lr_tableaux_with_partition_content() {
        let tabs: Vec<_> = enumerate_lr_tableaux(&part("4,3,2"), &part("2,1"), &part("3,2,1"))
            .unwrap()
            .collect();
        for t in &tabs {
            assert!(is_lr_tableau(t));
            let c = content(t);
            assert!(c.windows(2).all(|w| w[0] >= w[1]), "content not a partition");
            assert_eq!(word(t).len(), t.shape().cell_count());
        }
        let mut seen = std::collections::HashSet::new();
        for t in &tabs {
            assert!(seen.insert(format!("{t:?}")), "duplicate tableau emitted");
        }
    }

    #[test]
    fn tableau_json_round_trip() {
        let t = fixtures::fig1_tableau();
        let json = t.to_json();
        let back = SkewTableau::from_json(&json).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_json(), json);
    }
}
