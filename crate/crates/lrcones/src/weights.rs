//! Weight vectors, partitions and triangle types.
//!
//! `WeightVector` is a plain rational k-tuple; membership in the cone of
//! weakly decreasing tuples is a test (`is_weakly_decreasing`), not a
//! construction invariant, since boundary extraction must be able to
//! report arbitrary tuples. `Partition` does enforce its invariants
//! (nonnegative integers, weakly decreasing).
//!
//! Lengths are always explicit: partitions are padded with trailing zeros
//! to a common length k, never truncated or inferred.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::Rational;

/// A k-tuple of rationals, k >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    entries: Vec<Rational>,
}

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::Size("weight vector must have length k >= 1".into()));
        }
        Ok(WeightVector { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, idx: usize) -> &Rational {
        &self.entries[idx]
    }

    pub fn sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for e in &self.entries {
            acc += e;
        }
        acc
    }

    /// Membership in the set of weakly decreasing k-tuples.
    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// True iff all entries are nonnegative integers and weakly decreasing.
pub fn is_partition(v: &WeightVector) -> bool {
    v.is_weakly_decreasing()
        && v.entries()
            .iter()
            .all(|e| e.is_integer() && !e.is_negative())
}

/// A weakly decreasing tuple of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Type(format!(
                "not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition (no parts; pad to a length before use).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The part at `idx` (0-based), zero past the stored length.
    pub fn part(&self, idx: usize) -> u64 {
        self.parts.get(idx).copied().unwrap_or(0)
    }

    /// |lambda|, the sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    /// The same partition padded with trailing zeros to length `k`.
    pub fn padded(&self, k: usize) -> Result<Self, Error> {
        if self.nonzero_len() > k {
            return Err(Error::Size(format!(
                "partition {self} has more than {k} nonzero parts"
            )));
        }
        let mut parts: Vec<u64> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.resize(k, 0);
        Ok(Partition { parts })
    }

    pub fn to_weight_vector(&self) -> Result<WeightVector, Error> {
        WeightVector::new(self.parts.iter().map(|&p| Rational::from(p)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma-separated nonnegative integers, e.g. `23,18,15,11,8`.
/// The empty string and `"0"` both denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u64> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("invalid partition part `{p}`")))
            })
            .collect::<Result<_, _>>()?;
        Partition::new(parts)
    }
}

/// True iff `mu_i <= lambda_i` for all i, over a common padded length.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    let k = mu.len().max(lambda.len());
    (0..k).all(|i| mu.part(i) <= lambda.part(i))
}

/// Boundary data (lambda, mu, nu) of a triangle, hive or BZ labeling.
///
/// All three vectors have the same length. The identity |lambda| = |mu| + |nu|
/// is NOT enforced here; it is tested by [`type_sum_check`] and guaranteed by
/// the extraction operations that produce types from cone members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleType {
    pub lambda: WeightVector,
    pub mu: WeightVector,
    pub nu: WeightVector,
}

impl TriangleType {
    pub fn new(lambda: WeightVector, mu: WeightVector, nu: WeightVector) -> Result<Self, Error> {
        if lambda.len() != mu.len() || lambda.len() != nu.len() {
            return Err(Error::Size(format!(
                "type vectors must share one length, got {}, {}, {}",
                lambda.len(),
                mu.len(),
                nu.len()
            )));
        }
        Ok(TriangleType { lambda, mu, nu })
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// True iff |lambda| = |mu| + |nu| exactly.
pub fn type_sum_check(t: &TriangleType) -> bool {
    t.lambda.sum() == t.mu.sum() + t.nu.sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(entries: &[&str]) -> WeightVector {
        WeightVector::new(entries.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn is_partition_examples() {
        assert!(is_partition(&wv(&["23", "18", "15", "11", "8"])));
        assert!(is_partition(&wv(&["0", "0", "0"])));
        assert!(!is_partition(&wv(&["3", "7/2", "1"])));
        assert!(!is_partition(&wv(&["3", "2", "-1"])));
    }

    #[test]
    fn contains_examples() {
        let lambda = part("23,18,15,11,8");
        assert!(contains(&part("15,9,5,2,0"), &lambda));
        assert!(contains(&lambda, &lambda));
        assert!(!contains(&part("4"), &part("3")));
        // padding to a common length is implicit
        assert!(contains(&part("2,1"), &part("3,2,1")));
        assert!(!contains(&part("1,1,1,1"), &part("3,2,1")));
    }

    #[test]
    fn type_sum_check_examples() {
        let eq1 = TriangleType::new(
            part("23,18,15,11,8").to_weight_vector().unwrap(),
            part("15,9,5,2,0").to_weight_vector().unwrap(),
            part("16,11,10,5,2").to_weight_vector().unwrap(),
        )
        .unwrap();
        assert!(type_sum_check(&eq1)); // 75 = 31 + 44

        let same = part("3,1").to_weight_vector().unwrap();
        let zero = part("0,0").to_weight_vector().unwrap();
        let t = TriangleType::new(same.clone(), same, zero).unwrap();
        assert!(type_sum_check(&t));

        let bad = TriangleType::new(
            part("2").to_weight_vector().unwrap(),
            part("1").to_weight_vector().unwrap(),
            part("2").to_weight_vector().unwrap(),
        )
        .unwrap();
        assert!(!type_sum_check(&bad));
    }

    #[test]
    fn padding_preserves_size_and_containment() {
        let p = part("3,2");
        let padded = p.padded(5).unwrap();
        assert_eq!(padded.len(), 5);
        assert_eq!(padded.size(), p.size());
        assert!(contains(&p, &padded) && contains(&padded, &p));
        assert!(p.padded(1).is_err());
        // zero-part input pads cleanly
        assert_eq!(part("0").padded(3).unwrap(), part("0,0,0"));
    }

    #[test]
    fn partition_parse_rejects_bad_input() {
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), part("0"));
    }
}
