//! Error and validation-report types shared across the crate.

use std::fmt;

use thiserror::Error;

/// A single violated constraint, identified by rule name and indices.
///
/// Rule names follow the inequality families each model is defined by:
/// `"P"`, `"CS"`, `"LR"` for Littlewood-Richardson triangles, `"R"`, `"V"`,
/// `"L"` for hives, `"BZ1"`, `"BZ2"`, `"BZ3"` and `"nonneg(x|y|z)"` for
/// Berenstein-Zelevinsky labelings, and `"a00"` / `"h00"` for the pinned apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) at (i={}, j={})", self.rule, self.i, self.j)
    }
}

/// Outcome of a membership check: `Ok` or the first violated constraint.
///
/// Violations are reported deterministically: rule families are scanned in
/// the order they are defined for the model, each family by ascending
/// `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub violation: Option<Violation>,
}

impl CheckReport {
    pub fn ok() -> Self {
        CheckReport { violation: None }
    }

    pub fn fail(rule: &'static str, i: usize, j: usize) -> Self {
        CheckReport {
            violation: Some(Violation { rule, i, j }),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }

    /// Converts the report into a `Result`, keeping the violation as error.
    pub fn into_result(self) -> Result<(), Error> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::NotMember(v)),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "ok"),
            Some(v) => write!(f, "violated {v}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: {0}")]
    Size(String),

    #[error("not a member: violated {0}")]
    NotMember(Violation),

    #[error("entry at (i={i}, j={j}) is not an integer")]
    NonInteger { i: usize, j: usize },

    #[error("invalid type data: {0}")]
    Type(String),

    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
