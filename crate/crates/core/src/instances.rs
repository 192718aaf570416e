//! Hidden instances of the three graph families, in permutation form.
//!
//! Row and column indices are 0-based (row 0 is the top row). Values that are
//! ranks or Hamming weights (column weights of a column-permuted half graph,
//! the `R`/`B` lists of a half graph) keep their natural range `1..=n`.
//! A matching stores, for each row, the 0-based column of its single 1.
//!
//! The line-oriented text form used for fixtures is 1-based throughout:
//!
//! ```text
//! matching 3 2 1 3
//! col_permuted 2 2 1
//! half_graph 3 2 1 3 1 3 2
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::is_permutation;
use crate::rng::{random_permutation, rng_from_seed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Matching,
    ColPermuted,
    HalfGraph,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Matching, Family::ColPermuted, Family::HalfGraph];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Matching => "matching",
            Family::ColPermuted => "col_permuted",
            Family::HalfGraph => "half_graph",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "matching" => Ok(Family::Matching),
            "col_permuted" | "colpermuted" => Ok(Family::ColPermuted),
            "half_graph" | "halfgraph" => Ok(Family::HalfGraph),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// A perfect matching: row `i` is adjacent to column `perm[i]` only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    perm: Vec<usize>,
}

impl Matching {
    /// `perm` holds 0-based column indices.
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        if perm.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if !is_permutation(&perm, 0) {
            return Err(Error::NotPermutation {
                what: "matching",
                n: perm.len(),
            });
        }
        Ok(Matching { perm })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub(crate) fn cell(&self, row: usize, col: usize) -> bool {
        self.perm[row] == col
    }
}

/// A member of the column-permuted half graphs: column `j` reads
/// `0^(n - w) 1^w` top to bottom, where `w = weights[j]`.
///
/// The same list is the hidden array of the threshold-sorting view, where
/// "is `X[j] >= t`?" is the edge query at row `n - t`, column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnPermutedHalfGraph {
    weights: Vec<usize>,
}

impl ColumnPermutedHalfGraph {
    pub fn new(weights: Vec<usize>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if !is_permutation(&weights, 1) {
            return Err(Error::NotPermutation {
                what: "column weight list",
                n: weights.len(),
            });
        }
        Ok(ColumnPermutedHalfGraph { weights })
    }

    /// Inverse of [`Self::threshold_list`].
    pub fn from_threshold_list(list: Vec<usize>) -> Result<Self> {
        Self::new(list)
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// Column Hamming weights, which double as the hidden threshold list.
    pub fn threshold_list(&self) -> &[usize] {
        &self.weights
    }

    /// The row whose edge query answers "is `X[col] >= t`?".
    #[inline]
    pub fn threshold_row(&self, t: usize) -> usize {
        self.n() - t
    }

    #[inline]
    pub(crate) fn cell(&self, row: usize, col: usize) -> bool {
        row + self.weights[col] >= self.n()
    }
}

/// A row- and column-permuted lower-triangular matrix: cell `(i, j)` is 1
/// iff `rows[i] >= cols[j]`.
///
/// Read as a nuts-and-bolts instance, `rows` and `cols` are the two lists;
/// the interleaved even/odd encoding is given by [`Self::interleaved_lists`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfGraph {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl HalfGraph {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if !is_permutation(&rows, 1) {
            return Err(Error::NotPermutation {
                what: "row value list",
                n: rows.len(),
            });
        }
        if !is_permutation(&cols, 1) || cols.len() != rows.len() {
            return Err(Error::NotPermutation {
                what: "column value list",
                n: rows.len(),
            });
        }
        Ok(HalfGraph { rows, cols })
    }

    /// Inverse of [`Self::lists`].
    pub fn from_lists(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        Self::new(rows, cols)
    }

    /// The identity half graph `L_n`.
    pub fn lower_triangular(n: usize) -> Result<Self> {
        Self::new((1..=n).collect(), (1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `(R, B)`.
    pub fn lists(&self) -> (&[usize], &[usize]) {
        (&self.rows, &self.cols)
    }

    pub fn row_values(&self) -> &[usize] {
        &self.rows
    }

    pub fn col_values(&self) -> &[usize] {
        &self.cols
    }

    /// `(R', B')` with `R'[i] = 2 R[i]` and `B'[j] = 2 B[j] - 1`, so that
    /// `R'[i] > B'[j]` exactly when cell `(i, j)` is 1.
    pub fn interleaved_lists(&self) -> (Vec<usize>, Vec<usize>) {
        (
            self.rows.iter().map(|&r| 2 * r).collect(),
            self.cols.iter().map(|&b| 2 * b - 1).collect(),
        )
    }

    #[inline]
    pub(crate) fn cell(&self, row: usize, col: usize) -> bool {
        self.rows[row] >= self.cols[col]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HiddenInstance {
    Matching(Matching),
    ColPermuted(ColumnPermutedHalfGraph),
    HalfGraph(HalfGraph),
}

impl HiddenInstance {
    pub fn family(&self) -> Family {
        match self {
            HiddenInstance::Matching(_) => Family::Matching,
            HiddenInstance::ColPermuted(_) => Family::ColPermuted,
            HiddenInstance::HalfGraph(_) => Family::HalfGraph,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            HiddenInstance::Matching(m) => m.n(),
            HiddenInstance::ColPermuted(c) => c.n(),
            HiddenInstance::HalfGraph(h) => h.n(),
        }
    }

    /// Ground-truth matrix entry. Pure: nothing is counted.
    pub fn entry(&self, row: usize, col: usize) -> Result<bool> {
        let n = self.n();
        if row >= n || col >= n {
            return Err(Error::IndexOutOfRange { row, col, n });
        }
        Ok(self.cell(row, col))
    }

    #[inline]
    pub(crate) fn cell(&self, row: usize, col: usize) -> bool {
        match self {
            HiddenInstance::Matching(m) => m.cell(row, col),
            HiddenInstance::ColPermuted(c) => c.cell(row, col),
            HiddenInstance::HalfGraph(h) => h.cell(row, col),
        }
    }

    /// Dense row-major matrix. Only meant for small brute-force checks.
    pub fn to_dense(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| self.cell(i, j)).collect())
            .collect()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).filter(|&j| self.cell(i, j)).count())
            .collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .map(|j| (0..n).filter(|&i| self.cell(i, j)).count())
            .collect()
    }
}

impl From<Matching> for HiddenInstance {
    fn from(m: Matching) -> Self {
        HiddenInstance::Matching(m)
    }
}

impl From<ColumnPermutedHalfGraph> for HiddenInstance {
    fn from(c: ColumnPermutedHalfGraph) -> Self {
        HiddenInstance::ColPermuted(c)
    }
}

impl From<HalfGraph> for HiddenInstance {
    fn from(h: HalfGraph) -> Self {
        HiddenInstance::HalfGraph(h)
    }
}

/// Uniformly random member of `family` on `n + n` vertices. The same
/// `(family, n, seed)` always produces the same instance.
pub fn gen_instance(family: Family, n: usize, seed: u64) -> Result<HiddenInstance> {
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let mut rng = rng_from_seed(seed);
    let inst = match family {
        Family::Matching => {
            let perm = random_permutation(&mut rng, n)
                .into_iter()
                .map(|v| v as usize - 1)
                .collect();
            Matching::new(perm)?.into()
        }
        Family::ColPermuted => {
            let w = random_permutation(&mut rng, n)
                .into_iter()
                .map(|v| v as usize)
                .collect();
            ColumnPermutedHalfGraph::new(w)?.into()
        }
        Family::HalfGraph => {
            let r = random_permutation(&mut rng, n)
                .into_iter()
                .map(|v| v as usize)
                .collect();
            let b = random_permutation(&mut rng, n)
                .into_iter()
                .map(|v| v as usize)
                .collect();
            HalfGraph::new(r, b)?.into()
        }
    };
    Ok(inst)
}

fn write_list(f: &mut fmt::Formatter<'_>, values: impl Iterator<Item = usize>) -> fmt::Result {
    for v in values {
        write!(f, " {v}")?;
    }
    Ok(())
}

impl fmt::Display for HiddenInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family(), self.n())?;
        match self {
            HiddenInstance::Matching(m) => write_list(f, m.perm.iter().map(|&c| c + 1)),
            HiddenInstance::ColPermuted(c) => write_list(f, c.weights.iter().copied()),
            HiddenInstance::HalfGraph(h) => {
                write_list(f, h.rows.iter().copied())?;
                write_list(f, h.cols.iter().copied())
            }
        }
    }
}

impl FromStr for HiddenInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let family: Family = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty instance line".into()))?
            .parse()?;
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("missing n".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad n: {e}")))?;
        let values = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad value `{t}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let expected = if family == Family::HalfGraph {
            2 * n
        } else {
            n
        };
        if values.len() != expected {
            return Err(Error::Parse(format!(
                "{family} with n = {n} needs {expected} values, got {}",
                values.len()
            )));
        }
        match family {
            Family::Matching => {
                if values.contains(&0) {
                    return Err(Error::NotPermutation {
                        what: "matching",
                        n,
                    });
                }
                Ok(Matching::new(values.into_iter().map(|v| v - 1).collect())?.into())
            }
            Family::ColPermuted => Ok(ColumnPermutedHalfGraph::new(values)?.into()),
            Family::HalfGraph => {
                let cols = values[n..].to_vec();
                let mut rows = values;
                rows.truncate(n);
                Ok(HalfGraph::new(rows, cols)?.into())
            }
        }
    }
}
