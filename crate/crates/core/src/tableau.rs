//! Tableau families: increasing, standard set-valued, semistandard, and
//! skew increasing tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{staircase, Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::word::Word;

fn shape_of<T>(rows: &[Vec<T>]) -> Result<YoungDiagram> {
    YoungDiagram::new(rows.iter().map(Vec::len).collect())
        .map_err(|e| Error::InvalidTableau(format!("rows do not form a diagram: {e}")))
}

/// Filling strictly increasing along rows and down columns.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct IncreasingTableau {
    rows: Vec<Vec<u32>>,
}

impl IncreasingTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        shape_of(&rows)?;
        let t = IncreasingTableau { rows };
        t.validate()?;
        Ok(t)
    }

    /// Skips validation; callers maintain the invariant.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        IncreasingTableau { rows }
    }

    pub fn empty() -> Self {
        IncreasingTableau { rows: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 {
                    return Err(Error::InvalidTableau(format!(
                        "entry 0 at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "row {} not strictly increasing at column {}",
                        r + 1,
                        c + 1
                    )));
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} not strictly increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau rows form a diagram")
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    pub fn first_row(&self) -> &[u32] {
        self.rows.first().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().max()
    }

    pub fn transpose(&self) -> IncreasingTableau {
        let shape = self.shape().conjugate();
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(c, &len)| (0..len).map(|r| self.rows[r][c]).collect())
            .collect();
        IncreasingTableau { rows }
    }

    /// Rows read left to right, starting with the bottom row.
    pub fn reading_word(&self, alphabet: u32) -> Result<Word> {
        let letters = self.rows.iter().rev().flatten().copied().collect();
        Word::new(letters, alphabet)
    }
}

impl TryFrom<Vec<Vec<u32>>> for IncreasingTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        IncreasingTableau::new(rows)
    }
}

impl From<IncreasingTableau> for Vec<Vec<u32>> {
    fn from(t: IncreasingTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&lines.join(" / "))
    }
}

/// Boxes hold nonempty sets partitioning `{1, ..., n}`; the maximum of a box
/// is below the minimum of the boxes to its right and below it. Sets are
/// kept as sorted vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Vec<u32>>>", into = "Vec<Vec<Vec<u32>>>")]
pub struct SetValuedTableau {
    rows: Vec<Vec<Vec<u32>>>,
}

impl SetValuedTableau {
    pub fn new(mut rows: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        shape_of(&rows)?;
        for set in rows.iter_mut().flatten() {
            set.sort_unstable();
        }
        let t = SetValuedTableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Vec<u32>>>) -> Self {
        SetValuedTableau { rows }
    }

    pub fn empty() -> Self {
        SetValuedTableau { rows: Vec::new() }
    }

    /// Checks the row/column condition and that labels are exactly `1..=n`.
    pub fn validate(&self) -> Result<()> {
        let mut labels: Vec<u32> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, set) in row.iter().enumerate() {
                let Some(&lo) = set.first() else {
                    return Err(Error::InvalidTableau(format!(
                        "empty set at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                };
                if set.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidTableau(format!(
                        "repeated label at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
                if c > 0 && *row[c - 1].last().expect("nonempty") >= lo {
                    return Err(Error::InvalidTableau(format!(
                        "row condition fails at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
                if r > 0 && *self.rows[r - 1][c].last().expect("nonempty") >= lo {
                    return Err(Error::InvalidTableau(format!(
                        "column condition fails at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
                labels.extend_from_slice(set);
            }
        }
        labels.sort_unstable();
        if labels.iter().enumerate().any(|(i, &l)| l as usize != i + 1) {
            return Err(Error::InvalidTableau(
                "labels are not exactly 1..=n".to_string(),
            ));
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<Vec<u32>>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau rows form a diagram")
    }

    /// Total number of labels.
    pub fn label_count(&self) -> usize {
        self.rows.iter().flatten().map(Vec::len).sum()
    }

    pub fn get(&self, cell: Cell) -> Option<&[u32]> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .map(Vec::as_slice)
    }

    /// The box holding `label`, if any.
    pub fn find(&self, label: u32) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter()
                .position(|set| set.contains(&label))
                .map(|c| Cell::new(r + 1, c + 1))
        })
    }

    /// Whether every box holds exactly one label.
    pub fn is_standard_young(&self) -> bool {
        self.rows.iter().flatten().all(|s| s.len() == 1)
    }
}

impl TryFrom<Vec<Vec<Vec<u32>>>> for SetValuedTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        SetValuedTableau::new(rows)
    }
}

impl From<SetValuedTableau> for Vec<Vec<Vec<u32>>> {
    fn from(t: SetValuedTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|set| {
                        let inner: Vec<String> = set.iter().map(u32::to_string).collect();
                        format!("{{{}}}", inner.join(","))
                    })
                    .collect::<String>()
            })
            .collect();
        f.write_str(&lines.join(" / "))
    }
}

/// Weakly increasing along rows, strictly increasing down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemistandardTableau {
    rows: Vec<Vec<u32>>,
}

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        shape_of(&rows)?;
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let row_bad = c > 0 && row[c - 1] > v;
                let col_bad = r > 0 && rows[r - 1][c] >= v;
                if v == 0 || row_bad || col_bad {
                    return Err(Error::InvalidTableau(format!(
                        "not semistandard at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(SemistandardTableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        SemistandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau rows form a diagram")
    }
}

/// An increasing filling of a skew shape `outer / inner`. Row `r` has
/// `outer_r` slots; the first `inner_r` are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewTableau {
    inner: YoungDiagram,
    rows: Vec<Vec<Option<u32>>>,
}

impl SkewTableau {
    pub fn new(inner: YoungDiagram, rows: Vec<Vec<Option<u32>>>) -> Result<Self> {
        shape_of(&rows)?;
        for (r, row) in rows.iter().enumerate() {
            let skip = inner.row_len(r + 1);
            if skip > row.len() {
                return Err(Error::InvalidTableau(
                    "inner shape not contained in outer".into(),
                ));
            }
            for (c, slot) in row.iter().enumerate() {
                if (c < skip) != slot.is_none() {
                    return Err(Error::InvalidTableau(format!(
                        "slot ({}, {}) does not match the inner shape",
                        r + 1,
                        c + 1
                    )));
                }
                let Some(v) = *slot else { continue };
                let left = if c > 0 { row[c - 1] } else { None };
                let above = if r > 0 { rows[r - 1][c] } else { None };
                if v == 0 || left.is_some_and(|l| l >= v) || above.is_some_and(|a| a >= v) {
                    return Err(Error::InvalidTableau(format!(
                        "skew filling not increasing at ({}, {})",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(SkewTableau { inner, rows })
    }

    pub fn inner(&self) -> &YoungDiagram {
        &self.inner
    }

    pub fn outer(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.iter().map(Vec::len).collect()).expect("validated")
    }

    pub fn rows(&self) -> &[Vec<Option<u32>>] {
        &self.rows
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().flatten().copied().max()
    }
}

/// Superstandard tableau of a shape: rows filled left to right with
/// consecutive integers, top row first.
pub fn superstandard(shape: &YoungDiagram) -> IncreasingTableau {
    let mut next = 0u32;
    let rows = shape
        .parts()
        .iter()
        .map(|&len| {
            (0..len)
                .map(|_| {
                    next += 1;
                    next
                })
                .collect()
        })
        .collect();
    IncreasingTableau::from_rows_unchecked(rows)
}

/// `T_w`: the letters of `w` placed southwest to northeast on the
/// antidiagonal skew shape `staircase(n) / staircase(n - 1)`.
pub fn antidiagonal_tableau(w: &Word) -> SkewTableau {
    let n = w.len();
    let inner = staircase(n.saturating_sub(1));
    let rows = (1..=n)
        .map(|r| {
            let mut row = vec![None; n - r + 1];
            row[n - r] = Some(w.letters()[n - r]);
            row
        })
        .collect();
    SkewTableau { inner, rows }
}
