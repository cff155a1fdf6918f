//! Young diagrams in English notation.
//!
//! Boxes are addressed as `(row, col)`, both 1-based, rows counted from the
//! top and columns from the left.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// A partition `lambda_1 >= lambda_2 >= ... > 0`, possibly empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(YoungDiagram { parts })
        } else {
            Err(Error::InvalidDiagram(parts))
        }
    }

    /// Drops trailing zeros before validating.
    pub fn from_lengths(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        YoungDiagram::new(parts)
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of the first row (0 if empty).
    pub fn first_row(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of the first column.
    pub fn first_column(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `row` (1-based); 0 beyond the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Height of column `col` (1-based).
    pub fn col_len(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.row_len(cell.row) >= cell.col
    }

    /// Containment of diagrams, `self ⊆ other`.
    pub fn is_contained_in(&self, other: &YoungDiagram) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let cols = self.first_row();
        YoungDiagram {
            parts: (1..=cols).map(|c| self.col_len(c)).collect(),
        }
    }

    /// Removable boxes, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.parts.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    pub fn is_corner(&self, cell: Cell) -> bool {
        self.contains_cell(cell)
            && cell.col == self.row_len(cell.row)
            && self.row_len(cell.row + 1) < cell.col
    }

    /// Boxes that may be added, top to bottom.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.parts.len() + 1)
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| Cell::new(r, self.row_len(r) + 1))
            .collect()
    }

    pub fn with_cell_added(&self, cell: Cell) -> Result<YoungDiagram> {
        let mut parts = self.parts.clone();
        if cell.row == parts.len() + 1 {
            parts.push(0);
        }
        if cell.row == 0 || cell.row > parts.len() || parts[cell.row - 1] + 1 != cell.col {
            return Err(Error::InvalidDiagram(self.parts.clone()));
        }
        parts[cell.row - 1] += 1;
        YoungDiagram::new(parts)
    }

    pub fn with_cell_removed(&self, cell: Cell) -> Result<YoungDiagram> {
        if !self.is_corner(cell) {
            return Err(Error::NotACorner {
                row: cell.row,
                col: cell.col,
            });
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        YoungDiagram::from_lengths(parts)
    }

    /// All boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Hook length `arm + leg + 1` of a box.
    pub fn hook_length(&self, cell: Cell) -> usize {
        let arm = self.row_len(cell.row) - cell.col;
        let leg = self.col_len(cell.col) - cell.row;
        arm + leg + 1
    }

    /// `lambda` covers `self` in Young's lattice iff it has exactly one more box.
    pub fn is_covered_by(&self, other: &YoungDiagram) -> bool {
        other.size() == self.size() + 1 && self.is_contained_in(other)
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        YoungDiagram::new(parts)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(d: YoungDiagram) -> Vec<usize> {
        d.parts
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The staircase `(q, q-1, ..., 1)`.
pub fn staircase(q: usize) -> YoungDiagram {
    YoungDiagram {
        parts: (1..=q).rev().collect(),
    }
}

/// All partitions of `n`, in lexicographic order of their parts.
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(n, n, usize::MAX, &mut current, &mut out);
    out.sort();
    out
}

fn partitions_rec(
    remaining: usize,
    max_part: usize,
    max_rows: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<YoungDiagram>,
) {
    if remaining == 0 {
        out.push(YoungDiagram {
            parts: current.clone(),
        });
        return;
    }
    if current.len() == max_rows {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        partitions_rec(remaining - p, p, max_rows, current, out);
        current.pop();
    }
}

/// All diagrams contained in `outer` (including the empty one), in
/// lexicographic order of their parts.
pub fn subdiagrams(outer: &YoungDiagram) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    subdiagrams_rec(outer.parts(), usize::MAX, &mut current, &mut out);
    out.sort();
    out
}

fn subdiagrams_rec(
    outer: &[usize],
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<YoungDiagram>,
) {
    out.push(YoungDiagram {
        parts: current.clone(),
    });
    let row = current.len();
    if row == outer.len() {
        return;
    }
    for p in 1..=outer[row].min(max_part) {
        current.push(p);
        subdiagrams_rec(outer, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(parts: &[usize]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(YoungDiagram::new(vec![2, 3]).is_err());
        assert!(YoungDiagram::new(vec![2, 0]).is_err());
        assert_eq!(
            YoungDiagram::from_lengths(vec![2, 1, 0, 0]).unwrap(),
            d(&[2, 1])
        );
        assert!(YoungDiagram::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn conjugate_and_corners() {
        assert_eq!(d(&[3, 2]).conjugate(), d(&[2, 2, 1]));
        assert_eq!(d(&[2, 1]).corners(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
        assert_eq!(d(&[2, 2]).corners(), vec![Cell::new(2, 2)]);
        assert!(YoungDiagram::empty().corners().is_empty());
        assert_eq!(
            d(&[2, 2]).addable_cells(),
            vec![Cell::new(1, 3), Cell::new(3, 1)]
        );
        assert_eq!(YoungDiagram::empty().addable_cells(), vec![Cell::new(1, 1)]);
    }

    #[test]
    fn staircase_shape() {
        assert_eq!(staircase(3), d(&[3, 2, 1]));
        assert!(staircase(0).is_empty());
        assert_eq!(staircase(4).size(), 10);
    }

    #[test]
    fn hooks_and_contents() {
        let l = d(&[4, 3, 2]);
        assert_eq!(l.hook_length(Cell::new(1, 1)), 6);
        assert_eq!(l.hook_length(Cell::new(3, 2)), 1);
        assert_eq!(Cell::new(3, 1).content(), -2);
        assert_eq!(Cell::new(1, 4).content(), 3);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        // Subdiagrams of the 3-staircase by size: 1 + 1 + 2 + 3 + 3 + 3 + 1.
        assert_eq!(subdiagrams(&staircase(3)).len(), 14);
    }

    #[test]
    fn adding_and_removing_cells() {
        let l = d(&[2, 1]);
        assert_eq!(l.with_cell_added(Cell::new(3, 1)).unwrap(), d(&[2, 1, 1]));
        assert!(l.with_cell_added(Cell::new(2, 3)).is_err());
        assert_eq!(l.with_cell_removed(Cell::new(2, 1)).unwrap(), d(&[2]));
        assert!(l.with_cell_removed(Cell::new(1, 1)).is_err());
        assert!(d(&[2]).is_covered_by(&l));
        assert!(!d(&[1]).is_covered_by(&l));
    }

    #[test]
    fn serde_as_integer_list() {
        let s = serde_json::to_string(&d(&[4, 3, 2, 1, 1])).unwrap();
        assert_eq!(s, "[4,3,2,1,1]");
        let back: YoungDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d(&[4, 3, 2, 1, 1]));
        assert!(serde_json::from_str::<YoungDiagram>("[1,2]").is_err());
    }
}
