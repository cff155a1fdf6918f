//! Hecke insertion and its inverse, plus classical RSK / Schensted row
//! insertion for comparison.
//!
//! Hecke insertion of `x` into an increasing tableau proceeds row by row.
//! In a row with entries larger than `x`, the smallest such entry `y` is
//! replaced by `x` when that keeps the tableau increasing, and `y` moves on
//! to the next row either way. When `x` is at least every entry of the row,
//! `x` is appended if legal (a new box, flag 1); otherwise the tableau is
//! left unchanged (flag 0) and the recorded corner is the bottom of the
//! column holding the row's last box.

use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tableau::{IncreasingTableau, SemistandardTableau, SetValuedTableau};
use crate::word::Word;

/// Outcome of inserting one letter: the new tableau, the corner `c`, and
/// whether a box was added.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionStep {
    pub tableau: IncreasingTableau,
    pub corner: Cell,
    pub added: bool,
}

/// The insertion tableau `P` and recording tableau `Q` of a word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckePair {
    pub shape: YoungDiagram,
    #[serde(rename = "p")]
    pub insertion: IncreasingTableau,
    #[serde(rename = "q")]
    pub recording: SetValuedTableau,
}

impl HeckePair {
    pub fn new(insertion: IncreasingTableau, recording: SetValuedTableau) -> Result<Self> {
        let shape = insertion.shape();
        if recording.shape() != shape {
            return Err(Error::InvalidTableau(format!(
                "P has shape {shape} but Q has shape {}",
                recording.shape()
            )));
        }
        Ok(HeckePair {
            shape,
            insertion,
            recording,
        })
    }
}

/// Inserts `x` into `rows`, which must hold an increasing tableau.
/// Returns the 0-based corner and whether a box was added.
fn insert_in_place(rows: &mut Vec<Vec<u32>>, mut x: u32) -> ((usize, usize), bool) {
    let mut r = 0;
    loop {
        if r == rows.len() {
            // A value leaving the last row always fits under the first
            // column: a column-1 bump is always a legal replacement.
            debug_assert!(r == 0 || rows[r - 1][0] < x);
            rows.push(vec![x]);
            return ((r, 0), true);
        }
        let row = &rows[r];
        let j = row.partition_point(|&v| v <= x);
        if j == row.len() {
            let above_ok = r == 0 || rows[r - 1].get(j).is_some_and(|&a| a < x);
            let left_ok = j == 0 || row[j - 1] < x;
            if above_ok && left_ok {
                rows[r].push(x);
                return ((r, j), true);
            }
            let col = j - 1;
            let bottom = rows.iter().take_while(|row| row.len() > col).count() - 1;
            return ((bottom, col), false);
        }
        let y = row[j];
        let left_ok = j == 0 || row[j - 1] < x;
        let above_ok = r == 0 || rows[r - 1][j] < x;
        if left_ok && above_ok {
            rows[r][j] = x;
        }
        x = y;
        r += 1;
    }
}

/// Hecke insertion of a single letter into `t`.
pub fn hecke_insert(t: &IncreasingTableau, x: u32) -> Result<InsertionStep> {
    t.validate()?;
    if x == 0 {
        return Err(Error::BadParameter("letters are positive".into()));
    }
    let mut rows = t.rows().to_vec();
    let ((r, c), added) = insert_in_place(&mut rows, x);
    Ok(InsertionStep {
        tableau: IncreasingTableau::from_rows_unchecked(rows),
        corner: Cell::new(r + 1, c + 1),
        added,
    })
}

/// Incremental Hecke correspondence: feed letters one at a time.
#[derive(Clone, Debug, Default)]
pub struct HeckeInserter {
    p: Vec<Vec<u32>>,
    q: Vec<Vec<Vec<u32>>>,
    inserted: u32,
}

impl HeckeInserter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `x`, recording the next label; returns the corner and flag.
    pub fn push(&mut self, x: u32) -> (Cell, bool) {
        self.inserted += 1;
        let ((r, c), added) = insert_in_place(&mut self.p, x);
        if added {
            if r == self.q.len() {
                self.q.push(Vec::new());
            }
            self.q[r].push(vec![self.inserted]);
        } else {
            self.q[r][c].push(self.inserted);
        }
        (Cell::new(r + 1, c + 1), added)
    }

    pub fn pair(&self) -> HeckePair {
        let insertion = IncreasingTableau::from_rows_unchecked(self.p.clone());
        HeckePair {
            shape: insertion.shape(),
            insertion,
            recording: SetValuedTableau::from_rows_unchecked(self.q.clone()),
        }
    }

    pub fn into_pair(self) -> HeckePair {
        let insertion = IncreasingTableau::from_rows_unchecked(self.p);
        HeckePair {
            shape: insertion.shape(),
            insertion,
            recording: SetValuedTableau::from_rows_unchecked(self.q),
        }
    }
}

/// The Hecke correspondence `w -> (P, Q)` with recording word `1 2 ... n`.
pub fn hecke(w: &Word) -> HeckePair {
    let mut ins = HeckeInserter::new();
    for &x in w.letters() {
        ins.push(x);
    }
    ins.into_pair()
}

/// Insertion tableau only.
pub fn hecke_insertion_tableau(w: &Word) -> IncreasingTableau {
    let mut rows = Vec::new();
    for &x in w.letters() {
        insert_in_place(&mut rows, x);
    }
    IncreasingTableau::from_rows_unchecked(rows)
}

/// Common shape of `hecke(w)`, without building the recording tableau.
pub fn heckeshape(w: &Word) -> YoungDiagram {
    hecke_insertion_tableau(w).shape()
}

/// Reverse insertion from the 0-based cell `(r, c)`; returns the output letter.
fn reverse_in_place(rows: &mut Vec<Vec<u32>>, (r, c): (usize, usize), remove: bool) -> Result<u32> {
    let is_corner = rows.get(r).is_some_and(|row| row.len() == c + 1)
        && rows.get(r + 1).is_none_or(|below| below.len() <= c);
    if !is_corner {
        return Err(Error::NotACorner {
            row: r + 1,
            col: c + 1,
        });
    }
    let mut y = rows[r][c];
    if remove {
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
    }
    for row in (0..r).rev() {
        let j = rows[row].partition_point(|&v| v < y);
        if j == 0 {
            return Err(Error::NotInImage(format!(
                "no entry below {y} in row {}",
                row + 1
            )));
        }
        let j = j - 1;
        let x = rows[row][j];
        let right_ok = rows[row].get(j + 1).is_none_or(|&v| v > y);
        let below_ok = rows
            .get(row + 1)
            .and_then(|b| b.get(j))
            .is_none_or(|&v| v > y);
        if right_ok && below_ok {
            rows[row][j] = y;
        }
        y = x;
    }
    Ok(y)
}

/// Reverse Hecke insertion of the triple `(z, c, added)`.
pub fn reverse_hecke(
    z: &IncreasingTableau,
    corner: Cell,
    added: bool,
) -> Result<(IncreasingTableau, u32)> {
    z.validate()?;
    if corner.row == 0 || corner.col == 0 {
        return Err(Error::NotACorner {
            row: corner.row,
            col: corner.col,
        });
    }
    let mut rows = z.rows().to_vec();
    let x = reverse_in_place(&mut rows, (corner.row - 1, corner.col - 1), added)?;
    Ok((IncreasingTableau::from_rows_unchecked(rows), x))
}

/// Inverse of [`hecke`]: recovers the word over `{1..alphabet}`.
pub fn hecke_inverse(pair: &HeckePair, alphabet: u32) -> Result<Word> {
    pair.insertion.validate()?;
    pair.recording.validate()?;
    if pair.insertion.shape() != pair.recording.shape() {
        return Err(Error::InvalidTableau(
            "P and Q have different shapes".into(),
        ));
    }
    let mut p = pair.insertion.rows().to_vec();
    let mut q = pair.recording.rows().to_vec();
    let n = pair.recording.label_count() as u32;
    let mut letters = Vec::with_capacity(n as usize);
    for label in (1..=n).rev() {
        // Q is standard set-valued, so the label sits in exactly one box.
        let (r, c) = q
            .iter()
            .enumerate()
            .find_map(|(r, row)| {
                row.iter()
                    .position(|s| s.last() == Some(&label))
                    .map(|c| (r, c))
            })
            .ok_or_else(|| Error::NotInImage(format!("label {label} is not maximal in its box")))?;
        let alone = q[r][c].len() == 1;
        if alone {
            q[r].pop();
            if q[r].is_empty() {
                q.pop();
            }
        } else {
            q[r][c].pop();
        }
        let x = reverse_in_place(&mut p, (r, c), alone)?;
        letters.push(x);
    }
    if !p.is_empty() {
        return Err(Error::NotInImage("P not exhausted".into()));
    }
    letters.reverse();
    Word::new(letters, alphabet)
}

/// Classical RSK row insertion of a word (rows weakly increasing).
pub fn rsk_insertion_tableau(w: &Word) -> SemistandardTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &letter in w.letters() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let j = rows[r].partition_point(|&v| v <= x);
            if j == rows[r].len() {
                rows[r].push(x);
                break;
            }
            x = std::mem::replace(&mut rows[r][j], x);
            r += 1;
        }
    }
    SemistandardTableau::from_rows_unchecked(rows)
}

pub fn rsk_shape(w: &Word) -> YoungDiagram {
    rsk_insertion_tableau(w).shape()
}

/// Schensted shape of a permutation (RSK of its one-line notation).
pub fn schensted_shape(p: &Permutation) -> YoungDiagram {
    rsk_shape(&p.as_word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{all_words, lds, lis};

    fn t(rows: &[&[u32]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters.to_vec()).unwrap()
    }

    #[test]
    fn insert_into_two_rows() {
        let step = hecke_insert(&t(&[&[1, 3, 5], &[2, 4, 6]]), 3).unwrap();
        assert_eq!(step.tableau, t(&[&[1, 3, 5], &[2, 4, 6], &[6]]));
        assert_eq!(step.corner, Cell::new(3, 1));
        assert!(step.added);
    }

    #[test]
    fn insert_into_empty() {
        let step = hecke_insert(&IncreasingTableau::empty(), 4).unwrap();
        assert_eq!(step.tableau, t(&[&[4]]));
        assert_eq!(step.corner, Cell::new(1, 1));
        assert!(step.added);
    }

    #[test]
    fn insertion_without_new_box() {
        let before = t(&[&[1, 2, 4, 5], &[2, 4], &[3], &[4], &[5]]);
        let step = hecke_insert(&before, 1).unwrap();
        assert_eq!(step.tableau, before);
        assert!(!step.added);
        assert_eq!(step.corner, Cell::new(5, 1));
    }

    #[test]
    fn rejects_invalid_tableau() {
        let bad = IncreasingTableau::from_rows_unchecked(vec![vec![2, 1]]);
        assert!(hecke_insert(&bad, 1).is_err());
    }

    #[test]
    fn small_shapes() {
        assert_eq!(heckeshape(&w(&[2, 1, 2, 3, 2])).parts(), &[3, 2]);
        assert_eq!(heckeshape(&w(&[1, 2, 3, 4, 5])).parts(), &[5]);
        let s = heckeshape(&w(&[1, 3, 4, 2, 2]));
        assert_eq!((s.first_row(), s.first_column()), (3, 2));
        let empty = hecke(&Word::empty(3).unwrap());
        assert!(empty.shape.is_empty() && empty.recording.rows().is_empty());
    }

    #[test]
    fn reverse_single_box() {
        let (y, x) = reverse_hecke(&t(&[&[3]]), Cell::new(1, 1), true).unwrap();
        assert!(y.rows().is_empty());
        assert_eq!(x, 3);
        assert!(reverse_hecke(&t(&[&[1, 2], &[2]]), Cell::new(1, 1), true).is_err());
    }

    #[test]
    fn reverse_undoes_every_step() {
        for q in 1..=4 {
            for n in 1..=6 {
                for word in all_words(n, q) {
                    let mut tab = IncreasingTableau::empty();
                    for &x in word.letters() {
                        let step = hecke_insert(&tab, x).unwrap();
                        let (back, y) =
                            reverse_hecke(&step.tableau, step.corner, step.added).unwrap();
                        assert_eq!((back, y), (tab.clone(), x), "{word}");
                        tab = step.tableau;
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_roundtrip_small() {
        for q in 1..=3 {
            for n in 0..=6 {
                for word in all_words(n, q) {
                    let pair = hecke(&word);
                    assert_eq!(hecke_inverse(&pair, q).unwrap(), word);
                }
            }
        }
    }

    #[test]
    fn singleton_pair_inverse() {
        let pair = HeckePair::new(
            t(&[&[2]]),
            SetValuedTableau::new(vec![vec![vec![1]]]).unwrap(),
        )
        .unwrap();
        assert_eq!(hecke_inverse(&pair, 3).unwrap().letters(), &[2]);
    }

    #[test]
    fn inverse_rejects_invalid_pairs() {
        let p = t(&[&[1, 3]]);
        let q = SetValuedTableau::new(vec![vec![vec![1, 2], vec![3]]]).unwrap();
        let pair = HeckePair::new(p.clone(), q).unwrap();
        assert!(hecke_inverse(&pair, 3).is_ok());
        // Letters outside the requested alphabet.
        assert!(matches!(
            hecke_inverse(&pair, 2),
            Err(Error::LetterOutOfRange { .. })
        ));
        let wrong_shape = SetValuedTableau::new(vec![vec![vec![1]]]).unwrap();
        assert!(HeckePair::new(p.clone(), wrong_shape).is_err());
        let broken = HeckePair {
            shape: p.shape(),
            insertion: p,
            recording: SetValuedTableau::from_rows_unchecked(vec![vec![vec![2], vec![1]]]),
        };
        assert!(hecke_inverse(&broken, 3).is_err());
    }

    #[test]
    fn rsk_baselines() {
        assert_eq!(rsk_shape(&w(&[1, 1, 1])).parts(), &[3]);
        assert_eq!(rsk_shape(&w(&[2, 1, 2, 3, 2])).first_column(), 2);
        // The nine-card deck skips 5, so it is a word rather than a permutation.
        assert_eq!(rsk_shape(&w(&[8, 2, 6, 3, 4, 1, 7, 10, 9])).first_row(), 5);
        let perm = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(schensted_shape(&perm).parts(), &[2, 1]);
    }

    #[test]
    fn first_row_and_column_match_oracles() {
        for q in 1..=4 {
            for n in 0..=6 {
                for word in all_words(n, q) {
                    let s = heckeshape(&word);
                    assert_eq!(s.first_row(), lis(&word), "{word}");
                    assert_eq!(s.first_column(), lds(&word), "{word}");
                }
            }
        }
    }
}
