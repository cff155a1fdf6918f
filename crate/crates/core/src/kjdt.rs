//! K-theoretic jeu de taquin through `switch` operators on mixed tableaux.
//!
//! A mixed tableau fills a straight shape with labels from two alphabets:
//! underlined labels `_1.._p` and plain labels `1..q`. Within any row or
//! column each label of either alphabet appears at most once; no
//! increasingness is required. `switch(_i, j)` swaps `_i` and `j` inside
//! every connected component (by shared box sides) of size at least two of
//! the set of boxes carrying `_i` or `j`. If the swap breaks the row/column
//! condition the result is the null tableau, represented here as `None`.
//!
//! K-infusion of an inner standard tableau `A` through an outer increasing
//! tableau `B` underlines the entries of `A` and applies a switch sequence.
//! The plain entries end up filling a straight shape: that is
//! `infusion_1(A, B)`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::diagram::{staircase, YoungDiagram};
use crate::error::{Error, Result};
use crate::tableau::{antidiagonal_tableau, superstandard, IncreasingTableau, SkewTableau};
use crate::word::Word;

/// One box of a mixed tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// Underlined label from the inner alphabet.
    Inner(u32),
    /// Plain label from the outer alphabet.
    Outer(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Inner(v) => write!(f, "_{v}"),
            Label::Outer(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (inner, digits) = match s.strip_prefix('_') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let v: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad label {s:?}")))?;
        if v == 0 {
            return Err(Error::Parse("labels are positive".into()));
        }
        Ok(if inner {
            Label::Inner(v)
        } else {
            Label::Outer(v)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedTableau {
    rows: Vec<Vec<Label>>,
}

impl MixedTableau {
    pub fn new(rows: Vec<Vec<Label>>) -> Result<Self> {
        YoungDiagram::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let t = MixedTableau { rows };
        if !t.is_valid() {
            return Err(Error::InvalidTableau(
                "a label repeats within a row or column".into(),
            ));
        }
        Ok(t)
    }

    /// Underlines `inner` and fills the rest of the shape from `outer`.
    pub fn from_parts(inner: &IncreasingTableau, outer: &SkewTableau) -> Result<Self> {
        if &inner.shape() != outer.inner() {
            return Err(Error::InvalidTableau(format!(
                "inner tableau has shape {} but the skew shape's inner diagram is {}",
                inner.shape(),
                outer.inner()
            )));
        }
        let rows = outer
            .rows()
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, slot)| match slot {
                        Some(v) => Label::Outer(*v),
                        None => Label::Inner(inner.rows()[r][c]),
                    })
                    .collect()
            })
            .collect();
        MixedTableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<Label>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    fn is_valid(&self) -> bool {
        let mut seen = HashSet::new();
        for row in &self.rows {
            seen.clear();
            if !row.iter().all(|l| seen.insert(*l)) {
                return false;
            }
        }
        let width = self.rows.first().map_or(0, Vec::len);
        for c in 0..width {
            seen.clear();
            let column = self
                .rows
                .iter()
                .take_while(|row| row.len() > c)
                .map(|row| row[c]);
            for l in column {
                if !seen.insert(l) {
                    return false;
                }
            }
        }
        true
    }

    /// `switch(_i, j)`; `None` is the null tableau.
    pub fn switch(&self, inner: u32, outer: u32) -> Option<MixedTableau> {
        let a = Label::Inner(inner);
        let b = Label::Outer(outer);
        let in_subshape = |r: usize, c: usize| -> bool {
            self.rows
                .get(r)
                .and_then(|row| row.get(c))
                .is_some_and(|&l| l == a || l == b)
        };
        let mut visited: Vec<Vec<bool>> =
            self.rows.iter().map(|row| vec![false; row.len()]).collect();
        let mut result = self.rows.clone();
        let mut changed = false;
        let mut stack = Vec::new();
        let mut component = Vec::new();
        for r in 0..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if visited[r][c] || !in_subshape(r, c) {
                    continue;
                }
                component.clear();
                visited[r][c] = true;
                stack.push((r, c));
                while let Some((x, y)) = stack.pop() {
                    component.push((x, y));
                    let mut neighbours = vec![(x + 1, y), (x, y + 1)];
                    if x > 0 {
                        neighbours.push((x - 1, y));
                    }
                    if y > 0 {
                        neighbours.push((x, y - 1));
                    }
                    for (nx, ny) in neighbours {
                        if in_subshape(nx, ny) && !visited[nx][ny] {
                            visited[nx][ny] = true;
                            stack.push((nx, ny));
                        }
                    }
                }
                if component.len() >= 2 {
                    changed = true;
                    for &(x, y) in &component {
                        result[x][y] = if self.rows[x][y] == a { b } else { a };
                    }
                }
            }
        }
        if !changed {
            return Some(self.clone());
        }
        let t = MixedTableau { rows: result };
        t.is_valid().then_some(t)
    }

    /// Plain labels, if they occupy a straight shape.
    pub fn outer_region(&self) -> Result<IncreasingTableau> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for row in &self.rows {
            let plain: Vec<u32> = row
                .iter()
                .map_while(|l| match l {
                    Label::Outer(v) => Some(*v),
                    Label::Inner(_) => None,
                })
                .collect();
            if row[plain.len()..]
                .iter()
                .any(|l| matches!(l, Label::Outer(_)))
            {
                return Err(Error::InvalidTableau(
                    "plain labels do not form a straight shape".into(),
                ));
            }
            if plain.is_empty() {
                break;
            }
            rows.push(plain);
        }
        let total: usize = rows.iter().map(Vec::len).sum();
        let all_plain = self
            .rows
            .iter()
            .flatten()
            .filter(|l| matches!(l, Label::Outer(_)))
            .count();
        if total != all_plain {
            return Err(Error::InvalidTableau(
                "plain labels do not form a straight shape".into(),
            ));
        }
        IncreasingTableau::new(rows)
    }

    /// Underlined labels as a filling of the skew shape left over by the plain region.
    pub fn inner_region(&self) -> Result<SkewTableau> {
        let plain = self.outer_region()?.shape();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|l| match l {
                        Label::Inner(v) => Some(*v),
                        Label::Outer(_) => None,
                    })
                    .collect()
            })
            .collect();
        SkewTableau::new(plain, rows)
    }
}

impl fmt::Display for MixedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<String> = row.iter().map(Label::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for MixedTableau {
    type Err = Error;

    /// One row per line, labels separated by whitespace, `_k` for underlined `k`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(Label::from_str)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        MixedTableau::new(rows)
    }
}

/// Debug dump of a possibly-null mixed tableau.
pub fn dump(t: Option<&MixedTableau>) -> String {
    match t {
        Some(t) => t.to_string(),
        None => "null".to_string(),
    }
}

/// Applies `switch(_i, j)` to a possibly-null tableau.
pub fn switch(t: Option<&MixedTableau>, inner: u32, outer: u32) -> Option<MixedTableau> {
    t?.switch(inner, outer)
}

/// Whether `switch(_i, r)` and `switch(_j, s)` commute on `t`.
pub fn check_commutation(i: u32, r: u32, j: u32, s: u32, t: Option<&MixedTableau>) -> bool {
    let left = switch(switch(t, j, s).as_ref(), i, r);
    let right = switch(switch(t, i, r).as_ref(), j, s);
    left == right
}

/// An ordered list of `(underlined i, plain j)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchSequence(pub Vec<(u32, u32)>);

impl SwitchSequence {
    /// `(_p,1) ... (_p,q), (_p-1,1) ... (_p-1,q), ..., (_1,1) ... (_1,q)`.
    pub fn standard(p: u32, q: u32) -> Self {
        SwitchSequence(
            (1..=p)
                .rev()
                .flat_map(|i| (1..=q).map(move |j| (i, j)))
                .collect(),
        )
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// A shuffle of the standard sequence: each pair exactly once, `j`
    /// increasing for fixed `i`, and `i` decreasing for fixed `j`.
    pub fn is_viable(&self, p: u32, q: u32) -> bool {
        if self.0.len() != (p as usize) * (q as usize) {
            return false;
        }
        // done[k] counts the pairs already seen with i = p - k.
        let mut done = vec![0u32; p as usize];
        for &(i, j) in &self.0 {
            if i == 0 || i > p || j == 0 || j > q {
                return false;
            }
            let k = (p - i) as usize;
            if done[k] != j - 1 || (k > 0 && done[k - 1] < j) {
                return false;
            }
            done[k] = j;
        }
        true
    }

    /// A random viable sequence, built as a random topological sort.
    pub fn random_viable<R: Rng + ?Sized>(p: u32, q: u32, rng: &mut R) -> Self {
        let mut done = vec![0u32; p as usize];
        let mut seq = Vec::with_capacity((p * q) as usize);
        let mut available = Vec::with_capacity(p as usize);
        for _ in 0..p * q {
            available.clear();
            for k in 0..p as usize {
                if done[k] < q && (k == 0 || done[k - 1] > done[k]) {
                    available.push(k);
                }
            }
            let k = available[rng.gen_range(0..available.len())];
            done[k] += 1;
            seq.push((p - k as u32, done[k]));
        }
        SwitchSequence(seq)
    }
}

/// Applies `seq` left to right; the null tableau is reported as an error.
pub fn apply_switches(start: &MixedTableau, seq: &SwitchSequence) -> Result<MixedTableau> {
    let mut t = start.clone();
    for &(i, j) in seq.pairs() {
        t = t.switch(i, j).ok_or(Error::NullInfusion)?;
    }
    Ok(t)
}

/// Result of K-infusion: the plain alphabet now fills a straight shape
/// (`infusion_1`), and the underlined alphabet the remaining skew shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infusion {
    pub outer: IncreasingTableau,
    pub inner: SkewTableau,
    pub mixed: MixedTableau,
}

/// K-infusion of the standard tableau `a` through the skew increasing
/// tableau `b`, driven by `seq`, which must be viable for
/// `p = max(a)` and `q = max(b)`.
pub fn k_infusion(
    a: &IncreasingTableau,
    b: &SkewTableau,
    seq: &SwitchSequence,
) -> Result<Infusion> {
    let p = a.max_entry().unwrap_or(0);
    let q = b.max_entry().unwrap_or(0);
    if !seq.is_viable(p, q) {
        return Err(Error::NotViable { p, q });
    }
    let start = MixedTableau::from_parts(a, b)?;
    let mixed = apply_switches(&start, seq)?;
    Ok(Infusion {
        outer: mixed.outer_region()?,
        inner: mixed.inner_region()?,
        mixed,
    })
}

/// The pair `(superstandard(staircase(n-1)), T_w)` whose K-infusion
/// rectifies `T_w`.
pub fn rectification_inputs(w: &Word) -> (IncreasingTableau, SkewTableau) {
    let inner = superstandard(&staircase(w.len().saturating_sub(1)));
    (inner, antidiagonal_tableau(w))
}

/// K-rectification of the antidiagonal tableau `T_w` in the order set by
/// the superstandard tableau, using the standard switch sequence.
pub fn k_rectify(w: &Word) -> Result<IncreasingTableau> {
    if w.is_empty() {
        return Ok(IncreasingTableau::empty());
    }
    let (a, b) = rectification_inputs(w);
    let seq = SwitchSequence::standard(a.max_entry().unwrap_or(0), b.max_entry().unwrap_or(0));
    Ok(k_infusion(&a, &b, &seq)?.outer)
}
