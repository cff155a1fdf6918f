//! Permutations in one-line notation and the 0-Hecke monoid of type A.
//!
//! A word over `{1, ..., q}` is read as a product of simple transpositions
//! `s_i = (i i+1)` in `S_{q+1}` under the Demazure product: right
//! multiplication by `s_i` takes effect only when `i` is an ascent. This
//! realizes the relations `i i = i`, `i j i = j i j` and `i j = j i` for
//! `|i - j| >= 2`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

/// A permutation of `{1, ..., m}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    one_line: Vec<u32>,
}

impl Permutation {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let m = one_line.len();
        let mut seen = vec![false; m];
        for &v in &one_line {
            let idx = v as usize;
            if idx == 0 || idx > m || seen[idx - 1] {
                return Err(Error::InvalidPermutation(one_line));
            }
            seen[idx - 1] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            one_line: (1..=m as u32).collect(),
        }
    }

    pub fn one_line(&self) -> &[u32] {
        &self.one_line
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    /// Whether `pi(i) < pi(i+1)` (1-based `i`).
    pub fn is_ascent(&self, i: usize) -> bool {
        i >= 1 && i < self.one_line.len() && self.one_line[i - 1] < self.one_line[i]
    }

    /// Demazure product with `s_i`; returns whether the length went up.
    pub fn demazure_step(&mut self, i: usize) -> bool {
        if self.is_ascent(i) {
            self.one_line.swap(i - 1, i);
            true
        } else {
            false
        }
    }

    /// The permutation as a word over `{1..m}`, for Schensted insertion.
    pub fn as_word(&self) -> Word {
        Word::new(self.one_line.clone(), self.one_line.len().max(1) as u32)
            .expect("one-line notation is a word over 1..=m")
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.one_line
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `W(w)`: the element of `S_{q+1}` represented by `w` in the 0-Hecke monoid.
pub fn hecke_product(w: &Word) -> Permutation {
    let mut pi = Permutation::identity(w.alphabet_size() as usize + 1);
    for &l in w.letters() {
        pi.demazure_step(l as usize);
    }
    pi
}

/// Coxeter length, i.e. the number of inversions.
pub fn coxeter_length(p: &Permutation) -> usize {
    let v = p.one_line();
    let mut inv = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// The longest element `w_0 = (q+1) q ... 2 1` of `S_{q+1}`.
pub fn longest_element(q: u32) -> Result<Permutation> {
    if q == 0 {
        return Err(Error::EmptyAlphabet);
    }
    Ok(Permutation {
        one_line: (1..=q + 1).rev().collect(),
    })
}
