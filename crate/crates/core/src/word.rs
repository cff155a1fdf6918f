//! Words over a bounded alphabet and the LIS/LDS oracles.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::trial_rng;

/// A word `w_1 ... w_n` over the alphabet `{1, ..., q}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self> {
        if alphabet == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if let Some((position, &letter)) = letters
            .iter()
            .enumerate()
            .find(|(_, &l)| l == 0 || l > alphabet)
        {
            return Err(Error::LetterOutOfRange {
                letter,
                position: position + 1,
                alphabet,
            });
        }
        Ok(Word { letters, alphabet })
    }

    /// Word whose alphabet is the largest letter it uses (1 for the empty word).
    pub fn from_letters(letters: Vec<u32>) -> Result<Self> {
        let alphabet = letters.iter().copied().max().unwrap_or(1).max(1);
        Word::new(letters, alphabet)
    }

    pub fn empty(alphabet: u32) -> Result<Self> {
        Word::new(Vec::new(), alphabet)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w_n w_{n-1} ... w_1`, over the same alphabet.
    pub fn reverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
            alphabet: self.alphabet,
        }
    }

    /// The word with the order of the alphabet flipped (`l -> q + 1 - l`).
    pub fn complement(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|&l| self.alphabet + 1 - l)
                .collect(),
            alphabet: self.alphabet,
        }
    }

    /// Append one letter, returning a new word.
    pub fn push(&self, letter: u32) -> Result<Word> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word::new(letters, self.alphabet)
    }

    /// Uniform word of length `n` drawn from `rng`.
    pub fn random<R: Rng + ?Sized>(n: usize, alphabet: u32, rng: &mut R) -> Result<Word> {
        if alphabet == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let letters = (0..n).map(|_| rng.gen_range(1..=alphabet)).collect();
        Ok(Word { letters, alphabet })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Uniform word in `W_{n,q}`; the same `(n, q, seed)` always gives the same word.
pub fn random_word(n: usize, q: u32, seed: u64) -> Result<Word> {
    Word::random(n, q, &mut trial_rng(seed, 0))
}

/// Iterator over all `q^n` words of `W_{n,q}` in lexicographic order.
pub fn all_words(n: usize, q: u32) -> AllWords {
    AllWords {
        next: if q == 0 { None } else { Some(vec![1; n]) },
        alphabet: q,
    }
}

pub struct AllWords {
    next: Option<Vec<u32>>,
    alphabet: u32,
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            if succ[i] < self.alphabet {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 1;
        }
        Some(Word {
            letters: current,
            alphabet: self.alphabet,
        })
    }
}

/// Length of the longest strictly increasing subsequence ending at each position.
fn lis_ending_at(letters: &[u32]) -> Vec<usize> {
    let mut best = vec![1usize; letters.len()];
    for i in 0..letters.len() {
        for j in 0..i {
            if letters[j] < letters[i] && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
            }
        }
    }
    best
}

/// Longest strictly increasing subsequence, by quadratic dynamic programming.
pub fn lis(w: &Word) -> usize {
    lis_ending_at(&w.letters).into_iter().max().unwrap_or(0)
}

/// Longest strictly decreasing subsequence.
pub fn lds(w: &Word) -> usize {
    lis(&w.complement())
}

/// `r(w, t)` for `t = 1..=lis(w)`: entry `t - 1` is the largest (1-based)
/// index whose longest strictly increasing subsequence ending there has
/// length `t`.
pub fn lis_end_positions(w: &Word) -> Vec<usize> {
    let ending = lis_ending_at(&w.letters);
    let s = ending.iter().copied().max().unwrap_or(0);
    let mut r = vec![0usize; s];
    for (i, &t) in ending.iter().enumerate() {
        r[t - 1] = i + 1;
    }
    r
}
