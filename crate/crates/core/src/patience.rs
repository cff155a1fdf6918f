//! Patience sorting on decks with repeated values.
//!
//! Cards are dealt left to right. A card may cover a pile whose top is
//! greater (ties forbidden) or greater or equal (ties allowed); the greedy
//! strategy uses the leftmost such pile and otherwise starts a new pile on
//! the right. With ties allowed the final tops are the first row of the
//! Hecke insertion tableau.

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::rng::trial_rng;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ties {
    Allowed,
    Forbidden,
}

/// Piles from left to right, each listed bottom to top.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PileState {
    pub piles: Vec<Vec<u32>>,
}

impl PileState {
    pub fn tops(&self) -> Vec<u32> {
        self.piles
            .iter()
            .map(|p| *p.last().expect("piles are nonempty"))
            .collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.piles.iter().map(Vec::len).collect()
    }
}

/// Plays the greedy strategy on the cards of `w`.
pub fn play_greedy(w: &Word, ties: Ties) -> PileState {
    play_cards(w.letters(), ties)
}

fn play_cards(cards: &[u32], ties: Ties) -> PileState {
    let mut piles: Vec<Vec<u32>> = Vec::new();
    // Tops stay sorted (weakly with ties allowed), so the leftmost legal pile
    // is found by binary search.
    let mut tops: Vec<u32> = Vec::new();
    for &c in cards {
        let k = match ties {
            Ties::Allowed => tops.partition_point(|&t| t < c),
            Ties::Forbidden => tops.partition_point(|&t| t <= c),
        };
        if k == piles.len() {
            piles.push(vec![c]);
            tops.push(c);
        } else {
            piles[k].push(c);
            tops[k] = c;
        }
        debug_assert!(tops.windows(2).all(|t| t[0] <= t[1]));
    }
    PileState { piles }
}

pub fn pile_tops(s: &PileState) -> Word {
    let tops = s.tops();
    let alphabet = tops.iter().copied().max().unwrap_or(1);
    Word::new(tops, alphabet).expect("tops are positive")
}

pub fn pile_count(s: &PileState) -> usize {
    s.piles.len()
}

/// Aggregates of repeated ties-allowed games on shuffled decks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckStats {
    pub ranks: u32,
    pub copies: u32,
    pub trials: u64,
    pub seed: u64,
    /// `histogram[c]` = number of games ending with `c` piles.
    pub histogram: Vec<u64>,
    /// `size_sums[p]` = total size of the pile at position `p + 1`, over all
    /// games (games with fewer piles contribute 0).
    pub size_sums: Vec<u64>,
}

impl DeckStats {
    pub fn mean_piles(&self) -> f64 {
        let total: u64 = self
            .histogram
            .iter()
            .enumerate()
            .map(|(c, &f)| c as u64 * f)
            .sum();
        total as f64 / self.trials as f64
    }

    /// Mean size of the pile at each position, counting from the left.
    pub fn mean_sizes(&self) -> Vec<f64> {
        self.size_sums
            .iter()
            .map(|&s| s as f64 / self.trials as f64)
            .collect()
    }

    /// Fraction of games ending with `c` piles.
    pub fn frequency(&self, c: usize) -> f64 {
        self.histogram.get(c).copied().unwrap_or(0) as f64 / self.trials as f64
    }
}

fn add_into(acc: &mut Vec<u64>, idx: usize, v: u64) {
    if acc.len() <= idx {
        acc.resize(idx + 1, 0);
    }
    acc[idx] += v;
}

fn merge(mut a: (Vec<u64>, Vec<u64>), b: (Vec<u64>, Vec<u64>)) -> (Vec<u64>, Vec<u64>) {
    for (i, v) in b.0.into_iter().enumerate() {
        add_into(&mut a.0, i, v);
    }
    for (i, v) in b.1.into_iter().enumerate() {
        add_into(&mut a.1, i, v);
    }
    a
}

/// Plays `trials` games on a deck holding `copies` cards of each of
/// `ranks` values, shuffled uniformly with the stream `(seed, trial)`.
pub fn deck_simulation(ranks: u32, copies: u32, trials: u64, seed: u64) -> DeckStats {
    let deck: Vec<u32> = (1..=ranks)
        .flat_map(|r| std::iter::repeat_n(r, copies as usize))
        .collect();
    let (histogram, size_sums) = (0..trials)
        .into_par_iter()
        .fold(
            || (Vec::new(), Vec::new()),
            |mut acc, t| {
                let mut rng = trial_rng(seed, t);
                let mut cards = deck.clone();
                cards.shuffle(&mut rng);
                let state = play_cards(&cards, Ties::Allowed);
                add_into(&mut acc.0, state.piles.len(), 1);
                for (p, size) in state.sizes().into_iter().enumerate() {
                    add_into(&mut acc.1, p, size as u64);
                }
                acc
            },
        )
        .reduce(|| (Vec::new(), Vec::new()), merge);
    DeckStats {
        ranks,
        copies,
        trials,
        seed,
        histogram,
        size_sums,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::hecke_insertion_tableau;
    use crate::word::{all_words, lis};

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters.to_vec()).unwrap()
    }

    #[test]
    fn distinct_deck() {
        let deck = w(&[8, 2, 6, 3, 4, 1, 7, 10, 9]);
        for ties in [Ties::Allowed, Ties::Forbidden] {
            let s = play_greedy(&deck, ties);
            assert_eq!(
                s.piles,
                vec![vec![8, 2, 1], vec![6, 3], vec![4], vec![7], vec![10, 9]]
            );
        }
    }

    #[test]
    fn repeated_values() {
        let deck = w(&[2, 1, 4, 1, 3, 5, 3, 2, 5, 1, 4, 2]);
        let allowed = play_greedy(&deck, Ties::Allowed);
        assert_eq!(
            allowed.piles,
            vec![vec![2, 1, 1, 1], vec![4, 3, 3, 2, 2], vec![5, 5, 4]]
        );
        assert_eq!(allowed.tops(), vec![1, 2, 4]);
        assert_eq!(
            pile_tops(&allowed).letters(),
            hecke_insertion_tableau(&deck).first_row()
        );
        let forbidden = play_greedy(&deck, Ties::Forbidden);
        assert_eq!(
            forbidden.piles,
            vec![
                vec![2, 1],
                vec![4, 1],
                vec![3, 2, 1],
                vec![5, 3, 2],
                vec![5, 4]
            ]
        );
    }

    #[test]
    fn trivial_games() {
        assert_eq!(pile_count(&play_greedy(&w(&[1, 2, 3]), Ties::Allowed)), 3);
        assert_eq!(
            pile_count(&play_greedy(&Word::empty(3).unwrap(), Ties::Allowed)),
            0
        );
        let stats = deck_simulation(1, 5, 10, 0);
        assert_eq!(stats.mean_piles(), 1.0);
        assert_eq!(stats.mean_sizes(), vec![5.0]);
    }

    #[test]
    fn piles_match_lis_and_first_row() {
        for q in 1..=3 {
            for n in 0..=6 {
                for word in all_words(n, q) {
                    let s = play_greedy(&word, Ties::Allowed);
                    assert_eq!(pile_count(&s), lis(&word));
                    assert_eq!(s.tops(), hecke_insertion_tableau(&word).first_row());
                }
            }
        }
    }

    #[test]
    fn simulation_is_reproducible() {
        let a = deck_simulation(4, 3, 500, 11);
        let b = deck_simulation(4, 3, 500, 11);
        assert_eq!(a, b);
        assert_eq!(a.histogram.iter().sum::<u64>(), 500);
        assert_eq!(a.size_sums.iter().sum::<u64>(), 500 * 12);
    }
}
