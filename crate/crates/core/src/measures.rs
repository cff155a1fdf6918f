//! Plancherel-Hecke, Plancherel-RSK and Plancherel measures on Young
//! diagrams, exact and sampled, plus the growth chain for the RSK measure.
//!
//! Exact distributions use arbitrary-precision rationals and list shapes in
//! lexicographic order of their parts, so serialized output is stable.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{
    count_increasing, count_semistandard, count_set_valued_standard, count_standard,
};
use crate::diagram::{partitions, staircase, subdiagrams, Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::insertion::{heckeshape, rsk_shape};
use crate::rng::trial_rng;
use crate::word::{all_words, Word};

/// Limits on exact enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactGuard {
    pub max_n: usize,
    pub max_q: u32,
}

impl Default for ExactGuard {
    fn default() -> Self {
        ExactGuard {
            max_n: 10,
            max_q: 5,
        }
    }
}

impl ExactGuard {
    pub fn check(&self, n: usize, q: u32) -> Result<()> {
        if n > self.max_n {
            return Err(Error::GuardExceeded(format!(
                "n = {n} exceeds the exact-mode limit n <= {}",
                self.max_n
            )));
        }
        if q > self.max_q {
            return Err(Error::GuardExceeded(format!(
                "q = {q} exceeds the exact-mode limit q <= {}",
                self.max_q
            )));
        }
        Ok(())
    }
}

/// An exact probability distribution on shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDistribution {
    n: usize,
    q: u32,
    entries: Vec<(YoungDiagram, BigRational)>,
}

/// One serialized entry: `{shape, num, den}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbabilityRecord {
    pub shape: YoungDiagram,
    pub num: String,
    pub den: String,
}

impl ExactDistribution {
    /// Builds a distribution from shape weights over a common denominator,
    /// dropping zero weights and sorting shapes lexicographically.
    pub fn from_weights(
        n: usize,
        q: u32,
        weights: impl IntoIterator<Item = (YoungDiagram, BigUint)>,
        total: &BigUint,
    ) -> Self {
        let mut merged: BTreeMap<YoungDiagram, BigUint> = BTreeMap::new();
        for (shape, w) in weights {
            if !w.is_zero() {
                *merged.entry(shape).or_default() += w;
            }
        }
        let den = BigInt::from(total.clone());
        let entries = merged
            .into_iter()
            .map(|(shape, w)| (shape, BigRational::new(BigInt::from(w), den.clone())))
            .collect();
        ExactDistribution { n, q, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn entries(&self) -> &[(YoungDiagram, BigRational)] {
        &self.entries
    }

    pub fn prob(&self, shape: &YoungDiagram) -> BigRational {
        self.entries
            .binary_search_by(|(s, _)| s.cmp(shape))
            .map(|i| self.entries[i].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    pub fn total(&self) -> BigRational {
        self.entries.iter().map(|(_, p)| p.clone()).sum()
    }

    /// Expectation of `stat(shape)`.
    pub fn expectation(&self, stat: impl Fn(&YoungDiagram) -> usize) -> BigRational {
        self.entries
            .iter()
            .map(|(s, p)| p * BigRational::from_integer(BigInt::from(stat(s))))
            .sum()
    }

    pub fn to_records(&self) -> Vec<ProbabilityRecord> {
        self.entries
            .iter()
            .map(|(shape, p)| ProbabilityRecord {
                shape: shape.clone(),
                num: p.numer().to_string(),
                den: p.denom().to_string(),
            })
            .collect()
    }
}

/// The terms `(λ, d^λ(q), e^λ(n))` of `q^n = Σ d^λ(q) e^λ(n)`, over all
/// `λ ⊆ staircase(q)` with `|λ| <= n`, including zero terms.
pub fn plancherel_hecke_terms(n: usize, q: u32) -> Vec<(YoungDiagram, BigUint, BigUint)> {
    subdiagrams(&staircase(q as usize))
        .into_iter()
        .filter(|l| l.size() <= n)
        .map(|l| {
            let d = count_increasing(&l, q);
            let e = count_set_valued_standard(&l, n);
            (l, d, e)
        })
        .collect()
}

/// `μ_{n,q}(λ) = d^λ(q) e^λ(n) / q^n`.
pub fn exact_plancherel_hecke(n: usize, q: u32, guard: &ExactGuard) -> Result<ExactDistribution> {
    guard.check(n, q)?;
    if q == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let total = BigUint::from(q).pow(n as u32);
    let terms = plancherel_hecke_terms(n, q);
    let sum: BigUint = terms.iter().map(|(_, d, e)| d * e).sum();
    assert_eq!(
        sum, total,
        "weights of the Plancherel-Hecke measure must sum to q^n"
    );
    Ok(ExactDistribution::from_weights(
        n,
        q,
        terms.into_iter().map(|(l, d, e)| (l, d * e)),
        &total,
    ))
}

/// `E(LIS)` over uniform words in `W_{n,q}`.
pub fn expected_lis_exact(n: usize, q: u32, guard: &ExactGuard) -> Result<BigRational> {
    Ok(exact_plancherel_hecke(n, q, guard)?.expectation(YoungDiagram::first_row))
}

/// `Prob(LIS = l)` over uniform words in `W_{n,q}`.
pub fn prob_lis_exact(n: usize, q: u32, l: usize, guard: &ExactGuard) -> Result<BigRational> {
    let dist = exact_plancherel_hecke(n, q, guard)?;
    Ok(dist
        .entries()
        .iter()
        .filter(|(s, _)| s.first_row() == l)
        .map(|(_, p)| p.clone())
        .sum())
}

fn require_size(shape: &YoungDiagram, n: usize) -> Result<()> {
    if shape.size() != n {
        return Err(Error::SizeMismatch {
            shape: shape.parts().to_vec(),
            size: shape.size(),
            expected: n,
        });
    }
    Ok(())
}

/// `ν_{n,q}(λ) = f^λ g^λ(q) / q^n`.
pub fn plancherel_rsk_prob(shape: &YoungDiagram, n: usize, q: u32) -> Result<BigRational> {
    require_size(shape, n)?;
    if q == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let num = count_standard(shape) * count_semistandard(shape, q)?;
    Ok(BigRational::new(
        BigInt::from(num),
        BigInt::from(BigUint::from(q).pow(n as u32)),
    ))
}

/// `(f^λ)^2 / n!`.
pub fn plancherel_prob(shape: &YoungDiagram, n: usize) -> Result<BigRational> {
    require_size(shape, n)?;
    let f = BigInt::from(count_standard(shape));
    let fact = (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
    Ok(BigRational::new(&f * &f, fact))
}

/// `ν_{n,q}` as a distribution over all partitions of `n`.
pub fn exact_plancherel_rsk(n: usize, q: u32, guard: &ExactGuard) -> Result<ExactDistribution> {
    guard.check(n, q)?;
    if q == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let total = BigUint::from(q).pow(n as u32);
    let weights = partitions(n)
        .into_iter()
        .map(|l| {
            let w = count_standard(&l) * count_semistandard(&l, q)?;
            Ok((l, w))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactDistribution::from_weights(n, q, weights, &total))
}

/// Exact tally of `stat(w)` over all of `W_{n,q}`.
pub fn pushforward(n: usize, q: u32, stat: impl Fn(&Word) -> YoungDiagram) -> ExactDistribution {
    let mut counts: BTreeMap<YoungDiagram, BigUint> = BTreeMap::new();
    for w in all_words(n, q) {
        *counts.entry(stat(&w)).or_default() += 1u32;
    }
    let total = BigUint::from(q).pow(n as u32);
    ExactDistribution::from_weights(n, q, counts, &total)
}

/// Distribution of `Heckeshape(w)` for uniform `w`, by enumeration.
pub fn hecke_pushforward(n: usize, q: u32) -> ExactDistribution {
    pushforward(n, q, heckeshape)
}

/// Distribution of the RSK shape of uniform `w`, by enumeration.
pub fn rsk_pushforward(n: usize, q: u32) -> ExactDistribution {
    pushforward(n, q, rsk_shape)
}

/// `Prob(λ → μ) = g_μ(q) / (q g_λ(q))` for a covering pair.
pub fn markov_transition(from: &YoungDiagram, to: &YoungDiagram, q: u32) -> Result<BigRational> {
    if !from.is_covered_by(to) {
        return Err(Error::NotCovering {
            from: from.parts().to_vec(),
            to: to.parts().to_vec(),
        });
    }
    let g_from = count_semistandard(from, q)?;
    if g_from.is_zero() {
        return Err(Error::BadParameter(format!(
            "{from} has no semistandard fillings with entries at most {q}"
        )));
    }
    let g_to = count_semistandard(to, q)?;
    Ok(BigRational::new(
        BigInt::from(g_to),
        BigInt::from(g_from * BigUint::from(q)),
    ))
}

/// `Prob(λ → λ + u)` in floating point, via the hook and content changes
/// caused by adding `u`.
fn transition_weight(shape: &YoungDiagram, u: Cell, q: u32) -> f64 {
    let content_factor = q as f64 + u.content() as f64;
    if content_factor <= 0.0 {
        return 0.0;
    }
    let mut ratio = content_factor / q as f64;
    for c in 1..u.col {
        let h = shape.hook_length(Cell::new(u.row, c)) as f64;
        ratio *= h / (h + 1.0);
    }
    for r in 1..u.row {
        let h = shape.hook_length(Cell::new(r, u.col)) as f64;
        ratio *= h / (h + 1.0);
    }
    ratio
}

/// Runs the growth chain `n` steps from the empty shape; entry `i` of the
/// result is the shape after `i + 1` steps.
pub fn markov_sample_path<R: Rng + ?Sized>(n: usize, q: u32, rng: &mut R) -> Vec<YoungDiagram> {
    let mut shape = YoungDiagram::empty();
    let mut path = Vec::with_capacity(n);
    let mut weights = Vec::new();
    for _ in 0..n {
        let cells = shape.addable_cells();
        weights.clear();
        weights.extend(cells.iter().map(|&u| transition_weight(&shape, u, q)));
        let total: f64 = weights.iter().sum();
        let mut x = rng.gen::<f64>() * total;
        let mut chosen = cells.len() - 1;
        for (k, w) in weights.iter().enumerate() {
            if x < *w {
                chosen = k;
                break;
            }
            x -= w;
        }
        // Rounding can leave `chosen` on a zero-weight cell at the end.
        while weights[chosen] == 0.0 {
            chosen -= 1;
        }
        shape = shape.with_cell_added(cells[chosen]).expect("addable cell");
        path.push(shape.clone());
    }
    path
}

/// Mean first-column length after `i` steps of the growth chain.
pub fn gamma_estimate(i: usize, q: u32, trials: u64, seed: u64) -> f64 {
    let total: u64 = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            markov_sample_path(i, q, &mut rng)
                .last()
                .map_or(0, YoungDiagram::first_column) as u64
        })
        .sum();
    total as f64 / trials as f64
}

/// One Monte Carlo draw from `μ_{n,q}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub trial: u64,
    pub seed: u64,
    pub shape: YoungDiagram,
    pub lis: usize,
    pub lds: usize,
}

/// Shape of Hecke insertion of a uniform random word, drawn from the
/// stream `(seed, trial)`.
pub fn sample_plancherel_hecke(n: usize, q: u32, seed: u64, trial: u64) -> Result<SampleRecord> {
    let mut rng = trial_rng(seed, trial);
    let w = Word::random(n, q, &mut rng)?;
    let shape = heckeshape(&w);
    Ok(SampleRecord {
        trial,
        seed,
        lis: shape.first_row(),
        lds: shape.first_column(),
        shape,
    })
}

/// Trials `0..trials`, in trial order.
pub fn sample_batch(n: usize, q: u32, trials: u64, seed: u64) -> Result<Vec<SampleRecord>> {
    (0..trials)
        .into_par_iter()
        .map(|t| sample_plancherel_hecke(n, q, seed, t))
        .collect()
}

/// Converts an exact probability to `f64`.
pub fn to_f64(p: &BigRational) -> f64 {
    p.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::lis;

    fn d(parts: &[usize]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn r(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    const G: ExactGuard = ExactGuard {
        max_n: 10,
        max_q: 5,
    };

    #[test]
    fn small_distribution() {
        let dist = exact_plancherel_hecke(4, 3, &G).unwrap();
        assert_eq!(dist.entries().len(), 9);
        assert_eq!(dist.prob(&d(&[2, 1])), r(40, 81));
        assert_eq!(dist.total(), r(1, 1));
        let one = exact_plancherel_hecke(1, 1, &G).unwrap();
        assert_eq!(one.entries(), &[(d(&[1]), r(1, 1))]);
        let empty = exact_plancherel_hecke(0, 2, &G).unwrap();
        assert_eq!(empty.entries(), &[(YoungDiagram::empty(), r(1, 1))]);
    }

    #[test]
    fn expectations() {
        assert_eq!(expected_lis_exact(4, 3, &G).unwrap(), r(156, 81));
        assert_eq!(prob_lis_exact(4, 3, 3, &G).unwrap(), r(9, 81));
        for n in 1..6 {
            assert_eq!(expected_lis_exact(n, 1, &G).unwrap(), r(1, 1));
        }
        let brute: usize = all_words(4, 3).map(|w| lis(&w)).sum();
        assert_eq!(brute, 156);
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            exact_plancherel_hecke(11, 2, &G),
            Err(Error::GuardExceeded(_))
        ));
        assert!(matches!(
            exact_plancherel_hecke(3, 6, &G),
            Err(Error::GuardExceeded(_))
        ));
        let wide = ExactGuard {
            max_n: 12,
            max_q: 6,
        };
        assert!(exact_plancherel_hecke(11, 2, &wide).is_ok());
    }

    #[test]
    fn pushforwards_match() {
        assert_eq!(
            hecke_pushforward(3, 2),
            exact_plancherel_hecke(3, 2, &G).unwrap()
        );
        assert_eq!(
            rsk_pushforward(3, 2),
            exact_plancherel_rsk(3, 2, &G).unwrap()
        );
    }

    #[test]
    fn hecke_measure_is_conjugation_symmetric() {
        for q in 1..=4 {
            for n in 0..=7 {
                let dist = exact_plancherel_hecke(n, q, &G).unwrap();
                for (s, p) in dist.entries() {
                    assert_eq!(&dist.prob(&s.conjugate()), p, "{s} n={n} q={q}");
                }
            }
        }
    }

    #[test]
    fn rsk_and_plancherel_formulas() {
        assert_eq!(plancherel_prob(&d(&[1]), 1).unwrap(), r(1, 1));
        assert!(plancherel_prob(&d(&[2]), 1).is_err());
        for n in 0..=7 {
            for q in 1..=4 {
                let total: BigRational = partitions(n)
                    .iter()
                    .map(|l| plancherel_rsk_prob(l, n, q).unwrap())
                    .sum();
                assert_eq!(total, r(1, 1));
            }
            let total: BigRational = partitions(n)
                .iter()
                .map(|l| plancherel_prob(l, n).unwrap())
                .sum();
            assert_eq!(total, r(1, 1));
        }
    }

    #[test]
    fn transitions() {
        assert_eq!(
            markov_transition(&YoungDiagram::empty(), &d(&[1]), 3).unwrap(),
            r(1, 1)
        );
        assert!(matches!(
            markov_transition(&d(&[1]), &d(&[3]), 3),
            Err(Error::NotCovering { .. })
        ));
        let l = d(&[2, 1]);
        for u in l.addable_cells() {
            let m = l.with_cell_added(u).unwrap();
            let exact = to_f64(&markov_transition(&l, &m, 3).unwrap());
            assert!((transition_weight(&l, u, 3) - exact).abs() < 1e-12);
        }
    }

    #[test]
    fn chain_paths_grow_by_one_box() {
        let mut rng = trial_rng(1, 0);
        let path = markov_sample_path(30, 3, &mut rng);
        assert_eq!(path[0], d(&[1]));
        for pair in path.windows(2) {
            assert!(pair[0].is_covered_by(&pair[1]));
            assert!(pair[1].num_rows() <= 3);
        }
    }

    #[test]
    fn serialized_records() {
        let dist = exact_plancherel_hecke(2, 2, &G).unwrap();
        let json = serde_json::to_string(&dist.to_records()).unwrap();
        assert_eq!(
            json,
            r#"[{"shape":[1],"num":"1","den":"2"},{"shape":[1,1],"num":"1","den":"4"},{"shape":[2],"num":"1","den":"4"}]"#
        );
    }

    #[test]
    fn samples_are_reproducible() {
        let a = sample_batch(20, 4, 16, 9).unwrap();
        let b = sample_batch(20, 4, 16, 9).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[3].trial, 3);
        for s in &a {
            assert_eq!(s.lis, s.shape.first_row());
            assert_eq!(s.lds, s.shape.first_column());
        }
        assert!(sample_plancherel_hecke(0, 3, 1, 0)
            .unwrap()
            .shape
            .is_empty());
    }
}
