//! Exact tableau counts.
//!
//! * `d^λ(q)`: increasing tableaux of shape λ with entries at most `q`
//! * `e^λ(n)`: standard set-valued tableaux of shape λ on `{1..n}`
//! * `f^λ`: standard Young tableaux (hook-length formula)
//! * `g^λ(q)`: semistandard tableaux with entries at most `q` (hook-content formula)
//!
//! Everything is computed in arbitrary precision.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};

/// `d^λ(q)`, by a row-by-row transfer count memoized on the previous row.
pub fn count_increasing(shape: &YoungDiagram, q: u32) -> BigUint {
    let parts = shape.parts();
    if parts.is_empty() {
        return BigUint::one();
    }
    // Longest strictly increasing chain starting at each box, moving right/down.
    let rows = parts.len();
    let mut chain: Vec<Vec<u32>> = parts.iter().map(|&len| vec![0; len]).collect();
    for r in (0..rows).rev() {
        for c in (0..parts[r]).rev() {
            let right = if c + 1 < parts[r] {
                chain[r][c + 1] + 1
            } else {
                0
            };
            let down = if r + 1 < rows && c < parts[r + 1] {
                chain[r + 1][c] + 1
            } else {
                0
            };
            chain[r][c] = right.max(down);
        }
    }
    if chain[0][0] >= q {
        return BigUint::zero();
    }
    let mut counter = IncreasingCounter {
        parts,
        chain: &chain,
        q,
        memo: HashMap::new(),
    };
    counter.count_from(0, &[])
}

struct IncreasingCounter<'a> {
    parts: &'a [usize],
    chain: &'a [Vec<u32>],
    q: u32,
    memo: HashMap<(usize, Vec<u32>), BigUint>,
}

impl IncreasingCounter<'_> {
    fn count_from(&mut self, row: usize, above: &[u32]) -> BigUint {
        if row == self.parts.len() {
            return BigUint::one();
        }
        let key = (row, above.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut current = Vec::with_capacity(self.parts[row]);
        self.fill_row(row, above, &mut current, &mut total);
        self.memo.insert(key, total.clone());
        total
    }

    fn fill_row(&mut self, row: usize, above: &[u32], current: &mut Vec<u32>, total: &mut BigUint) {
        let c = current.len();
        if c == self.parts[row] {
            let finished = current.clone();
            *total += self.count_from(row + 1, &finished);
            return;
        }
        let left = current.last().copied().unwrap_or(0);
        let up = above.get(c).copied().unwrap_or(0);
        let lo = left.max(up) + 1;
        let hi = self.q - self.chain[row][c];
        for v in lo..=hi {
            current.push(v);
            self.fill_row(row, above, current, total);
            current.pop();
        }
    }
}

/// `e^λ(n)`, by peeling off the largest label: it either shares a corner box
/// with smaller labels or sits alone in a corner.
pub fn count_set_valued_standard(shape: &YoungDiagram, n: usize) -> BigUint {
    let mut memo = HashMap::new();
    set_valued_rec(shape, n, &mut memo)
}

fn set_valued_rec(
    shape: &YoungDiagram,
    n: usize,
    memo: &mut HashMap<(YoungDiagram, usize), BigUint>,
) -> BigUint {
    if shape.is_empty() {
        return if n == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if shape.size() > n {
        return BigUint::zero();
    }
    let key = (shape.clone(), n);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let corners = shape.corners();
    let mut total = BigUint::from(corners.len()) * set_valued_rec(shape, n - 1, memo);
    for c in corners {
        let smaller = shape.with_cell_removed(c).expect("corner is removable");
        total += set_valued_rec(&smaller, n - 1, memo);
    }
    memo.insert(key, total.clone());
    total
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `f^λ = n! / Π H(u)`.
pub fn count_standard(shape: &YoungDiagram) -> BigUint {
    let hooks = shape.cells().fold(BigUint::one(), |acc, u| {
        acc * BigUint::from(shape.hook_length(u))
    });
    factorial(shape.size()) / hooks
}

/// `g^λ(q) = Π (q + C(u)) / H(u)`, evaluated in exact rationals.
pub fn count_semistandard(shape: &YoungDiagram, q: u32) -> Result<BigUint> {
    let mut product = BigRational::one();
    for u in shape.cells() {
        let num = BigInt::from(q) + BigInt::from(u.content());
        if !num.is_positive() {
            return Ok(BigUint::zero());
        }
        product *= BigRational::new(num, BigInt::from(shape.hook_length(u)));
    }
    if !product.is_integer() {
        return Err(Error::NonIntegral(shape.parts().to_vec()));
    }
    Ok(product
        .to_integer()
        .to_biguint()
        .expect("product of positive factors"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{partitions, staircase, subdiagrams};

    fn d(parts: &[usize]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn increasing_counts() {
        assert_eq!(count_increasing(&d(&[2, 1]), 3), big(5));
        assert_eq!(count_increasing(&d(&[4, 2, 1]), 7), big(1337));
        for q in 1..6 {
            assert_eq!(count_increasing(&d(&[1]), q), big(q as u64));
        }
        assert_eq!(count_increasing(&YoungDiagram::empty(), 3), big(1));
        assert_eq!(count_increasing(&staircase(4), 4), big(1));
    }

    #[test]
    fn set_valued_counts() {
        assert_eq!(count_set_valued_standard(&d(&[2, 1]), 4), big(8));
        assert_eq!(count_set_valued_standard(&d(&[4, 2, 1]), 8), big(452));
        for n in 1..8 {
            assert_eq!(count_set_valued_standard(&d(&[1]), n), big(1));
        }
        assert_eq!(count_set_valued_standard(&YoungDiagram::empty(), 0), big(1));
        assert_eq!(count_set_valued_standard(&YoungDiagram::empty(), 2), big(0));
        assert_eq!(count_set_valued_standard(&d(&[2, 1]), 2), big(0));
    }

    #[test]
    fn hook_formulas() {
        assert_eq!(count_standard(&d(&[5])), big(1));
        assert_eq!(count_standard(&d(&[2, 1])), big(2));
        assert_eq!(count_semistandard(&d(&[2, 1]), 2).unwrap(), big(2));
        assert_eq!(count_semistandard(&d(&[1]), 7).unwrap(), big(7));
        assert_eq!(count_semistandard(&d(&[2, 2]), 3).unwrap(), big(6));
        assert_eq!(count_semistandard(&d(&[1, 1, 1]), 2).unwrap(), big(0));
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 1..=8 {
            let total: BigUint = partitions(n).iter().map(|l| count_standard(l).pow(2)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn set_valued_with_exact_size_is_standard() {
        for n in 1..=7 {
            for l in partitions(n) {
                assert_eq!(count_set_valued_standard(&l, n), count_standard(&l));
            }
        }
    }

    #[test]
    fn increasing_support_is_inside_staircase() {
        for q in 1..=4u32 {
            for n in 0..=8 {
                for l in partitions(n) {
                    let inside = l.is_contained_in(&staircase(q as usize));
                    assert_eq!(!count_increasing(&l, q).is_zero(), inside, "{l} q={q}");
                }
            }
        }
    }

    #[test]
    fn increasing_count_is_conjugation_invariant() {
        for q in 1..=5u32 {
            for l in subdiagrams(&staircase(q as usize)) {
                assert_eq!(count_increasing(&l, q), count_increasing(&l.conjugate(), q));
            }
        }
    }
}
