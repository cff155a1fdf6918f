//! Brute-force oracles shared by the integration tests. None of these call
//! into the library beyond plain data types.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// LIS by checking every subsequence. Only for short words.
pub fn lis_subsets(w: &[u32]) -> usize {
    assert!(w.len() <= 16);
    let mut best = 0;
    for mask in 0u32..(1 << w.len()) {
        let picked: Vec<u32> = (0..w.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| w[i])
            .collect();
        if picked.windows(2).all(|p| p[0] < p[1]) {
            best = best.max(picked.len());
        }
    }
    best
}

pub fn lds_subsets(w: &[u32]) -> usize {
    let flipped: Vec<u32> = w.iter().map(|&x| u32::MAX - x).collect();
    lis_subsets(&flipped)
}

/// Quadratic dynamic program for the longest strictly increasing subsequence.
pub fn lis_dp(w: &[u32]) -> usize {
    let mut best = vec![1usize; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] < w[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn lds_dp(w: &[u32]) -> usize {
    let flipped: Vec<u32> = w.iter().map(|&x| u32::MAX - x).collect();
    lis_dp(&flipped)
}

/// Every word of length `n` over `1..=q`, in lexicographic order.
pub fn words(n: usize, q: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=q).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Partitions of `n` as weakly decreasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(cap)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn cells(shape: &[usize]) -> Vec<(usize, usize)> {
    shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect()
}

/// Counts fillings with values in `1..=q`, cell by cell in reading order.
/// Rows increase strictly when `strict_rows`, weakly otherwise; columns
/// always increase strictly.
fn count_fillings(shape: &[usize], q: u32, strict_rows: bool) -> u64 {
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        grid: &mut Vec<Vec<u32>>,
        q: u32,
        strict: bool,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1] + u32::from(strict));
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let mut total = 0;
        for v in lo..=q {
            grid[r][c] = v;
            total += go(cells, k + 1, grid, q, strict);
        }
        grid[r][c] = 0;
        total
    }
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]).collect();
    go(&cells(shape), 0, &mut grid, q, strict_rows)
}

/// Increasing tableaux with entries at most `q`.
pub fn count_increasing_brute(shape: &[usize], q: u32) -> u64 {
    count_fillings(shape, q, true)
}

/// Semistandard tableaux with entries at most `q`.
pub fn count_ssyt_brute(shape: &[usize], q: u32) -> u64 {
    count_fillings(shape, q, false)
}

/// Standard Young tableaux, by growing the shape one box at a time.
pub fn count_syt_brute(shape: &[usize]) -> u64 {
    fn go(current: &mut Vec<usize>, target: &[usize]) -> u64 {
        if current.as_slice() == target {
            return 1;
        }
        let mut total = 0;
        for r in 0..target.len() {
            let fits = current[r] < target[r] && (r == 0 || current[r - 1] > current[r]);
            if fits {
                current[r] += 1;
                total += go(current, target);
                current[r] -= 1;
            }
        }
        total
    }
    go(&mut vec![0; shape.len()], shape)
}

/// Standard set-valued tableaux of `shape` on `1..=n`: labels are placed in
/// increasing order, and every complete assignment is checked against the
/// definition directly.
pub fn count_set_valued_brute(shape: &[usize], n: usize) -> u64 {
    fn valid(shape: &[usize], grid: &[Vec<Vec<usize>>]) -> bool {
        for (r, &len) in shape.iter().enumerate() {
            for c in 0..len {
                let here = &grid[r][c];
                if here.is_empty() {
                    return false;
                }
                let max = *here.iter().max().unwrap();
                if c + 1 < len && grid[r][c + 1].iter().min().is_some_and(|&m| m <= max) {
                    return false;
                }
                if r + 1 < shape.len()
                    && c < shape[r + 1]
                    && grid[r + 1][c].iter().min().is_some_and(|&m| m <= max)
                {
                    return false;
                }
            }
        }
        true
    }
    fn go(
        shape: &[usize],
        cells: &[(usize, usize)],
        label: usize,
        n: usize,
        grid: &mut Vec<Vec<Vec<usize>>>,
    ) -> u64 {
        if label > n {
            return u64::from(valid(shape, grid));
        }
        let mut total = 0;
        for &(r, c) in cells {
            // A later label can never sit left of or above an earlier one.
            let right_used = c + 1 < shape[r] && !grid[r][c + 1].is_empty();
            let below_used = r + 1 < shape.len() && c < shape[r + 1] && !grid[r + 1][c].is_empty();
            if right_used || below_used {
                continue;
            }
            grid[r][c].push(label);
            total += go(shape, cells, label + 1, n, grid);
            grid[r][c].pop();
        }
        total
    }
    let mut grid: Vec<Vec<Vec<usize>>> = shape.iter().map(|&l| vec![Vec::new(); l]).collect();
    go(shape, &cells(shape), 1, n, &mut grid)
}

/// Number of inversions of the permutation obtained from the Demazure
/// product, computed by bubble sorting a one-line array with `s_i` acting
/// only on ascents.
pub fn demazure_length(w: &[u32], q: u32) -> usize {
    let mut perm: Vec<u32> = (1..=q + 1).collect();
    for &i in w {
        let i = i as usize;
        if perm[i - 1] < perm[i] {
            perm.swap(i - 1, i);
        }
    }
    let mut inv = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inv += 1;
            }
        }
    }
    inv
}

/// Tally of a statistic over all words, keyed by its value.
pub fn tally<K: Ord>(words: &[Vec<u32>], f: impl Fn(&[u32]) -> K) -> BTreeMap<K, u64> {
    let mut out = BTreeMap::new();
    for w in words {
        *out.entry(f(w)).or_insert(0) += 1;
    }
    out
}
