//! Large-`n` behaviour of the Plancherel-Hecke measure: Monte Carlo sweeps
//! over `q = round(n^alpha)` or `q = round(k sqrt n)`, rescaled shape
//! functions, the two reference curves, and the staircase test.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{staircase, YoungDiagram};
use crate::error::{Error, Result};
use crate::insertion::heckeshape;
use crate::permutation::{coxeter_length, hecke_product, longest_element};
use crate::rng::trial_rng;
use crate::word::{lds, lis, Word};

/// How `q` grows with `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "value", rename_all = "lowercase")]
pub enum SweepMode {
    /// `q = round(n^alpha)`.
    Alpha(f64),
    /// `q = round(k sqrt(n))`.
    K(f64),
}

impl SweepMode {
    pub fn value(&self) -> f64 {
        match *self {
            SweepMode::Alpha(v) | SweepMode::K(v) => v,
        }
    }

    pub fn alphabet_size(&self, n: usize) -> Result<u32> {
        let raw = match *self {
            SweepMode::Alpha(a) => {
                if !(0.0..=1.0).contains(&a) {
                    return Err(Error::BadParameter(format!(
                        "alpha = {a} must lie in [0, 1]"
                    )));
                }
                (n as f64).powf(a)
            }
            SweepMode::K(k) => {
                if k.is_nan() || k <= 0.0 {
                    return Err(Error::BadParameter(format!("k = {k} must be positive")));
                }
                k * (n as f64).sqrt()
            }
        };
        let q = raw.round();
        if q < 1.0 {
            return Err(Error::BadParameter(format!(
                "q rounds to {q} for n = {n}; need q >= 1"
            )));
        }
        Ok(q as u32)
    }

    /// `k` mode sits at `alpha = 1/2`.
    pub fn regime(&self) -> Regime {
        match *self {
            SweepMode::Alpha(a) => Regime::from_alpha(a),
            SweepMode::K(_) => Regime::Sqrt,
        }
    }
}

/// Which axis scaling the rescaled shape uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// Divide both axes by `2 sqrt(n)` (`alpha >= 1/2`).
    Sqrt,
    /// Divide both axes by `q` (`alpha < 1/2`).
    Staircase,
}

impl Regime {
    pub fn from_alpha(alpha: f64) -> Self {
        if alpha >= 0.5 {
            Regime::Sqrt
        } else {
            Regime::Staircase
        }
    }

    /// Regime for an explicit `(n, q)`, reading off `alpha = log q / log n`.
    pub fn infer(n: usize, q: u32) -> Self {
        if (q as f64).powi(2) >= n as f64 {
            Regime::Sqrt
        } else {
            Regime::Staircase
        }
    }
}

/// A diagram as a function on `[0, inf)`: the step form gives the height of
/// the column over `x`, the linear form interpolates through the outer
/// corners `(lambda_i, i)`. Both are rescaled by `scale`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapeFunction {
    parts: Vec<usize>,
    scale: f64,
    knots: Vec<(f64, f64)>,
}

impl ShapeFunction {
    pub fn new(shape: &YoungDiagram, scale: f64) -> Self {
        let parts = shape.parts().to_vec();
        let mut knots = Vec::new();
        if let Some(&rows) = Some(&parts.len()).filter(|&&r| r > 0) {
            knots.push((0.0, rows as f64 / scale));
            for i in (0..rows).rev() {
                if i + 1 == rows || parts[i] > parts[i + 1] {
                    knots.push((parts[i] as f64 / scale, (i + 1) as f64 / scale));
                }
            }
        }
        ShapeFunction {
            parts,
            scale,
            knots,
        }
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Rescaled end of the support, `lambda_1 / scale`.
    pub fn support_end(&self) -> f64 {
        self.parts.first().map_or(0.0, |&p| p as f64 / self.scale)
    }

    /// `(x, y)` interpolation knots, left to right.
    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    /// Rescaled column height over `x`.
    pub fn step(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        let col = (x * self.scale).ceil().max(1.0) as usize;
        self.parts.iter().take_while(|&&p| p >= col).count() as f64 / self.scale
    }

    /// Piecewise-linear interpolation; 0 beyond the support.
    pub fn linear(&self, x: f64) -> f64 {
        if x < 0.0 || x > self.support_end() || self.knots.is_empty() {
            return 0.0;
        }
        let k = self.knots.partition_point(|&(kx, _)| kx < x);
        if k == 0 {
            return self.knots[0].1;
        }
        let (x1, y1) = self.knots[k - 1];
        let (x2, y2) = self.knots[k.min(self.knots.len() - 1)];
        if x2 <= x1 {
            return y2;
        }
        y1 + (y2 - y1) * (x - x1) / (x2 - x1)
    }
}

/// `f_hat` for `shape` under `regime`.
pub fn rescale(shape: &YoungDiagram, n: usize, q: u32, regime: Regime) -> ShapeFunction {
    let scale = match regime {
        Regime::Sqrt => 2.0 * (n as f64).sqrt(),
        Regime::Staircase => q as f64,
    };
    ShapeFunction::new(shape, scale.max(f64::MIN_POSITIVE))
}

/// The limit shape `x = y + cos(theta)`,
/// `y = (sin(theta) - theta cos(theta)) / pi`, `0 <= theta <= pi`, as a
/// function of `x`; 0 for `x >= 1`.
pub fn plancherel_curve(x: f64) -> f64 {
    if x >= 1.0 {
        return 0.0;
    }
    let x = x.max(0.0);
    let y_of = |t: f64| (t.sin() - t * t.cos()) / PI;
    // x(theta) decreases from 1 at theta = 0 to 0 at theta = pi.
    let (mut lo, mut hi) = (0.0, PI);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if y_of(mid) + mid.cos() > x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    y_of(0.5 * (lo + hi))
}

/// `y = 1 - x` on `[0, 1]`, 0 afterwards.
pub fn line(x: f64) -> f64 {
    (1.0 - x).max(0.0)
}

/// Points used by [`sup_norm_distance`]: a uniform grid of `10^4` points on
/// `[0, max(support, 1)]` and both sides of every knot.
fn sample_points(f: &ShapeFunction) -> Vec<f64> {
    const GRID: usize = 10_000;
    let end = f.support_end().max(1.0);
    let mut xs: Vec<f64> = (0..GRID)
        .map(|i| end * i as f64 / (GRID - 1) as f64)
        .collect();
    for &(x, _) in f.knots() {
        xs.push(x);
        xs.push(x + 1e-12);
    }
    xs
}

/// `sup |f_hat - g|`, sampled.
pub fn sup_norm_distance(f: &ShapeFunction, g: impl Fn(f64) -> f64) -> f64 {
    sample_points(f)
        .into_iter()
        .map(|x| (f.linear(x) - g(x)).abs())
        .fold(0.0, f64::max)
}

/// `E(LIS) ~ beta(k) 2 sqrt(n)` when `q ~ k sqrt(n)`.
pub fn beta(k: f64) -> Result<f64> {
    if k.is_nan() || k <= 0.0 {
        return Err(Error::BadParameter(format!("beta(k) needs k > 0, got {k}")));
    }
    Ok(if k <= 1.0 {
        k / 2.0
    } else {
        (2.0 - 1.0 / k) / 2.0
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: usize,
    pub mode: SweepMode,
    pub trials: u64,
    pub seed: u64,
    /// How many sampled shapes (the first trials) to keep.
    pub keep_shapes: usize,
}

/// Aggregates of one sweep row, accumulated in integers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub config: SweepConfig,
    pub q: u32,
    pub lis_sum: u64,
    pub lis_sq_sum: u128,
    pub lds_sum: u64,
    pub lds_sq_sum: u128,
    pub lis_min: usize,
    pub lis_max: usize,
    pub staircase_hits: u64,
    pub shapes: Vec<YoungDiagram>,
}

fn mean(sum: u64, trials: u64) -> f64 {
    if trials == 0 {
        return 0.0;
    }
    sum as f64 / trials as f64
}

/// Unbiased sample standard deviation from integer moments; 0 for fewer
/// than two trials.
fn sigma(sum: u64, sq_sum: u128, trials: u64) -> f64 {
    if trials < 2 {
        return 0.0;
    }
    let t = trials as u128;
    let s = sum as u128;
    let numerator = t * sq_sum - s * s;
    (numerator as f64 / (t * (t - 1)) as f64).sqrt()
}

impl SweepResult {
    pub fn trials(&self) -> u64 {
        self.config.trials
    }

    pub fn mean_lis(&self) -> f64 {
        mean(self.lis_sum, self.trials())
    }

    pub fn mean_lds(&self) -> f64 {
        mean(self.lds_sum, self.trials())
    }

    pub fn sigma_lis(&self) -> f64 {
        sigma(self.lis_sum, self.lis_sq_sum, self.trials())
    }

    pub fn sigma_lds(&self) -> f64 {
        sigma(self.lds_sum, self.lds_sq_sum, self.trials())
    }

    pub fn staircase_fraction(&self) -> f64 {
        mean(self.staircase_hits, self.trials())
    }

    /// `E(LIS) / (2 sqrt(n))`.
    pub fn scaled_mean_lis(&self) -> f64 {
        self.mean_lis() / (2.0 * (self.config.n as f64).sqrt())
    }
}

/// Runs `config.trials` independent samples. Trial `t` draws its word from
/// stream `(seed, t)`, so the result does not depend on scheduling.
pub fn sweep(config: &SweepConfig) -> Result<SweepResult> {
    let q = config.mode.alphabet_size(config.n)?;
    let target = staircase(q as usize);
    let shapes: Vec<YoungDiagram> = (0..config.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(config.seed, t);
            let w = Word::random(config.n, q, &mut rng).expect("q >= 1");
            heckeshape(&w)
        })
        .collect();
    let mut result = SweepResult {
        config: config.clone(),
        q,
        lis_sum: 0,
        lis_sq_sum: 0,
        lds_sum: 0,
        lds_sq_sum: 0,
        lis_min: usize::MAX,
        lis_max: 0,
        staircase_hits: 0,
        shapes: Vec::new(),
    };
    for (t, shape) in shapes.into_iter().enumerate() {
        let (a, b) = (shape.first_row() as u64, shape.first_column() as u64);
        result.lis_sum += a;
        result.lis_sq_sum += (a * a) as u128;
        result.lds_sum += b;
        result.lds_sq_sum += (b * b) as u128;
        result.lis_min = result.lis_min.min(a as usize);
        result.lis_max = result.lis_max.max(a as usize);
        result.staircase_hits += u64::from(shape == target);
        if t < config.keep_shapes {
            result.shapes.push(shape);
        }
    }
    if config.trials == 0 {
        result.lis_min = 0;
    }
    Ok(result)
}

/// `|(a x b) ∩ staircase(q)| = sum_{i=1}^{a} min(b, q + 1 - i)`, the largest
/// Hecke shape with `LIS <= a` and `LDS <= b`.
pub fn erdos_szekeres_bound(a: u32, b: u32, q: u32) -> Result<u64> {
    if a < 1 || b < 1 || a >= q || b >= q {
        return Err(Error::BadParameter(format!(
            "need 1 <= a, b < q, got a = {a}, b = {b}, q = {q}"
        )));
    }
    Ok((1..=a).map(|i| u64::from(b.min(q + 1 - i))).sum())
}

/// Checks that `l(W(w)) > bound` forces `LIS(w) > a` or `LDS(w) > b`.
pub fn check_es(w: &Word, a: u32, b: u32) -> Result<bool> {
    let bound = erdos_szekeres_bound(a, b, w.alphabet_size())?;
    let length = coxeter_length(&hecke_product(w)) as u64;
    Ok(length <= bound || lis(w) > a as usize || lds(w) > b as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseReport {
    pub n: usize,
    pub q: u32,
    pub trials: u64,
    /// Samples whose shape is the full staircase.
    pub shape_hits: u64,
    /// Samples whose Demazure product is the longest element.
    pub permutation_hits: u64,
    /// Samples where the two tests disagree.
    pub disagreements: u64,
}

impl StaircaseReport {
    pub fn fraction(&self) -> f64 {
        mean(self.shape_hits, self.trials)
    }
}

/// Counts staircase shapes, cross-checked per sample against `W(w) = w_0`.
pub fn staircase_check(n: usize, q: u32, trials: u64, seed: u64) -> Result<StaircaseReport> {
    let target = staircase(q as usize);
    let w0 = longest_element(q)?;
    let outcomes: Vec<(bool, bool)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let w = Word::random(n, q, &mut rng).expect("q >= 1");
            (heckeshape(&w) == target, hecke_product(&w) == w0)
        })
        .collect();
    let count = |f: &dyn Fn(&(bool, bool)) -> bool| outcomes.iter().filter(|o| f(o)).count() as u64;
    Ok(StaircaseReport {
        n,
        q,
        trials,
        shape_hits: count(&|o| o.0),
        permutation_hits: count(&|o| o.1),
        disagreements: count(&|o| o.0 != o.1),
    })
}

/// One row of a curve comparison table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub x: f64,
    pub f_hat: f64,
    pub plancherel_curve: f64,
    pub line: f64,
}

/// Sampled shapes at one `(n, q)`, rescaled, with their distances to both
/// reference curves.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveProbe {
    pub n: usize,
    pub q: u32,
    pub regime: Regime,
    pub trials: u64,
    pub seed: u64,
    pub mean_distance_to_curve: f64,
    pub max_distance_to_curve: f64,
    pub mean_distance_to_line: f64,
    pub max_distance_to_line: f64,
    /// Mean of the rescaled profiles on a uniform grid.
    pub table: Vec<CurvePoint>,
}

/// Samples `trials` shapes from stream `(seed, t)` and compares their
/// rescaled profiles with the limit curve and the line. The table has
/// `points` rows spread over `[0, max(1, largest support)]`.
pub fn curve_probe(n: usize, q: u32, trials: u64, seed: u64, points: usize) -> Result<CurveProbe> {
    if q == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let regime = Regime::infer(n, q);
    let profiles: Vec<ShapeFunction> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let w = Word::random(n, q, &mut rng).expect("q >= 1");
            rescale(&heckeshape(&w), n, q, regime)
        })
        .collect();
    let to_curve: Vec<f64> = profiles
        .iter()
        .map(|f| sup_norm_distance(f, plancherel_curve))
        .collect();
    let to_line: Vec<f64> = profiles
        .iter()
        .map(|f| sup_norm_distance(f, line))
        .collect();
    let avg = |v: &[f64]| {
        if v.is_empty() {
            0.0
        } else {
            v.iter().sum::<f64>() / v.len() as f64
        }
    };
    let max = |v: &[f64]| v.iter().copied().fold(0.0, f64::max);
    let x_max = profiles
        .iter()
        .map(ShapeFunction::support_end)
        .fold(1.0, f64::max);
    let points = points.max(2);
    let table = (0..points)
        .map(|i| {
            let x = x_max * i as f64 / (points - 1) as f64;
            let total: f64 = profiles.iter().map(|f| f.linear(x)).sum();
            CurvePoint {
                x,
                f_hat: if profiles.is_empty() {
                    0.0
                } else {
                    total / profiles.len() as f64
                },
                plancherel_curve: plancherel_curve(x),
                line: line(x),
            }
        })
        .collect();
    Ok(CurveProbe {
        n,
        q,
        regime,
        trials,
        seed,
        mean_distance_to_curve: avg(&to_curve),
        max_distance_to_curve: max(&to_curve),
        mean_distance_to_line: avg(&to_line),
        max_distance_to_line: max(&to_line),
        table,
    })
}
