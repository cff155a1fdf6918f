//! CSV and JSON writers for run artifacts.
//!
//! CSV files start with `# key: value` comment lines describing the run,
//! followed by a header row. Floating values are written with six decimal
//! places so that output is byte-stable.

use std::io::{self, Write};

use serde::Serialize;

use crate::asymptotics::{CurvePoint, SweepMode, SweepResult};
use crate::measures::{ExactDistribution, ProbabilityRecord, SampleRecord};
use crate::patience::DeckStats;

/// Ordered `key: value` pairs written as CSV comments.
pub type Metadata = Vec<(String, String)>;

pub fn fixed(x: f64) -> String {
    format!("{x:.6}")
}

fn write_csv<W: Write>(
    out: W,
    meta: &Metadata,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> io::Result<()> {
    let mut out = out;
    for (k, v) in meta {
        writeln!(out, "# {k}: {v}")?;
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()
}

/// Columns `n,q,alpha_or_k,trials,mean_lis,mean_lds,sigma_lis,sigma_lds,staircase_fraction`.
pub fn write_sweep_csv<W: Write>(out: W, meta: &Metadata, rows: &[SweepResult]) -> io::Result<()> {
    write_csv(
        out,
        meta,
        &[
            "n",
            "q",
            "alpha_or_k",
            "trials",
            "mean_lis",
            "mean_lds",
            "sigma_lis",
            "sigma_lds",
            "staircase_fraction",
        ],
        rows.iter().map(|r| {
            vec![
                r.config.n.to_string(),
                r.q.to_string(),
                fixed(r.config.mode.value()),
                r.trials().to_string(),
                fixed(r.mean_lis()),
                fixed(r.mean_lds()),
                fixed(r.sigma_lis()),
                fixed(r.sigma_lds()),
                fixed(r.staircase_fraction()),
            ]
        }),
    )
}

/// Human-readable name of a sweep mode, for metadata.
pub fn mode_name(mode: &SweepMode) -> &'static str {
    match mode {
        SweepMode::Alpha(_) => "alpha",
        SweepMode::K(_) => "k",
    }
}

/// Columns `x,f_hat,plancherel_curve,line`.
pub fn write_curve_csv<W: Write>(out: W, meta: &Metadata, points: &[CurvePoint]) -> io::Result<()> {
    write_csv(
        out,
        meta,
        &["x", "f_hat", "plancherel_curve", "line"],
        points.iter().map(|p| {
            vec![
                fixed(p.x),
                fixed(p.f_hat),
                fixed(p.plancherel_curve),
                fixed(p.line),
            ]
        }),
    )
}

/// Columns `trial,seed,shape,lis,lds`; shape parts are space-separated.
pub fn write_samples_csv<W: Write>(
    out: W,
    meta: &Metadata,
    samples: &[SampleRecord],
) -> io::Result<()> {
    write_csv(
        out,
        meta,
        &["trial", "seed", "shape", "lis", "lds"],
        samples.iter().map(|s| {
            let parts: Vec<String> = s.shape.parts().iter().map(usize::to_string).collect();
            vec![
                s.trial.to_string(),
                s.seed.to_string(),
                parts.join(" "),
                s.lis.to_string(),
                s.lds.to_string(),
            ]
        }),
    )
}

/// Columns `count,frequency` (number of games ending with `count` piles).
pub fn write_histogram_csv<W: Write>(out: W, meta: &Metadata, stats: &DeckStats) -> io::Result<()> {
    write_csv(
        out,
        meta,
        &["count", "frequency"],
        stats
            .histogram
            .iter()
            .enumerate()
            .filter(|(_, &f)| f > 0)
            .map(|(c, f)| vec![c.to_string(), f.to_string()]),
    )
}

/// Columns `position,mean_size`, positions counted from 1.
pub fn write_pile_sizes_csv<W: Write>(
    out: W,
    meta: &Metadata,
    stats: &DeckStats,
) -> io::Result<()> {
    write_csv(
        out,
        meta,
        &["position", "mean_size"],
        stats
            .mean_sizes()
            .into_iter()
            .enumerate()
            .map(|(p, m)| vec![(p + 1).to_string(), fixed(m)]),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

/// `{n, q, distribution: [{shape, num, den}], expected_lis: {num, den}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactReport {
    pub n: usize,
    pub q: u32,
    pub distribution: Vec<ProbabilityRecord>,
    pub expected_lis: Fraction,
}

pub fn exact_report(dist: &ExactDistribution) -> ExactReport {
    let e = dist.expectation(|s| s.first_row());
    ExactReport {
        n: dist.n(),
        q: dist.q(),
        distribution: dist.to_records(),
        expected_lis: Fraction {
            num: e.numer().to_string(),
            den: e.denom().to_string(),
        },
    }
}

/// Pretty JSON with a trailing newline.
pub fn write_json<W: Write, T: Serialize + ?Sized>(mut out: W, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}
