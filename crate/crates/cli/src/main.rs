//! `hecke`: exact distributions, sampling, sweeps, curve data and patience
//! statistics for the Plancherel-Hecke measure.
//!
//! Every artifact is reproducible from its parameters and seed. Trials draw
//! from independent per-trial random streams, so output does not depend on
//! `--threads`.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hecke_core::asymptotics::{curve_probe, sweep, SweepConfig, SweepMode};
use hecke_core::measures::{exact_plancherel_hecke, sample_batch, ExactGuard};
use hecke_core::output::{
    exact_report, fixed, mode_name, write_curve_csv, write_histogram_csv, write_json,
    write_pile_sizes_csv, write_samples_csv, write_sweep_csv, Metadata,
};
use hecke_core::patience::deck_simulation;
use hecke_core::verify::{run_suite, Level};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "hecke",
    version,
    about = "Hecke insertion and the Plancherel-Hecke measure"
)]
struct Cli {
    /// Worker threads (0 = all available cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "subcommand", rename_all = "lowercase")]
enum Command {
    /// Run the exhaustive self-checks.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyLevel::Fast)]
        level: VerifyLevel,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Plancherel-Hecke distribution and E(LIS) as JSON.
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// Largest n accepted in exact mode.
        #[arg(long, default_value_t = ExactGuard::default().max_n)]
        max_n: usize,
        /// Largest q accepted in exact mode.
        #[arg(long, default_value_t = ExactGuard::default().max_q)]
        max_q: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shapes of Hecke insertion of uniform random words, one row per trial.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long, env = "HECKE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mean and spread of LIS/LDS over a grid of alpha or k values.
    #[command(group(ArgGroup::new("grid").required(true).args(["alpha_grid", "k_grid"])))]
    Sweep {
        #[arg(long)]
        n: usize,
        /// Comma-separated exponents, q = round(n^alpha).
        #[arg(long, value_delimiter = ',')]
        alpha_grid: Vec<f64>,
        /// Comma-separated coefficients, q = round(k sqrt(n)).
        #[arg(long, value_delimiter = ',')]
        k_grid: Vec<f64>,
        #[arg(long)]
        trials: u64,
        #[arg(long, env = "HECKE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mean rescaled shape next to the limit curve and the line.
    Curve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long, env = "HECKE_SEED", default_value_t = 0)]
        seed: u64,
        /// Rows in the curve table.
        #[arg(long, default_value_t = 201)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ties-allowed patience sorting on shuffled decks.
    Patience {
        #[arg(long)]
        ranks: u32,
        #[arg(long)]
        copies: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long, env = "HECKE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum VerifyLevel {
    Fast,
    Full,
}

/// Failures that are the caller's fault: reported with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(e: hecke_core::Error) -> anyhow::Error {
    use hecke_core::Error as E;
    match e {
        E::GuardExceeded(_) | E::BadParameter(_) | E::EmptyAlphabet => {
            UsageError(e.to_string()).into()
        }
        other => other.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("error: cannot start thread pool: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Where a command writes: files under a directory (plus a manifest), or stdout.
struct Sink<'a> {
    dir: Option<&'a Path>,
    files: Vec<String>,
}

impl<'a> Sink<'a> {
    fn new(dir: Option<&'a PathBuf>) -> Result<Self> {
        if let Some(d) = dir {
            fs::create_dir_all(d).with_context(|| format!("cannot create {}", d.display()))?;
        }
        Ok(Sink {
            dir: dir.map(PathBuf::as_path),
            files: Vec::new(),
        })
    }

    /// Writes one artifact; on stdout, artifacts are separated by a blank line.
    fn emit(
        &mut self,
        name: &str,
        write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
    ) -> Result<()> {
        match self.dir {
            Some(d) => {
                let path = d.join(name);
                let mut f = BufWriter::new(
                    File::create(&path)
                        .with_context(|| format!("cannot create {}", path.display()))?,
                );
                write(&mut f)?;
                f.flush()?;
            }
            None => {
                let stdout = io::stdout();
                let mut lock = stdout.lock();
                if !self.files.is_empty() {
                    writeln!(lock)?;
                }
                write(&mut lock)?;
            }
        }
        self.files.push(name.to_string());
        Ok(())
    }

    fn finish(self, command: &Command, extra: Value) -> Result<()> {
        let Some(d) = self.dir else {
            return Ok(());
        };
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|t| t.as_secs())
            .unwrap_or(0);
        let manifest = json!({
            "command": command,
            "version": VERSION,
            "timestamp_unix": timestamp,
            "outputs": self.files,
            "summary": extra,
        });
        let path = d.join("manifest.json");
        write_json(
            File::create(&path).with_context(|| format!("cannot create {}", path.display()))?,
            &manifest,
        )?;
        Ok(())
    }
}

fn meta(pairs: &[(&str, String)]) -> Metadata {
    let mut m: Metadata = vec![("version".into(), VERSION.into())];
    m.extend(pairs.iter().map(|(k, v)| (k.to_string(), v.clone())));
    m
}

fn run(command: &Command) -> Result<bool> {
    match command {
        Command::Verify { level, out } => {
            let level = match level {
                VerifyLevel::Fast => Level::Fast,
                VerifyLevel::Full => Level::Full,
            };
            let report = run_suite(level);
            eprint!("{report}");
            let mut sink = Sink::new(out.as_ref())?;
            if out.is_some() {
                sink.emit("verify.json", |w| write_json(w, &report))?;
            }
            let passed = report.all_passed();
            sink.finish(command, json!({ "passed": passed }))?;
            Ok(passed)
        }
        Command::Exact {
            n,
            q,
            max_n,
            max_q,
            out,
        } => {
            let guard = ExactGuard {
                max_n: *max_n,
                max_q: *max_q,
            };
            let dist = exact_plancherel_hecke(*n, *q, &guard).map_err(usage)?;
            let report = exact_report(&dist);
            let mut sink = Sink::new(out.as_ref())?;
            sink.emit("exact.json", |w| write_json(w, &report))?;
            sink.finish(command, json!({ "expected_lis": report.expected_lis }))?;
            Ok(true)
        }
        Command::Sample {
            n,
            q,
            trials,
            seed,
            out,
        } => {
            let samples = sample_batch(*n, *q, *trials, *seed).map_err(usage)?;
            let m = meta(&[
                ("command", "sample".into()),
                ("n", n.to_string()),
                ("q", q.to_string()),
                ("trials", trials.to_string()),
                ("seed", seed.to_string()),
                ("rng", "ChaCha8, stream = trial index".into()),
            ]);
            let mut sink = Sink::new(out.as_ref())?;
            sink.emit("samples.csv", |w| write_samples_csv(w, &m, &samples))?;
            sink.finish(command, json!({ "trials": trials }))?;
            Ok(true)
        }
        Command::Sweep {
            n,
            alpha_grid,
            k_grid,
            trials,
            seed,
            out,
        } => {
            let modes: Vec<SweepMode> = if alpha_grid.is_empty() {
                k_grid.iter().map(|&k| SweepMode::K(k)).collect()
            } else {
                alpha_grid.iter().map(|&a| SweepMode::Alpha(a)).collect()
            };
            let mut rows = Vec::with_capacity(modes.len());
            for mode in &modes {
                let cfg = SweepConfig {
                    n: *n,
                    mode: *mode,
                    trials: *trials,
                    seed: *seed,
                    keep_shapes: 0,
                };
                rows.push(sweep(&cfg).map_err(usage)?);
            }
            let rule = match modes.first() {
                Some(SweepMode::K(_)) => "round(k * sqrt(n))",
                _ => "round(n^alpha)",
            };
            let m = meta(&[
                ("command", "sweep".into()),
                ("n", n.to_string()),
                ("grid", mode_name(&modes[0]).into()),
                ("q_rule", rule.into()),
                ("trials", trials.to_string()),
                ("seed", seed.to_string()),
                ("sigma", "unbiased sample standard deviation".into()),
                ("rng", "ChaCha8, stream = trial index".into()),
            ]);
            let mut sink = Sink::new(out.as_ref())?;
            sink.emit("sweep.csv", |w| write_sweep_csv(w, &m, &rows))?;
            let summary: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "q": r.q, "value": r.config.mode.value(), "scaled_mean_lis": fixed(r.scaled_mean_lis()) }))
                .collect();
            sink.finish(command, json!({ "rows": summary }))?;
            Ok(true)
        }
        Command::Curve {
            n,
            q,
            trials,
            seed,
            points,
            out,
        } => {
            let probe = curve_probe(*n, *q, *trials, *seed, *points).map_err(usage)?;
            let regime = format!("{:?}", probe.regime).to_lowercase();
            let m = meta(&[
                ("command", "curve".into()),
                ("n", n.to_string()),
                ("q", q.to_string()),
                ("trials", trials.to_string()),
                ("seed", seed.to_string()),
                ("regime", regime.clone()),
                (
                    "mean_distance_to_curve",
                    fixed(probe.mean_distance_to_curve),
                ),
                ("mean_distance_to_line", fixed(probe.mean_distance_to_line)),
            ]);
            let mut sink = Sink::new(out.as_ref())?;
            sink.emit("curve.csv", |w| write_curve_csv(w, &m, &probe.table))?;
            sink.finish(
                command,
                json!({
                    "regime": regime,
                    "mean_distance_to_curve": fixed(probe.mean_distance_to_curve),
                    "max_distance_to_curve": fixed(probe.max_distance_to_curve),
                    "mean_distance_to_line": fixed(probe.mean_distance_to_line),
                    "max_distance_to_line": fixed(probe.max_distance_to_line),
                }),
            )?;
            Ok(true)
        }
        Command::Patience {
            ranks,
            copies,
            trials,
            seed,
            out,
        } => {
            if *ranks == 0 || *copies == 0 || *trials == 0 {
                return Err(
                    UsageError("--ranks, --copies and --trials must be at least 1".into()).into(),
                );
            }
            let stats = deck_simulation(*ranks, *copies, *trials, *seed);
            let m = meta(&[
                ("command", "patience".into()),
                ("ranks", ranks.to_string()),
                ("copies", copies.to_string()),
                ("trials", trials.to_string()),
                ("seed", seed.to_string()),
                ("mean_piles", fixed(stats.mean_piles())),
            ]);
            eprintln!("mean piles: {}", fixed(stats.mean_piles()));
            let mut sink = Sink::new(out.as_ref())?;
            sink.emit("patience_histogram.csv", |w| {
                write_histogram_csv(w, &m, &stats)
            })?;
            sink.emit("patience_pile_sizes.csv", |w| {
                write_pile_sizes_csv(w, &m, &stats)
            })?;
            sink.finish(command, json!({ "mean_piles": fixed(stats.mean_piles()) }))?;
            Ok(true)
        }
    }
}
