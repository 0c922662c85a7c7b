//! Monte Carlo estimation of `Dx = 1` unsolvability rates over `G(n, p)`,
//! and alignment scans over graph family corpora.
//!
//! Everything here is deterministic given the configuration: per-trial seeds
//! come from a stated 64-bit mix of the master seed and the trial indices,
//! and parallel results are merged in trial order, so the thread count never
//! changes the output.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::graph_distance_matrix;
use crate::error::{Error, Result};
use crate::graph::{gen_erdos_renyi, Family};
use crate::solve::{prop1_from_spectrum, solve_exact};
use crate::spectral::{
    full_spectrum_with_cap, perron_eigenpair, verify_theorem, SpectralOptions, SpectralSummary,
};

/// splitmix64 finalizer (Steele, Lea & Flood constants).
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent stream seed from a master seed and two indices.
///
/// The multipliers are the splitmix64 golden-ratio increment and the XXH64
/// second prime; the finalizer is applied after each index is folded in, so
/// nearby indices land far apart.
pub fn mix_seed(master: u64, a: u64, b: u64) -> u64 {
    let z = splitmix64(master ^ a.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    splitmix64(z ^ b.wrapping_mul(0xC2B2_AE3D_27D4_EB4F))
}

/// z for a 95% normal interval.
pub const WILSON_Z95: f64 = 1.959963984540054;

/// Wilson score interval for `k` successes in `m` trials, clamped to [0, 1].
/// Better behaved than the Wald interval at rates near 0, which is exactly
/// the regime of interest here.
pub fn wilson_interval(k: usize, m: usize) -> (f64, f64) {
    assert!(m > 0, "interval needs at least one trial");
    let z = WILSON_Z95;
    let mf = m as f64;
    let p_hat = k as f64 / mf;
    let z2 = z * z;
    let denom = 1.0 + z2 / mf;
    let center = (p_hat + z2 / (2.0 * mf)) / denom;
    let half = z * (p_hat * (1.0 - p_hat) / mf + z2 / (4.0 * mf * mf)).sqrt() / denom;
    // the interval contains p_hat algebraically; the min/max keep that true
    // under rounding at k = 0 and k = m
    (
        (center - half).max(0.0).min(p_hat),
        (center + half).min(1.0).max(p_hat),
    )
}

/// How to handle disconnected samples (graph distance needs connectivity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityPolicy {
    /// Redraw with a fresh derived seed, up to [`RESAMPLE_CAP`] attempts.
    RejectResample,
    /// Count the trial as attempted but not connected.
    Skip,
}

/// Resample budget per trial under [`ConnectivityPolicy::RejectResample`].
pub const RESAMPLE_CAP: usize = 1000;

/// Configuration of one unsolvability experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McConfig {
    pub n: usize,
    pub p_grid: Vec<f64>,
    pub trials_per_p: usize,
    pub master_seed: u64,
    pub policy: ConnectivityPolicy,
    /// Worker threads; `None` uses the global pool. Output is independent of
    /// this setting.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
}

impl McConfig {
    /// Default probability grid {0.05, 0.10, ..., 0.95}.
    pub fn default_p_grid() -> Vec<f64> {
        (1..=19).map(|i| i as f64 * 0.05).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParameter(
                "graph size must be at least 2".into(),
            ));
        }
        if self.trials_per_p == 0 {
            return Err(Error::InvalidParameter(
                "trials_per_p must be at least 1".into(),
            ));
        }
        if self.p_grid.is_empty() {
            return Err(Error::InvalidParameter("p grid must be nonempty".into()));
        }
        for &p in &self.p_grid {
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "grid probabilities must lie in (0, 1), got {p}"
                )));
            }
        }
        Ok(())
    }
}

/// Per-probability tallies of one experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McCell {
    pub p: f64,
    pub attempted: usize,
    pub connected: usize,
    pub unsolvable: usize,
    /// `unsolvable / connected`; absent when no connected sample was found.
    pub rate: Option<f64>,
    pub wilson_low: Option<f64>,
    pub wilson_high: Option<f64>,
    /// Graph seeds of the unsolvable cases, so they can be regenerated.
    pub unsolvable_seeds: Vec<u64>,
}

/// Deterministic experiment outcome; `elapsed` is the only field that varies
/// between runs and is excluded from serialization.
#[derive(Debug, Clone, Serialize)]
pub struct McResult {
    pub cells: Vec<McCell>,
    #[serde(skip)]
    pub elapsed: Duration,
}

enum TrialOutcome {
    NoConnectedSample,
    Solvable,
    Unsolvable { graph_seed: u64 },
}

fn run_trial(n: usize, p: f64, trial_seed: u64, policy: ConnectivityPolicy) -> TrialOutcome {
    let attempts = match policy {
        ConnectivityPolicy::RejectResample => RESAMPLE_CAP,
        ConnectivityPolicy::Skip => 1,
    };
    for attempt in 0..attempts {
        let graph_seed = mix_seed(trial_seed, attempt as u64, 0);
        let g = gen_erdos_renyi(n, p, graph_seed).expect("validated parameters");
        if !g.is_connected() {
            continue;
        }
        let d = graph_distance_matrix(&g).expect("connected by construction");
        let report = solve_exact(&d).expect("graph matrices carry an integer view");
        return if report.consistent {
            TrialOutcome::Solvable
        } else {
            TrialOutcome::Unsolvable { graph_seed }
        };
    }
    TrialOutcome::NoConnectedSample
}

fn maybe_in_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(job),
        None => job(),
    }
}

/// Runs the Monte Carlo unsolvability estimate over the grid.
///
/// Per-trial seed: `mix_seed(master_seed, p_index, trial_index)`. An empty
/// connected sample at extreme `p` is reported in the cell, not an error.
pub fn run_mc_unsolvability(cfg: &McConfig) -> Result<McResult> {
    cfg.validate()?;
    let start = Instant::now();

    let jobs: Vec<(usize, usize)> = (0..cfg.p_grid.len())
        .flat_map(|pi| (0..cfg.trials_per_p).map(move |ti| (pi, ti)))
        .collect();

    let outcomes: Vec<TrialOutcome> = maybe_in_pool(cfg.threads, || {
        jobs.par_iter()
            .map(|&(pi, ti)| {
                let trial_seed = mix_seed(cfg.master_seed, pi as u64, ti as u64);
                run_trial(cfg.n, cfg.p_grid[pi], trial_seed, cfg.policy)
            })
            .collect()
    });

    let mut cells = Vec::with_capacity(cfg.p_grid.len());
    for (pi, &p) in cfg.p_grid.iter().enumerate() {
        let mut connected = 0usize;
        let mut unsolvable = 0usize;
        let mut seeds = Vec::new();
        for outcome in &outcomes[pi * cfg.trials_per_p..(pi + 1) * cfg.trials_per_p] {
            match outcome {
                TrialOutcome::NoConnectedSample => {}
                TrialOutcome::Solvable => connected += 1,
                TrialOutcome::Unsolvable { graph_seed } => {
                    connected += 1;
                    unsolvable += 1;
                    seeds.push(*graph_seed);
                }
            }
        }
        let (rate, low, high) = if connected > 0 {
            let (lo, hi) = wilson_interval(unsolvable, connected);
            (
                Some(unsolvable as f64 / connected as f64),
                Some(lo),
                Some(hi),
            )
        } else {
            (None, None, None)
        };
        cells.push(McCell {
            p,
            attempted: cfg.trials_per_p,
            connected,
            unsolvable,
            rate,
            wilson_low: low,
            wilson_high: high,
            unsolvable_seeds: seeds,
        });
    }
    Ok(McResult {
        cells,
        elapsed: start.elapsed(),
    })
}

/// One row of a family scan. Fields that could not be computed are `None`,
/// with the reason in `skipped`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub family: String,
    pub params: String,
    pub n: usize,
    pub lambda1: f64,
    pub lambda2: Option<f64>,
    pub min_entry: f64,
    pub alignment: f64,
    /// `min_entry - 1/(2 sqrt(n))`.
    pub margin1: f64,
    /// `alignment - 1/sqrt(2)`.
    pub margin2: f64,
    pub prop1_lhs: Option<f64>,
    pub prop1_rhs: Option<f64>,
    pub prop1_holds: Option<bool>,
    pub solvable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl ScanRecord {
    pub fn id(&self) -> String {
        format!("{}({})", self.family, self.params)
    }
}

/// Aggregate over the records that produced an alignment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanSummary {
    pub count: usize,
    pub mean_alignment: f64,
    pub min_alignment: f64,
    pub argmin: String,
}

#[derive(Debug, Clone)]
pub struct ScanOutput {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

/// Options for [`run_family_scan`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    pub spectral: SpectralOptions,
    pub threads: Option<usize>,
}

fn scan_one(fam: &Family, opts: &SpectralOptions) -> Result<ScanRecord> {
    let g = fam.generate()?;
    let d = graph_distance_matrix(&g)?;
    let n = d.n();
    let p = perron_eigenpair(&d, opts.tol, opts.max_iter)?;
    let min_entry = p.vector.iter().cloned().fold(f64::INFINITY, f64::min);
    let alignment = (p.vector.iter().sum::<f64>() / (n as f64).sqrt()).min(1.0);
    let summary = SpectralSummary {
        n,
        lambda1: p.lambda1,
        lambda2: None,
        perron: Vec::new(),
        min_entry,
        alignment,
        residual: p.residual,
        iterations: p.iterations,
        spectrum_complete: false,
    };
    let check = verify_theorem(&summary);

    let (lambda2, prop1_lhs, prop1_rhs, prop1_holds, skipped) = if n <= opts.jacobi_cap {
        let spectrum = full_spectrum_with_cap(&d, opts.jacobi_cap)?;
        let p1 = prop1_from_spectrum(&spectrum, alignment);
        (
            Some(spectrum[1]),
            Some(p1.lhs),
            Some(p1.rhs),
            Some(p1.condition_holds),
            None,
        )
    } else {
        let reason = format!(
            "full spectrum skipped: n = {n} exceeds Jacobi cap {}",
            opts.jacobi_cap
        );
        (None, None, None, None, Some(reason))
    };
    let solvable = Some(solve_exact(&d)?.consistent);

    Ok(ScanRecord {
        family: fam.name().to_string(),
        params: fam.params(),
        n,
        lambda1: p.lambda1,
        lambda2,
        min_entry,
        alignment,
        margin1: check.min_entry_margin,
        margin2: check.alignment_margin,
        prop1_lhs,
        prop1_rhs,
        prop1_holds,
        solvable,
        skipped,
    })
}

/// Scans a list of concrete family instances, one record per graph.
///
/// Individual failures become rows with a `skipped` reason; the scan keeps
/// going.
pub fn run_family_scan(items: &[Family], opts: &ScanOptions) -> ScanOutput {
    let spectral = opts.spectral;
    let records: Vec<ScanRecord> = maybe_in_pool(opts.threads, || {
        items
            .par_iter()
            .map(|fam| {
                scan_one(fam, &spectral).unwrap_or_else(|e| ScanRecord {
                    family: fam.name().to_string(),
                    params: fam.params(),
                    n: fam.vertex_count(),
                    lambda1: f64::NAN,
                    lambda2: None,
                    min_entry: f64::NAN,
                    alignment: f64::NAN,
                    margin1: f64::NAN,
                    margin2: f64::NAN,
                    prop1_lhs: None,
                    prop1_rhs: None,
                    prop1_holds: None,
                    solvable: None,
                    skipped: Some(format!("scan failed: {e}")),
                })
            })
            .collect()
    });

    let mut count = 0usize;
    let mut sum = 0.0;
    let mut min = f64::INFINITY;
    let mut argmin = String::new();
    for r in &records {
        if r.alignment.is_finite() {
            count += 1;
            sum += r.alignment;
            if r.alignment < min {
                min = r.alignment;
                argmin = r.id();
            }
        }
    }
    let summary = ScanSummary {
        count,
        mean_alignment: if count > 0 {
            sum / count as f64
        } else {
            f64::NAN
        },
        min_alignment: min,
        argmin,
    };
    ScanOutput { records, summary }
}

/// Builds the default scan grid for a set of family kinds with total vertex
/// count from 4 up to `n_max`.
pub fn family_grid(kinds: &[&str], n_max: usize) -> Result<Vec<Family>> {
    let mut out = Vec::new();
    for &kind in kinds {
        match kind {
            "path" => out.extend((4..=n_max).map(|n| Family::Path { n })),
            "star" => out.extend((4..=n_max).map(|n| Family::Star { leaves: n - 1 })),
            "cycle" => out.extend((4..=n_max).map(|n| Family::Cycle { n })),
            "complete" => out.extend((4..=n_max).map(|n| Family::Complete { n })),
            "sun" => out.extend(
                (2..=n_max / 2)
                    .filter(|&h| h >= 3)
                    .map(|h| Family::Sun { hub: h }),
            ),
            "broom" => {
                for n in 4..=n_max {
                    for leaves in 1..=(n - 2) {
                        out.push(Family::Broom {
                            leaves,
                            tail: n - 1 - leaves,
                        });
                    }
                }
            }
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family kind: {other}"
                )))
            }
        }
    }
    Ok(out)
}

/// CSV column order is part of the interface; the header row is always
/// present.
pub const CSV_HEADER: &str =
    "family,params,n,lambda1,lambda2,min_entry,alignment,margin1,margin2,prop1_lhs,prop1_rhs,prop1_holds,solvable";

fn fmt_opt_f64(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn fmt_opt_bool(v: Option<bool>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Serializes records to CSV with a stable column order and shortest
/// round-trip float formatting.
pub fn export_csv(records: &[ScanRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.family,
            r.params,
            r.n,
            r.lambda1,
            fmt_opt_f64(r.lambda2),
            r.min_entry,
            r.alignment,
            r.margin1,
            r.margin2,
            fmt_opt_f64(r.prop1_lhs),
            fmt_opt_f64(r.prop1_rhs),
            fmt_opt_bool(r.prop1_holds),
            fmt_opt_bool(r.solvable),
        ));
    }
    out
}

/// Serializes records to a JSON array (includes skip reasons, which the CSV
/// columns do not carry).
pub fn export_json(records: &[ScanRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records are serializable")
}

/// Parses [`export_csv`] output back into records. The `skipped` field is
/// not a CSV column and comes back as `None`.
pub fn parse_csv(text: &str) -> Result<Vec<ScanRecord>> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != CSV_HEADER {
        return Err(Error::InvalidParameter(format!(
            "unexpected CSV header: {header}"
        )));
    }
    let mut records = Vec::new();
    for (idx, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 13 {
            return Err(Error::InvalidParameter(format!(
                "row {} has {} fields, expected 13",
                idx + 2,
                fields.len()
            )));
        }
        let parse_f64 = |s: &str| -> Result<f64> {
            s.parse()
                .map_err(|_| Error::InvalidParameter(format!("bad float in row {}: {s}", idx + 2)))
        };
        let parse_opt_f64 = |s: &str| -> Result<Option<f64>> {
            if s.is_empty() {
                Ok(None)
            } else {
                parse_f64(s).map(Some)
            }
        };
        let parse_opt_bool = |s: &str| -> Result<Option<bool>> {
            match s {
                "" => Ok(None),
                "true" => Ok(Some(true)),
                "false" => Ok(Some(false)),
                _ => Err(Error::InvalidParameter(format!(
                    "bad bool in row {}: {s}",
                    idx + 2
                ))),
            }
        };
        records.push(ScanRecord {
            family: fields[0].to_string(),
            params: fields[1].to_string(),
            n: fields[2]
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad n in row {}", idx + 2)))?,
            lambda1: parse_f64(fields[3])?,
            lambda2: parse_opt_f64(fields[4])?,
            min_entry: parse_f64(fields[5])?,
            alignment: parse_f64(fields[6])?,
            margin1: parse_f64(fields[7])?,
            margin2: parse_f64(fields[8])?,
            prop1_lhs: parse_opt_f64(fields[9])?,
            prop1_rhs: parse_opt_f64(fields[10])?,
            prop1_holds: parse_opt_bool(fields[11])?,
            solvable: parse_opt_bool(fields[12])?,
            skipped: None,
        });
    }
    Ok(records)
}
