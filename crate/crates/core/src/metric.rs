//! Finite metric spaces given by explicit distance tables or point clouds,
//! including the cluster-plus-far-point space that makes the alignment bound
//! sharp.

use std::fmt;
use std::fmt::Write as _;

use crate::distance::DistanceMatrix;
use crate::error::{Error, ParseError, Result};

/// Relative slack allowed on the triangle inequality: floating construction
/// from coordinates can violate the exact inequality in the last bits.
pub const TRIANGLE_SLACK_REL: f64 = 1e-9;

/// Finite metric space: an `n x n` table of nonnegative reals with zero
/// diagonal, symmetry, and the triangle inequality up to relative slack.
///
/// Zero distances between distinct points are allowed (the table may be a
/// pseudometric), but at least one pair must be at positive distance.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetric {
    n: usize,
    dist: Vec<f64>,
}

impl FiniteMetric {
    /// Validates the table and wraps it. Violations are reported in full.
    pub fn new(n: usize, dist: Vec<f64>) -> Result<Self> {
        if dist.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: dist.len(),
            });
        }
        let report = validate_metric(n, &dist);
        if !report.is_valid() {
            return Err(Error::InvalidMetric(report));
        }
        Ok(FiniteMetric { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    pub fn table(&self) -> &[f64] {
        &self.dist
    }
}

/// A single violated metric axiom with its witness.
#[derive(Debug, Clone, PartialEq)]
pub enum MetricViolation {
    NonzeroDiagonal {
        i: usize,
        value: f64,
    },
    Negative {
        i: usize,
        j: usize,
        value: f64,
    },
    NotFinite {
        i: usize,
        j: usize,
    },
    Asymmetric {
        i: usize,
        j: usize,
        forward: f64,
        backward: f64,
    },
    /// `d(i,j) > d(i,k) + d(k,j)` beyond the slack tolerance.
    Triangle {
        i: usize,
        j: usize,
        k: usize,
        direct: f64,
        detour: f64,
    },
    /// All off-diagonal entries are zero: the points are all identical.
    AllIdentical,
}

impl fmt::Display for MetricViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricViolation::NonzeroDiagonal { i, value } => {
                write!(f, "diagonal entry ({i},{i}) = {value} is not zero")
            }
            MetricViolation::Negative { i, j, value } => {
                write!(f, "entry ({i},{j}) = {value} is negative")
            }
            MetricViolation::NotFinite { i, j } => {
                write!(f, "entry ({i},{j}) is not finite")
            }
            MetricViolation::Asymmetric {
                i,
                j,
                forward,
                backward,
            } => {
                write!(f, "asymmetry at ({i},{j}): {forward} vs {backward}")
            }
            MetricViolation::Triangle {
                i,
                j,
                k,
                direct,
                detour,
            } => {
                write!(
                    f,
                    "triangle violation at ({i},{j},{k}): {direct} > {detour}"
                )
            }
            MetricViolation::AllIdentical => {
                write!(f, "all points are identical (no positive distance)")
            }
        }
    }
}

/// Outcome of [`validate_metric`]: empty iff the table is a valid metric.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricReport {
    pub violations: Vec<MetricViolation>,
}

impl MetricReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for MetricReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid metric");
        }
        for (idx, v) in self.violations.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every metric axiom on a square table and lists each violation with
/// its witnessing indices. Violations are data, not errors.
pub fn validate_metric(n: usize, dist: &[f64]) -> MetricReport {
    assert_eq!(dist.len(), n * n, "table must be square");
    let mut violations = Vec::new();
    let at = |i: usize, j: usize| dist[i * n + j];

    let mut max_entry = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let d = at(i, j);
            if !d.is_finite() {
                violations.push(MetricViolation::NotFinite { i, j });
            } else {
                max_entry = max_entry.max(d.abs());
            }
        }
    }
    if !violations.is_empty() {
        return MetricReport { violations };
    }

    for i in 0..n {
        if at(i, i) != 0.0 {
            violations.push(MetricViolation::NonzeroDiagonal { i, value: at(i, i) });
        }
        for j in (i + 1)..n {
            if at(i, j) < 0.0 {
                violations.push(MetricViolation::Negative {
                    i,
                    j,
                    value: at(i, j),
                });
            }
            if at(i, j) != at(j, i) {
                violations.push(MetricViolation::Asymmetric {
                    i,
                    j,
                    forward: at(i, j),
                    backward: at(j, i),
                });
            }
        }
    }

    let slack = TRIANGLE_SLACK_REL * max_entry;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                let direct = at(i, j);
                let detour = at(i, k) + at(k, j);
                if direct > detour + slack {
                    violations.push(MetricViolation::Triangle {
                        i,
                        j,
                        k,
                        direct,
                        detour,
                    });
                }
            }
        }
    }

    if n >= 1 && max_entry == 0.0 {
        violations.push(MetricViolation::AllIdentical);
    }
    MetricReport { violations }
}

/// Norm used to turn point clouds into distance tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    Euclidean,
    Manhattan,
    Chebyshev,
}

impl Norm {
    fn apply(&self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            Norm::Euclidean => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
            Norm::Manhattan => a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum(),
            Norm::Chebyshev => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
        }
    }
}

/// Builds the distance table of a point cloud under the chosen norm.
pub fn metric_from_points(points: &[Vec<f64>], norm: Norm) -> Result<FiniteMetric> {
    let n = points.len();
    if n < 2 {
        return Err(Error::InvalidParameter("need at least 2 points".into()));
    }
    let dim = points[0].len();
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
    }
    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = norm.apply(&points[i], &points[j]);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    if dist.iter().all(|&d| d == 0.0) {
        return Err(Error::InvalidParameter("all points are identical".into()));
    }
    FiniteMetric::new(n, dist)
}

/// The sharpness example for the alignment bound: `n_cluster` points pairwise
/// at distance `eps`, plus one far point at distance 1 from all of them.
///
/// Requires `0 <= eps < 1/2`.
pub fn gen_cluster_plus_point(n_cluster: usize, eps: f64) -> Result<FiniteMetric> {
    if n_cluster == 0 {
        return Err(Error::InvalidParameter(
            "cluster must contain at least 1 point".into(),
        ));
    }
    if !(0.0..0.5).contains(&eps) {
        return Err(Error::InvalidParameter(format!(
            "cluster spread must satisfy 0 <= eps < 1/2, got {eps}"
        )));
    }
    let n = n_cluster + 1;
    let mut dist = vec![0.0; n * n];
    for i in 0..n_cluster {
        for j in (i + 1)..n_cluster {
            dist[i * n + j] = eps;
            dist[j * n + i] = eps;
        }
        dist[i * n + n_cluster] = 1.0;
        dist[n_cluster * n + i] = 1.0;
    }
    FiniteMetric::new(n, dist)
}

/// Weighted triangle-slack summary over all midpoints `k`:
/// `S_k = sum_{i,j} v_i v_j (d(i,k) + d(k,j) - d(i,j))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlackStats {
    pub min: f64,
    pub mean: f64,
    pub max: f64,
    /// Midpoint achieving the minimum.
    pub argmin: usize,
}

/// Computes the v-weighted average triangle slack for every midpoint `k` and
/// returns the minimum, grand mean, and maximum over `k`.
///
/// `v` must be a unit vector with nonnegative entries. For any valid metric
/// the result is nonnegative; a small minimum means the triangle inequality
/// is close to an equation where the Perron weight sits.
pub fn triangle_slack_stats(d: &DistanceMatrix, v: &[f64]) -> Result<SlackStats> {
    let n = d.n();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    if v.iter().any(|&x| x < 0.0) {
        return Err(Error::InvalidParameter(
            "weight vector must be nonnegative".into(),
        ));
    }
    let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "weight vector must have unit length, got {norm}"
        )));
    }

    // S_k = 2 (sum_j v_j) (sum_i v_i d(i,k)) - v^T D v, since the two detour
    // terms are symmetric and the direct term does not depend on k.
    let sv: f64 = v.iter().sum();
    let mut vdv = 0.0;
    for i in 0..n {
        let row = d.row(i);
        let mut acc = 0.0;
        for j in 0..n {
            acc += row[j] * v[j];
        }
        vdv += v[i] * acc;
    }

    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut argmin = 0;
    for k in 0..n {
        let row = d.row(k);
        let mut dot = 0.0;
        for i in 0..n {
            dot += row[i] * v[i];
        }
        let s_k = 2.0 * sv * dot - vdv;
        sum += s_k;
        if s_k < min {
            min = s_k;
            argmin = k;
        }
        max = max.max(s_k);
    }
    Ok(SlackStats {
        min,
        mean: sum / n as f64,
        max,
        argmin,
    })
}

/// Parses the metric table format: first line `n`, then `n` rows of `n`
/// whitespace-separated decimal reals.
pub fn read_metric(text: &str) -> Result<FiniteMetric> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(ParseError::BadHeader { line: 1 })?;
    let n: usize = header
        .parse()
        .map_err(|_| ParseError::BadHeader { line: header_line })?;
    if n == 0 {
        return Err(ParseError::BadHeader { line: header_line }.into());
    }
    let mut dist = Vec::with_capacity(n * n);
    let mut rows = 0usize;
    for (line, l) in lines {
        rows += 1;
        if rows > n {
            return Err(ParseError::RowCountMismatch {
                expected: n,
                got: rows,
            }
            .into());
        }
        let values: Vec<f64> = l
            .split_whitespace()
            .map(|s| s.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| ParseError::BadNumber { line })?;
        if values.len() != n {
            return Err(ParseError::BadRowLength {
                line,
                expected: n,
                got: values.len(),
            }
            .into());
        }
        dist.extend(values);
    }
    if rows != n {
        return Err(ParseError::RowCountMismatch {
            expected: n,
            got: rows,
        }
        .into());
    }
    FiniteMetric::new(n, dist)
}

/// Writes the metric table format, one row per line.
pub fn write_metric(m: &FiniteMetric) -> String {
    write_table(m.n(), m.table())
}

/// Numeric table dump shared by metric files and distance-matrix dumps.
pub(crate) fn write_table(n: usize, entries: &[f64]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{n}");
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}", entries[i * n + j]);
        }
        out.push('\n');
    }
    out
}
