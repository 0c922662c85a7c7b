//! Distance matrices assembled from graphs (BFS all-pairs shortest paths) or
//! finite metric spaces, with an exact integer view alongside the floating
//! one.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::FiniteMetric;

/// Where a distance matrix came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixSource {
    Graph,
    Metric,
}

/// Symmetric nonnegative matrix `D` with zero diagonal and at least two
/// positive entries.
///
/// Storage is dense row-major even for sparse graphs; at the desk scale of
/// n = 2000 that is 32 MB of f64 plus the integer view. The integer view is
/// present iff all entries are integers, which always holds for graph
/// sources.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
    integer: Option<Vec<u64>>,
    source: MatrixSource,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Exact integer entries, present iff every entry is integral.
    pub fn integer_view(&self) -> Option<&[u64]> {
        self.integer.as_deref()
    }

    pub fn source(&self) -> MatrixSource {
        self.source
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Upper bound for the Perron eigenvalue; used as the power-iteration
    /// shift.
    pub fn max_row_sum(&self) -> f64 {
        self.row_sums().into_iter().fold(0.0, f64::max)
    }

    /// Matrix dump in the numeric-table format (same as metric files).
    pub fn write_table(&self) -> String {
        crate::metric::write_table(self.n, &self.entries)
    }

    fn check_positive_entries(n: usize, entries: &[f64]) -> Result<()> {
        let positive = entries.iter().filter(|&&e| e > 0.0).count();
        if positive < 2 {
            return Err(Error::InvalidParameter(
                "distance matrix must have at least two positive entries".into(),
            ));
        }
        debug_assert!((0..n).all(|i| entries[i * n + i] == 0.0));
        Ok(())
    }
}

/// Builds the graph distance matrix `D_ij = d(v_i, v_j)` by running one BFS
/// per source vertex.
///
/// The graph must be connected and have at least 2 vertices; a disconnected
/// input is an error naming an unreachable pair, not an infinite distance.
pub fn graph_distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "distance matrix needs at least 2 vertices".into(),
        ));
    }
    let mut entries = vec![0.0; n * n];
    let mut integer = vec![0u64; n * n];
    for s in 0..n {
        let dist = g.bfs_distances(s);
        for (t, &d) in dist.iter().enumerate() {
            if d == u32::MAX {
                return Err(Error::Disconnected {
                    from: s,
                    unreachable: t,
                });
            }
            entries[s * n + t] = d as f64;
            integer[s * n + t] = d as u64;
        }
    }
    DistanceMatrix::check_positive_entries(n, &entries)?;
    Ok(DistanceMatrix {
        n,
        entries,
        integer: Some(integer),
        source: MatrixSource::Graph,
    })
}

/// Wraps a validated finite metric as a distance matrix. The integer view is
/// attached iff all entries are integral.
pub fn metric_distance_matrix(m: &FiniteMetric) -> DistanceMatrix {
    let n = m.n();
    let entries = m.table().to_vec();
    let all_integral = entries
        .iter()
        .all(|&e| e >= 0.0 && e.fract() == 0.0 && e <= (1u64 << 53) as f64);
    let integer = all_integral.then(|| entries.iter().map(|&e| e as u64).collect());
    // FiniteMetric construction already guarantees >= 2 positive entries.
    DistanceMatrix {
        n,
        entries,
        integer,
        source: MatrixSource::Metric,
    }
}
