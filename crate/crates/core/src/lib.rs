//! Distance matrices of graphs and finite metric spaces.
//!
//! The crate builds distance matrices from graph families, random graphs, and
//! explicit metrics, then analyzes them three ways:
//!
//! - the Perron eigenpair and the near-constancy bounds
//!   `min_i v_i >= 1/(2 sqrt(n))` and `<v, 1> >= sqrt(n/2)` that every unit
//!   Perron vector of a distance matrix satisfies,
//! - exact (rational) and floating solvability of `Dx = 1`, together with the
//!   spectral sufficient condition
//!   `1 - <v, 1/sqrt(n)>^2 < |lambda_2|/(lambda_1 - lambda_2)`,
//! - the asymptotic constants for path, star, and sun families, and Monte
//!   Carlo unsolvability rates over `G(n, p)`.

pub mod asymptotics;
pub mod distance;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod metric;
pub mod solve;
pub mod spectral;

pub use distance::{graph_distance_matrix, metric_distance_matrix, DistanceMatrix, MatrixSource};
pub use error::{Error, ParseError, Result};
pub use graph::{
    gen_broom, gen_complete, gen_cycle, gen_erdos_renyi, gen_path, gen_star, gen_sun, read_graph,
    write_graph, Family, Graph,
};
pub use metric::{
    gen_cluster_plus_point, metric_from_points, read_metric, triangle_slack_stats, validate_metric,
    write_metric, FiniteMetric, MetricReport, Norm, SlackStats,
};
pub use solve::{
    prop1_condition, solve_exact, solve_float, Prop1Report, Scalar, Solution, SolveReport,
};
pub use spectral::{
    full_spectrum, perron_eigenpair, rayleigh_quotient, spectral_summary, verify_theorem,
    PerronResult, SpectralOptions, SpectralSummary, TheoremCheck,
};
