//! Leading eigenpair and full spectrum of distance matrices, plus the
//! near-constancy checks on the Perron vector.
//!
//! The Perron eigenpair comes from shifted power iteration: with the shift
//! sigma = max row sum, every eigenvalue of `D + sigma I` is nonnegative and
//! the largest is strictly dominant, so the iteration cannot oscillate (the
//! n = 2 case would flip sign every step without the shift). Convergence is
//! tested on the eigen-residual rather than iterate movement, which stays
//! robust when the spectral gap is thin.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 200_000;
/// Largest size handled by the cyclic Jacobi full-spectrum path.
pub const DEFAULT_JACOBI_CAP: usize = 1500;

/// Entries of the converged Perron vector more negative than this indicate a
/// bug; anything in `[-CLAMP_TOL, 0)` is rounding noise and is clamped to 0.
const CLAMP_TOL: f64 = 1e-12;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn matvec(d: &DistanceMatrix, x: &[f64], out: &mut [f64]) {
    for i in 0..d.n() {
        out[i] = dot(d.row(i), x);
    }
}

/// Converged leading eigenpair.
#[derive(Debug, Clone)]
pub struct PerronResult {
    pub lambda1: f64,
    /// Unit-length vector with nonnegative entries.
    pub vector: Vec<f64>,
    /// Final `||Dv - lambda1 v||_2`.
    pub residual: f64,
    pub iterations: usize,
}

/// Runs shifted power iteration until `||Dv - lambda v|| <= tol * lambda`.
///
/// The start vector is the constant direction, which is never orthogonal to
/// the Perron vector and keeps runs reproducible.
pub fn perron_eigenpair(d: &DistanceMatrix, tol: f64, max_iter: usize) -> Result<PerronResult> {
    let n = d.n();
    let sigma = d.max_row_sum();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut w = vec![0.0; n];
    let mut residual = f64::INFINITY;

    for iter in 1..=max_iter {
        matvec(d, &x, &mut w);
        let lambda = dot(&x, &w);
        let mut r2 = 0.0;
        for i in 0..n {
            let r = w[i] - lambda * x[i];
            r2 += r * r;
        }
        residual = r2.sqrt();
        if lambda > 0.0 && residual <= tol * lambda {
            for xi in &mut x {
                debug_assert!(*xi >= -CLAMP_TOL);
                if *xi < 0.0 {
                    *xi = 0.0;
                }
            }
            let norm = norm2(&x);
            for xi in &mut x {
                *xi /= norm;
            }
            return Ok(PerronResult {
                lambda1: lambda,
                vector: x,
                residual,
                iterations: iter,
            });
        }
        for i in 0..n {
            w[i] += sigma * x[i];
        }
        let norm = norm2(&w);
        for i in 0..n {
            x[i] = w[i] / norm;
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual,
    })
}

/// All eigenvalues of the symmetric matrix via cyclic Jacobi rotations,
/// sorted descending. The off-diagonal Frobenius norm is driven below
/// `1e-11 * ||D||_F`.
pub fn full_spectrum(d: &DistanceMatrix) -> Result<Vec<f64>> {
    full_spectrum_with_cap(d, DEFAULT_JACOBI_CAP)
}

pub fn full_spectrum_with_cap(d: &DistanceMatrix, cap: usize) -> Result<Vec<f64>> {
    let n = d.n();
    if n > cap {
        return Err(Error::SpectrumUnavailable { n, cap });
    }
    let mut a = d.entries().to_vec();
    let frob = norm2(&a);
    let target = 1e-11 * frob;

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        s.sqrt()
    };

    let max_sweeps = 60;
    let mut converged = off(&a) <= target;
    for _ in 0..max_sweeps {
        if converged {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // stable rotation: t = tan(theta) with |t| <= 1
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[p * n + j];
                    let aqj = a[q * n + j];
                    a[p * n + j] = c * apj - s * aqj;
                    a[q * n + j] = s * apj + c * aqj;
                }
                // recompute the 2x2 block exactly to keep symmetry clean
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        converged = off(&a) <= target;
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations: max_sweeps,
            residual: off(&a),
        });
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(eig)
}

/// Summary of the Perron eigenpair of one matrix, with the second eigenvalue
/// when the full spectrum is within reach.
///
/// Serializes to a flat JSON object with exactly the fields
/// `n, lambda1, lambda2, min_entry, alignment, residual, iterations`
/// (`lambda2` is null above the Jacobi cap).
#[derive(Debug, Clone)]
pub struct SpectralSummary {
    pub n: usize,
    pub lambda1: f64,
    pub lambda2: Option<f64>,
    /// Unit Perron vector.
    pub perron: Vec<f64>,
    pub min_entry: f64,
    /// `<v, 1> / sqrt(n)`, in [0, 1].
    pub alignment: f64,
    pub residual: f64,
    pub iterations: usize,
    /// True when the Jacobi spectrum was computed (n within cap).
    pub spectrum_complete: bool,
}

impl Serialize for SpectralSummary {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SpectralSummary", 7)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("lambda1", &self.lambda1)?;
        s.serialize_field("lambda2", &self.lambda2)?;
        s.serialize_field("min_entry", &self.min_entry)?;
        s.serialize_field("alignment", &self.alignment)?;
        s.serialize_field("residual", &self.residual)?;
        s.serialize_field("iterations", &self.iterations)?;
        s.end()
    }
}

/// Options for [`spectral_summary`].
#[derive(Debug, Clone, Copy)]
pub struct SpectralOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub jacobi_cap: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            jacobi_cap: DEFAULT_JACOBI_CAP,
        }
    }
}

/// Computes the Perron eigenpair and, when `n` is within the Jacobi cap, the
/// second eigenvalue from the full spectrum.
pub fn spectral_summary(d: &DistanceMatrix, opts: &SpectralOptions) -> Result<SpectralSummary> {
    let p = perron_eigenpair(d, opts.tol, opts.max_iter)?;
    let n = d.n();
    let (lambda2, spectrum_complete) = if n <= opts.jacobi_cap {
        let spectrum = full_spectrum_with_cap(d, opts.jacobi_cap)?;
        (Some(spectrum[1]), true)
    } else {
        (None, false)
    };
    let min_entry = p.vector.iter().cloned().fold(f64::INFINITY, f64::min);
    let alignment = (p.vector.iter().sum::<f64>() / (n as f64).sqrt()).min(1.0);
    Ok(SpectralSummary {
        n,
        lambda1: p.lambda1,
        lambda2,
        perron: p.vector,
        min_entry,
        alignment,
        residual: p.residual,
        iterations: p.iterations,
        spectrum_complete,
    })
}

/// Margin tolerance for the two eigenvector bounds.
pub const THEOREM_MARGIN_TOL: f64 = 1e-9;

/// Outcome of checking the two Perron-vector bounds
/// `min_i v_i >= 1/(2 sqrt(n))` and `<v, 1> >= sqrt(n/2)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TheoremCheck {
    /// `min_entry - 1/(2 sqrt(n))`.
    pub min_entry_margin: f64,
    /// `alignment - 1/sqrt(2)`.
    pub alignment_margin: f64,
    pub passes: bool,
}

/// Evaluates both bound margins; the verdict passes iff both are at least
/// `-1e-9`.
pub fn verify_theorem(s: &SpectralSummary) -> TheoremCheck {
    let min_entry_margin = s.min_entry - 1.0 / (2.0 * (s.n as f64).sqrt());
    let alignment_margin = s.alignment - std::f64::consts::FRAC_1_SQRT_2;
    TheoremCheck {
        min_entry_margin,
        alignment_margin,
        passes: min_entry_margin >= -THEOREM_MARGIN_TOL && alignment_margin >= -THEOREM_MARGIN_TOL,
    }
}

/// `<Da, a> / <a, a>` for a nonzero vector `a`.
pub fn rayleigh_quotient(d: &DistanceMatrix, a: &[f64]) -> Result<f64> {
    let n = d.n();
    if a.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a.len(),
        });
    }
    let denom = dot(a, a);
    if denom == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut num = 0.0;
    for i in 0..n {
        num += a[i] * dot(d.row(i), a);
    }
    Ok(num / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{graph_distance_matrix, metric_distance_matrix};
    use crate::graph::{gen_complete, gen_cycle, gen_path, gen_star};
    use crate::metric::gen_cluster_plus_point;

    fn summary(d: &DistanceMatrix) -> SpectralSummary {
        spectral_summary(d, &SpectralOptions::default()).unwrap()
    }

    #[test]
    fn complete_graph_eigenpair() {
        for n in [2usize, 5, 30] {
            let d = graph_distance_matrix(&gen_complete(n).unwrap()).unwrap();
            let s = summary(&d);
            assert!((s.lambda1 - (n as f64 - 1.0)).abs() < 1e-9);
            let expected = 1.0 / (n as f64).sqrt();
            for &v in &s.perron {
                assert!((v - expected).abs() < 1e-9);
            }
            assert!((s.alignment - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn path_3_eigenpair() {
        // lambda^2 - 2 lambda - 2 = 0 from the symmetric 2x2 reduction
        let d = graph_distance_matrix(&gen_path(3).unwrap()).unwrap();
        let s = summary(&d);
        let expected = 1.0 + 3.0f64.sqrt();
        assert!((s.lambda1 - expected).abs() < 1e-10);
        let v = &s.perron;
        assert!((v[0] - 0.62796).abs() < 1e-5);
        assert!((v[1] - 0.45970).abs() < 1e-5);
        assert!((v[2] - 0.62796).abs() < 1e-5);
        assert!(s.residual <= DEFAULT_TOL * s.lambda1);
    }

    #[test]
    fn star_3_eigenpair() {
        // lambda^2 - 4 lambda - 3 = 0 from the (center, leaf) ansatz
        let d = graph_distance_matrix(&gen_star(3).unwrap()).unwrap();
        let s = summary(&d);
        let expected = 2.0 + 7.0f64.sqrt();
        assert!((s.lambda1 - expected).abs() < 1e-10);
        let v = &s.perron;
        assert!((v[0] - 0.34934).abs() < 1e-5);
        for &b in &v[1..] {
            assert!((b - 0.54097).abs() < 1e-5);
        }
        // the center is the argmin
        assert_eq!(s.min_entry, v[0]);
    }

    #[test]
    fn two_point_case_does_not_oscillate() {
        let m = gen_cluster_plus_point(1, 0.0).unwrap();
        let d = metric_distance_matrix(&m);
        let s = summary(&d);
        assert!((s.lambda1 - 1.0).abs() < 1e-12);
        assert!((s.alignment - 1.0).abs() < 1e-12);
    }

    #[test]
    fn full_spectrum_k3_and_c4() {
        let d = graph_distance_matrix(&gen_complete(3).unwrap()).unwrap();
        let spec = full_spectrum(&d).unwrap();
        let expected = [2.0, -1.0, -1.0];
        for (got, want) in spec.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "got {got}, want {want}");
        }

        // circulant with first row (0, 1, 2, 1): eigenvalues at 4th roots of unity
        let d = graph_distance_matrix(&gen_cycle(4).unwrap()).unwrap();
        let spec = full_spectrum(&d).unwrap();
        let expected = [4.0, 0.0, -2.0, -2.0];
        for (got, want) in spec.iter().zip(expected) {
            assert!((got - want).abs() < 1e-9, "got {got}, want {want}");
        }
    }

    #[test]
    fn eigenvalue_sum_is_zero() {
        for d in [
            graph_distance_matrix(&gen_path(13).unwrap()).unwrap(),
            graph_distance_matrix(&gen_star(20).unwrap()).unwrap(),
            graph_distance_matrix(&crate::graph::gen_sun(6).unwrap()).unwrap(),
        ] {
            let spec = full_spectrum(&d).unwrap();
            let sum: f64 = spec.iter().sum();
            assert!(sum.abs() <= 1e-9 * spec[0], "eigenvalue sum {sum}");
        }
    }

    #[test]
    fn spectrum_cap_is_enforced() {
        let d = graph_distance_matrix(&gen_path(30).unwrap()).unwrap();
        match full_spectrum_with_cap(&d, 10) {
            Err(Error::SpectrumUnavailable { n: 30, cap: 10 }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn theorem_margins() {
        let d = graph_distance_matrix(&gen_complete(9).unwrap()).unwrap();
        let s = summary(&d);
        let check = verify_theorem(&s);
        assert!(check.passes);
        // for K_n: min margin = 1/sqrt(n) - 1/(2 sqrt(n)), alignment margin = 1 - 1/sqrt(2)
        assert!((check.min_entry_margin - 1.0 / 6.0).abs() < 1e-9);
        assert!((check.alignment_margin - (1.0 - std::f64::consts::FRAC_1_SQRT_2)).abs() < 1e-9);

        // star with 50 leaves: min margin small but positive
        let d = graph_distance_matrix(&gen_star(50).unwrap()).unwrap();
        let s = summary(&d);
        let check = verify_theorem(&s);
        assert!(check.passes);
        assert!(check.min_entry_margin > 0.0 && check.min_entry_margin < 0.01);

        // cluster metric: alignment margin small but positive (near-extremal);
        // at cluster size 1000 the closed form gives ~0.022
        let m = gen_cluster_plus_point(1000, 1e-6).unwrap();
        let d = metric_distance_matrix(&m);
        let s = summary(&d);
        let check = verify_theorem(&s);
        assert!(check.passes);
        assert!(check.alignment_margin > 0.0 && check.alignment_margin < 0.025);
        assert!((s.alignment - 0.7291084058).abs() < 1e-6);
    }

    #[test]
    fn rayleigh_examples() {
        let d = graph_distance_matrix(&gen_complete(3).unwrap()).unwrap();
        assert!((rayleigh_quotient(&d, &[1.0, 1.0, 1.0]).unwrap() - 2.0).abs() < 1e-12);

        let d = graph_distance_matrix(&gen_path(3).unwrap()).unwrap();
        assert_eq!(rayleigh_quotient(&d, &[1.0, 0.0, 0.0]).unwrap(), 0.0);
        assert!((rayleigh_quotient(&d, &[1.0, 1.0, 1.0]).unwrap() - 8.0 / 3.0).abs() < 1e-12);

        assert!(matches!(
            rayleigh_quotient(&d, &[0.0, 0.0, 0.0]),
            Err(Error::ZeroVector)
        ));
        assert!(rayleigh_quotient(&d, &[1.0]).is_err());
    }

    #[test]
    fn rayleigh_of_perron_is_lambda1() {
        let d = graph_distance_matrix(&gen_star(12).unwrap()).unwrap();
        let s = summary(&d);
        let rq = rayleigh_quotient(&d, &s.perron).unwrap();
        assert!((rq - s.lambda1).abs() <= 1e-9 * s.lambda1);
    }

    #[test]
    fn jacobi_agrees_with_power_iteration() {
        for g in [
            gen_path(25).unwrap(),
            gen_star(25).unwrap(),
            crate::graph::gen_broom(5, 9).unwrap(),
            crate::graph::gen_erdos_renyi(40, 0.4, 11).unwrap(),
        ] {
            if !g.is_connected() {
                continue;
            }
            let d = graph_distance_matrix(&g).unwrap();
            let s = summary(&d);
            let spec = full_spectrum(&d).unwrap();
            assert!((spec[0] - s.lambda1).abs() <= 1e-8 * s.lambda1);
        }
    }

    #[test]
    fn non_convergence_reports_residual() {
        let d = graph_distance_matrix(&gen_path(20).unwrap()).unwrap();
        match perron_eigenpair(&d, 1e-30, 3) {
            Err(Error::NoConvergence {
                iterations: 3,
                residual,
            }) => {
                assert!(residual.is_finite() && residual > 0.0);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn summary_json_schema() {
        let d = graph_distance_matrix(&gen_path(3).unwrap()).unwrap();
        let s = summary(&d);
        let json = serde_json::to_string(&s).unwrap();
        let expected = [
            "n",
            "lambda1",
            "lambda2",
            "min_entry",
            "alignment",
            "residual",
            "iterations",
        ];
        let obj = serde_json::from_str::<serde_json::Value>(&json).unwrap();
        assert_eq!(obj.as_object().unwrap().len(), expected.len());
        let mut last = 0;
        for key in expected {
            let pos = json
                .find(&format!("\"{key}\":"))
                .unwrap_or_else(|| panic!("missing {key}"));
            assert!(pos >= last, "field {key} out of order in {json}");
            last = pos;
        }
    }
}
