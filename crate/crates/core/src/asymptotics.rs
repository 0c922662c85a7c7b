//! Closed forms and root finding for the path-graph alignment limit, the
//! star-center expansion, and the sun-graph limit.
//!
//! Roots are bracketed by bisection first and polished by Newton steps;
//! pure Newton from a bad start can escape the bracket of the theta equation
//! at small n.

use serde::Serialize;

use crate::error::{Error, Result};

/// Residual target for the scalar roots.
pub const ROOT_TOL: f64 = 1e-14;

fn bisect_then_newton(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> f64 {
    debug_assert!(f(lo) < 0.0 && f(hi) > 0.0, "invalid bracket");
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..8 {
        let fx = f(x);
        if fx.abs() <= tol {
            break;
        }
        let step = fx / df(x);
        let next = x - step;
        if next <= lo || next >= hi {
            break;
        }
        x = next;
    }
    x
}

/// The positive root of `c tanh c = 1`, approximately 1.19968.
///
/// The bracket [1, 1.5] is fixed and valid: the function is negative at 1
/// and positive at 1.5.
pub fn solve_c() -> f64 {
    let f = |c: f64| c * c.tanh() - 1.0;
    let df = |c: f64| {
        let t = c.tanh();
        t + c * (1.0 - t * t)
    };
    bisect_then_newton(f, df, 1.0, 1.5, ROOT_TOL)
}

/// The positive root of `tanh(theta/2) tanh(n theta/2) = 1/n` for `n >= 2`.
///
/// The left side increases in theta from 0 toward 1 > 1/n, so the bracket
/// (0, 4] always contains exactly one root.
pub fn solve_theta(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "theta equation requires n >= 2".into(),
        ));
    }
    let nf = n as f64;
    let f = |t: f64| (0.5 * t).tanh() * (0.5 * nf * t).tanh() - 1.0 / nf;
    let df = |t: f64| {
        let a = (0.5 * t).tanh();
        let b = (0.5 * nf * t).tanh();
        0.5 * (1.0 - a * a) * b + 0.5 * nf * (1.0 - b * b) * a
    };
    Ok(bisect_then_newton(f, df, 1e-15, 4.0, 1e-16))
}

/// The exact Perron direction of the path distance matrix: entries
/// `v_k = cosh((k - (n+1)/2) theta)` for `k = 1..n`, normalized to unit
/// length. Symmetric under `k <-> n+1-k` exactly, since cosh is even and the
/// offsets are exact half-integers.
pub fn ruzieh_powers_vector(n: usize) -> Result<Vec<f64>> {
    let theta = solve_theta(n)?;
    let center = (n as f64 + 1.0) / 2.0;
    let mut v: Vec<f64> = (1..=n)
        .map(|k| ((k as f64 - center) * theta).cosh())
        .collect();
    let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in &mut v {
        *x /= norm;
    }
    Ok(v)
}

/// `<v, 1>/sqrt(n)` of the cosh profile; converges to
/// [`path_limit_constant`] from above as n grows.
pub fn finite_alignment(n: usize) -> Result<f64> {
    let v = ruzieh_powers_vector(n)?;
    Ok(v.iter().sum::<f64>() / (n as f64).sqrt())
}

/// The limiting path-graph alignment
/// `sqrt(2) sinh(c) / (sqrt(c) sqrt(c + cosh(c) sinh(c))) = 0.98261...`,
/// evaluated at the root of `c tanh c = 1`.
pub fn path_limit_constant() -> f64 {
    let c = solve_c();
    (2.0f64).sqrt() * c.sinh() / (c.sqrt() * (c + c.cosh() * c.sinh()).sqrt())
}

/// The limiting sun-graph alignment `sqrt(1/2 + 1/sqrt(5)) ~ 0.973`.
pub fn sun_limit_constant() -> f64 {
    (0.5 + 1.0 / 5.0f64.sqrt()).sqrt()
}

/// Two-term expansion of the star's center Perron entry,
/// `1/(2 sqrt(n)) + (5/16) n^{-3/2}`, where `n` counts the leaves.
pub fn star_min_entry_expansion(leaves: usize) -> f64 {
    let nf = leaves as f64;
    1.0 / (2.0 * nf.sqrt()) + (5.0 / 16.0) / nf.powf(1.5)
}

/// Path-graph asymptotics bundle for reports and the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct PathAsymptotics {
    pub n: usize,
    pub theta: f64,
    pub c: f64,
    pub limit_constant: f64,
    pub finite_alignment: f64,
}

pub fn path_asymptotics(n: usize) -> Result<PathAsymptotics> {
    Ok(PathAsymptotics {
        n,
        theta: solve_theta(n)?,
        c: solve_c(),
        limit_constant: path_limit_constant(),
        finite_alignment: finite_alignment(n)?,
    })
}
