//! Solvability of `Dx = 1`: exact fraction-free elimination over big
//! integers, a floating minimum-norm least-squares route, and the spectral
//! sufficient condition.
//!
//! The decision problem runs in exact arithmetic: graph distances are
//! integers, and near-singular floating verdicts are exactly the interesting
//! structured cases. Bareiss elimination keeps intermediates integral, which
//! avoids the blowup of naive fraction arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::spectral::{self, full_spectrum, perron_eigenpair, DEFAULT_MAX_ITER, DEFAULT_TOL};

/// Residual threshold for declaring a floating solve consistent is
/// `FLOAT_CONSISTENCY_TOL * sqrt(n)`.
pub const FLOAT_CONSISTENCY_TOL: f64 = 1e-8;

/// Relative tolerance under which the second eigenvalue counts as
/// nonpositive; exact zero eigenvalues (e.g. `C_4`) must not flip the
/// hypothesis because of Jacobi rounding.
pub const LAMBDA2_SIGN_TOL: f64 = 1e-9;

/// One solution of `Dx = 1`, exact or floating.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Exact(Vec<BigRational>),
    Float(Vec<f64>),
}

impl Solution {
    pub fn len(&self) -> usize {
        match self {
            Solution::Exact(v) => v.len(),
            Solution::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Floating view of the solution, converting rationals when needed.
    pub fn to_floats(&self) -> Vec<f64> {
        match self {
            Solution::Exact(v) => v.iter().map(rational_to_f64).collect(),
            Solution::Float(v) => v.clone(),
        }
    }
}

/// Scalar that is exact for the rational route and floating otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rational_to_f64(r),
            Scalar::Float(x) => *x,
        }
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    let numer = bigint_to_f64(r.numer());
    let denom = bigint_to_f64(r.denom());
    numer / denom
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    // good enough for display/diagnostics; exact paths never round-trip
    x.to_string().parse().unwrap_or(f64::NAN)
}

/// Consistency verdict for `Dx = 1` with ranks and one witness solution.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub n: usize,
    pub consistent: bool,
    pub rank_d: usize,
    pub rank_aug: usize,
    pub invertible: bool,
    pub solution: Option<Solution>,
    /// `||Dx - 1||_2` when a floating solution was produced, 0 for a
    /// verified exact solution, absent when inconsistent on the exact route.
    pub residual: Option<f64>,
    pub sum_x: Option<Scalar>,
}

impl Serialize for SolveReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum JsonScalar {
            Text(String),
            Number(f64),
        }
        let mut s = serializer.serialize_struct("SolveReport", 8)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("consistent", &self.consistent)?;
        s.serialize_field("rank_D", &self.rank_d)?;
        s.serialize_field("rank_aug", &self.rank_aug)?;
        s.serialize_field("invertible", &self.invertible)?;
        s.serialize_field("residual", &self.residual)?;
        let sum_x = self.sum_x.as_ref().map(|v| match v {
            Scalar::Exact(r) => JsonScalar::Text(r.to_string()),
            Scalar::Float(x) => JsonScalar::Number(*x),
        });
        s.serialize_field("sum_x", &sum_x)?;
        let solution = self.solution.as_ref().map(|sol| match sol {
            Solution::Exact(v) => v
                .iter()
                .map(|r| JsonScalar::Text(r.to_string()))
                .collect::<Vec<_>>(),
            Solution::Float(v) => v.iter().map(|&x| JsonScalar::Number(x)).collect(),
        });
        s.serialize_field("solution", &solution)?;
        s.end()
    }
}

/// Decides `Dx = 1` exactly by fraction-free (Bareiss) elimination on the
/// augmented matrix `[D | 1]` over arbitrary-precision integers.
///
/// Reports exact ranks and consistency. When consistent, produces one exact
/// rational solution with free variables pinned to 0, verified by
/// substitution.
pub fn solve_exact(d: &DistanceMatrix) -> Result<SolveReport> {
    let n = d.n();
    let ints = d.integer_view().ok_or_else(|| {
        Error::InvalidParameter("exact solve requires an integer distance matrix".into())
    })?;

    // augmented matrix [D | 1]
    let mut aug: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigInt> = ints[i * n..(i + 1) * n]
                .iter()
                .map(|&e| BigInt::from(e))
                .collect();
            row.push(BigInt::one());
            row
        })
        .collect();

    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(rank, pivot);
        let (top, bottom) = aug.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            // the update applies to every row below the pivot, also when the
            // eliminated entry is already zero: the row still needs the
            // fraction-free rescaling pivot/prev
            for j in (col + 1)..=n {
                row[j] = (&prow[col] * &row[j] - &row[col] * &prow[j]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = aug[rank][col].clone();
        pivot_cols.push(col);
        rank += 1;
        if rank == n {
            break;
        }
    }

    let rank_d = rank;
    let consistent = aug[rank_d..].iter().all(|row| row[n].is_zero());
    let rank_aug = if consistent { rank_d } else { rank_d + 1 };
    let invertible = rank_d == n;

    let (solution, sum_x, residual) = if consistent {
        let mut x = vec![BigRational::zero(); n];
        for r in (0..rank_d).rev() {
            let pc = pivot_cols[r];
            let mut acc = BigRational::from_integer(aug[r][n].clone());
            for j in (pc + 1)..n {
                if !aug[r][j].is_zero() && !x[j].is_zero() {
                    acc -= BigRational::from_integer(aug[r][j].clone()) * &x[j];
                }
            }
            x[pc] = acc / BigRational::from_integer(aug[r][pc].clone());
        }
        // exact substitution check: an algebra bug here would silently
        // corrupt every downstream consistency statistic
        for i in 0..n {
            let mut acc = BigRational::zero();
            for (j, xj) in x.iter().enumerate() {
                if !xj.is_zero() {
                    acc += BigRational::from_integer(BigInt::from(ints[i * n + j])) * xj;
                }
            }
            assert!(
                acc.is_one(),
                "exact solution failed substitution at row {i}"
            );
        }
        let sum: BigRational = x.iter().sum();
        (
            Some(Solution::Exact(x)),
            Some(Scalar::Exact(sum)),
            Some(0.0),
        )
    } else {
        (None, None, None)
    };

    Ok(SolveReport {
        n,
        consistent,
        rank_d,
        rank_aug,
        invertible,
        solution,
        residual,
        sum_x,
    })
}

/// Solves `Dx = 1` in floating point: minimum-norm least-squares solution by
/// Householder QR with column pivoting followed by an LQ pass on the
/// trapezoidal factor (a complete orthogonal decomposition).
///
/// Consistency is declared iff the substituted residual satisfies
/// `||Dx - 1|| <= 1e-8 * sqrt(n)`.
pub fn solve_float(d: &DistanceMatrix) -> SolveReport {
    let n = d.n();
    let mut r = d.entries().to_vec();
    let mut qtb = vec![1.0f64; n];
    let mut perm: Vec<usize> = (0..n).collect();

    let at = |r: &[f64], i: usize, j: usize| r[i * n + j];

    // Householder QR with column pivoting; column norms are recomputed each
    // step, which is robust against downdating cancellation and cheap at
    // this scale.
    let mut diag_max = 0.0f64;
    let mut rank_limit = n;
    for k in 0..n {
        let mut best = k;
        let mut best_norm2 = -1.0;
        for j in k..n {
            let mut s = 0.0;
            for i in k..n {
                s += at(&r, i, j) * at(&r, i, j);
            }
            if s > best_norm2 {
                best_norm2 = s;
                best = j;
            }
        }
        if best != k {
            for i in 0..n {
                r.swap(i * n + k, i * n + best);
            }
            perm.swap(k, best);
        }

        let normx = best_norm2.max(0.0).sqrt();
        if normx == 0.0 {
            rank_limit = k;
            break;
        }
        let alpha = if at(&r, k, k) >= 0.0 { -normx } else { normx };
        let mut v = vec![0.0; n - k];
        v[0] = at(&r, k, k) - alpha;
        for i in (k + 1)..n {
            v[i - k] = at(&r, i, k);
        }
        let vtv: f64 = v.iter().map(|x| x * x).sum();
        if vtv > 0.0 {
            for j in (k + 1)..n {
                let mut dot = 0.0;
                for i in k..n {
                    dot += v[i - k] * at(&r, i, j);
                }
                let scale = 2.0 * dot / vtv;
                for i in k..n {
                    r[i * n + j] -= scale * v[i - k];
                }
            }
            let mut dot = 0.0;
            for i in k..n {
                dot += v[i - k] * qtb[i];
            }
            let scale = 2.0 * dot / vtv;
            for i in k..n {
                qtb[i] -= scale * v[i - k];
            }
        }
        r[k * n + k] = alpha;
        for i in (k + 1)..n {
            r[i * n + k] = 0.0;
        }
        diag_max = diag_max.max(alpha.abs());
    }

    let rank_tol = diag_max * n as f64 * f64::EPSILON;
    let mut rank = 0;
    while rank < rank_limit && at(&r, rank, rank).abs() > rank_tol {
        rank += 1;
    }

    // LQ pass on W = R[0..rank][0..n]: annihilate the block right of the
    // diagonal with reflectors applied from the right, keeping them to map
    // the triangular solve back to the minimum-norm point.
    let mut reflectors: Vec<Vec<f64>> = Vec::with_capacity(rank);
    for i in 0..rank {
        let width = n - i;
        let mut z = vec![0.0; width];
        let mut norm2 = 0.0;
        for j in i..n {
            norm2 += at(&r, i, j) * at(&r, i, j);
        }
        let normw = norm2.sqrt();
        let alpha = if at(&r, i, i) >= 0.0 { -normw } else { normw };
        z[0] = at(&r, i, i) - alpha;
        for j in (i + 1)..n {
            z[j - i] = at(&r, i, j);
        }
        let ztz: f64 = z.iter().map(|x| x * x).sum();
        if ztz > 0.0 {
            for row in (i + 1)..rank {
                let mut dot = 0.0;
                for j in i..n {
                    dot += at(&r, row, j) * z[j - i];
                }
                let scale = 2.0 * dot / ztz;
                for j in i..n {
                    r[row * n + j] -= scale * z[j - i];
                }
            }
        }
        r[i * n + i] = alpha;
        for j in (i + 1)..n {
            r[i * n + j] = 0.0;
        }
        reflectors.push(z);
    }

    // forward substitution L t = c
    let mut y = vec![0.0; n];
    for i in 0..rank {
        let mut acc = qtb[i];
        for j in 0..i {
            acc -= at(&r, i, j) * y[j];
        }
        y[i] = acc / at(&r, i, i);
    }
    // y = P_0 P_1 ... P_{rank-1} [t; 0]
    for i in (0..rank).rev() {
        let z = &reflectors[i];
        let ztz: f64 = z.iter().map(|x| x * x).sum();
        if ztz == 0.0 {
            continue;
        }
        let mut dot = 0.0;
        for j in i..n {
            dot += z[j - i] * y[j];
        }
        let scale = 2.0 * dot / ztz;
        for j in i..n {
            y[j] -= scale * z[j - i];
        }
    }

    let mut x = vec![0.0; n];
    for (pos, &orig) in perm.iter().enumerate() {
        x[orig] = y[pos];
    }

    // honest residual by direct substitution into D
    let mut res2 = 0.0;
    for i in 0..n {
        let ri = spectral::dot(d.row(i), &x) - 1.0;
        res2 += ri * ri;
    }
    let residual = res2.sqrt();
    let consistent = residual <= FLOAT_CONSISTENCY_TOL * (n as f64).sqrt();
    let rank_aug = if consistent { rank } else { rank + 1 };
    let sum_x = x.iter().sum::<f64>();

    SolveReport {
        n,
        consistent,
        rank_d: rank,
        rank_aug,
        invertible: rank == n,
        solution: Some(Solution::Float(x)),
        residual: Some(residual),
        sum_x: Some(Scalar::Float(sum_x)),
    }
}

/// The spectral sufficient condition for solvability of `Dx = 1`:
/// with eigenvalues `lambda_1 > 0 >= lambda_2 >= ...` and unit Perron vector
/// `v`, solvability follows from
/// `1 - <v, 1/sqrt(n)>^2 < |lambda_2| / (lambda_1 - lambda_2)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Prop1Report {
    pub lambda1: f64,
    pub lambda2: f64,
    /// `lambda_1 > 0` and `lambda_2 <= 0` up to the sign tolerance.
    pub hypothesis_ok: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub condition_holds: bool,
}

/// Evaluates the condition from the full Jacobi spectrum and the Perron
/// eigenpair. Fails when `n` exceeds the Jacobi cap.
pub fn prop1_condition(d: &DistanceMatrix) -> Result<Prop1Report> {
    let spectrum = full_spectrum(d)?;
    let p = perron_eigenpair(d, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
    let n = d.n() as f64;
    let alignment = (p.vector.iter().sum::<f64>() / n.sqrt()).min(1.0);
    Ok(prop1_from_spectrum(&spectrum, alignment))
}

/// Same condition from an already computed sorted spectrum and Perron
/// alignment.
pub fn prop1_from_spectrum(spectrum: &[f64], alignment: f64) -> Prop1Report {
    let lambda1 = spectrum[0];
    let lambda2 = spectrum[1];
    // eigenvalues within the sign tolerance of zero are treated as exactly
    // zero, so rhs degenerates to 0 and the condition can never hold there
    let lambda2_eff = if lambda2.abs() <= LAMBDA2_SIGN_TOL * lambda1 {
        0.0
    } else {
        lambda2
    };
    let hypothesis_ok = lambda1 > 0.0 && lambda2_eff <= 0.0;
    let lhs = (1.0 - alignment * alignment).max(0.0);
    let rhs = if hypothesis_ok {
        lambda2_eff.abs() / (lambda1 - lambda2_eff)
    } else {
        f64::NAN
    };
    let condition_holds = hypothesis_ok && lhs < rhs;
    Prop1Report {
        lambda1,
        lambda2,
        hypothesis_ok,
        lhs,
        rhs,
        condition_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{graph_distance_matrix, metric_distance_matrix};
    use crate::graph::{gen_complete, gen_cycle, gen_path, Graph};
    use crate::metric::{metric_from_points, FiniteMetric, Norm};

    fn rational(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn complete_graph_exact() {
        for n in [2usize, 3, 7, 20] {
            let d = graph_distance_matrix(&gen_complete(n).unwrap()).unwrap();
            let rep = solve_exact(&d).unwrap();
            assert!(rep.consistent && rep.invertible);
            assert_eq!(rep.rank_d, n);
            let Solution::Exact(x) = rep.solution.unwrap() else {
                panic!()
            };
            for xi in &x {
                assert_eq!(*xi, rational(1, n as i64 - 1));
            }
            match rep.sum_x.unwrap() {
                Scalar::Exact(s) => assert_eq!(s, rational(n as i64, n as i64 - 1)),
                _ => panic!(),
            }
        }
    }

    #[test]
    fn path_3_exact() {
        let d = graph_distance_matrix(&gen_path(3).unwrap()).unwrap();
        let rep = solve_exact(&d).unwrap();
        assert!(rep.consistent && rep.invertible);
        let Solution::Exact(x) = rep.solution.unwrap() else {
            panic!()
        };
        assert_eq!(x, vec![rational(1, 2), rational(0, 1), rational(1, 2)]);
    }

    #[test]
    fn cycle_4_singular_but_solvable() {
        let d = graph_distance_matrix(&gen_cycle(4).unwrap()).unwrap();
        let rep = solve_exact(&d).unwrap();
        assert_eq!(rep.rank_d, 3);
        assert_eq!(rep.rank_aug, 3);
        assert!(rep.consistent);
        assert!(!rep.invertible);
        // the exact witness pins free variables to 0; the minimum-norm
        // floating witness below is the constant vector 1/4
        let float = solve_float(&d);
        assert!(float.consistent);
        assert_eq!(float.rank_d, 3);
        let Some(Solution::Float(x)) = float.solution else {
            panic!()
        };
        for xi in &x {
            assert!((xi - 0.25).abs() < 1e-9, "min-norm entry {xi}");
        }
    }

    #[test]
    fn unsolvable_graph_detected() {
        // K_7 minus a triangle on {2,3,4}: the distance matrix has rank 6
        // while the augmented matrix has rank 7, so Dx = 1 has no solution.
        // One of the rare inconsistent cases among small graphs.
        let edges: Vec<(u32, u32)> = vec![
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 5),
            (2, 6),
            (3, 5),
            (3, 6),
            (4, 5),
            (4, 6),
            (5, 6),
        ];
        let g = Graph::from_edges(7, &edges).unwrap();
        let d = graph_distance_matrix(&g).unwrap();
        let rep = solve_exact(&d).unwrap();
        assert_eq!(rep.rank_d, 6);
        assert_eq!(rep.rank_aug, 7);
        assert!(!rep.consistent);
        assert!(!rep.invertible);
        assert!(rep.solution.is_none());
        assert!(rep.residual.is_none());

        // the floating route agrees
        let float = solve_float(&d);
        assert!(!float.consistent);
        assert!(float.residual.unwrap() > FLOAT_CONSISTENCY_TOL * 7.0f64.sqrt());
    }

    #[test]
    fn two_point_float() {
        let m = metric_from_points(&[vec![0.0], vec![1.0]], Norm::Euclidean).unwrap();
        let d = metric_distance_matrix(&m);
        let rep = solve_float(&d);
        assert!(rep.consistent);
        let Some(Solution::Float(x)) = rep.solution else {
            panic!()
        };
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
        assert!(rep.residual.unwrap() < 1e-12);
    }

    #[test]
    fn three_point_metric_float() {
        let m = FiniteMetric::new(3, vec![0.0, 0.5, 1.0, 0.5, 0.0, 1.0, 1.0, 1.0, 0.0]).unwrap();
        let d = metric_distance_matrix(&m);
        let rep = solve_float(&d);
        assert!(rep.consistent, "residual {:?}", rep.residual);
        assert!(rep.residual.unwrap() <= 1e-8);
        // verify by substitution
        let Some(Solution::Float(x)) = rep.solution else {
            panic!()
        };
        for i in 0..3 {
            let s: f64 = (0..3).map(|j| d.get(i, j) * x[j]).sum();
            assert!((s - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn float_agrees_with_exact_on_graphs() {
        for g in [
            gen_path(6).unwrap(),
            gen_cycle(6).unwrap(),
            crate::graph::gen_star(5).unwrap(),
            crate::graph::gen_sun(4).unwrap(),
            crate::graph::gen_broom(3, 3).unwrap(),
        ] {
            let d = graph_distance_matrix(&g).unwrap();
            let exact = solve_exact(&d).unwrap();
            let float = solve_float(&d);
            assert_eq!(exact.consistent, float.consistent);
            if exact.consistent {
                assert!(float.residual.unwrap() <= 1e-8 * (d.n() as f64).sqrt());
            }
        }
    }

    #[test]
    fn prop1_k3() {
        let d = graph_distance_matrix(&gen_complete(3).unwrap()).unwrap();
        let rep = prop1_condition(&d).unwrap();
        assert!(rep.hypothesis_ok);
        assert!((rep.lambda1 - 2.0).abs() < 1e-9);
        assert!((rep.lambda2 + 1.0).abs() < 1e-9);
        assert!(rep.lhs.abs() < 1e-12);
        assert!((rep.rhs - 1.0 / 3.0).abs() < 1e-9);
        assert!(rep.condition_holds);
    }

    #[test]
    fn prop1_c4_condition_fails_but_solvable() {
        let d = graph_distance_matrix(&gen_cycle(4).unwrap()).unwrap();
        let rep = prop1_condition(&d).unwrap();
        assert!(rep.hypothesis_ok);
        // lambda2 = 0 exactly: rhs degenerates to 0 and 0 < 0 fails
        assert!(rep.lambda2.abs() < 1e-9);
        assert_eq!(rep.rhs, 0.0);
        assert!(rep.lhs < 1e-12);
        assert!(!rep.condition_holds);
        assert!(solve_exact(&d).unwrap().consistent);
    }

    #[test]
    fn prop1_p3_consistency_link() {
        let d = graph_distance_matrix(&gen_path(3).unwrap()).unwrap();
        let rep = prop1_condition(&d).unwrap();
        assert!(rep.hypothesis_ok);
        if rep.condition_holds {
            assert!(solve_exact(&d).unwrap().consistent);
        }
        // the P_3 numbers: lhs ~ 0.0189, rhs ~ 0.2113, so the condition holds
        assert!((rep.lhs - 0.018885).abs() < 1e-4);
        assert!((rep.rhs - 0.211325).abs() < 1e-4);
        assert!(rep.condition_holds);
    }

    #[test]
    fn solvability_invariant_under_relabeling() {
        let g = crate::graph::gen_broom(4, 3).unwrap();
        let d = graph_distance_matrix(&g).unwrap();
        let base = solve_exact(&d).unwrap();

        // relabel with a fixed permutation
        let perm: Vec<u32> = vec![3, 7, 1, 0, 5, 2, 6, 4];
        let edges: Vec<(u32, u32)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        let rg = Graph::from_edges(g.n(), &edges).unwrap();
        let rd = graph_distance_matrix(&rg).unwrap();
        let relabeled = solve_exact(&rd).unwrap();
        assert_eq!(base.consistent, relabeled.consistent);
        assert_eq!(base.rank_d, relabeled.rank_d);
    }

    #[test]
    fn solve_exact_requires_integer_view() {
        let m = FiniteMetric::new(2, vec![0.0, 0.5, 0.5, 0.0]).unwrap();
        let d = metric_distance_matrix(&m);
        assert!(solve_exact(&d).is_err());
    }

    #[test]
    fn report_json_schema() {
        let d = graph_distance_matrix(&gen_path(3).unwrap()).unwrap();
        let rep = solve_exact(&d).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let expected = [
            "n",
            "consistent",
            "rank_D",
            "rank_aug",
            "invertible",
            "residual",
            "sum_x",
            "solution",
        ];
        let mut last = 0;
        for key in expected {
            let pos = json
                .find(&format!("\"{key}\":"))
                .unwrap_or_else(|| panic!("missing {key}"));
            assert!(pos >= last, "field {key} out of order in {json}");
            last = pos;
        }
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["solution"], serde_json::json!(["1/2", "0", "1/2"]));
        assert_eq!(value["sum_x"], serde_json::json!("1"));
    }
}
