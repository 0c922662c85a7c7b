//! Shared corpora and independent oracles for the integration and acceptance
//! suites. Everything here is deterministic: corpus seeds are fixed
//! constants, and oracles are written independently of the library paths
//! they check.
#![allow(dead_code)] // each test binary uses a different subset

use std::sync::OnceLock;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use distmat::experiments::mix_seed;
use distmat::{
    gen_broom, gen_complete, gen_cycle, gen_erdos_renyi, gen_path, gen_star, gen_sun,
    metric_from_points, DistanceMatrix, Graph, Norm,
};

pub const ER_CORPUS_SEED: u64 = 0xD15C_7A9C_E001;
pub const METRIC_CORPUS_SEED: u64 = 0x3E7A_1C00_5EED;

/// One corpus member with a readable label for failure messages.
pub struct CorpusGraph {
    pub label: String,
    pub graph: Graph,
}

/// Deterministic family corpus: every path, star, cycle, complete graph and
/// sun with at most 200 vertices, every broom with at most 100 vertices, and
/// a spread of larger brooms up to 200.
pub fn family_corpus() -> &'static [CorpusGraph] {
    static CORPUS: OnceLock<Vec<CorpusGraph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut out = Vec::new();
        for n in 2..=200 {
            out.push(CorpusGraph {
                label: format!("path(n={n})"),
                graph: gen_path(n).unwrap(),
            });
        }
        for leaves in 1..=199 {
            out.push(CorpusGraph {
                label: format!("star(leaves={leaves})"),
                graph: gen_star(leaves).unwrap(),
            });
        }
        for n in 3..=200 {
            out.push(CorpusGraph {
                label: format!("cycle(n={n})"),
                graph: gen_cycle(n).unwrap(),
            });
        }
        for n in 2..=200 {
            out.push(CorpusGraph {
                label: format!("complete(n={n})"),
                graph: gen_complete(n).unwrap(),
            });
        }
        for hub in 3..=100 {
            out.push(CorpusGraph {
                label: format!("sun(hub={hub})"),
                graph: gen_sun(hub).unwrap(),
            });
        }
        for n in 3..=100usize {
            for leaves in 1..=(n - 2) {
                let tail = n - 1 - leaves;
                out.push(CorpusGraph {
                    label: format!("broom(leaves={leaves};tail={tail})"),
                    graph: gen_broom(leaves, tail).unwrap(),
                });
            }
        }
        // coarse large-broom grid up to the 200-vertex limit
        for n in [120usize, 140, 160, 180, 200] {
            for leaves in [1, 2, 5, 10, 20, 40, 60, 80, 100, 120, 150, n - 2] {
                if leaves > n - 2 {
                    continue;
                }
                let tail = n - 1 - leaves;
                out.push(CorpusGraph {
                    label: format!("broom(leaves={leaves};tail={tail})"),
                    graph: gen_broom(leaves, tail).unwrap(),
                });
            }
        }
        out
    })
}

/// 500 seeded connected Erdős–Rényi samples with n <= 100: 20 per cell over
/// n in {10, 25, 50, 75, 100} x p in {0.15, 0.3, 0.5, 0.7, 0.9}, drawn with
/// reject-resampling until connected.
pub fn er_corpus() -> &'static [CorpusGraph] {
    static CORPUS: OnceLock<Vec<CorpusGraph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let ns = [10usize, 25, 50, 75, 100];
        let ps = [0.15, 0.3, 0.5, 0.7, 0.9];
        let mut out = Vec::new();
        let mut cell = 0u64;
        for &n in &ns {
            for &p in &ps {
                for trial in 0..20u64 {
                    let graph = (0..1000u64)
                        .map(|attempt| {
                            let seed = mix_seed(ER_CORPUS_SEED, cell * 100 + trial, attempt);
                            gen_erdos_renyi(n, p, seed).unwrap()
                        })
                        .find(Graph::is_connected)
                        .expect("a connected sample within the resample budget");
                    out.push(CorpusGraph {
                        label: format!("er(n={n};p={p};trial={trial})"),
                        graph,
                    });
                }
                cell += 1;
            }
        }
        assert_eq!(out.len(), 500);
        out
    })
}

/// 100 random point-cloud metrics: 5..=60 points in dimension 2, 3, or 5
/// under rotating norms, coordinates uniform in [0, 1).
pub fn metric_corpus() -> &'static [(String, DistanceMatrix)] {
    static CORPUS: OnceLock<Vec<(String, DistanceMatrix)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let dims = [2usize, 3, 5];
        let norms = [Norm::Euclidean, Norm::Manhattan, Norm::Chebyshev];
        (0..100usize)
            .map(|i| {
                let n_points = 5 + (i * 7) % 56;
                let dim = dims[i % 3];
                let norm = norms[(i / 3) % 3];
                let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(METRIC_CORPUS_SEED, i as u64, 0));
                let points: Vec<Vec<f64>> = (0..n_points)
                    .map(|_| (0..dim).map(|_| rng.random::<f64>()).collect())
                    .collect();
                let metric = metric_from_points(&points, norm).unwrap();
                let label = format!("cloud(i={i};n={n_points};dim={dim};norm={norm:?})");
                (label, distmat::metric_distance_matrix(&metric))
            })
            .collect()
    })
}

/// Independent all-pairs shortest-path oracle: Floyd–Warshall over the
/// adjacency, no BFS involved.
pub fn floyd_warshall(g: &Graph) -> Option<Vec<u64>> {
    let n = g.n();
    const INF: u64 = u64::MAX / 4;
    let mut dist = vec![INF; n * n];
    for v in 0..n {
        dist[v * n + v] = 0;
        for &w in g.neighbors(v) {
            dist[v * n + w as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = dist[i * n + k];
            if dik >= INF {
                continue;
            }
            for j in 0..n {
                let through = dik + dist[k * n + j];
                if through < dist[i * n + j] {
                    dist[i * n + j] = through;
                }
            }
        }
    }
    if dist.iter().any(|&d| d >= INF) {
        return None;
    }
    Some(dist)
}
