//! Undirected simple graphs: family generators, seeded random graphs, and
//! edge-list text I/O.
//!
//! Vertex ids are 0-indexed everywhere. Generators document which vertex is
//! the center or hub so callers can address specific entries of derived
//! matrices.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, ParseError, Result};

/// Simple undirected graph stored as per-vertex sorted neighbor lists.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an explicit edge list, validating simplicity.
    ///
    /// Edges may be given in either orientation; self-loops, duplicates and
    /// out-of-range ids are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "vertex count must be positive".into(),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(ParseError::SelfLoop { line: 0, v: u }.into());
            }
            for id in [u, v] {
                if id as usize >= n {
                    return Err(ParseError::VertexOutOfRange {
                        line: 0,
                        id: id as u64,
                        n,
                    }
                    .into());
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut g = Graph { n, adj };
        g.sort_adjacency();
        for v in 0..n {
            if g.adj[v].windows(2).any(|w| w[0] == w[1]) {
                let u = g.adj[v]
                    .windows(2)
                    .find(|w| w[0] == w[1])
                    .map(|w| w[0])
                    .unwrap();
                let (a, b) = if (v as u32) < u {
                    (v as u32, u)
                } else {
                    (u, v as u32)
                };
                return Err(ParseError::DuplicateEdge {
                    line: 0,
                    u: a,
                    v: b,
                }
                .into());
            }
        }
        Ok(g)
    }

    fn from_adjacency_unchecked(adj: Vec<Vec<u32>>) -> Self {
        let mut g = Graph { n: adj.len(), adj };
        g.sort_adjacency();
        g
    }

    fn sort_adjacency(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Single-source BFS distances; `u32::MAX` marks unreachable vertices.
    pub(crate) fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        dist[source] = 0;
        queue.push_back(source as u32);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in &self.adj[u as usize] {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// True iff every vertex is reachable from vertex 0. A single vertex is
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != u32::MAX)
    }

    /// Structural invariant check: symmetric adjacency, no self-loops, no
    /// duplicates, ids in range. Run by tests on every generator.
    pub fn check_invariants(&self) -> Result<()> {
        for u in 0..self.n {
            let list = &self.adj[u];
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "adjacency of vertex {u} is not strictly sorted"
                )));
            }
            for &v in list {
                if v as usize >= self.n {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {u} has out-of-range neighbor {v}"
                    )));
                }
                if v as usize == u {
                    return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
                }
                if self.adj[v as usize].binary_search(&(u as u32)).is_err() {
                    return Err(Error::InvalidParameter(format!(
                        "edge ({u}, {v}) is not symmetric"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Path graph `P_n`: vertices `0..n-1`, edges `{i, i+1}`.
pub fn gen_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "path size must be at least 1".into(),
        ));
    }
    let mut adj = vec![Vec::new(); n];
    for i in 0..n.saturating_sub(1) {
        adj[i].push(i as u32 + 1);
        adj[i + 1].push(i as u32);
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Star graph `K_{1,leaves}`: vertex 0 is the center, adjacent to all others.
pub fn gen_star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::InvalidParameter("star needs at least 1 leaf".into()));
    }
    let n = leaves + 1;
    let mut adj = vec![Vec::new(); n];
    for l in 1..n {
        adj[0].push(l as u32);
        adj[l].push(0);
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Cycle graph `C_n`, `n >= 3`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "cycle size must be at least 3".into(),
        ));
    }
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        let j = (i + 1) % n;
        adj[i].push(j as u32);
        adj[j].push(i as u32);
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Complete graph `K_n`.
pub fn gen_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "complete graph size must be at least 1".into(),
        ));
    }
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            adj[i].push(j as u32);
            adj[j].push(i as u32);
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Complete sun (trampoline) graph on `2h` vertices, `h >= 3`.
///
/// Hub vertices `0..h-1` form `K_h`; outer vertex `h + i` is adjacent to hub
/// `i` and hub `(i + 1) % h`, so every outer vertex has degree 2.
pub fn gen_sun(h: usize) -> Result<Graph> {
    if h < 3 {
        return Err(Error::InvalidParameter(
            "sun graph needs hub size at least 3".into(),
        ));
    }
    let n = 2 * h;
    let mut adj = vec![Vec::new(); n];
    for i in 0..h {
        for j in (i + 1)..h {
            adj[i].push(j as u32);
            adj[j].push(i as u32);
        }
    }
    for i in 0..h {
        let outer = h + i;
        for hub in [i, (i + 1) % h] {
            adj[outer].push(hub as u32);
            adj[hub].push(outer as u32);
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Broom (comet) graph: vertex 0 is the center with `leaves` pendant
/// neighbors `1..=leaves`, and a path of `tail` further vertices attached at
/// the center. The comet tip is the last vertex, `leaves + tail`.
pub fn gen_broom(leaves: usize, tail: usize) -> Result<Graph> {
    if leaves == 0 || tail == 0 {
        return Err(Error::InvalidParameter(
            "broom needs at least 1 leaf and 1 tail vertex".into(),
        ));
    }
    let n = leaves + tail + 1;
    let mut adj = vec![Vec::new(); n];
    for l in 1..=leaves {
        adj[0].push(l as u32);
        adj[l].push(0);
    }
    let mut prev = 0usize;
    for v in (leaves + 1)..n {
        adj[prev].push(v as u32);
        adj[v].push(prev as u32);
        prev = v;
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Erdős–Rényi graph `G(n, p)`: each of the `n(n-1)/2` pairs is an edge
/// independently with probability `p`.
///
/// The pseudorandom stream is fully determined by `seed`; the same
/// `(n, p, seed)` always yields the same graph. Pairs are visited in
/// lexicographic order with one uniform draw each, which keeps the sampling
/// exactly reproducible at desk scale.
pub fn gen_erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "graph size must be at least 1".into(),
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                adj[i].push(j as u32);
                adj[j].push(i as u32);
            }
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Graph families catalogued for scans and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Star { leaves: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Sun { hub: usize },
    Broom { leaves: usize, tail: usize },
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Path { n } => gen_path(n),
            Family::Star { leaves } => gen_star(leaves),
            Family::Cycle { n } => gen_cycle(n),
            Family::Complete { n } => gen_complete(n),
            Family::Sun { hub } => gen_sun(hub),
            Family::Broom { leaves, tail } => gen_broom(leaves, tail),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Star { .. } => "star",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Sun { .. } => "sun",
            Family::Broom { .. } => "broom",
        }
    }

    /// Parameter string without commas, so CSV rows never need quoting.
    pub fn params(&self) -> String {
        match *self {
            Family::Path { n } | Family::Cycle { n } | Family::Complete { n } => format!("n={n}"),
            Family::Star { leaves } => format!("leaves={leaves}"),
            Family::Sun { hub } => format!("hub={hub}"),
            Family::Broom { leaves, tail } => format!("leaves={leaves};tail={tail}"),
        }
    }

    /// Total vertex count of the generated graph.
    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Path { n } | Family::Cycle { n } | Family::Complete { n } => n,
            Family::Star { leaves } => leaves + 1,
            Family::Sun { hub } => 2 * hub,
            Family::Broom { leaves, tail } => leaves + tail + 1,
        }
    }
}

/// Parses the edge-list text format: first line `n m`, then `m` lines `u v`
/// with `0 <= u < v < n`. Duplicate and reversed edges are rejected.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::BadHeader { line: 1 })?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(ParseError::BadHeader { line: header_line })?;
    let m: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(ParseError::BadHeader { line: header_line })?;
    if parts.next().is_some() || n == 0 {
        return Err(ParseError::BadHeader { line: header_line }.into());
    }

    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut count = 0usize;
    for (line, l) in lines {
        count += 1;
        if count > m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                got: count,
            }
            .into());
        }
        let mut parts = l.split_whitespace();
        let u: u64 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(ParseError::BadEdge { line })?;
        let v: u64 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(ParseError::BadEdge { line })?;
        if parts.next().is_some() {
            return Err(ParseError::BadEdge { line }.into());
        }
        for id in [u, v] {
            if id >= n as u64 {
                return Err(ParseError::VertexOutOfRange { line, id, n }.into());
            }
        }
        let (u, v) = (u as u32, v as u32);
        if u == v {
            return Err(ParseError::SelfLoop { line, v }.into());
        }
        if u > v {
            return Err(ParseError::ReversedEdge { line, u, v }.into());
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateEdge { line, u, v }.into());
        }
        edges.push((u, v));
    }
    if count != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            got: count,
        }
        .into());
    }
    Graph::from_edges(n, &edges)
}

/// Writes the canonical edge-list form: header, then edges sorted with
/// `u < v`, LF line endings.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
