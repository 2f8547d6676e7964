//! Simple connected undirected graphs with a canonical arc indexing.
//!
//! Every edge `{u, v}` with `u < v` is stored once, in lexicographic order.
//! Edge `i` yields the two arcs `2i = (u, v)` and `2i + 1 = (v, u)`, so the
//! inverse of arc `j` is always `j ^ 1`. All matrix layouts downstream use
//! this ordering, which makes dumps reproducible across runs.

use std::collections::{BTreeSet, VecDeque};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum number of rejected samples before a random generator gives up.
pub const MAX_REJECTIONS: usize = 1_000_000;

/// An oriented edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub origin: usize,
    pub terminus: usize,
}

/// A simple connected undirected graph.
///
/// Immutable after construction; the invariants (no loops, no duplicate
/// edges, connectivity, involutive arc inverse, degree sum `2m`) are checked
/// by every constructor.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    name: String,
    n: usize,
    edges: Vec<(usize, usize)>,
    arcs: Vec<Arc>,
    degrees: Vec<usize>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
    vertex_transitive: bool,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Edges are reoriented to
    /// `u < v` and sorted; loops, duplicates and disconnected inputs are
    /// rejected.
    pub fn from_edges(name: impl Into<String>, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(name.into(), n, edges, false)
    }

    fn build(
        name: String,
        n: usize,
        edges: &[(usize, usize)],
        vertex_transitive: bool,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph must have at least one vertex".into(),
            ));
        }
        let mut canon = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            if !canon.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge {{{u},{v}}}"
                )));
            }
        }
        let edges: Vec<(usize, usize)> = canon.into_iter().collect();

        let mut arcs = Vec::with_capacity(2 * edges.len());
        let mut degrees = vec![0usize; n];
        let mut out_arcs = vec![Vec::new(); n];
        let mut in_arcs = vec![Vec::new(); n];
        for &(u, v) in &edges {
            let fwd = arcs.len();
            arcs.push(Arc {
                origin: u,
                terminus: v,
            });
            arcs.push(Arc {
                origin: v,
                terminus: u,
            });
            degrees[u] += 1;
            degrees[v] += 1;
            out_arcs[u].push(fwd);
            out_arcs[v].push(fwd + 1);
            in_arcs[v].push(fwd);
            in_arcs[u].push(fwd + 1);
        }

        let g = Graph {
            name,
            n,
            edges,
            arcs,
            degrees,
            out_arcs,
            in_arcs,
            vertex_transitive,
        };
        if !g.is_connected() {
            return Err(Error::InvalidParameter(format!(
                "graph '{}' is not connected",
                g.name
            )));
        }
        debug_assert_eq!(g.degrees.iter().sum::<usize>(), 2 * g.m());
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.out_arcs[v] {
                let w = self.arcs[e].terminus;
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Replaces the display label; structure is untouched.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Number of arcs, `2m`.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, e: usize) -> Arc {
        self.arcs[e]
    }

    /// Index of the reversed arc.
    #[inline]
    pub fn inverse(e: usize) -> usize {
        e ^ 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Arcs leaving `v`.
    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    /// Arcs entering `v`.
    pub fn in_arcs(&self, v: usize) -> &[usize] {
        &self.in_arcs[v]
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// The common degree `q + 1` if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees[0];
        self.degrees.iter().all(|&x| x == d).then_some(d)
    }

    /// Betti number `m - n + 1`.
    pub fn betti(&self) -> i64 {
        self.m() as i64 - self.n as i64 + 1
    }

    /// True for graphs produced by a vertex-transitive family constructor.
    /// No automorphism search is performed.
    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_transitive
    }

    /// Serializes to the canonical JSON graph format.
    pub fn to_json(&self) -> String {
        let file = GraphFile {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&file).expect("graph file serialization cannot fail")
    }

    /// Parses the canonical JSON graph format. Beyond the graph invariants,
    /// the reader insists on `u < v` and lexicographically sorted edges.
    pub fn from_json(name: impl Into<String>, text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        for w in file.edges.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidParameter(format!(
                    "edges not strictly sorted: {:?} then {:?}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(e) = file.edges.iter().find(|e| e[0] >= e[1]) {
            return Err(Error::InvalidParameter(format!(
                "edge {e:?} violates u < v"
            )));
        }
        let edges: Vec<(usize, usize)> = file.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(name, file.n, &edges)
    }

    /// Reads a graph file; the graph is named after the file stem.
    pub fn read_json(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let name = path.file_stem().map_or_else(
            || path.display().to_string(),
            |s| s.to_string_lossy().into_owned(),
        );
        Graph::from_json(name, &text)
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// The `N`-cycle `C_N`, `N >= 3`.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs N >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(format!("C{n}"), n, &edges, true)
}

/// The `d`-dimensional torus `T^d_N` on `{0..N-1}^d`. Vertex
/// `(i_0, .., i_{d-1})` has index `sum_j i_j N^j`.
pub fn build_torus(d: usize, n: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "torus dimension must be >= 1".into(),
        ));
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "torus needs N >= 3, got {n}"
        )));
    }
    let total = n
        .checked_pow(d as u32)
        .ok_or_else(|| Error::InvalidParameter("torus too large".into()))?;
    let mut edges = Vec::with_capacity(d * total);
    for v in 0..total {
        let mut stride = 1;
        for _ in 0..d {
            let coord = (v / stride) % n;
            let w = v - coord * stride + ((coord + 1) % n) * stride;
            edges.push((v, w));
            stride *= n;
        }
    }
    Graph::build(format!("T{d}_{n}"), total, &edges, true)
}

/// Circulant graph: `i ~ i ± s (mod N)` for each offset `s`.
pub fn build_circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "circulant needs N >= 3, got {n}"
        )));
    }
    let set: BTreeSet<usize> = offsets.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::InvalidParameter(
            "circulant offset set is empty".into(),
        ));
    }
    if let Some(&s) = set.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(Error::InvalidParameter(format!(
            "offset {s} outside 1..={}",
            n / 2
        )));
    }
    let g = set.iter().fold(n, |acc, &s| gcd(acc, s));
    if g != 1 {
        return Err(Error::InvalidParameter(format!(
            "circulant({n}; {set:?}) is disconnected (gcd {g})"
        )));
    }
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for &s in &set {
            let j = (i + s) % n;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let label = set
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",");
    Graph::build(format!("circulant({n};{label})"), n, &edges, true)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Complete graph `K_n`, `n >= 3`.
pub fn build_complete(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "complete graph needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::build(format!("K{n}"), n, &edges, true)
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn build_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::build("petersen".into(), 10, &edges, true).expect("petersen graph is valid")
}

/// Resolves `complete(n)`, `K<n>` or `petersen`.
pub fn build_named(name: &str) -> Result<Graph> {
    let lower = name.trim().to_ascii_lowercase();
    if lower == "petersen" {
        return Ok(build_petersen());
    }
    let arg = lower
        .strip_prefix("complete(")
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| lower.strip_prefix('k'));
    match arg.and_then(|s| s.trim().parse::<usize>().ok()) {
        Some(k) => build_complete(k),
        None => Err(Error::InvalidParameter(format!(
            "unknown graph name '{name}'"
        ))),
    }
}

/// Uniform-ish simple connected `k`-regular graph from the pairing
/// (configuration) model, rejecting loops, multi-edges and disconnected
/// outcomes. The generator is ChaCha8 seeded through `seed_from_u64`.
pub fn build_random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k < 2 || n <= k || !(n * k).is_multiple_of(2) {
        return Err(Error::GenerationFailure(format!(
            "infeasible random regular parameters n={n}, k={k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n * k).map(|p| p / k).collect();
    'attempt: for _ in 0..MAX_REJECTIONS {
        points.shuffle(&mut rng);
        let mut edges = BTreeSet::new();
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !edges.insert((u.min(v), u.max(v))) {
                continue 'attempt;
            }
        }
        let edges: Vec<_> = edges.into_iter().collect();
        if let Ok(g) = Graph::build(format!("rr(n={n},k={k},seed={seed})"), n, &edges, false) {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailure(format!(
        "random regular n={n}, k={k}: {MAX_REJECTIONS} rejections"
    )))
}

/// Erdős–Rényi `G(n, p)` conditioned on connectivity by rejection.
pub fn build_random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n < 2 || !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::GenerationFailure(format!(
            "infeasible random graph parameters n={n}, p={edge_prob}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_REJECTIONS {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random::<f64>() < edge_prob {
                    edges.push((i, j));
                }
            }
        }
        if let Ok(g) = Graph::build(
            format!("gnp(n={n},p={edge_prob},seed={seed})"),
            n,
            &edges,
            false,
        ) {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailure(format!(
        "random connected n={n}, p={edge_prob}: {MAX_REJECTIONS} rejections"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_basics() {
        let g = build_cycle(3).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.degrees(), &[2, 2, 2]);
        assert!(build_cycle(2).is_err());
    }

    #[test]
    fn torus_counts() {
        let g = build_torus(2, 3).unwrap();
        assert_eq!((g.n(), g.m()), (9, 18));
        let g = build_torus(3, 4).unwrap();
        assert_eq!((g.n(), g.m()), (64, 192));
        assert!(g.degrees().iter().all(|&d| d == 6));
        assert!(build_torus(2, 2).is_err());
    }

    #[test]
    fn one_dimensional_torus_is_the_cycle() {
        for n in 3..10 {
            assert_eq!(
                build_torus(1, n).unwrap().edges(),
                build_cycle(n).unwrap().edges()
            );
        }
    }

    #[test]
    fn circulant_cases() {
        assert_eq!(
            build_circulant(5, &[1]).unwrap().edges(),
            build_cycle(5).unwrap().edges()
        );
        assert_eq!(
            build_circulant(5, &[1, 2]).unwrap().edges(),
            build_complete(5).unwrap().edges()
        );
        assert!(build_circulant(8, &[2]).is_err());
        let g = build_circulant(8, &[1, 4]).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
    }

    #[test]
    fn named_graphs() {
        let k4 = build_named("complete(4)").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let p = build_named("petersen").unwrap();
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(p.m() - p.n(), 5);
        assert!(build_named("complete(2)").is_err());
        assert!(build_named("heawood").is_err());
    }

    #[test]
    fn random_regular_cases() {
        let g = build_random_regular(6, 2, 1).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g.regular_degree(), Some(2));
        let g = build_random_regular(8, 3, 7).unwrap();
        assert_eq!(g.m(), 12);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g, build_random_regular(8, 3, 7).unwrap());
        assert!(matches!(
            build_random_regular(5, 3, 0),
            Err(Error::GenerationFailure(_))
        ));
    }

    #[test]
    fn arc_pairing() {
        let g = build_petersen();
        for (e, arc) in g.arcs().iter().enumerate() {
            let inv = g.arc(Graph::inverse(e));
            assert_ne!(Graph::inverse(e), e);
            assert_eq!(Graph::inverse(Graph::inverse(e)), e);
            assert_eq!((inv.origin, inv.terminus), (arc.terminus, arc.origin));
            if e % 2 == 0 {
                assert!(arc.origin < arc.terminus);
            }
        }
    }

    #[test]
    fn json_reader_rejects_bad_files() {
        assert!(Graph::from_json("x", r#"{"n":3,"edges":[[0,1],[1,2]]}"#).is_ok());
        // unsorted
        assert!(Graph::from_json("x", r#"{"n":3,"edges":[[1,2],[0,1]]}"#).is_err());
        // reversed orientation
        assert!(Graph::from_json("x", r#"{"n":3,"edges":[[1,0],[1,2]]}"#).is_err());
        // loop
        assert!(Graph::from_json("x", r#"{"n":3,"edges":[[0,0],[0,1],[1,2]]}"#).is_err());
        // duplicate
        assert!(Graph::from_json("x", r#"{"n":3,"edges":[[0,1],[0,1],[1,2]]}"#).is_err());
        // disconnected
        assert!(Graph::from_json("x", r#"{"n":4,"edges":[[0,1],[2,3]]}"#).is_err());
        // out of range
        assert!(Graph::from_json("x", r#"{"n":2,"edges":[[0,5]]}"#).is_err());
    }
}
