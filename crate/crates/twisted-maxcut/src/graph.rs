//! Graphs, 3-regular combinatorics, p-environments and their catalogs.
//!
//! Vertices are the integers `0..n` and all ordered notions (triplet member
//! order, neighbor order) use the integer order.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

mod catalog;
mod iso;

pub use catalog::{
    classify_environment, edge_catalog, star_catalog, triplet_catalog, CatalogEntry, EnvKind,
    EnvironmentCatalog,
};
pub use iso::marked_isomorphic;

/// Simple undirected graph with an ordered vertex set `0..n`.
///
/// Immutable after construction; the edge set and adjacency lists are kept
/// consistent by the constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a validated graph from a list of vertex pairs.
    ///
    /// Rejects self-loops, duplicate edges and out-of-range vertices.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_three_regular(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn has_triangle(&self) -> bool {
        self.edges
            .iter()
            .any(|&(u, v)| self.adj[u].iter().any(|&w| w != v && self.has_edge(v, w)))
    }

    /// Serializes to the edge-list text format: first line `n m`, then one
    /// `u v` line per edge, 0-based, LF-terminated.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list text format accepted by [`Graph::to_edge_list_text`].
    pub fn from_edge_list_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::BadEdgeList("missing vertex count".into()))?
            .parse()
            .map_err(|_| Error::BadEdgeList("vertex count is not a number".into()))?;
        let m: usize = tokens
            .next()
            .ok_or_else(|| Error::BadEdgeList("missing edge count".into()))?
            .parse()
            .map_err(|_| Error::BadEdgeList("edge count is not a number".into()))?;
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let u: usize = tokens
                .next()
                .ok_or_else(|| Error::BadEdgeList("truncated edge list".into()))?
                .parse()
                .map_err(|_| Error::BadEdgeList("edge endpoint is not a number".into()))?;
            let v: usize = tokens
                .next()
                .ok_or_else(|| Error::BadEdgeList("truncated edge list".into()))?
                .parse()
                .map_err(|_| Error::BadEdgeList("edge endpoint is not a number".into()))?;
            pairs.push((u, v));
        }
        Graph::from_edge_list(n, &pairs)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Graph::from_edge_list(n, &pairs).expect("complete graph is simple")
    }

    /// Complete bipartite graph K_{a,b}; side A is `0..a`, side B is `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut pairs = Vec::new();
        for u in 0..a {
            for v in 0..b {
                pairs.push((u, a + v));
            }
        }
        Graph::from_edge_list(a + b, &pairs).expect("bipartite graph is simple")
    }

    /// The 3-prism (triangular prism, K3 x K2).
    pub fn prism() -> Graph {
        Graph::from_edge_list(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .expect("prism is simple")
    }

    /// The Petersen graph.
    pub fn petersen() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edge_list(10, &pairs).expect("petersen is simple")
    }

    /// The McGee graph: the smallest 3-regular graph of girth 7
    /// (LCF notation [12, 7, -7]^8).
    pub fn mcgee() -> Graph {
        let lcf = [12i64, 7, -7];
        let mut pairs: Vec<(usize, usize)> = (0..24).map(|i| (i, (i + 1) % 24)).collect();
        for i in 0..24usize {
            let j = (i as i64 + lcf[i % 3]).rem_euclid(24) as usize;
            if i < j {
                pairs.push((i, j));
            }
        }
        Graph::from_edge_list(24, &pairs).expect("mcgee is simple")
    }
}

/// A vertex `c` together with two distinct neighbors `j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triplet {
    pub c: usize,
    pub j: usize,
    pub k: usize,
}

impl Triplet {
    pub fn new(c: usize, j: usize, k: usize) -> Triplet {
        debug_assert!(j < k && c != j && c != k);
        Triplet { c, j, k }
    }

    pub fn members(&self) -> [usize; 3] {
        [self.c, self.j, self.k]
    }
}

/// All triplets of `g`: every `(c, {j, k})` with `j < k` distinct neighbors
/// of `c` appears exactly once. A 3-regular graph has `2|E|` of them.
pub fn triplets(g: &Graph) -> Vec<Triplet> {
    let mut out = Vec::new();
    for c in 0..g.n() {
        let nbrs = g.neighbors(c);
        for a in 0..nbrs.len() {
            for b in a + 1..nbrs.len() {
                out.push(Triplet::new(c, nbrs[a], nbrs[b]));
            }
        }
    }
    out
}

/// Length of a shortest cycle, or `None` for forests.
///
/// BFS from every vertex; whenever a non-tree edge closes a walk, the two
/// root distances bound a cycle through the BFS root.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    for root in 0..g.n() {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v && parent[v] != u {
                    let cycle = dist[u] + dist[v] + 1;
                    if best.is_none_or(|b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// All triangles as sorted vertex triples, each exactly once.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        for &w in g.neighbors(u) {
            if w > v && g.has_edge(v, w) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// Triangles that share no edge with any other triangle.
pub fn isolated_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let tris = triangles(g);
    tris.iter()
        .filter(|t| tris.iter().all(|s| *s == **t || !shares_edge(t, s)))
        .copied()
        .collect()
}

/// Unordered pairs of triangles sharing an edge, each pair counted once.
pub fn crossed_squares(g: &Graph) -> Vec<([usize; 3], [usize; 3])> {
    let tris = triangles(g);
    let mut out = Vec::new();
    for a in 0..tris.len() {
        for b in a + 1..tris.len() {
            if shares_edge(&tris[a], &tris[b]) {
                out.push((tris[a], tris[b]));
            }
        }
    }
    out
}

fn shares_edge(a: &[usize; 3], b: &[usize; 3]) -> bool {
    a.iter().filter(|v| b.contains(v)).count() >= 2
}

const PAIRING_ATTEMPTS: usize = 10_000;

/// Random simple 3-regular graph on `n` vertices via the pairing model.
///
/// Each vertex contributes three points; a uniformly random perfect matching
/// of the points is drawn and rejected if it produces loops or parallel
/// edges. Deterministic for a fixed seed.
pub fn random_three_regular(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::BadRegularOrder(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::from_edge_list(n, &pairs) {
            return Ok(g);
        }
    }
    Err(Error::PairingExhausted(PAIRING_ATTEMPTS))
}

/// A graph with an ordered tuple of distinguished vertices (the support of a
/// local observable: an edge, a triplet, or a star).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedGraph {
    pub graph: Graph,
    pub marked: Vec<usize>,
}

impl MarkedGraph {
    pub fn new(graph: Graph, marked: Vec<usize>) -> MarkedGraph {
        debug_assert!(marked.iter().all(|&v| v < graph.n()));
        MarkedGraph { graph, marked }
    }

    /// Edge-list text plus a trailing `marked: v0 v1 ...` line.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = self.graph.to_edge_list_text();
        let marked: Vec<String> = self.marked.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "marked: {}", marked.join(" "));
        out
    }
}

/// The p-environment of the vertex tuple `s` in `g`: the union of all walks
/// of length at most `p` starting in `s`, with `s` as the marked tuple.
///
/// Vertices are relabeled to `0..k` preserving the original integer order;
/// `marked` points at the images of `s`. For `p = 0` the induced subgraph on
/// `s` is returned.
pub fn p_environment(g: &Graph, s: &[usize], p: usize) -> MarkedGraph {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &v in s {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if dist[u] == p {
            continue;
        }
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let verts: Vec<usize> = (0..g.n()).filter(|&v| dist[v] <= p).collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    // An edge lies on a walk of length <= p from s iff one endpoint is at
    // distance <= p-1; for p = 0 only the edges inside s survive.
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| {
            let du = dist[u];
            let dv = dist[v];
            if p == 0 {
                du == 0 && dv == 0
            } else {
                du.min(dv) < p
            }
        })
        .map(|&(u, v)| (index[u], index[v]))
        .collect();
    let graph =
        Graph::from_edge_list(verts.len(), &pairs).expect("environment inherits simplicity");
    let marked = s.iter().map(|&v| index[v]).collect();
    MarkedGraph::new(graph, marked)
}

/// The tree p-environment of an edge: both endpoints grown to degree 3,
/// leaves at distance exactly `p` from the marked edge.
pub fn edge_tree(p: usize) -> MarkedGraph {
    grow_tree(&[2, 2], &[(0, 1)], p)
}

/// The tree p-environment of a triplet `(c, j, k)`; marked tuple `(0, 1, 2)`.
pub fn triplet_tree(p: usize) -> MarkedGraph {
    grow_tree(&[1, 2, 2], &[(0, 1), (0, 2)], p)
}

/// The tree p-environment of a star around `c`; marked tuple `(0, 1, 2, 3)`
/// with center first.
pub fn star_tree(p: usize) -> MarkedGraph {
    grow_tree(&[0, 2, 2, 2], &[(0, 1), (0, 2), (0, 3)], p)
}

/// Grows the unique tree environment: the support vertices receive
/// `root_children` fresh children each, then every vertex branches twice until
/// the leaves sit at distance exactly `p` from the support.
fn grow_tree(root_children: &[usize], support_edges: &[(usize, usize)], p: usize) -> MarkedGraph {
    assert!(p >= 1, "tree environments are defined for p >= 1");
    let mut pairs: Vec<(usize, usize)> = support_edges.to_vec();
    let mut next = root_children.len();
    let mut frontier: Vec<usize> = Vec::new();
    for (v, &children) in root_children.iter().enumerate() {
        for _ in 0..children {
            pairs.push((v, next));
            frontier.push(next);
            next += 1;
        }
    }
    for _ in 1..p {
        let mut fresh = Vec::new();
        for &v in &frontier {
            for _ in 0..2 {
                pairs.push((v, next));
                fresh.push(next);
                next += 1;
            }
        }
        frontier = fresh;
    }
    let graph = Graph::from_edge_list(next, &pairs).expect("tree construction is simple");
    MarkedGraph::new(graph, (0..root_children.len()).collect())
}
