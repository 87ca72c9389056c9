//! Tree data model and the classical distance machinery on it.

mod canon;
mod codec;
mod sequences;
mod structure;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

pub use canon::CanonicalForm;
pub use codec::{parse_edge_list, parse_prufer, random_tree, write_edge_list};
pub use sequences::{DegreeSequence, SegmentSequence};

/// Vertex identifier: a dense index in `0..n`.
pub type Vertex = usize;

/// An immutable labelled tree on vertices `0..n`.
///
/// All-pairs distances are computed once on first use and cached; the cache
/// is a [`OnceLock`], so a `Tree` can be shared across threads.
#[derive(Clone)]
pub struct Tree {
    adj: Vec<Vec<Vertex>>,
    dist: OnceLock<Vec<u32>>,
}

impl Tree {
    /// Builds a tree of the given order from its edges.
    pub fn new(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadVertexIds("a tree has at least one vertex".into()));
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::BadVertexIds(format!(
                    "edge ({u}, {v}) outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::HasCycle);
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                // parallel edges close a 2-cycle
                return Err(Error::HasCycle);
            }
        }
        if edges.len() > order - 1 {
            return Err(Error::HasCycle);
        }
        let tree = Self { adj, dist: OnceLock::new() };
        let reached = tree.bfs(0).iter().filter(|&&d| d != u32::MAX).count();
        if reached != order {
            // with n-1 edges a disconnected graph must also contain a cycle,
            // but fewer edges is the common case
            return Err(if edges.len() < order - 1 { Error::NotConnected } else { Error::HasCycle });
        }
        Ok(tree)
    }

    /// Builds a tree whose order is inferred from the largest vertex id.
    ///
    /// An empty edge list is the single-vertex tree. Every id in `0..n` must
    /// occur in some edge.
    pub fn from_edge_list(edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let Some(max) = edges.iter().map(|&(u, v)| u.max(v)).max() else {
            return Self::new(1, &[]);
        };
        let order = max + 1;
        let mut seen = vec![false; order];
        for &(u, v) in edges {
            seen[u] = true;
            seen[v] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::BadVertexIds(format!("vertex {missing} never appears")));
        }
        Self::new(order, edges)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path_graph(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Self::new(order.max(1), &edges).expect("path is a tree")
    }

    /// The star `K_{1,n-1}` centred at 0.
    pub fn star(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|v| (0, v)).collect();
        Self::new(order.max(1), &edges).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut edges: Vec<_> = self
            .vertices()
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// BFS distances from `source`; unreachable vertices get `u32::MAX`.
    fn bfs(&self, source: Vertex) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn distance_matrix(&self) -> &[u32] {
        self.dist.get_or_init(|| {
            let n = self.order();
            let mut all = Vec::with_capacity(n * n);
            for v in 0..n {
                all.extend(self.bfs(v));
            }
            all
        })
    }

    /// Distance row of `v`: `row[w] = d(v, w)`.
    pub fn distances_from(&self, v: Vertex) -> &[u32] {
        let n = self.order();
        &self.distance_matrix()[v * n..(v + 1) * n]
    }

    /// Length of the unique `u`–`v` path.
    ///
    /// Panics if either id is out of range; use [`Tree::check_vertex`] for
    /// untrusted input.
    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        self.distances_from(u)[v] as usize
    }

    pub fn eccentricity(&self, v: Vertex) -> usize {
        self.distances_from(v).iter().copied().max().unwrap_or(0) as usize
    }

    pub fn diameter(&self) -> usize {
        self.vertices().map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    pub fn radius(&self) -> usize {
        self.vertices().map(|v| self.eccentricity(v)).min().unwrap_or(0)
    }

    /// The one or two vertices of minimum eccentricity.
    pub fn center(&self) -> Vec<Vertex> {
        let rad = self.radius();
        self.vertices().filter(|&v| self.eccentricity(v) == rad).collect()
    }

    /// The unique path from `u` to `v`.
    pub fn path(&self, u: Vertex, v: Vertex) -> PathInTree {
        let to_v = self.distances_from(v);
        let mut vertices = vec![u];
        let mut cur = u;
        while cur != v {
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| to_v[w] + 1 == to_v[cur])
                .expect("tree is connected");
            vertices.push(cur);
        }
        PathInTree { vertices }
    }

    /// Every longest path, each listed once with its smaller endpoint first,
    /// sorted lexicographically by vertex sequence.
    pub fn diametric_paths(&self) -> Vec<PathInTree> {
        let diam = self.diameter();
        let mut paths: Vec<_> = self
            .vertices()
            .flat_map(|a| {
                self.vertices()
                    .filter(move |&b| a < b || (diam == 0 && a == b))
                    .map(move |b| (a, b))
            })
            .filter(|&(a, b)| self.distance(a, b) == diam)
            .map(|(a, b)| self.path(a, b))
            .collect();
        paths.sort_by(|p, q| p.vertices.cmp(&q.vertices));
        paths
    }

    /// The lexicographically smallest longest path, oriented so its smaller
    /// endpoint comes first.
    pub fn diametric_path(&self) -> PathInTree {
        self.diametric_paths().swap_remove(0)
    }

    /// `min_{x in p} d(u, x)`.
    pub fn distance_to_path(&self, u: Vertex, path: &PathInTree) -> usize {
        let row = self.distances_from(u);
        path.vertices.iter().map(|&x| row[x]).min().unwrap_or(0) as usize
    }

    /// `max_u d(u, p)`.
    pub fn path_eccentricity(&self, path: &PathInTree) -> usize {
        self.vertices().map(|u| self.distance_to_path(u, path)).max().unwrap_or(0)
    }

    /// Vertices reachable from `start` without stepping onto `blocked`.
    ///
    /// With `blocked` a neighbour of `start`, this is the component of
    /// `start` after deleting that edge.
    pub fn component_avoiding(&self, start: Vertex, blocked: Option<Vertex>) -> Vec<Vertex> {
        let mut seen = vec![false; self.order()];
        seen[start] = true;
        if let Some(b) = blocked {
            seen[b] = true;
        }
        let mut stack = vec![start];
        let mut out = vec![];
        while let Some(u) = stack.pop() {
            out.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Detaches each vertex in `moved` from `from` and attaches it to `to`.
    pub fn reattach(&self, from: Vertex, to: Vertex, moved: &[Vertex]) -> Result<Self> {
        let mut edges = self.edges();
        for &w in moved {
            let key = (from.min(w), from.max(w));
            let pos = edges
                .iter()
                .position(|&e| e == key)
                .ok_or_else(|| Error::InvalidSite(format!("({from}, {w}) is not an edge")))?;
            edges[pos] = (to.min(w), to.max(w));
        }
        Self::new(self.order(), &edges)
    }

    /// Applies the vertex permutation `perm` (old id `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        if perm.len() != self.order() {
            return Err(Error::BadVertexIds("permutation has wrong length".into()));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::new(self.order(), &edges)
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Tree {}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tree").field("order", &self.order()).field("edges", &self.edges()).finish()
    }
}

/// A path in a host tree, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PathInTree {
    vertices: Vec<Vertex>,
}

impl PathInTree {
    /// Validates that consecutive vertices are adjacent and all are distinct.
    pub fn new(tree: &Tree, vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty".into()));
        }
        for &v in &vertices {
            tree.check_vertex(v)?;
        }
        if let Some(w) = vertices.windows(2).find(|w| !tree.is_adjacent(w[0], w[1])) {
            return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPath("repeated vertex".into()));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn reversed(&self) -> Self {
        Self { vertices: self.vertices.iter().rev().copied().collect() }
    }
}
