//! Text formats and Prüfer codes.
//!
//! Edge lists hold one edge per line as two whitespace-separated vertex ids;
//! blank lines and lines starting with `#` are ignored. Prüfer codes are a
//! single comma-separated line, empty for the two-vertex tree.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt::Write as _;

use rand::Rng;

use super::{Tree, Vertex};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Tree> {
    let mut edges = vec![];
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<_> = line.split_whitespace().collect();
        let err = |message: String| Error::Parse { line: idx + 1, message };
        if fields.len() != 2 {
            return Err(err(format!("expected two vertex ids, found {:?}", line)));
        }
        let id = |s: &str| s.parse::<Vertex>().map_err(|_| err(format!("bad vertex id {s:?}")));
        edges.push((id(fields[0])?, id(fields[1])?));
    }
    Tree::from_edge_list(&edges)
}

pub fn write_edge_list(tree: &Tree) -> String {
    let mut out = String::new();
    for (u, v) in tree.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_prufer(text: &str) -> Result<Vec<Vertex>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::BadCode(format!("bad entry {x:?}"))))
        .collect()
}

impl Tree {
    /// Decodes a Prüfer sequence of length `n - 2`.
    pub fn from_prufer(code: &[Vertex]) -> Result<Self> {
        let n = code.len() + 2;
        if let Some(&bad) = code.iter().find(|&&c| c >= n) {
            return Err(Error::BadCode(format!("entry {bad} outside 0..{n}")));
        }
        let mut degree = vec![1usize; n];
        for &c in code {
            degree[c] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<Vertex>> =
            (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &c in code {
            let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
            edges.push((leaf, c));
            degree[c] -= 1;
            if degree[c] == 1 {
                leaves.push(Reverse(c));
            }
        }
        let Reverse(a) = leaves.pop().unwrap();
        let Reverse(b) = leaves.pop().unwrap();
        edges.push((a, b));
        Self::new(n, &edges)
    }

    /// Encodes the tree as its Prüfer sequence; requires `n >= 2`.
    pub fn to_prufer(&self) -> Result<Vec<Vertex>> {
        let n = self.order();
        if n < 2 {
            return Err(Error::TooSmall { required: 2, order: n });
        }
        let mut degree: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut leaves: BinaryHeap<Reverse<Vertex>> =
            self.vertices().filter(|&v| degree[v] == 1).map(Reverse).collect();
        let mut code = Vec::with_capacity(n - 2);
        while code.len() < n - 2 {
            let Reverse(leaf) = leaves.pop().unwrap();
            removed[leaf] = true;
            let parent = *self.neighbors(leaf).iter().find(|&&w| !removed[w]).unwrap();
            code.push(parent);
            degree[parent] -= 1;
            if degree[parent] == 1 {
                leaves.push(Reverse(parent));
            }
        }
        Ok(code)
    }
}

/// A uniformly random labelled tree on `n` vertices (via a uniform Prüfer
/// code). Uniform over labelled trees, not over isomorphism classes.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    match n {
        0 | 1 => Tree::path_graph(1),
        _ => {
            let code: Vec<_> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            Tree::from_prufer(&code).expect("in-range code")
        }
    }
}
