//! Steiner distance and Steiner eccentricities on trees.
//!
//! Several independent routes to `ecc_3` live here on purpose:
//!
//! * [`ecc_k_bruteforce`] enumerates every k-subset containing the vertex;
//! * [`ecc3_fast`] maximizes the half-perimeter `(d(v,x)+d(v,y)+d(x,y))/2`
//!   over all pairs `x, y`;
//! * [`ecc3_via_lemma`] takes a longest path `P` from `v` and adds the
//!   farthest distance of any vertex to `P`, over every choice of `P`;
//! * [`ecc3_profile`] roots the tree at each vertex and picks the best
//!   branching point in one pass, `O(n)` per vertex.
//!
//! Averages are exact ratios; see [`crate::num`].

use itertools::Itertools;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::num::{mean_of, ExactInt};
use crate::tree::{Tree, Vertex};
use crate::Rational;

/// Largest order accepted by the subset-enumeration oracle.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// A nonempty, sorted, duplicate-free set of vertices of a host tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(tree: &Tree, ids: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut ids: Vec<_> = ids.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.is_empty() {
            return Err(Error::EmptySet);
        }
        for &v in &ids {
            tree.check_vertex(v)?;
        }
        Ok(Self(ids))
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Edge count of the minimal subtree spanning `set`, by pruning leaves
/// outside the set.
pub fn steiner_distance(tree: &Tree, set: &VertexSet) -> usize {
    steiner_distance_of(tree, set.as_slice())
}

fn steiner_distance_of(tree: &Tree, set: &[Vertex]) -> usize {
    let n = tree.order();
    let mut keep = vec![false; n];
    for &v in set {
        keep[v] = true;
    }
    let mut degree: Vec<usize> = tree.vertices().map(|v| tree.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut stack: Vec<Vertex> = tree.vertices().filter(|&v| degree[v] <= 1 && !keep[v]).collect();
    let mut pruned = 0;
    while let Some(u) = stack.pop() {
        if removed[u] {
            continue;
        }
        removed[u] = true;
        pruned += 1;
        for &w in tree.neighbors(u) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] <= 1 && !keep[w] {
                    stack.push(w);
                }
            }
        }
    }
    n - pruned - 1
}

/// `(d(u,v) + d(u,w) + d(v,w)) / 2`, which on a tree equals the Steiner
/// distance of `{u, v, w}`.
pub fn steiner3_halfperimeter(tree: &Tree, u: Vertex, v: Vertex, w: Vertex) -> usize {
    (tree.distance(u, v) + tree.distance(u, w) + tree.distance(v, w)) / 2
}

fn check_k(tree: &Tree, k: usize) -> Result<()> {
    if k < 2 || k > tree.order() {
        Err(Error::BadK { k, order: tree.order() })
    } else {
        Ok(())
    }
}

fn require_three(tree: &Tree) -> Result<()> {
    if tree.order() < 3 {
        Err(Error::TooSmall { required: 3, order: tree.order() })
    } else {
        Ok(())
    }
}

/// Maximum Steiner distance over all k-subsets containing `v`, by
/// exhaustive enumeration. Only for orders up to [`BRUTE_FORCE_LIMIT`].
pub fn ecc_k_bruteforce(tree: &Tree, v: Vertex, k: usize) -> Result<usize> {
    check_k(tree, k)?;
    tree.check_vertex(v)?;
    if tree.order() > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleTooLarge { limit: BRUTE_FORCE_LIMIT, order: tree.order() });
    }
    let others: Vec<_> = tree.vertices().filter(|&w| w != v).collect();
    let mut set = Vec::with_capacity(k);
    let best = others
        .into_iter()
        .combinations(k - 1)
        .map(|rest| {
            set.clear();
            set.push(v);
            set.extend(rest);
            steiner_distance_of(tree, &set)
        })
        .max()
        .unwrap_or(0);
    Ok(best)
}

/// `ecc_3(v)` as the largest half-perimeter over all pairs.
pub fn ecc3_fast(tree: &Tree, v: Vertex) -> Result<usize> {
    require_three(tree)?;
    tree.check_vertex(v)?;
    let dv = tree.distances_from(v);
    let mut best = 0;
    for x in tree.vertices() {
        let dx = tree.distances_from(x);
        for y in x..tree.order() {
            best = best.max((dv[x] + dv[y] + dx[y]) as usize / 2);
        }
    }
    Ok(best)
}

/// `ecc_3(v)` as `|P| + ecc(P)` maximized over every longest path `P`
/// starting at `v`.
pub fn ecc3_via_lemma(tree: &Tree, v: Vertex) -> Result<usize> {
    require_three(tree)?;
    tree.check_vertex(v)?;
    let ecc = tree.eccentricity(v);
    let best = tree
        .vertices()
        .filter(|&x| tree.distance(v, x) == ecc)
        .map(|x| ecc + tree.path_eccentricity(&tree.path(v, x)))
        .max()
        .unwrap_or(0);
    Ok(best)
}

/// Parent pointers and a root-first ordering of `tree` rooted at `root`.
fn rooted(tree: &Tree, root: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
    let n = tree.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    (parent, order)
}

fn ecc3_rooted(tree: &Tree, root: Vertex) -> usize {
    let (parent, order) = rooted(tree, root);
    let depth = tree.distances_from(root);
    let n = tree.order();
    // two largest downward branch lengths at each vertex
    let mut top = vec![(0usize, 0usize); n];
    for &u in order.iter().rev() {
        if u != root {
            let p = parent[u];
            let len = top[u].0 + 1;
            let (a, b) = top[p];
            top[p] = if len > a { (len, a) } else { (a, b.max(len)) };
        }
    }
    order.iter().map(|&u| depth[u] as usize + top[u].0 + top[u].1).max().unwrap_or(0)
}

/// `ecc_3` of every vertex, `O(n^2)` overall.
pub fn ecc3_profile(tree: &Tree) -> Result<Vec<usize>> {
    require_three(tree)?;
    Ok(tree.vertices().map(|v| ecc3_rooted(tree, v)).collect())
}

/// `ecc_k(v)` for any `k` via the long-path decomposition of the tree
/// rooted at `v`: the best k-set takes the `k - 1` longest chains.
pub fn ecc_k_greedy(tree: &Tree, v: Vertex, k: usize) -> Result<usize> {
    check_k(tree, k)?;
    tree.check_vertex(v)?;
    let (parent, order) = rooted(tree, v);
    let n = tree.order();
    let mut height = vec![0usize; n];
    let mut tallest_child = vec![usize::MAX; n];
    for &u in order.iter().rev() {
        if u != v {
            let p = parent[u];
            if tallest_child[p] == usize::MAX || height[u] + 1 > height[p] {
                height[p] = height[u] + 1;
                tallest_child[p] = u;
            }
        }
    }
    let mut chains: Vec<usize> = order
        .iter()
        .filter(|&&u| u != v && tallest_child[parent[u]] != u)
        .map(|&u| height[u] + 1)
        .collect();
    chains.push(height[v]);
    chains.sort_unstable_by(|a, b| b.cmp(a));
    Ok(chains.iter().take(k - 1).sum())
}

/// Exact average Steiner 3-eccentricity.
pub fn aecc3_in<I: ExactInt>(tree: &Tree) -> Result<Ratio<I>> {
    let total: usize = ecc3_profile(tree)?.iter().sum();
    Ok(mean_of(total, tree.order()))
}

pub fn aecc3(tree: &Tree) -> Result<Rational> {
    aecc3_in(tree)
}

/// Exact average Steiner k-eccentricity.
pub fn aecc_k_in<I: ExactInt>(tree: &Tree, k: usize) -> Result<Ratio<I>> {
    check_k(tree, k)?;
    if k == 3 {
        return aecc3_in(tree);
    }
    let total = tree.vertices().map(|v| ecc_k_greedy(tree, v, k)).sum::<Result<usize>>()?;
    Ok(mean_of(total, tree.order()))
}

pub fn aecc_k(tree: &Tree, k: usize) -> Result<Rational> {
    aecc_k_in(tree, k)
}
