//! Tree moves that shift the average Steiner 3-eccentricity in a known
//! direction, and the reductions assembled from them.
//!
//! * σ: with `P = v_0 … v_d` a longest path and `y` an off-path neighbour of
//!   `v_k` (`1 <= k <= ⌊d/2⌋`) that is not a leaf, move every other
//!   neighbour of `y` onto `v_d`. Keeps the degree sequence and strictly
//!   increases `aecc_3`.
//! * π: with `P` a path from `u` to `v` whose interior vertices have degree
//!   2 and whose `v`-side hangs at least as deep as the `u`-side, move the
//!   off-path neighbours of `u` onto `v`. Never increases `aecc_3`.
//! * rebalance: in a generalized star, move the tip of a longest leg onto
//!   the tip of a shortest leg.
//!
//! Every move returns a [`TransformOutcome`] that keeps both trees so the
//! result can be audited independently.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::steiner::aecc3;
use crate::tree::{PathInTree, Tree, Vertex};
use crate::Rational;

/// Where a σ move applies.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SigmaSite {
    /// Longest path `v_0 … v_d`, oriented so `attach_index <= ⌊d/2⌋`.
    pub path: PathInTree,
    /// `k`: position of the path vertex the moved subtree hangs from.
    pub attach_index: usize,
    /// `y`: the non-leaf off-path neighbour of `v_k`; the subtree below it
    /// (minus `y` itself) moves to `v_d`.
    pub off_path_vertex: Vertex,
}

/// Where a π move applies: `path` runs from the donor end to the receiver.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PiSite {
    pub path: PathInTree,
}

impl PiSite {
    pub fn donor(&self) -> Vertex {
        self.path.first()
    }

    pub fn receiver(&self) -> Vertex {
        self.path.last()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    Sigma(SigmaSite),
    Pi(PiSite),
    Rebalance {
        center: Vertex,
        /// Tip of the longest leg, which moves.
        moved_tip: Vertex,
        /// Tip of the shortest leg, which receives it.
        receiver_tip: Vertex,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformOutcome {
    pub before: Tree,
    pub after: Tree,
    pub step: Move,
    pub aecc3_before: Rational,
    pub aecc3_after: Rational,
}

impl TransformOutcome {
    fn new(before: &Tree, after: Tree, step: Move) -> Result<Self> {
        Ok(Self {
            aecc3_before: aecc3(before)?,
            aecc3_after: aecc3(&after)?,
            before: before.clone(),
            after,
            step,
        })
    }

    /// `aecc_3(after) - aecc_3(before)`.
    pub fn delta(&self) -> Rational {
        self.aecc3_after - self.aecc3_before
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidSite(msg.into()))
}

/// σ sites hanging off `path`, which must be a longest path. Sites past the
/// middle are reported on the reversed path.
pub fn find_sigma_sites_on(tree: &Tree, path: &PathInTree) -> Vec<SigmaSite> {
    let d = path.len();
    let verts = path.vertices();
    let mut sites = vec![];
    for (i, &vi) in verts.iter().enumerate().take(d).skip(1) {
        for &y in tree.neighbors(vi) {
            if path.contains(y) || tree.degree(y) < 2 {
                continue;
            }
            let site = if i <= d / 2 {
                SigmaSite { path: path.clone(), attach_index: i, off_path_vertex: y }
            } else {
                SigmaSite { path: path.reversed(), attach_index: d - i, off_path_vertex: y }
            };
            sites.push(site);
        }
    }
    sites.sort_by_key(|s| s.off_path_vertex);
    sites
}

/// σ sites on the tree's canonical longest path, ordered by the moved
/// vertex id.
pub fn find_sigma_sites(tree: &Tree) -> Vec<SigmaSite> {
    find_sigma_sites_on(tree, &tree.diametric_path())
}

/// σ sites on every longest path in both orientations, deduplicated.
pub fn all_sigma_sites(tree: &Tree) -> Vec<SigmaSite> {
    let mut sites: Vec<_> = tree
        .diametric_paths()
        .iter()
        .flat_map(|p| {
            let mut s = find_sigma_sites_on(tree, p);
            s.extend(find_sigma_sites_on(tree, &p.reversed()));
            s
        })
        .collect();
    sites.sort();
    sites.dedup();
    sites
}

fn check_sigma_site(tree: &Tree, site: &SigmaSite) -> Result<()> {
    let path = PathInTree::new(tree, site.path.vertices().to_vec())?;
    let d = path.len();
    if d != tree.diameter() {
        return invalid(format!("path has length {d}, diameter is {}", tree.diameter()));
    }
    let k = site.attach_index;
    if k == 0 || k > d / 2 {
        return invalid(format!("attach index {k} outside 1..={}", d / 2));
    }
    let y = site.off_path_vertex;
    tree.check_vertex(y)?;
    let vk = path.vertices()[k];
    if path.contains(y) || !tree.is_adjacent(vk, y) {
        return invalid(format!("{y} is not an off-path neighbour of {vk}"));
    }
    if tree.degree(y) < 2 {
        return invalid(format!("edge ({vk}, {y}) is pendant"));
    }
    Ok(())
}

pub fn sigma_transform(tree: &Tree, site: &SigmaSite) -> Result<TransformOutcome> {
    check_sigma_site(tree, site)?;
    let y = site.off_path_vertex;
    let vk = site.path.vertices()[site.attach_index];
    let moved: Vec<_> = tree.neighbors(y).iter().copied().filter(|&w| w != vk).collect();
    let after = tree.reattach(y, site.path.last(), &moved)?;
    TransformOutcome::new(tree, after, Move::Sigma(site.clone()))
}

/// Applies σ until none applies; the last tree is a caterpillar with the
/// same degree sequence. Each step uses the site with the smallest moved
/// vertex on the current canonical longest path.
pub fn reduce_to_caterpillar(tree: &Tree) -> Result<Vec<TransformOutcome>> {
    let mut chain: Vec<TransformOutcome> = vec![];
    loop {
        let current = chain.last().map_or(tree, |o| &o.after);
        let Some(site) = find_sigma_sites(current).into_iter().next() else {
            break;
        };
        let outcome = sigma_transform(current, &site)?;
        chain.push(outcome);
    }
    Ok(chain)
}

/// `max_{x in C} d(end, x)` where `C` is the component of `end` once the
/// edge towards `inner` is removed.
fn hang_depth(tree: &Tree, end: Vertex, inner: Vertex) -> usize {
    let row = tree.distances_from(end);
    tree.component_avoiding(end, Some(inner)).iter().map(|&x| row[x] as usize).max().unwrap_or(0)
}

fn pi_depths(tree: &Tree, path: &PathInTree) -> (usize, usize) {
    let v = path.vertices();
    let n = v.len();
    (hang_depth(tree, v[0], v[1]), hang_depth(tree, v[n - 1], v[n - 2]))
}

/// Every path with at least one edge whose interior vertices all have
/// degree 2, oriented from the smaller end id, sorted.
pub fn degree_two_paths(tree: &Tree) -> Vec<PathInTree> {
    let mut out = vec![];
    for a in tree.vertices() {
        for &b in tree.neighbors(a) {
            let walk = tree.walk_through_degree_two(a, b);
            for end in 1..walk.len() {
                if a < walk[end] {
                    out.push(PathInTree::new(tree, walk[..=end].to_vec()).expect("walk is a path"));
                }
            }
        }
    }
    out.sort();
    out
}

/// Orients `path` into a π site: the receiver is the end whose side hangs
/// deeper; on a tie the smaller id donates.
pub fn orient_pi_site(tree: &Tree, path: &PathInTree) -> PiSite {
    let (first, last) = pi_depths(tree, path);
    let forward = match last.cmp(&first) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => path.first() < path.last(),
    };
    PiSite { path: if forward { path.clone() } else { path.reversed() } }
}

pub fn find_pi_sites(tree: &Tree) -> Vec<PiSite> {
    degree_two_paths(tree).iter().map(|p| orient_pi_site(tree, p)).collect()
}

/// Checks a π site, including the depth condition on its orientation.
pub fn check_pi_site(tree: &Tree, site: &PiSite) -> Result<()> {
    let path = PathInTree::new(tree, site.path.vertices().to_vec())?;
    if path.is_empty() {
        return invalid("path has no edges");
    }
    let v = path.vertices();
    if let Some(&w) = v[1..v.len() - 1].iter().find(|&&w| tree.degree(w) != 2) {
        return invalid(format!("interior vertex {w} has degree {}", tree.degree(w)));
    }
    let (donor, receiver) = pi_depths(tree, &path);
    if receiver < donor {
        return invalid(format!("receiver side depth {receiver} below donor side depth {donor}"));
    }
    Ok(())
}

pub fn pi_transform(tree: &Tree, site: &PiSite) -> Result<TransformOutcome> {
    check_pi_site(tree, site)?;
    let v = site.path.vertices();
    let (u, next) = (v[0], v[1]);
    let moved: Vec<_> = tree.neighbors(u).iter().copied().filter(|&w| w != next).collect();
    let after = tree.reattach(u, site.receiver(), &moved)?;
    TransformOutcome::new(tree, after, Move::Pi(site.clone()))
}

/// Applies π across segments joining two branch vertices until at most one
/// branch vertex remains. The segment sequence is unchanged at every step.
pub fn reduce_to_generalized_star(tree: &Tree) -> Result<Vec<TransformOutcome>> {
    let mut chain: Vec<TransformOutcome> = vec![];
    loop {
        let current = chain.last().map_or(tree, |o| &o.after);
        if current.order() < 3 || current.is_generalized_star() {
            break;
        }
        let segment = current
            .segments()?
            .into_iter()
            .find(|s| current.degree(s.first()) >= 3 && current.degree(s.last()) >= 3)
            .expect("two branch vertices are joined by a segment");
        let site = orient_pi_site(current, &segment);
        let outcome = pi_transform(current, &site)?;
        chain.push(outcome);
    }
    Ok(chain)
}

/// Moves the tip of a longest leg onto the tip of a shortest leg. Among
/// equally long (or short) legs, the one with the smallest tip id is used.
pub fn rebalance_step(tree: &Tree) -> Result<TransformOutcome> {
    if !tree.is_generalized_star() {
        return Err(Error::NotGeneralizedStar);
    }
    let Some((center, legs)) = tree.star_legs() else {
        // a path: one segment, nothing to balance
        return Err(Error::AlreadyBalanced);
    };
    let key = |leg: &&PathInTree| (leg.len(), std::cmp::Reverse(leg.last()));
    let longest = legs.iter().max_by_key(key).unwrap();
    let shortest = legs.iter().min_by_key(|leg| (leg.len(), leg.last())).unwrap();
    if longest.len() - shortest.len() <= 1 {
        return Err(Error::AlreadyBalanced);
    }
    let lv = longest.vertices();
    let (tip, pred) = (lv[lv.len() - 1], lv[lv.len() - 2]);
    let receiver_tip = shortest.last();
    let after = tree.reattach(pred, receiver_tip, &[tip])?;
    TransformOutcome::new(tree, after, Move::Rebalance { center, moved_tip: tip, receiver_tip })
}

/// Rebalances until the star is balanced; ends at `ST_{n,m}`.
pub fn balance_generalized_star(tree: &Tree) -> Result<Vec<TransformOutcome>> {
    if !tree.is_generalized_star() {
        return Err(Error::NotGeneralizedStar);
    }
    let mut chain: Vec<TransformOutcome> = vec![];
    loop {
        let current = chain.last().map_or(tree, |o| &o.after);
        match rebalance_step(current) {
            Ok(outcome) => chain.push(outcome),
            Err(Error::AlreadyBalanced) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spider222() -> Tree {
        Tree::from_edge_list(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    fn h_tree() -> Tree {
        Tree::from_edge_list(&[(0, 1), (0, 3), (0, 2), (2, 4), (4, 5), (4, 6)]).unwrap()
    }

    fn legs(tree: &Tree) -> Vec<usize> {
        tree.segment_sequence().unwrap().values().to_vec()
    }

    #[test]
    fn spider_has_one_sigma_site() {
        let t = spider222();
        let sites = find_sigma_sites(&t);
        assert_eq!(sites.len(), 1);
        assert_eq!(sites[0].attach_index, 2);
        assert_eq!(sites[0].off_path_vertex, 5);
        assert_eq!(sites[0].path.vertices()[2], 0);
    }

    #[test]
    fn no_sigma_sites_on_paths_or_caterpillars() {
        assert!(find_sigma_sites(&Tree::path_graph(6)).is_empty());
        assert!(find_sigma_sites(&h_tree()).is_empty());
        assert!(reduce_to_caterpillar(&h_tree()).unwrap().is_empty());
    }

    #[test]
    fn sigma_on_spider() {
        let t = spider222();
        let site = find_sigma_sites(&t).remove(0);
        let out = sigma_transform(&t, &site).unwrap();
        assert_eq!(legs(&out.after), vec![3, 2, 1]);
        assert_eq!(out.aecc3_before, Rational::new(37, 7));
        assert_eq!(out.aecc3_after, Rational::new(38, 7));
        assert_eq!(out.after.degree_sequence().values(), &[3, 2, 2, 2, 1, 1, 1]);
        assert_eq!(out.after.degree_sequence(), t.degree_sequence());
        assert_eq!(out.after.degree(5), 1);
    }

    #[test]
    fn sigma_rejects_bad_sites() {
        let t = h_tree();
        let path = t.diametric_path();
        // 3 is a leaf hanging off the path: pendant edge
        let hub = path.vertices()[1];
        let leaf = *t.neighbors(hub).iter().find(|&&w| !path.contains(w)).unwrap();
        let site = SigmaSite { path: path.clone(), attach_index: 1, off_path_vertex: leaf };
        assert!(matches!(sigma_transform(&t, &site), Err(Error::InvalidSite(_))));
        let site = SigmaSite { path, attach_index: 0, off_path_vertex: leaf };
        assert!(matches!(sigma_transform(&t, &site), Err(Error::InvalidSite(_))));
    }

    #[test]
    fn spider_reduces_in_one_step() {
        let chain = reduce_to_caterpillar(&spider222()).unwrap();
        assert_eq!(chain.len(), 1);
        assert!(chain[0].after.is_caterpillar());
    }

    #[test]
    fn pi_on_h_tree() {
        let t = h_tree();
        let path = t.path(0, 4);
        let site = orient_pi_site(&t, &path);
        assert_eq!(site.donor(), 0);
        let out = pi_transform(&t, &site).unwrap();
        assert_eq!(out.aecc3_before, Rational::new(32, 7));
        assert_eq!(out.aecc3_after, Rational::new(26, 7));
        assert_eq!(legs(&out.after), vec![2, 1, 1, 1, 1]);
        assert!(out.after.is_generalized_star());
    }

    #[test]
    fn pi_with_leaf_donor_is_identity() {
        let t = h_tree();
        // 1 is a leaf; its side has depth 0
        let site = PiSite { path: t.path(1, 0) };
        let out = pi_transform(&t, &site).unwrap();
        assert!(out.after.is_isomorphic(&t));
        assert_eq!(out.delta(), Rational::from_integer(0));
    }

    #[test]
    fn pi_on_path_with_leaf_end_is_identity() {
        let t = Tree::path_graph(7);
        for site in find_pi_sites(&t).into_iter().filter(|s| t.degree(s.donor()) == 1) {
            let out = pi_transform(&t, &site).unwrap();
            assert!(out.after.is_isomorphic(&t), "{site:?}");
        }
    }

    #[test]
    fn pi_between_interior_path_vertices_folds_into_spider() {
        // both sides of 2-3-4 hang to depth 2, so the 2-side folds onto 4
        let t = Tree::path_graph(7);
        let out = pi_transform(&t, &PiSite { path: t.path(2, 4) }).unwrap();
        assert_eq!(legs(&out.after), vec![2, 2, 2]);
        assert_eq!(out.aecc3_before, Rational::from_integer(6));
        assert_eq!(out.aecc3_after, Rational::new(37, 7));
    }

    #[test]
    fn pi_rejects_wrong_orientation() {
        // 0-1-2-3 with leaves 4, 5 on 3
        let t = Tree::from_edge_list(&[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        for (u, v) in [(2, 0), (3, 4)] {
            let site = PiSite { path: t.path(u, v) };
            assert!(matches!(pi_transform(&t, &site), Err(Error::InvalidSite(_))), "{u}->{v}");
        }
        assert!(pi_transform(&t, &PiSite { path: t.path(0, 2) }).is_ok());
        // interior vertex 3 has degree 3
        let site = PiSite { path: t.path(2, 4) };
        assert!(matches!(pi_transform(&t, &site), Err(Error::InvalidSite(_))));
    }

    #[test]
    fn h_tree_star_reduction() {
        let chain = reduce_to_generalized_star(&h_tree()).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!(legs(&chain[0].after), vec![2, 1, 1, 1, 1]);
        assert!(reduce_to_generalized_star(&spider222()).unwrap().is_empty());
    }

    fn star(legs: &[usize]) -> Tree {
        let mut edges = vec![];
        let mut next = 1;
        for &l in legs {
            let mut prev = 0;
            for _ in 0..l {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::from_edge_list(&edges).unwrap()
    }

    #[test]
    fn rebalance_chain() {
        let t = star(&[4, 1, 1]);
        let first = rebalance_step(&t).unwrap();
        assert_eq!(legs(&first.after), vec![3, 2, 1]);
        assert_eq!((first.aecc3_before, first.aecc3_after), (Rational::new(38, 7), Rational::new(38, 7)));
        let second = rebalance_step(&first.after).unwrap();
        assert_eq!(legs(&second.after), vec![2, 2, 2]);
        assert_eq!(second.aecc3_after, Rational::new(37, 7));
        assert_eq!(rebalance_step(&second.after), Err(Error::AlreadyBalanced));
        assert_eq!(balance_generalized_star(&t).unwrap().len(), 2);
        assert!(balance_generalized_star(&second.after).unwrap().is_empty());
    }

    #[test]
    fn rebalance_421() {
        let chain = balance_generalized_star(&star(&[4, 2, 1])).unwrap();
        assert_eq!(legs(&chain.last().unwrap().after), vec![3, 2, 2]);
    }

    #[test]
    fn rebalance_errors() {
        assert_eq!(rebalance_step(&h_tree()), Err(Error::NotGeneralizedStar));
        assert_eq!(balance_generalized_star(&h_tree()), Err(Error::NotGeneralizedStar));
        assert_eq!(rebalance_step(&Tree::path_graph(5)), Err(Error::AlreadyBalanced));
    }
}
