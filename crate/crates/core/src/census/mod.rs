//! Exhaustive enumeration of free trees and mechanical checks of the
//! extremal claims over every tree of a given order.

mod report;
mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::{CanonicalForm, Tree};

pub use report::{ClassRecord, ComparisonRecord, Relation, Status, TreeRecord, VerificationReport};
pub use verify::{verify, verify_random, Claim, RandomUniverse};

/// Largest order enumerated unless the caller raises it.
pub const DEFAULT_CAP: usize = 12;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n == 0 {
        return Err(Error::TooSmall { required: 1, order: 0 });
    }
    Ok(())
}

/// One representative per isomorphism class of trees on `n` vertices,
/// sorted by canonical form.
///
/// Level `n` is grown from level `n - 1` by hanging a leaf on every vertex
/// of every representative and keeping the first tree of each class.
pub fn enumerate_free_trees(n: usize, cap: usize) -> Result<Vec<Tree>> {
    check_cap(n, cap)?;
    let mut level = vec![Tree::path_graph(1)];
    for order in 2..=n {
        let mut next: BTreeMap<CanonicalForm, Tree> = BTreeMap::new();
        for t in &level {
            let base = t.edges();
            for v in t.vertices() {
                let mut edges = base.clone();
                edges.push((v, order - 1));
                let grown = Tree::new(order, &edges).expect("adding a leaf keeps a tree");
                next.entry(grown.canonical_form()).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Number of isomorphism classes among all `n^(n-2)` labelled trees, found
/// by running every Prüfer code. Independent of [`enumerate_free_trees`];
/// only practical for small `n`.
pub fn count_by_prufer(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let mut code = vec![0; n - 2];
    let mut forms = BTreeSet::new();
    loop {
        forms.insert(Tree::from_prufer(&code).expect("in-range code").canonical_form());
        // odometer increment
        let Some(i) = code.iter().rposition(|&c| c + 1 < n) else {
            break;
        };
        code[i] += 1;
        code[i + 1..].iter_mut().for_each(|c| *c = 0);
    }
    forms.len()
}

/// How trees are partitioned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKey {
    DegreeSequence,
    SegmentSequence,
    SegmentCount,
    MaxDegree,
    MaxDegreeCount,
}

impl GroupKey {
    pub const ALL: [GroupKey; 5] = [
        GroupKey::DegreeSequence,
        GroupKey::SegmentSequence,
        GroupKey::SegmentCount,
        GroupKey::MaxDegree,
        GroupKey::MaxDegreeCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupKey::DegreeSequence => "degree_seq",
            GroupKey::SegmentSequence => "segment_seq",
            GroupKey::SegmentCount => "segment_count",
            GroupKey::MaxDegree => "max_degree",
            GroupKey::MaxDegreeCount => "count_max_degree",
        }
    }

    pub fn key_of(self, tree: &Tree) -> ClassKey {
        // the single vertex has no segments
        let segments = || tree.segment_sequence().map(|s| s.values().to_vec()).unwrap_or_default();
        match self {
            GroupKey::DegreeSequence => ClassKey::Sequence(tree.degree_sequence().values().to_vec()),
            GroupKey::SegmentSequence => ClassKey::Sequence(segments()),
            GroupKey::SegmentCount => ClassKey::Count(segments().len()),
            GroupKey::MaxDegree => ClassKey::Count(tree.degree_sequence().max_degree()),
            GroupKey::MaxDegreeCount => ClassKey::Count(tree.degree_sequence().max_degree_count()),
        }
    }
}

impl fmt::Display for GroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('-', "_");
        GroupKey::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Value of a [`GroupKey`] on one tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKey {
    Sequence(Vec<usize>),
    Count(usize),
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKey::Sequence(v) => {
                let parts: Vec<_> = v.iter().map(usize::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            ClassKey::Count(c) => write!(f, "{c}"),
        }
    }
}

/// Partitions `trees` by `key`; classes keep the input order.
pub fn group_trees(trees: &[Tree], key: GroupKey) -> BTreeMap<ClassKey, Vec<Tree>> {
    let mut groups: BTreeMap<ClassKey, Vec<Tree>> = BTreeMap::new();
    for t in trees {
        groups.entry(key.key_of(t)).or_default().push(t.clone());
    }
    groups
}
