//! Extremal families, their closed-form `aecc_3` values, and majorization.
//!
//! For a degree sequence with `k` internal vertices the maximum of `aecc_3`
//! is `(nk + 2n - k)/n` (or `n - 1` for the path), attained exactly by the
//! caterpillars with that sequence: spine vertices have `ecc_3 = k + 1`,
//! leaves `k + 2`. The family maxima below are this value evaluated at the
//! degree sequence with the most internal vertices in each family.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::num::{mean_of, ExactInt};
use crate::tree::{DegreeSequence, SegmentSequence, Tree};

fn infeasible<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Infeasible(msg.into()))
}

/// A caterpillar given by the degrees of its spine vertices, in spine order.
/// Leaves fill each spine vertex up to its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarSpec {
    spine: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(spine: Vec<usize>) -> Result<Self> {
        if spine.is_empty() {
            return Err(Error::InfeasibleSequence("empty spine".into()));
        }
        if let Some(&d) = spine.iter().find(|&&d| d < 2) {
            return Err(Error::InfeasibleSequence(format!("spine degree {d} below 2")));
        }
        Ok(Self { spine })
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    fn leaves_at(&self, i: usize) -> usize {
        let spine_nbrs = match self.spine.len() {
            1 => 0,
            k if i == 0 || i == k - 1 => 1,
            _ => 2,
        };
        self.spine[i] - spine_nbrs
    }

    pub fn order(&self) -> usize {
        self.spine.len() + (0..self.spine.len()).map(|i| self.leaves_at(i)).sum::<usize>()
    }

    /// Spine vertices are `0..k` in order, leaves follow.
    pub fn build(&self) -> Tree {
        let k = self.spine.len();
        let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        let mut next = k;
        for i in 0..k {
            for _ in 0..self.leaves_at(i) {
                edges.push((i, next));
                next += 1;
            }
        }
        Tree::new(next, &edges).expect("caterpillar construction yields a tree")
    }
}

/// The caterpillar whose spine carries the internal degrees of `pi` in
/// sequence order.
pub fn caterpillar_from_degree_sequence(pi: &DegreeSequence) -> Result<Tree> {
    caterpillar_with_spine_order(pi, pi.internal_degrees())
}

/// A caterpillar realizing `pi` with the given spine order, which must be a
/// rearrangement of the internal degrees of `pi`.
pub fn caterpillar_with_spine_order(pi: &DegreeSequence, spine: &[usize]) -> Result<Tree> {
    if pi.order() < 3 || pi.max_degree() < 2 {
        return Err(Error::InfeasibleSequence(format!("{pi} has no internal vertex")));
    }
    let mut sorted = spine.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != pi.internal_degrees() {
        return Err(Error::InfeasibleSequence(format!(
            "spine {spine:?} is not a rearrangement of the internal degrees of {pi}"
        )));
    }
    Ok(CaterpillarSpec::new(spine.to_vec())?.build())
}

/// Every caterpillar with degree sequence `pi`, one per isomorphism class.
pub fn all_caterpillars(pi: &DegreeSequence) -> Result<Vec<Tree>> {
    let mut spine: Vec<usize> = pi.internal_degrees().to_vec();
    spine.sort_unstable();
    let mut seen = BTreeSet::new();
    let mut out = vec![];
    loop {
        let t = caterpillar_with_spine_order(pi, &spine)?;
        if seen.insert(t.canonical_form()) {
            out.push(t);
        }
        if !next_permutation(&mut spine) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The generalized star `S(l_1, ..., l_m)`: center 0, legs laid out in
/// order. With one or two legs this is a path.
pub fn generalized_star(legs: &SegmentSequence) -> Tree {
    let mut edges = vec![];
    let mut next = 1;
    for &len in legs.values() {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::new(next, &edges).expect("star construction yields a tree")
}

/// Leg lengths of `ST_{n,m}`: `n - 1` split into `m` parts differing by at
/// most one.
pub fn balanced_legs(n: usize, m: usize) -> Result<SegmentSequence> {
    if m == 0 || n < 2 || m > n - 1 {
        return infeasible(format!("cannot split {} edges into {m} legs", n.saturating_sub(1)));
    }
    let (q, r) = ((n - 1) / m, (n - 1) % m);
    let legs = (0..m).map(|i| if i < r { q + 1 } else { q }).collect();
    SegmentSequence::new(legs)
}

pub fn balanced_star(n: usize, m: usize) -> Result<Tree> {
    Ok(generalized_star(&balanced_legs(n, m)?))
}

fn check_broom(n: usize, delta: usize) -> Result<()> {
    if delta < 3 || n < delta + 1 {
        return infeasible(format!("broom needs 3 <= delta <= n - 1, got n = {n}, delta = {delta}"));
    }
    Ok(())
}

/// `P_{n-Δ+2}` with `Δ - 2` pendant vertices on its internal vertex at
/// position `at` (`1 <= at <= n - Δ`).
pub fn broom_at(n: usize, delta: usize, at: usize) -> Result<Tree> {
    check_broom(n, delta)?;
    let len = n - delta + 2;
    if at == 0 || at + 1 >= len {
        return infeasible(format!("position {at} is not internal in a path of {len} vertices"));
    }
    let mut edges: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
    edges.extend((len..n).map(|leaf| (at, leaf)));
    Tree::new(n, &edges)
}

/// A member of the broom family: pendants on the second path vertex.
pub fn broom(n: usize, delta: usize) -> Result<Tree> {
    broom_at(n, delta, 1)
}

/// Every broom `P_{n-Δ+2}` + `Δ - 2` pendants, one per isomorphism class.
pub fn broom_family(n: usize, delta: usize) -> Result<Vec<Tree>> {
    check_broom(n, delta)?;
    let len = n - delta + 2;
    let mut seen = BTreeSet::new();
    let mut out = vec![];
    for at in 1..len - 1 {
        let t = broom_at(n, delta, at)?;
        if seen.insert(t.canonical_form()) {
            out.push(t);
        }
    }
    Ok(out)
}

/// `(Δ, 2, ..., 2, 1, ..., 1)` with `Δ` leaves.
pub fn pi_delta(n: usize, delta: usize) -> Result<DegreeSequence> {
    check_broom(n, delta)?;
    let mut d = vec![delta];
    d.extend(std::iter::repeat_n(2, n - delta - 1));
    d.extend(std::iter::repeat_n(1, delta));
    DegreeSequence::new(d)
}

fn check_max_count(n: usize, delta: usize, k: usize) -> Result<()> {
    if delta < 3 || k == 0 || n <= 3 || n < 2 + k * (delta - 1) {
        return infeasible(format!(
            "need delta >= 3, k >= 1, n > 3 and n >= 2 + k(delta - 1); got n = {n}, delta = {delta}, k = {k}"
        ));
    }
    Ok(())
}

/// `k` entries `Δ`, then `n - (Δ-1)k - 2` twos, then leaves.
pub fn pi_k_delta(n: usize, k: usize, delta: usize) -> Result<DegreeSequence> {
    check_max_count(n, delta, k)?;
    let twos = n - (delta - 1) * k - 2;
    let mut d = vec![delta; k];
    d.extend(std::iter::repeat_n(2, twos));
    d.resize(n, 1);
    DegreeSequence::new(d)
}

/// `k` threes, `n - 2k - 2` twos, then leaves. Requires `1 <= k <= n - 3`
/// and `n >= 2k + 2`.
pub fn pi_k(n: usize, k: usize) -> Result<DegreeSequence> {
    if k == 0 || k + 3 > n || n < 2 * k + 2 {
        return infeasible(format!("need 1 <= k <= n - 3 and n >= 2k + 2; got n = {n}, k = {k}"));
    }
    pi_k_delta(n, k, 3)
}

/// Spine `⌈k/2⌉` copies of `Δ`, then the twos, then `⌊k/2⌋` copies of `Δ`.
fn split_spine(k: usize, delta: usize, twos: usize) -> Vec<usize> {
    let mut spine = vec![delta; k.div_ceil(2)];
    spine.extend(std::iter::repeat_n(2, twos));
    spine.extend(std::iter::repeat_n(delta, k / 2));
    spine
}

pub fn caterpillar_cnk(n: usize, k: usize) -> Result<Tree> {
    let pi = pi_k(n, k)?;
    caterpillar_with_spine_order(&pi, &split_spine(k, 3, n - 2 * k - 2))
}

pub fn caterpillar_cn_delta_k(n: usize, delta: usize, k: usize) -> Result<Tree> {
    let pi = pi_k_delta(n, k, delta)?;
    caterpillar_with_spine_order(&pi, &split_spine(k, delta, n - (delta - 1) * k - 2))
}

/// Maximum of `aecc_3` over trees with degree sequence `pi`:
/// `(nk + 2n - k)/n` when `d_1 >= 3`, `n - 1` when `d_1 = 2`.
pub fn degree_sequence_bound_in<I: ExactInt>(pi: &DegreeSequence) -> Result<Ratio<I>> {
    let n = pi.order();
    let k = pi.internal_count();
    match pi.max_degree() {
        0 | 1 => Err(Error::InfeasibleSequence(format!("{pi}: needs n >= 3"))),
        2 => Ok(Ratio::from_integer(I::from_count(n - 1))),
        _ => Ok(mean_of(n * k + 2 * n - k, n)),
    }
}

pub fn degree_sequence_bound(pi: &DegreeSequence) -> Result<crate::Rational> {
    degree_sequence_bound_in(pi)
}

/// The same bound in the form `((n-1)k + 2n)/n` obtained from the
/// per-vertex values; kept separate so the two forms can be compared.
pub fn degree_sequence_bound_from_profile<I: ExactInt>(pi: &DegreeSequence) -> Result<Ratio<I>> {
    let n = pi.order();
    let k = pi.internal_count();
    match pi.max_degree() {
        0 | 1 => Err(Error::InfeasibleSequence(format!("{pi}: needs n >= 3"))),
        2 => Ok(Ratio::from_integer(I::from_count(n - 1))),
        // k spine vertices at k+1, n-k leaves at k+2
        _ => Ok(mean_of(k * (k + 1) + (n - k) * (k + 2), n)),
    }
}

/// Families of trees over which `aecc_3` is maximized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaxFamily {
    /// All trees of order `n`.
    AllTrees,
    /// Trees with maximum degree exactly `delta >= 3`.
    MaxDegree { delta: usize },
    /// Trees with exactly `k` vertices of maximum degree.
    MaxDegreeCount { k: usize },
    /// Trees with exactly `k` vertices of maximum degree `delta`.
    MaxDegreeWithCount { delta: usize, k: usize },
}

impl MaxFamily {
    pub fn contains(&self, tree: &Tree) -> bool {
        let pi = tree.degree_sequence();
        match *self {
            MaxFamily::AllTrees => true,
            MaxFamily::MaxDegree { delta } => pi.max_degree() == delta,
            MaxFamily::MaxDegreeCount { k } => pi.max_degree_count() == k,
            MaxFamily::MaxDegreeWithCount { delta, k } => {
                pi.max_degree() == delta && pi.max_degree_count() == k
            }
        }
    }

    /// The degree sequence whose caterpillars are the maximizers.
    pub fn extremal_sequence(&self, n: usize) -> Result<DegreeSequence> {
        match *self {
            MaxFamily::AllTrees => {
                if n < 3 {
                    return infeasible(format!("need n >= 3, got {n}"));
                }
                let mut d = vec![2; n - 2];
                d.extend([1, 1]);
                DegreeSequence::new(d)
            }
            MaxFamily::MaxDegree { delta } => pi_delta(n, delta),
            MaxFamily::MaxDegreeCount { k } => pi_k(n, k),
            MaxFamily::MaxDegreeWithCount { delta, k } => pi_k_delta(n, k, delta),
        }
    }

    /// Every maximizer, one per isomorphism class, built from the family's
    /// own definition.
    pub fn extremal_trees(&self, n: usize) -> Result<Vec<Tree>> {
        match *self {
            MaxFamily::AllTrees => {
                self.extremal_sequence(n)?;
                Ok(vec![Tree::path_graph(n)])
            }
            MaxFamily::MaxDegree { delta } => broom_family(n, delta),
            _ => all_caterpillars(&self.extremal_sequence(n)?),
        }
    }

    /// Closed-form maximum of `aecc_3` over the family.
    pub fn bound_in<I: ExactInt>(&self, n: usize) -> Result<Ratio<I>> {
        self.extremal_sequence(n)?;
        let (n1, spine) = match *self {
            MaxFamily::AllTrees => return Ok(Ratio::from_integer(I::from_count(n - 1))),
            MaxFamily::MaxDegree { delta } => (n - 1, n - delta),
            MaxFamily::MaxDegreeCount { k } => (n - 1, n - k - 2),
            MaxFamily::MaxDegreeWithCount { delta, k } => (n - 1, n - (delta - 2) * k - 2),
        };
        Ok(mean_of(n1 * spine + 2 * n, n))
    }

    pub fn bound(&self, n: usize) -> Result<crate::Rational> {
        self.bound_in(n)
    }
}

/// Prefix-sum dominance of `x` over `y` after sorting both non-increasing.
pub fn majorizes(x: &[usize], y: &[usize]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let (sx, sy): (usize, usize) = (x.iter().sum(), y.iter().sum());
    if sx != sy {
        return Err(Error::SumMismatch(sx, sy));
    }
    let desc = |v: &[usize]| {
        let mut v = v.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let (x, y) = (desc(x), desc(y));
    let (mut px, mut py) = (0, 0);
    for (a, b) in x.iter().zip(&y) {
        px += a;
        py += b;
        if px < py {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orders the extremal values of two majorization-comparable degree
/// sequences with `d_1 >= 3`: `bound(pi1).cmp(bound(pi2))`.
///
/// When `pi1` majorizes `pi2` the result is never `Greater`, and it is
/// `Less` exactly when `pi1` has fewer internal vertices.
pub fn compare_extremal(pi1: &DegreeSequence, pi2: &DegreeSequence) -> Result<Ordering> {
    for pi in [pi1, pi2] {
        if pi.max_degree() < 3 {
            return Err(Error::InfeasibleSequence(format!("{pi} has maximum degree below 3")));
        }
    }
    let forward = majorizes(pi1.values(), pi2.values())?;
    let backward = majorizes(pi2.values(), pi1.values())?;
    if !forward && !backward {
        return Err(Error::Incomparable);
    }
    Ok(degree_sequence_bound(pi1)?.cmp(&degree_sequence_bound(pi2)?))
}

/// Maxima for `k` vertices of maximum degree `Δ - 1` and of `Δ`, in that
/// order. The first is strictly larger.
///
/// Requires `n > 3`, `k >= 1`, `Δ > 3` and `n >= 2 + k(Δ - 1)` (which also
/// makes the `Δ - 1` family feasible).
pub fn max_degree_step_bounds(
    n: usize,
    k: usize,
    delta: usize,
) -> Result<(crate::Rational, crate::Rational)> {
    if delta <= 3 {
        return infeasible(format!("need delta > 3, got {delta}"));
    }
    let lower = MaxFamily::MaxDegreeWithCount { delta: delta - 1, k }.bound(n)?;
    let upper = MaxFamily::MaxDegreeWithCount { delta, k }.bound(n)?;
    Ok((lower, upper))
}
