use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn parse_list(text: &str) -> std::result::Result<Vec<usize>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
        .collect()
}

fn join(values: &[usize]) -> String {
    values.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Degree sequence of a tree, non-increasing.
///
/// Valid sequences have `n` entries summing to `2(n-1)`; for `n >= 2` all
/// entries are positive. The single-vertex tree has sequence `(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidDegreeSequence(format!("{}: {m}", join(&values))));
        let n = values.len();
        if n == 0 {
            return bad("empty");
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return bad("not non-increasing");
        }
        if n == 1 {
            return if values[0] == 0 { Ok(Self(values)) } else { bad("sum must be 0") };
        }
        if values[n - 1] == 0 {
            return bad("entries must be positive");
        }
        let sum: usize = values.iter().sum();
        if sum != 2 * (n - 1) {
            return bad(&format!("sum is {sum}, expected {}", 2 * (n - 1)));
        }
        if values.iter().filter(|&&d| d == 1).count() < 2 {
            return bad("fewer than two leaves");
        }
        Ok(Self(values))
    }

    /// Sorts arbitrary-order degrees before validating.
    pub fn from_unsorted(mut values: Vec<usize>) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(values)
    }

    /// Every degree sequence of an `n`-vertex tree, in descending
    /// lexicographic order. These are exactly the partitions of `2n - 2`
    /// into `n` positive parts.
    pub fn all_of_order(n: usize) -> Vec<Self> {
        if n <= 1 {
            return vec![Self(vec![0])];
        }
        // partitions of the excess n - 2 into at most n parts, largest part first
        fn go(rest: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            if slots == 0 {
                return;
            }
            for part in (1..=max.min(rest)).rev() {
                cur.push(part);
                go(rest - part, part, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut excesses = vec![];
        go(n - 2, n - 2, n, &mut vec![], &mut excesses);
        excesses
            .into_iter()
            .map(|ex| {
                let mut d: Vec<usize> = ex.iter().map(|e| e + 1).collect();
                d.resize(n, 1);
                Self(d)
            })
            .collect()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// `d_1`.
    pub fn max_degree(&self) -> usize {
        self.0[0]
    }

    /// Number of internal vertices (entries `>= 2`).
    pub fn internal_count(&self) -> usize {
        self.0.iter().filter(|&&d| d >= 2).count()
    }

    /// Number of vertices attaining the maximum degree.
    pub fn max_degree_count(&self) -> usize {
        self.0.iter().filter(|&&d| d == self.0[0]).count()
    }

    /// The entries `>= 2`, in sequence order.
    pub fn internal_degrees(&self) -> &[usize] {
        &self.0[..self.internal_count()]
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = parse_list(s).map_err(Error::InvalidDegreeSequence)?;
        Self::new(values)
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(d: DegreeSequence) -> Self {
        d.0
    }
}

/// Segment lengths of a tree, non-increasing, all positive.
///
/// A tree with `m` segments has `n = 1 + sum` vertices. Trees only realize
/// `m = 1` (paths) or `m >= 3`; `m = 2` is accepted here because generalized
/// star specifications with two legs are meaningful (they describe a path).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SegmentSequence(Vec<usize>);

impl SegmentSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidSegmentSequence(format!("{}: {m}", join(&values))));
        if values.is_empty() {
            return bad("empty");
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return bad("not non-increasing");
        }
        if values.contains(&0) {
            return bad("lengths must be positive");
        }
        Ok(Self(values))
    }

    pub fn from_unsorted(mut values: Vec<usize>) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Number of segments `m`.
    pub fn count(&self) -> usize {
        self.0.len()
    }

    /// Order of a tree with these segments.
    pub fn order(&self) -> usize {
        1 + self.0.iter().sum::<usize>()
    }

    pub fn longest(&self) -> usize {
        self.0[0]
    }

    pub fn shortest(&self) -> usize {
        *self.0.last().unwrap()
    }

    /// `l_1 - l_m <= 1`.
    pub fn is_balanced(&self) -> bool {
        self.longest() - self.shortest() <= 1
    }

    /// Whether some tree has exactly these segments.
    pub fn is_realizable(&self) -> bool {
        self.count() != 2
    }
}

impl fmt::Display for SegmentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl FromStr for SegmentSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = parse_list(s).map_err(Error::InvalidSegmentSequence)?;
        Self::from_unsorted(values)
    }
}

impl TryFrom<Vec<usize>> for SegmentSequence {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<SegmentSequence> for Vec<usize> {
    fn from(s: SegmentSequence) -> Self {
        s.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sequence_validation() {
        assert!(DegreeSequence::new(vec![2, 2, 1, 1]).is_ok());
        assert!(DegreeSequence::new(vec![3, 1, 1, 1]).is_ok());
        assert!(DegreeSequence::new(vec![1, 2, 2, 1]).is_err());
        assert!(DegreeSequence::new(vec![3, 2, 1, 1]).is_err());
        assert!(DegreeSequence::new(vec![0]).is_ok());
        assert!(DegreeSequence::new(vec![]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let d: DegreeSequence = "3,3,2,1,1,1,1".parse().unwrap();
        assert_eq!(d.to_string(), "(3,3,2,1,1,1,1)");
        assert_eq!(d.internal_count(), 3);
        assert_eq!(d.max_degree_count(), 2);
        let s: SegmentSequence = "1,2,1,1,1".parse().unwrap();
        assert_eq!(s.values(), &[2, 1, 1, 1, 1]);
        assert_eq!(s.order(), 7);
    }

    #[test]
    fn partitions_of_small_orders() {
        // n = 6: excess 4 partitions into at most 6 parts: 4, 31, 22, 211, 1111
        let all = DegreeSequence::all_of_order(6);
        assert_eq!(all.len(), 5);
        assert_eq!(all[0].values(), &[5, 1, 1, 1, 1, 1]);
        assert_eq!(all[4].values(), &[2, 2, 2, 2, 1, 1]);
        assert_eq!(DegreeSequence::all_of_order(2)[0].values(), &[1, 1]);
    }
}
