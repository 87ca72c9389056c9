use super::{DegreeSequence, PathInTree, SegmentSequence, Tree, Vertex};
use crate::error::{Error, Result};

impl Tree {
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.vertices().map(|v| self.degree(v)).collect())
            .expect("tree degrees form a valid sequence")
    }

    /// Vertices of degree at least 3.
    pub fn branch_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Walks from `start` through `next` and onward while the current vertex
    /// has degree 2, returning the visited vertices.
    pub(crate) fn walk_through_degree_two(&self, start: Vertex, next: Vertex) -> Vec<Vertex> {
        let mut walk = vec![start, next];
        let (mut prev, mut cur) = (start, next);
        while self.degree(cur) == 2 {
            let step = if self.neighbors(cur)[0] == prev {
                self.neighbors(cur)[1]
            } else {
                self.neighbors(cur)[0]
            };
            prev = cur;
            cur = step;
            walk.push(cur);
        }
        walk
    }

    /// Maximal paths whose interior vertices have degree 2 and whose ends do
    /// not. Each is oriented from its smaller end id; the list is sorted.
    pub fn segments(&self) -> Result<Vec<PathInTree>> {
        if self.order() < 2 {
            return Err(Error::TooSmall { required: 2, order: self.order() });
        }
        let mut out = vec![];
        for a in self.vertices().filter(|&v| self.degree(v) != 2) {
            for &b in self.neighbors(a) {
                let walk = self.walk_through_degree_two(a, b);
                if a < *walk.last().unwrap() {
                    out.push(PathInTree { vertices: walk });
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn segment_sequence(&self) -> Result<SegmentSequence> {
        let lens = self.segments()?.iter().map(PathInTree::len).collect();
        Ok(SegmentSequence::from_unsorted(lens).expect("segments have positive length"))
    }

    /// Deleting all leaves leaves a path (or nothing).
    pub fn is_caterpillar(&self) -> bool {
        self.vertices().filter(|&v| self.degree(v) >= 2).all(|v| {
            self.neighbors(v).iter().filter(|&&w| self.degree(w) >= 2).count() <= 2
        })
    }

    /// At most one branch vertex.
    pub fn is_generalized_star(&self) -> bool {
        self.branch_vertices().len() <= 1
    }

    /// Legs of a generalized star with a branch vertex: each leg runs from
    /// the center to a leaf. Returns `None` unless there is exactly one
    /// branch vertex.
    pub fn star_legs(&self) -> Option<(Vertex, Vec<PathInTree>)> {
        let branch = self.branch_vertices();
        if branch.len() != 1 {
            return None;
        }
        let center = branch[0];
        let legs = self
            .neighbors(center)
            .iter()
            .map(|&w| PathInTree { vertices: self.walk_through_degree_two(center, w) })
            .collect();
        Some((center, legs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h_tree() -> Tree {
        // 0 and 4 are branch vertices joined by 0-2-4; leaves 1,3 on 0 and 5,6 on 4
        Tree::from_edge_list(&[(0, 1), (0, 3), (0, 2), (2, 4), (4, 5), (4, 6)]).unwrap()
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(Tree::path_graph(4).degree_sequence().values(), &[2, 2, 1, 1]);
        assert_eq!(Tree::star(4).degree_sequence().values(), &[3, 1, 1, 1]);
    }

    #[test]
    fn segments_of_small_trees() {
        assert_eq!(Tree::path_graph(5).segment_sequence().unwrap().values(), &[4]);
        let spider = Tree::from_edge_list(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(spider.segment_sequence().unwrap().values(), &[2, 2, 2]);
        assert_eq!(h_tree().segment_sequence().unwrap().values(), &[2, 1, 1, 1, 1]);
        assert_eq!(Tree::path_graph(2).segment_sequence().unwrap().values(), &[1]);
        assert!(matches!(Tree::path_graph(1).segments(), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn caterpillar_predicate() {
        assert!(Tree::path_graph(6).is_caterpillar());
        assert!(Tree::star(6).is_caterpillar());
        assert!(h_tree().is_caterpillar());
        let spider = Tree::from_edge_list(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(!spider.is_caterpillar());
    }

    #[test]
    fn star_legs() {
        let spider = Tree::from_edge_list(&[(0, 1), (1, 2), (2, 7), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let (center, legs) = spider.star_legs().unwrap();
        assert_eq!(center, 0);
        let lens: Vec<_> = legs.iter().map(|l| l.len()).collect();
        assert_eq!(lens, vec![3, 2, 2]);
        assert!(h_tree().star_legs().is_none());
    }
}
