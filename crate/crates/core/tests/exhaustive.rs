use std::cmp::Ordering;
use std::collections::BTreeSet;

use steiner_ecc::census::{enumerate_free_trees, group_trees, GroupKey, DEFAULT_CAP};
use steiner_ecc::extremal::{
    all_caterpillars, caterpillar_cn_delta_k, caterpillar_cnk, caterpillar_from_degree_sequence,
    compare_extremal, degree_sequence_bound, majorizes, MaxFamily,
};
use steiner_ecc::steiner::aecc3;
use steiner_ecc::{DegreeSequence, Error, Rational, Tree};

#[test]
fn every_spine_order_attains_the_bound() {
    for n in 3..=9 {
        for pi in DegreeSequence::all_of_order(n) {
            let bound = degree_sequence_bound(&pi).unwrap();
            let cats = all_caterpillars(&pi).unwrap();
            assert!(!cats.is_empty());
            for c in &cats {
                assert_eq!(c.degree_sequence(), pi);
                assert!(c.is_caterpillar());
                assert_eq!(aecc3(c).unwrap(), bound, "{pi}");
            }
            assert_eq!(aecc3(&caterpillar_from_degree_sequence(&pi).unwrap()).unwrap(), bound);
        }
    }
}

#[test]
fn constructed_caterpillars_match_enumerated_ones() {
    for n in 3..=10 {
        let trees = enumerate_free_trees(n, DEFAULT_CAP).unwrap();
        for (key, class) in group_trees(&trees, GroupKey::DegreeSequence) {
            let found: BTreeSet<_> =
                class.iter().filter(|t| t.is_caterpillar()).map(Tree::canonical_form).collect();
            let pi = class[0].degree_sequence();
            let built: BTreeSet<_> = all_caterpillars(&pi).unwrap().iter().map(Tree::canonical_form).collect();
            assert_eq!(found, built, "{key}");
        }
    }
}

#[test]
fn majorization_orders_the_closed_form() {
    for n in 4..=12 {
        let seqs: Vec<_> =
            DegreeSequence::all_of_order(n).into_iter().filter(|p| p.max_degree() >= 3).collect();
        for a in &seqs {
            for b in &seqs {
                match compare_extremal(a, b) {
                    Ok(ord) => {
                        let forward = majorizes(a.values(), b.values()).unwrap();
                        let expected = a.internal_count().cmp(&b.internal_count());
                        assert_eq!(ord, expected, "{a} vs {b}");
                        if forward {
                            assert_ne!(ord, Ordering::Greater);
                        }
                    }
                    Err(Error::Incomparable) => {
                        assert!(!majorizes(a.values(), b.values()).unwrap());
                        assert!(!majorizes(b.values(), a.values()).unwrap());
                    }
                    Err(e) => panic!("{a} vs {b}: {e}"),
                }
            }
        }
    }
}

#[test]
fn family_members_are_in_their_families() {
    for n in 4..=14 {
        for k in 1..=n {
            if let Ok(t) = caterpillar_cnk(n, k) {
                let f = MaxFamily::MaxDegreeCount { k };
                assert!(f.contains(&t));
                assert_eq!(aecc3(&t).unwrap(), f.bound(n).unwrap());
            }
            for delta in 3..n {
                if let Ok(t) = caterpillar_cn_delta_k(n, delta, k) {
                    let f = MaxFamily::MaxDegreeWithCount { delta, k };
                    assert!(f.contains(&t));
                    assert_eq!(aecc3(&t).unwrap(), f.bound(n).unwrap());
                }
            }
        }
    }
}

#[test]
fn worked_family_values() {
    assert_eq!(aecc3(&caterpillar_cnk(8, 2).unwrap()).unwrap(), Rational::new(44, 8));
    assert_eq!(aecc3(&caterpillar_cn_delta_k(10, 4, 2).unwrap()).unwrap(), Rational::new(56, 10));
    let lower = MaxFamily::MaxDegreeWithCount { delta: 3, k: 2 }.bound(10).unwrap();
    assert_eq!(lower, Rational::new(74, 10));
}

#[test]
fn grouping_partitions_every_order() {
    for n in 1..=10 {
        let trees = enumerate_free_trees(n, DEFAULT_CAP).unwrap();
        for key in GroupKey::ALL {
            let groups = group_trees(&trees, key);
            let mut seen = BTreeSet::new();
            for class in groups.values() {
                for t in class {
                    assert!(seen.insert(t.canonical_form()), "tree in two classes");
                }
            }
            assert_eq!(seen.len(), trees.len());
        }
    }
}

#[test]
fn enumerated_trees_are_valid_and_distinct() {
    for n in 1..=11 {
        let trees = enumerate_free_trees(n, DEFAULT_CAP).unwrap();
        let forms: BTreeSet<_> = trees.iter().map(Tree::canonical_form).collect();
        assert_eq!(forms.len(), trees.len());
        for t in &trees {
            assert_eq!(t.order(), n);
            assert_eq!(t.edges().len(), n - 1);
        }
    }
    assert_eq!(enumerate_free_trees(12, DEFAULT_CAP).unwrap().len(), 551);
}
