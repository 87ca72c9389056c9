use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{check, ClassRecord, ComparisonRecord, Relation, Status, TreeRecord};
use super::{enumerate_free_trees, ClassKey, GroupKey, VerificationReport};
use crate::error::{Error, Result};
use crate::extremal::{
    all_caterpillars, degree_sequence_bound, generalized_star, majorizes, balanced_star, MaxFamily,
};
use crate::num::format_ratio;
use crate::steiner::aecc3;
use crate::transforms::{
    all_sigma_sites, check_pi_site, degree_two_paths, pi_transform, sigma_transform, PiSite,
};
use crate::tree::{CanonicalForm, DegreeSequence, SegmentSequence, Tree};
use crate::Rational;

/// The statements that can be checked over all trees of one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// Max over a degree-sequence class is the closed form, attained
    /// exactly by the caterpillars of the class.
    DegreeSequenceMax,
    /// The generalized star is the unique minimizer of its segment class.
    SegmentSequenceMin,
    /// The balanced star attains the minimum of its segment-count class.
    SegmentCountMin,
    /// The path is the unique maximizer over all trees.
    PathMax,
    /// Brooms maximize over trees of maximum degree `Δ`.
    MaxDegreeMax,
    /// Caterpillars of `π_k` maximize over trees with `k` vertices of
    /// maximum degree.
    MaxDegreeCountMax,
    /// Caterpillars of `π_{k,Δ}` maximize over trees with `k` vertices of
    /// maximum degree `Δ`.
    MaxDegreeWithCountMax,
    /// Majorization reverses the order of the class maxima.
    MajorizationOrder,
    /// Lowering the maximum degree by one raises the family maximum.
    MaxDegreeStep,
    /// Every σ move strictly increases `aecc_3` and keeps the degrees.
    SigmaIncreases,
    /// No π move increases `aecc_3`.
    PiDoesNotIncrease,
}

impl Claim {
    pub const ALL: [Claim; 11] = [
        Claim::DegreeSequenceMax,
        Claim::SegmentSequenceMin,
        Claim::SegmentCountMin,
        Claim::PathMax,
        Claim::MaxDegreeMax,
        Claim::MaxDegreeCountMax,
        Claim::MaxDegreeWithCountMax,
        Claim::MajorizationOrder,
        Claim::MaxDegreeStep,
        Claim::SigmaIncreases,
        Claim::PiDoesNotIncrease,
    ];

    /// Stable id used in reports and on the command line.
    pub fn id(self) -> &'static str {
        match self {
            Claim::DegreeSequenceMax => "degree_sequence_max",
            Claim::SegmentSequenceMin => "segment_sequence_min",
            Claim::SegmentCountMin => "segment_count_min",
            Claim::PathMax => "path_max",
            Claim::MaxDegreeMax => "max_degree_max",
            Claim::MaxDegreeCountMax => "max_degree_count_max",
            Claim::MaxDegreeWithCountMax => "max_degree_with_count_max",
            Claim::MajorizationOrder => "majorization_order",
            Claim::MaxDegreeStep => "max_degree_step",
            Claim::SigmaIncreases => "sigma_mono",
            Claim::PiDoesNotIncrease => "pi_mono",
        }
    }

    /// Older numbered ids, still accepted when parsing.
    pub fn alias(self) -> Option<&'static str> {
        Some(match self {
            Claim::DegreeSequenceMax => "thm1_1",
            Claim::SegmentSequenceMin => "thm1_2",
            Claim::SegmentCountMin => "thm1_3",
            Claim::PathMax => "cor3_2",
            Claim::MaxDegreeMax => "cor3_3",
            Claim::MaxDegreeCountMax => "cor3_4",
            Claim::MaxDegreeWithCountMax => "cor3_5",
            Claim::MajorizationOrder => "thm3_1",
            Claim::MaxDegreeStep => "cor3_6",
            Claim::SigmaIncreases | Claim::PiDoesNotIncrease => return None,
        })
    }

    pub fn statement(self) -> &'static str {
        match self {
            Claim::DegreeSequenceMax => {
                "max aecc3 over trees with degree sequence pi is (nk+2n-k)/n (n-1 for the path), \
                 attained exactly by the caterpillars with degree sequence pi"
            }
            Claim::SegmentSequenceMin => {
                "the generalized star is the unique minimizer of aecc3 among trees with its segment sequence"
            }
            Claim::SegmentCountMin => {
                "the balanced generalized star attains the minimum of aecc3 among trees with m segments"
            }
            Claim::PathMax => "max aecc3 over all trees of order n is n-1, attained only by the path",
            Claim::MaxDegreeMax => {
                "max aecc3 over trees of maximum degree D is ((n-1)(n-D)+2n)/n, attained exactly by the brooms"
            }
            Claim::MaxDegreeCountMax => {
                "max aecc3 over trees with exactly k vertices of maximum degree is ((n-1)(n-k-2)+2n)/n, \
                 attained exactly by the caterpillars with degrees (3^k, 2^(n-2k-2), 1^(k+2))"
            }
            Claim::MaxDegreeWithCountMax => {
                "max aecc3 over trees with exactly k vertices of maximum degree D is \
                 ((n-1)(n-(D-2)k-2)+2n)/n, attained exactly by the caterpillars with degrees \
                 (D^k, 2^(n-(D-1)k-2), 1^...)"
            }
            Claim::MajorizationOrder => {
                "if pi1 majorizes pi2 (both with max degree >= 3) then max aecc3 over pi1 is at most \
                 max aecc3 over pi2, strictly when their internal vertex counts differ"
            }
            Claim::MaxDegreeStep => {
                "for D > 3 the maximum over k vertices of maximum degree D-1 strictly exceeds the \
                 maximum over k vertices of maximum degree D"
            }
            Claim::SigmaIncreases => {
                "every sigma move strictly increases aecc3 and preserves the degree sequence"
            }
            Claim::PiDoesNotIncrease => "no pi move increases aecc3",
        }
    }

    pub fn is_move_check(self) -> bool {
        matches!(self, Claim::SigmaIncreases | Claim::PiDoesNotIncrease)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let underscored = s.replace('-', "_");
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == underscored || c.alias() == Some(underscored.as_str()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Prüfer-uniform random labelled trees, reproducible from `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomUniverse {
    pub seed: u64,
    pub count: usize,
    pub min_order: usize,
    pub max_order: usize,
}

impl Default for RandomUniverse {
    fn default() -> Self {
        Self { seed: 0, count: 1000, min_order: 3, max_order: 60 }
    }
}

impl RandomUniverse {
    pub fn trees(&self) -> Vec<Tree> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|_| {
                let n = rng.random_range(self.min_order..=self.max_order);
                crate::tree::random_tree(n, &mut rng)
            })
            .collect()
    }
}

struct Scored {
    tree: Tree,
    value: Rational,
    form: CanonicalForm,
}

fn score_all(trees: Vec<Tree>) -> Result<Vec<Scored>> {
    trees
        .into_par_iter()
        .map(|tree| {
            let value = aecc3(&tree)?;
            let form = tree.canonical_form();
            Ok(Scored { tree, value, form })
        })
        .collect()
}

fn by_key(scored: &[Scored], key: GroupKey) -> BTreeMap<ClassKey, Vec<&Scored>> {
    let mut out: BTreeMap<ClassKey, Vec<&Scored>> = BTreeMap::new();
    for s in scored {
        out.entry(key.key_of(&s.tree)).or_default().push(s);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Extreme {
    Max,
    Min,
}

/// What the claim says about the extremizers.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Expect {
    /// The argext set is exactly the named family.
    Family,
    /// The argext set is the single named tree.
    Unique,
    /// The named tree is among the extremizers; others are ties.
    Attains,
}

fn record(s: &Scored) -> TreeRecord {
    TreeRecord::new(&s.tree, &s.value)
}

fn extremal_class(
    key: impl ToString,
    members: &[&Scored],
    extreme: Extreme,
    claimed: Rational,
    expected: &[Tree],
    expect: Expect,
) -> Result<ClassRecord> {
    let mut rec = ClassRecord::new(key, members.len());
    rec.claimed_value = Some(format_ratio(&claimed));
    rec.uniqueness_claimed = expect == Expect::Unique;
    let expected = score_all(expected.to_vec())?;
    rec.expected = expected.iter().map(|s| s.form.clone()).collect();
    let expected_forms: BTreeSet<_> = rec.expected.iter().cloned().collect();

    let values = members.iter().map(|s| s.value);
    let Some(value) = (match extreme {
        Extreme::Max => values.max(),
        Extreme::Min => values.min(),
    }) else {
        rec.status = check(expected.is_empty());
        return Ok(rec);
    };
    rec.extremal_value = Some(format_ratio(&value));
    let argext: Vec<&Scored> = members.iter().copied().filter(|s| s.value == value).collect();
    rec.argext = argext.iter().map(|s| record(s)).collect();
    let argext_forms: BTreeSet<_> = argext.iter().map(|s| s.form.clone()).collect();

    let family_ok = match expect {
        Expect::Family => argext_forms == expected_forms,
        Expect::Unique => argext_forms == expected_forms && expected_forms.len() == 1,
        Expect::Attains => !expected_forms.is_empty() && expected_forms.is_subset(&argext_forms),
    };
    let expected_values_ok = expected.iter().all(|s| s.value == claimed);
    if expect == Expect::Attains {
        rec.ties = argext.iter().filter(|s| !expected_forms.contains(&s.form)).map(|s| record(s)).collect();
    } else {
        rec.counterexamples =
            argext.iter().filter(|s| !expected_forms.contains(&s.form)).map(|s| record(s)).collect();
    }
    rec.counterexamples.extend(
        expected
            .iter()
            .filter(|s| !argext_forms.contains(&s.form) || s.value != claimed)
            .map(record),
    );
    let ok = value == claimed && family_ok && expected_values_ok;
    rec.status = if ok && members.len() == 1 && expect != Expect::Family {
        // the named tree is the only member: nothing to compare against
        Status::VacuousPass
    } else {
        check(ok)
    };
    Ok(rec)
}

fn vacuous_report(claim: Claim, n: Option<usize>, trees: usize, why: &str) -> VerificationReport {
    let mut rec = ClassRecord::new(why, trees);
    rec.status = Status::VacuousPass;
    report(claim, n, trees, vec![rec], vec![], vec![])
}

fn report(
    claim: Claim,
    n: Option<usize>,
    trees_examined: usize,
    classes: Vec<ClassRecord>,
    comparisons: Vec<ComparisonRecord>,
    findings: Vec<String>,
) -> VerificationReport {
    VerificationReport {
        claim: claim.id().to_string(),
        statement: claim.statement().to_string(),
        n,
        universe: None,
        trees_examined,
        status: Status::VacuousPass,
        classes,
        comparisons,
        findings,
    }
    .finish()
}

/// Checks `claim` on every free tree of order `n`.
pub fn verify(claim: Claim, n: usize, cap: usize) -> Result<VerificationReport> {
    let trees = enumerate_free_trees(n, cap)?;
    let count = trees.len();
    if n < 3 {
        return Ok(vacuous_report(claim, Some(n), count, "n < 3"));
    }
    if claim.is_move_check() {
        let classes = move_classes(claim, &trees, |t| GroupKey::DegreeSequence.key_of(t).to_string())?;
        return Ok(report(claim, Some(n), count, classes, vec![], vec![]));
    }
    let scored = score_all(trees)?;
    let mut findings = vec![];
    let mut comparisons = vec![];
    let classes = match claim {
        Claim::DegreeSequenceMax => degree_sequence_max(&scored, &mut findings)?,
        Claim::SegmentSequenceMin => segment_sequence_min(&scored)?,
        Claim::SegmentCountMin => segment_count_min(n, &scored, &mut findings)?,
        Claim::PathMax => {
            let all: Vec<&Scored> = scored.iter().collect();
            let claimed = MaxFamily::AllTrees.bound(n)?;
            let path = [Tree::path_graph(n)];
            vec![extremal_class("all trees", &all, Extreme::Max, claimed, &path, Expect::Unique)?]
        }
        Claim::MaxDegreeMax => family_maxima(n, &scored, (3..n).map(|delta| MaxFamily::MaxDegree { delta }))?,
        Claim::MaxDegreeCountMax => {
            family_maxima(n, &scored, (1..=n - 3).map(|k| MaxFamily::MaxDegreeCount { k }))?
        }
        Claim::MaxDegreeWithCountMax => family_maxima(n, &scored, with_count_families(n, 3))?,
        Claim::MajorizationOrder => {
            comparisons = majorization_order(&scored)?;
            vec![]
        }
        Claim::MaxDegreeStep => {
            comparisons = max_degree_step(n, &scored)?;
            vec![]
        }
        Claim::SigmaIncreases | Claim::PiDoesNotIncrease => unreachable!(),
    };
    let vacuous = classes.is_empty() && comparisons.is_empty();
    let mut rep = report(claim, Some(n), count, classes, comparisons, findings);
    if vacuous {
        rep.findings.push("no instances at this order".into());
    }
    Ok(rep)
}

/// Checks a move claim on a random universe; the trees are grouped by order.
pub fn verify_random(claim: Claim, universe: &RandomUniverse) -> Result<VerificationReport> {
    if !claim.is_move_check() {
        return Err(Error::Infeasible(format!("{claim} is only checked exhaustively")));
    }
    let trees = universe.trees();
    let classes = move_classes(claim, &trees, |t| format!("n={:02}", t.order()))?;
    let mut rep = report(claim, None, trees.len(), classes, vec![], vec![]);
    rep.universe = Some(*universe);
    Ok(rep)
}

fn degree_sequence_max(scored: &[Scored], findings: &mut Vec<String>) -> Result<Vec<ClassRecord>> {
    let mut out = vec![];
    for (key, members) in by_key(scored, GroupKey::DegreeSequence) {
        let ClassKey::Sequence(values) = &key else { unreachable!() };
        let pi = DegreeSequence::new(values.clone())?;
        let caterpillars = all_caterpillars(&pi)?;
        let mut rec = extremal_class(
            &key,
            &members,
            Extreme::Max,
            degree_sequence_bound(&pi)?,
            &caterpillars,
            Expect::Family,
        )?;
        // the constructed family must agree with the structural predicate
        let by_predicate: BTreeSet<_> =
            members.iter().filter(|s| s.tree.is_caterpillar()).map(|s| s.form.clone()).collect();
        let constructed: BTreeSet<_> = rec.expected.iter().cloned().collect();
        if by_predicate != constructed {
            findings.push(format!("{key}: constructed caterpillars differ from the caterpillars found"));
            rec.status = Status::Fail;
        }
        out.push(rec);
    }
    Ok(out)
}

fn segment_sequence_min(scored: &[Scored]) -> Result<Vec<ClassRecord>> {
    let mut out = vec![];
    for (key, members) in by_key(scored, GroupKey::SegmentSequence) {
        let ClassKey::Sequence(values) = &key else { unreachable!() };
        let star = generalized_star(&SegmentSequence::new(values.clone())?);
        let claimed = aecc3(&star)?;
        out.push(extremal_class(&key, &members, Extreme::Min, claimed, &[star], Expect::Unique)?);
    }
    Ok(out)
}

fn segment_count_min(n: usize, scored: &[Scored], findings: &mut Vec<String>) -> Result<Vec<ClassRecord>> {
    let mut out = vec![];
    for (key, members) in by_key(scored, GroupKey::SegmentCount) {
        let ClassKey::Count(m) = key else { unreachable!() };
        let star = balanced_star(n, m)?;
        let claimed = aecc3(&star)?;
        let rec = extremal_class(
            format!("m={m}"),
            &members,
            Extreme::Min,
            claimed,
            &[star],
            Expect::Attains,
        )?;
        for tie in &rec.ties {
            findings.push(format!(
                "m={m}: minimum {} also attained by {} (edges {:?})",
                tie.aecc3, tie.canonical, tie.edges
            ));
        }
        out.push(rec);
    }
    Ok(out)
}

fn with_count_families(n: usize, min_delta: usize) -> impl Iterator<Item = MaxFamily> {
    (min_delta..n).flat_map(move |delta| {
        (1..).take_while(move |k| 2 + k * (delta - 1) <= n).map(move |k| MaxFamily::MaxDegreeWithCount { delta, k })
    })
}

fn family_maxima(
    n: usize,
    scored: &[Scored],
    families: impl Iterator<Item = MaxFamily>,
) -> Result<Vec<ClassRecord>> {
    let mut out = vec![];
    for family in families {
        let members: Vec<&Scored> = scored.iter().filter(|s| family.contains(&s.tree)).collect();
        let key = family_key(&family);
        match family.extremal_sequence(n) {
            Ok(_) => {
                let expected = family.extremal_trees(n)?;
                let claimed = family.bound(n)?;
                out.push(extremal_class(key, &members, Extreme::Max, claimed, &expected, Expect::Family)?);
            }
            // outside the stated range the family must be empty
            Err(Error::Infeasible(_)) => {
                let mut rec = ClassRecord::new(key, members.len());
                rec.counterexamples = members.iter().map(|s| record(s)).collect();
                rec.status = if members.is_empty() { Status::VacuousPass } else { Status::Fail };
                out.push(rec);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn family_key(family: &MaxFamily) -> String {
    match *family {
        MaxFamily::AllTrees => "all trees".into(),
        MaxFamily::MaxDegree { delta } => format!("delta={delta}"),
        MaxFamily::MaxDegreeCount { k } => format!("k={k}"),
        MaxFamily::MaxDegreeWithCount { delta, k } => format!("delta={delta},k={k}"),
    }
}

fn majorization_order(scored: &[Scored]) -> Result<Vec<ComparisonRecord>> {
    let mut maxima: Vec<(DegreeSequence, Rational)> = vec![];
    for (key, members) in by_key(scored, GroupKey::DegreeSequence) {
        let ClassKey::Sequence(values) = key else { unreachable!() };
        let pi = DegreeSequence::new(values)?;
        if pi.max_degree() >= 3 {
            let max = members.iter().map(|s| s.value).max().expect("classes are non-empty");
            maxima.push((pi, max));
        }
    }
    let mut out = vec![];
    for (a, max_a) in &maxima {
        for (b, max_b) in &maxima {
            if a == b || !majorizes(a.values(), b.values())? {
                continue;
            }
            let expected =
                if a.internal_count() == b.internal_count() { Relation::Equal } else { Relation::Less };
            let formula = (degree_sequence_bound(a)?, degree_sequence_bound(b)?);
            out.push(ComparisonRecord::new(a, b, expected, (*max_a, *max_b), formula));
        }
    }
    Ok(out)
}

fn max_degree_step(n: usize, scored: &[Scored]) -> Result<Vec<ComparisonRecord>> {
    let mut out = vec![];
    for family in with_count_families(n, 4) {
        let MaxFamily::MaxDegreeWithCount { delta, k } = family else { unreachable!() };
        let lower = MaxFamily::MaxDegreeWithCount { delta: delta - 1, k };
        let observed_max = |f: &MaxFamily| {
            scored.iter().filter(|s| f.contains(&s.tree)).map(|s| s.value).max().ok_or_else(|| {
                Error::Infeasible(format!("no tree of order {n} in family {}", family_key(f)))
            })
        };
        let observed = (observed_max(&lower)?, observed_max(&family)?);
        let formula = (lower.bound(n)?, family.bound(n)?);
        out.push(ComparisonRecord::new(
            lower.extremal_sequence(n)?,
            family.extremal_sequence(n)?,
            Relation::Greater,
            observed,
            formula,
        ));
    }
    Ok(out)
}

struct MoveTally {
    sites: usize,
    /// Smallest (σ) or largest (π) change seen.
    extreme: Option<Rational>,
    failed: bool,
}

fn tally_moves(claim: Claim, tree: &Tree) -> Result<MoveTally> {
    let mut t = MoveTally { sites: 0, extreme: None, failed: false };
    let mut note = |delta: Rational, ok: bool| {
        t.sites += 1;
        t.failed |= !ok;
        t.extreme = Some(match (t.extreme, claim) {
            (None, _) => delta,
            (Some(e), Claim::SigmaIncreases) => e.min(delta),
            (Some(e), _) => e.max(delta),
        });
    };
    match claim {
        Claim::SigmaIncreases => {
            for site in all_sigma_sites(tree) {
                let o = sigma_transform(tree, &site)?;
                let same_degrees = o.after.degree_sequence() == o.before.degree_sequence();
                note(o.delta(), o.aecc3_after > o.aecc3_before && same_degrees);
            }
        }
        _ => {
            for path in degree_two_paths(tree) {
                for site in [PiSite { path: path.clone() }, PiSite { path: path.reversed() }] {
                    if check_pi_site(tree, &site).is_ok() {
                        let o = pi_transform(tree, &site)?;
                        note(o.delta(), o.aecc3_after <= o.aecc3_before);
                    }
                }
            }
        }
    }
    Ok(t)
}

fn move_classes(
    claim: Claim,
    trees: &[Tree],
    key: impl Fn(&Tree) -> String,
) -> Result<Vec<ClassRecord>> {
    let tallies: Vec<MoveTally> = trees.par_iter().map(|t| tally_moves(claim, t)).collect::<Result<_>>()?;
    let mut groups: BTreeMap<String, Vec<(&Tree, &MoveTally)>> = BTreeMap::new();
    for (t, tally) in trees.iter().zip(&tallies) {
        groups.entry(key(t)).or_default().push((t, tally));
    }
    let mut out = vec![];
    for (key, members) in groups {
        let mut rec = ClassRecord::new(key, members.len());
        let sites: usize = members.iter().map(|(_, t)| t.sites).sum();
        rec.sites_checked = Some(sites);
        let extremes = members.iter().filter_map(|(_, t)| t.extreme);
        let extreme = match claim {
            Claim::SigmaIncreases => extremes.min(),
            _ => extremes.max(),
        };
        rec.extremal_value = extreme.map(|e| format_ratio(&e));
        rec.claimed_value = Some(match claim {
            Claim::SigmaIncreases => "> 0/1".into(),
            _ => "<= 0/1".into(),
        });
        for (t, tally) in &members {
            if tally.failed {
                rec.counterexamples.push(TreeRecord::new(t, &aecc3(t)?));
            }
        }
        rec.status = match (sites, rec.counterexamples.is_empty()) {
            (_, false) => Status::Fail,
            (0, true) => Status::VacuousPass,
            _ => Status::Pass,
        };
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::DEFAULT_CAP;

    fn class<'a>(rep: &'a VerificationReport, key: &str) -> &'a ClassRecord {
        rep.classes.iter().find(|c| c.key == key).unwrap_or_else(|| panic!("no class {key}"))
    }

    #[test]
    fn claim_names_parse() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
            assert_eq!(c.id().replace('_', "-").parse::<Claim>().unwrap(), c);
            if let Some(alias) = c.alias() {
                assert_eq!(alias.parse::<Claim>().unwrap(), c);
            }
        }
        assert!("thm9_9".parse::<Claim>().is_err());
    }

    #[test]
    fn path_is_the_unique_maximum_at_seven() {
        let rep = verify(Claim::PathMax, 7, DEFAULT_CAP).unwrap();
        assert_eq!(rep.trees_examined, 11);
        let c = class(&rep, "all trees");
        assert_eq!(c.extremal_value.as_deref(), Some("6/1"));
        assert_eq!(c.argext.len(), 1);
        assert_eq!(c.argext[0].canonical, Tree::path_graph(7).canonical_form());
        assert!(rep.passed());
    }

    #[test]
    fn balanced_star_minimum_at_seven() {
        let rep = verify(Claim::SegmentCountMin, 7, DEFAULT_CAP).unwrap();
        let c = class(&rep, "m=3");
        assert_eq!(c.extremal_value.as_deref(), Some("37/7"));
        assert!(c.argext.iter().any(|t| t.canonical == balanced_star(7, 3).unwrap().canonical_form()));
        assert!(rep.passed());
    }

    #[test]
    fn spider_is_unique_minimum_of_its_segment_class() {
        let rep = verify(Claim::SegmentSequenceMin, 7, DEFAULT_CAP).unwrap();
        let c = class(&rep, "(2,1,1,1,1)");
        assert_eq!(c.class_size, 3);
        assert_eq!(c.extremal_value.as_deref(), Some("26/7"));
        assert_eq!(c.argext.len(), 1);
        assert_eq!(c.status, Status::Pass);
    }

    #[test]
    fn every_claim_passes_at_small_orders() {
        for n in 1..=8 {
            for claim in Claim::ALL {
                let rep = verify(claim, n, DEFAULT_CAP).unwrap();
                assert!(rep.passed(), "{claim} at n={n}: {}", rep.to_json());
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify(Claim::DegreeSequenceMax, 8, DEFAULT_CAP).unwrap();
        let b = verify(Claim::DegreeSequenceMax, 8, DEFAULT_CAP).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn random_universe_is_reproducible() {
        let u = RandomUniverse { count: 20, max_order: 15, ..Default::default() };
        let a: Vec<_> = u.trees().iter().map(Tree::edges).collect();
        let b: Vec<_> = u.trees().iter().map(Tree::edges).collect();
        assert_eq!(a, b);
        let rep = verify_random(Claim::SigmaIncreases, &u).unwrap();
        assert!(rep.passed());
        assert!(verify_random(Claim::PathMax, &u).is_err());
    }
}
