use serde::{Deserialize, Serialize};

use crate::num::format_ratio;
use crate::tree::{CanonicalForm, Tree, Vertex};
use crate::Rational;

use super::verify::RandomUniverse;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// Nothing to check: the class is degenerate or empty.
    VacuousPass,
    Fail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self != Status::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::VacuousPass => "vacuous-pass",
            Status::Fail => "fail",
        }
    }

    fn from_check(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Fail if any fails; vacuous only if all are.
    pub fn combine(statuses: impl IntoIterator<Item = Status>) -> Status {
        let mut all_vacuous = true;
        for s in statuses {
            match s {
                Status::Fail => return Status::Fail,
                Status::Pass => all_vacuous = false,
                Status::VacuousPass => {}
            }
        }
        if all_vacuous {
            Status::VacuousPass
        } else {
            Status::Pass
        }
    }
}

pub(crate) fn check(ok: bool) -> Status {
    Status::from_check(ok)
}

/// A tree as it appears in a report: isomorphism key, edges, value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub canonical: CanonicalForm,
    pub edges: Vec<(Vertex, Vertex)>,
    pub aecc3: String,
}

impl TreeRecord {
    pub fn new(tree: &Tree, aecc3: &Rational) -> Self {
        Self { canonical: tree.canonical_form(), edges: tree.edges(), aecc3: format_ratio(aecc3) }
    }
}

/// Outcome for one class of the partition a claim is stated over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub key: String,
    pub class_size: usize,
    /// Observed extremum over the class (for move checks: the extreme change
    /// in `aecc_3` over all sites).
    pub extremal_value: Option<String>,
    pub claimed_value: Option<String>,
    /// Every member attaining the extremum.
    pub argext: Vec<TreeRecord>,
    /// Canonical forms of the family the claim names as the extremizers.
    pub expected: Vec<CanonicalForm>,
    pub uniqueness_claimed: bool,
    /// Extremizers outside the named family when the claim allows them.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ties: Vec<TreeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sites_checked: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<TreeRecord>,
    pub status: Status,
}

impl ClassRecord {
    pub(crate) fn new(key: impl ToString, class_size: usize) -> Self {
        Self {
            key: key.to_string(),
            class_size,
            extremal_value: None,
            claimed_value: None,
            argext: vec![],
            expected: vec![],
            uniqueness_claimed: false,
            ties: vec![],
            sites_checked: None,
            counterexamples: vec![],
            status: Status::VacuousPass,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl Relation {
    pub fn holds(self, a: &Rational, b: &Rational) -> bool {
        match self {
            Relation::Less => a < b,
            Relation::Equal => a == b,
            Relation::Greater => a > b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }
}

/// One ordered comparison between the maxima of two degree-sequence
/// classes, both observed over the enumeration and from the closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRecord {
    pub left: String,
    pub right: String,
    pub expected: Relation,
    pub left_observed: String,
    pub right_observed: String,
    pub left_formula: String,
    pub right_formula: String,
    pub status: Status,
}

impl ComparisonRecord {
    pub(crate) fn new(
        left: impl ToString,
        right: impl ToString,
        expected: Relation,
        observed: (Rational, Rational),
        formula: (Rational, Rational),
    ) -> Self {
        let ok = expected.holds(&observed.0, &observed.1) && expected.holds(&formula.0, &formula.1);
        Self {
            left: left.to_string(),
            right: right.to_string(),
            expected,
            left_observed: format_ratio(&observed.0),
            right_observed: format_ratio(&observed.1),
            left_formula: format_ratio(&formula.0),
            right_formula: format_ratio(&formula.1),
            status: check(ok),
        }
    }
}

/// Result of checking one claim at one order (or on a random universe).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub statement: String,
    pub n: Option<usize>,
    /// Set when the trees were drawn at random rather than enumerated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universe: Option<RandomUniverse>,
    pub trees_examined: usize,
    pub status: Status,
    pub classes: Vec<ClassRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comparisons: Vec<ComparisonRecord>,
    /// Observations that are not failures, such as ties for a minimum the
    /// claim does not call unique.
    pub findings: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    pub(crate) fn finish(mut self) -> Self {
        let statuses = self.classes.iter().map(|c| c.status);
        self.status = Status::combine(statuses.chain(self.comparisons.iter().map(|c| c.status)));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per class or comparison: key, value, class size, status.
    pub fn to_csv(&self) -> String {
        // writing into memory cannot fail
        let mut w = csv::Writer::from_writer(vec![]);
        let io = |e: csv::Error| panic!("in-memory csv write failed: {e}");
        w.write_record(["claim", "n", "key", "value", "class_size", "status"]).unwrap_or_else(io);
        let n = self.n.map(|n| n.to_string()).unwrap_or_default();
        for c in &self.classes {
            let value = c.extremal_value.clone().unwrap_or_default();
            let size = c.class_size.to_string();
            w.write_record([self.claim.as_str(), &n, &c.key, &value, &size, c.status.as_str()])
                .unwrap_or_else(io);
        }
        for c in &self.comparisons {
            let key = format!("{} {} {}", c.left, c.expected.symbol(), c.right);
            let value = format!("{} vs {}", c.left_observed, c.right_observed);
            w.write_record([self.claim.as_str(), &n, &key, &value, "2", c.status.as_str()]).unwrap_or_else(io);
        }
        let bytes = w.into_inner().expect("in-memory csv flush");
        String::from_utf8(bytes).expect("csv output is utf-8")
    }
}
