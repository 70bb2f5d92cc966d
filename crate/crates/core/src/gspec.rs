//! Generating data of an operation: a non-increasing threshold function
//! `g` on the extended chain, its fixed point `e` (the neutral element) and
//! an independent min/max choice at every off-diagonal critical pair.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domain::{BinTable, Chain, ExtValue};
use crate::error::{Error, Result};

/// Which side of a critical pair the operation returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tie {
    Min,
    Max,
}

impl Tie {
    pub fn pick(self, x: usize, y: usize) -> usize {
        match self {
            Tie::Min => x.min(y),
            Tie::Max => x.max(y),
        }
    }
}

/// `(a, b)` with `g(a) = b` and `g(b) = a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CriticalPair {
    pub a: usize,
    pub b: usize,
}

/// A validated generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GSpec {
    k: usize,
    e: usize,
    g: Vec<ExtValue>,
    ties: BTreeMap<(usize, usize), Tie>,
}

/// One violated generator invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GSpecIssue {
    EmptyChain,
    WrongLength { expected: usize, found: usize },
    NotHalfStep { index: usize },
    ValueOutOfRange { index: usize },
    Increasing { index: usize },
    NeutralOutOfRange { e: usize },
    NotFixedPoint { e: usize },
    TieOnNonCritical { a: usize, b: usize },
    DuplicateTie { a: usize, b: usize },
}

impl fmt::Display for GSpecIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GSpecIssue::EmptyChain => write!(f, "k must be at least 1"),
            GSpecIssue::WrongLength { expected, found } => {
                write!(f, "g has {found} entries, expected {expected}")
            }
            GSpecIssue::NotHalfStep { index } => {
                write!(f, "g[{index}] is not a multiple of 1/2")
            }
            GSpecIssue::ValueOutOfRange { index } => write!(f, "g[{index}] is outside the chain"),
            GSpecIssue::Increasing { index } => {
                write!(f, "g increases between index {index} and {}", index + 1)
            }
            GSpecIssue::NeutralOutOfRange { e } => write!(f, "e = {e} is outside the chain"),
            GSpecIssue::NotFixedPoint { e } => write!(f, "g[{e}] != {e}"),
            GSpecIssue::TieOnNonCritical { a, b } => {
                write!(f, "tie choice given for non-critical pair ({a}, {b})")
            }
            GSpecIssue::DuplicateTie { a, b } => write!(f, "tie choice for ({a}, {b}) given twice"),
        }
    }
}

/// Serialized form: `{"k":3,"e":1,"g":[2,1,0],"ties":[{"a":0,"b":2,"choice":"max"}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GSpecDraft {
    pub k: usize,
    pub e: usize,
    pub g: Vec<f64>,
    #[serde(default)]
    pub ties: Vec<TieEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TieEntry {
    pub a: usize,
    pub b: usize,
    pub choice: Tie,
}

/// Outcome of [`validate_gspec`].
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub spec: Option<GSpec>,
    pub issues: Vec<GSpecIssue>,
    /// Critical pairs that received the default `Min` choice.
    pub defaulted: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.spec.is_some()
    }

    pub fn into_result(self) -> Result<GSpec> {
        self.spec.ok_or(Error::InvalidGSpec(self.issues))
    }
}

/// Checks every generator invariant and fills unspecified critical pairs
/// with [`Tie::Min`].
pub fn validate_gspec(draft: &GSpecDraft) -> ValidationReport {
    let mut issues = Vec::new();
    let mut g = Vec::with_capacity(draft.g.len());
    for (index, &v) in draft.g.iter().enumerate() {
        match ExtValue::from_f64(v) {
            Ok(x) => g.push(x),
            Err(_) => {
                issues.push(GSpecIssue::NotHalfStep { index });
                g.push(ExtValue::point(0));
            }
        }
    }
    let ties = draft.ties.iter().map(|t| ((t.a, t.b), t.choice));
    let report = validate_parts(draft.k, draft.e, g, ties);
    if issues.is_empty() {
        report
    } else {
        issues.extend(report.issues);
        ValidationReport { spec: None, issues, defaulted: report.defaulted }
    }
}

fn validate_parts(
    k: usize,
    e: usize,
    g: Vec<ExtValue>,
    ties: impl IntoIterator<Item = ((usize, usize), Tie)>,
) -> ValidationReport {
    let mut issues = Vec::new();
    let fail = |issues| ValidationReport { spec: None, issues, defaulted: Vec::new() };
    if k == 0 {
        return fail(vec![GSpecIssue::EmptyChain]);
    }
    if g.len() != k {
        return fail(vec![GSpecIssue::WrongLength { expected: k, found: g.len() }]);
    }
    let chain = Chain::new(k).expect("k >= 1");
    for (index, &v) in g.iter().enumerate() {
        if chain.check_ext(v).is_err() {
            issues.push(GSpecIssue::ValueOutOfRange { index });
        }
    }
    for index in 0..k - 1 {
        if g[index] < g[index + 1] {
            issues.push(GSpecIssue::Increasing { index });
        }
    }
    if e >= k {
        issues.push(GSpecIssue::NeutralOutOfRange { e });
    } else if g[e] != ExtValue::point(e) {
        issues.push(GSpecIssue::NotFixedPoint { e });
    }

    let is_critical = |a: usize, b: usize| {
        a < k && b < k && g[a] == ExtValue::point(b) && g[b] == ExtValue::point(a)
    };
    let mut tie_map = BTreeMap::new();
    for ((a, b), choice) in ties {
        if a == b || !is_critical(a, b) {
            issues.push(GSpecIssue::TieOnNonCritical { a, b });
        } else if tie_map.insert((a, b), choice).is_some() {
            issues.push(GSpecIssue::DuplicateTie { a, b });
        }
    }
    if !issues.is_empty() {
        return fail(issues);
    }

    let mut defaulted = Vec::new();
    for (a, ga) in g.iter().enumerate() {
        if let Some(b) = ga.as_point() {
            if a != b && is_critical(a, b) && !tie_map.contains_key(&(a, b)) {
                tie_map.insert((a, b), Tie::Min);
                defaulted.push((a, b));
            }
        }
    }
    ValidationReport { spec: Some(GSpec { k, e, g, ties: tie_map }), issues, defaulted }
}

impl GSpec {
    /// Validated constructor; unspecified critical pairs default to `Min`.
    pub fn new(
        k: usize,
        e: usize,
        g: Vec<ExtValue>,
        ties: impl IntoIterator<Item = ((usize, usize), Tie)>,
    ) -> Result<Self> {
        validate_parts(k, e, g, ties).into_result()
    }

    /// Convenience constructor from doubled threshold values.
    pub fn from_doubled(
        k: usize,
        e: usize,
        doubled: &[u32],
        ties: impl IntoIterator<Item = ((usize, usize), Tie)>,
    ) -> Result<Self> {
        Self::new(k, e, doubled.iter().map(|&d| ExtValue::from_doubled(d)).collect(), ties)
    }

    pub fn from_draft(draft: &GSpecDraft) -> Result<Self> {
        validate_gspec(draft).into_result()
    }

    pub fn to_draft(&self) -> GSpecDraft {
        GSpecDraft {
            k: self.k,
            e: self.e,
            g: self.g.iter().map(|v| v.to_f64()).collect(),
            ties: self
                .ties
                .iter()
                .map(|(&(a, b), &choice)| TieEntry { a, b, choice })
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn neutral(&self) -> usize {
        self.e
    }

    pub fn thresholds(&self) -> &[ExtValue] {
        &self.g
    }

    pub fn g(&self, x: usize) -> ExtValue {
        self.g[x]
    }

    /// `g(g(x))`, defined when `g(x)` is a chain point.
    pub fn g2(&self, x: usize) -> Option<ExtValue> {
        self.g[x].as_point().map(|y| self.g[y])
    }

    pub fn ties(&self) -> &BTreeMap<(usize, usize), Tie> {
        &self.ties
    }

    pub fn tie(&self, a: usize, b: usize) -> Option<Tie> {
        self.ties.get(&(a, b)).copied()
    }

    pub fn is_critical(&self, a: usize, b: usize) -> bool {
        self.g[a] == ExtValue::point(b) && self.g[b] == ExtValue::point(a)
    }

    /// True when `tie(a, b) == tie(b, a)` on every critical pair.
    pub fn has_symmetric_ties(&self) -> bool {
        self.ties.iter().all(|(&(a, b), t)| self.ties.get(&(b, a)) == Some(t))
    }

    /// Returns a copy with different tie choices (re-validated).
    pub fn with_ties(&self, ties: impl IntoIterator<Item = ((usize, usize), Tie)>) -> Result<Self> {
        Self::new(self.k, self.e, self.g.clone(), ties)
    }
}

/// All ordered critical pairs, the diagonal pair `(e, e)` included.
pub fn critical_pairs(s: &GSpec) -> BTreeSet<CriticalPair> {
    (0..s.k)
        .filter_map(|a| {
            let b = s.g[a].as_point()?;
            (s.g[b] == ExtValue::point(a)).then_some(CriticalPair { a, b })
        })
        .collect()
}

/// Pairwise surrogate for symmetry of the completed graph of `g`:
/// `b < g(a)` implies `a <= g(b)` and `b > g(a)` implies `a >= g(b)`.
pub fn sym_check(s: &GSpec) -> bool {
    sym_violation(s).is_none()
}

/// First `(a, b)` in index order violating [`sym_check`].
pub fn sym_violation(s: &GSpec) -> Option<(usize, usize)> {
    let k = s.k;
    for a in 0..k {
        for b in 0..k {
            let ok = match s.g[a].cmp_point(b) {
                // g(a) > b
                Ordering::Greater => s.g[b].cmp_point(a) != Ordering::Less,
                Ordering::Less => s.g[b].cmp_point(a) != Ordering::Greater,
                Ordering::Equal => true,
            };
            if !ok {
                return Some((a, b));
            }
        }
    }
    None
}

/// Result of the level-set condition
/// `min{y : g(y) = g(x)} <= g(g(x)) <= max{y : g(y) = g(x)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MmtReport {
    pub holds: bool,
    /// Rows whose threshold is a gap, where `g(g(x))` is undefined.
    pub skipped_rows: Vec<usize>,
    pub violations: Vec<usize>,
}

pub fn mmt_condition(s: &GSpec) -> MmtReport {
    let mut skipped_rows = Vec::new();
    let mut violations = Vec::new();
    for x in 0..s.k {
        let Some(g2) = s.g2(x) else {
            skipped_rows.push(x);
            continue;
        };
        // g is non-increasing, so each level set is a contiguous run.
        let level = s.g[x];
        let lo = (0..s.k).find(|&y| s.g[y] == level).expect("x is in its level set");
        let hi = (0..s.k).rev().find(|&y| s.g[y] == level).expect("x is in its level set");
        if g2 < ExtValue::point(lo) || g2 > ExtValue::point(hi) {
            violations.push(x);
        }
    }
    MmtReport { holds: violations.is_empty(), skipped_rows, violations }
}

/// `T(a, b) != T(b, a)`; a property of the table alone.
pub fn is_extra_critical_table(t: &BinTable, a: usize, b: usize) -> Result<bool> {
    Ok(t.apply(a, b)? != t.apply(b, a)?)
}
