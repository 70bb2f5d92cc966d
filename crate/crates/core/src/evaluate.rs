//! Single-pass evaluation of derived n-ary operations and of the
//! arbitrary-arity word operation.
//!
//! For a class table `T`, the value on `a_1..a_n` depends only on the
//! minimum `c`, the maximum `d`, and (when `T(c, d) != T(d, c)`) on the first
//! and last items equal to `c` or `d`. A scan keeps those in O(1) state.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::domain::{for_each_tuple, tuple_count, BinTable, Word};
use crate::error::{Error, Result};
use crate::verify::{class_check, is_neutral};

/// Running extremes with first/last positions of each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanState {
    pub c: usize,
    pub d: usize,
    c_first: usize,
    c_last: usize,
    d_first: usize,
    d_last: usize,
    seen: usize,
}

impl ScanState {
    pub fn start(x: usize) -> Self {
        ScanState { c: x, d: x, c_first: 0, c_last: 0, d_first: 0, d_last: 0, seen: 1 }
    }

    pub fn push(&mut self, x: usize) {
        let p = self.seen;
        if x < self.c {
            self.c = x;
            self.c_first = p;
            self.c_last = p;
        } else if x == self.c {
            self.c_last = p;
        }
        if x > self.d {
            self.d = x;
            self.d_first = p;
            self.d_last = p;
        } else if x == self.d {
            self.d_last = p;
        }
        self.seen += 1;
    }

    /// Earliest item equal to the current `c` or `d`.
    pub fn first_cd(&self) -> usize {
        if self.c_first <= self.d_first {
            self.c
        } else {
            self.d
        }
    }

    /// Latest item equal to the current `c` or `d`.
    pub fn last_cd(&self) -> usize {
        if self.c_last >= self.d_last {
            self.c
        } else {
            self.d
        }
    }

    pub fn items_seen(&self) -> usize {
        self.seen
    }

    /// Resolves the scan against a class table.
    pub fn finish(&self, t: &BinTable) -> usize {
        let cd = t.get(self.c, self.d);
        if cd == t.get(self.d, self.c) {
            cd
        } else {
            t.get(self.first_cd(), self.last_cd())
        }
    }
}

/// Streams `items` once; the table is assumed to be in the class. Items are
/// range checked.
pub fn fast_eval_trusted(t: &BinTable, items: impl IntoIterator<Item = usize>) -> Result<usize> {
    let chain = t.chain();
    let mut it = items.into_iter();
    let first = chain.check(it.next().ok_or(Error::EmptyWord)?)?;
    let mut state = ScanState::start(first);
    for x in it {
        state.push(chain.check(x)?);
    }
    Ok(state.finish(t))
}

/// A class table paired with its neutral element, checked once.
#[derive(Debug, Clone)]
pub struct Evaluator {
    table: BinTable,
    neutral: usize,
}

impl Evaluator {
    /// Verifies that `t` is in the class and `e` is its neutral element.
    pub fn new(t: BinTable, e: usize) -> Result<Self> {
        let report = class_check(&t);
        if !report.in_class {
            return Err(Error::NotInClass(report.failure().unwrap_or_default()));
        }
        if !is_neutral(&t, e) {
            return Err(Error::NotNeutral(e));
        }
        Ok(Evaluator { table: t, neutral: e })
    }

    /// Skips the class check.
    pub fn trusted(t: BinTable, e: usize) -> Self {
        Evaluator { table: t, neutral: e }
    }

    pub fn table(&self) -> &BinTable {
        &self.table
    }

    pub fn neutral(&self) -> usize {
        self.neutral
    }

    pub fn eval(&self, items: impl IntoIterator<Item = usize>) -> Result<usize> {
        fast_eval_trusted(&self.table, items)
    }

    pub fn eval_word(&self, w: &Word) -> Result<usize> {
        self.eval(w.items().iter().copied())
    }
}

/// Checked single-shot evaluation: verifies the class and neutral element
/// first.
pub fn fast_eval(t: &BinTable, e: usize, tuple: &[usize]) -> Result<usize> {
    Evaluator::new(t.clone(), e)?.eval(tuple.iter().copied())
}

/// The word operation `X* -> X` on a class table; arity 1 is the identity.
pub fn word_eval(t: &BinTable, w: &Word) -> Result<usize> {
    fast_eval_trusted(t, w.items().iter().copied())
}

/// `word_eval(w ++ w') != T(word_eval(w), word_eval(w'))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordLawWitness {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub whole: usize,
    pub combined: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordLawReport {
    pub max_len: usize,
    pub exhaustive: bool,
    pub splits_checked: u64,
    pub violations: Vec<WordLawWitness>,
}

impl WordLawReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Words visited exhaustively when their total count stays below this.
pub const WORD_LAW_EXHAUSTIVE_LIMIT: u128 = 2_000_000;
/// Random words drawn when the exhaustive space is too large.
pub const WORD_LAW_SAMPLES: usize = 200_000;
const MAX_REPORTED: usize = 100;

/// Checks `F(w ++ w') = F(F(w), F(w'))` for every nonempty `w, w'` with
/// `|w| + |w'| <= max_len`; exhaustive when small, otherwise on
/// `WORD_LAW_SAMPLES` words drawn with `seed`.
pub fn check_word_law(t: &BinTable, max_len: usize, seed: u64) -> WordLawReport {
    let k = t.size();
    let total: u128 = (2..=max_len).map(|l| tuple_count(k, l)).fold(0, u128::saturating_add);
    let exhaustive = total <= WORD_LAW_EXHAUSTIVE_LIMIT;
    let mut report =
        WordLawReport { max_len, exhaustive, splits_checked: 0, violations: Vec::new() };
    let mut check = |u: &[usize]| {
        let whole = t.fold_fast(u);
        for i in 1..u.len() {
            report.splits_checked += 1;
            let combined = t.get(t.fold_fast(&u[..i]), t.fold_fast(&u[i..]));
            if combined != whole && report.violations.len() < MAX_REPORTED {
                report.violations.push(WordLawWitness {
                    left: u[..i].to_vec(),
                    right: u[i..].to_vec(),
                    whole,
                    combined,
                });
            }
        }
    };
    if exhaustive {
        for len in 2..=max_len {
            for_each_tuple(k, len, |u| {
                check(u);
                true
            });
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut u = Vec::with_capacity(max_len);
        for _ in 0..WORD_LAW_SAMPLES {
            let len = rng.gen_range(2..=max_len);
            u.clear();
            u.extend((0..len).map(|_| rng.gen_range(0..k)));
            check(&u);
        }
    }
    report
}

impl BinTable {
    /// In-range single-pass evaluation without allocation.
    pub(crate) fn fold_fast(&self, items: &[usize]) -> usize {
        let mut state = ScanState::start(items[0]);
        for &x in &items[1..] {
            state.push(x);
        }
        state.finish(self)
    }
}
