//! Exhaustive enumeration of the class on small chains, from generators and
//! by brute force, plus the counterexample fixtures.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::build_table;
use crate::domain::{BinTable, ExtValue};
use crate::error::{Error, Result};
use crate::gspec::{critical_pairs, mmt_condition, sym_check, GSpec, Tie};
use crate::verify::{
    check_idempotent, check_monotone, check_n_associative, find_neutral_elements, idempotency_witness,
    in_class, is_commutative, monotone_sections, nary_group_witness, AssocReport, Derived,
    MonotoneReport, Operation, Order, Poset,
};

/// Largest chain for the unrestricted `k^(k^2)` brute-force space.
pub const MAX_FULL_BRUTE_K: usize = 3;
/// Largest chain for the quasitrivial `2^(k^2 - k)` space.
pub const MAX_QUASITRIVIAL_BRUTE_K: usize = 5;
pub const MAX_GSPEC_K: usize = 5;
pub const MAX_GAP_K: usize = 6;

/// Candidate tables searched by [`enumerate_class_brute`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BruteSpace {
    /// Every `k x k` table.
    Full,
    /// Tables with `T(x, y)` in `{x, y}`.
    Quasitrivial,
}

impl BruteSpace {
    /// Full space where feasible, quasitrivial beyond.
    pub fn default_for(k: usize) -> Self {
        if k <= MAX_FULL_BRUTE_K {
            BruteSpace::Full
        } else {
            BruteSpace::Quasitrivial
        }
    }

    fn candidates(self, k: usize) -> Result<u64> {
        let (limit, exp, base) = match self {
            BruteSpace::Full => (MAX_FULL_BRUTE_K, k * k, k as u64),
            BruteSpace::Quasitrivial => (MAX_QUASITRIVIAL_BRUTE_K, k * k - k, 2),
        };
        let count = base.pow(exp as u32);
        if k == 0 || k > limit {
            return Err(Error::GuardExceeded { count: count as u128, limit: limit as u128 });
        }
        Ok(count)
    }

    fn decode(self, k: usize, mut index: u64, entries: &mut [u32]) {
        match self {
            BruteSpace::Full => {
                for slot in entries.iter_mut().rev() {
                    *slot = (index % k as u64) as u32;
                    index /= k as u64;
                }
            }
            BruteSpace::Quasitrivial => {
                for x in 0..k {
                    for y in 0..k {
                        entries[x * k + y] = if x == y {
                            x as u32
                        } else {
                            let pick_max = index & 1 == 1;
                            index >>= 1;
                            (if pick_max { x.max(y) } else { x.min(y) }) as u32
                        };
                    }
                }
            }
        }
    }
}

/// Calls `f` on every candidate table in parallel and keeps the ones it
/// accepts.
pub fn scan_brute_space<T: Send>(
    k: usize,
    space: BruteSpace,
    f: impl Fn(&BinTable) -> Option<T> + Sync,
) -> Result<Vec<T>> {
    let count = space.candidates(k)?;
    Ok((0..count)
        .into_par_iter()
        .fold(
            || (BinTable::min(k).expect("k >= 1"), vec![0u32; k * k], Vec::new()),
            |(mut table, mut entries, mut acc), index| {
                space.decode(k, index, &mut entries);
                table.overwrite(&entries);
                if let Some(v) = f(&table) {
                    acc.push(v);
                }
                (table, entries, acc)
            },
        )
        .map(|(_, _, acc)| acc)
        .flatten()
        .collect())
}

/// All class tables found by filtering the candidate space.
pub fn enumerate_class_brute(k: usize, space: BruteSpace) -> Result<BTreeSet<BinTable>> {
    Ok(scan_brute_space(k, space, |t| in_class(t).then(|| t.clone()))?.into_iter().collect())
}

/// Every non-increasing `g` over the extended chain with a chain-point
/// fixed point, paired with that fixed point.
pub fn all_thresholds(k: usize) -> Vec<(usize, Vec<ExtValue>)> {
    fn rec(k: usize, top: u32, prefix: &mut Vec<ExtValue>, out: &mut Vec<(usize, Vec<ExtValue>)>) {
        if prefix.len() == k {
            if let Some(e) = (0..k).find(|&e| prefix[e] == ExtValue::point(e)) {
                out.push((e, prefix.clone()));
            }
            return;
        }
        for d in (0..=top).rev() {
            prefix.push(ExtValue::from_doubled(d));
            rec(k, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(k, 2 * (k as u32 - 1), &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every valid generator on a `k`-chain: all thresholds, all tie choices.
pub fn all_gspecs(k: usize) -> Vec<GSpec> {
    let mut out = Vec::new();
    for (e, g) in all_thresholds(k) {
        let base = GSpec::new(k, e, g, []).expect("enumerated thresholds are valid");
        let pairs: Vec<(usize, usize)> = base.ties().keys().copied().collect();
        for mask in 0u64..(1 << pairs.len()) {
            let ties = pairs.iter().enumerate().map(|(i, &p)| {
                (p, if mask >> i & 1 == 1 { Tie::Max } else { Tie::Min })
            });
            out.push(base.with_ties(ties.collect::<Vec<_>>()).expect("ties on critical pairs"));
        }
    }
    out
}

/// What the generator enumeration learned about one table.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TableAudit {
    pub generators: usize,
    /// Some generator passes the symmetry surrogate.
    pub symmetric_generator: bool,
    /// Some symmetric generator has symmetric tie choices.
    pub symmetric_ties_generator: bool,
}

/// Class tables produced by generators, each with its audit.
pub fn enumerate_class_gspec(k: usize) -> Result<BTreeMap<BinTable, TableAudit>> {
    if k == 0 || k > MAX_GSPEC_K {
        return Err(Error::GuardExceeded { count: k as u128, limit: MAX_GSPEC_K as u128 });
    }
    let built: Vec<(BinTable, bool, bool)> = all_gspecs(k)
        .into_par_iter()
        .filter_map(|s| {
            let t = build_table(&s);
            let sym = sym_check(&s);
            in_class(&t).then(|| (t, sym, sym && s.has_symmetric_ties()))
        })
        .collect();
    let mut out: BTreeMap<BinTable, TableAudit> = BTreeMap::new();
    for (t, sym, sym_ties) in built {
        let audit = out.entry(t).or_default();
        audit.generators += 1;
        audit.symmetric_generator |= sym;
        audit.symmetric_ties_generator |= sym_ties;
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumReport {
    pub k: usize,
    pub brute_space: BruteSpace,
    pub from_gspecs: usize,
    pub brute: usize,
    pub matched: bool,
    pub only_from_gspecs: Vec<Vec<Vec<usize>>>,
    pub only_brute: Vec<Vec<Vec<usize>>>,
    /// Class tables with at least one noncommutative pair.
    pub extra_critical_count: usize,
    #[serde(skip)]
    pub tables: Vec<BinTable>,
}

/// Runs both enumerations and compares them as sets.
pub fn compare_enumerations(k: usize) -> Result<EnumReport> {
    let space = BruteSpace::default_for(k);
    let from_gspecs: BTreeSet<BinTable> = enumerate_class_gspec(k)?.into_keys().collect();
    let brute = enumerate_class_brute(k, space)?;
    let rows = |set: BTreeSet<&BinTable>| set.into_iter().map(BinTable::rows).collect::<Vec<_>>();
    let only_from_gspecs = rows(from_gspecs.difference(&brute).collect());
    let only_brute = rows(brute.difference(&from_gspecs).collect());
    let extra_critical_count = brute.iter().filter(|t| !is_commutative(t)).count();
    Ok(EnumReport {
        k,
        brute_space: space,
        from_gspecs: from_gspecs.len(),
        brute: brute.len(),
        matched: from_gspecs == brute,
        only_from_gspecs,
        only_brute,
        extra_critical_count,
        tables: brute.into_iter().collect(),
    })
}

/// A generator satisfying the level-set condition but not the symmetry
/// surrogate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapWitness {
    pub k: usize,
    pub e: usize,
    pub g: Vec<f64>,
    pub mmt: bool,
    pub sym: bool,
    /// Tables built with every tie assignment are in the class.
    pub in_class_all_ties: bool,
    /// Some tie assignment yields a class table.
    pub in_class_some_ties: bool,
}

/// Every generator on chains of size `1..=k_max` whose level-set condition
/// holds while the symmetry surrogate fails.
pub fn find_mmt_gap(k_max: usize) -> Result<Vec<GapWitness>> {
    if k_max > MAX_GAP_K {
        return Err(Error::GuardExceeded { count: k_max as u128, limit: MAX_GAP_K as u128 });
    }
    let mut out = Vec::new();
    for k in 1..=k_max {
        for (e, g) in all_thresholds(k) {
            let base = GSpec::new(k, e, g.clone(), []).expect("valid thresholds");
            if !mmt_condition(&base).holds || sym_check(&base) {
                continue;
            }
            let pairs: Vec<(usize, usize)> = base.ties().keys().copied().collect();
            let (mut all, mut some) = (true, false);
            for mask in 0u64..(1 << pairs.len()) {
                let ties = pairs
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p, if mask >> i & 1 == 1 { Tie::Max } else { Tie::Min }));
                let s = base.with_ties(ties.collect::<Vec<_>>()).expect("critical pairs");
                let ok = in_class(&build_table(&s));
                all &= ok;
                some |= ok;
            }
            out.push(GapWitness {
                k,
                e,
                g: g.iter().map(|v| v.to_f64()).collect(),
                mmt: true,
                sym: false,
                in_class_all_ties: all,
                in_class_some_ties: some,
            });
        }
    }
    Ok(out)
}

/// `{m, M} ∪ Z_q` with `m` at the bottom, `M` at the top and the group
/// elements pairwise incomparable in between. Index 0 is `m`, index `1 + j`
/// is `j ∈ Z_q`, index `q + 1` is `M`.
#[derive(Debug, Clone)]
pub struct PosetFixture {
    pub q: usize,
    pub poset: Poset,
    pub table: BinTable,
}

impl PosetFixture {
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.q + 1
    }

    pub fn group(&self, j: usize) -> usize {
        1 + j
    }

    /// The group identity, which is the neutral element.
    pub fn identity(&self) -> usize {
        self.group(0)
    }

    pub fn label(&self, i: usize) -> String {
        match i {
            0 => "m".into(),
            i if i == self.q + 1 => "M".into(),
            i => format!("z{}", i - 1),
        }
    }
}

/// `M` absorbs everything, then `m` absorbs the rest, and `Z_q` multiplies
/// (adds) among itself.
pub fn build_poset_fixture(q: usize) -> Result<PosetFixture> {
    if q < 2 {
        return Err(Error::Parse(format!("group order must be at least 2, got {q}")));
    }
    let (m, top) = (0, q + 1);
    let poset = Poset::new(q + 2, |a, b| a == b || a == m || b == top)?;
    let table = BinTable::from_fn(q + 2, |x, y| {
        if x == top || y == top {
            top
        } else if x == m || y == m {
            m
        } else {
            1 + ((x - 1) + (y - 1)) % q
        }
    })?;
    Ok(PosetFixture { q, poset, table })
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetFixtureReport {
    pub q: usize,
    pub associative: bool,
    pub monotone: MonotoneReport,
    pub neutral_elements: Vec<usize>,
    /// `(arity j, first a with F_j(a, ..., a) != a)` for `j = 2..=q+1`.
    pub idempotency: Vec<(usize, Option<(usize, usize)>)>,
}

pub fn poset_fixture_report(f: &PosetFixture) -> Result<PosetFixtureReport> {
    let associative = check_n_associative(&f.table)?.holds;
    let monotone = check_monotone(&f.table, &Order::Poset(f.poset.clone()))?;
    let neutral_elements = find_neutral_elements(&f.table);
    let idempotency = (2..=f.q + 1)
        .map(|j| Ok((j, idempotency_witness(&Derived::new(&f.table, j)?))))
        .collect::<Result<Vec<_>>>()?;
    Ok(PosetFixtureReport { q: f.q, associative, monotone, neutral_elements, idempotency })
}

/// Sign of the first term of the alternating sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeadingSign {
    /// `x1 - x2 + x3 - ... + xn`; n-associative for odd `n`.
    Plus,
    /// `-x1 + x2 - ... - xn`, the negation of the above; not n-associative
    /// unless every element is its own inverse.
    Minus,
}

/// Alternating sum of an odd number of arguments in `Z_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alternating {
    pub modulus: usize,
    pub arity: usize,
    pub sign: LeadingSign,
}

pub fn build_alternating(modulus: usize, arity: usize, sign: LeadingSign) -> Result<Alternating> {
    if arity < 3 || arity.is_multiple_of(2) {
        return Err(Error::BadArity { min: 3, found: arity });
    }
    if modulus < 2 {
        return Err(Error::Parse(format!("modulus must be at least 2, got {modulus}")));
    }
    Ok(Alternating { modulus, arity, sign })
}

impl Alternating {
    /// The sum over integers, without reduction.
    pub fn integer_value(&self, args: &[i64]) -> i64 {
        let plus = args.iter().step_by(2).sum::<i64>();
        let minus = args.iter().skip(1).step_by(2).sum::<i64>();
        match self.sign {
            LeadingSign::Plus => plus - minus,
            LeadingSign::Minus => minus - plus,
        }
    }

    /// Monotonicity of the unreduced sum on the integer window `[-r, r]`.
    pub fn window_monotone(&self, radius: usize) -> Result<MonotoneReport> {
        let r = radius as i64;
        monotone_sections(
            2 * radius + 1,
            self.arity,
            |a, b| a <= b,
            |args| {
                let shifted: Vec<i64> = args.iter().map(|&a| a as i64 - r).collect();
                self.integer_value(&shifted)
            },
            |a, b| a <= b,
        )
    }
}

impl Operation for Alternating {
    fn size(&self) -> usize {
        self.modulus
    }

    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, args: &[usize]) -> usize {
        let m = self.modulus as i64;
        let ints: Vec<i64> = args.iter().map(|&a| a as i64).collect();
        self.integer_value(&ints).rem_euclid(m) as usize
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlternatingReport {
    pub modulus: usize,
    pub arity: usize,
    pub sign: LeadingSign,
    pub associativity: AssocReport,
    /// First `(coordinate, context)` without unique solvability.
    pub group_witness: Option<(usize, Vec<usize>)>,
    pub neutral_elements: Vec<usize>,
    pub idempotent: bool,
    pub window_radius: usize,
    pub window_monotone: MonotoneReport,
}

pub fn alternating_report(g: &Alternating, window_radius: usize) -> Result<AlternatingReport> {
    Ok(AlternatingReport {
        modulus: g.modulus,
        arity: g.arity,
        sign: g.sign,
        associativity: check_n_associative(g)?,
        group_witness: nary_group_witness(g)?,
        neutral_elements: find_neutral_elements(g),
        idempotent: check_idempotent(g),
        window_radius,
        window_monotone: g.window_monotone(window_radius)?,
    })
}

/// Critical pairs of the canonical reconstruction versus noncommutative
/// pairs of the table.
pub fn noncommutative_pairs_are_critical(t: &BinTable, s: &GSpec) -> bool {
    let critical = critical_pairs(s);
    crate::verify::noncommutative_pairs(t)
        .into_iter()
        .all(|(a, b)| critical.iter().any(|p| p.a == a && p.b == b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{max3, min3, rx3};

    #[test]
    fn brute_examples() {
        assert_eq!(enumerate_class_brute(1, BruteSpace::Full).unwrap().len(), 1);
        let two = enumerate_class_brute(2, BruteSpace::Full).unwrap();
        let expected: BTreeSet<BinTable> =
            [BinTable::min(2).unwrap(), BinTable::max(2).unwrap()].into_iter().collect();
        assert_eq!(two, expected);
        assert!(enumerate_class_brute(4, BruteSpace::Full).is_err());
        assert!(enumerate_class_brute(6, BruteSpace::Quasitrivial).is_err());
    }

    #[test]
    fn quasitrivial_decode_covers_the_space() {
        let tables = scan_brute_space(2, BruteSpace::Quasitrivial, |t| Some(t.clone())).unwrap();
        let set: BTreeSet<BinTable> = tables.into_iter().collect();
        assert_eq!(set.len(), 4);
        assert!(set.iter().all(|t| t.get(0, 0) == 0 && t.get(1, 1) == 1));
    }

    #[test]
    fn threshold_enumeration() {
        // k = 2: g = [0, 0] (e = 0) and [1, 1] (e = 1).
        assert_eq!(all_thresholds(2).len(), 2);
        for (e, g) in all_thresholds(4) {
            assert!(GSpec::new(4, e, g, []).is_ok());
        }
    }

    #[test]
    fn gspec_enumeration_examples() {
        let two = enumerate_class_gspec(2).unwrap();
        assert_eq!(two.len(), 2);
        let three = enumerate_class_gspec(3).unwrap();
        for f in [rx3(), min3(), max3()] {
            assert!(three.contains_key(&f.table), "{}", f.name);
        }
        assert!(three.values().all(|a| a.symmetric_generator));
    }

    #[test]
    fn compare_small() {
        let r = compare_enumerations(2).unwrap();
        assert!(r.matched);
        assert_eq!((r.from_gspecs, r.brute), (2, 2));
        let r = compare_enumerations(3).unwrap();
        assert!(r.matched);
        assert!(r.extra_critical_count >= 1);
    }

    #[test]
    fn gap_examples() {
        let w = find_mmt_gap(3).unwrap();
        assert!(w.iter().any(|w| w.k == 3 && w.e == 1 && w.g == vec![1.0, 1.0, 1.0]));
        assert!(w.iter().all(|w| w.mmt && !w.sym));
        assert!(find_mmt_gap(2).is_ok());
        assert!(find_mmt_gap(7).is_err());
    }

    #[test]
    fn poset_fixture_examples() {
        let f = build_poset_fixture(3).unwrap();
        let r = poset_fixture_report(&f).unwrap();
        assert!(r.associative);
        assert!(r.monotone.monotone && r.monotone.increasing);
        assert_eq!(r.neutral_elements, vec![f.identity()]);
        let d3 = Derived::new(&f.table, 3).unwrap();
        for j in 0..3 {
            let a = f.group(j);
            assert_eq!(d3.eval(&[a, a, a]), f.identity());
        }
        assert!(check_idempotent(&Derived::new(&f.table, 4).unwrap()));
        for x in 0..f.q + 2 {
            assert_eq!(f.table.get(f.top(), x), f.top());
        }

        let f2 = build_poset_fixture(2).unwrap();
        assert_eq!(idempotency_witness(&f2.table), Some((f2.group(1), f2.identity())));
        assert!(build_poset_fixture(1).is_err());
    }

    #[test]
    fn alternating_examples() {
        let minus = build_alternating(5, 3, LeadingSign::Minus).unwrap();
        assert_eq!(minus.eval(&[1, 2, 3]), 3);
        let plus = build_alternating(5, 3, LeadingSign::Plus).unwrap();
        assert_eq!(plus.eval(&[1, 2, 3]), 2);
        assert!(find_neutral_elements(&plus).is_empty());
        assert!(find_neutral_elements(&minus).is_empty());

        let z2 = build_alternating(2, 3, LeadingSign::Minus).unwrap();
        assert!(check_idempotent(&z2));
        assert!(check_n_associative(&z2).unwrap().holds);
        assert!(!check_idempotent(&minus));

        assert!(build_alternating(5, 4, LeadingSign::Plus).is_err());
        assert!(build_alternating(1, 3, LeadingSign::Plus).is_err());
    }

    #[test]
    fn alternating_window_directions() {
        use crate::verify::Direction::*;
        let minus = build_alternating(5, 3, LeadingSign::Minus).unwrap();
        assert_eq!(minus.window_monotone(5).unwrap().directions, vec![Decreasing, Increasing, Decreasing]);
        let plus = build_alternating(5, 3, LeadingSign::Plus).unwrap();
        assert_eq!(plus.window_monotone(5).unwrap().directions, vec![Increasing, Decreasing, Increasing]);
    }
}
