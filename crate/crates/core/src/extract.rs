//! Recovering binary tables from n-ary operations and generators from
//! binary tables.

use std::cmp::Ordering;

use serde::Serialize;

use crate::construct::build_table;
use crate::domain::{for_each_tuple, tuple_count, BinTable, ExtValue};
use crate::error::{Error, Result};
use crate::gspec::{GSpec, Tie};
use crate::verify::{class_check, find_neutral_elements, Derived, NaryTable, Operation, TUPLE_LIMIT};

/// `T(a, b) = F(a, e, ..., e, b)` for a neutral element `e` of `F`.
pub fn extract_binary(f: &impl Operation, e: usize) -> Result<BinTable> {
    let n = f.arity();
    if n < 2 {
        return Err(Error::BadArity { min: 2, found: n });
    }
    let neutrals = find_neutral_elements(f);
    if neutrals.is_empty() {
        return Err(Error::NoNeutral);
    }
    if !neutrals.contains(&e) {
        return Err(Error::NotNeutral(e));
    }
    let mut args = vec![e; n];
    BinTable::from_fn(f.size(), |a, b| {
        args[0] = a;
        args[n - 1] = b;
        f.eval(&args)
    })
}

/// The derived n-ary operation of `t`, tabulated.
pub fn derive_nary(t: &BinTable, n: usize) -> Result<NaryTable> {
    NaryTable::tabulate(&Derived::new(t, n)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedReport {
    pub holds: bool,
    /// `(tuple, F(tuple), fold of T over tuple)` at the first mismatch.
    pub witness: Option<(Vec<usize>, usize, usize)>,
}

/// Whether `f` equals the right-nested fold of `t` on every tuple.
pub fn check_derived(f: &impl Operation, t: &BinTable) -> Result<DerivedReport> {
    if f.size() != t.size() {
        return Err(Error::ChainMismatch { expected: t.size(), found: f.size() });
    }
    let count = tuple_count(f.size(), f.arity());
    if count > TUPLE_LIMIT {
        return Err(Error::GuardExceeded { count, limit: TUPLE_LIMIT });
    }
    let mut witness = None;
    for_each_tuple(f.size(), f.arity(), |tuple| {
        let (lhs, rhs) = (f.eval(tuple), t.fold_unchecked(tuple));
        if lhs == rhs {
            true
        } else {
            witness = Some((tuple.to_vec(), lhs, rhs));
            false
        }
    });
    Ok(DerivedReport { holds: witness.is_none(), witness })
}

/// `extract_binary(derive_nary(t, n), e) == t` where `e` is the neutral
/// element of `t`.
pub fn bijection_roundtrip(t: &BinTable, n: usize) -> Result<bool> {
    let e = *find_neutral_elements(t).first().ok_or(Error::NoNeutral)?;
    let nary = derive_nary(t, n)?;
    Ok(extract_binary(&nary, e)? == *t)
}

/// Threshold data of one row of a quasitrivial table. `lo` is the largest
/// `y != x` with `T(x, y) = min(x, y)`, `hi` the smallest with
/// `T(x, y) = max(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RowProfile {
    pub x: usize,
    pub lo: Option<usize>,
    pub hi: Option<usize>,
}

pub fn row_profile(t: &BinTable, x: usize) -> Result<RowProfile> {
    let mut lo: Option<usize> = None;
    let mut hi: Option<usize> = None;
    for y in (0..t.size()).filter(|&y| y != x) {
        let v = t.get(x, y);
        if v == x.min(y) {
            lo = Some(lo.map_or(y, |m| m.max(y)));
        } else if v == x.max(y) {
            hi = Some(hi.map_or(y, |m| m.min(y)));
        } else {
            return Err(Error::NotInClass(format!("T({x}, {y}) = {v} is neither input")));
        }
    }
    if let (Some(l), Some(h)) = (lo, hi) {
        if l > h {
            return Err(Error::NotInClass(format!("row {x} is not a threshold row")));
        }
    }
    Ok(RowProfile { x, lo, hi })
}

impl RowProfile {
    /// Thresholds consistent with the row, ties aside, in preference
    /// order: chain points from the top, then gaps from the top.
    fn candidates(&self, k: usize) -> Vec<ExtValue> {
        let lo = ExtValue::point(self.lo.unwrap_or(0));
        let hi = ExtValue::point(self.hi.unwrap_or(k - 1));
        let range = (lo.doubled()..=hi.doubled()).map(ExtValue::from_doubled);
        let mut out: Vec<ExtValue> = range.clone().rev().filter(|v| v.is_point()).collect();
        out.extend(range.rev().filter(|v| !v.is_point()));
        out
    }
}

struct Search<'a> {
    t: &'a BinTable,
    e: usize,
    candidates: Vec<Vec<ExtValue>>,
    g: Vec<ExtValue>,
    want_symmetric: bool,
}

impl Search<'_> {
    fn run(&mut self, x: usize) -> Option<GSpec> {
        let k = self.t.size();
        if x == k {
            return self.finish();
        }
        let options: Vec<ExtValue> = if x == self.e {
            vec![ExtValue::point(self.e)]
        } else {
            self.candidates[x].clone()
        };
        for v in options {
            if x > 0 && v > self.g[x - 1] {
                continue;
            }
            if !self.candidates[x].contains(&v) {
                continue;
            }
            self.g[x] = v;
            if self.consistent_upto(x) {
                if let Some(s) = self.run(x + 1) {
                    return Some(s);
                }
            }
        }
        None
    }

    /// Rows and symmetry pairs that only involve indices `<= x`.
    fn consistent_upto(&self, x: usize) -> bool {
        for r in 0..=x {
            if let Some(y) = self.g[r].as_point() {
                if y <= x && (r == x || y == x) && !self.tie_ok(r, y) {
                    return false;
                }
            }
        }
        if self.want_symmetric {
            for a in 0..=x {
                if !self.sym_ok(a, x) || !self.sym_ok(x, a) {
                    return false;
                }
            }
        }
        true
    }

    /// The entry at `(r, y)` with `y = g(r)` matches the table.
    fn tie_ok(&self, r: usize, y: usize) -> bool {
        let v = self.t.get(r, y);
        match self.g[y].cmp_point(r) {
            Ordering::Greater => v == r.min(y),
            Ordering::Less => v == r.max(y),
            Ordering::Equal => true,
        }
    }

    fn sym_ok(&self, a: usize, b: usize) -> bool {
        match self.g[a].cmp_point(b) {
            Ordering::Greater => self.g[b].cmp_point(a) != Ordering::Less,
            Ordering::Less => self.g[b].cmp_point(a) != Ordering::Greater,
            Ordering::Equal => true,
        }
    }

    fn finish(&self) -> Option<GSpec> {
        let k = self.t.size();
        let ties = (0..k).filter_map(|a| {
            let b = self.g[a].as_point()?;
            (a != b && self.g[b] == ExtValue::point(a)).then(|| {
                let tie = if self.t.get(a, b) == a.min(b) { Tie::Min } else { Tie::Max };
                ((a, b), tie)
            })
        });
        let s = GSpec::new(k, self.e, self.g.clone(), ties.collect::<Vec<_>>()).ok()?;
        (build_table(&s) == *self.t).then_some(s)
    }
}

/// A canonical generator of a class table: `build_table` of the result is
/// `t`. Generators passing the symmetry surrogate are preferred; per row the
/// search tries chain points from the top before gaps, with `g(e) = e`
/// fixed.
pub fn reconstruct_gspec(t: &BinTable) -> Result<GSpec> {
    let report = class_check(t);
    if !report.in_class {
        return Err(Error::NotInClass(report.failure().unwrap_or_default()));
    }
    let e = report.neutral().expect("class tables have a neutral element");
    let k = t.size();
    let candidates = (0..k)
        .map(|x| row_profile(t, x).map(|p| p.candidates(k)))
        .collect::<Result<Vec<_>>>()?;
    for want_symmetric in [true, false] {
        let mut search = Search {
            t,
            e,
            candidates: candidates.clone(),
            g: vec![ExtValue::point(0); k],
            want_symmetric,
        };
        if let Some(s) = search.run(0) {
            return Ok(s);
        }
    }
    Err(Error::Internal(format!("no generator regenerates table {:?}", t.rows())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{max3, min3, rx3};
    use crate::gspec::sym_check;
    use crate::verify::FnOp;

    fn g3_mod5() -> FnOp<impl Fn(&[usize]) -> usize> {
        FnOp::new(5, 3, |a: &[usize]| (a[0] + 5 - a[1] + a[2]) % 5)
    }

    #[test]
    fn extract_examples() {
        let rx = rx3().table;
        assert_eq!(extract_binary(&derive_nary(&rx, 3).unwrap(), 1).unwrap(), rx);
        let mn = min3().table;
        assert_eq!(extract_binary(&derive_nary(&mn, 4).unwrap(), 2).unwrap(), mn);
        assert!(matches!(extract_binary(&g3_mod5(), 0), Err(Error::NoNeutral)));
        assert!(matches!(
            extract_binary(&derive_nary(&rx, 3).unwrap(), 0),
            Err(Error::NotNeutral(0))
        ));
    }

    #[test]
    fn check_derived_examples() {
        let rx = rx3().table;
        assert!(check_derived(&derive_nary(&rx, 3).unwrap(), &rx).unwrap().holds);

        let z5_min = BinTable::min(5).unwrap();
        let r = check_derived(&g3_mod5(), &z5_min).unwrap();
        assert!(!r.holds);
        assert!(r.witness.is_some());

        let r = check_derived(&derive_nary(&min3().table, 3).unwrap(), &max3().table).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some((vec![0, 0, 1], 0, 1)));
    }

    #[test]
    fn check_derived_size_mismatch() {
        assert!(check_derived(&g3_mod5(), &rx3().table).is_err());
    }

    #[test]
    fn reconstruct_examples() {
        let s = reconstruct_gspec(&rx3().table).unwrap();
        assert_eq!(s, rx3().gspec);
        let s = reconstruct_gspec(&min3().table).unwrap();
        assert_eq!((s.neutral(), s.thresholds()), (2, &[ExtValue::point(2); 3][..]));
        let s = reconstruct_gspec(&max3().table).unwrap();
        assert_eq!((s.neutral(), s.thresholds()), (0, &[ExtValue::point(0); 3][..]));
    }

    #[test]
    fn reconstruct_gap_generator_gives_reflection() {
        let gap = GSpec::from_doubled(3, 1, &[3, 2, 1], []).unwrap();
        let t = build_table(&gap);
        assert_eq!(t, rx3().table);
        let back = reconstruct_gspec(&t).unwrap();
        assert_ne!(back, gap);
        assert_eq!(back, rx3().gspec);
        assert!(sym_check(&back));
    }

    #[test]
    fn reconstruct_rejects_non_class() {
        let proj = BinTable::from_fn(3, |x, _| x).unwrap();
        assert!(matches!(reconstruct_gspec(&proj), Err(Error::NotInClass(_))));
    }

    #[test]
    fn roundtrip_examples() {
        assert!(bijection_roundtrip(&rx3().table, 3).unwrap());
        assert!(bijection_roundtrip(&min3().table, 5).unwrap());
        assert!(bijection_roundtrip(&max3().table, 4).unwrap());
        let proj = BinTable::from_fn(3, |x, _| x).unwrap();
        assert!(matches!(bijection_roundtrip(&proj, 3), Err(Error::NoNeutral)));
    }

    #[test]
    fn row_profiles() {
        let rx = rx3().table;
        assert_eq!(row_profile(&rx, 0).unwrap(), RowProfile { x: 0, lo: Some(1), hi: Some(2) });
        assert_eq!(row_profile(&rx, 1).unwrap(), RowProfile { x: 1, lo: Some(0), hi: Some(2) });
        let mn = min3().table;
        assert_eq!(row_profile(&mn, 2).unwrap(), RowProfile { x: 2, lo: Some(1), hi: None });
        let odd = BinTable::from_fn(3, |x, y| if x == 0 && y == 2 { 1 } else { x.min(y) }).unwrap();
        assert!(row_profile(&odd, 0).is_err());
    }
}
