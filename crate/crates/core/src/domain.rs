//! Finite chains, half-step extended values, binary operation tables and
//! the right-nested fold that every derived n-ary operation reduces to.
//!
//! Element `i` of a chain of size `k` stands for the grid point `i/(k-1)`
//! of a closed interval; only the order of the indices is ever used, so
//! every computation here is exact.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite totally ordered set `{0, 1, ..., k-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chain {
    k: usize,
}

impl Chain {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyChain);
        }
        Ok(Chain { k })
    }

    pub fn size(self) -> usize {
        self.k
    }

    /// Bottom element (the interval's left end point).
    pub fn bottom(self) -> usize {
        0
    }

    /// Top element (the interval's right end point).
    pub fn top(self) -> usize {
        self.k - 1
    }

    pub fn contains(self, x: usize) -> bool {
        x < self.k
    }

    pub fn check(self, x: usize) -> Result<usize> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::OutOfRange { value: x, k: self.k })
        }
    }

    pub fn check_ext(self, v: ExtValue) -> Result<ExtValue> {
        if v.doubled() as usize <= 2 * (self.k - 1) {
            Ok(v)
        } else {
            Err(Error::ExtOutOfRange { doubled: v.doubled(), k: self.k })
        }
    }

    /// Compares an extended value against a chain element of this chain.
    pub fn ext_compare(self, v: ExtValue, y: usize) -> Result<Ordering> {
        self.check_ext(v)?;
        self.check(y)?;
        Ok(v.cmp_point(y))
    }

    /// Every extended value of the chain in increasing order:
    /// `0, 1/2, 1, ..., k-1`.
    pub fn ext_values(self) -> impl DoubleEndedIterator<Item = ExtValue> + Clone {
        (0..=(2 * (self.k as u32 - 1))).map(ExtValue::from_doubled)
    }
}

/// `ext_compare` for callers holding a chain size rather than a [`Chain`].
pub fn ext_compare(k: usize, v: ExtValue, y: usize) -> Result<Ordering> {
    Chain::new(k)?.ext_compare(v, y)
}

/// A chain point or the gap between two adjacent chain points, stored as
/// twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtValue(u32);

impl ExtValue {
    pub fn point(x: usize) -> Self {
        ExtValue(2 * x as u32)
    }

    /// The gap strictly between `x` and `x + 1`.
    pub fn gap_after(x: usize) -> Self {
        ExtValue(2 * x as u32 + 1)
    }

    pub fn from_doubled(doubled: u32) -> Self {
        ExtValue(doubled)
    }

    pub fn doubled(self) -> u32 {
        self.0
    }

    pub fn is_point(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn as_point(self) -> Option<usize> {
        self.is_point().then_some((self.0 / 2) as usize)
    }

    pub fn cmp_point(self, y: usize) -> Ordering {
        self.0.cmp(&(2 * y as u32))
    }

    /// Parses a number that must be an integer or an integer plus one half.
    pub fn from_f64(v: f64) -> Result<Self> {
        let doubled = v * 2.0;
        if !doubled.is_finite() || doubled < 0.0 || doubled.fract() != 0.0 || doubled > u32::MAX as f64 {
            return Err(Error::Parse(format!("{v} is not a non-negative multiple of 1/2")));
        }
        Ok(ExtValue(doubled as u32))
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_point() {
            Some(x) => write!(f, "{x}"),
            None => write!(f, "{}.5", self.0 / 2),
        }
    }
}

/// A nonempty finite sequence of chain elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(items: Vec<usize>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(items))
    }

    pub fn items(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut items = self.0.clone();
        items.extend_from_slice(&other.0);
        Word(items)
    }

    /// Parses the comma separated form used on the command line.
    pub fn parse(text: &str) -> Result<Self> {
        let items = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad word item {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(items)
    }
}

/// The Cayley table of a binary operation on a chain; entry `(x, y)` is
/// `F(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinTable {
    k: usize,
    entries: Vec<u32>,
}

impl BinTable {
    /// Builds a table from its rows, validating shape and range.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let k = rows.len();
        Chain::new(k)?;
        let mut entries = Vec::with_capacity(k * k);
        for row in rows {
            if row.len() != k {
                return Err(Error::ChainMismatch { expected: k, found: row.len() });
            }
            for &v in row {
                if v >= k {
                    return Err(Error::OutOfRange { value: v, k });
                }
                entries.push(v as u32);
            }
        }
        Ok(BinTable { k, entries })
    }

    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        Chain::new(k)?;
        let mut entries = Vec::with_capacity(k * k);
        for x in 0..k {
            for y in 0..k {
                let v = f(x, y);
                if v >= k {
                    return Err(Error::OutOfRange { value: v, k });
                }
                entries.push(v as u32);
            }
        }
        Ok(BinTable { k, entries })
    }

    /// The minimum operation on a chain of size `k`.
    pub fn min(k: usize) -> Result<Self> {
        Self::from_fn(k, usize::min)
    }

    /// The maximum operation on a chain of size `k`.
    pub fn max(k: usize) -> Result<Self> {
        Self::from_fn(k, usize::max)
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn chain(&self) -> Chain {
        Chain { k: self.k }
    }

    /// Unchecked lookup; panics when out of range.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.k + y] as usize
    }

    /// Checked lookup.
    pub fn apply(&self, x: usize, y: usize) -> Result<usize> {
        let chain = self.chain();
        chain.check(x)?;
        chain.check(y)?;
        Ok(self.get(x, y))
    }

    pub fn set(&mut self, x: usize, y: usize, v: usize) -> Result<()> {
        let chain = self.chain();
        chain.check(x)?;
        chain.check(y)?;
        chain.check(v)?;
        self.entries[x * self.k + y] = v as u32;
        Ok(())
    }

    /// Replaces every entry; values are assumed in range.
    pub(crate) fn overwrite(&mut self, entries: &[u32]) {
        self.entries.copy_from_slice(entries);
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.k)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn transpose(&self) -> BinTable {
        let k = self.k;
        let mut entries = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                entries[y * k + x] = self.entries[x * k + y];
            }
        }
        BinTable { k, entries }
    }

    /// Right-nested fold over `items`; the caller guarantees nonempty,
    /// in-range input.
    pub(crate) fn fold_unchecked(&self, items: &[usize]) -> usize {
        let (&last, init) = items.split_last().expect("nonempty");
        init.iter().rev().fold(last, |acc, &x| self.get(x, acc))
    }
}

/// Right-nested fold `F(w1, F(w2, ..., F(w_{n-1}, w_n)))`; a singleton word
/// evaluates to its item.
pub fn fold_eval(table: &BinTable, word: &Word) -> Result<usize> {
    fold_slice(table, word.items())
}

/// [`fold_eval`] over a raw slice.
pub fn fold_slice(table: &BinTable, items: &[usize]) -> Result<usize> {
    if items.is_empty() {
        return Err(Error::EmptyWord);
    }
    let chain = table.chain();
    for &x in items {
        chain.check(x)?;
    }
    Ok(table.fold_unchecked(items))
}

/// Number of tuples in `k^n`, saturating.
pub fn tuple_count(k: usize, n: usize) -> u128 {
    (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

/// Calls `f` on every tuple of `{0..k}^n` in lexicographic order until it
/// returns `false`. Returns `false` if stopped early.
pub fn for_each_tuple(k: usize, n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k == 0 {
        return true;
    }
    let mut t = vec![0usize; n];
    loop {
        if !f(&t) {
            return false;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < k {
                break;
            }
            t[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rx3() -> BinTable {
        BinTable::from_rows(&[vec![0, 0, 2], vec![0, 1, 2], vec![0, 2, 2]]).unwrap()
    }

    #[test]
    fn ext_compare_examples() {
        let half = ExtValue::gap_after(1);
        assert_eq!(ext_compare(3, half, 2).unwrap(), Ordering::Less);
        assert_eq!(ext_compare(3, ExtValue::point(1), 1).unwrap(), Ordering::Equal);
        assert_eq!(ext_compare(3, half, 1).unwrap(), Ordering::Greater);
    }

    #[test]
    fn ext_compare_rejects_foreign_values() {
        assert!(ext_compare(3, ExtValue::point(3), 1).is_err());
        assert!(ext_compare(3, ExtValue::gap_after(2), 1).is_err());
        assert!(ext_compare(3, ExtValue::point(1), 3).is_err());
    }

    #[test]
    fn ext_value_parsing() {
        assert_eq!(ExtValue::from_f64(1.5).unwrap(), ExtValue::gap_after(1));
        assert_eq!(ExtValue::from_f64(2.0).unwrap(), ExtValue::point(2));
        assert!(ExtValue::from_f64(0.25).is_err());
        assert!(ExtValue::from_f64(-1.0).is_err());
        assert_eq!(ExtValue::gap_after(1).to_string(), "1.5");
    }

    #[test]
    fn table_apply_examples() {
        let t = rx3();
        assert_eq!(t.apply(0, 2).unwrap(), 2);
        assert_eq!(t.apply(1, 0).unwrap(), 0);
        assert_eq!(t.apply(2, 2).unwrap(), 2);
        assert!(matches!(t.apply(3, 0), Err(Error::OutOfRange { value: 3, k: 3 })));
    }

    #[test]
    fn fold_eval_examples() {
        let t = rx3();
        assert_eq!(fold_eval(&t, &Word::new(vec![0, 1, 2]).unwrap()).unwrap(), 2);
        assert_eq!(fold_eval(&t, &Word::new(vec![2, 1, 0]).unwrap()).unwrap(), 0);
        for x in 0..3 {
            assert_eq!(fold_eval(&t, &Word::new(vec![x]).unwrap()).unwrap(), x);
        }
        assert!(matches!(Word::new(vec![]), Err(Error::EmptyWord)));
        assert!(fold_slice(&t, &[]).is_err());
        assert!(fold_slice(&t, &[0, 5]).is_err());
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(BinTable::from_rows(&[]).is_err());
        assert!(BinTable::from_rows(&[vec![0, 1], vec![0]]).is_err());
        assert!(BinTable::from_rows(&[vec![0, 2], vec![0, 1]]).is_err());
    }

    #[test]
    fn word_parsing() {
        assert_eq!(Word::parse("0, 1,2").unwrap().items(), &[0, 1, 2]);
        assert!(Word::parse("").is_err());
        assert!(Word::parse("1,x").is_err());
    }

    #[test]
    fn tuple_odometer_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_tuple(2, 3, |t| {
            seen.push(t.to_vec());
            true
        });
        assert_eq!(seen.len(), 8);
        assert_eq!(seen[1], vec![0, 0, 1]);
        assert_eq!(seen[7], vec![1, 1, 1]);
    }
}
