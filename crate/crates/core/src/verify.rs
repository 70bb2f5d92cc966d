//! Brute-force checkers for n-associativity, idempotency, monotonicity,
//! neutral elements and quasitriviality of finite operations, on chains and
//! on explicit posets.
//!
//! Every exhaustive loop runs in lexicographic tuple order and reports the
//! first witness it meets, so reports are deterministic.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::domain::{for_each_tuple, tuple_count, BinTable};
use crate::error::{Error, Result};

/// Upper bound on the number of tuples any single exhaustive check visits.
pub const TUPLE_LIMIT: u128 = 10_000_000;

/// A total operation `X^n -> X` on `X = {0, ..., k-1}`.
pub trait Operation {
    fn size(&self) -> usize;
    fn arity(&self) -> usize;
    /// `args.len() == self.arity()` and every arg `< self.size()`.
    fn eval(&self, args: &[usize]) -> usize;
}

impl Operation for BinTable {
    fn size(&self) -> usize {
        BinTable::size(self)
    }

    fn arity(&self) -> usize {
        2
    }

    fn eval(&self, args: &[usize]) -> usize {
        self.get(args[0], args[1])
    }
}

impl<T: Operation + ?Sized> Operation for &T {
    fn size(&self) -> usize {
        (**self).size()
    }

    fn arity(&self) -> usize {
        (**self).arity()
    }

    fn eval(&self, args: &[usize]) -> usize {
        (**self).eval(args)
    }
}

/// The n-ary operation derived from a binary table by right-nested
/// composition of `n - 1` copies.
#[derive(Debug, Clone, Copy)]
pub struct Derived<'a> {
    table: &'a BinTable,
    n: usize,
}

impl<'a> Derived<'a> {
    pub fn new(table: &'a BinTable, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadArity { min: 1, found: n });
        }
        Ok(Derived { table, n })
    }
}

impl Operation for Derived<'_> {
    fn size(&self) -> usize {
        self.table.size()
    }

    fn arity(&self) -> usize {
        self.n
    }

    fn eval(&self, args: &[usize]) -> usize {
        self.table.fold_unchecked(args)
    }
}

/// An operation given by a closure.
pub struct FnOp<F> {
    k: usize,
    n: usize,
    f: F,
}

impl<F: Fn(&[usize]) -> usize> FnOp<F> {
    pub fn new(k: usize, n: usize, f: F) -> Self {
        FnOp { k, n, f }
    }
}

impl<F: Fn(&[usize]) -> usize> Operation for FnOp<F> {
    fn size(&self) -> usize {
        self.k
    }

    fn arity(&self) -> usize {
        self.n
    }

    fn eval(&self, args: &[usize]) -> usize {
        (self.f)(args)
    }
}

/// An n-ary operation stored as a flat table over tuples in lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NaryTable {
    k: usize,
    n: usize,
    values: Vec<u32>,
}

/// Serialized form: `{"k":3,"arity":3,"values":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaryTableFile {
    pub k: usize,
    pub arity: usize,
    pub values: Vec<usize>,
}

impl NaryTable {
    pub fn from_values(k: usize, n: usize, values: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyChain);
        }
        if n == 0 {
            return Err(Error::BadArity { min: 1, found: 0 });
        }
        let expected = tuple_count(k, n);
        if expected != values.len() as u128 {
            return Err(Error::Parse(format!(
                "{}-ary table on {k} elements needs {expected} values, got {}",
                n,
                values.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= k) {
            return Err(Error::OutOfRange { value: v, k });
        }
        Ok(NaryTable { k, n, values: values.into_iter().map(|v| v as u32).collect() })
    }

    /// Tabulates any operation, subject to [`TUPLE_LIMIT`].
    pub fn tabulate(op: &impl Operation) -> Result<Self> {
        let (k, n) = (op.size(), op.arity());
        guard(tuple_count(k, n))?;
        let mut values = Vec::with_capacity(tuple_count(k, n) as usize);
        for_each_tuple(k, n, |t| {
            values.push(op.eval(t) as u32);
            true
        });
        Ok(NaryTable { k, n, values })
    }

    pub fn from_file(file: NaryTableFile) -> Result<Self> {
        Self::from_values(file.k, file.arity, file.values)
    }

    pub fn to_file(&self) -> NaryTableFile {
        NaryTableFile {
            k: self.k,
            arity: self.n,
            values: self.values.iter().map(|&v| v as usize).collect(),
        }
    }

    fn index(&self, args: &[usize]) -> usize {
        args.iter().fold(0, |acc, &a| acc * self.k + a)
    }
}

impl Operation for NaryTable {
    fn size(&self) -> usize {
        self.k
    }

    fn arity(&self) -> usize {
        self.n
    }

    fn eval(&self, args: &[usize]) -> usize {
        self.values[self.index(args)] as usize
    }
}

fn guard(count: u128) -> Result<()> {
    if count > TUPLE_LIMIT {
        Err(Error::GuardExceeded { count, limit: TUPLE_LIMIT })
    } else {
        Ok(())
    }
}

/// An explicit partial order given by its `<=` relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub size: usize,
    pub leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut m = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                m.push(leq(a, b));
            }
        }
        let p = Poset { size, leq: m };
        p.validate()?;
        Ok(p)
    }

    pub fn chain(size: usize) -> Self {
        Poset::new(size, |a, b| a <= b).expect("a chain is a poset")
    }

    pub fn from_file(file: &PosetFile) -> Result<Self> {
        if file.leq.len() != file.size || file.leq.iter().any(|r| r.len() != file.size) {
            return Err(Error::Parse("poset relation must be size x size".into()));
        }
        Poset::new(file.size, |a, b| file.leq[a][b])
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile {
            size: self.size,
            leq: (0..self.size).map(|a| (0..self.size).map(|b| self.leq(a, b)).collect()).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(Error::Parse(format!("poset is not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(Error::Parse(format!("poset is not antisymmetric at ({a}, {b})")));
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        return Err(Error::Parse(format!(
                            "poset is not transitive at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }
}

/// The order used by the monotonicity checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    /// Natural order of indices.
    Chain,
    Poset(Poset),
}

impl Order {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        match self {
            Order::Chain => a <= b,
            Order::Poset(p) => p.leq(a, b),
        }
    }
}

/// A failed instance of n-associativity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssocWitness {
    pub tuple: Vec<usize>,
    /// 1-based offset of the inner application on the right-hand side.
    pub position: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssocReport {
    pub holds: bool,
    pub witness: Option<AssocWitness>,
    pub tuples_checked: u128,
}

/// Checks `F(F(x1..xn), x_{n+1}..) = F(x1..xi, F(x_{i+1}..x_{i+n}), ..)` for
/// every `(2n-1)`-tuple and every `i = 1..n-1`.
pub fn check_n_associative(f: &impl Operation) -> Result<AssocReport> {
    let (k, n) = (f.size(), f.arity());
    if n < 2 {
        return Err(Error::BadArity { min: 2, found: n });
    }
    let total = tuple_count(k, 2 * n - 1);
    guard(total)?;
    let mut witness = None;
    let mut checked = 0u128;
    let mut outer = vec![0usize; n];
    for_each_tuple(k, 2 * n - 1, |t| {
        checked += 1;
        let left = compose_at(f, t, 0, &mut outer);
        for i in 1..n {
            let right = compose_at(f, t, i, &mut outer);
            if right != left {
                witness = Some(AssocWitness { tuple: t.to_vec(), position: i, left, right });
                return false;
            }
        }
        true
    });
    Ok(AssocReport { holds: witness.is_none(), witness, tuples_checked: checked })
}

/// `F(t[..i], F(t[i..i+n]), t[i+n..])`.
fn compose_at(f: &impl Operation, t: &[usize], i: usize, buf: &mut [usize]) -> usize {
    let n = buf.len();
    let inner = f.eval(&t[i..i + n]);
    buf[..i].copy_from_slice(&t[..i]);
    buf[i] = inner;
    buf[i + 1..].copy_from_slice(&t[i + n..]);
    f.eval(buf)
}

/// Binary associativity, first failing triple in index order.
pub fn associativity_witness(t: &BinTable) -> Option<AssocWitness> {
    let k = t.size();
    for x in 0..k {
        for y in 0..k {
            let xy = t.get(x, y);
            for z in 0..k {
                let left = t.get(xy, z);
                let right = t.get(x, t.get(y, z));
                if left != right {
                    return Some(AssocWitness { tuple: vec![x, y, z], position: 1, left, right });
                }
            }
        }
    }
    None
}

pub fn is_associative(t: &BinTable) -> bool {
    associativity_witness(t).is_none()
}

/// First `a` with `F(a, ..., a) != a`, with the value obtained.
pub fn idempotency_witness(f: &impl Operation) -> Option<(usize, usize)> {
    let mut args = vec![0; f.arity()];
    (0..f.size()).find_map(|a| {
        args.fill(a);
        let v = f.eval(&args);
        (v != a).then_some((a, v))
    })
}

pub fn check_idempotent(f: &impl Operation) -> bool {
    idempotency_witness(f).is_none()
}

/// First tuple whose image is not among its entries.
pub fn quasitrivial_witness(f: &impl Operation) -> Result<Option<(Vec<usize>, usize)>> {
    guard(tuple_count(f.size(), f.arity()))?;
    let mut witness = None;
    for_each_tuple(f.size(), f.arity(), |t| {
        let v = f.eval(t);
        if t.contains(&v) {
            true
        } else {
            witness = Some((t.to_vec(), v));
            false
        }
    });
    Ok(witness)
}

pub fn check_quasitrivial(f: &impl Operation) -> Result<bool> {
    Ok(quasitrivial_witness(f)?.is_none())
}

/// All `e` such that placing any `x` in any coordinate, with `e` elsewhere,
/// yields `x`.
pub fn find_neutral_elements(f: &impl Operation) -> Vec<usize> {
    let (k, n) = (f.size(), f.arity());
    let mut args = vec![0; n];
    (0..k)
        .filter(|&e| {
            (0..n).all(|i| {
                (0..k).all(|x| {
                    args.fill(e);
                    args[i] = x;
                    f.eval(&args) == x
                })
            })
        })
        .collect()
}

pub fn is_neutral(f: &impl Operation, e: usize) -> bool {
    e < f.size() && find_neutral_elements(f).contains(&e)
}

/// Direction observed for one coordinate across all contexts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Every section is constant.
    Constant,
    Increasing,
    Decreasing,
    /// Some sections increase and others decrease; still monotone.
    Mixed,
    /// Some section is neither order-preserving nor order-reversing.
    Violated,
}

/// A section that is neither order-preserving nor order-reversing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotoneWitness {
    /// 0-based coordinate.
    pub coordinate: usize,
    /// The full argument tuple with the free coordinate set to 0.
    pub context: Vec<usize>,
    /// `x <= y` with `f(x) </= f(y)`.
    pub breaks_preserving: (usize, usize),
    /// `x <= y` with `f(y) </= f(x)`.
    pub breaks_reversing: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotoneReport {
    pub monotone: bool,
    pub increasing: bool,
    pub directions: Vec<Direction>,
    pub witness: Option<MonotoneWitness>,
}

/// Monotonicity of every unary section of an operation whose outputs live in
/// an arbitrary ordered codomain.
pub fn monotone_sections<V>(
    k: usize,
    n: usize,
    dom_leq: impl Fn(usize, usize) -> bool,
    eval: impl Fn(&[usize]) -> V,
    out_leq: impl Fn(&V, &V) -> bool,
) -> Result<MonotoneReport> {
    guard(tuple_count(k, n).saturating_mul(n as u128))?;
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|x| (0..k).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && dom_leq(x, y))
        .collect();
    let mut directions = Vec::with_capacity(n);
    let mut witness = None;
    let mut section = Vec::with_capacity(k);
    let mut args = vec![0; n];
    for i in 0..n {
        let (mut up, mut down) = (false, false);
        let mut violated = false;
        for_each_tuple(k, n - 1, |ctx| {
            args[..i].copy_from_slice(&ctx[..i]);
            args[i + 1..].copy_from_slice(&ctx[i..]);
            section.clear();
            for x in 0..k {
                args[i] = x;
                section.push(eval(&args));
            }
            let no_up = pairs.iter().find(|&&(x, y)| !out_leq(&section[x], &section[y]));
            let no_down = pairs.iter().find(|&&(x, y)| !out_leq(&section[y], &section[x]));
            match (no_up, no_down) {
                (None, None) => {}
                (None, Some(_)) => up = true,
                (Some(_), None) => down = true,
                (Some(&p), Some(&q)) => {
                    violated = true;
                    if witness.is_none() {
                        args[i] = 0;
                        witness = Some(MonotoneWitness {
                            coordinate: i,
                            context: args.clone(),
                            breaks_preserving: p,
                            breaks_reversing: q,
                        });
                    }
                }
            }
            true
        });
        directions.push(match (violated, up, down) {
            (true, _, _) => Direction::Violated,
            (false, false, false) => Direction::Constant,
            (false, true, false) => Direction::Increasing,
            (false, false, true) => Direction::Decreasing,
            (false, true, true) => Direction::Mixed,
        });
    }
    let monotone = witness.is_none();
    let increasing = directions
        .iter()
        .all(|d| matches!(d, Direction::Constant | Direction::Increasing));
    Ok(MonotoneReport { monotone, increasing, directions, witness })
}

/// Each section `x -> F(.., x, ..)` must be order-preserving or
/// order-reversing; the direction may depend on the fixed context. On posets
/// only comparable pairs constrain.
pub fn check_monotone(f: &impl Operation, order: &Order) -> Result<MonotoneReport> {
    if let Order::Poset(p) = order {
        if p.size() != f.size() {
            return Err(Error::ChainMismatch { expected: f.size(), found: p.size() });
        }
    }
    monotone_sections(
        f.size(),
        f.arity(),
        |a, b| order.leq(a, b),
        |args| f.eval(args),
        |&a, &b| order.leq(a, b),
    )
}

pub fn check_monotone_increasing(f: &impl Operation, order: &Order) -> Result<bool> {
    Ok(check_monotone(f, order)?.increasing)
}

/// All `(x, y)` with `T(x, y) != T(y, x)`.
pub fn noncommutative_pairs(t: &BinTable) -> BTreeSet<(usize, usize)> {
    let k = t.size();
    (0..k)
        .flat_map(|x| (0..k).map(move |y| (x, y)))
        .filter(|&(x, y)| t.get(x, y) != t.get(y, x))
        .collect()
}

pub fn is_commutative(t: &BinTable) -> bool {
    let k = t.size();
    (0..k).all(|x| (x + 1..k).all(|y| t.get(x, y) == t.get(y, x)))
}

/// Unique solvability in every coordinate: each section is a bijection.
/// Returns the first `(coordinate, context)` whose section is not.
pub fn nary_group_witness(f: &impl Operation) -> Result<Option<(usize, Vec<usize>)>> {
    let (k, n) = (f.size(), f.arity());
    guard(tuple_count(k, n).saturating_mul(n as u128))?;
    let mut args = vec![0; n];
    let mut hit = vec![false; k];
    for i in 0..n {
        let mut witness = None;
        for_each_tuple(k, n - 1, |ctx| {
            args[..i].copy_from_slice(&ctx[..i]);
            args[i + 1..].copy_from_slice(&ctx[i..]);
            hit.fill(false);
            for x in 0..k {
                args[i] = x;
                hit[f.eval(&args)] = true;
            }
            if hit.iter().all(|&h| h) {
                true
            } else {
                args[i] = 0;
                witness = Some((i, args.clone()));
                false
            }
        });
        if witness.is_some() {
            return Ok(witness);
        }
    }
    Ok(None)
}

/// Bundle of the axiom checks for a binary table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub associative: Option<AssocWitness>,
    pub idempotent: Option<(usize, usize)>,
    pub monotone: MonotoneReport,
    pub neutral_elements: Vec<usize>,
    pub quasitrivial: Option<(Vec<usize>, usize)>,
    pub in_class: bool,
}

impl ClassReport {
    pub fn is_associative(&self) -> bool {
        self.associative.is_none()
    }

    pub fn is_idempotent(&self) -> bool {
        self.idempotent.is_none()
    }

    pub fn is_quasitrivial(&self) -> bool {
        self.quasitrivial.is_none()
    }

    pub fn neutral(&self) -> Option<usize> {
        self.neutral_elements.first().copied()
    }

    /// Human readable reason for exclusion, if any.
    pub fn failure(&self) -> Option<String> {
        if let Some(w) = &self.associative {
            return Some(format!("not associative at {:?}: {} vs {}", w.tuple, w.left, w.right));
        }
        if let Some((a, v)) = self.idempotent {
            return Some(format!("not idempotent: F({a}, {a}) = {v}"));
        }
        if let Some(w) = &self.monotone.witness {
            return Some(format!("not monotone in coordinate {} at {:?}", w.coordinate, w.context));
        }
        if self.neutral_elements.is_empty() {
            return Some("no neutral element".into());
        }
        None
    }
}

/// Associative, idempotent, monotone (on the chain) and with a neutral
/// element. Monotone-increasing and quasitriviality are reported alongside.
pub fn class_check(t: &BinTable) -> ClassReport {
    class_check_with_order(t, &Order::Chain).expect("chain order always fits")
}

pub fn class_check_with_order(t: &BinTable, order: &Order) -> Result<ClassReport> {
    let associative = associativity_witness(t);
    let idempotent = idempotency_witness(t);
    let monotone = check_monotone(t, order)?;
    let neutral_elements = find_neutral_elements(t);
    let quasitrivial = quasitrivial_witness(t)?;
    let in_class = associative.is_none()
        && idempotent.is_none()
        && monotone.monotone
        && !neutral_elements.is_empty();
    Ok(ClassReport { associative, idempotent, monotone, neutral_elements, quasitrivial, in_class })
}

/// Fast membership test used by the enumerators; agrees with
/// `class_check(t).in_class`.
pub fn in_class(t: &BinTable) -> bool {
    let k = t.size();
    (0..k).all(|x| t.get(x, x) == x)
        && is_associative(t)
        && !find_neutral_elements(t).is_empty()
        && monotone_binary(t)
}

fn monotone_binary(t: &BinTable) -> bool {
    let k = t.size();
    let monotone_seq = |s: &mut dyn Iterator<Item = usize>| {
        let (mut up, mut down) = (true, true);
        let mut prev = None;
        for v in s {
            if let Some(p) = prev {
                up &= p <= v;
                down &= p >= v;
            }
            prev = Some(v);
        }
        up || down
    };
    (0..k).all(|x| monotone_seq(&mut (0..k).map(|y| t.get(x, y))))
        && (0..k).all(|y| monotone_seq(&mut (0..k).map(|x| t.get(x, y))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rx3() -> BinTable {
        BinTable::from_rows(&[vec![0, 0, 2], vec![0, 1, 2], vec![0, 2, 2]]).unwrap()
    }

    /// `x1 - x2 + x3` on Z5.
    fn g3_mod5() -> FnOp<impl Fn(&[usize]) -> usize> {
        FnOp::new(5, 3, |a: &[usize]| (a[0] + 5 - a[1] + a[2]) % 5)
    }

    /// `-x1 + x2 - x3` on Z5.
    fn g3_mod5_negated() -> FnOp<impl Fn(&[usize]) -> usize> {
        FnOp::new(5, 3, |a: &[usize]| (10 - a[0] + a[1] - a[2]) % 5)
    }

    #[test]
    fn associativity_examples() {
        assert!(check_n_associative(&rx3()).unwrap().holds);
        let d3 = rx3();
        let d3 = Derived::new(&d3, 3).unwrap();
        let r = check_n_associative(&d3).unwrap();
        assert!(r.holds);
        assert_eq!(r.tuples_checked, 243);
        assert!(check_n_associative(&g3_mod5()).unwrap().holds);
        let r = check_n_associative(&g3_mod5_negated()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap().tuple, vec![0, 0, 0, 0, 1]);
    }

    #[test]
    fn associativity_guard() {
        let big = FnOp::new(30, 3, |a: &[usize]| a[0]);
        assert!(matches!(check_n_associative(&big), Err(Error::GuardExceeded { .. })));
        let unary = FnOp::new(3, 1, |a: &[usize]| a[0]);
        assert!(matches!(check_n_associative(&unary), Err(Error::BadArity { .. })));
    }

    #[test]
    fn generic_and_binary_associativity_agree() {
        let nand = BinTable::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
        let t = nand;
        let w = associativity_witness(&t).unwrap();
        assert_eq!(w.tuple, vec![0, 0, 1]);
        let r = check_n_associative(&t).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap().tuple, w.tuple);
    }

    #[test]
    fn idempotency_examples() {
        assert!(check_idempotent(&BinTable::min(3).unwrap()));
        assert_eq!(idempotency_witness(&g3_mod5_negated()), Some((1, 4)));
        assert!(check_idempotent(&g3_mod5()));
    }

    #[test]
    fn monotone_examples() {
        let r = check_monotone(&rx3(), &Order::Chain).unwrap();
        assert!(r.monotone && r.increasing);

        let diag = BinTable::from_fn(3, |x, y| if x == y { x } else { 0 }).unwrap();
        let r = check_monotone(&diag, &Order::Chain).unwrap();
        assert!(!r.monotone);
        assert_eq!(r.directions[0], Direction::Violated);

        assert!(check_monotone_increasing(&BinTable::max(3).unwrap(), &Order::Chain).unwrap());
    }

    #[test]
    fn alternating_window_is_monotone_with_mixed_signs() {
        let r = monotone_sections(
            11,
            3,
            |a, b| a <= b,
            |t: &[usize]| -(t[0] as i64 - 5) + (t[1] as i64 - 5) - (t[2] as i64 - 5),
            |a, b| a <= b,
        )
        .unwrap();
        assert!(r.monotone);
        assert!(!r.increasing);
        assert_eq!(r.directions, vec![Direction::Decreasing, Direction::Increasing, Direction::Decreasing]);
    }

    #[test]
    fn direction_may_change_with_context() {
        // Increasing in y when x = 0, decreasing when x = 1.
        let t = BinTable::from_fn(2, |x, y| if x == 0 { y } else { 1 - y }).unwrap();
        let r = check_monotone(&t, &Order::Chain).unwrap();
        assert!(r.monotone);
        assert_eq!(r.directions[1], Direction::Mixed);
        assert!(!r.increasing);
    }

    #[test]
    fn neutral_examples() {
        assert_eq!(find_neutral_elements(&BinTable::min(3).unwrap()), vec![2]);
        assert_eq!(find_neutral_elements(&rx3()), vec![1]);
        assert!(find_neutral_elements(&g3_mod5()).is_empty());
        assert!(find_neutral_elements(&g3_mod5_negated()).is_empty());
    }

    #[test]
    fn quasitrivial_examples() {
        let t = rx3();
        assert!(check_quasitrivial(&Derived::new(&t, 4).unwrap()).unwrap());
        assert_eq!(quasitrivial_witness(&g3_mod5_negated()).unwrap(), Some((vec![0, 0, 1], 4)));
        assert_eq!(quasitrivial_witness(&g3_mod5()).unwrap(), Some((vec![0, 1, 0], 4)));
        assert!(check_quasitrivial(&BinTable::min(3).unwrap()).unwrap());
    }

    #[test]
    fn noncommutative_examples() {
        assert_eq!(noncommutative_pairs(&rx3()), [(0, 2), (2, 0)].into_iter().collect());
        assert!(noncommutative_pairs(&BinTable::min(3).unwrap()).is_empty());
        assert!(noncommutative_pairs(&BinTable::max(3).unwrap()).is_empty());
    }

    #[test]
    fn class_check_examples() {
        let r = class_check(&rx3());
        assert!(r.in_class, "{:?}", r.failure());
        assert_eq!(r.neutral(), Some(1));

        let proj = BinTable::from_fn(3, |x, _| x).unwrap();
        let r = class_check(&proj);
        assert!(!r.in_class);
        assert!(r.neutral_elements.is_empty());
        assert!(r.is_associative() && r.is_idempotent() && r.monotone.monotone);

        let mut bad = rx3();
        bad.set(0, 1, 2).unwrap();
        let r = class_check(&bad);
        assert!(!r.in_class);
        assert!(!r.is_associative() || !r.monotone.monotone);
    }

    #[test]
    fn fast_membership_agrees_with_report() {
        let mut count = 0;
        for_each_tuple(3, 9, |entries| {
            let t = BinTable::from_fn(3, |x, y| entries[3 * x + y]).unwrap();
            assert_eq!(in_class(&t), class_check(&t).in_class, "{:?}", t.rows());
            count += 1;
            count < 4000
        });
    }

    #[test]
    fn poset_validation() {
        assert!(Poset::new(2, |a, b| a == b || (a == 0 && b == 1)).is_ok());
        assert!(Poset::new(2, |_, _| true).is_err());
        assert!(Poset::new(2, |a, b| a != b).is_err());
        assert!(Poset::new(3, |a, b| a == b || (a, b) == (0, 1) || (a, b) == (1, 2)).is_err());
    }

    #[test]
    fn poset_monotone_ignores_incomparable_pairs() {
        // 0 below 1 and 2, which are incomparable.
        let p = Poset::new(3, |a, b| a == b || a == 0).unwrap();
        let swap = BinTable::from_fn(3, |x, y| match (x, y) {
            (0, _) | (_, 0) => 0,
            (a, b) if a == b => a,
            _ => 0,
        })
        .unwrap();
        assert!(check_monotone(&swap, &Order::Poset(p.clone())).unwrap().monotone);
        assert!(!check_monotone(&swap, &Order::Chain).unwrap().monotone);
        let bad = BinTable::from_fn(3, |x, y| if x == 0 { [1, 2, 0][y] } else { x }).unwrap();
        assert!(!check_monotone(&bad, &Order::Poset(p)).unwrap().monotone);
    }

    #[test]
    fn nary_table_round_trip() {
        let t = rx3();
        let d = Derived::new(&t, 3).unwrap();
        let tab = NaryTable::tabulate(&d).unwrap();
        assert_eq!(tab.eval(&[0, 1, 2]), 2);
        assert_eq!(NaryTable::from_file(tab.to_file()).unwrap(), tab);
        assert!(NaryTable::from_values(3, 2, vec![0; 8]).is_err());
        assert!(NaryTable::from_values(2, 2, vec![0, 0, 0, 2]).is_err());
    }

    #[test]
    fn nary_group_detection() {
        assert_eq!(nary_group_witness(&g3_mod5()).unwrap(), None);
        assert!(nary_group_witness(&rx3()).unwrap().is_some());
    }
}
